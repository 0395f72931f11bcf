#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qhnf;
using namespace qhnf::testing;

namespace {

// Independent solve of grad(C).F = K C with C = y - c x^2 + sum_{j>2} c_j x^j, K = sum K_j, degree by degree,
// by assembling the affine map of the unknowns numerically from the defining identity.
std::pair<Poly2, Poly2> oracle_curve(const PlanarVF& F, const Rat& c, int N) {
    const int n = 1;
    Poly2 C = Y() - X(2) * c;
    Poly2 K = directional(C, vf_component(F, kType12, n).planar());
    {
        // leading cofactor: grad(C_{n+1}).F_n = K_n C_{n+1}
        Poly2 lead = directional(C, vf_component(F, kType12, n).planar());
        auto basis = qh_basis(n, kType12);
        std::vector<Vec> cols;
        auto cod = qh_basis(2 * n + 1, kType12);
        for (Monomial m : basis) cols.push_back(coordinates(Poly2::monomial(m.a, m.b) * C, cod));
        auto sol = solve(Matrix::from_columns(cols, cod.size()), coordinates(lead, cod));
        REQUIRE(sol.has_value());
        K = from_coordinates(*sol, basis);
    }
    for (int j = n + 2; j <= N; ++j) {
        auto kbasis = qh_basis(j - 1, kType12);
        auto cod = qh_basis(j + n, kType12);
        auto residual = [&](const Poly2& Cj, const Poly2& Kj) {
            Poly2 CC = C + Cj, KK = K + Kj;
            return (directional(CC, F) - KK * CC).component(kType12, j + n);
        };
        Vec base = coordinates(residual({}, {}), cod);
        std::vector<Vec> cols;
        auto column = [&](const Poly2& Cj, const Poly2& Kj) {
            Vec v = coordinates(residual(Cj, Kj), cod);
            for (std::size_t r = 0; r < v.size(); ++r) v[r] -= base[r];
            cols.push_back(v);
        };
        column(X(j), {});
        for (Monomial m : kbasis) column({}, Poly2::monomial(m.a, m.b));
        Matrix A = Matrix::from_columns(cols, cod.size());
        CHECK(rank(A) == A.cols());
        Vec rhs = base;
        for (auto& v : rhs) v = -v;
        auto sol = solve(A, rhs);
        REQUIRE(sol.has_value());
        C += X(j) * (*sol)[0];
        for (std::size_t i = 0; i < kbasis.size(); ++i) K += Poly2::monomial(kbasis[i].a, kbasis[i].b) * (*sol)[i + 1];
    }
    return {C, K};
}

QHPoly I6() { return family_integral(); }

}  // namespace

TEST_CASE("curves of the bare leading part") {
    auto r = formal_invariant_curves(family_leading().planar(), kType12, 8);
    REQUIRE(r.curves.size() == 2);
    CHECK(r.curves[0].curve() == Y() - X(2));
    CHECK(r.curves[0].cofactor() == mono(1, 0, Rat(-8, 3)));
    CHECK(r.curves[1].curve() == Y() + X(2));
    CHECK(r.curves[1].cofactor() == mono(1, 0, Rat(4, 3)));
    CHECK(directional(Y() - X(2), family_leading().planar()) == mono(1, 0, Rat(-8, 3)) * (Y() - X(2)));
}

TEST_CASE("curves of the integrable family") {
    PlanarVF F = family(0, 3, -3);
    auto r = formal_invariant_curves(F, kType12, 8);
    REQUIRE(r.curves.size() == 2);
    CHECK(r.checked_through >= 9);
    for (const auto& c : r.curves) CHECK(curve_residual(F, c, kType12, 9).is_zero());
}

TEST_CASE("first integrals") {
    auto bare = truncated_first_integral(family_leading().planar(), I6(), 12);
    CHECK(bare.complete);
    CHECK(bare.integral == I6().poly);

    auto integrable = truncated_first_integral(family(0, 3, -3), I6(), 12);
    CHECK(integrable.complete);
    for (const auto& d : integrable.degrees) CHECK(d.solvable);
    CHECK(directional(integrable.integral, family(0, 3, -3)).truncated(kType12, 13).is_zero());

    auto generic = truncated_first_integral(family(1, 0, 0), I6(), 12);
    CHECK_FALSE(generic.complete);
    REQUIRE_FALSE(generic.degrees.empty());
    CHECK_FALSE(generic.degrees.back().solvable);
    CHECK(generic.degrees.back().equation_degree == 8);
    CHECK_FALSE(generic.degrees.back().obstruction.is_zero());
}

TEST_CASE("darboux certificates") {
    std::vector<std::pair<Poly2, int>> factors = {{Y() - X(2), 1}, {Y() + X(2), 2}};
    for (Rat b2 : {Rat(1), Rat(-2), Rat(5, 3)})
        CHECK(check_darboux_exponential(family(0, -b2, b2), factors, X() * (-3 * b2)).is_zero());
    CHECK(check_darboux_exponential(family_leading().planar(), factors, {}).is_zero());
    CHECK_FALSE(check_darboux_exponential(family_leading().planar(), {{Y() - X(2), 2}, {Y() + X(2), 2}}, {}).is_zero());
    CHECK_FALSE(check_darboux_exponential(family(1, -1, 1), factors, X() * Rat(-3)).is_zero());
}

TEST_CASE("lie symmetry checks") {
    PlanarVF Fn = family_leading().planar();
    PlanarVF D0 = d0_field(kType12).planar();
    auto ok = check_lie_symmetry(Fn, D0, Poly2(1), kType12, 10);
    CHECK(ok.residual.is_zero());
    CHECK(ok.valid);
    CHECK(ok.linear_part_is_euler);
    CHECK(ok.leading_multiplier_matches);

    auto self = check_lie_symmetry(Fn, Fn, Poly2(), kType12, 10);
    CHECK(self.residual.is_zero());
    CHECK(self.valid);
    CHECK_FALSE(self.linear_part_is_euler);
    CHECK_FALSE(self.leading_multiplier_matches);

    auto wrong = check_lie_symmetry(Fn, {Y() + X(2), X() * Y()}, Poly2(1), kType12, 10);
    CHECK_FALSE(wrong.residual.is_zero());
    CHECK_FALSE(wrong.valid);
}

TEST_CASE("property: curve identity and uniqueness") {
    Gen gen(71);
    for (int trial = 0; trial < 5; ++trial) {
        PlanarVF F = family(gen.rat(), gen.rat(), gen.rat());
        F.Q += mono(2, 1, gen.rat());
        const int N = 8;
        auto r = formal_invariant_curves(F, kType12, N);
        REQUIRE(r.curves.size() == 2);
        Rat branch[] = {1, -1};
        for (std::size_t b = 0; b < 2; ++b) {
            const auto& c = r.curves[b];
            CHECK(curve_residual(F, c, kType12, N + 1).is_zero());
            auto [C, K] = oracle_curve(F, branch[b], N);
            CHECK(c.curve() == C);
            CHECK(c.cofactor() == K.truncated(kType12, N - 1));
        }
    }
}

TEST_CASE("property: integral and normal form agree") {
    std::vector<std::array<Rat, 3>> points = {{0, 3, -3}, {0, -1, 1}, {1, 0, 0}, {0, 1, 0}, {1, Rat(-58, 27), 0}};
    for (const auto& p : points) {
        PlanarVF F = family(p[0], p[1], p[2]);
        auto nf = orbital_normal_form(F, kType12, 12);
        auto ti = truncated_first_integral(F, I6(), 12 + 6);
        if (nf.verdict.kind == Verdict::Kind::NoObstructionUpTo) {
            CHECK(ti.complete);
        } else {
            REQUIRE_FALSE(ti.complete);
            CHECK(ti.degrees.back().equation_degree == 6 + nf.verdict.degree);
        }
    }
}
