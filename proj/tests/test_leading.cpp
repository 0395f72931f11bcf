#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <numeric>

using namespace qhnf;
using namespace qhnf::testing;

namespace {

PlanarVF b_template(int n, const Rat& d, int sign) {
    return {Y() + mono(n + 1, 0, d), mono(n, 1, d * (n + 1)) + mono(2 * n + 1, 0, Rat(sign * (n + 1)))};
}

PreformResult classify(const PlanarVF& F) { return classify_preform(F); }

QHVF leading_of(const PreformResult& p) { return vf_component(p.field, p.type, p.r); }

Splitting split_of(const PlanarVF& F) { return split_conservative_dissipative(leading_of(classify(F))); }

}  // namespace

TEST_CASE("hom reduction") {
    auto h = hom_reduce(family_h());
    CHECK(h.x_power == 0);
    CHECK(h.y_power == 0);
    CHECK(h.f_hom == (X(2) - Y(2)) / Rat(2));

    auto m = hom_reduce(QHPoly::make(X(3) * Y(), 4, {1, 1}));
    CHECK(m.x_power == 3);
    CHECK(m.y_power == 1);
    CHECK(m.f_hom == Poly2(1));

    auto mu = hom_reduce(QHPoly::make(mono(1, 0, Rat(-1, 3)), 1, kType12));
    CHECK(mu.x_power == 1);
    CHECK(mu.y_power == 0);
    CHECK(mu.f_hom == Poly2(Rat(-1, 3)));

    CHECK_THROWS_AS(hom_reduce(QHPoly::zero(3, kType12)), Error);
}

TEST_CASE("multiple factor obstruction") {
    QHPoly dx = QHPoly::make(mono(1, 0, Rat(1, 2)), 1, kType12);
    CHECK(multiple_factor_obstruction(QHPoly::make(-Y(2) / Rat(2), 4, kType12), dx));
    CHECK_FALSE(multiple_factor_obstruction(family_h(), dx));
    CHECK_FALSE(multiple_factor_obstruction(QHPoly::make(-Y(2) / Rat(2), 4, kType12), QHPoly::zero(1, kType12)));
}

TEST_CASE("m1 and m2") {
    CHECK(find_m1_m2(Rat(-1, 3)) == std::pair{1, 2});
    CHECK(find_m1_m2(Rat(0)) == std::pair{1, 1});
    CHECK_THROWS_AS(find_m1_m2(Rat(3)), Error);
    CHECK_THROWS_AS(find_m1_m2(Rat(1)), Error);
}

TEST_CASE("residue conditions") {
    auto b4 = residue_conditions_check(split_of(b_template(1, Rat(-1, 3), 1)), 1);
    REQUIRE(b4.has_value());
    CHECK(b4->root_exponents == std::vector<int>{1, 2});
    CHECK(b4->M0 == 6);
    CHECK(b4->integral == family_integral().poly);

    for (Rat d : {Rat(1, 3), Rat(-1, 2), Rat(2, 7)}) CHECK_FALSE(residue_conditions_check(split_of(b_template(1, d, -1)), 1));

    Splitting hamiltonian{family_h(), QHPoly::zero(1, kType12)};
    auto ham = residue_conditions_check(hamiltonian, 1);
    REQUIRE(ham.has_value());
    CHECK(ham->integral == family_h().poly * Rat(-2));
    CHECK(directional(ham->integral, hamiltonian_field(family_h()).planar()).is_zero());
}

TEST_CASE("leading verdicts") {
    auto p = classify(family(0, 0, 0));
    auto v = leading_verdict(leading_of(p), p);
    CHECK(v.integrable);
    CHECK(v.reason == LeadingReason::CyclicIntegral);
    CHECK(v.M == 6);
    CHECK(v.m1 == 1);
    CHECK(v.m2 == 2);
    REQUIRE(v.integral.has_value());
    CHECK(v.integral->poly == family_integral().poly);

    PlanarVF b3{Y() + mono(2, 0, Rat(1, 2)), mono(1, 1, Rat(1))};
    auto p3 = classify(b3);
    REQUIRE(p3.kind == PreformCase::B3);
    auto v3 = leading_verdict(leading_of(p3), p3);
    CHECK_FALSE(v3.integrable);
    CHECK(v3.reason == LeadingReason::MultipleFactorObstruction);

    auto p1 = classify({Y(), X(4)});
    REQUIRE(p1.kind == PreformCase::B1);
    CHECK(p1.n == 2);
    auto v1 = leading_verdict(leading_of(p1), p1);
    CHECK(v1.integrable);
    REQUIRE(v1.integral.has_value());
    CHECK(v1.integral->poly == X(5) * Rat(2) - Y(2) * Rat(5));

    auto p2 = classify(b_template(1, 0, -1));
    auto v2 = leading_verdict(leading_of(p2), p2);
    CHECK(v2.integrable);
    REQUIRE(v2.integral.has_value());
    CHECK(v2.integral->poly == X(4) + Y(2));

    auto p4 = classify(b_template(2, 0, 1));
    auto v4 = leading_verdict(leading_of(p4), p4);
    CHECK(v4.integrable);
    REQUIRE(v4.integral.has_value());
    CHECK(v4.integral->poly == Y(2) - X(6));

    auto pbig = classify(b_template(1, Rat(3, 2), 1));
    CHECK_FALSE(leading_verdict(leading_of(pbig), pbig).integrable);

    auto pb2 = classify(b_template(1, Rat(1, 4), -1));
    CHECK_FALSE(leading_verdict(leading_of(pb2), pb2).integrable);
}

TEST_CASE("property: integrals are first integrals") {
    Gen gen(41);
    for (int trial = 0; trial < 30; ++trial) {
        int n = gen.uniform(1, 3);
        int m1 = gen.uniform(1, 6), m2 = gen.uniform(1, 6);
        if (std::gcd(m1, m2) != 1) continue;
        Rat d = frac(m1 - m2, m1 + m2);
        auto p = classify(b_template(n, d, 1));
        QHVF lead = leading_of(p);
        auto v = leading_verdict(lead, p);
        REQUIRE(v.integrable);
        REQUIRE(v.integral.has_value());
        CHECK(directional(v.integral->poly, lead.planar()).is_zero());
        CHECK(v.M == (n + 1) * (m1 + m2));
    }
}

TEST_CASE("property: m1 m2 against enumeration") {
    for (int v = 1; v <= 30; ++v)
        for (int u = -v + 1; u < v; ++u) {
            if (std::gcd(u, v) != 1) continue;
            Rat d = frac(u, v);
            auto [m1, m2] = find_m1_m2(d);
            CHECK(std::gcd(m1, m2) == 1);
            CHECK(frac(m1 - m2, m1 + m2) == d);
            std::optional<std::pair<int, int>> brute;
            for (int s = 2; s <= 2 * v && !brute; ++s)
                for (int a = 1; a < s; ++a)
                    if (std::gcd(a, s - a) == 1 && frac(2 * a - s, s) == d) {
                        brute = std::pair{a, s - a};
                        break;
                    }
            CHECK(brute == std::pair{m1, m2});
        }
    for (int s = 2; s <= 100; ++s)
        for (int a = 1; a < s; ++a) CHECK(abs(frac(2 * a - s, s)) < 1);
}

TEST_CASE("property: residue route agrees with m1 m2") {
    Gen gen(42);
    for (int trial = 0; trial < 20; ++trial) {
        int v = gen.uniform(2, 12), u = gen.uniform(-v + 1, v - 1);
        Rat d = frac(u, v);
        auto split = split_of(b_template(1, d, 1));
        auto residue = residue_conditions_check(split, 1);
        REQUIRE(residue.has_value());
        auto [m1, m2] = find_m1_m2(d);
        REQUIRE(residue->root_exponents.size() == 2);
        CHECK(residue->root_exponents[0] * m2 == residue->root_exponents[1] * m1);
    }
}

TEST_CASE("property: the cyclic integral is primitive") {
    for (auto [n, m1, m2] : std::vector<std::array<int, 3>>{{1, 1, 2}, {1, 2, 3}, {2, 1, 2}, {1, 3, 1}}) {
        Rat d = frac(m1 - m2, m1 + m2);
        auto p = classify(b_template(n, d, 1));
        QHVF lead = leading_of(p);
        int M = (n + 1) * (m1 + m2);
        for (int j = 1; j < M; ++j) {
            LinMap ell = op_ell(j + n, lead);
            CHECK(subspace_analysis(ell).kernel.dim() == 0);
        }
        CHECK(subspace_analysis(op_ell(M + n, lead)).kernel.dim() == 1);
    }
}
