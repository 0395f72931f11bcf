#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qhnf;
using namespace qhnf::testing;

namespace {

QHVF b4_template(int n, const Rat& d) {
    return QHVF::make(Y() + mono(n + 1, 0, d), mono(2 * n + 1, 0, Rat(n + 1)) + mono(n, 1, d * (n + 1)), n,
                      {1, n + 1});
}

SubspaceAnalysis family_analysis(int j) {
    return subspace_analysis(op_ell(j, family_leading()), cyclic_preference(j, family_h(), family_integral()));
}

void check_rank_nullity(const LinMap& L) {
    auto a = subspace_analysis(L);
    CHECK(a.kernel.dim() + a.range.dim() == L.domain.size());
    CHECK(a.range.dim() + a.corange.dim() == L.codomain.size());
}

}  // namespace

TEST_CASE("ell on the family") {
    QHVF Fn = family_leading();
    LinMap l3 = op_ell(3, Fn);
    for (auto [alpha, beta] : std::vector<std::pair<Rat, Rat>>{{1, 0}, {0, 1}, {Rat(2, 7), Rat(-5, 3)}}) {
        Poly2 expected = mono(3, 0, Rat(-2, 3) * (alpha - 3 * beta)) + mono(1, 1, Rat(2, 3) * (3 * alpha - beta));
        CHECK(l3.apply(X(2) * alpha + Y() * beta) == expected);
    }
    CHECK(op_ell(1, Fn).apply(Poly2(1)).is_zero());
    CHECK(op_ell(2, Fn).apply(X()) == Y() - X(2) / Rat(3));
}

TEST_CASE("coranges of the family") {
    std::vector<std::vector<Poly2>> expected = {{X()}, {X(2)}, {}, {family_h().poly}, {}, {family_integral().poly}};
    std::vector<std::string> labels = {"x", "x^2", "", "h", "", "I"};
    for (int j = 1; j <= 6; ++j) {
        auto a = family_analysis(j);
        CHECK(a.corange.elements == expected[j - 1]);
        if (!expected[j - 1].empty()) {
            REQUIRE(a.corange_patterns.front().has_value());
            CHECK(a.corange_patterns.front()->label() == labels[j - 1]);
        }
        SubspaceBasis listed{j, kType12, expected[j - 1]};
        CHECK(is_complement(a.range, listed));
    }
}

TEST_CASE("degenerate maps") {
    LinMap zero = op_ell(5, QHVF::zero(1, kType12));
    auto z = subspace_analysis(zero);
    CHECK(z.kernel.dim() == zero.domain.size());
    CHECK(z.corange.dim() == zero.codomain.size());
    CHECK(z.range.dim() == 0);

    LinMap scale = op_delta(6, QHPoly::make(Poly2(Rat(3)), 0, kType12));
    auto s = subspace_analysis(scale);
    CHECK(s.kernel.dim() == 0);
    CHECK(s.corange.dim() == 0);
}

TEST_CASE("ell c on the triangular bases") {
    for (int n = 1; n <= 2; ++n) {
        QHType t{1, n + 1};
        Rat d(-1, 3);
        QHVF Fn = b4_template(n, d);
        Splitting split = split_conservative_dissipative(Fn);
        for (int k = 1; k <= 6; ++k) {
            Poly2 branch = Y() - X(n + 1);
            SubspaceBasis dom{k + n + 2, t, {X(k + n + 2), X(k + 1) * branch}};
            SubspaceBasis cod{k + 2 * (n + 1), t, {X(k + 2 * (n + 1)), X(k + n + 1) * branch}};
            LinMap lc = op_ell_c(k, Fn, split, dom, cod);
            Rat scale = frac(k * (k + n + 2), k + 2 * (n + 1));
            Rat q = frac(2 * (n + 1), k);
            CHECK(lc.matrix.at(0, 0) == scale * (d + 1 + q));
            CHECK(lc.matrix.at(0, 1) == 0);
            CHECK(lc.matrix.at(1, 0) == scale * (1 + q));
            CHECK(lc.matrix.at(1, 1) == scale * (d - 1 - q));
        }
    }
    QHVF Fn = b4_template(1, Rat(-1, 3));
    Splitting split = split_conservative_dissipative(Fn);
    SubspaceBasis bad{6, kType12, {split.h.poly * X(2), X(6)}};
    CHECK_THROWS_AS(op_ell_c(3, Fn, split, delta_complement(split.h, 1, 3), bad), Error);
}

TEST_CASE("ell c small divisor") {
    // |d| = 1 + 2(n+1)/k with n = 1, k = 2
    QHVF Fn = b4_template(1, Rat(3));
    Splitting split = split_conservative_dissipative(Fn);
    LinMap lc = op_ell_c(2, Fn, split, delta_complement(split.h, 1, 2), delta_complement(split.h, 1, 3));
    auto a = subspace_analysis(lc);
    CHECK(a.kernel.dim() == 1);
    CHECK(a.corange.dim() == 1);
}

TEST_CASE("delta and ell tilde") {
    for (int n = 1; n <= 2; ++n) {
        Rat d(1, 5);
        QHVF Fn = b4_template(n, d);
        QHType t = Fn.type;
        QHPoly f = QHPoly::make(Y() - X(n + 1), n + 1, t);
        QHPoly Kn = QHPoly::make(mono(n, 0, (d - 1) * (n + 1)), n, t);
        CHECK(directional(f, Fn).poly == Kn.poly * f.poly);
        for (int k = 1; k <= 20; ++k) {
            CHECK(subspace_analysis(op_delta(k, f)).kernel.dim() == 0);
            LinMap lt = op_ell_tilde(k, Fn, Kn);
            Poly2 image = lt.apply(X(k));
            Rat c = (Rat(k - n - 1) * d + (n + 1)) / k;
            CHECK(image == (X(k - 1) * (Y() + mono(n + 1, 0, c))) * Rat(k));
            LinMap dl = op_delta(n + k, f);
            std::vector<Vec> span;
            for (std::size_t i = 0; i < dl.domain.size(); ++i) span.push_back(dl.matrix.column(i));
            CHECK_FALSE(in_span(span, dl.codomain_coords(image)));
        }
    }
}

TEST_CASE("kernel structure") {
    QHVF Fn = family_leading();
    QHPoly I = family_integral();
    auto k7 = kernel_ell_structure(7, Fn, I, 6);
    REQUIRE(k7.dim() == 1);
    CHECK(k7.elements[0] == I.poly);
    CHECK(kernel_ell_structure(4, Fn, I, 6).dim() == 0);
    auto k13 = kernel_ell_structure(13, Fn, I, 6);
    REQUIRE(k13.dim() == 1);
    CHECK(k13.elements[0] == I.poly.pow(2));
}

TEST_CASE("cyclic coranges") {
    QHVF Fn = family_leading();
    QHPoly I = family_integral();
    auto c7 = corange_cyclic(1, family_analysis(1).corange, I, Fn);
    REQUIRE(c7.dim() == 1);
    CHECK(c7.elements[0] == X() * I.poly);
    CHECK(corange_cyclic(3, family_analysis(3).corange, I, Fn).dim() == 0);
    auto c12 = corange_cyclic(6, family_analysis(6).corange, I, Fn);
    REQUIRE(c12.dim() == 1);
    CHECK(c12.elements[0] == I.poly.pow(2));
    CHECK(family_analysis(12).corange.elements == c12.elements);
}

TEST_CASE("property: rank nullity") {
    Gen gen(51);
    for (int trial = 0; trial < 40; ++trial) {
        QHType t = gen.type(3);
        int n = gen.uniform(0, 4);
        QHVF Fn = gen.qhvf(n, t);
        check_rank_nullity(op_ell(n + gen.uniform(0, 10), Fn));
        QHPoly f = gen.qh(gen.uniform(1, 5), t);
        if (!f.is_zero()) check_rank_nullity(op_delta(f.degree + gen.uniform(0, 8), f));
    }
}

TEST_CASE("property: corange cyclicity") {
    QHVF Fn = family_leading();
    QHPoly I = family_integral();
    for (int k = 1; k <= 12; ++k) {
        auto base = family_analysis(k);
        auto shifted = family_analysis(k + 6);
        CHECK(shifted.corange.dim() == base.corange.dim());
        SubspaceBasis product = corange_cyclic(k, base.corange, I, Fn);
        CHECK(is_complement(shifted.range, product));
    }
}

TEST_CASE("property: kernel of ell") {
    QHVF Fn = family_leading();
    QHPoly I = family_integral();
    for (int k = 1; k <= 19; ++k) {
        auto kernel = subspace_analysis(op_ell(k, Fn)).kernel;
        if ((k - 1) % 6 == 0) {
            REQUIRE(kernel.dim() == 1);
            Poly2 power = I.poly.pow(static_cast<unsigned>((k - 1) / 6));
            Rat ratio = kernel.elements[0].terms().begin()->second / power.coeff(kernel.elements[0].terms().begin()->first);
            CHECK(kernel.elements[0] == power * ratio);
        } else {
            CHECK(kernel.dim() == 0);
        }
        CHECK(kernel_ell_structure(k, Fn, I, 6).dim() == kernel.dim());
    }
}

TEST_CASE("property: unique decomposition against the curve") {
    Gen gen(52);
    QHVF Fn = family_leading();
    QHPoly f = QHPoly::make(Y() - X(2), 2, kType12);
    QHPoly Kn = QHPoly::make(mono(1, 0, Rat(-8, 3)), 1, kType12);
    for (int trial = 0; trial < 50; ++trial) {
        int k = gen.uniform(1, 16);
        Poly2 q = gen.qh_poly(1 + k, kType12);
        LinMap lt = op_ell_tilde(k, Fn, Kn);
        LinMap dl = op_delta(1 + k, f);
        std::vector<Vec> cols{dl.codomain_coords(lt.apply(X(k)))};
        for (std::size_t i = 0; i < dl.domain.size(); ++i) cols.push_back(dl.matrix.column(i));
        Matrix A = Matrix::from_columns(cols, dl.codomain.size());
        REQUIRE(A.rows() == A.cols());
        CHECK(rank(A) == A.cols());
        auto sol = solve(A, dl.codomain_coords(q));
        REQUIRE(sol.has_value());
        Poly2 rebuilt = lt.apply(X(k)) * (*sol)[0];
        for (std::size_t i = 0; i < dl.domain.size(); ++i) rebuilt += dl.domain[i] * f.poly * (*sol)[i + 1];
        CHECK(rebuilt == q);
    }
}

TEST_CASE("property: ell c is invertible for |d| < 1") {
    for (Rat d : {Rat(-1, 3), Rat(1, 2), Rat(-7, 9)}) {
        for (int n = 1; n <= 2; ++n) {
            QHVF Fn = b4_template(n, d);
            Splitting split = split_conservative_dissipative(Fn);
            for (int k = 1; k <= 30; ++k) {
                LinMap lc = op_ell_c(k, Fn, split, delta_complement(split.h, n, k), delta_complement(split.h, n, n + k));
                auto a = subspace_analysis(lc);
                CHECK(a.kernel.dim() == 0);
                CHECK(a.corange.dim() == 0);
            }
        }
    }
}
