#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "qhnf/transform.hpp"

#include <algorithm>
#include <set>

using namespace qhnf;
using namespace qhnf::testing;

namespace {

std::set<std::pair<int, int>> as_set(const std::vector<Monomial>& ms) {
    std::set<std::pair<int, int>> out;
    for (Monomial m : ms) out.insert({m.a, m.b});
    return out;
}

int dim(int k, QHType t) { return k < 0 ? 0 : static_cast<int>(qh_basis(k, t).size()); }

}  // namespace

TEST_CASE("rationals stay canonical") {
    Rat q = parse_rat("6/-4");
    CHECK(q == Rat(-3, 2));
    CHECK(q.get_den() > 0);
    CHECK(to_string(Rat(0)) == "0");
    CHECK(to_string(Rat(-3, 2)) == "-3/2");
    Rat root;
    CHECK(rational_sqrt(Rat(9, 4), root));
    CHECK(root == Rat(3, 2));
    CHECK_FALSE(rational_sqrt(Rat(2), root));
}

TEST_CASE("gaussian rationals") {
    GaussRat z(Rat(1, 2), Rat(-3));
    GaussRat w(Rat(2), Rat(1, 3));
    CHECK(z.conj().conj() == z);
    CHECK((z * w) / w == z);
    CHECK((z * z.conj()).is_real());
    CHECK(GaussRat(0, 1) * GaussRat(0, 1) == GaussRat(-1));
}

TEST_CASE("polynomial arithmetic") {
    CHECK((Y() - X(2)) * (Y() + X(2)) == Y(2) - X(4));
    Poly2 h = -(Y(2) - X(4)) / Rat(2);
    CHECK(h.dy() == -Y());

    Poly2 u = Y() - X(2), v = Y() + X(2);
    Poly2 expanded = u * v.pow(2);
    Poly2 product_rule = u.dx() * v.pow(2) + u * Poly2(Rat(2)) * v * v.dx();
    CHECK(expanded.dx() == product_rule);

    Poly2 p = X() + Y();
    p -= X();
    p -= Y();
    CHECK(p.is_zero());
    CHECK(p.size() == 0);
}

TEST_CASE("qh basis") {
    CHECK(as_set(qh_basis(2, {1, 2})) == std::set<std::pair<int, int>>{{2, 0}, {0, 1}});
    CHECK(qh_basis(0, {3, 5}).size() == 1);
    CHECK(qh_basis(0, {3, 5}).front() == Monomial{0, 0});
    auto six = qh_basis(6, {1, 2});
    CHECK(as_set(six) == std::set<std::pair<int, int>>{{6, 0}, {4, 1}, {2, 2}, {0, 3}});
    CHECK(std::is_sorted(six.begin(), six.end(), GradedLexLess{}));
    CHECK(qh_basis(1, {2, 3}).empty());
}

TEST_CASE("qh components") {
    auto c = qh_components(Y(2) + X(3) + X(), {1, 1});
    REQUIRE(c.size() == 3);
    CHECK(c.at(1).poly == X());
    CHECK(c.at(2).poly == Y(2));
    CHECK(c.at(3).poly == X(3));

    auto d = qh_components(Y(2) - X(4), {1, 2});
    REQUIRE(d.size() == 1);
    CHECK(d.at(4).poly == Y(2) - X(4));

    auto e = qh_components(Y(2) - X(4), {2, 3});
    REQUIRE(e.size() == 2);
    CHECK(e.at(6).poly == Y(2));
    CHECK(e.at(8).poly == -X(4));
}

TEST_CASE("factor quadratic in y") {
    QHType t{1, 2};
    auto f = factor_quadratic_in_y(QHPoly::make(-(Y(2) - X(4)) / Rat(2), 4, t));
    CHECK(f.unit == Rat(-1, 2));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].poly == to_gauss(Y() - X(2)));
    CHECK(f.factors[1].poly == to_gauss(Y() + X(2)));
    CHECK(f.factors[0].multiplicity == 1);
    CHECK(f.factors[1].multiplicity == 1);

    auto g = factor_quadratic_in_y(QHPoly::make(-Y(2) / Rat(2), 4, t));
    CHECK(g.unit == Rat(-1, 2));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].poly == to_gauss(Y()));
    CHECK(g.factors[0].multiplicity == 2);

    auto i = factor_quadratic_in_y(QHPoly::make(-(Y(2) + X(4)) / Rat(2), 4, t));
    CHECK(i.unit == Rat(-1, 2));
    REQUIRE(i.factors.size() == 2);
    GPoly2 ix2 = GPoly2::monomial(2, 0, GaussRat(0, 1));
    GPoly2 y = GPoly2::monomial(0, 1);
    CHECK(i.factors[0].poly == y - ix2);
    CHECK(i.factors[1].poly == y + ix2);

    CHECK_THROWS_AS(factor_quadratic_in_y(QHPoly::make(Y(3), 6, t)), Error);
}

TEST_CASE("property: components reassemble") {
    Gen gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        QHType t = gen.type(4);
        Poly2 p;
        int terms = gen.uniform(1, 8);
        for (int i = 0; i < terms; ++i) p.add_term({gen.uniform(0, 6), gen.uniform(0, 6)}, gen.rat());
        Poly2 sum;
        for (const auto& [k, c] : qh_components(p, t)) {
            CHECK(c.degree == k);
            sum += c.poly;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("property: qh scaling") {
    Gen gen(12);
    const Rat lambda(3, 2);
    for (int trial = 0; trial < 60; ++trial) {
        QHType t = gen.type(4);
        int k = gen.uniform(0, 14);
        Poly2 p = gen.qh_poly(k, t);
        Rat s1 = 1, s2 = 1, sk = 1;
        for (int i = 0; i < t.t1; ++i) s1 *= lambda;
        for (int i = 0; i < t.t2; ++i) s2 *= lambda;
        for (int i = 0; i < k; ++i) sk *= lambda;
        CHECK(substitute(p, X() * s1, Y() * s2) == p * sk);
    }
}

TEST_CASE("property: dimension identity") {
    for (int n = 1; n <= 4; ++n) {
        QHType t{1, n + 1};
        for (int m1 = 1; m1 <= 5; ++m1)
            for (int m2 = 1; m2 <= 5; ++m2) {
                int M = (n + 1) * (m1 + m2);
                for (int k = n; k <= 40; ++k)
                    CHECK(dim(k + M, t) - dim(k + M - n, t) == dim(k, t) - dim(k - n, t));
            }
    }
}

TEST_CASE("property: factorisation round trip") {
    Gen gen(13);
    QHType t{1, 2};
    for (int trial = 0; trial < 50; ++trial) {
        Rat r1 = gen.rat(), r2 = gen.rat(), u = gen.rat();
        if (u == 0) u = 1;
        Poly2 h = u * (Y() - X(2) * r1) * (Y() - X(2) * r2);
        auto f = factor_quadratic_in_y(QHPoly::make(h, 4, t));
        CHECK(f.expand() == to_gauss(h));
    }
    for (int trial = 0; trial < 20; ++trial) {
        Rat a = gen.rat(), b = gen.rat();
        if (b == 0) b = 1;
        Poly2 h = Y(2) + X(2) * Y() * a + X(4) * b;
        auto f = factor_quadratic_in_y(QHPoly::make(h, 4, t));
        CHECK(f.expand() == to_gauss(h));
    }
}
