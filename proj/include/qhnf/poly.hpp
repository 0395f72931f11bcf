#pragma once

#include "qhnf/error.hpp"
#include "qhnf/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qhnf {

// x^a y^b
struct Monomial {
    int a = 0;
    int b = 0;
    friend bool operator==(Monomial, Monomial) = default;
};

// Total degree ascending, then x-exponent descending.
struct GradedLexLess {
    bool operator()(Monomial l, Monomial r) const {
        if (l.a + l.b != r.a + r.b) return l.a + l.b < r.a + r.b;
        return l.a > r.a;
    }
};

struct QHType {
    int t1 = 1;
    int t2 = 1;
    int weight() const { return t1 + t2; }
    int degree(Monomial m) const { return m.a * t1 + m.b * t2; }
    friend bool operator==(QHType, QHType) = default;
};

std::string to_string(QHType t);

template <class C>
class BasicPoly2 {
public:
    using Coeff = C;
    using TermMap = std::map<Monomial, C, GradedLexLess>;

    BasicPoly2() = default;
    BasicPoly2(C c) { add_term({0, 0}, c); }
    BasicPoly2(long c) : BasicPoly2(C(c)) {}

    static BasicPoly2 monomial(int a, int b, const C& c = C(1)) {
        BasicPoly2 p;
        p.add_term({a, b}, c);
        return p;
    }
    static BasicPoly2 x() { return monomial(1, 0); }
    static BasicPoly2 y() { return monomial(0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coeff(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Monomial m, const C& c) {
        if (qhnf::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (qhnf::is_zero(it->second)) terms_.erase(it);
        }
    }

    BasicPoly2& operator+=(const BasicPoly2& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BasicPoly2& operator-=(const BasicPoly2& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    BasicPoly2& operator*=(const C& s) {
        if (qhnf::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    BasicPoly2& operator/=(const C& s) {
        if (qhnf::is_zero(s)) throw Error(ErrorKind::Algebra, "polynomial division by zero");
        for (auto& [m, c] : terms_) c /= s;
        return *this;
    }

    friend BasicPoly2 operator+(BasicPoly2 l, const BasicPoly2& r) { return l += r; }
    friend BasicPoly2 operator-(BasicPoly2 l, const BasicPoly2& r) { return l -= r; }
    friend BasicPoly2 operator-(BasicPoly2 p) {
        for (auto& [m, c] : p.terms_) c = -c;
        return p;
    }
    friend BasicPoly2 operator*(BasicPoly2 p, const C& s) { return p *= s; }
    friend BasicPoly2 operator*(const C& s, BasicPoly2 p) { return p *= s; }
    friend BasicPoly2 operator/(BasicPoly2 p, const C& s) { return p /= s; }
    friend BasicPoly2 operator*(const BasicPoly2& l, const BasicPoly2& r) {
        BasicPoly2 out;
        for (const auto& [ml, cl] : l.terms_)
            for (const auto& [mr, cr] : r.terms_) out.add_term({ml.a + mr.a, ml.b + mr.b}, C(cl * cr));
        return out;
    }
    BasicPoly2& operator*=(const BasicPoly2& o) { return *this = *this * o; }
    friend bool operator==(const BasicPoly2& l, const BasicPoly2& r) { return l.terms_ == r.terms_; }

    BasicPoly2 pow(unsigned e) const {
        BasicPoly2 out(C(1)), base = *this;
        while (e) {
            if (e & 1u) out *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return out;
    }

    BasicPoly2 dx() const {
        BasicPoly2 out;
        for (const auto& [m, c] : terms_)
            if (m.a > 0) out.add_term({m.a - 1, m.b}, C(c * C(m.a)));
        return out;
    }
    BasicPoly2 dy() const {
        BasicPoly2 out;
        for (const auto& [m, c] : terms_)
            if (m.b > 0) out.add_term({m.a, m.b - 1}, C(c * C(m.b)));
        return out;
    }

    int degree_in_y() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.b);
        return d;
    }
    int min_qh_degree(QHType t) const {
        int d = 1 << 30;
        for (const auto& [m, c] : terms_) d = std::min(d, t.degree(m));
        return d;
    }
    int max_qh_degree(QHType t) const {
        int d = -(1 << 30);
        for (const auto& [m, c] : terms_) d = std::max(d, t.degree(m));
        return d;
    }
    bool is_qh(QHType t, int k) const {
        for (const auto& [m, c] : terms_)
            if (t.degree(m) != k) return false;
        return true;
    }
    BasicPoly2 truncated(QHType t, int max_degree) const {
        BasicPoly2 out;
        for (const auto& [m, c] : terms_)
            if (t.degree(m) <= max_degree) out.terms_.emplace(m, c);
        return out;
    }
    BasicPoly2 component(QHType t, int k) const {
        BasicPoly2 out;
        for (const auto& [m, c] : terms_)
            if (t.degree(m) == k) out.terms_.emplace(m, c);
        return out;
    }

private:
    TermMap terms_;
};

using Poly2 = BasicPoly2<Rat>;
using GPoly2 = BasicPoly2<GaussRat>;

// Product with all terms of qh-degree above max_degree dropped.
Poly2 mul_truncated(const Poly2& l, const Poly2& r, QHType t, int max_degree);

std::string to_string(const Poly2& p);
std::string to_string(const GPoly2& p);
GPoly2 to_gauss(const Poly2& p);
// Throws when an imaginary part is nonzero.
Poly2 to_rational(const GPoly2& p);
Rat evaluate(const Poly2& p, const Rat& x, const Rat& y);

// Quasi-homogeneous polynomial of a fixed degree; zero is allowed at every degree.
struct QHPoly {
    Poly2 poly;
    int degree = 0;
    QHType type;

    static QHPoly make(Poly2 p, int k, QHType t);
    static QHPoly zero(int k, QHType t) { return {Poly2(), k, t}; }
    bool is_zero() const { return poly.is_zero(); }
};

std::vector<Monomial> qh_basis(int k, QHType t);
std::map<int, QHPoly> qh_components(const Poly2& p, QHType t);
std::vector<Rat> coordinates(const Poly2& p, const std::vector<Monomial>& basis);
Poly2 from_coordinates(const std::vector<Rat>& coords, const std::vector<Monomial>& basis);

// A finite set of qh polynomials of one degree, read as the basis of their span.
struct SubspaceBasis {
    int degree = 0;
    QHType type;
    std::vector<Poly2> elements;
    std::size_t dim() const { return elements.size(); }
};

// Univariate polynomial, coefficients in ascending order.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Rat> coeffs);
    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
    Rat operator()(const Rat& v) const;
    GaussRat operator()(const GaussRat& v) const;
    Poly1 derivative() const;
    // Lowest exponent with a nonzero coefficient, -1 for zero.
    int low_degree() const;
    friend Poly1 operator*(const Poly1& l, const Poly1& r);
    friend bool operator==(const Poly1& l, const Poly1& r) = default;

private:
    void trim();
    std::vector<Rat> c_;
};

std::pair<Poly1, Poly1> divmod(const Poly1& num, const Poly1& den);
Poly1 monic_gcd(Poly1 a, Poly1 b);
// Rational roots with multiplicities.
std::vector<std::pair<Rat, int>> rational_roots(const Poly1& p);

struct RootInQI {
    GaussRat value;
    int multiplicity = 1;
};
// Roots in Q(i); throws UnsupportedRootField when a root lies outside Q(i).
std::vector<RootInQI> roots_in_qi(const Poly1& p);

// Factorisation of a qh polynomial of y-degree at most 2 into factors monic in y.
struct QuadFactor {
    GPoly2 poly;
    int multiplicity = 1;
    int degree = 0;
};
struct QuadFactorization {
    Rat unit;
    std::vector<QuadFactor> factors;
    GPoly2 expand() const;
};
QuadFactorization factor_quadratic_in_y(const QHPoly& h);

}  // namespace qhnf
