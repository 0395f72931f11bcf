#include "qhnf/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qhnf {

std::string to_string(QHType t) { return "(" + std::to_string(t.t1) + "," + std::to_string(t.t2) + ")"; }

Poly2 mul_truncated(const Poly2& l, const Poly2& r, QHType t, int max_degree) {
    Poly2 out;
    for (const auto& [ml, cl] : l.terms()) {
        int dl = t.degree(ml);
        for (const auto& [mr, cr] : r.terms())
            if (dl + t.degree(mr) <= max_degree) out.add_term({ml.a + mr.a, ml.b + mr.b}, Rat(cl * cr));
    }
    return out;
}

namespace {

std::string monomial_text(Monomial m) {
    std::string s;
    if (m.a > 0) s += m.a == 1 ? "x" : "x^" + std::to_string(m.a);
    if (m.b > 0) {
        if (!s.empty()) s += "*";
        s += m.b == 1 ? "y" : "y^" + std::to_string(m.b);
    }
    return s;
}

template <class C>
std::string poly_text(const BasicPoly2<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string coeff = to_string(c);
        bool negative = coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        std::string mono = monomial_text(m);
        std::string term;
        if (mono.empty()) term = coeff;
        else if (coeff == "1") term = mono;
        else term = coeff + "*" + mono;
        if (first) out += negative ? "-" + term : term;
        else out += negative ? " - " + term : " + " + term;
        first = false;
    }
    return out;
}

}  // namespace

std::string to_string(const Poly2& p) { return poly_text(p); }
std::string to_string(const GPoly2& p) { return poly_text(p); }

GPoly2 to_gauss(const Poly2& p) {
    GPoly2 out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, GaussRat(c));
    return out;
}

Poly2 to_rational(const GPoly2& p) {
    Poly2 out;
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_real()) throw Error(ErrorKind::UnsupportedRootField, "polynomial has non-real coefficients");
        out.add_term(m, c.re);
    }
    return out;
}

Rat evaluate(const Poly2& p, const Rat& x, const Rat& y) {
    Rat sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Rat term = c;
        for (int i = 0; i < m.a; ++i) term *= x;
        for (int i = 0; i < m.b; ++i) term *= y;
        sum += term;
    }
    return sum;
}

QHPoly QHPoly::make(Poly2 p, int k, QHType t) {
    if (!p.is_qh(t, k))
        throw Error(ErrorKind::TypeMismatch,
                    "polynomial " + to_string(p) + " is not quasi-homogeneous of degree " + std::to_string(k) +
                        " for type " + to_string(t));
    return {std::move(p), k, t};
}

std::vector<Monomial> qh_basis(int k, QHType t) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    for (int b = 0; b * t.t2 <= k; ++b) {
        int rest = k - b * t.t2;
        if (rest % t.t1 == 0) out.push_back({rest / t.t1, b});
    }
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::map<int, QHPoly> qh_components(const Poly2& p, QHType t) {
    std::map<int, QHPoly> out;
    for (const auto& [m, c] : p.terms()) {
        int k = t.degree(m);
        auto it = out.try_emplace(k, QHPoly::zero(k, t)).first;
        it->second.poly.add_term(m, c);
    }
    return out;
}

std::vector<Rat> coordinates(const Poly2& p, const std::vector<Monomial>& basis) {
    std::vector<Rat> out(basis.size());
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out[i] = p.coeff(basis[i]);
        if (!is_zero(out[i])) ++found;
    }
    if (found != p.size())
        throw Error(ErrorKind::TypeMismatch, "polynomial " + to_string(p) + " is outside the coordinate basis");
    return out;
}

Poly2 from_coordinates(const std::vector<Rat>& coords, const std::vector<Monomial>& basis) {
    Poly2 out;
    for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coords[i]);
    return out;
}

Poly1::Poly1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly1::trim() {
    while (!c_.empty() && qhnf::is_zero(c_.back())) c_.pop_back();
}

Rat Poly1::operator()(const Rat& v) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

GaussRat Poly1::operator()(const GaussRat& v) const {
    GaussRat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + GaussRat(*it);
    return acc;
}

Poly1 Poly1::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return Poly1(std::move(d));
}

int Poly1::low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!qhnf::is_zero(c_[i])) return static_cast<int>(i);
    return -1;
}

Poly1 operator*(const Poly1& l, const Poly1& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Rat> out(l.c_.size() + r.c_.size() - 1);
    for (std::size_t i = 0; i < l.c_.size(); ++i)
        for (std::size_t j = 0; j < r.c_.size(); ++j) out[i + j] += l.c_[i] * r.c_[j];
    return Poly1(std::move(out));
}

std::pair<Poly1, Poly1> divmod(const Poly1& num, const Poly1& den) {
    if (den.is_zero()) throw Error(ErrorKind::Algebra, "univariate division by zero");
    std::vector<Rat> rem = num.coeffs();
    int dd = den.degree();
    if (num.degree() < dd) return {Poly1(), num};
    std::vector<Rat> quo(static_cast<std::size_t>(num.degree() - dd + 1));
    for (int i = num.degree(); i >= dd; --i) {
        Rat q = rem[static_cast<std::size_t>(i)] / den.lead();
        quo[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

Poly1 monic_gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    std::vector<Rat> c = a.coeffs();
    Rat lead = a.lead();
    for (auto& v : c) v /= lead;
    return Poly1(std::move(c));
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    if (n > mpz_class("1000000000000")) throw Error(ErrorKind::Unsupported, "coefficient too large for root search");
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Poly1 deflate(const Poly1& p, const Rat& root) {
    return divmod(p, Poly1({Rat(-root), Rat(1)})).first;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const Poly1& input) {
    std::vector<std::pair<Rat, int>> out;
    if (input.is_zero()) throw Error(ErrorKind::Algebra, "roots of the zero polynomial");
    Poly1 p = input;
    int zero_mult = p.low_degree();
    if (zero_mult > 0) {
        out.push_back({Rat(0), zero_mult});
        std::vector<Rat> c(p.coeffs().begin() + zero_mult, p.coeffs().end());
        p = Poly1(std::move(c));
    }
    if (p.degree() <= 0) return out;
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : p.coeffs()) {
        Rat scaled = c * Rat(lcm_den);
        ints.push_back(scaled.get_num());
    }
    auto nums = positive_divisors(ints.front());
    auto dens = positive_divisors(ints.back());
    std::vector<Rat> candidates;
    for (const auto& n : nums)
        for (const auto& d : dens)
            for (int s : {1, -1}) {
                Rat c(n * s, d);
                c.canonicalize();
                if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
            }
    std::sort(candidates.begin(), candidates.end(), [](const Rat& l, const Rat& r) { return l > r; });
    for (const auto& c : candidates) {
        int mult = 0;
        while (p.degree() > 0 && is_zero(p(c))) {
            p = deflate(p, c);
            ++mult;
        }
        if (mult > 0) out.push_back({c, mult});
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    return out;
}

std::vector<RootInQI> roots_in_qi(const Poly1& input) {
    std::vector<RootInQI> out;
    Poly1 rest = input;
    for (const auto& [r, m] : rational_roots(input)) {
        out.push_back({GaussRat(r), m});
        for (int i = 0; i < m; ++i) rest = deflate(rest, r);
    }
    if (rest.degree() <= 0) return out;
    // What remains has no rational root; only powers of one quadratic are handled.
    Poly1 square_free = divmod(rest, monic_gcd(rest, rest.derivative())).first;
    if (square_free.degree() != 2)
        throw Error(ErrorKind::UnsupportedRootField, "roots outside Q(i)");
    int mult = rest.degree() / 2;
    const auto& c = square_free.coeffs();
    Rat disc = c[1] * c[1] - 4 * c[2] * c[0];
    Rat root;
    if (!rational_sqrt(Rat(-disc), root)) throw Error(ErrorKind::UnsupportedRootField, "roots outside Q(i)");
    Rat re = -c[1] / (2 * c[2]);
    Rat im = root / (2 * c[2]);
    if (im < 0) im = -im;
    out.push_back({GaussRat(re, im), mult});
    out.push_back({GaussRat(re, Rat(-im)), mult});
    return out;
}

GPoly2 QuadFactorization::expand() const {
    GPoly2 out{GaussRat(unit)};
    for (const auto& f : factors) out *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
    return out;
}

namespace {

bool gauss_greater(const GaussRat& l, const GaussRat& r) {
    if (l.re != r.re) return l.re > r.re;
    return l.im > r.im;
}

}  // namespace

QuadFactorization factor_quadratic_in_y(const QHPoly& h) {
    if (h.is_zero()) throw Error(ErrorKind::Algebra, "factorisation of the zero polynomial");
    if (h.poly.degree_in_y() > 2)
        throw Error(ErrorKind::UnsupportedShape, "y-degree of " + to_string(h.poly) + " exceeds 2");
    const QHType t = h.type;
    int x_power = 1 << 30;
    for (const auto& [m, c] : h.poly.terms()) x_power = std::min(x_power, m.a);
    Poly2 q;
    for (const auto& [m, c] : h.poly.terms()) q.add_term({m.a - x_power, m.b}, c);

    QuadFactorization out;
    if (x_power > 0) out.factors.push_back({GPoly2::x(), x_power, t.t1});

    // After removing x^e the top y-power carries x^0.
    int yd = q.degree_in_y();
    Rat top = q.coeff({0, yd});
    out.unit = top;
    Rat c1 = 0, c0 = 0;
    int a1 = 0, a0 = 0;
    for (const auto& [m, c] : q.terms()) {
        if (m.b == yd) continue;
        if (m.b == yd - 1) { c1 = c / top; a1 = m.a; }
        else { c0 = c / top; a0 = m.a; }
    }
    auto linear = [&](const GaussRat& root, int p) {
        // y - root*x^p
        GPoly2 f = GPoly2::y();
        f.add_term({p, 0}, -root);
        return f;
    };
    if (yd == 0) return out;
    if (yd == 1) {
        out.factors.push_back({linear(GaussRat(Rat(-c0)), a0), 1, t.t2});
        return out;
    }
    // y^2 + c1 x^a1 y + c0 x^a0
    if (is_zero(c0) && is_zero(c1)) {
        out.factors.push_back({GPoly2::y(), 2, t.t2});
        return out;
    }
    std::vector<QuadFactor> linears;
    if (is_zero(c0)) {
        linears.push_back({GPoly2::y(), 1, t.t2});
        linears.push_back({linear(GaussRat(Rat(-c1)), a1), 1, t.t2});
        std::vector<std::pair<GaussRat, QuadFactor>> keyed = {{GaussRat(0), linears[0]}, {GaussRat(Rat(-c1)), linears[1]}};
        std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return gauss_greater(l.first, r.first); });
        for (auto& [k, f] : keyed) out.factors.push_back(f);
        return out;
    }
    if (a0 % 2 != 0) {
        GPoly2 f = GPoly2::monomial(0, 2);
        f.add_term({a0, 0}, GaussRat(c0));
        out.factors.push_back({f, 1, 2 * t.t2});
        return out;
    }
    int p = a0 / 2;
    Rat disc = c1 * c1 - 4 * c0;
    Rat s;
    if (is_zero(disc)) {
        out.factors.push_back({linear(GaussRat(Rat(-c1 / 2)), p), 2, t.t2});
        return out;
    }
    std::vector<GaussRat> roots;
    if (rational_sqrt(disc, s)) {
        roots = {GaussRat(Rat((-c1 + s) / 2)), GaussRat(Rat((-c1 - s) / 2))};
    } else if (rational_sqrt(Rat(-disc), s)) {
        roots = {GaussRat(Rat(-c1 / 2), Rat(s / 2)), GaussRat(Rat(-c1 / 2), Rat(-s / 2))};
    } else {
        GPoly2 f = GPoly2::monomial(0, 2);
        f.add_term({a1, 1}, GaussRat(c1));
        f.add_term({a0, 0}, GaussRat(c0));
        out.factors.push_back({f, 1, 2 * t.t2});
        return out;
    }
    std::sort(roots.begin(), roots.end(), gauss_greater);
    for (const auto& r : roots) out.factors.push_back({linear(r, p), 1, t.t2});
    return out;
}

}  // namespace qhnf
