#include "qhnf/vectorfield.hpp"

#include "qhnf/linalg.hpp"

#include <algorithm>
#include <set>

namespace qhnf {

PlanarVF& PlanarVF::operator+=(const PlanarVF& o) {
    P += o.P;
    Q += o.Q;
    return *this;
}

PlanarVF& PlanarVF::operator-=(const PlanarVF& o) {
    P -= o.P;
    Q -= o.Q;
    return *this;
}

PlanarVF PlanarVF::truncated(QHType t, int max_degree) const {
    return {P.truncated(t, max_degree + t.t1), Q.truncated(t, max_degree + t.t2)};
}

int PlanarVF::lowest_degree(QHType t) const {
    if (is_zero()) throw Error(ErrorKind::Algebra, "zero vector field has no lowest degree");
    int d = 1 << 30;
    if (!P.is_zero()) d = std::min(d, P.min_qh_degree(t) - t.t1);
    if (!Q.is_zero()) d = std::min(d, Q.min_qh_degree(t) - t.t2);
    return d;
}

std::string to_string(const PlanarVF& v) { return "(" + to_string(v.P) + ", " + to_string(v.Q) + ")"; }

QHVF QHVF::make(Poly2 P, Poly2 Q, int k, QHType t) {
    if (!P.is_qh(t, k + t.t1) || !Q.is_qh(t, k + t.t2))
        throw Error(ErrorKind::TypeMismatch, "vector field (" + to_string(P) + ", " + to_string(Q) +
                                                 ") is not quasi-homogeneous of degree " + std::to_string(k));
    return {std::move(P), std::move(Q), k, t};
}

namespace {

void require_same(const QHVF& a, const QHVF& b) {
    if (a.type != b.type) throw Error(ErrorKind::TypeMismatch, "vector fields of different types");
}

}  // namespace

QHVF& QHVF::operator+=(const QHVF& o) {
    require_same(*this, o);
    if (o.degree != degree && !o.is_zero() && !is_zero())
        throw Error(ErrorKind::TypeMismatch, "sum of vector fields of different degrees");
    if (is_zero()) degree = o.degree;
    P += o.P;
    Q += o.Q;
    return *this;
}

QHVF& QHVF::operator-=(const QHVF& o) { return *this += Rat(-1) * o; }

QHVF operator*(const QHPoly& f, const QHVF& v) {
    if (f.type != v.type) throw Error(ErrorKind::TypeMismatch, "scalar and field of different types");
    return {f.poly * v.P, f.poly * v.Q, f.degree + v.degree, v.type};
}

QHVF vf_component(const PlanarVF& F, QHType t, int k) {
    return {F.P.component(t, k + t.t1), F.Q.component(t, k + t.t2), k, t};
}

std::vector<QHVF> vf_qh_expansion(const PlanarVF& F, QHType t) {
    std::set<int> degrees;
    for (const auto& [m, c] : F.P.terms()) degrees.insert(t.degree(m) - t.t1);
    for (const auto& [m, c] : F.Q.terms()) degrees.insert(t.degree(m) - t.t2);
    std::vector<QHVF> out;
    for (int k : degrees) out.push_back(vf_component(F, t, k));
    return out;
}

QHPoly wedge(const QHVF& A, const QHVF& B) {
    require_same(A, B);
    return QHPoly::make(A.P * B.Q - A.Q * B.P, A.degree + B.degree + A.type.weight(), A.type);
}

QHPoly divergence(const QHVF& F) { return QHPoly::make(F.P.dx() + F.Q.dy(), F.degree, F.type); }

QHVF hamiltonian_field(const QHPoly& h) {
    return {-h.poly.dy(), h.poly.dx(), h.degree - h.type.weight(), h.type};
}

QHVF d0_field(QHType t) {
    return {Poly2::monomial(1, 0, Rat(t.t1)), Poly2::monomial(0, 1, Rat(t.t2)), 0, t};
}

Splitting split_conservative_dissipative(const QHVF& F) {
    Rat norm(F.degree + F.type.weight());
    QHPoly w = wedge(d0_field(F.type), F);
    QHPoly dv = divergence(F);
    return {QHPoly{w.poly / norm, w.degree, F.type}, QHPoly{dv.poly / norm, dv.degree, F.type}};
}

PlanarVF lie_bracket(const PlanarVF& F, const PlanarVF& G) {
    Poly2 p = F.P.dx() * G.P + F.P.dy() * G.Q - (G.P.dx() * F.P + G.P.dy() * F.Q);
    Poly2 q = F.Q.dx() * G.P + F.Q.dy() * G.Q - (G.Q.dx() * F.P + G.Q.dy() * F.Q);
    return {std::move(p), std::move(q)};
}

QHVF lie_bracket(const QHVF& F, const QHVF& G) {
    require_same(F, G);
    PlanarVF b = lie_bracket(F.planar(), G.planar());
    return {std::move(b.P), std::move(b.Q), F.degree + G.degree, F.type};
}

Poly2 directional(const Poly2& f, const PlanarVF& F) { return f.dx() * F.P + f.dy() * F.Q; }

QHPoly directional(const QHPoly& f, const QHVF& F) {
    if (f.type != F.type) throw Error(ErrorKind::TypeMismatch, "directional derivative across types");
    return {directional(f.poly, F.planar()), f.degree + F.degree, F.type};
}

std::vector<Rat> coordinates_in(const std::vector<Poly2>& basis, const Poly2& v, int degree, QHType t) {
    auto monos = qh_basis(degree, t);
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(coordinates(b, monos));
    Matrix m = Matrix::from_columns(cols, monos.size());
    auto sol = solve(m, coordinates(v, monos));
    if (!sol) throw Error(ErrorKind::InvalidComplement, to_string(v) + " is outside the span of the basis");
    return *sol;
}

namespace {

std::vector<Poly2> h_multiples(const QHPoly& h, int n, int k) {
    std::vector<Poly2> out;
    for (const auto& m : qh_basis(k - n, h.type)) out.push_back(h.poly * Poly2::monomial(m.a, m.b));
    return out;
}

}  // namespace

SubspaceBasis delta_complement(const QHPoly& h, int n, int k) {
    QHType t = h.type;
    int deg = k + t.weight();
    auto monos = qh_basis(deg, t);
    std::vector<Vec> span;
    for (const auto& p : h_multiples(h, n, k)) span.push_back(coordinates(p, monos));
    SubspaceBasis out{deg, t, {}};
    for (const auto& m : monos) {
        Vec v = coordinates(Poly2::monomial(m.a, m.b), monos);
        if (in_span(span, v)) continue;
        span.push_back(v);
        out.elements.push_back(Poly2::monomial(m.a, m.b));
    }
    return out;
}

void validate_delta(const SubspaceBasis& delta, const QHPoly& h, int n, int k) {
    QHType t = h.type;
    int deg = k + t.weight();
    auto monos = qh_basis(deg, t);
    std::vector<Vec> cols;
    for (const auto& p : delta.elements) cols.push_back(coordinates(p, monos));
    for (const auto& p : h_multiples(h, n, k)) cols.push_back(coordinates(p, monos));
    if (cols.size() != monos.size() || rank(Matrix::from_columns(cols, monos.size())) != monos.size())
        throw Error(ErrorKind::InvalidComplement,
                    "basis does not complement h*P_" + std::to_string(k - n) + " in P_" + std::to_string(deg));
}

CDFDecomposition cdf_decompose(const QHVF& Pk, const QHVF& Fn, const Splitting& split, const SubspaceBasis& delta) {
    require_same(Pk, Fn);
    if (split.h.is_zero())
        throw Error(ErrorKind::Algebra, "C+D+F decomposition undefined for a conservative part h = 0");
    const QHType t = Pk.type;
    const int k = Pk.degree, n = Fn.degree;
    QHPoly w = wedge(d0_field(t), Pk);
    auto hm = h_multiples(split.h, n, k);
    std::vector<Poly2> basis = delta.elements;
    basis.insert(basis.end(), hm.begin(), hm.end());
    auto coords = coordinates_in(basis, w.poly, k + t.weight(), t);
    Poly2 g_part, q;
    for (std::size_t i = 0; i < delta.elements.size(); ++i) g_part += delta.elements[i] * coords[i];
    auto lower = qh_basis(k - n, t);
    for (std::size_t i = 0; i < lower.size(); ++i)
        q.add_term(lower[i], coords[delta.elements.size() + i]);
    CDFDecomposition out;
    out.g = {g_part / Rat(k + t.weight()), k + t.weight(), t};
    out.lambda = {q / Rat(n + t.weight()), k - n, t};
    Poly2 rest = divergence(Pk).poly - directional(out.lambda.poly, Fn.planar()) -
                 out.lambda.poly * divergence(Fn).poly;
    out.eta = {rest / Rat(k + t.weight()), k, t};
    return out;
}

QHVF cdf_compose(const CDFDecomposition& parts, const QHVF& Fn) {
    QHType t = Fn.type;
    int k = parts.eta.degree;
    QHVF out = hamiltonian_field(parts.g);
    out.degree = k;
    out += parts.eta * d0_field(t);
    if (!parts.lambda.is_zero()) out += parts.lambda * Fn;
    return out;
}

}  // namespace qhnf
