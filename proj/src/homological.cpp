#include "qhnf/homological.hpp"

namespace qhnf {

namespace {

bool all_monomials(const std::vector<Poly2>& basis) {
    for (const auto& b : basis)
        if (b.size() != 1 || b.terms().begin()->second != 1) return false;
    return true;
}

Vec coords_general(const std::vector<Poly2>& basis, const Poly2& p, int degree, QHType t) {
    if (all_monomials(basis)) {
        std::vector<Monomial> monos;
        for (const auto& b : basis) monos.push_back(b.terms().begin()->first);
        return coordinates(p, monos);
    }
    return coordinates_in(basis, p, degree, t);
}

std::vector<Poly2> monomial_polys(int k, QHType t) {
    std::vector<Poly2> out;
    for (const auto& m : qh_basis(k, t)) out.push_back(Poly2::monomial(m.a, m.b));
    return out;
}

LinMap make_map(std::vector<Poly2> domain, std::vector<Poly2> codomain, int dd, int cd, QHType t,
                const std::function<Poly2(const Poly2&)>& image, Exec exec) {
    LinMap L{std::move(domain), std::move(codomain), dd, cd, t, {}};
    L.matrix = build_columns(
        L.codomain.size(), L.domain.size(), [&](std::size_t c) { return L.codomain_coords(image(L.domain[c])); },
        L.domain.size() >= 8 ? exec : Exec::Serial);
    return L;
}

}  // namespace

Vec LinMap::domain_coords(const Poly2& p) const { return coords_general(domain, p, domain_degree, type); }
Vec LinMap::codomain_coords(const Poly2& p) const { return coords_general(codomain, p, codomain_degree, type); }

Poly2 LinMap::domain_poly(const Vec& v) const {
    Poly2 out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out += domain[i] * v[i];
    return out;
}

Poly2 LinMap::codomain_poly(const Vec& v) const {
    Poly2 out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out += codomain[i] * v[i];
    return out;
}

Poly2 LinMap::apply(const Poly2& p) const { return codomain_poly(matrix.apply(domain_coords(p))); }

std::string Pattern::label() const {
    std::string s;
    auto add = [&](const std::string& sym, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += e == 1 ? sym : sym + "^" + std::to_string(e);
    };
    add("x", x_power);
    add("h", h_power);
    add("I", cyclic_power);
    return s.empty() ? "1" : s;
}

std::vector<Preferred> cyclic_preference(int j, const QHPoly& h, const std::optional<QHPoly>& cyclic) {
    std::vector<Preferred> out;
    const QHType t = h.type;
    const int M = cyclic ? cyclic->degree : 0;
    const int max_i = (cyclic && M > 0) ? j / M : 0;
    for (int i = max_i; i >= 0; --i) {
        int rest_i = j - i * M;
        for (int c = h.degree > 0 ? rest_i / h.degree : 0; c >= 0; --c) {
            int rest = rest_i - c * h.degree;
            if (rest < 0 || rest % t.t1 != 0) continue;
            int a = rest / t.t1;
            Poly2 p = Poly2::monomial(a, 0) * h.poly.pow(static_cast<unsigned>(c));
            if (i > 0) p *= cyclic->poly.pow(static_cast<unsigned>(i));
            out.push_back({std::move(p), {a, c, i}});
        }
    }
    return out;
}

SubspaceAnalysis subspace_analysis(const LinMap& L, const std::vector<Preferred>& preference) {
    SubspaceAnalysis out;
    out.kernel = {L.domain_degree, L.type, {}};
    out.range = {L.codomain_degree, L.type, {}};
    out.corange = {L.codomain_degree, L.type, {}};
    for (const auto& v : kernel_basis(L.matrix)) out.kernel.elements.push_back(L.domain_poly(v));
    Rref red = rref(L.matrix);
    std::vector<Vec> span;
    for (auto p : red.pivots) {
        Vec col = L.matrix.column(p);
        out.range.elements.push_back(L.codomain_poly(col));
        span.push_back(std::move(col));
    }
    const std::size_t full = L.codomain.size();
    for (const auto& pref : preference) {
        if (span.size() == full) break;
        Vec v;
        try {
            v = L.codomain_coords(pref.poly);
        } catch (const Error&) {
            continue;
        }
        if (in_span(span, v)) continue;
        span.push_back(v);
        out.corange.elements.push_back(pref.poly);
        out.corange_patterns.push_back(pref.pattern);
    }
    for (std::size_t i = 0; i < full && span.size() < full; ++i) {
        Vec v(full);
        v[i] = 1;
        if (in_span(span, v)) continue;
        span.push_back(v);
        out.corange.elements.push_back(L.codomain[i]);
        out.corange_patterns.push_back(std::nullopt);
    }
    return out;
}

LinMap op_ell(int k, const QHVF& Fn, Exec exec) {
    const QHType t = Fn.type;
    const PlanarVF F = Fn.planar();
    return make_map(monomial_polys(k - Fn.degree, t), monomial_polys(k, t), k - Fn.degree, k, t,
                    [&](const Poly2& p) { return directional(p, F); }, exec);
}

LinMap op_ell_c(int k, const QHVF& Fn, const Splitting& split, const SubspaceBasis& delta_domain,
                const SubspaceBasis& delta_codomain) {
    const QHType t = Fn.type;
    const int n = Fn.degree, w = t.weight();
    validate_delta(delta_domain, split.h, n, k);
    validate_delta(delta_codomain, split.h, n, n + k);
    Rat factor(n + w, n + k + w);
    factor.canonicalize();
    PlanarVF G = Fn.planar() - (split.mu.poly * factor) * d0_field(t).planar();
    std::vector<Poly2> ambient = delta_codomain.elements;
    for (const auto& m : qh_basis(k, t)) ambient.push_back(split.h.poly * Poly2::monomial(m.a, m.b));
    LinMap L{delta_domain.elements, delta_codomain.elements, k + w, n + k + w, t, {}};
    const std::size_t rows = delta_codomain.elements.size();
    L.matrix = build_columns(
        rows, L.domain.size(),
        [&](std::size_t c) {
            Vec all = coordinates_in(ambient, directional(L.domain[c], G), n + k + w, t);
            return Vec(all.begin(), all.begin() + static_cast<long>(rows));
        },
        Exec::Serial);
    return L;
}

LinMap op_delta(int k, const QHPoly& f) {
    const QHType t = f.type;
    return make_map(monomial_polys(k - f.degree, t), monomial_polys(k, t), k - f.degree, k, t,
                    [&](const Poly2& p) { return p * f.poly; }, Exec::Serial);
}

LinMap op_ell_tilde(int k, const QHVF& Fn, const QHPoly& Kn) {
    if (k <= 0) throw Error(ErrorKind::Algebra, "op_ell_tilde needs a positive degree");
    const QHType t = Fn.type;
    Rat inv(1, k);
    inv.canonicalize();
    PlanarVF G = Fn.planar() - (Kn.poly * inv) * d0_field(t).planar();
    return make_map(monomial_polys(k, t), monomial_polys(Fn.degree + k, t), k, Fn.degree + k, t,
                    [&](const Poly2& p) { return directional(p, G); }, Exec::Serial);
}

bool is_complement(const SubspaceBasis& range, const SubspaceBasis& candidate) {
    auto monos = qh_basis(range.degree, range.type);
    std::vector<Vec> cols;
    for (const auto& p : range.elements) cols.push_back(coordinates(p, monos));
    for (const auto& p : candidate.elements) cols.push_back(coordinates(p, monos));
    if (cols.size() != monos.size()) return false;
    return cols.empty() || rank(Matrix::from_columns(cols, monos.size())) == monos.size();
}

SubspaceBasis kernel_ell_structure(int k, const QHVF& Fn, const QHPoly& cyclic, int M) {
    const QHType t = Fn.type;
    const int n = Fn.degree;
    SubspaceBasis expected{k - n, t, {}};
    if (k - n >= 0 && M > 0 && (k - n) % M == 0)
        expected.elements.push_back(cyclic.poly.pow(static_cast<unsigned>((k - n) / M)));
    SubspaceBasis computed = subspace_analysis(op_ell(k, Fn)).kernel;
    bool same = computed.dim() == expected.dim();
    if (same && computed.dim() > 0) {
        auto monos = qh_basis(k - n, t);
        std::vector<Vec> span;
        for (const auto& p : computed.elements) span.push_back(coordinates(p, monos));
        for (const auto& p : expected.elements) same = same && in_span(span, coordinates(p, monos));
    }
    if (!same)
        throw Error(ErrorKind::Internal,
                    "kernel of ell_" + std::to_string(k) + " does not match the powers of the cyclic integral");
    return expected;
}

SubspaceBasis corange_cyclic(int k, const SubspaceBasis& corange_k, const QHPoly& cyclic, const QHVF& Fn) {
    SubspaceBasis out{k + cyclic.degree, Fn.type, {}};
    for (const auto& e : corange_k.elements) out.elements.push_back(e * cyclic.poly);
    SubspaceBasis range = subspace_analysis(op_ell(k + cyclic.degree, Fn)).range;
    if (!is_complement(range, out))
        throw Error(ErrorKind::InvalidComplement,
                    "I*Cor(ell_" + std::to_string(k) + ") does not complement Range(ell_" +
                        std::to_string(k + cyclic.degree) + ")");
    return out;
}

}  // namespace qhnf
