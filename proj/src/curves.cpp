#include "qhnf/curves.hpp"

#include <map>

namespace qhnf {

Poly2 InvariantCurve::curve() const {
    Poly2 out;
    for (const auto& c : curve_terms) out += c.poly;
    return out;
}

Poly2 InvariantCurve::cofactor() const {
    Poly2 out;
    for (const auto& k : cofactor_terms) out += k.poly;
    return out;
}

namespace {

QHPoly exact_quotient(const QHPoly& num, const QHPoly& f) {
    LinMap d = op_delta(num.degree, f);
    auto sol = solve(d.matrix, d.codomain_coords(num.poly));
    if (!sol) throw Error(ErrorKind::Algebra, to_string(f.poly) + " does not divide " + to_string(num.poly));
    return {d.domain_poly(*sol), num.degree - f.degree, f.type};
}

InvariantCurve branch(const PlanarVF& F, const QHVF& Fn, const QHPoly& f, int N) {
    const QHType t = Fn.type;
    const int n = Fn.degree;
    std::map<int, QHPoly> C, K;
    C.emplace(n + 1, f);
    K.emplace(n, exact_quotient(directional(f, Fn), f));
    std::map<int, QHVF> Fc;
    for (int i = 1; i <= N; ++i) Fc.emplace(n + i, vf_component(F, t, n + i));
    for (int j = n + 2; j <= N; ++j) {
        Poly2 R;
        for (int i = 1; i <= j - n - 1; ++i) R += directional(C.at(j - i).poly, Fc.at(n + i).planar());
        for (int i = 1; i <= j - n - 2; ++i) R -= C.at(j - i).poly * K.at(n + i).poly;
        // R = ell_tilde(r1 x^j) + f r2 with r2 in P_{j-1}
        LinMap lt = op_ell_tilde(j, Fn, K.at(n));
        LinMap df = op_delta(n + j, f);
        auto monos = qh_basis(n + j, t);
        if (j % t.t1 != 0) throw Error(ErrorKind::UnsupportedShape, "no pure x monomial of degree " + std::to_string(j));
        std::vector<Vec> cols{coordinates(lt.apply(Poly2::monomial(j / t.t1, 0)), monos)};
        for (std::size_t c = 0; c < df.domain.size(); ++c) cols.push_back(df.matrix.column(c));
        Matrix A = Matrix::from_columns(cols, monos.size());
        if (rank(A) != monos.size() || cols.size() != monos.size())
            throw Error(ErrorKind::SmallDivisor, "curve recursion singular at k = " + std::to_string(j));
        Vec sol = *solve(A, coordinates(R, monos));
        C.emplace(j, QHPoly{Poly2::monomial(j / t.t1, 0, Rat(-sol[0])), j, t});
        Poly2 r2;
        for (std::size_t c = 0; c < df.domain.size(); ++c) r2 += df.domain[c] * sol[c + 1];
        K.emplace(j - 1, QHPoly{r2, j - 1, t});
    }
    InvariantCurve out;
    for (auto& [d, c] : C) out.curve_terms.push_back(c);
    for (auto& [d, k] : K) out.cofactor_terms.push_back(k);
    return out;
}

}  // namespace

Poly2 curve_residual(const PlanarVF& F, const InvariantCurve& curve, QHType t, int max_degree) {
    Poly2 c = curve.curve();
    Poly2 r = directional(c, F) - c * curve.cofactor();
    return r.truncated(t, max_degree);
}

CurvesResult formal_invariant_curves(const PlanarVF& F, QHType t, int N) {
    const int n = F.lowest_degree(t);
    QHVF Fn = vf_component(F, t, n);
    Splitting split = split_conservative_dissipative(Fn);
    QuadFactorization fac = factor_quadratic_in_y(split.h);
    CurvesResult out;
    out.N = N;
    out.checked_through = N + n;
    PlanarVF Ft = F.truncated(t, N);
    for (const auto& factor : fac.factors) {
        if (factor.multiplicity != 1 || factor.poly.degree_in_y() != 1) continue;
        Poly2 f;
        try {
            f = to_rational(factor.poly);
        } catch (const Error&) {
            continue;
        }
        InvariantCurve curve = branch(Ft, Fn, QHPoly::make(f, factor.degree, t), N);
        if (!curve_residual(Ft, curve, t, N + n).is_zero())
            throw Error(ErrorKind::Internal, "invariant curve residual is nonzero");
        out.curves.push_back(std::move(curve));
    }
    return out;
}

TruncatedIntegral truncated_first_integral(const PlanarVF& F, const QHPoly& leading_integral, int N) {
    const QHType t = leading_integral.type;
    const int n = F.lowest_degree(t), M = leading_integral.degree;
    QHVF Fn = vf_component(F, t, n);
    Splitting split = split_conservative_dissipative(Fn);
    std::map<int, Poly2> I{{M, leading_integral.poly}};
    TruncatedIntegral out;
    for (int j = M + 1; j <= N; ++j) {
        Poly2 S;
        for (int i = 1; i <= j - M; ++i) S += directional(I.at(j - i), vf_component(F, t, n + i).planar());
        LinMap L = op_ell(j + n, Fn, Exec::Serial);
        IntegralDegree entry{j, j + n, true, {}};
        auto sol = solve(L.matrix, L.codomain_coords(-S));
        if (!sol) {
            SubspaceAnalysis an = subspace_analysis(L, cyclic_preference(j + n, split.h, leading_integral));
            std::vector<Poly2> basis = an.range.elements;
            basis.insert(basis.end(), an.corange.elements.begin(), an.corange.elements.end());
            Vec c = coordinates_in(basis, -S, j + n, t);
            for (std::size_t i = 0; i < an.corange.dim(); ++i)
                entry.obstruction += an.corange.elements[i] * c[an.range.dim() + i];
            entry.solvable = false;
            out.complete = false;
            out.degrees.push_back(entry);
            break;
        }
        I.emplace(j, L.domain_poly(*sol));
        out.degrees.push_back(entry);
    }
    for (const auto& [d, p] : I) out.integral += p;
    return out;
}

Poly2 check_darboux_exponential(const PlanarVF& F, const std::vector<std::pair<Poly2, int>>& factors, const Poly2& g) {
    Poly2 pos(1), neg(1);
    for (const auto& [f, e] : factors) {
        if (e >= 0) pos *= f.pow(static_cast<unsigned>(e));
        else neg *= f.pow(static_cast<unsigned>(-e));
    }
    return neg * directional(pos, F) - pos * directional(neg, F) + pos * neg * directional(g, F);
}

SymmetryCheck check_lie_symmetry(const PlanarVF& F, const PlanarVF& G, const Poly2& mu, QHType t, int N) {
    SymmetryCheck out;
    out.residual = (lie_bracket(F, G) - mu * F).truncated(t, N);
    out.valid = out.residual.is_zero();
    out.linear_part_is_euler = vf_component(G, t, 0) == d0_field(t);
    out.leading_multiplier_matches = mu.coeff({0, 0}) == Rat(F.lowest_degree(t));
    return out;
}

}  // namespace qhnf
