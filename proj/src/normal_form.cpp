#include "qhnf/normal_form.hpp"

#include <algorithm>

namespace qhnf {

NormalFormContext::NormalFormContext(QHVF leading, std::optional<QHPoly> cyclic, int max_degree, Exec exec,
                                     CorangeOrder order)
    : leading_(std::move(leading)),
      split_(split_conservative_dissipative(leading_)),
      cyclic_(std::move(cyclic)),
      max_degree_(max_degree) {
    std::vector<DegreeData> items(static_cast<std::size_t>(std::max(0, max_degree)));
    for_each_index(
        items.size(),
        [&](std::size_t i) {
            const int m = static_cast<int>(i) + 1;
            DegreeData& d = items[i];
            d.degree = m;
            d.ell = op_ell(m, leading_, Exec::Serial);
            auto preference = cyclic_preference(m, split_.h, cyclic_);
            if (order == CorangeOrder::Reversed) std::reverse(preference.begin(), preference.end());
            d.analysis = subspace_analysis(d.ell, preference);
            std::vector<Vec> cols;
            auto monos = qh_basis(m, leading_.type);
            for (const auto& p : d.analysis.range.elements) cols.push_back(coordinates(p, monos));
            for (const auto& p : d.analysis.corange.elements) cols.push_back(coordinates(p, monos));
            d.range_corange = Matrix::from_columns(cols, monos.size());
            d.delta = delta_complement(split_.h, leading_.degree, m);
        },
        exec);
    for (auto& d : items) data_.emplace(d.degree, std::move(d));
}

const DegreeData& NormalFormContext::at(int degree) const {
    auto it = data_.find(degree);
    if (it == data_.end()) throw Error(ErrorKind::Internal, "degree " + std::to_string(degree) + " not prepared");
    return it->second;
}

QHVF homological_operator(const QHVF& Fn, const Generator& gen) {
    QHVF out = Rat(-1) * lie_bracket(Fn, gen.shift);
    if (!gen.nu.is_zero()) out -= gen.nu * Fn;
    return out;
}

namespace {

struct RangeSplit {
    Poly2 range_part;
    std::vector<Rat> corange_coords;
    Poly2 corange_part;
};

RangeSplit split_range(const DegreeData& d, const Poly2& v, QHType t) {
    auto monos = qh_basis(d.degree, t);
    auto sol = solve(d.range_corange, coordinates(v, monos));
    if (!sol) throw Error(ErrorKind::Internal, "range and corange do not span");
    RangeSplit out;
    const std::size_t nr = d.analysis.range.dim();
    for (std::size_t i = 0; i < nr; ++i) out.range_part += d.analysis.range.elements[i] * (*sol)[i];
    for (std::size_t i = 0; i < d.analysis.corange.dim(); ++i) {
        out.corange_coords.push_back((*sol)[nr + i]);
        out.corange_part += d.analysis.corange.elements[i] * (*sol)[nr + i];
    }
    return out;
}

QHPoly preimage(const DegreeData& d, const Poly2& v, QHType t) {
    auto sol = solve(d.ell.matrix, d.ell.codomain_coords(v));
    if (!sol) throw Error(ErrorKind::Internal, "range element without preimage");
    return {d.ell.domain_poly(*sol), d.ell.domain_degree, t};
}

}  // namespace

HomologicalSolution homological_solve(const QHVF& target, const NormalFormContext& ctx) {
    const QHVF& Fn = ctx.leading();
    const Splitting& split = ctx.splitting();
    const QHType t = Fn.type;
    const int n = Fn.degree, k = target.degree - n, w = t.weight();
    if (k < 1) throw Error(ErrorKind::Algebra, "homological equation needs degree above the leading part");
    const SubspaceBasis& delta_dom = ctx.at(k).delta;
    const SubspaceBasis& delta_cod = ctx.at(n + k).delta;
    auto c_coords = [&](const QHVF& v) {
        CDFDecomposition parts = cdf_decompose(v, Fn, split, delta_cod);
        return coordinates_in(delta_cod.elements, parts.g.poly, n + k + w, t);
    };

    // Conservative block.
    std::vector<QHVF> c_images;
    std::vector<Vec> cols;
    for (const auto& g : delta_dom.elements) {
        QHVF Xg = hamiltonian_field(QHPoly{g, k + w, t});
        c_images.push_back(homological_operator(Fn, {Xg, QHPoly::zero(k, t)}));
        cols.push_back(c_coords(c_images.back()));
    }
    Matrix C = Matrix::from_columns(cols, delta_cod.dim());
    if (delta_dom.dim() != delta_cod.dim() || rank(C) != delta_cod.dim()) {
        Rat bound = 1 + Rat(2 * (n + 1), k);
        throw Error(ErrorKind::SmallDivisor, "conservative block singular at k = " + std::to_string(k) +
                                                 " (|d| = " + to_string(bound) + ")");
    }
    Vec u = *solve(C, c_coords(target));
    Poly2 g_sol;
    QHVF T = target;
    for (std::size_t i = 0; i < u.size(); ++i) {
        g_sol += delta_dom.elements[i] * u[i];
        T -= u[i] * c_images[i];
    }

    // Dissipative block.
    CDFDecomposition parts = cdf_decompose(T, Fn, split, delta_cod);
    RangeSplit dsplit = split_range(ctx.at(n + k), parts.eta.poly, t);
    QHPoly mu = preimage(ctx.at(n + k), dsplit.range_part, t);
    QHVF muD0 = mu * d0_field(t);
    T -= homological_operator(Fn, {muD0, QHPoly::zero(k, t)});

    // Fn-block with the time factor.
    parts = cdf_decompose(T, Fn, split, delta_cod);
    QHPoly lambda = QHPoly::zero(k - n, t);
    QHPoly nu = QHPoly::zero(k, t);
    if (!parts.lambda.is_zero()) {
        RangeSplit fsplit = split_range(ctx.at(k), parts.lambda.poly, t);
        if (!fsplit.range_part.is_zero()) lambda = preimage(ctx.at(k), fsplit.range_part, t);
        nu = {-fsplit.corange_part, k, t};
    }
    QHVF shift = hamiltonian_field(QHPoly{g_sol, k + w, t});
    shift.degree = k;
    shift += muD0;
    if (!lambda.is_zero()) shift += lambda * Fn;
    Generator gen{shift, nu};
    HomologicalSolution out{gen, target - homological_operator(Fn, gen), dsplit.corange_coords};
    QHVF expected = QHPoly{dsplit.corange_part, n + k, t} * d0_field(t);
    if (!(out.residual.P == expected.P && out.residual.Q == expected.Q))
        throw Error(ErrorKind::Internal, "homological residual left the corange");
    return out;
}

PlanarVF apply_generator(const PlanarVF& F, const Generator& gen, int N) {
    return apply_step(F, GeneratorStep{gen.shift.planar(), gen.nu.poly, gen.shift.type, N});
}

std::string ObstructionSlot::label() const { return pattern ? pattern->label() : to_string(element); }

std::string to_string(Verdict::Kind kind) {
    switch (kind) {
    case Verdict::Kind::NotIntegrable: return "NotIntegrable";
    case Verdict::Kind::NoObstructionUpTo: return "NoObstructionUpTo";
    case Verdict::Kind::LeadingNotIntegrable: return "LeadingNotIntegrable";
    case Verdict::Kind::Unsupported: return "Unsupported";
    }
    return "?";
}

int Verdict::exit_code() const {
    switch (kind) {
    case Kind::NotIntegrable: return 10;
    case Kind::NoObstructionUpTo: return 11;
    case Kind::LeadingNotIntegrable: return 12;
    case Kind::Unsupported: return 13;
    }
    return 1;
}

std::string Verdict::describe() const {
    switch (kind) {
    case Kind::NotIntegrable:
        return "NotIntegrable: first obstruction at vf-degree " + std::to_string(degree) + " on " + pattern +
               " with coefficient " + to_string(coefficient);
    case Kind::NoObstructionUpTo: return "NoObstructionUpTo{N=" + std::to_string(N) + "}";
    case Kind::LeadingNotIntegrable: return "LeadingNotIntegrable: " + reason;
    case Kind::Unsupported: return "Unsupported: " + reason;
    }
    return "?";
}

std::vector<ObstructionSlot> NormalFormResult::obstructions() const {
    std::vector<ObstructionSlot> out;
    for (const auto& s : slots)
        if (s.coefficient != 0) out.push_back(s);
    return out;
}

namespace {

Verdict verdict_from_slots(const NormalFormResult& result) {
    Verdict v;
    for (const auto& s : result.slots) {
        if (s.coefficient == 0) continue;
        v.kind = Verdict::Kind::NotIntegrable;
        v.degree = s.vf_degree;
        v.coefficient = s.coefficient;
        v.pattern = s.label();
        v.N = result.truncation;
        return v;
    }
    v.kind = Verdict::Kind::NoObstructionUpTo;
    v.N = result.truncation;
    return v;
}

}  // namespace

Verdict integrability_verdict(const NormalFormResult& result) {
    if (!result.leading || !result.leading->integrable || result.leading->reason != LeadingReason::CyclicIntegral)
        return result.verdict;
    return verdict_from_slots(result);
}

namespace {

NormalFormResult reduce(PreformResult pre, int N, Exec exec, CorangeOrder order) {
    NormalFormResult out;
    out.truncation = N;
    const QHType t = pre.type;
    out.transform = pre.transform;
    PlanarVF current = pre.field;
    out.leading_part = vf_component(current, t, pre.r);
    out.preform = std::move(pre);
    const PreformResult& p = out.preform;
    auto finish = [&](Verdict::Kind kind, const std::string& reason) {
        out.verdict.kind = kind;
        out.verdict.reason = reason;
        out.verdict.N = N;
        out.normal_form = current.truncated(t, N);
        return out;
    };
    if (p.kind == PreformCase::A) return finish(Verdict::Kind::Unsupported, "case A (not monodromic)");
    out.leading = leading_verdict(out.leading_part, p);
    if (!out.leading->integrable)
        return finish(Verdict::Kind::LeadingNotIntegrable, to_string(out.leading->reason) +
                                                              (out.leading->note.empty() ? "" : ": " + out.leading->note));
    if (out.leading->reason == LeadingReason::HamiltonianQH)
        return finish(Verdict::Kind::Unsupported, "conservative leading part (case " + to_string(p.kind) + ")");
    if (p.kind != PreformCase::B4 || !p.scaled)
        return finish(Verdict::Kind::Unsupported, "leading part outside the normalised B4 family");

    const int n = p.r;
    if (N < n + 1)
        throw Error(ErrorKind::Algebra, "truncation " + std::to_string(N) + " is below the first perturbation degree " +
                                            std::to_string(n + 1));
    NormalFormContext ctx(out.leading_part, out.leading->integral, N, exec, order);
    current = current.truncated(t, N);
    for (int k = 1; n + k <= N; ++k) {
        QHVF target = vf_component(current, t, n + k);
        HomologicalSolution sol = homological_solve(target, ctx);
        const auto& an = ctx.at(n + k).analysis;
        for (std::size_t i = 0; i < an.corange.dim(); ++i)
            out.slots.push_back({n + k, an.corange.elements[i], an.corange_patterns[i], sol.coords[i]});
        if (sol.gen.shift.is_zero() && sol.gen.nu.is_zero()) continue;
        GeneratorStep step{sol.gen.shift.planar(), sol.gen.nu.poly, t, N};
        current = apply_step(current, step);
        out.transform.append(std::move(step));
        if (vf_component(current, t, n + k) != sol.residual)
            throw Error(ErrorKind::Internal, "reduction did not reach the residual at degree " + std::to_string(n + k));
    }
    out.normal_form = current;
    out.verdict = verdict_from_slots(out);
    return out;
}

}  // namespace

NormalFormResult orbital_normal_form(const PlanarVF& F, QHType t, int N, Exec exec, CorangeOrder order) {
    PreformResult pre = classify_preform(F, std::max(N, 8) + 8);
    if (pre.type != t)
        throw Error(ErrorKind::TypeMismatch, "preform type " + to_string(pre.type) + " differs from " + to_string(t));
    return reduce(std::move(pre), N, exec, order);
}

NormalFormResult orbital_normal_form(const PlanarVF& F, int N, Exec exec, CorangeOrder order) {
    PreformResult pre = classify_preform(F, std::max(N, 8) + 8);
    if (N <= 0) {
        N = 2 * pre.n + 2;
        if (pre.kind == PreformCase::B4 && pre.d.kind == DValue::Kind::Exact && pre.d.value > -1 && pre.d.value < 1) {
            auto [m1, m2] = find_m1_m2(pre.d.value);
            N += (pre.n + 1) * (m1 + m2);
        }
    }
    return reduce(std::move(pre), N, exec, order);
}

}  // namespace qhnf
