#include "qhnf/transform.hpp"

#include <climits>

namespace qhnf {

namespace {

Poly2 mul_bounded(const Poly2& l, const Poly2& r, QHType t, int max_degree) {
    return max_degree == INT_MAX ? l * r : mul_truncated(l, r, t, max_degree);
}

Poly2 substitute_impl(const Poly2& p, const Poly2& X, const Poly2& Y, QHType t, int max_degree) {
    int max_a = 0, max_b = 0;
    for (const auto& [m, c] : p.terms()) {
        max_a = std::max(max_a, m.a);
        max_b = std::max(max_b, m.b);
    }
    std::vector<Poly2> xp{Poly2(1)}, yp{Poly2(1)};
    for (int i = 1; i <= max_a; ++i) xp.push_back(mul_bounded(xp.back(), X, t, max_degree));
    for (int i = 1; i <= max_b; ++i) yp.push_back(mul_bounded(yp.back(), Y, t, max_degree));
    Poly2 out;
    for (const auto& [m, c] : p.terms()) out += mul_bounded(xp[m.a], yp[m.b], t, max_degree) * c;
    return out;
}

PlanarVF apply_generator_step(const PlanarVF& F, const GeneratorStep& g) {
    const QHType t = g.type;
    const int N = g.truncation;
    const int bound_p = N + t.t1, bound_q = N + t.t2, bound = std::max(bound_p, bound_q);
    Poly2 X = Poly2::x() + g.shift.P, Y = Poly2::y() + g.shift.Q;
    PlanarVF G{substitute_impl(F.P, X, Y, t, bound).truncated(t, bound_p),
               substitute_impl(F.Q, X, Y, t, bound).truncated(t, bound_q)};
    // (I + DP) W = G solved by W <- G - DP W.
    const Poly2 p1x = g.shift.P.dx(), p1y = g.shift.P.dy(), p2x = g.shift.Q.dx(), p2y = g.shift.Q.dy();
    PlanarVF W = G;
    for (int iter = 0; iter < 4 * (N + bound) + 8; ++iter) {
        PlanarVF next{G.P - mul_truncated(p1x, W.P, t, bound_p) - mul_truncated(p1y, W.Q, t, bound_p),
                      G.Q - mul_truncated(p2x, W.P, t, bound_q) - mul_truncated(p2y, W.Q, t, bound_q)};
        if (next == W) break;
        W = std::move(next);
    }
    if (!g.nu.is_zero()) {
        W.P += mul_truncated(g.nu, W.P, t, bound_p);
        W.Q += mul_truncated(g.nu, W.Q, t, bound_q);
    }
    return W;
}

}  // namespace

Poly2 substitute(const Poly2& p, const Poly2& X, const Poly2& Y, QHType t, int max_degree) {
    return substitute_impl(p, X, Y, t, max_degree);
}

Poly2 substitute(const Poly2& p, const Poly2& X, const Poly2& Y) { return substitute_impl(p, X, Y, {1, 1}, INT_MAX); }

PlanarVF apply_step(const PlanarVF& F, const TransformStep& step) {
    return std::visit(
        [&](const auto& s) -> PlanarVF {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, LinearStep>) {
                Rat det = s.a * s.d - s.b * s.c;
                if (det == 0) throw Error(ErrorKind::Algebra, "singular linear change of coordinates");
                Poly2 X = Poly2::x() * s.a + Poly2::y() * s.b;
                Poly2 Y = Poly2::x() * s.c + Poly2::y() * s.d;
                Poly2 P = substitute(F.P, X, Y), Q = substitute(F.Q, X, Y);
                return {(P * s.d - Q * s.b) / det, (Q * s.a - P * s.c) / det};
            } else if constexpr (std::is_same_v<S, ShearStep>) {
                Poly2 Y = Poly2::y() + Poly2::monomial(s.power, 0, s.s);
                Poly2 P = substitute(F.P, Poly2::x(), Y), Q = substitute(F.Q, Poly2::x(), Y);
                Poly2 dshear = Poly2::monomial(s.power - 1, 0, Rat(s.s * s.power));
                return {P, Q - dshear * P};
            } else if constexpr (std::is_same_v<S, ScaleStep>) {
                Poly2 X = Poly2::monomial(1, 0, s.alpha), Y = Poly2::monomial(0, 1, s.beta);
                Poly2 P = substitute(F.P, X, Y), Q = substitute(F.Q, X, Y);
                return {P * Rat(s.time / s.alpha), Q * Rat(s.time / s.beta)};
            } else {
                return apply_generator_step(F, s);
            }
        },
        step);
}

std::string describe(const TransformStep& step) {
    return std::visit(
        [](const auto& s) -> std::string {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, LinearStep>) {
                return "linear (x,y) -> (" + to_string(s.a) + "*x + " + to_string(s.b) + "*y, " + to_string(s.c) +
                       "*x + " + to_string(s.d) + "*y)";
            } else if constexpr (std::is_same_v<S, ShearStep>) {
                return "shear y -> y + " + to_string(Poly2::monomial(s.power, 0, s.s));
            } else if constexpr (std::is_same_v<S, ScaleStep>) {
                return "scale (x,y) -> (" + to_string(s.alpha) + "*x, " + to_string(s.beta) + "*y), time factor " +
                       to_string(s.time);
            } else {
                return "generator " + to_string(s.shift) + ", time factor 1 + " + to_string(s.nu) + ", truncated at " +
                       std::to_string(s.truncation);
            }
        },
        step);
}

void TransformLog::extend(const TransformLog& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

PlanarVF TransformLog::replay(const PlanarVF& F) const {
    PlanarVF out = F;
    for (const auto& s : steps) out = apply_step(out, s);
    return out;
}

std::vector<std::string> TransformLog::describe() const {
    std::vector<std::string> out;
    for (const auto& s : steps) out.push_back(qhnf::describe(s));
    return out;
}

}  // namespace qhnf
