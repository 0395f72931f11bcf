#include "qhnf/preform.hpp"

namespace qhnf {

std::string to_string(PreformCase c) {
    switch (c) {
    case PreformCase::A: return "A";
    case PreformCase::B1: return "B1";
    case PreformCase::B2: return "B2";
    case PreformCase::B3: return "B3";
    case PreformCase::B4: return "B4";
    }
    return "?";
}

DValue DValue::from(const Rat& numerator, const Rat& abs_A) {
    if (numerator == 0) return {Kind::Zero, Rat(0), 0};
    Rat sq = numerator * numerator / abs_A, root;
    int s = sgn(numerator);
    if (rational_sqrt(sq, root)) return {Kind::Exact, Rat(s * root), s};
    return {Kind::IrrationalSquare, sq, s};
}

std::string DValue::describe() const {
    switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Exact: return to_string(value);
    case Kind::IrrationalSquare: return std::string(sign < 0 ? "-" : "") + "sqrt(" + to_string(value) + ")";
    }
    return "?";
}

PlanarVF nilpotent_linear_normalize(const PlanarVF& F, TransformLog* log) {
    Rat p10 = F.P.coeff({1, 0}), p01 = F.P.coeff({0, 1}), q10 = F.Q.coeff({1, 0}), q01 = F.Q.coeff({0, 1});
    if (F.P.coeff({0, 0}) != 0 || F.Q.coeff({0, 0}) != 0)
        throw Error(ErrorKind::UnsupportedShape, "the origin is not an equilibrium");
    if (p10 + q01 != 0 || p10 * q01 - p01 * q10 != 0 ||
        (p10 == 0 && p01 == 0 && q10 == 0 && q01 == 0))
        throw Error(ErrorKind::UnsupportedShape, "linear part is not nilpotent and nonzero");
    if (p10 == 0 && p01 == 1 && q10 == 0 && q01 == 0) return F;
    // Columns v1 = A v2, v2 with A v2 != 0 give A [v1 v2] = [v1 v2] J.
    Rat v2x = 0, v2y = 1;
    if (p01 == 0 && q01 == 0) {
        v2x = 1;
        v2y = 0;
    }
    Rat v1x = p10 * v2x + p01 * v2y, v1y = q10 * v2x + q01 * v2y;
    LinearStep step{v1x, v2x, v1y, v2y};
    if (log) log->append(step);
    return apply_step(F, step);
}

namespace {

Poly1 x_part(const Poly2& p, int y_power, int x_shift) {
    std::vector<Rat> c;
    for (const auto& [m, v] : p.terms()) {
        if (m.b != y_power) continue;
        int e = m.a - x_shift;
        if (e < 0) throw Error(ErrorKind::Internal, "unexpected monomial in Taylor split");
        if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1);
        c[static_cast<std::size_t>(e)] = v;
    }
    return Poly1(std::move(c));
}

std::optional<int> low(const Poly1& p) {
    if (p.is_zero()) return std::nullopt;
    return p.low_degree();
}

}  // namespace

TaylorShape taylor_shape(const PlanarVF& F) {
    if (F.P.coeff({0, 1}) != 1 || F.P.coeff({1, 0}) != 0 || F.Q.coeff({1, 0}) != 0 || F.Q.coeff({0, 1}) != 0 ||
        F.P.coeff({0, 0}) != 0 || F.Q.coeff({0, 0}) != 0)
        throw Error(ErrorKind::UnsupportedShape, "linear part is not (y, 0)");
    TaylorShape s;
    s.f1 = x_part(F.P, 0, 1);
    s.g1 = x_part(F.Q, 0, 0);
    s.g2 = x_part(F.Q, 1, 0);
    for (const auto& [m, c] : F.P.terms())
        if (m.b >= 1 && !(m.a == 0 && m.b == 1)) s.f.add_term({m.a, m.b - 1}, c);
    for (const auto& [m, c] : F.Q.terms())
        if (m.b >= 2) s.g.add_term({m.a, m.b - 2}, c);
    s.M = low(s.g1);
    auto nf = low(s.f1), ng = low(s.g2);
    if (nf && ng) s.N = std::min(*nf, *ng);
    else if (nf) s.N = nf;
    else s.N = ng;
    return s;
}

DValue compute_d(const Rat& a, const Rat& b, const Rat& c, int n) {
    Rat n1(n + 1);
    Rat diff = b - a * n1;
    Rat scaledA = c + diff * diff / (4 * n1);  // (n+1) A
    Rat numer = (b + n1 * a) / (2 * n1);
    if (scaledA == 0) {
        if (numer == 0) return {DValue::Kind::Zero, Rat(0), 0};
        return {DValue::Kind::Exact, numer, sgn(numer)};
    }
    Rat absA = scaledA / n1;
    if (absA < 0) absA = -absA;
    return DValue::from(numer, absA);
}

DValue compute_d(const QHVF& Fn) {
    const int n = Fn.degree;
    if (Fn.type != QHType{1, n + 1}) throw Error(ErrorKind::TypeMismatch, "leading part is not of type (1, n+1)");
    if (Fn.P.coeff({0, 1}) != 1) throw Error(ErrorKind::UnsupportedShape, "leading part does not start with y");
    return compute_d(Fn.P.coeff({n + 1, 0}), Fn.Q.coeff({n, 1}), Fn.Q.coeff({2 * n + 1, 0}), n);
}

PreformResult classify_preform(const PlanarVF& input, int max_degree) {
    PreformResult out;
    PlanarVF F = nilpotent_linear_normalize(input, &out.transform);
    const int max_rounds = std::max(1, (max_degree + 1) / 2);
    for (int round = 0; round <= max_rounds; ++round) {
        TaylorShape s = taylor_shape(F);
        if (!s.M && !s.N) throw Error(ErrorKind::NonIsolated, "the singular point is not isolated");
        const long big = 1L << 40;
        long M = s.M ? *s.M : big, N = s.N ? *s.N : big;
        if (M % 2 == 0 && M < 2 * N + 1) {
            int n = static_cast<int>(M / 2);
            Rat c = s.g1.coeffs()[static_cast<std::size_t>(M)];
            out.kind = PreformCase::B1;
            out.n = n;
            out.type = {2, 2 * n + 1};
            out.r = 2 * n - 1;
            // x -> c x, y -> c^{n+1} y, time by c^{-n} gives (y, x^{2n}).
            if (c != 1) {
                Rat beta = 1, time = 1;
                for (int i = 0; i <= n; ++i) beta *= c;
                for (int i = 0; i < n; ++i) time /= c;
                ScaleStep step{c, beta, time};
                out.transform.append(step);
                F = apply_step(F, step);
                out.scaled = true;
            }
            out.field = F;
            return out;
        }
        int n;
        Rat a = 0, b = 0, c = 0;
        if (M < 2 * N + 1) {
            n = static_cast<int>((M - 1) / 2);
            c = s.g1.coeffs()[static_cast<std::size_t>(M)];
        } else {
            n = static_cast<int>(N);
            if (s.f1.degree() >= n) a = s.f1.coeffs()[static_cast<std::size_t>(n)];
            if (s.g2.degree() >= n) b = s.g2.coeffs()[static_cast<std::size_t>(n)];
            if (M == 2 * N + 1) c = s.g1.coeffs()[static_cast<std::size_t>(M)];
        }
        out.n = n;
        out.type = {1, n + 1};
        out.r = n;
        const Rat n1(n + 1);
        if (c == a * b) {
            if (a != 0) {
                ShearStep step{Rat(-a), n + 1};
                out.transform.append(step);
                F = apply_step(F, step);
            }
            Rat bnew = b + n1 * a;
            if (bnew != 0) {
                out.kind = PreformCase::A;
                out.b = bnew;
                out.field = F;
                return out;
            }
            continue;
        }
        Rat diff = b - a * n1;
        Rat scaledA = c + diff * diff / (4 * n1);
        out.A = scaledA / n1;
        out.d = compute_d(a, b, c, n);
        Rat shift = b / (2 * n1) - a / 2;
        if (shift != 0) {
            ShearStep step{shift, n + 1};
            out.transform.append(step);
            F = apply_step(F, step);
        }
        if (scaledA == 0) {
            out.kind = PreformCase::B3;
            out.sigma = 0;
            out.field = F;
            return out;
        }
        out.sigma = sgn(out.A);
        out.kind = out.sigma < 0 ? PreformCase::B2 : PreformCase::B4;
        Rat absA = out.A < 0 ? Rat(-out.A) : out.A, root;
        if (absA != 1 && rational_sqrt(absA, root)) {
            // y -> sqrt|A| y with time 1/sqrt|A| brings A to sigma.
            ScaleStep step{Rat(1), root, Rat(1 / root)};
            out.transform.append(step);
            F = apply_step(F, step);
            out.scaled = true;
        } else if (absA == 1) {
            out.scaled = true;
        }
        out.field = F;
        return out;
    }
    throw Error(ErrorKind::Undecided, "preform undecided within the truncation degree");
}

}  // namespace qhnf
