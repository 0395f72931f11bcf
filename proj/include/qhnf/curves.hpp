#pragma once

#include "qhnf/homological.hpp"

#include <utility>
#include <vector>

namespace qhnf {

struct InvariantCurve {
    std::vector<QHPoly> curve_terms;     // C_{n+1}, ..., C_N
    std::vector<QHPoly> cofactor_terms;  // K_n, ..., K_{N-1}
    Poly2 curve() const;
    Poly2 cofactor() const;
};

struct CurvesResult {
    std::vector<InvariantCurve> curves;
    int N = 0;
    int checked_through = 0;  // residual verified zero up to this qh-degree
};

// Formal invariant curves grad(C).F = K C through the simple branches y - c x^{n+1} of h.
CurvesResult formal_invariant_curves(const PlanarVF& F, QHType t, int N);
// grad(C).F - K C with every qh-degree up to max_degree kept.
Poly2 curve_residual(const PlanarVF& F, const InvariantCurve& curve, QHType t, int max_degree);

struct IntegralDegree {
    int degree = 0;           // degree of I_j
    int equation_degree = 0;  // degree of the condition on grad(I).F
    bool solvable = true;
    Poly2 obstruction;
};

struct TruncatedIntegral {
    Poly2 integral;
    std::vector<IntegralDegree> degrees;
    bool complete = true;
};

// I = I_M + sum_{j=M+1}^{N} I_j with grad(I).F = 0 degree by degree.
TruncatedIntegral truncated_first_integral(const PlanarVF& F, const QHPoly& leading_integral, int N);

// Numerator of grad(P).F + P grad(g).F for P = prod f_i^{e_i}, cleared by the negative-exponent factors.
Poly2 check_darboux_exponential(const PlanarVF& F, const std::vector<std::pair<Poly2, int>>& factors, const Poly2& g);

struct SymmetryCheck {
    PlanarVF residual;  // [F, G] - mu F up to vf-degree N
    bool valid = false;
    bool linear_part_is_euler = false;
    bool leading_multiplier_matches = false;
};

SymmetryCheck check_lie_symmetry(const PlanarVF& F, const PlanarVF& G, const Poly2& mu, QHType t, int N);

}  // namespace qhnf
