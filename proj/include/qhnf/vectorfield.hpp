#pragma once

#include "qhnf/poly.hpp"

#include <vector>

namespace qhnf {

// x' = P, y' = Q
struct PlanarVF {
    Poly2 P;
    Poly2 Q;

    bool is_zero() const { return P.is_zero() && Q.is_zero(); }
    PlanarVF& operator+=(const PlanarVF& o);
    PlanarVF& operator-=(const PlanarVF& o);
    friend PlanarVF operator+(PlanarVF l, const PlanarVF& r) { return l += r; }
    friend PlanarVF operator-(PlanarVF l, const PlanarVF& r) { return l -= r; }
    friend PlanarVF operator*(const Poly2& f, const PlanarVF& v) { return {f * v.P, f * v.Q}; }
    friend bool operator==(const PlanarVF&, const PlanarVF&) = default;

    // Keeps the components of vf-degree at most max_degree.
    PlanarVF truncated(QHType t, int max_degree) const;
    // Smallest vf-degree present; throws on the zero field.
    int lowest_degree(QHType t) const;
};

std::string to_string(const PlanarVF& v);

// Quasi-homogeneous vector field of vf-degree k: P in P_{k+t1}, Q in P_{k+t2}.
struct QHVF {
    Poly2 P;
    Poly2 Q;
    int degree = 0;
    QHType type;

    static QHVF make(Poly2 P, Poly2 Q, int k, QHType t);
    static QHVF zero(int k, QHType t) { return {Poly2(), Poly2(), k, t}; }
    bool is_zero() const { return P.is_zero() && Q.is_zero(); }
    PlanarVF planar() const { return {P, Q}; }

    QHVF& operator+=(const QHVF& o);
    QHVF& operator-=(const QHVF& o);
    friend QHVF operator+(QHVF l, const QHVF& r) { return l += r; }
    friend QHVF operator-(QHVF l, const QHVF& r) { return l -= r; }
    friend QHVF operator*(const Rat& s, QHVF v) {
        v.P *= s;
        v.Q *= s;
        return v;
    }
    friend QHVF operator*(const QHPoly& f, const QHVF& v);
    friend bool operator==(const QHVF&, const QHVF&) = default;
};

QHVF vf_component(const PlanarVF& F, QHType t, int k);
std::vector<QHVF> vf_qh_expansion(const PlanarVF& F, QHType t);

struct Splitting {
    QHPoly h;   // Hamiltonian part
    QHPoly mu;  // multiplier of the Euler field
};

// F = X_h + mu*D0
Splitting split_conservative_dissipative(const QHVF& F);
QHPoly wedge(const QHVF& A, const QHVF& B);
QHPoly divergence(const QHVF& F);
QHVF hamiltonian_field(const QHPoly& h);
QHVF d0_field(QHType t);
PlanarVF lie_bracket(const PlanarVF& F, const PlanarVF& G);
QHVF lie_bracket(const QHVF& F, const QHVF& G);
Poly2 directional(const Poly2& f, const PlanarVF& F);
QHPoly directional(const QHPoly& f, const QHVF& F);

// Coordinates of v in the basis formed by the given polynomials; throws when v is outside their span
// or the polynomials are dependent.
std::vector<Rat> coordinates_in(const std::vector<Poly2>& basis, const Poly2& v, int degree, QHType t);

// Greedy graded-lex monomial complement Delta of h*P_{k-n} in P_{k+|t|}.
SubspaceBasis delta_complement(const QHPoly& h, int n, int k);
// Throws InvalidComplement unless span(delta) + h*P_{k-n} = P_{k+|t|} is direct.
void validate_delta(const SubspaceBasis& delta, const QHPoly& h, int n, int k);

struct CDFDecomposition {
    QHPoly g;       // conservative part X_g, g in Delta
    QHPoly eta;     // dissipative part eta*D0
    QHPoly lambda;  // part lambda*F_n
};

// P_k = X_g + eta*D0 + lambda*F_n.
CDFDecomposition cdf_decompose(const QHVF& Pk, const QHVF& Fn, const Splitting& split, const SubspaceBasis& delta);
QHVF cdf_compose(const CDFDecomposition& parts, const QHVF& Fn);

}  // namespace qhnf
