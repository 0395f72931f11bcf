#pragma once

#include "qhnf/curves.hpp"
#include "qhnf/normal_form.hpp"

#include <random>

namespace qhnf::testing {

inline Rat frac(long p, long q) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Poly2 X(int a = 1) { return Poly2::monomial(a, 0); }
inline Poly2 Y(int b = 1) { return Poly2::monomial(0, b); }
inline Poly2 mono(int a, int b, const Rat& c) { return Poly2::monomial(a, b, c); }

// The cyclic B4 family with perturbation (a1 x y, b0 x^4 + b2 y^2).
inline PlanarVF family(const Rat& a1, const Rat& b0, const Rat& b2) {
    PlanarVF F;
    F.P = Y() + mono(2, 0, Rat(-1, 3)) + mono(1, 1, a1);
    F.Q = mono(3, 0, Rat(2)) + mono(1, 1, Rat(-2, 3)) + mono(4, 0, b0) + mono(0, 2, b2);
    return F;
}

inline constexpr QHType kType12{1, 2};

inline QHVF family_leading() { return vf_component(family(0, 0, 0), kType12, 1); }

inline QHPoly family_h() { return QHPoly::make(mono(4, 0, Rat(1, 2)) - mono(0, 2, Rat(1, 2)), 4, kType12); }

inline QHPoly family_integral() {
    return QHPoly::make((Y() - X(2)) * (Y() + X(2)).pow(2), 6, kType12);
}

// Deterministic random rationals and qh objects.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rat rat() {
        Rat q(uniform(-9, 9), uniform(1, 5));
        q.canonicalize();
        return q;
    }

    Poly2 qh_poly(int k, QHType t) {
        Poly2 p;
        for (Monomial m : qh_basis(k, t))
            if (uniform(0, 3) != 0) p.add_term(m, rat());
        return p;
    }

    QHPoly qh(int k, QHType t) { return {qh_poly(k, t), k, t}; }

    QHVF qhvf(int k, QHType t) { return {qh_poly(k + t.t1, t), qh_poly(k + t.t2, t), k, t}; }

    QHType type(int max) { return {uniform(1, max), uniform(1, max)}; }

private:
    std::mt19937 rng_;
};

}  // namespace qhnf::testing
