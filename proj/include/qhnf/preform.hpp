#pragma once

#include "qhnf/transform.hpp"

#include <optional>
#include <string>

namespace qhnf {

enum class PreformCase { A, B1, B2, B3, B4 };
std::string to_string(PreformCase c);

// The invariant d; kept unscaled when only d^2 is rational.
struct DValue {
    enum class Kind { Exact, IrrationalSquare, Zero };
    Kind kind = Kind::Zero;
    Rat value;  // d for Exact, d^2 for IrrationalSquare
    int sign = 0;

    static DValue from(const Rat& numerator, const Rat& abs_A);
    std::string describe() const;
    friend bool operator==(const DValue&, const DValue&) = default;
};

// x' = y + x f1(x) + y f(x,y),  y' = g1(x) + y g2(x) + y^2 g(x,y)
struct TaylorShape {
    Poly1 f1, g1, g2;
    Poly2 f, g;
    std::optional<int> M;  // lowest degree of g1
    std::optional<int> N;  // lowest degree among f1, g2
};

struct PreformResult {
    PreformCase kind = PreformCase::A;
    int n = 0;
    QHType type;
    int r = 0;  // vf-degree of the leading part
    int sigma = 0;
    DValue d;
    Rat b;      // case A coefficient of x^n y
    Rat A;      // the quantity A before scaling (B cases)
    bool scaled = false;
    PlanarVF field;
    TransformLog transform;
};

// Brings a nilpotent linear part to (y, 0) by a rational linear change.
PlanarVF nilpotent_linear_normalize(const PlanarVF& F, TransformLog* log = nullptr);
TaylorShape taylor_shape(const PlanarVF& F);
DValue compute_d(const Rat& a, const Rat& b, const Rat& c, int n);
// Leading part (y + a x^{n+1}, b x^n y + c x^{2n+1}) with t = (1, n+1).
DValue compute_d(const QHVF& Fn);
PreformResult classify_preform(const PlanarVF& F, int max_degree = 64);

}  // namespace qhnf
