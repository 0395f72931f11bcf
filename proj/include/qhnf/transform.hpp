#pragma once

#include "qhnf/vectorfield.hpp"

#include <string>
#include <variant>
#include <vector>

namespace qhnf {

// (x, y)_old = (a x + b y, c x + d y)
struct LinearStep {
    Rat a, b, c, d;
};

// y_old = y + s x^power
struct ShearStep {
    Rat s;
    int power = 0;
};

// (x, y)_old = (alpha x, beta y), then time rescaled by the factor `time`.
struct ScaleStep {
    Rat alpha, beta, time;
};

// (x, y)_old = (x, y) + shift(x, y), then the field is multiplied by 1 + nu; truncated at vf-degree
// `truncation` for `type`.
struct GeneratorStep {
    PlanarVF shift;
    Poly2 nu;
    QHType type;
    int truncation = 0;
};

using TransformStep = std::variant<LinearStep, ShearStep, ScaleStep, GeneratorStep>;

PlanarVF apply_step(const PlanarVF& F, const TransformStep& step);
std::string describe(const TransformStep& step);

struct TransformLog {
    std::vector<TransformStep> steps;

    bool is_identity() const { return steps.empty(); }
    void append(TransformStep step) { steps.push_back(std::move(step)); }
    void extend(const TransformLog& other);
    PlanarVF replay(const PlanarVF& F) const;
    std::vector<std::string> describe() const;
};

// Substitutes (x, y) -> (X, Y), dropping qh-degrees above max_degree for type t.
Poly2 substitute(const Poly2& p, const Poly2& X, const Poly2& Y, QHType t, int max_degree);
// Exact substitution without truncation.
Poly2 substitute(const Poly2& p, const Poly2& X, const Poly2& Y);

}  // namespace qhnf
