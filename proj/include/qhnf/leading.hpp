#pragma once

#include "qhnf/preform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhnf {

// f(x, y) = x^x_power y^y_power f_hom(x^t2, y^t1), f_hom homogeneous in (X, Y).
struct HomReduction {
    int x_power = 0;
    int y_power = 0;
    Poly2 f_hom;
    int hom_degree = 0;
};
HomReduction hom_reduce(const QHPoly& f);

// True when mu != 0 and h has a repeated factor.
bool multiple_factor_obstruction(const QHPoly& h, const QHPoly& mu);

// Coprime m1, m2 > 0 with d = (m1 - m2)/(m1 + m2); needs |d| < 1.
std::pair<int, int> find_m1_m2(const Rat& d);

struct ResidueAssignment {
    std::optional<int> x_exponent;  // n_x + 1 when x divides h
    std::optional<int> y_exponent;  // n_y + 1 when y divides h
    std::vector<int> root_exponents;  // n_i + 1 per root
    std::vector<GaussRat> roots;
    int M0 = 0;
    Poly2 integral;
};

// Solves the residue conditions for the leading part F_r = X_h + mu D0; nullopt when no admissible
// exponents exist up to the cap on M0.
std::optional<ResidueAssignment> residue_conditions_check(const Splitting& split, int r, int cap = 512);

enum class LeadingReason { HamiltonianQH, CyclicIntegral, MultipleFactorObstruction, ResidueUnsolvable,
                           UnsupportedRootField };
std::string to_string(LeadingReason r);

struct LeadingVerdict {
    bool integrable = false;
    LeadingReason reason = LeadingReason::ResidueUnsolvable;
    std::optional<int> m1, m2, M;
    std::optional<QHPoly> integral;
    std::string note;
};

LeadingVerdict leading_verdict(const QHVF& Fr, const PreformResult& preform);

}  // namespace qhnf
