#pragma once

#include "qhnf/homological.hpp"
#include "qhnf/leading.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qhnf {

// Data for degree m: ell_m with its preferred corange, and Delta_{m+|t|}.
struct DegreeData {
    int degree = 0;
    LinMap ell;
    SubspaceAnalysis analysis;
    Matrix range_corange;  // columns: range basis then corange basis, monomial coordinates
    SubspaceBasis delta;
};

// Order in which corange candidates are tried: the cyclic preference list, or the same list reversed.
enum class CorangeOrder { Cyclic, Reversed };

class NormalFormContext {
public:
    NormalFormContext(QHVF leading, std::optional<QHPoly> cyclic, int max_degree, Exec exec = Exec::Parallel,
                      CorangeOrder order = CorangeOrder::Cyclic);

    const QHVF& leading() const { return leading_; }
    const Splitting& splitting() const { return split_; }
    const std::optional<QHPoly>& cyclic() const { return cyclic_; }
    int max_degree() const { return max_degree_; }
    const DegreeData& at(int degree) const;

private:
    QHVF leading_;
    Splitting split_;
    std::optional<QHPoly> cyclic_;
    int max_degree_;
    std::map<int, DegreeData> data_;
};

struct Generator {
    QHVF shift;  // P_k
    QHPoly nu;   // time factor nu_k
};

struct HomologicalSolution {
    Generator gen;
    QHVF residual;            // in Cor(ell_{n+k}) D0
    std::vector<Rat> coords;  // residual on the corange basis of ell_{n+k}
};

// -[F_n, P] - nu F_n
QHVF homological_operator(const QHVF& Fn, const Generator& gen);
HomologicalSolution homological_solve(const QHVF& target, const NormalFormContext& ctx);
PlanarVF apply_generator(const PlanarVF& F, const Generator& gen, int N);

struct ObstructionSlot {
    int vf_degree = 0;
    Poly2 element;
    std::optional<Pattern> pattern;
    Rat coefficient;
    std::string label() const;
};

struct Verdict {
    enum class Kind { NotIntegrable, NoObstructionUpTo, LeadingNotIntegrable, Unsupported };
    Kind kind = Kind::Unsupported;
    int degree = 0;
    Rat coefficient;
    std::string pattern;
    int N = 0;
    std::string reason;

    int exit_code() const;
    std::string describe() const;
};
std::string to_string(Verdict::Kind kind);

struct NormalFormResult {
    PreformResult preform;
    std::optional<LeadingVerdict> leading;
    QHVF leading_part;
    std::vector<ObstructionSlot> slots;  // every corange slot visited, zero coefficients included
    PlanarVF normal_form;
    TransformLog transform;
    int truncation = 0;
    Verdict verdict;

    std::vector<ObstructionSlot> obstructions() const;
};

// F must be in preform for type t (the preform step is applied again and must agree on t).
NormalFormResult orbital_normal_form(const PlanarVF& F, QHType t, int N, Exec exec = Exec::Parallel,
                                     CorangeOrder order = CorangeOrder::Cyclic);
// Uses the type found by the preform and N = M + 2n + 2 when N <= 0.
NormalFormResult orbital_normal_form(const PlanarVF& F, int N = 0, Exec exec = Exec::Parallel,
                                     CorangeOrder order = CorangeOrder::Cyclic);
Verdict integrability_verdict(const NormalFormResult& result);

}  // namespace qhnf
