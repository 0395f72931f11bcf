#pragma once

#include "qhnf/linalg.hpp"
#include "qhnf/parallel.hpp"
#include "qhnf/vectorfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhnf {

// Linear map between spaces of qh polynomials, matrix in the given bases.
struct LinMap {
    std::vector<Poly2> domain;
    std::vector<Poly2> codomain;
    int domain_degree = 0;
    int codomain_degree = 0;
    QHType type;
    Matrix matrix;

    Vec domain_coords(const Poly2& p) const;
    Vec codomain_coords(const Poly2& p) const;
    Poly2 domain_poly(const Vec& v) const;
    Poly2 codomain_poly(const Vec& v) const;
    Poly2 apply(const Poly2& p) const;
};

// x^a * h^c * I^i
struct Pattern {
    int x_power = 0;
    int h_power = 0;
    int cyclic_power = 0;
    std::string label() const;
    friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct Preferred {
    Poly2 poly;
    Pattern pattern;
};

struct SubspaceAnalysis {
    SubspaceBasis kernel;
    SubspaceBasis range;
    SubspaceBasis corange;
    // Pattern of each corange element when it came from the preference list.
    std::vector<std::optional<Pattern>> corange_patterns;
};

// Candidates x^a h^c I^i of degree j, higher powers of I first, then of h.
std::vector<Preferred> cyclic_preference(int j, const QHPoly& h, const std::optional<QHPoly>& cyclic);

SubspaceAnalysis subspace_analysis(const LinMap& L, const std::vector<Preferred>& preference = {});

// mu -> grad(mu).F_n, P_{k-n} -> P_k
LinMap op_ell(int k, const QHVF& Fn, Exec exec = Exec::Parallel);
// g -> Proj_Delta grad(g).(F_n - (n+|t|)/(n+k+|t|) mu D0), Delta_{k+|t|} -> Delta_{n+k+|t|}
LinMap op_ell_c(int k, const QHVF& Fn, const Splitting& split, const SubspaceBasis& delta_domain,
                const SubspaceBasis& delta_codomain);
// p -> p*f, P_{k-deg f} -> P_k
LinMap op_delta(int k, const QHPoly& f);
// p -> grad(p).(F_n - K_n D0 / k), P_k -> P_{n+k}
LinMap op_ell_tilde(int k, const QHVF& Fn, const QHPoly& Kn);

// Ker(ell_k) computed and checked against span{I^l} when k-n = l*M, {0} otherwise.
SubspaceBasis kernel_ell_structure(int k, const QHVF& Fn, const QHPoly& cyclic, int M);
// I * Cor(ell_k), checked to complement Range(ell_{k+M}).
SubspaceBasis corange_cyclic(int k, const SubspaceBasis& corange_k, const QHPoly& cyclic, const QHVF& Fn);
// True when span(range) + span(candidate) is a direct sum filling P_degree.
bool is_complement(const SubspaceBasis& range, const SubspaceBasis& candidate);

}  // namespace qhnf
