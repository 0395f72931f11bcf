#include "qhnf/leading.hpp"

#include <numeric>

namespace qhnf {

std::string to_string(LeadingReason r) {
    switch (r) {
    case LeadingReason::HamiltonianQH: return "HamiltonianQH";
    case LeadingReason::CyclicIntegral: return "CyclicIntegral";
    case LeadingReason::MultipleFactorObstruction: return "MultipleFactorObstruction";
    case LeadingReason::ResidueUnsolvable: return "ResidueUnsolvable";
    case LeadingReason::UnsupportedRootField: return "UnsupportedRootField";
    }
    return "?";
}

HomReduction hom_reduce(const QHPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::Algebra, "hom reduction of zero");
    const int g = std::gcd(f.type.t1, f.type.t2);
    const int u1 = f.type.t1 / g, u2 = f.type.t2 / g;
    HomReduction out;
    out.x_power = out.y_power = 1 << 30;
    for (const auto& [m, c] : f.poly.terms()) {
        out.x_power = std::min(out.x_power, m.a);
        out.y_power = std::min(out.y_power, m.b);
    }
    out.hom_degree = -1;
    for (const auto& [m, c] : f.poly.terms()) {
        int da = m.a - out.x_power, db = m.b - out.y_power;
        if (da % u2 != 0 || db % u1 != 0) throw Error(ErrorKind::Internal, "monomial does not reduce");
        out.f_hom.add_term({da / u2, db / u1}, c);
        out.hom_degree = da / u2 + db / u1;
    }
    return out;
}

namespace {

// h_hom(1, Y) as a univariate polynomial in Y.
Poly1 dehomogenize_y(const Poly2& hom) {
    std::vector<Rat> c;
    for (const auto& [m, v] : hom.terms()) {
        if (c.size() <= static_cast<std::size_t>(m.b)) c.resize(static_cast<std::size_t>(m.b) + 1);
        c[static_cast<std::size_t>(m.b)] += v;
    }
    return Poly1(std::move(c));
}

Poly1 dehomogenize_x(const Poly2& hom) {
    std::vector<Rat> c;
    for (const auto& [m, v] : hom.terms()) {
        if (c.size() <= static_cast<std::size_t>(m.a)) c.resize(static_cast<std::size_t>(m.a) + 1);
        c[static_cast<std::size_t>(m.a)] += v;
    }
    return Poly1(std::move(c));
}

}  // namespace

bool multiple_factor_obstruction(const QHPoly& h, const QHPoly& mu) {
    if (mu.is_zero() || h.is_zero()) return false;
    const int g = std::gcd(h.type.t1, h.type.t2);
    HomReduction red = hom_reduce(h);
    Poly1 py = dehomogenize_y(red.f_hom);
    // X-power in f_hom shows up as a drop of the Y-degree.
    int x_in_hom = red.hom_degree - py.degree();
    int x_mult = red.x_power + (h.type.t2 / g) * x_in_hom;
    int y_mult = red.y_power + (h.type.t1 / g) * py.low_degree();
    if (x_mult >= 2 || y_mult >= 2) return true;
    Poly1 core(std::vector<Rat>(py.coeffs().begin() + py.low_degree(), py.coeffs().end()));
    return monic_gcd(core, core.derivative()).degree() > 0;
}

std::pair<int, int> find_m1_m2(const Rat& d) {
    if (!(d > -1 && d < 1)) throw Error(ErrorKind::Algebra, "find_m1_m2 needs |d| < 1");
    mpz_class p = d.get_num(), q = d.get_den();
    mpz_class m1, m2;
    if ((p + q) % 2 == 0) {
        m1 = (q + p) / 2;
        m2 = (q - p) / 2;
    } else {
        m1 = q + p;
        m2 = q - p;
    }
    return {static_cast<int>(m1.get_si()), static_cast<int>(m2.get_si())};
}

std::optional<ResidueAssignment> residue_conditions_check(const Splitting& split, int r, int cap) {
    const QHType t = split.h.type;
    const Rat R(r + t.weight());
    HomReduction hh = hom_reduce(split.h);
    const bool dx = hh.x_power > 0, dy = hh.y_power > 0;
    Poly1 hy = dehomogenize_y(hh.f_hom);
    Poly1 hx = dehomogenize_x(hh.f_hom);
    Poly1 mu_y, mu_x;
    if (!split.mu.is_zero()) {
        HomReduction hm = hom_reduce(split.mu);
        mu_y = dehomogenize_y(hm.f_hom);
        mu_x = dehomogenize_x(hm.f_hom);
    }
    auto roots = roots_in_qi(hy);
    for (const auto& rt : roots)
        if (rt.multiplicity != 1) return std::nullopt;
    Poly1 dhy = hy.derivative();

    // Each exponent m = M0 * coefficient; coefficients must be positive rationals.
    std::vector<Rat> coeffs;
    Rat cx, cy;
    if (dx) {
        Rat res = mu_x(Rat(0)) / hx(Rat(0));
        cx = (1 + t.t2 * res) / R;
        coeffs.push_back(cx);
    }
    if (dy) {
        Rat res = mu_y(Rat(0)) / hy(Rat(0));
        cy = (1 - t.t1 * res) / R;
        coeffs.push_back(cy);
    }
    std::vector<Rat> croot;
    for (const auto& rt : roots) {
        GaussRat denom = dhy(rt.value);
        if (dy) denom *= rt.value;
        GaussRat res = mu_y(rt.value) / denom;
        if (!res.is_real()) return std::nullopt;
        croot.push_back((1 - res.re) / R);
        coeffs.push_back(croot.back());
    }
    mpz_class M0 = 1;
    for (const auto& c : coeffs) {
        if (c <= 0) return std::nullopt;
        mpz_lcm(M0.get_mpz_t(), M0.get_mpz_t(), c.get_den_mpz_t());
    }
    if (M0 > cap) return std::nullopt;
    auto exponent = [&](const Rat& c) { return static_cast<int>(Rat(c * Rat(M0)).get_num().get_si()); };
    ResidueAssignment out;
    out.M0 = static_cast<int>(M0.get_si());
    long check = 0;
    if (dx) {
        out.x_exponent = exponent(cx);
        check += static_cast<long>(t.t1) * *out.x_exponent;
    }
    if (dy) {
        out.y_exponent = exponent(cy);
        check += static_cast<long>(t.t2) * *out.y_exponent;
    }
    const int g = std::gcd(t.t1, t.t2);
    GPoly2 I{GaussRat(1)};
    if (dx) I *= GPoly2::x().pow(static_cast<unsigned>(*out.x_exponent));
    if (dy) I *= GPoly2::y().pow(static_cast<unsigned>(*out.y_exponent));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        int m = exponent(croot[i]);
        out.root_exponents.push_back(m);
        out.roots.push_back(roots[i].value);
        check += static_cast<long>(t.t1) * t.t2 / g * m;
        GPoly2 f = GPoly2::monomial(0, t.t1 / g);
        f.add_term({t.t2 / g, 0}, -roots[i].value);
        I *= f.pow(static_cast<unsigned>(m));
    }
    if (check != out.M0) return std::nullopt;
    out.integral = to_rational(I);
    return out;
}

LeadingVerdict leading_verdict(const QHVF& Fr, const PreformResult& preform) {
    LeadingVerdict out;
    Splitting split = split_conservative_dissipative(Fr);
    const QHType t = Fr.type;
    auto hamiltonian = [&](Poly2 I) {
        out.integrable = true;
        out.reason = LeadingReason::HamiltonianQH;
        out.integral = QHPoly::make(std::move(I), split.h.degree, t);
        return out;
    };
    switch (preform.kind) {
    case PreformCase::A:
        throw Error(ErrorKind::Unsupported, "leading part of case A has no qh leading part of this form");
    case PreformCase::B1:
        return hamiltonian(wedge(d0_field(t), Fr).poly);
    case PreformCase::B3:
        out.reason = LeadingReason::MultipleFactorObstruction;
        out.note = "h has a repeated factor and mu is nonzero";
        if (!multiple_factor_obstruction(split.h, split.mu))
            throw Error(ErrorKind::Internal, "case B3 without a repeated factor");
        return out;
    case PreformCase::B2:
    case PreformCase::B4:
        break;
    }
    if (preform.d.kind == DValue::Kind::Zero) return hamiltonian(split.h.poly * Rat(-2));
    if (preform.d.kind == DValue::Kind::IrrationalSquare) {
        out.reason = LeadingReason::ResidueUnsolvable;
        out.note = "d is irrational";
        return out;
    }
    std::optional<ResidueAssignment> assignment;
    try {
        assignment = residue_conditions_check(split, Fr.degree);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedRootField) throw;
        out.reason = LeadingReason::UnsupportedRootField;
        out.note = e.what();
        return out;
    }
    const Rat& d = preform.d.value;
    bool in_range = d > -1 && d < 1;
    if (!assignment) {
        if (preform.kind == PreformCase::B4 && in_range && preform.scaled)
            throw Error(ErrorKind::Internal, "residue conditions failed for a cyclic case");
        out.reason = LeadingReason::ResidueUnsolvable;
        out.note = preform.kind == PreformCase::B2 ? "residues are not real" : "|d| >= 1";
        return out;
    }
    if (directional(assignment->integral, Fr.planar()) != Poly2())
        throw Error(ErrorKind::Internal, "residue integral is not a first integral");
    out.integrable = true;
    out.reason = LeadingReason::CyclicIntegral;
    out.M = assignment->M0;
    out.integral = QHPoly::make(assignment->integral, assignment->M0, t);
    if (assignment->root_exponents.size() == 2) {
        out.m1 = assignment->root_exponents[0];
        out.m2 = assignment->root_exponents[1];
        if (in_range && preform.scaled) {
            auto [m1, m2] = find_m1_m2(d);
            if (m1 != *out.m1 || m2 != *out.m2)
                throw Error(ErrorKind::Internal, "residue exponents disagree with d");
        }
    }
    return out;
}

}  // namespace qhnf
