#include "qhnf/cli.hpp"

#include "qhnf/curves.hpp"

#include <sstream>

namespace qhnf {

using nlohmann::json;

namespace {

json rat(const Rat& r) { return to_string(r); }

json assignment_json(const std::map<std::string, Rat>& a) {
    json out = json::object();
    for (const auto& [k, v] : a) out[k] = rat(v);
    return out;
}

std::string d_kind(const DValue& d) {
    switch (d.kind) {
    case DValue::Kind::Exact: return "Exact";
    case DValue::Kind::IrrationalSquare: return "IrrationalSquare";
    case DValue::Kind::Zero: return "Zero";
    }
    return "?";
}

json leading_json(const QHVF& Fr, const std::optional<LeadingVerdict>& lv) {
    Splitting s = split_conservative_dissipative(Fr);
    json out{{"part", to_json(Fr.planar())}, {"degree", Fr.degree}, {"h", to_string(s.h.poly)}, {"mu", to_string(s.mu.poly)}};
    if (lv) {
        out["integrable"] = lv->integrable;
        out["reason"] = to_string(lv->reason);
        if (!lv->note.empty()) out["note"] = lv->note;
        if (lv->integral) out["integral"] = to_string(lv->integral->poly);
        if (lv->m1) out["m1"] = *lv->m1;
        if (lv->m2) out["m2"] = *lv->m2;
        if (lv->M) out["M"] = *lv->M;
    }
    return out;
}

int default_truncation(const PreformResult& pre) {
    int N = 2 * pre.n + 2;
    if (pre.kind == PreformCase::B4 && pre.d.kind == DValue::Kind::Exact && pre.d.value > -1 && pre.d.value < 1) {
        auto [m1, m2] = find_m1_m2(pre.d.value);
        N += (pre.n + 1) * (m1 + m2);
    }
    return N;
}

PreformResult checked_preform(const PlanarVF& F, const CommandOptions& o) {
    PreformResult pre = classify_preform(F, std::max(o.N, 8) + 8);
    if (o.forced_type) {
        if (*o.forced_type != pre.type)
            throw Error(ErrorKind::TypeMismatch,
                        "forced type " + to_string(*o.forced_type) + " differs from the preform type " + to_string(pre.type));
        if (!pre.transform.is_identity())
            throw Error(ErrorKind::TypeMismatch, "forced type requires the input to be in preform already");
    }
    return pre;
}

json system_json(const SystemFile& sys, const std::map<std::string, Rat>& a) {
    return {{"dx", sys.dx.str()}, {"dy", sys.dy.str()}, {"assignment", assignment_json(a)}};
}

CommandResult verdict_command(const PlanarVF& F, const CommandOptions& o, bool full) {
    PreformResult pre = checked_preform(F, o);
    int N = o.N > 0 ? o.N : default_truncation(pre);
    NormalFormResult r = orbital_normal_form(F, pre.type, N, o.exec);
    CommandResult out;
    out.report = to_json(r, full);
    out.exit_code = r.verdict.exit_code();
    out.summary = r.verdict.describe();
    return out;
}

CommandResult curves_command(const PlanarVF& F, const CommandOptions& o) {
    PreformResult pre = checked_preform(F, o);
    int N = o.N > 0 ? o.N : default_truncation(pre);
    CurvesResult cr = formal_invariant_curves(pre.field, pre.type, N);
    json curves = json::array();
    for (const auto& c : cr.curves)
        curves.push_back({{"curve", to_string(c.curve())},
                          {"cofactor", to_string(c.cofactor())},
                          {"leading", to_string(c.curve_terms.front().poly)},
                          {"cofactor_leading", to_string(c.cofactor_terms.front().poly)}});
    CommandResult out;
    out.report = {{"preform", to_json(pre)}, {"truncation", N}, {"curves", curves},
                  {"residual_zero_through", cr.checked_through}};
    out.summary = std::to_string(cr.curves.size()) + " formal invariant curve(s)";
    return out;
}

CommandResult integral_command(const PlanarVF& F, const CommandOptions& o) {
    PreformResult pre = checked_preform(F, o);
    int N = o.N > 0 ? o.N : default_truncation(pre);
    CommandResult out;
    QHVF Fr = vf_component(pre.field, pre.type, pre.r);
    if (pre.kind == PreformCase::A) throw Error(ErrorKind::Unsupported, "case A has no leading integral");
    LeadingVerdict lv = leading_verdict(Fr, pre);
    out.report = {{"preform", to_json(pre)}, {"leading", leading_json(Fr, lv)}, {"truncation", N}};
    if (!lv.integrable) {
        out.exit_code = 12;
        out.summary = "leading part not integrable";
        return out;
    }
    TruncatedIntegral ti = truncated_first_integral(pre.field, *lv.integral, N);
    json degrees = json::array();
    for (const auto& d : ti.degrees)
        degrees.push_back({{"degree", d.degree}, {"equation_degree", d.equation_degree}, {"solvable", d.solvable},
                           {"obstruction", to_string(d.obstruction)}});
    out.report["integral"] = {{"polynomial", to_string(ti.integral)}, {"degrees", degrees}, {"complete", ti.complete}};
    out.summary = ti.complete ? "truncated first integral found through degree " + std::to_string(N)
                              : "first integral obstructed at degree " + std::to_string(ti.degrees.back().degree);
    return out;
}

Poly2 option_poly(const SystemFile& sys, const std::string& text, const CommandOptions& o) {
    return parse_expression(text, sys.params).instantiate(o.assignment);
}

CommandResult darboux_command(const SystemFile& sys, const PlanarVF& F, const CommandOptions& o) {
    std::vector<std::pair<Poly2, int>> factors;
    json fj = json::array();
    for (const auto& [text, e] : o.factors) {
        factors.push_back({option_poly(sys, text, o), e});
        fj.push_back({{"factor", to_string(factors.back().first)}, {"exponent", e}});
    }
    Poly2 g = option_poly(sys, o.exponent, o);
    Poly2 res = check_darboux_exponential(F, factors, g);
    CommandResult out;
    out.report = {{"factors", fj}, {"exponent", to_string(g)}, {"residual", to_string(res)}, {"valid", res.is_zero()}};
    out.summary = res.is_zero() ? "certificate valid" : "certificate invalid";
    return out;
}

CommandResult symmetry_command(const SystemFile& sys, const PlanarVF& F, const CommandOptions& o) {
    QHType t;
    if (o.forced_type) {
        t = *o.forced_type;
    } else {
        PreformResult pre = classify_preform(F);
        if (!pre.transform.is_identity())
            throw Error(ErrorKind::TypeMismatch, "symmetry check needs the input in preform or --type");
        t = pre.type;
    }
    int N = o.N > 0 ? o.N : 8;
    PlanarVF G{option_poly(sys, o.gx, o), option_poly(sys, o.gy, o)};
    SymmetryCheck c = check_lie_symmetry(F, G, option_poly(sys, o.mu, o), t, N);
    CommandResult out;
    out.report = {{"type", {t.t1, t.t2}}, {"truncation", N}, {"residual", to_json(c.residual)}, {"valid", c.valid},
                  {"linear_part_is_euler", c.linear_part_is_euler},
                  {"leading_multiplier_matches", c.leading_multiplier_matches}};
    out.summary = c.valid ? "symmetry holds through the truncation" : "symmetry residual is nonzero";
    return out;
}

CommandResult sweep_command(const SystemFile& sys, const CommandOptions& o) {
    const auto& points = o.sweep_points;
    std::vector<json> rows(points.size());
    for_each_index(
        points.size(),
        [&](std::size_t i) {
            CommandOptions local = o;
            local.assignment = points[i];
            local.exec = Exec::Serial;
            json row{{"assignment", assignment_json(points[i])}};
            try {
                CommandResult r = verdict_command(sys.instantiate(points[i]), local, false);
                row["verdict"] = r.report["verdict"];
                row["exit_code"] = r.exit_code;
            } catch (const Error& e) {
                row["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
                row["exit_code"] = kExitError;
            }
            rows[i] = std::move(row);
        },
        o.exec);
    CommandResult out;
    out.report = {{"points", rows}, {"count", points.size()}};
    std::ostringstream s;
    for (const auto& r : rows) {
        s << r["assignment"].dump() << " -> ";
        if (r.contains("verdict")) s << r["verdict"]["kind"].get<std::string>();
        else s << "error";
        s << "\n";
    }
    out.summary = s.str();
    return out;
}

}  // namespace

std::optional<QHType> parse_type_option(const std::string& text) {
    if (text.empty() || text == "auto") return std::nullopt;
    auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::Parse, "type must be 'auto' or 't1,t2'");
    try {
        QHType t{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
        if (t.t1 <= 0 || t.t2 <= 0) throw Error(ErrorKind::Parse, "type weights must be positive");
        return t;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::Parse, "type must be 'auto' or 't1,t2'");
    }
}

std::vector<std::map<std::string, Rat>> grid_points(const std::vector<std::string>& specs) {
    std::vector<std::map<std::string, Rat>> out{{}};
    for (const auto& spec : specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Parse, "grid '" + spec + "' lacks '='");
        std::string name = spec.substr(0, eq);
        std::vector<Rat> values;
        std::istringstream in(spec.substr(eq + 1));
        std::string v;
        while (std::getline(in, v, ',')) values.push_back(parse_rat(v));
        std::vector<std::map<std::string, Rat>> next;
        for (const auto& base : out)
            for (const auto& val : values) {
                auto p = base;
                p[name] = val;
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

json to_json(const PlanarVF& F) { return {{"dx", to_string(F.P)}, {"dy", to_string(F.Q)}}; }

json to_json(const PreformResult& p) {
    json out{{"case", to_string(p.kind)}, {"n", p.n}, {"type", {p.type.t1, p.type.t2}}, {"r", p.r},
             {"transform", p.transform.describe()}, {"field", to_json(p.field)}};
    if (p.kind == PreformCase::A) {
        out["b"] = rat(p.b);
    } else if (p.kind != PreformCase::B1) {
        out["d"] = p.d.describe();
        out["d_kind"] = d_kind(p.d);
        out["sigma"] = p.sigma;
        out["A"] = rat(p.A);
    }
    return out;
}

json to_json(const Verdict& v) {
    json out{{"kind", to_string(v.kind)}, {"text", v.describe()}};
    switch (v.kind) {
    case Verdict::Kind::NotIntegrable:
        out["degree"] = v.degree;
        out["coefficient"] = rat(v.coefficient);
        out["pattern"] = v.pattern;
        break;
    case Verdict::Kind::NoObstructionUpTo: out["N"] = v.N; break;
    default: out["reason"] = v.reason; break;
    }
    return out;
}

json to_json(const NormalFormResult& r, bool full) {
    json obstructions = json::array();
    for (const auto& s : r.obstructions())
        obstructions.push_back({{"vf_degree", s.vf_degree}, {"pattern", s.label()}, {"element", to_string(s.element)},
                                {"coefficient", rat(s.coefficient)}});
    json out{{"preform", to_json(r.preform)}, {"leading", leading_json(r.leading_part, r.leading)},
             {"truncation", r.truncation}, {"obstructions", obstructions}, {"verdict", to_json(r.verdict)}};
    if (full) {
        json slots = json::array();
        for (const auto& s : r.slots)
            slots.push_back({{"vf_degree", s.vf_degree}, {"pattern", s.label()}, {"coefficient", rat(s.coefficient)}});
        out["slots"] = slots;
        out["normal_form"] = to_json(r.normal_form);
        out["transform"] = r.transform.describe();
    }
    return out;
}

CommandResult run_command(const std::string& command, const SystemFile& system, const CommandOptions& options) {
    CommandResult out;
    try {
        if (command == "sweep") {
            out = sweep_command(system, options);
        } else {
            PlanarVF F = system.instantiate(options.assignment);
            if (command == "classify") {
                PreformResult pre = checked_preform(F, options);
                json rep{{"preform", to_json(pre)}};
                if (pre.kind != PreformCase::A)
                    rep["leading"] = leading_json(vf_component(pre.field, pre.type, pre.r), std::nullopt);
                out.report = rep;
                out.summary = "case " + to_string(pre.kind);
            } else if (command == "verdict") {
                out = verdict_command(F, options, false);
            } else if (command == "nf") {
                out = verdict_command(F, options, true);
            } else if (command == "curves") {
                out = curves_command(F, options);
            } else if (command == "integral") {
                out = integral_command(F, options);
            } else if (command == "check-darboux") {
                out = darboux_command(system, F, options);
            } else if (command == "check-symmetry") {
                out = symmetry_command(system, F, options);
            } else {
                throw Error(ErrorKind::Parse, "unknown command '" + command + "'");
            }
        }
        out.report["system"] = system_json(system, options.assignment);
    } catch (const Error& e) {
        out.report = {{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
        out.exit_code = kExitError;
        out.summary = std::string(error_kind_name(e.kind())) + ": " + e.what();
    }
    out.report["command"] = command;
    out.report["exit_code"] = out.exit_code;
    return out;
}

}  // namespace qhnf
