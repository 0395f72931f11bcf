#include "qhnf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <utility>

int main(int argc, char** argv) {
    using namespace qhnf;
    CLI::App app{"Orbital normal forms and integrability of nilpotent planar singularities"};
    app.require_subcommand(1, 1);

    std::string file, assign, json_path, type = "auto", exponent = "0", gx = "x", gy = "y", mu = "0";
    int N = 0;
    bool serial = false;
    std::vector<std::string> factors, grids, points;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-f,--file", file, "system file")->required()->check(CLI::ExistingFile);
        sub->add_option("-N", N, "truncation degree (vf-degree)")->check(CLI::NonNegativeNumber);
        sub->add_option("--assign", assign, "parameter values k=v,...");
        sub->add_option("--json", json_path, "write the JSON report to this path");
        sub->add_option("--type", type, "auto or t1,t2");
    };
    const std::pair<const char*, const char*> basic[] = {
        {"classify", "preform case, type and invariant d"},
        {"verdict", "integrability verdict from the orbital normal form"},
        {"nf", "full normal form with obstruction slots and transform"},
        {"curves", "formal invariant curves with cofactors"},
        {"integral", "truncated first integral, degree by degree"},
    };
    for (const auto& [name, help] : basic) add_common(app.add_subcommand(name, help));
    auto* darboux = app.add_subcommand("check-darboux", "verify a Darboux certificate");
    add_common(darboux);
    darboux->add_option("--factor", factors, "invariant factor EXPR:EXPONENT (repeatable)");
    darboux->add_option("--exp", exponent, "exponent g of exp(g)");
    auto* symmetry = app.add_subcommand("check-symmetry", "verify [F,G] = mu F");
    add_common(symmetry);
    symmetry->add_option("--gx", gx, "first component of G");
    symmetry->add_option("--gy", gy, "second component of G");
    symmetry->add_option("--mu", mu, "multiplier mu");
    auto* sweep = app.add_subcommand("sweep", "verdicts over parameter points");
    add_common(sweep);
    sweep->add_option("--grid", grids, "name=v1,v2,... (repeatable, Cartesian product)");
    sweep->add_option("--point", points, "k=v,... (repeatable)");
    sweep->add_flag("--serial", serial, "process points sequentially");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qhnf::kExitError;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    CommandResult result;
    try {
        SystemFile system = read_system_file(file);
        CommandOptions opts;
        opts.N = N;
        opts.assignment = parse_assignment(assign);
        opts.forced_type = parse_type_option(type);
        opts.exponent = exponent;
        opts.gx = gx;
        opts.gy = gy;
        opts.mu = mu;
        opts.exec = serial ? Exec::Serial : Exec::Parallel;
        for (const auto& f : factors) {
            auto colon = f.rfind(':');
            if (colon == std::string::npos) throw Error(ErrorKind::Parse, "factor '" + f + "' lacks ':EXPONENT'");
            opts.factors.push_back({f.substr(0, colon), std::stoi(f.substr(colon + 1))});
        }
        opts.sweep_points = grid_points(grids);
        if (grids.empty()) opts.sweep_points.clear();
        for (const auto& p : points) opts.sweep_points.push_back(parse_assignment(p));
        result = run_command(command, system, opts);
    } catch (const Error& e) {
        std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << result.report.dump(2) << "\n";
    }
    (result.exit_code == kExitError ? std::cerr : std::cout) << result.summary << "\n";
    return result.exit_code;
}
