#pragma once

#include "qhnf/normal_form.hpp"
#include "qhnf/system_file.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qhnf {

struct CommandOptions {
    int N = 0;  // 0 selects the default truncation
    std::map<std::string, Rat> assignment;
    std::optional<QHType> forced_type;
    // check-darboux
    std::vector<std::pair<std::string, int>> factors;
    std::string exponent = "0";
    // check-symmetry
    std::string gx = "x", gy = "y", mu = "0";
    // sweep
    std::vector<std::map<std::string, Rat>> sweep_points;
    Exec exec = Exec::Parallel;
};

struct CommandResult {
    nlohmann::json report;
    int exit_code = 0;
    std::string summary;
};

inline constexpr int kExitError = 2;

std::optional<QHType> parse_type_option(const std::string& text);
// "name=v1,v2,..." options combined into their Cartesian product, in declaration order.
std::vector<std::map<std::string, Rat>> grid_points(const std::vector<std::string>& specs);

CommandResult run_command(const std::string& command, const SystemFile& system, const CommandOptions& options);

nlohmann::json to_json(const PreformResult& p);
nlohmann::json to_json(const PlanarVF& F);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const NormalFormResult& r, bool full);

}  // namespace qhnf
