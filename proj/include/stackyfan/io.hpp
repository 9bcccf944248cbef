#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "stackyfan/structure.hpp"

namespace stacky::io {

using json = nlohmann::json;

// exit-code contract: 0 success (including negative recognition results),
// 1 semantic validation failure, 3 parse or I/O failure
inline constexpr int exit_ok = 0;
inline constexpr int exit_semantic = 1;
inline constexpr int exit_io = 3;

json int_to_json(const Int& v);
Int json_to_int(const json& j);
json vec_to_json(const IntVec& v);
json group_to_json(const FGAbelianGroup& g);

/// Stacky-fan document:
/// {"lattice": {"rank": d, "torsion": [b...]},
///  "beta": [[column ints]...], "max_cones": [[ray indices]...],
///  "rays": optional, cross-validated}
StackyFan parse_stacky_fan(const json& doc);
json stacky_fan_to_json(const StackyFan& sf);

/// Decomposition document: {"canonical": <stacky fan>, "multiplicities": [...],
///  "gerbe": [{"order": b, "class": [...]}  ...]}
Decomposition parse_decomposition(const json& doc);
json decomposition_to_json(const Decomposition& dec);

struct CommandResult {
  int exit_code = exit_ok;
  json output;                         // document or report on stdout
  std::vector<std::string> diagnostics;  // stderr lines
};

CommandResult cmd_validate(const std::string& path);
CommandResult cmd_invariants(const std::string& path);
CommandResult cmd_decompose(const std::string& path);
CommandResult cmd_recompose(const std::string& path);
CommandResult cmd_compare(const std::string& path_a, const std::string& path_b);
CommandResult cmd_recognize(const std::string& path);
CommandResult cmd_quotient(const std::string& path);
CommandResult cmd_root_divisors(const std::string& path, const std::vector<Int>& orders);
CommandResult cmd_root_line_bundle(const std::string& path, const std::vector<Int>& coeffs,
                                   const Int& order);
CommandResult cmd_wps(const std::vector<Int>& weights);
CommandResult cmd_line(const Int& a1, const Int& a2);

std::string render(const json& doc);

}  // namespace stacky::io
