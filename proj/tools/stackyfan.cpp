// Command-line front end for the stacky-fan toolkit. Reports go to stdout,
// diagnostics to stderr; exit codes: 0 success (including negative
// recognition results), 1 semantic validation failure, 3 parse/IO failure.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stackyfan/io.hpp"

namespace {

using stacky::Int;

std::vector<Int> parse_int_list(const std::string& csv) {
  std::vector<Int> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.emplace_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.emplace_back(cur);
  return out;
}

int emit(const stacky::io::CommandResult& res) {
  std::cout << stacky::io::render(res.output);
  for (const auto& d : res.diagnostics) std::cerr << d << "\n";
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stacky-fan computations for toric Deligne-Mumford stacks"};
  app.require_subcommand(1);

  std::string path, path_b;
  std::string divisors_csv, line_bundle_csv;
  long long order = 0;
  std::vector<std::string> weight_args;
  std::string line_a1, line_a2;

  auto* validate = app.add_subcommand("validate", "check a stacky fan document");
  validate->add_option("path", path)->required();

  auto* invariants = app.add_subcommand("invariants", "Picard data, multiplicities, flags");
  invariants->add_option("path", path)->required();

  auto* decompose = app.add_subcommand("decompose", "canonical fan + multiplicities + gerbe");
  decompose->add_option("path", path)->required();

  auto* recompose = app.add_subcommand("recompose", "stacky fan from a decomposition document");
  recompose->add_option("path", path)->required();

  auto* compare = app.add_subcommand("compare", "compare two stacky fan documents");
  compare->add_option("pathA", path)->required();
  compare->add_option("pathB", path_b)->required();

  auto* recognize = app.add_subcommand("recognize", "weighted projective / toric line recognition");
  recognize->add_option("path", path)->required();

  auto* quotient = app.add_subcommand("quotient", "global quotient presentation [Z_Sigma/G]");
  quotient->add_option("path", path)->required();

  auto* root = app.add_subcommand("root", "root construction on a stacky fan");
  root->add_option("path", path)->required();
  auto* opt_div = root->add_option("--divisors", divisors_csv,
                                   "comma-separated positive root orders, one per ray");
  auto* opt_lb = root->add_option("--line-bundle", line_bundle_csv,
                                  "comma-separated divisor coefficients of the bundle");
  auto* opt_order = root->add_option("--order", order, "root order (>= 2) for --line-bundle");
  opt_div->excludes(opt_lb);
  opt_lb->needs(opt_order);

  auto* wps = app.add_subcommand("wps", "stacky fan of a weighted projective stack");
  wps->add_option("weights", weight_args, "positive integer weights")->required()->expected(-2);

  auto* line = app.add_subcommand("line", "stacky fan of a complete toric line");
  line->add_option("a1", line_a1)->required();
  line->add_option("a2", line_a2)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return emit(stacky::io::cmd_validate(path));
    if (*invariants) return emit(stacky::io::cmd_invariants(path));
    if (*decompose) return emit(stacky::io::cmd_decompose(path));
    if (*recompose) return emit(stacky::io::cmd_recompose(path));
    if (*compare) return emit(stacky::io::cmd_compare(path, path_b));
    if (*recognize) return emit(stacky::io::cmd_recognize(path));
    if (*quotient) return emit(stacky::io::cmd_quotient(path));
    if (*root) {
      if (!divisors_csv.empty())
        return emit(stacky::io::cmd_root_divisors(path, parse_int_list(divisors_csv)));
      if (!line_bundle_csv.empty())
        return emit(stacky::io::cmd_root_line_bundle(path, parse_int_list(line_bundle_csv),
                                                     Int(order)));
      std::cerr << "root requires exactly one of --divisors or --line-bundle\n";
      return stacky::io::exit_semantic;
    }
    if (*wps) {
      std::vector<Int> w;
      for (const auto& s : weight_args) w.emplace_back(s);
      return emit(stacky::io::cmd_wps(w));
    }
    if (*line) return emit(stacky::io::cmd_line(Int(line_a1), Int(line_a2)));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return stacky::io::exit_io;
  }
  return stacky::io::exit_io;
}
