#ifndef NINDEP_CLI_HPP
#define NINDEP_CLI_HPP

// Command-line front end.  Every verb reads its input files, writes one JSON
// document to `out` and returns the process exit code:
//   0  success (verify: every trial passed)
//   1  verify found a failing trial, or a generator exhausted its retry bound
//   2  malformed input, violated precondition, or bad command line

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nindep/constructions.hpp"
#include "nindep/curves.hpp"
#include "nindep/errors.hpp"
#include "nindep/json_io.hpp"
#include "nindep/nodesets.hpp"
#include "nindep/verify.hpp"

namespace nindep::cli {

using io::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

// Reads a JSON document from a file, or from standard input for "-".
inline json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline json envelope() {
  json j;
  j["schema"] = "1";
  return j;
}

inline int cmd_analyze(const std::string& file, int n, std::ostream& out) {
  const NodeSet xs = io::nodeset_from_json(read_json(file));
  const std::size_t r = rank(collocation_matrix(xs, n));
  const auto kept = maximal_independent_indices(xs, n);
  json j = envelope();
  j["n"] = n;
  j["count"] = xs.size();
  j["rank"] = r;
  j["independent"] = r == xs.size();
  j["poised"] = r == xs.size() && xs.size() == num_monomials(n);
  j["maximal_independent_subset"] = {{"indices", io::index_list(kept)},
                                     {"nodes", io::nodes_to_json(xs.subset(kept).nodes())}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_dim(const std::string& file, int degree, std::ostream& out) {
  const NodeSet xs = io::nodeset_from_json(read_json(file));
  const auto space = vanishing_space(xs, degree);
  json j = envelope();
  j["degree"] = degree;
  j["dimension"] = space.dimension();
  json basis = json::array();
  for (const auto& p : space.basis) basis.push_back(io::to_json(p));
  j["basis"] = basis;
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_fundamental(const std::string& file, int n, std::size_t index, std::ostream& out) {
  const NodeSet xs = io::nodeset_from_json(read_json(file));
  const auto p = fundamental_polynomial(xs, index, n);
  json j = envelope();
  j["n"] = n;
  j["index"] = index;
  j["found"] = p.has_value();
  j["polynomial"] = p ? io::to_json(*p) : json(nullptr);
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_find_max_curve(const std::string& file, int m, int n, std::size_t residual, std::ostream& out) {
  const NodeSet xs = io::nodeset_from_json(read_json(file));
  if (!is_independent(xs, n)) throw ContractError("find-max-curve: node set is not n-independent");
  const auto w = find_maximal_curve(xs, m, n, residual);
  json j = envelope();
  j["m"] = m;
  j["n"] = n;
  j["residual_count"] = residual;
  j["witness"] = w ? io::to_json(w->curve) : json(nullptr);
  j["residual"] = w ? io::index_list(w->residual) : json(nullptr);
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_construct(const std::string& config, std::optional<int> n, int k, std::uint64_t seed,
                         std::optional<std::size_t> size, std::ostream& out) {
  if (config == "gc-corollary") n = 5;
  if (!n) throw ContractError("construct: --n is required for '" + config + "'");
  if (config == "generic" && !size) throw ContractError("construct: --size is required for 'generic'");
  const Configuration cfg = make_configuration(config, *n, k, seed, size.value_or(0));
  out << io::to_json(cfg).dump(2) << '\n';
  return kExitOk;
}

inline int cmd_verify(const std::string& theorem, int n, int k, std::size_t trials, std::uint64_t seed,
                      const std::optional<std::string>& generator, std::ostream& out) {
  if (theorem == "gc") n = 5;
  const auto reports = run_trials(theorem, n, k, trials, seed, generator);
  json j = envelope();
  j["theorem"] = theorem;
  j["n"] = n;
  j["k"] = k;
  j["trials"] = trials;
  j["seed"] = seed;
  std::size_t passed = 0;
  json arr = json::array();
  for (const auto& r : reports) {
    passed += r.pass() ? 1 : 0;
    arr.push_back(io::to_json(r));
  }
  j["passed"] = passed;
  j["failed"] = reports.size() - passed;
  j["reports"] = arr;
  out << j.dump(2) << '\n';
  return passed == reports.size() ? kExitOk : kExitFail;
}

inline int cmd_pair_division(const std::string& file, std::ostream& out) {
  const auto inst = io::instance_from_json(read_json(file));
  const auto pairs = pair_division(inst);
  json j = envelope();
  j["feasible"] = pairs.has_value();
  if (pairs) {
    json arr = json::array();
    for (const auto& [a, b] : *pairs) arr.push_back(json::array({a, b}));
    j["pairs"] = arr;
  } else {
    j["pairs"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

// args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analytics for n-independent node sets and maximal curves"};
  app.require_subcommand(1);

  std::string nodes_file, instance_file, config, theorem;
  int n = 0, k = 0, degree = 0, m = 0;
  std::optional<int> construct_n;
  std::size_t index = 0, residual = 0, trials = 1;
  std::optional<std::size_t> size;
  std::optional<std::string> generator;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "independence, rank and a maximal independent subset");
  analyze->add_option("--nodes", nodes_file, "node set JSON file")->required();
  analyze->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);

  auto* dim = app.add_subcommand("dim", "dimension and basis of the vanishing space");
  dim->add_option("--nodes", nodes_file, "node set JSON file")->required();
  dim->add_option("--degree", degree, "degree bound")->required()->check(CLI::NonNegativeNumber);

  auto* fundamental = app.add_subcommand("fundamental", "fundamental polynomial of one node");
  fundamental->add_option("--nodes", nodes_file, "node set JSON file")->required();
  fundamental->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  fundamental->add_option("--index", index, "node index")->required();

  auto* find = app.add_subcommand("find-max-curve", "search for a maximal curve missing `residual` nodes");
  find->add_option("--nodes", nodes_file, "node set JSON file")->required();
  find->add_option("--m", m, "curve degree")->required()->check(CLI::PositiveNumber);
  find->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
  find->add_option("--residual", residual, "nodes off the curve")->required()->check(CLI::Range(0, 3));

  const std::vector<std::string> configs{"extremal7", "extremal7-collinear", "hk", "ht2", "ht", "hkv", "hkv-maximal",
                                         "generic", "gc-corollary", "chung-yao", "principal"};
  auto* construct = app.add_subcommand("construct", "generate a configuration");
  construct->add_option("--config", config, "configuration kind")->required()->check(CLI::IsMember(configs));
  construct->add_option("--n", construct_n, "degree")->check(CLI::NonNegativeNumber);
  construct->add_option("--k", k, "curve degree parameter");
  construct->add_option("--seed", seed, "random seed");
  construct->add_option("--size", size, "node count (generic only)");

  auto* verify = app.add_subcommand("verify", "run seeded theorem trials");
  verify->add_option("--theorem", theorem, "theorem id")->required()->check(CLI::IsMember(theorem_ids()));
  verify->add_option("--n", n, "degree");
  verify->add_option("--k", k, "curve degree");
  verify->add_option("--trials", trials, "number of trials");
  verify->add_option("--seed", seed, "first seed");
  verify->add_option("--generator", generator, "use one generator for every trial");

  auto* pairs = app.add_subcommand("pair-division", "split line-hosted nodes into cross pairs");
  pairs->add_option("--instance", instance_file, "instance JSON file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(nodes_file, n, out);
    if (dim->parsed()) return cmd_dim(nodes_file, degree, out);
    if (fundamental->parsed()) return cmd_fundamental(nodes_file, n, index, out);
    if (find->parsed()) return cmd_find_max_curve(nodes_file, m, n, residual, out);
    if (construct->parsed()) return cmd_construct(config, construct_n, k, seed, size, out);
    if (verify->parsed()) return cmd_verify(theorem, n, k, trials, seed, generator, out);
    if (pairs->parsed()) return cmd_pair_division(instance_file, out);
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ContractError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GenerationError& e) {
    err << "generation failed: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInput;
}

}  // namespace nindep::cli

#endif  // NINDEP_CLI_HPP
