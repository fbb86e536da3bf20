#ifndef NINDEP_VERIFY_HPP
#define NINDEP_VERIFY_HPP

// Executable checks of the curve-counting theorems for n-independent sets.
//
// "Linearly independent curves of degree <= k through all nodes of X" is
// measured as dim P_{k,X}.  Each check returns a ConfigReport: the hypothesis
// checks come first, then the claims; the verdict is pass iff every check
// passed.  A failed claim on a set that satisfies the hypotheses contradicts a
// proved theorem and therefore points to a bug in this library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nindep/constructions.hpp"
#include "nindep/curves.hpp"
#include "nindep/errors.hpp"
#include "nindep/nodesets.hpp"

namespace nindep {

struct Check {
  std::string name;
  bool passed = false;
};

struct ConfigReport {
  std::string theorem;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::string generator;
  std::vector<Check> checks;
  std::size_t dimension = 0;
  std::size_t bound = 0;
  std::optional<Curve> witness;
  std::vector<Node> residual;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  bool check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c.passed;
    return false;
  }

  // False once any hypothesis check failed; claims are then skipped.
  bool hypotheses_hold = true;
};

namespace detail {

inline void hypothesis(ConfigReport& r, std::string name, bool ok) {
  r.checks.push_back({std::move(name), ok});
  r.hypotheses_hold = r.hypotheses_hold && ok;
}

inline void claim(ConfigReport& r, std::string name, bool ok) { r.checks.push_back({std::move(name), ok}); }

inline ConfigReport start_report(std::string theorem, int n, int k, std::size_t bound) {
  ConfigReport r;
  r.theorem = std::move(theorem);
  r.n = n;
  r.k = k;
  r.bound = bound;
  return r;
}

inline void record_witness(ConfigReport& r, const NodeSet& xs, const std::optional<MaximalCurveWitness>& w) {
  if (!w) return;
  r.witness = w->curve;
  for (auto i : w->residual) r.residual.push_back(xs[i]);
}

inline bool collinear(std::span<const Node> pts) {
  if (pts.size() < 3) return true;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    const Rational det = (pts[1].x - pts[0].x) * (pts[i].y - pts[0].y) - (pts[1].y - pts[0].y) * (pts[i].x - pts[0].x);
    if (det != 0) return false;
  }
  return true;
}

// Common hypothesis block: degree window, cardinality and n-independence.
inline bool standard_hypotheses(ConfigReport& r, const NodeSet& xs, int n, int k, int k_lo, int k_hi, int curve_shift,
                                std::size_t extra) {
  const bool window = k_lo <= k && k <= k_hi;
  hypothesis(r, "degree_window", window);
  hypothesis(r, "cardinality", window && xs.size() == d(n, k - curve_shift) + extra);
  hypothesis(r, "n_independent", n >= 0 && is_independent(xs, n));
  r.dimension = k >= 0 ? vanishing_dimension(xs, k) : 0;
  return r.hypotheses_hold;
}

}  // namespace detail

// At most seven independent curves of degree <= k through d(n,k-3)+3
// n-independent nodes (4 <= k <= n-1); seven exactly when all nodes but three
// lie on a maximal curve of degree k-3.  When the nodes also lie on a curve of
// degree k-2, the three residual nodes are collinear.
inline ConfigReport check_main(const NodeSet& xs, int n, int k) {
  ConfigReport r = detail::start_report("main", n, k, 7);
  if (!detail::standard_hypotheses(r, xs, n, k, 4, n - 1, 3, 3)) return r;
  detail::claim(r, "dimension_bound", r.dimension <= 7);
  const auto w = find_maximal_curve(xs, k - 3, n, 3);
  detail::record_witness(r, xs, w);
  if (r.dimension == 7) {
    detail::claim(r, "maximal_curve_at_bound", w && nodes_on_curve(xs, w->curve).size() == d(n, k - 3));
  } else {
    detail::claim(r, "no_maximal_curve_below_bound", !w);
  }
  if (vanishing_dimension(xs, k - 2) >= 1) {
    detail::claim(r, "residual_collinear", w && detail::collinear(r.residual));
  }
  return r;
}

// At most three independent curves of degree <= k through d(n,k-2)+3 nodes
// (3 <= k <= n-2); three exactly when all nodes lie on a curve of degree k-1
// or all but three lie on a maximal curve of degree k-2.
inline ConfigReport check_hkv(const NodeSet& xs, int n, int k) {
  ConfigReport r = detail::start_report("hkv", n, k, 3);
  if (!detail::standard_hypotheses(r, xs, n, k, 3, n - 2, 2, 3)) return r;
  detail::claim(r, "dimension_bound", r.dimension <= 3);
  const bool on_lower_curve = vanishing_dimension(xs, k - 1) >= 1;
  const auto w = find_maximal_curve(xs, k - 2, n, 3);
  detail::record_witness(r, xs, w);
  if (r.dimension == 3) {
    detail::claim(r, "disjunction_at_bound", on_lower_curve || w);
  } else {
    detail::claim(r, "no_disjunct_below_bound", !on_lower_curve && !w);
  }
  return r;
}

// At most four independent curves of degree <= k through d(n,k-2)+2 nodes
// (3 <= k <= n-1); four exactly when all but two nodes lie on a maximal curve
// of degree k-2.
inline ConfigReport check_hk(const NodeSet& xs, int n, int k) {
  ConfigReport r = detail::start_report("hk", n, k, 4);
  if (!detail::standard_hypotheses(r, xs, n, k, 3, n - 1, 2, 2)) return r;
  detail::claim(r, "dimension_bound", r.dimension <= 4);
  const auto w = find_maximal_curve(xs, k - 2, n, 2);
  detail::record_witness(r, xs, w);
  if (r.dimension == 4) detail::claim(r, "maximal_curve_at_bound", w.has_value());
  else detail::claim(r, "no_maximal_curve_below_bound", !w);
  return r;
}

// At most two curves of degree <= k through d(n,k-1)+1 nodes (2 <= k <= n-1);
// two exactly when all but one node lie on a maximal curve of degree k-1.
inline ConfigReport check_ht2(const NodeSet& xs, int n, int k) {
  ConfigReport r = detail::start_report("ht2", n, k, 2);
  if (!detail::standard_hypotheses(r, xs, n, k, 2, n - 1, 1, 1)) return r;
  detail::claim(r, "dimension_bound", r.dimension <= 2);
  const auto w = find_maximal_curve(xs, k - 1, n, 1);
  detail::record_witness(r, xs, w);
  if (r.dimension == 2) detail::claim(r, "maximal_curve_at_bound", w.has_value());
  else detail::claim(r, "no_maximal_curve_below_bound", !w);
  return r;
}

// d(n,k-1)+2 n-independent nodes on a curve of degree k <= n determine it:
// dim P_{k,X} = 1.
inline ConfigReport check_ht(const NodeSet& xs, int n, int k, const Curve& c) {
  ConfigReport r = detail::start_report("ht", n, k, 1);
  detail::hypothesis(r, "curve_degree", c.degree() == k);
  detail::hypothesis(r, "nodes_on_curve", std::all_of(xs.begin(), xs.end(), [&](const Node& a) { return c.contains(a); }));
  if (!detail::standard_hypotheses(r, xs, n, k, 1, n, 1, 2)) return r;
  detail::claim(r, "unique_curve", r.dimension == 1);
  r.witness = c;
  return r;
}

// A line through exactly five nodes of a 5-poised set is used by at most ten
// nodes; the generated configuration realizes ten users forming a 3-poised
// set, each with fundamental polynomial divisible by mu * ell.
inline ConfigReport check_gc_corollary(const Configuration& cfg) {
  constexpr int n = 5;
  ConfigReport r = detail::start_report("gc", n, cfg.k, 10);
  r.seed = cfg.seed;
  r.generator = cfg.kind;
  const bool poised = is_poised(cfg.nodes, n);
  detail::hypothesis(r, "n_poised", poised);
  detail::hypothesis(r, "ell_five_nodes", cfg.ell && indices_on_curve(cfg.nodes, Curve(*cfg.ell)).size() == 5);
  detail::hypothesis(r, "mu_designated", cfg.mu.has_value());
  detail::hypothesis(r, "subset_designated", cfg.subset.size() == 10);
  if (!r.hypotheses_hold) return r;
  const auto users = line_users(cfg.nodes, *cfg.ell, n);
  r.dimension = users.size();
  detail::claim(r, "usage_bound", users.size() <= 10);
  std::vector<std::size_t> s = cfg.subset;
  std::sort(s.begin(), s.end());
  detail::claim(r, "users_equal_S", users == s);
  detail::claim(r, "S_3_poised", is_poised(cfg.nodes.subset(s), 3));
  const Poly2 mu_ell = cfg.mu->poly() * cfg.ell->poly();
  bool all_divisible = true;
  for (auto i : users) {
    const auto p = fundamental_polynomial(cfg.nodes, i, n);
    all_divisible = all_divisible && p && divides(mu_ell, *p).has_value();
  }
  detail::claim(r, "users_divisible_by_mu_ell", all_divisible);
  r.witness = cfg.mu;
  return r;
}

// Theorem identifiers accepted by run_trials and the CLI.
inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"main", "hk", "ht2", "ht", "hkv", "gc"};
  return ids;
}

// Size of the node sets a theorem speaks about.
inline std::size_t theorem_cardinality(const std::string& theorem, int n, int k) {
  if (theorem == "main") return d(n, k - 3) + 3;
  if (theorem == "hkv") return d(n, k - 2) + 3;
  if (theorem == "hk") return d(n, k - 2) + 2;
  if (theorem == "ht2") return d(n, k - 1) + 1;
  if (theorem == "ht") return d(n, k - 1) + 2;
  if (theorem == "gc") return num_monomials(5);
  throw ContractError("unknown theorem '" + theorem + "'");
}

// Generators cycled through by run_trials for each theorem.
inline std::vector<std::string> trial_generators(const std::string& theorem) {
  if (theorem == "main") return {"extremal7", "generic"};
  if (theorem == "hkv") return {"hkv", "hkv-maximal", "generic"};
  if (theorem == "hk") return {"hk", "generic"};
  if (theorem == "ht2") return {"ht2", "generic"};
  if (theorem == "ht") return {"ht"};
  if (theorem == "gc") return {"gc-corollary"};
  throw ContractError("unknown theorem '" + theorem + "'");
}

// Builds a named configuration.  `size` is only used by "generic".
inline Configuration make_configuration(const std::string& kind, int n, int k, std::uint64_t seed, std::size_t size) {
  if (kind == "extremal7") return extremal_seven_config(n, k, seed);
  if (kind == "extremal7-collinear") return collinear_residual_config(n, k, seed);
  if (kind == "hk") return hk_extremal_config(n, k, seed);
  if (kind == "ht2") return ht2_extremal_config(n, k, seed);
  if (kind == "ht") return ht_config(n, k, seed);
  if (kind == "hkv") return hkv_curve_config(n, k, seed);
  if (kind == "hkv-maximal") return hkv_maximal_config(n, k, seed);
  if (kind == "generic") return generic_config(n, k, size, seed);
  if (kind == "gc-corollary") return gc_corollary_config(seed);
  if (kind == "principal") {
    Configuration cfg;
    cfg.kind = kind;
    cfg.n = n;
    cfg.k = k;
    cfg.seed = seed;
    cfg.nodes = principal_lattice(n);
    return cfg;
  }
  if (kind == "chung-yao") {
    Rng rng(seed);
    const auto lattice = chung_yao_lattice(random_arrangement(static_cast<std::size_t>(n + 2), rng), n);
    Configuration cfg;
    cfg.kind = kind;
    cfg.n = n;
    cfg.k = k;
    cfg.seed = seed;
    cfg.nodes = lattice.nodes;
    cfg.components = lattice.arrangement.lines;
    return cfg;
  }
  throw ContractError("unknown configuration '" + kind + "'");
}

inline ConfigReport check_configuration(const std::string& theorem, const Configuration& cfg) {
  ConfigReport r;
  if (theorem == "main") r = check_main(cfg.nodes, cfg.n, cfg.k);
  else if (theorem == "hkv") r = check_hkv(cfg.nodes, cfg.n, cfg.k);
  else if (theorem == "hk") r = check_hk(cfg.nodes, cfg.n, cfg.k);
  else if (theorem == "ht2") r = check_ht2(cfg.nodes, cfg.n, cfg.k);
  else if (theorem == "ht") {
    if (!cfg.mu) throw ContractError("ht check needs a designated curve");
    r = check_ht(cfg.nodes, cfg.n, cfg.k, *cfg.mu);
  } else if (theorem == "gc") r = check_gc_corollary(cfg);
  else throw ContractError("unknown theorem '" + theorem + "'");
  r.seed = cfg.seed;
  r.generator = cfg.kind;
  return r;
}

// Trial i uses seed + i and the generator trial_generators(theorem)[i mod size],
// or `generator` for every trial when given.  Reports come back in trial order.
inline std::vector<ConfigReport> run_trials(const std::string& theorem, int n, int k, std::size_t trials,
                                            std::uint64_t seed, const std::optional<std::string>& generator = {}) {
  const auto gens = trial_generators(theorem);
  const std::size_t size = theorem == "gc" ? 0 : theorem_cardinality(theorem, n, k);
  std::vector<ConfigReport> out;
  out.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::string& kind = generator ? *generator : gens[i % gens.size()];
    const Configuration cfg = make_configuration(kind, n, k, seed + i, size);
    out.push_back(check_configuration(theorem, cfg));
  }
  return out;
}

}  // namespace nindep

#endif  // NINDEP_VERIFY_HPP
