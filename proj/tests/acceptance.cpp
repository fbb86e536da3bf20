// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.  All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nindep/nindep.hpp"
#include "oracles.hpp"

using namespace nindep;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Tally {
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::size_t at_bound = 0;
  std::size_t max_dimension = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++runs;
    if (!ok && failures++ == 0) first_failure = what;
  }

  Outcome outcome(const std::string& extra = "") const {
    std::ostringstream s;
    s << runs << " runs, " << failures << " failures, max dim " << max_dimension << ", " << at_bound << " at bound";
    if (!extra.empty()) s << ", " << extra;
    if (failures) s << "; first failure: " << first_failure;
    return {failures == 0, s.str()};
  }
};

std::string describe(const ConfigReport& r) {
  std::ostringstream s;
  s << r.theorem << " n=" << r.n << " k=" << r.k << " seed=" << r.seed << " gen=" << r.generator
    << " dim=" << r.dimension;
  for (const auto& c : r.checks)
    if (!c.passed) s << " !" << c.name;
  return s.str();
}

// Runs `trials` seeded trials for every generator of the theorem at every (n, k).
void theorem_trials(Tally& t, const std::string& theorem, const std::vector<std::pair<int, int>>& params,
                    std::size_t trials, const std::function<bool(const ConfigReport&)>& extra) {
  for (const auto& [n, k] : params) {
    for (const auto& gen : trial_generators(theorem)) {
      for (const auto& r : run_trials(theorem, n, k, trials, 1000, gen)) {
        t.max_dimension = std::max(t.max_dimension, r.dimension);
        if (r.dimension == r.bound) ++t.at_bound;
        t.record(r.pass() && extra(r), describe(r));
      }
    }
  }
}

Outcome criterion1() {
  Outcome o;
  std::ostringstream s;
  s << "dim P_{4,X}:";
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Configuration cfg = extremal_seven_config(5, 4, seed);
    const std::size_t on_line = nodes_on_curve(cfg.nodes, *cfg.mu).size();
    const std::size_t dim = vanishing_space(cfg.nodes, 4).dimension();
    s << ' ' << dim;
    o.ok = o.ok && cfg.nodes.size() == 9 && on_line == 6 && dim == 7;
  }
  o.detail = s.str() + " (seeds 1-10, 6 on line + 3 off)";
  return o;
}

Outcome criterion2() {
  Tally t;
  theorem_trials(t, "main", {{5, 4}, {6, 4}, {6, 5}, {7, 5}}, 100, [](const ConfigReport& r) {
    if (r.dimension > 7) return false;
    if (r.dimension < 7) return true;
    return r.witness && r.residual.size() == 3;
  });
  return t.outcome();
}

Outcome criterion3() {
  Tally t;
  theorem_trials(t, "hkv", {{5, 3}, {6, 4}}, 100, [](const ConfigReport& r) { return r.dimension <= 3; });
  return t.outcome();
}

Outcome criterion4() {
  Tally hk, ht2, ht;
  theorem_trials(hk, "hk", {{5, 3}, {5, 4}, {6, 4}, {7, 5}}, 100,
                 [](const ConfigReport& r) { return r.dimension <= 4 && (r.dimension < 4 || r.witness); });
  theorem_trials(ht2, "ht2", {{5, 2}, {5, 4}, {6, 3}, {7, 6}}, 100,
                 [](const ConfigReport& r) { return r.dimension <= 2 && (r.dimension < 2 || r.witness); });
  theorem_trials(ht, "ht", {{4, 2}, {5, 3}, {6, 6}, {7, 4}}, 100, [](const ConfigReport& r) { return r.dimension == 1; });
  Outcome o;
  o.ok = hk.failures == 0 && ht2.failures == 0 && ht.failures == 0;
  o.detail = "hk: " + hk.outcome().detail + " | ht2: " + ht2.outcome().detail + " | ht: " + ht.outcome().detail;
  return o;
}

Outcome criterion5() {
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::size_t failures = 0, dependent_sets = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = i % 7;
    const std::size_t size = 1 + static_cast<std::size_t>(i) % 30;
    std::vector<Node> nodes;
    while (nodes.size() < size) {
      const Node a{Rational(coord(rng)), Rational(coord(rng))};
      if (std::find(nodes.begin(), nodes.end(), a) == nodes.end()) nodes.push_back(a);
    }
    const NodeSet xs(std::move(nodes));
    const std::size_t kept = maximal_independent_subset(xs, n).size();
    if (kept < xs.size()) ++dependent_sets;
    const std::size_t dim = vanishing_space(xs, n).dimension();
    if (dim != num_monomials(n) - kept || kept != oracle::naive_rank(collocation_matrix(xs, n))) ++failures;
  }
  return {failures == 0, "100 sets, n 0-6, " + std::to_string(dependent_sets) + " dependent, " +
                             std::to_string(failures) + " mismatches"};
}

Outcome criterion6() {
  Rng rng(606);
  std::size_t failures = 0, polys = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 6;
    const Line l = random_line(rng);
    const NodeSet on = points_on_line(l, static_cast<std::size_t>(n + 1), static_cast<std::uint64_t>(6000 + i));
    for (const auto& p : vanishing_space(on, n).basis) {
      ++polys;
      const auto q = divides(l.poly(), p);
      if (!q || !(l.poly() * *q == p) || !restrict_to_line(p, l).is_zero()) ++failures;
    }
  }
  return {failures == 0, "100 instances, " + std::to_string(polys) + " basis polynomials, " +
                             std::to_string(failures) + " not divisible"};
}

Outcome criterion7() {
  std::size_t curves = 0, failures = 0;
  auto check = [&](const NodeSet& xs, const Curve& c, int n) {
    ++curves;
    if (!is_maximal_curve(xs, c, n) || !maximal_curve_factorization_check(xs, c, n)) ++failures;
  };
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (auto [n, k] : {std::pair{5, 4}, {6, 4}, {6, 5}, {7, 5}}) {
      const Configuration cfg = extremal_seven_config(n, k, seed);
      check(cfg.nodes, *cfg.mu, n);
    }
    for (auto [n, k] : {std::pair{5, 3}, {5, 4}, {6, 4}, {7, 5}}) {
      const Configuration cfg = hk_extremal_config(n, k, seed);
      check(cfg.nodes, *cfg.mu, n);
    }
    for (auto [n, k] : {std::pair{5, 2}, {5, 4}, {6, 3}, {7, 6}}) {
      const Configuration cfg = ht2_extremal_config(n, k, seed);
      check(cfg.nodes, *cfg.mu, n);
    }
    for (auto [n, k] : {std::pair{5, 3}, {6, 4}}) {
      const Configuration cfg = hkv_maximal_config(n, k, seed);
      check(cfg.nodes, *cfg.mu, n);
    }
    Rng rng(700 + seed);
    for (int n = 2; n <= 5; ++n) {
      const LineArrangement arr = random_arrangement(static_cast<std::size_t>(1 + (n + seed) % n), rng);
      const NodeSet xs = extend_to_maximal_on_curve(NodeSet{}, arr.lines, n, seed);
      check(xs, product_curve(arr.lines), n);
    }
  }
  return {failures == 0, std::to_string(curves) + " maximal curves, " + std::to_string(failures) + " failures"};
}

Outcome criterion8() {
  std::size_t configs = 0, failures = 0;
  std::ostringstream s;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Configuration cfg = gc_corollary_config(seed);
    const ConfigReport r = check_gc_corollary(cfg);
    ++configs;
    if (!r.pass() || r.dimension != 10) ++failures;
  }
  std::size_t control_failures = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Configuration cy = make_configuration("chung-yao", 2, 0, seed, 0);
    for (const auto& l : cy.components) {
      if (indices_on_curve(cy.nodes, Curve(l)).size() != 3 || line_users(cy.nodes, l, 2).size() != 3) {
        ++control_failures;
      }
    }
  }
  s << configs << " configurations with 10 users = S, " << failures << " failures; Chung-Yao control lines "
    << control_failures << " failures";
  return {failures == 0 && control_failures == 0, s.str()};
}

Outcome criterion9() {
  const std::vector<Line> host_lines{Line(0, 1, 0), Line(1, 0, 0), Line(1, 1, -1)};
  std::size_t instances = 0, mismatches = 0, feasible = 0;
  for (std::size_t lines = 1; lines <= 3; ++lines) {
    for (std::size_t m = 1; m <= 4; ++m) {
      std::vector<std::size_t> hosts(2 * m, 0);
      for (;;) {
        std::vector<Line> ls(host_lines.begin(), host_lines.begin() + static_cast<std::ptrdiff_t>(lines));
        std::vector<Node> nodes;
        for (std::size_t i = 0; i < hosts.size(); ++i)
          nodes.push_back(ls[hosts[i]].at(Rational(100 + static_cast<long>(i))));
        const auto inst = PairDivisionInstance::make(std::move(ls), std::move(nodes));
        const auto greedy = pair_division(inst);
        bool valid = true;
        if (greedy) {
          ++feasible;
          std::vector<bool> seen(hosts.size(), false);
          for (const auto& [a, b] : *greedy) {
            valid = valid && hosts[a] != hosts[b] && !seen[a] && !seen[b];
            seen[a] = seen[b] = true;
          }
          valid = valid && greedy->size() == m;
        }
        if (greedy.has_value() != oracle::exhaustive_pairing_exists(hosts) || !valid) ++mismatches;
        ++instances;
        std::size_t i = 0;
        while (i < hosts.size() && ++hosts[i] == lines) hosts[i++] = 0;
        if (i == hosts.size()) break;
      }
    }
  }
  return {mismatches == 0, std::to_string(instances) + " instances (" + std::to_string(feasible) + " feasible), " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome criterion10() {
  std::mt19937_64 rng(1010);
  const Rational eps = make_rational(1, 1000000);
  std::size_t checked = 0, failures = 0;
  while (checked < 50) {
    const int deg = 1 + static_cast<int>(checked % 5);
    const Poly2 p1 = oracle::random_poly(rng, deg, 9);
    if (!is_square_free(p1)) continue;
    const Poly2 p2 = oracle::random_poly(rng, static_cast<int>(checked % static_cast<std::size_t>(deg + 2)), 9);
    if (!is_square_free(p1 + eps * p2)) ++failures;
    ++checked;
  }
  return {failures == 0, "50 instances, " + std::to_string(failures) + " lost square-freeness"};
}

Outcome criterion11() {
  std::mt19937_64 rng(1111);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::size_t mismatches = 0, deficient = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = dim(rng), c = dim(rng);
    Matrix m(r, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b) m(a, b) = entry(rng);
    if (i % 4 == 0 && r > 1) {
      // Force a dependency: last row = sum of the first two (or a copy).
      for (std::size_t b = 0; b < c; ++b) m(r - 1, b) = m(0, b) + (r > 2 ? m(1, b) : Rational(0));
    }
    const std::size_t fast = rank(m);
    if (fast < std::min(r, c)) ++deficient;
    if (fast != oracle::naive_rank(m)) ++mismatches;
  }
  return {mismatches == 0, "100 matrices up to 8x8, " + std::to_string(deficient) + " rank-deficient, " +
                               std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, std::function<Outcome()>>> criteria{
      {1, "extremal configuration n=5 k=4 has dim P_4 = 7", criterion1},
      {2, "seven-curve bound and maximal-curve witness", criterion2},
      {3, "three-curve bound and its disjunction", criterion3},
      {4, "four- and two-curve bounds, unique curve", criterion4},
      {5, "vanishing dimension = N_n - maximal independent subset", criterion5},
      {6, "n+1 collinear zeros force the line factor", criterion6},
      {7, "maximal curves divide their vanishing polynomials", criterion7},
      {8, "five-node line used by exactly the ten nodes of S", criterion8},
      {9, "greedy pair division matches exhaustive matching", criterion9},
      {10, "small perturbations stay square-free", criterion10},
      {11, "Bareiss rank matches naive elimination", criterion11},
  };
  int failed = 0;
  for (const auto& [id, title, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s AC%-2d %s: %s [%.1fs]\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
