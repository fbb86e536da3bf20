#ifndef NINDEP_CONSTRUCTIONS_HPP
#define NINDEP_CONSTRUCTIONS_HPP

// Seeded generators for the node configurations the theorem checks need.
//
// All curve-constrained generation uses products of lines, which are
// rationally parametrizable.  Nodes are accepted one at a time only if they
// raise the rank of the collocation matrix, so every generator returns a
// verified n-independent set.  Each placement gives up after kMaxRejections
// rejected candidates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nindep/curves.hpp"
#include "nindep/errors.hpp"
#include "nindep/exactnum.hpp"
#include "nindep/nodesets.hpp"
#include "nindep/poly2.hpp"

namespace nindep {

inline constexpr int kMaxRejections = 1000;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline long default_grid_bound(std::size_t size) { return std::max<long>(10, 10 * static_cast<long>(size)); }

struct LineArrangement {
  std::vector<Line> lines;

  // Pairwise non-parallel with no three lines through a common point.
  bool general_position() const {
    std::vector<Point> meets;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        auto p = lines[i].intersection(lines[j]);
        if (!p) return false;
        if (std::find(meets.begin(), meets.end(), *p) != meets.end()) return false;
        meets.push_back(*p);
      }
    }
    return true;
  }
};

inline Line random_line(Rng& rng) {
  for (;;) {
    const long a = rng.uniform(-9, 9), b = rng.uniform(-9, 9), c = rng.uniform(-9, 9);
    if (a != 0 || b != 0) return Line(a, b, c);
  }
}

inline LineArrangement random_arrangement(std::size_t count, Rng& rng) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    LineArrangement arr;
    for (std::size_t i = 0; i < count; ++i) arr.lines.push_back(random_line(rng));
    if (arr.general_position()) return arr;
  }
  throw GenerationError("no general-position line arrangement found");
}

inline Curve product_curve(std::span<const Line> lines) {
  Poly2 p(1);
  for (const auto& l : lines) p = p * l.poly();
  return Curve(std::move(p));
}

namespace detail {

// Growing node list whose collocation rows (degree n) stay independent.
class IndependentBuilder {
 public:
  IndependentBuilder(int n, Rng& rng) : n_(n), span_(num_monomials(n)), rng_(rng) {}

  const std::vector<Node>& nodes() const { return nodes_; }
  Rng& rng() { return rng_; }

  bool try_add(const Node& a) {
    if (!span_.insert(monomial_row(a, n_))) return false;
    nodes_.push_back(a);
    return true;
  }

  // Adds one node drawn by `sample`, retrying rejected or filtered candidates.
  template <class Sample, class Filter>
  void add_sampled(Sample&& sample, Filter&& keep, const char* what) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
      const Node a = sample();
      if (keep(a) && try_add(a)) return;
    }
    throw GenerationError(std::string("generation failed: ") + what);
  }

 private:
  int n_;
  RowSpace span_;
  Rng& rng_;
  std::vector<Node> nodes_;
};

inline bool on_any(std::span<const Line> lines, const Node& a) {
  return std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return l.contains(a); });
}

// Places a node on lines[target] that lies on no other line of `lines`.
inline void add_on_component(IndependentBuilder& b, std::span<const Line> lines, std::size_t target, long bound) {
  const Line& l = lines[target];
  b.add_sampled([&] { return l.at(Rational(b.rng().uniform(-bound, bound))); },
                [&](const Node& a) {
                  for (std::size_t j = 0; j < lines.size(); ++j)
                    if (j != target && lines[j].contains(a)) return false;
                  return true;
                },
                "node on curve component");
}

inline void add_off_curve(IndependentBuilder& b, std::span<const Line> lines, long bound) {
  b.add_sampled([&] { return Node{Rational(b.rng().uniform(-bound, bound)), Rational(b.rng().uniform(-bound, bound))}; },
                [&](const Node& a) { return !on_any(lines, a); }, "node off curve");
}

// Per-line caps n+1, n, n-1, ... for nodes on a product of lines.
inline std::vector<std::size_t> line_caps(int n, std::size_t lines) {
  std::vector<std::size_t> caps;
  for (std::size_t i = 0; i < lines; ++i) caps.push_back(static_cast<std::size_t>(n + 1) - i);
  return caps;
}

// Distributes `count` nodes over the lines round-robin, never exceeding caps.
inline std::vector<std::size_t> round_robin_quotas(int n, std::size_t lines, std::size_t count) {
  const auto caps = line_caps(n, lines);
  std::vector<std::size_t> q(lines, 0);
  std::size_t placed = 0;
  while (placed < count) {
    bool progressed = false;
    for (std::size_t i = 0; i < lines && placed < count; ++i) {
      if (q[i] < caps[i]) {
        ++q[i];
        ++placed;
        progressed = true;
      }
    }
    if (!progressed) throw ContractError("more nodes requested than the curve can carry independently");
  }
  return q;
}

inline void fill_components(IndependentBuilder& b, std::span<const Line> lines, std::span<const std::size_t> quotas,
                            long bound) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t c = 0; c < quotas[i]; ++c) add_on_component(b, lines, i, bound);
}

}  // namespace detail

// A generated node set with the curves and subsets it was built around.
struct Configuration {
  std::string kind;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  NodeSet nodes;
  std::optional<Line> ell;
  std::optional<Curve> mu;
  std::vector<Line> components;         // lines whose product is mu (or the arrangement)
  std::vector<std::size_t> subset;      // the designated set S
  std::vector<std::size_t> residual;    // nodes off mu
};

namespace detail {

// Shuffles the builder's nodes and returns the new positions of the nodes
// that were at the given original positions.
inline std::vector<std::size_t> shuffle_into(Configuration& cfg, std::vector<Node> nodes,
                                             const std::vector<std::size_t>& tracked, Rng& rng) {
  std::vector<std::size_t> perm(nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng.engine());
  std::vector<Node> shuffled;
  shuffled.reserve(nodes.size());
  std::vector<std::size_t> where(nodes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    shuffled.push_back(nodes[perm[i]]);
    where[perm[i]] = i;
  }
  cfg.nodes = NodeSet(std::move(shuffled));
  std::vector<std::size_t> out;
  for (auto t : tracked) out.push_back(where[t]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// `size` distinct integer-grid nodes forming an n-independent set.
inline NodeSet random_independent_set(std::size_t size, int n, std::uint64_t seed, long grid = 0) {
  if (size > num_monomials(n)) throw ContractError("random_independent_set: size exceeds N_n");
  const long bound = grid > 0 ? grid : default_grid_bound(size);
  Rng rng(seed);
  detail::IndependentBuilder b(n, rng);
  for (std::size_t i = 0; i < size; ++i) detail::add_off_curve(b, {}, bound);
  return NodeSet(b.nodes());
}

// Distinct points of l at distinct integer parameters.
inline NodeSet points_on_line(const Line& l, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  const long bound = default_grid_bound(count);
  std::vector<Node> out;
  while (out.size() < count) {
    const Node a = l.at(Rational(rng.uniform(-bound, bound)));
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return NodeSet(std::move(out));
}

// Natural (Chung-Yao) lattice of n+2 lines in general position: the nodes are
// the pairwise intersections and the fundamental polynomial of each node is
// the normalized product of the n lines missing it.
struct NaturalLattice {
  LineArrangement arrangement;
  NodeSet nodes;
  std::vector<std::vector<std::size_t>> missing;  // per node, indices of lines not through it

  Poly2 fundamental(std::size_t i) const {
    Poly2 p(1);
    for (auto l : missing.at(i)) p = p * arrangement.lines[l].poly();
    return Rational(1 / p(nodes[i])) * p;
  }
};

inline NaturalLattice chung_yao_lattice(const LineArrangement& arr, int n) {
  if (n < 0 || arr.lines.size() != static_cast<std::size_t>(n + 2) || !arr.general_position()) {
    throw ContractError("chung_yao_lattice: need n+2 lines in general position");
  }
  NaturalLattice out{arr, {}, {}};
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < arr.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.lines.size(); ++j) {
      nodes.push_back(*arr.lines[i].intersection(arr.lines[j]));
      std::vector<std::size_t> miss;
      for (std::size_t l = 0; l < arr.lines.size(); ++l)
        if (l != i && l != j) miss.push_back(l);
      out.missing.push_back(std::move(miss));
    }
  }
  out.nodes = NodeSet(std::move(nodes));
  return out;
}

// {(i/n, j/n) : i + j <= n}; n = 0 gives the origin.
inline NodeSet principal_lattice(int n) {
  if (n < 0) throw ContractError("principal_lattice: n must be >= 0");
  std::vector<Node> out;
  const Rational step = n == 0 ? Rational(0) : make_rational(1, n);
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j) out.push_back({Rational((d - j) * step), Rational(j * step)});
  return NodeSet(std::move(out));
}

// d(n, m) nodes on a product of m general-position lines (a maximal curve)
// plus `residual` nodes off it.  When `collinear_residual` is set the
// residual nodes lie on one further line.
inline Configuration maximal_with_residual(int n, int m, std::size_t residual, std::uint64_t seed,
                                           bool collinear_residual = false) {
  if (m < 1 || m > n) throw ContractError("maximal_with_residual: need 1 <= m <= n");
  if (residual + d(n, m) > num_monomials(n)) throw ContractError("maximal_with_residual: too many nodes for Pi_n");
  Rng rng(seed);
  const std::size_t total = d(n, m) + residual;
  const long bound = default_grid_bound(total);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    try {
      LineArrangement arr = random_arrangement(collinear_residual ? m + 1 : m, rng);
      std::vector<Line> mu_lines(arr.lines.begin(), arr.lines.begin() + m);
      detail::IndependentBuilder b(n, rng);
      detail::fill_components(b, mu_lines, detail::line_caps(n, mu_lines.size()), bound);
      for (std::size_t r = 0; r < residual; ++r) {
        if (collinear_residual) detail::add_on_component(b, arr.lines, static_cast<std::size_t>(m), bound);
        else detail::add_off_curve(b, mu_lines, bound);
      }
      Configuration cfg;
      cfg.n = n;
      cfg.seed = seed;
      cfg.mu = product_curve(mu_lines);
      cfg.components = mu_lines;
      if (collinear_residual) cfg.ell = arr.lines.back();
      std::vector<std::size_t> tracked(residual);
      std::iota(tracked.begin(), tracked.end(), d(n, m));
      cfg.residual = detail::shuffle_into(cfg, b.nodes(), tracked, rng);
      return cfg;
    } catch (const GenerationError&) {
      // fresh lines on the next attempt
    }
  }
  throw GenerationError("maximal_with_residual: retry bound exhausted");
}

// `count` nodes spread round-robin over a product of `lines` general-position
// lines, within the per-line caps n+1, n, ...
inline Configuration on_line_product(int n, std::size_t lines, std::size_t count, std::uint64_t seed) {
  const auto quotas = detail::round_robin_quotas(n, lines, count);
  Rng rng(seed);
  const long bound = default_grid_bound(count);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    try {
      LineArrangement arr = random_arrangement(lines, rng);
      detail::IndependentBuilder b(n, rng);
      detail::fill_components(b, arr.lines, quotas, bound);
      Configuration cfg;
      cfg.n = n;
      cfg.seed = seed;
      cfg.mu = product_curve(arr.lines);
      cfg.components = arr.lines;
      detail::shuffle_into(cfg, b.nodes(), {}, rng);
      return cfg;
    } catch (const GenerationError&) {
    }
  }
  throw GenerationError("on_line_product: retry bound exhausted");
}

// d(n, k-3) nodes on a maximal curve of degree k-3 plus three nodes off it.
inline Configuration extremal_seven_config(int n, int k, std::uint64_t seed) {
  if (k < 4 || k > n - 1) throw ContractError("extremal_seven_config: need 4 <= k <= n-1");
  Configuration cfg = maximal_with_residual(n, k - 3, 3, seed);
  cfg.kind = "extremal7";
  cfg.k = k;
  return cfg;
}

// As extremal_seven_config, with the three residual nodes on a common line,
// so that all nodes lie on a curve of degree k-2.
inline Configuration collinear_residual_config(int n, int k, std::uint64_t seed) {
  if (k < 4 || k > n - 1) throw ContractError("collinear_residual_config: need 4 <= k <= n-1");
  Configuration cfg = maximal_with_residual(n, k - 3, 3, seed, true);
  cfg.kind = "extremal7-collinear";
  cfg.k = k;
  return cfg;
}

// d(n, k-2) nodes on a maximal curve of degree k-2 plus two off it: the
// four-curve extremal case.
inline Configuration hk_extremal_config(int n, int k, std::uint64_t seed) {
  if (k < 3 || k > n - 1) throw ContractError("hk_extremal_config: need 3 <= k <= n-1");
  Configuration cfg = maximal_with_residual(n, k - 2, 2, seed);
  cfg.kind = "hk";
  cfg.k = k;
  return cfg;
}

// d(n, k-1) nodes on a maximal curve of degree k-1 plus one off it.
inline Configuration ht2_extremal_config(int n, int k, std::uint64_t seed) {
  if (k < 2 || k > n - 1) throw ContractError("ht2_extremal_config: need 2 <= k <= n-1");
  Configuration cfg = maximal_with_residual(n, k - 1, 1, seed);
  cfg.kind = "ht2";
  cfg.k = k;
  return cfg;
}

// d(n, k-1) + 2 nodes on a product of k lines.
inline Configuration ht_config(int n, int k, std::uint64_t seed) {
  if (k < 1 || k > n) throw ContractError("ht_config: need 1 <= k <= n");
  Configuration cfg = on_line_product(n, static_cast<std::size_t>(k), d(n, k - 1) + 2, seed);
  cfg.kind = "ht";
  cfg.k = k;
  return cfg;
}

// d(n, k-2) + 3 nodes all on a product of k-1 lines.
inline Configuration hkv_curve_config(int n, int k, std::uint64_t seed) {
  if (k < 3 || k > n - 2) throw ContractError("hkv_curve_config: need 3 <= k <= n-2");
  Configuration cfg = on_line_product(n, static_cast<std::size_t>(k - 1), d(n, k - 2) + 3, seed);
  cfg.kind = "hkv";
  cfg.k = k;
  return cfg;
}

// d(n, k-2) nodes on a maximal curve of degree k-2 plus three off it.
inline Configuration hkv_maximal_config(int n, int k, std::uint64_t seed) {
  if (k < 3 || k > n - 2) throw ContractError("hkv_maximal_config: need 3 <= k <= n-2");
  Configuration cfg = maximal_with_residual(n, k - 2, 3, seed);
  cfg.kind = "hkv-maximal";
  cfg.k = k;
  return cfg;
}

inline Configuration generic_config(int n, int k, std::size_t size, std::uint64_t seed) {
  Configuration cfg;
  cfg.kind = "generic";
  cfg.n = n;
  cfg.k = k;
  cfg.seed = seed;
  cfg.nodes = random_independent_set(size, n, seed);
  return cfg;
}

// Enlarges an n-independent set lying on a product of distinct lines to
// d(n, deg) nodes on that product, accepting rank-raising samples only.
inline NodeSet extend_to_maximal_on_curve(const NodeSet& xs, std::span<const Line> components, int n,
                                          std::uint64_t seed) {
  if (components.empty()) throw ContractError("extend_to_maximal_on_curve: empty curve");
  const Curve c = product_curve(components);
  if (c.degree() > n) throw ContractError("extend_to_maximal_on_curve: curve degree exceeds n");
  for (const auto& a : xs)
    if (!c.contains(a)) throw ContractError("extend_to_maximal_on_curve: node off the curve");
  if (!is_independent(xs, n)) throw ContractError("extend_to_maximal_on_curve: input not n-independent");
  const std::size_t target = d(n, c.degree());
  if (xs.size() >= target) return xs;
  Rng rng(seed);
  detail::IndependentBuilder b(n, rng);
  for (const auto& a : xs) b.try_add(a);
  const long bound = default_grid_bound(target);
  const long last = static_cast<long>(components.size()) - 1;
  std::size_t line = 0;
  while (b.nodes().size() < target) {
    b.add_sampled(
        [&] {
          line = static_cast<std::size_t>(rng.uniform(0, last));
          return components[line].at(Rational(rng.uniform(-bound, bound)));
        },
        [&](const Node& a) {
          for (std::size_t j = 0; j < components.size(); ++j)
            if (j != line && components[j].contains(a)) return false;
          return true;
        },
        "node on curve");
  }
  return NodeSet(b.nodes());
}

// Enlarges an n-independent set to an n-poised one by grid sampling.
inline NodeSet extend_to_poised(const NodeSet& xs, int n, std::uint64_t seed) {
  if (!is_independent(xs, n)) throw ContractError("extend_to_poised: input not n-independent");
  Rng rng(seed);
  detail::IndependentBuilder b(n, rng);
  for (const auto& a : xs) b.try_add(a);
  const long bound = default_grid_bound(num_monomials(n));
  while (b.nodes().size() < num_monomials(n)) detail::add_off_curve(b, {}, bound);
  return NodeSet(b.nodes());
}

// n = 5 configuration for the five-node line corollary: 5 nodes on ell, 6 on
// a parallel line mu, and a perturbed principal lattice S of 10 nodes off
// both; retried until the 21 nodes are 5-poised.
inline Configuration gc_corollary_config(std::uint64_t seed) {
  constexpr int n = 5;
  Rng rng(seed);
  const NodeSet base = principal_lattice(3);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const Line ell = random_line(rng);
    const long shift = rng.uniform(1, 9) * (rng.uniform(0, 1) == 0 ? -1 : 1);
    const Line mu(ell.a(), ell.b(), ell.c() + shift);
    const NodeSet on_ell = points_on_line(ell, 5, static_cast<std::uint64_t>(rng.uniform(0, 1L << 30)));
    const NodeSet on_mu = points_on_line(mu, 6, static_cast<std::uint64_t>(rng.uniform(0, 1L << 30)));
    const long scale = rng.uniform(3, 6);
    const Node origin{Rational(rng.uniform(-20, 20)), Rational(rng.uniform(-20, 20))};
    std::vector<Node> s_nodes;
    for (const auto& a : base) {
      const Rational dx = make_rational(rng.uniform(-20, 20), 100);
      const Rational dy = make_rational(rng.uniform(-20, 20), 100);
      s_nodes.push_back({Rational(origin.x + 3 * scale * a.x + dx), Rational(origin.y + 3 * scale * a.y + dy)});
    }
    std::vector<Node> all(on_ell.begin(), on_ell.end());
    all.insert(all.end(), on_mu.begin(), on_mu.end());
    all.insert(all.end(), s_nodes.begin(), s_nodes.end());
    const bool s_off_lines = std::none_of(s_nodes.begin(), s_nodes.end(),
                                          [&](const Node& a) { return ell.contains(a) || mu.contains(a); });
    bool distinct = true;
    for (std::size_t i = 0; i < all.size() && distinct; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (all[i] == all[j]) distinct = false;
    if (!s_off_lines || !distinct) continue;
    if (!is_poised(NodeSet(s_nodes), 3)) continue;
    Configuration cfg;
    cfg.kind = "gc-corollary";
    cfg.n = n;
    cfg.k = 0;
    cfg.seed = seed;
    cfg.ell = ell;
    cfg.mu = Curve(mu);
    cfg.components = {mu};
    std::vector<std::size_t> tracked(10);
    std::iota(tracked.begin(), tracked.end(), 11);
    cfg.subset = detail::shuffle_into(cfg, all, tracked, rng);
    if (!is_poised(cfg.nodes, n)) continue;
    return cfg;
  }
  throw GenerationError("gc_corollary_config: retry bound exhausted");
}

// Nodes on a finite set of lines, each node on exactly one of them.
struct PairDivisionInstance {
  std::vector<Line> lines;
  std::vector<Node> nodes;
  std::vector<std::size_t> hosts;  // hosts[i] = the line through nodes[i]

  static PairDivisionInstance make(std::vector<Line> lines, std::vector<Node> nodes) {
    PairDivisionInstance inst{std::move(lines), std::move(nodes), {}};
    for (const auto& a : inst.nodes) {
      std::optional<std::size_t> host;
      for (std::size_t l = 0; l < inst.lines.size(); ++l) {
        if (!inst.lines[l].contains(a)) continue;
        if (host) throw FormatError("node " + to_string(a) + " is an intersection point of two lines");
        host = l;
      }
      if (!host) throw FormatError("node " + to_string(a) + " lies on no line of the instance");
      inst.hosts.push_back(*host);
    }
    return inst;
  }
};

using NodePairs = std::vector<std::pair<std::size_t, std::size_t>>;

// Splits the 2m nodes into m pairs with no pair on a common line.  Feasible
// exactly when no line hosts more than m nodes.  Greedy: pair a node of the
// most loaded line with a node of the most loaded other line (ties to the
// lower line index; nodes taken in input order).
inline std::optional<NodePairs> pair_division(const PairDivisionInstance& inst) {
  if (inst.nodes.size() % 2 != 0) throw ContractError("pair_division: odd node count");
  if (inst.hosts.size() != inst.nodes.size()) throw ContractError("pair_division: hosts not assigned");
  const std::size_t m = inst.nodes.size() / 2;
  std::vector<std::vector<std::size_t>> queues(inst.lines.size());
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) queues.at(inst.hosts[i]).push_back(i);
  for (const auto& q : queues)
    if (q.size() > m) return std::nullopt;
  std::vector<std::size_t> head(queues.size(), 0);
  auto load = [&](std::size_t l) { return queues[l].size() - head[l]; };
  NodePairs pairs;
  while (pairs.size() < m) {
    std::size_t first = 0;
    for (std::size_t l = 1; l < queues.size(); ++l)
      if (load(l) > load(first)) first = l;
    std::optional<std::size_t> second;
    for (std::size_t l = 0; l < queues.size(); ++l) {
      if (l == first || load(l) == 0) continue;
      if (!second || load(l) > load(*second)) second = l;
    }
    if (!second) throw ContractError("pair_division: greedy invariant broken");
    pairs.emplace_back(queues[first][head[first]++], queues[*second][head[*second]++]);
  }
  return pairs;
}

}  // namespace nindep

#endif  // NINDEP_CONSTRUCTIONS_HPP
