#ifndef NINDEP_NODESETS_HPP
#define NINDEP_NODESETS_HPP

// Node sets and the interpolation quantities attached to them: collocation
// matrices, n-independence, fundamental polynomials and the vanishing space
// P_{n,X} = {p in Pi_n : p|_X = 0}.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nindep/errors.hpp"
#include "nindep/exactnum.hpp"
#include "nindep/poly2.hpp"

namespace nindep {

using Node = Point;

inline std::string to_string(const Node& a) { return "(" + to_string(a.x) + ", " + to_string(a.y) + ")"; }

// Ordered set of pairwise distinct nodes.
class NodeSet {
 public:
  NodeSet() = default;

  explicit NodeSet(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (nodes_[i] == nodes_[j]) throw FormatError("duplicate node " + to_string(nodes_[i]));
  }

  NodeSet(std::initializer_list<Node> nodes) : NodeSet(std::vector<Node>(nodes)) {}

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const Node& operator[](std::size_t i) const { return nodes_.at(i); }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }
  std::span<const Node> nodes() const { return nodes_; }

  std::optional<std::size_t> index_of(const Node& a) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), a);
    if (it == nodes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
  }

  bool contains(const Node& a) const { return index_of(a).has_value(); }

  NodeSet with(const Node& a) const {
    if (contains(a)) throw FormatError("duplicate node " + to_string(a));
    NodeSet out = *this;
    out.nodes_.push_back(a);
    return out;
  }

  // Nodes at the given indices, in the order given.
  NodeSet subset(std::span<const std::size_t> indices) const {
    NodeSet out;
    out.nodes_.reserve(indices.size());
    for (auto i : indices) out.nodes_.push_back(nodes_.at(i));
    return out;
  }

  // All nodes except those at the given indices, order preserved.
  NodeSet without(std::span<const std::size_t> indices) const {
    NodeSet out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (std::find(indices.begin(), indices.end(), i) == indices.end()) out.nodes_.push_back(nodes_[i]);
    return out;
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<Node> nodes_;
};

// Values of the graded-lex monomials of degree <= n at a node.
inline std::vector<Rational> monomial_row(const Node& a, int n) {
  std::vector<Rational> row;
  row.reserve(num_monomials(n));
  std::vector<Rational> xp{Rational(1)}, yp{Rational(1)};
  for (int i = 1; i <= n; ++i) {
    xp.push_back(xp.back() * a.x);
    yp.push_back(yp.back() * a.y);
  }
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j) row.push_back(xp[d - j] * yp[j]);
  return row;
}

inline Matrix collocation_matrix(const NodeSet& xs, int n) {
  if (n < 0) throw ContractError("collocation_matrix: degree must be >= 0");
  Matrix m(xs.size(), num_monomials(n));
  for (std::size_t r = 0; r < xs.size(); ++r) {
    const auto row = monomial_row(xs[r], n);
    std::copy(row.begin(), row.end(), m.row(r).begin());
  }
  return m;
}

inline bool is_independent(const NodeSet& xs, int n) {
  if (xs.size() > num_monomials(n)) return false;
  return rank(collocation_matrix(xs, n)) == xs.size();
}

inline bool is_poised(const NodeSet& xs, int n) { return xs.size() == num_monomials(n) && is_independent(xs, n); }

struct VanishingSpace {
  int degree_bound = 0;
  std::vector<Poly2> basis;

  std::size_t dimension() const { return basis.size(); }
};

inline VanishingSpace vanishing_space(const NodeSet& xs, int n) {
  VanishingSpace v{n, {}};
  if (n < 0) return v;
  for (const auto& coeffs : nullspace(collocation_matrix(xs, n))) v.basis.push_back(Poly2::from_coefficients(coeffs, n));
  return v;
}

// dim P_{n,X} without building the basis.
inline std::size_t vanishing_dimension(const NodeSet& xs, int n) {
  if (n < 0) return 0;
  return num_monomials(n) - rank(collocation_matrix(xs, n));
}

// One p in Pi_n with p = 1 at node idx and p = 0 at the other nodes, or
// nullopt when the node is n-dependent within xs.  Below poisedness the
// representative is the one the solver's pivot rule picks.
inline std::optional<Poly2> fundamental_polynomial(const NodeSet& xs, std::size_t idx, int n) {
  if (idx >= xs.size()) throw ContractError("fundamental_polynomial: node index out of range");
  std::vector<Rational> rhs(xs.size());
  rhs[idx] = 1;
  auto sol = solve(collocation_matrix(xs, n), rhs);
  if (!sol) return std::nullopt;
  return Poly2::from_coefficients(*sol, n);
}

// Greedy scan in input order; keeps each node that raises the collocation rank.
inline std::vector<std::size_t> maximal_independent_indices(const NodeSet& xs, int n) {
  RowSpace span(num_monomials(n));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (span.rank() == span.cols()) break;
    if (span.insert(monomial_row(xs[i], n))) kept.push_back(i);
  }
  return kept;
}

inline NodeSet maximal_independent_subset(const NodeSet& xs, int n) {
  return xs.subset(maximal_independent_indices(xs, n));
}

// Swaps node idx for a_new when the fundamental polynomial of node idx does
// not vanish at a_new; nullopt otherwise.
inline std::optional<NodeSet> replace_node(const NodeSet& xs, std::size_t idx, const Node& a_new, int n) {
  if (idx >= xs.size()) throw ContractError("replace_node: node index out of range");
  const auto p = fundamental_polynomial(xs, idx, n);
  if (!p || !is_independent(xs, n)) throw ContractError("replace_node: node set is not n-independent");
  if (xs[idx] == a_new) return xs;
  if ((*p)(a_new) == 0) return std::nullopt;
  std::vector<Node> nodes(xs.begin(), xs.end());
  nodes[idx] = a_new;
  NodeSet out(std::move(nodes));
  if (!is_independent(out, n)) throw ContractError("replace_node: replacement lost independence");
  return out;
}

}  // namespace nindep

#endif  // NINDEP_NODESETS_HPP
