#ifndef NINDEP_CURVES_HPP
#define NINDEP_CURVES_HPP

// Curve-level predicates on n-independent node sets: the d(n, k) count,
// maximal curves and their characterization, and line usage.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nindep/errors.hpp"
#include "nindep/nodesets.hpp"
#include "nindep/poly2.hpp"

namespace nindep {

// Zero set of a polynomial of degree >= 1.
class Curve {
 public:
  explicit Curve(Poly2 poly) : poly_(std::move(poly)) {
    if (poly_.degree() < 1) throw ContractError("a curve needs a defining polynomial of degree >= 1");
  }
  explicit Curve(const Line& l) : Curve(l.poly()) {}

  const Poly2& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  bool contains(const Node& a) const { return poly_(a) == 0; }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Poly2 poly_;
};

// N_n - N_{n-k} = k(2n + 3 - k)/2: the most n-independent nodes a degree-k
// curve can carry.
constexpr std::size_t d(int n, int k) {
  if (k < 0 || k > n) throw ContractError("d(n, k) needs 0 <= k <= n");
  return static_cast<std::size_t>(k * (2 * n + 3 - k) / 2);
}

inline std::vector<std::size_t> indices_on_curve(const NodeSet& xs, const Curve& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (c.contains(xs[i])) out.push_back(i);
  return out;
}

inline NodeSet nodes_on_curve(const NodeSet& xs, const Curve& c) { return xs.subset(indices_on_curve(xs, c)); }

// A curve of degree k <= n through exactly d(n, k) nodes.  Sets smaller than
// d(n, k) never carry a maximal curve.
inline bool is_maximal_curve(const NodeSet& xs, const Curve& c, int n) {
  const int k = c.degree();
  if (k > n) throw ContractError("is_maximal_curve: curve degree exceeds n");
  if (xs.size() < d(n, k)) return false;
  return indices_on_curve(xs, c).size() == d(n, k);
}

// Every polynomial of Pi_n vanishing on the nodes of a maximal curve is a
// multiple of the curve.  Checked on a basis of that vanishing space.
inline bool maximal_curve_factorization_check(const NodeSet& xs, const Curve& c, int n) {
  if (!is_maximal_curve(xs, c, n)) throw ContractError("maximal_curve_factorization_check: curve is not maximal");
  const auto space = vanishing_space(nodes_on_curve(xs, c), n);
  for (const auto& p : space.basis) {
    if (!divides(c.poly(), p)) return false;
  }
  return true;
}

struct MaximalCurveWitness {
  Curve curve;
  std::vector<std::size_t> residual;  // indices into the searched set, ascending
};

namespace detail {

// Calls f on every `size`-element subset of {0, ..., n-1} in lexicographic
// order until f returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t size, F&& f) {
  if (size > n) return false;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    if (f(std::as_const(idx))) return true;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Exhaustive search over residual subsets S of xs for a degree-m curve through
// the nodes outside S that carries exactly d(n, m) nodes of xs.  The first hit
// in lexicographic subset order and basis order is returned.
inline std::optional<MaximalCurveWitness> find_maximal_curve(const NodeSet& xs, int m, int n, std::size_t residual) {
  if (m < 1 || m > n) throw ContractError("find_maximal_curve: need 1 <= m <= n");
  if (residual > 3) throw ContractError("find_maximal_curve: residual must be <= 3");
  const std::size_t target = d(n, m);
  if (xs.size() < residual || xs.size() - residual != target) return std::nullopt;
  std::optional<MaximalCurveWitness> found;
  detail::for_each_subset(xs.size(), residual, [&](const std::vector<std::size_t>& s) {
    const auto space = vanishing_space(xs.without(s), m);
    for (const auto& p : space.basis) {
      if (p.degree() != m) continue;
      Curve c(p);
      auto on = indices_on_curve(xs, c);
      if (on.size() != target) continue;
      found = MaximalCurveWitness{std::move(c), s};
      return true;
    }
    return false;
  });
  return found;
}

// Node idx uses l when l divides its fundamental polynomial.  Requires an
// n-poised set so that the fundamental polynomial is unique.
inline bool uses_line(const NodeSet& xs, std::size_t idx, const Line& l, int n) {
  if (!is_poised(xs, n)) throw ContractError("uses_line: node set is not n-poised");
  const auto p = fundamental_polynomial(xs, idx, n);
  return divides(l.poly(), *p).has_value();
}

// Indices of the nodes that use l.
inline std::vector<std::size_t> line_users(const NodeSet& xs, const Line& l, int n) {
  if (!is_poised(xs, n)) throw ContractError("line_users: node set is not n-poised");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto p = fundamental_polynomial(xs, i, n);
    if (divides(l.poly(), *p)) out.push_back(i);
  }
  return out;
}

}  // namespace nindep

#endif  // NINDEP_CURVES_HPP
