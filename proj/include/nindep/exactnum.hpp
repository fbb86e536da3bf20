#ifndef NINDEP_EXACTNUM_HPP
#define NINDEP_EXACTNUM_HPP

// Exact scalars and fraction-free dense linear algebra.
//
// Every independence and dimension computation in the library reduces to the
// rank or nullspace of a small dense matrix with rational entries.  Rows are
// scaled to integers and reduced with Bareiss elimination, so intermediate
// values stay integral and every division is exact.  Pivot rule: columns are
// processed left to right and the first nonzero entry at or below the current
// row is taken.  That makes every result a deterministic function of the input.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nindep/errors.hpp"

namespace nindep {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  if (den == 0) throw ContractError("zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

// Parses "p/q" or "p".  Rejects zero or signed denominators and fractions that
// are not in lowest terms.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den)) {
    throw FormatError("malformed rational '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1 && !(p == 0 && q == 1)) {
    throw FormatError("rational '" + std::string(text) + "' is not in lowest terms");
  }
  if (negative) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols) throw ContractError("ragged matrix rows");
      std::copy(row.begin(), row.end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
      ++r;
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<Rational> operator*(std::span<const Rational> v) const {
    if (v.size() != cols_) throw ContractError("matrix-vector size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Rational acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

namespace detail {

using IntegerRow = std::vector<Integer>;

// Scales a rational row by the lcm of its denominators.
inline IntegerRow integral_row(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntegerRow out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    Integer t = l / row[i].get_den();
    out[i] = t * row[i].get_num();
  }
  return out;
}

// Nonzero rows of a Bareiss row-echelon form; pivots[i] is the pivot column of rows[i].
struct Echelon {
  std::vector<IntegerRow> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

inline Echelon bareiss_echelon(std::vector<IntegerRow> a, std::size_t cols) {
  Echelon e;
  e.cols = cols;
  const std::size_t nrows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  Integer t;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * a[i][j];
        t -= a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

inline Echelon echelon(const Matrix& m) {
  std::vector<IntegerRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(integral_row(m.row(r)));
  return bareiss_echelon(std::move(rows), m.cols());
}

// Back substitution on an echelon form: solves for pivot variables given the
// values already placed in x for every non-pivot column.  `rhs` supplies the
// constant column (or nothing for homogeneous systems).
inline void back_substitute(const Echelon& e, std::vector<Rational>& x, const std::vector<Integer>* rhs) {
  for (std::size_t i = e.rows.size(); i-- > 0;) {
    const std::size_t pc = e.pivots[i];
    Rational acc = rhs ? Rational((*rhs)[i]) : Rational(0);
    for (std::size_t j = pc + 1; j < x.size(); ++j) {
      if (e.rows[i][j] != 0 && x[j] != 0) acc -= Rational(e.rows[i][j]) * x[j];
    }
    x[pc] = acc / Rational(e.rows[i][pc]);
  }
}

}  // namespace detail

inline std::size_t rank(const Matrix& m) { return detail::echelon(m).pivots.size(); }

// Basis of {v : m v = 0}, one vector per non-pivot column (that coordinate set
// to 1, the other free coordinates 0), in increasing column order.
inline std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  const detail::Echelon e = detail::echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    detail::back_substitute(e, v, nullptr);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One exact solution of m x = rhs with free variables set to zero, or nullopt
// when rhs is not in the column space.
inline std::optional<std::vector<Rational>> solve(const Matrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw ContractError("solve: rhs length differs from row count");
  std::vector<detail::IntegerRow> rows;
  rows.reserve(m.rows());
  std::vector<Rational> augmented(m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), augmented.begin());
    augmented.back() = rhs[r];
    rows.push_back(detail::integral_row(augmented));
  }
  const detail::Echelon e = detail::bareiss_echelon(std::move(rows), m.cols() + 1);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Integer> constants;
  constants.reserve(e.rows.size());
  for (const auto& row : e.rows) constants.push_back(row.back());
  std::vector<Rational> x(m.cols());
  detail::back_substitute(e, x, &constants);
  return x;
}

// Incrementally maintained row space.  Each stored row has a unit pivot and is
// zero in the pivot columns of the rows stored before it, so reducing a
// candidate against the rows in insertion order clears every stored pivot.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  bool contains(std::span<const Rational> v) const { return reduce(v).empty(); }

  // Adds v and returns true when it is not already in the span.
  bool insert(std::span<const Rational> v) {
    std::vector<Rational> r = reduce(v);
    if (r.empty()) return false;
    std::size_t pc = 0;
    while (r[pc] == 0) ++pc;
    const Rational inv = 1 / r[pc];
    for (auto& x : r) x *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(pc);
    return true;
  }

 private:
  // Returns the reduced vector, or an empty vector when it reduces to zero.
  std::vector<Rational> reduce(std::span<const Rational> v) const {
    if (v.size() != cols_) throw ContractError("RowSpace: vector length mismatch");
    std::vector<Rational> r(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = r[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = pivots_[i]; j < cols_; ++j) {
        if (rows_[i][j] != 0) r[j] -= f * rows_[i][j];
      }
    }
    if (std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; })) return {};
    return r;
  }

  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nindep

#endif  // NINDEP_EXACTNUM_HPP
