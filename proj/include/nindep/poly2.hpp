#ifndef NINDEP_POLY2_HPP
#define NINDEP_POLY2_HPP

// Sparse bivariate polynomials over Q, lines, and the polynomial predicates
// built on them: exact division, restriction to a line, square-freeness and
// distinct line intersections.
//
// Monomials are ordered graded-lexicographically with x before y:
//   1, x, y, x^2, xy, y^2, x^3, ...
// so x^i y^j sits at index (i+j)(i+j+1)/2 + j.  This order fixes the column
// order of collocation matrices and the iteration order of serialized output.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nindep/errors.hpp"
#include "nindep/exactnum.hpp"
#include "nindep/upoly.hpp"

namespace nindep {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

struct Monomial {
  int x = 0;
  int y = 0;

  constexpr int degree() const { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.x > b.x;
  }
};

// dim Pi_n = (n+1)(n+2)/2; zero for n < 0.
constexpr std::size_t num_monomials(int n) {
  return n < 0 ? 0 : static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

constexpr std::size_t monomial_index(const Monomial& m) {
  return num_monomials(m.degree() - 1) + static_cast<std::size_t>(m.y);
}

// Monomials of total degree <= n in graded-lex order.
inline std::vector<Monomial> monomials_up_to(int n) {
  std::vector<Monomial> out;
  out.reserve(num_monomials(n));
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j) out.push_back({d - j, j});
  return out;
}

class Poly2 {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLex>;

  Poly2() = default;
  explicit Poly2(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{0, 0}, c);
  }

  static Poly2 x() { return monomial(1, 1, 0); }
  static Poly2 y() { return monomial(1, 0, 1); }

  static Poly2 monomial(const Rational& c, int i, int j) {
    if (i < 0 || j < 0) throw ContractError("negative exponent");
    Poly2 p;
    if (c != 0) p.terms_.emplace(Monomial{i, j}, c);
    return p;
  }

  // Coefficient vector in graded-lex order over the monomials of degree <= n.
  static Poly2 from_coefficients(std::span<const Rational> coeffs, int n) {
    if (coeffs.size() != num_monomials(n)) throw ContractError("coefficient vector length differs from N_n");
    Poly2 p;
    const auto mons = monomials_up_to(n);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (coeffs[i] != 0) p.terms_.emplace(mons[i], coeffs[i]);
    }
    return p;
  }

  std::vector<Rational> coefficient_vector(int n) const {
    if (degree() > n) throw ContractError("polynomial degree exceeds requested bound");
    std::vector<Rational> v(num_monomials(n));
    for (const auto& [m, c] : terms_) v[monomial_index(m)] = c;
    return v;
  }

  // -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(int i, int j) const {
    auto it = terms_.find(Monomial{i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational operator()(const Rational& x, const Rational& y) const {
    if (terms_.empty()) return 0;
    const int d = degree();
    std::vector<Rational> xp(static_cast<std::size_t>(d) + 1), yp(static_cast<std::size_t>(d) + 1);
    xp[0] = 1;
    yp[0] = 1;
    for (int i = 1; i <= d; ++i) {
      xp[i] = xp[i - 1] * x;
      yp[i] = yp[i - 1] * y;
    }
    Rational acc = 0;
    for (const auto& [m, c] : terms_) acc += c * xp[m.x] * yp[m.y];
    return acc;
  }

  Rational operator()(const Point& p) const { return (*this)(p.x, p.y); }

  Poly2 operator-() const {
    Poly2 r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Poly2& operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    return r;
  }

  friend Poly2 operator*(const Rational& s, const Poly2& a) {
    if (s == 0) return {};
    Poly2 r = a;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  TermMap terms_;
};

inline Poly2 power(const Poly2& p, int e) {
  Poly2 acc(1);
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

// Human-readable form, e.g. "x^2 - 1/2*x*y + 3".  Terms in descending order.
inline std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string vars;
    auto var = [&vars](char v, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += '*';
      vars += v;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    var('x', m.x);
    var('y', m.y);
    const Rational mag = abs(c);
    std::string term;
    if (vars.empty()) term = to_string(mag);
    else term = mag == 1 ? vars : to_string(mag) + "*" + vars;
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

// The line a*x + b*y + c = 0, normalized so the first nonzero of (a, b) is 1.
class Line {
 public:
  Line(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ == 0 && b_ == 0) throw ContractError("line needs (a, b) != (0, 0)");
    const Rational s = a_ != 0 ? a_ : b_;
    a_ /= s;
    b_ /= s;
    c_ /= s;
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  Poly2 poly() const { return a_ * Poly2::x() + b_ * Poly2::y() + Poly2(c_); }

  Rational operator()(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  bool contains(const Point& p) const { return (*this)(p) == 0; }

  // (t, -(a t + c)/b) when b != 0, otherwise (-c/a, t).
  Point at(const Rational& t) const {
    if (b_ != 0) return {t, Rational(-(a_ * t + c_) / b_)};
    return {Rational(-c_ / a_), t};
  }

  // The parametrization as a pair of linear polynomials in t.
  std::pair<Poly1, Poly1> parametrization() const {
    if (b_ != 0) return {Poly1::identity(), Poly1({Rational(-c_ / b_), Rational(-a_ / b_)})};
    return {Poly1::constant(Rational(-c_ / a_)), Poly1::identity()};
  }

  bool parallel_to(const Line& o) const { return a_ * o.b_ - b_ * o.a_ == 0; }

  std::optional<Point> intersection(const Line& o) const {
    const Rational det = a_ * o.b_ - b_ * o.a_;
    if (det == 0) return std::nullopt;
    return Point{Rational((b_ * o.c_ - c_ * o.b_) / det), Rational((c_ * o.a_ - a_ * o.c_) / det)};
  }

  friend bool operator==(const Line& l, const Line& m) { return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_; }

 private:
  Rational a_, b_, c_;
};

// Univariate polynomial obtained by substituting the line's parametrization.
// The zero polynomial means p vanishes identically on the line.
inline Poly1 restrict_to_line(const Poly2& p, const Line& l) {
  if (p.is_zero()) return {};
  const auto [xt, yt] = l.parametrization();
  const int d = p.degree();
  std::vector<Poly1> xp{Poly1::constant(1)}, yp{Poly1::constant(1)};
  for (int i = 1; i <= d; ++i) {
    xp.push_back(xp.back() * xt);
    yp.push_back(yp.back() * yt);
  }
  Poly1 acc;
  for (const auto& [m, c] : p.terms()) acc += c * (xp[m.x] * yp[m.y]);
  return acc;
}

// Quotient r with p = q r, found by solving the linear system for the
// coefficients of r in Pi_{deg p - deg q}.
inline std::optional<Poly2> divides(const Poly2& q, const Poly2& p) {
  if (q.degree() < 1) throw ContractError("divides: divisor must have degree >= 1");
  if (p.is_zero()) throw ContractError("divides: dividend must be nonzero");
  const int dp = p.degree();
  const int dr = dp - q.degree();
  if (dr < 0) return std::nullopt;
  const auto rmons = monomials_up_to(dr);
  Matrix m(num_monomials(dp), rmons.size());
  for (std::size_t col = 0; col < rmons.size(); ++col) {
    for (const auto& [mq, c] : q.terms()) {
      m(monomial_index({mq.x + rmons[col].x, mq.y + rmons[col].y}), col) = c;
    }
  }
  const auto rhs = p.coefficient_vector(dp);
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  return Poly2::from_coefficients(*sol, dr);
}

namespace detail {

using ZPoly = UPoly<Integer>;
using ZyPoly = UPoly<ZPoly>;  // polynomial in y with coefficients in Z[x]

// p as a polynomial in y over Q[x]; coefficient j is the x-polynomial of y^j.
inline std::vector<Poly1> y_coefficients(const Poly2& p) {
  std::vector<std::vector<Rational>> raw;
  for (const auto& [m, c] : p.terms()) {
    if (raw.size() <= static_cast<std::size_t>(m.y)) raw.resize(static_cast<std::size_t>(m.y) + 1);
    auto& row = raw[static_cast<std::size_t>(m.y)];
    if (row.size() <= static_cast<std::size_t>(m.x)) row.resize(static_cast<std::size_t>(m.x) + 1);
    row[static_cast<std::size_t>(m.x)] = c;
  }
  std::vector<Poly1> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

// Clears denominators across all coefficients, giving an element of Z[x][y].
inline ZyPoly to_integral(const std::vector<Poly1>& ycoeffs) {
  Integer l = 1;
  for (const auto& c : ycoeffs)
    for (const auto& q : c.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<ZPoly> out;
  out.reserve(ycoeffs.size());
  for (const auto& c : ycoeffs) {
    std::vector<Integer> zs;
    zs.reserve(c.coefficients().size());
    for (const auto& q : c.coefficients()) {
      Integer t = l / q.get_den();
      zs.push_back(t * q.get_num());
    }
    out.emplace_back(std::move(zs));
  }
  return ZyPoly(std::move(out));
}

inline bool univariate_square_free(const Poly1& u) {
  if (u.degree() <= 0) return true;
  return gcd(u, u.derivative()).degree() == 0;
}

}  // namespace detail

// True iff p has no repeated nonconstant factor over the algebraic closure.
// p = c(x) * q(x, y) with c the content in Q[x] of p viewed in Q[x][y] and q
// primitive.  p is square-free iff c is (gcd with c') and q is, and for the
// primitive part that holds iff Res_y(q, dq/dy) != 0.
inline bool is_square_free(const Poly2& p) {
  if (p.degree() < 1) throw ContractError("is_square_free: degree must be >= 1");
  const auto ycoeffs = detail::y_coefficients(p);
  Poly1 content;
  for (const auto& c : ycoeffs) content = gcd(content, c);
  if (!detail::univariate_square_free(content)) return false;
  if (ycoeffs.size() <= 1) return true;  // p depends on x only
  std::vector<Poly1> primitive;
  primitive.reserve(ycoeffs.size());
  for (const auto& c : ycoeffs) primitive.push_back(divmod(c, content).first);
  const detail::ZyPoly q = detail::to_integral(primitive);
  return !resultant(q, q.derivative()).is_zero();
}

// Distinct complex intersections of the curve p = 0 with l; `contained` is set
// instead when l is a component of the curve.
struct LineIntersection {
  bool contained = false;
  std::size_t distinct = 0;
};

inline LineIntersection distinct_line_intersections(const Poly2& p, const Line& l) {
  if (p.degree() < 1) throw ContractError("distinct_line_intersections: degree must be >= 1");
  const Poly1 u = restrict_to_line(p, l);
  if (u.is_zero()) return {true, 0};
  if (u.degree() == 0) return {false, 0};
  return {false, static_cast<std::size_t>(u.degree() - gcd(u, u.derivative()).degree())};
}

}  // namespace nindep

#endif  // NINDEP_POLY2_HPP
