#ifndef NINDEP_UPOLY_HPP
#define NINDEP_UPOLY_HPP

// Dense univariate polynomials over an exact coefficient ring.
//
// The coefficient ring R is Integer, Rational, or UPoly<S> itself (bivariate
// polynomials viewed as polynomials in y over Z[x]).  Euclidean operations
// (divmod, gcd) need a field and are provided for Rational only; the
// subresultant resultant needs only an integral domain with exact division.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nindep/errors.hpp"
#include "nindep/exactnum.hpp"

namespace nindep {

template <class R>
class UPoly;

template <class R>
struct ring_traits {
  static R one() { return R(1); }
  static R from_int(long n) { return R(n); }
};

template <class S>
struct ring_traits<UPoly<S>> {
  static UPoly<S> one() { return UPoly<S>::constant(ring_traits<S>::one()); }
  static UPoly<S> from_int(long n) { return UPoly<S>::constant(ring_traits<S>::from_int(n)); }
};

inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

template <class R>
class UPoly {
 public:
  using coefficient_type = R;

  UPoly() = default;
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(R c) { return UPoly(std::vector<R>{std::move(c)}); }

  static UPoly monomial(R c, std::size_t power) {
    std::vector<R> v(power + 1);
    v[power] = std::move(c);
    return UPoly(std::move(v));
  }

  // t, the indeterminate.
  static UPoly identity() { return monomial(ring_traits<R>::one(), 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const R& lead() const { return c_.back(); }

  R coefficient(std::size_t power) const { return power < c_.size() ? c_[power] : R{}; }
  std::span<const R> coefficients() const { return c_; }

  template <class S>
  S evaluate(const S& t) const {
    S acc{};
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * t;
      acc = acc + S(c_[i]);
    }
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * ring_traits<R>::from_int(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }

  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == R{}) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }

  friend UPoly operator*(const R& s, const UPoly& a) {
    std::vector<R> out(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = s * a.c_[i];
    return UPoly(std::move(out));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == R{}) c_.pop_back();
  }

  std::vector<R> c_;
};

using Poly1 = UPoly<Rational>;

template <class R>
UPoly<R> exact_quotient(const UPoly<R>& a, const UPoly<R>& b);

// Exact division of every coefficient by a ring element.
template <class R>
UPoly<R> divide_coefficients(const UPoly<R>& a, const R& s) {
  std::vector<R> out(a.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exact_quotient(a.coefficients()[i], s);
  return UPoly<R>(std::move(out));
}

// Quotient of a by b when b divides a exactly in R[t].
template <class R>
UPoly<R> exact_quotient(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero()) throw ContractError("exact_quotient: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw ContractError("exact_quotient: inexact division");
  std::vector<R> rem(a.coefficients().begin(), a.coefficients().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<R> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const R& top = rem[k + db];
    if (top == R{}) continue;
    q[k] = exact_quotient(top, b.lead());
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - q[k] * b.coefficients()[j];
  }
  for (const auto& r : rem) {
    if (!(r == R{})) throw ContractError("exact_quotient: inexact division");
  }
  return UPoly<R>(std::move(q));
}

template <class R>
R power(const R& base, int e) {
  R acc = ring_traits<R>::one();
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) a = q b + r with deg r < deg b.
template <class R>
UPoly<R> pseudo_remainder(UPoly<R> a, const UPoly<R>& b) {
  if (b.is_zero()) throw ContractError("pseudo_remainder: zero divisor");
  int e = a.degree() - b.degree() + 1;
  if (e <= 0) return a;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const UPoly<R> shift = UPoly<R>::monomial(a.lead(), static_cast<std::size_t>(a.degree() - b.degree()));
    a = b.lead() * a - shift * b;
    --e;
  }
  return power(b.lead(), e) * a;
}

// Resultant of a and b by the subresultant polynomial remainder sequence.
template <class R>
R resultant(UPoly<R> a, UPoly<R> b) {
  if (a.is_zero() || b.is_zero()) return R{};
  bool negate = false;
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) negate = !negate;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    R r = power(b.lead(), a.degree());
    return negate ? R(-r) : r;
  }
  R g = ring_traits<R>::one();
  R h = ring_traits<R>::one();
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) negate = !negate;
    UPoly<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    b = divide_coefficients(r, R(g * power(h, delta)));
    g = a.lead();
    if (delta > 0) h = exact_quotient(power(g, delta), power(h, delta - 1));
    if (b.is_zero()) return R{};
    if (b.degree() == 0) break;
  }
  R out = exact_quotient(power(b.lead(), a.degree()), power(h, a.degree() - 1));
  return negate ? R(-out) : out;
}

// Field operations over Q[t].

inline std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw ContractError("divmod: division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly1{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = rem[k + db] / b.lead();
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q[k] * b.coefficients()[j];
  }
  rem.resize(db);
  return {Poly1(std::move(q)), Poly1(std::move(rem))};
}

inline Poly1 monic(const Poly1& p) {
  if (p.is_zero()) return p;
  return Rational(1 / p.lead()) * p;
}

// Monic gcd; gcd(0, 0) = 0.
inline Poly1 gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    Poly1 r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline std::string to_string(const Poly1& p, char var = 't') {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    std::string term = to_string(c);
    if (i > 0) term += std::string("*") + var + (i > 1 ? "^" + std::to_string(i) : "");
    if (!out.empty()) out += c > 0 ? " + " : " ";
    out += term;
  }
  return out;
}

}  // namespace nindep

#endif  // NINDEP_UPOLY_HPP
