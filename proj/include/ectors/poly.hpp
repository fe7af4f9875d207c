#pragma once

// Dense univariate polynomials over a field-like coefficient type.

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "ectors/field_traits.hpp"

namespace ectors {

namespace detail {
template <class R>
bool coeff_is_zero(const R& x) {
  return is_zero(x);
}
}  // namespace detail

/// Ascending-degree coefficients, no trailing zero; the zero polynomial is empty
/// (degree -1 stands in for -infinity).
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static Poly constant(const R& c) { return Poly(std::vector<R>{c}); }
  static Poly monomial(const R& c, int k) {
    std::vector<R> v(static_cast<std::size_t>(k) + 1, zero_like(c));
    v.back() = c;
    return Poly(std::move(v));
  }
  /// x - r
  static Poly linear_root(const R& r) { return Poly(std::vector<R>{-r, one_like(r)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](std::size_t i) const { return c_[i]; }
  const R& lead() const { return c_.back(); }

  /// Coefficient of x^i, with `like` supplying the zero when out of range.
  R coeff(int i, const R& like) const {
    if (i < 0 || i > degree()) return zero_like(like);
    return c_[static_cast<std::size_t>(i)];
  }

  R eval(const R& x) const {
    R acc = zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    std::vector<R> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(-x);
    return Poly(std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Poly& big = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    std::vector<R> v = big.c_;
    for (std::size_t i = 0; i < small.size(); ++i) v[i] = v[i] + small.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> v(a.size() + b.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const R& s, const Poly& a) {
    std::vector<R> v;
    v.reserve(a.size());
    for (const auto& x : a.c_) v.push_back(s * x);
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Multiply by x^k.
  Poly shift(int k) const {
    if (is_zero()) return *this;
    std::vector<R> v(static_cast<std::size_t>(k), zero_like(c_[0]));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> v;
    for (std::size_t i = 1; i < c_.size(); ++i)
      v.push_back(c_[i] * from_int_like(c_[i], static_cast<long>(i)));
    return Poly(std::move(v));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    R inv = one_like(lead()) / lead();
    return inv * *this;
  }

  /// Substitute x -> s*x.
  Poly scale_var(const R& s) const {
    std::vector<R> v = c_;
    if (v.empty()) return *this;
    R p = one_like(s);
    for (auto& x : v) {
      x = x * p;
      p = p * s;
    }
    return Poly(std::move(v));
  }

  /// Composition this(g).
  Poly compose(const Poly& g) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + Poly::constant(*it);
    return acc;
  }

  template <class F>
  auto map(F&& fn) const {
    using T = decltype(fn(c_[0]));
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(fn(x));
    return Poly<T>(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

/// Quotient and remainder; b must be nonzero.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<R>(), a};
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  const R inv_lead = one_like(b.lead()) / b.lead();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - db) + 1, zero_like(b.lead()));
  for (int i = a.degree(); i >= db; --i) {
    const R& top = rem[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    R q = top * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] =
          rem[static_cast<std::size_t>(i - db + j)] - q * b[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
  return divmod(a, b).second;
}

template <class R>
Poly<R> operator/(const Poly<R>& a, const Poly<R>& b) {
  return divmod(a, b).first;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    Poly<R> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> xgcd(const Poly<R>& a, const Poly<R>& b, const R& like) {
  Poly<R> r0 = a, r1 = b;
  Poly<R> s0 = Poly<R>::constant(one_like(like)), s1;
  Poly<R> t0, t1 = Poly<R>::constant(one_like(like));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<R> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<R> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  R inv = one_like(like) / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

template <class R>
Poly<R> pow(Poly<R> base, unsigned e, const R& like) {
  Poly<R> r = Poly<R>::constant(one_like(like));
  while (e) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return r;
}

/// Resultant via the Euclidean remainder sequence over the coefficient field.
template <class R>
R resultant(Poly<R> f, Poly<R> g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant of zero polynomial");
  R acc = one_like(f.lead());
  for (;;) {
    const int m = f.degree();
    const int n = g.degree();
    if (n == 0) {
      R p = one_like(acc);
      for (int i = 0; i < m; ++i) p = p * g.lead();
      return acc * p;
    }
    if (m == 0) {
      R p = one_like(acc);
      for (int i = 0; i < n; ++i) p = p * f.lead();
      return acc * p;
    }
    if (m < n) {
      if ((m * n) % 2 == 1) acc = -acc;
      std::swap(f, g);
      continue;
    }
    Poly<R> r = f % g;
    if (r.is_zero()) return zero_like(acc);
    // Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)
    if ((m * n) % 2 == 1) acc = -acc;
    for (int i = 0; i < m - r.degree(); ++i) acc = acc * g.lead();
    f = std::move(g);
    g = std::move(r);
  }
}

using PolyQ = Poly<Rat>;

}  // namespace ectors
