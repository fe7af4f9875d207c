#pragma once

// Long Weierstrass curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over any
// field-like element type (Rat, NfElem, FqElem).

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ectors/poly.hpp"

namespace ectors {

ECTORS_DEFINE_ERROR(SingularCurve);
ECTORS_DEFINE_ERROR(JUndefined);
ECTORS_DEFINE_ERROR(NotOnCurve);
ECTORS_DEFINE_ERROR(FieldMismatch);

/// Z/m x Z/mn, written (m, mn).
struct TorsionStructure {
  long m = 1;
  long mn = 1;
  long order() const { return m * mn; }
  long n() const { return mn / m; }
  bool operator==(const TorsionStructure& o) const { return m == o.m && mn == o.mn; }
  bool operator!=(const TorsionStructure& o) const { return !(*this == o); }
  bool operator<(const TorsionStructure& o) const { return m != o.m ? m < o.m : mn < o.mn; }
  /// True iff Z/m x Z/mn embeds in o.
  bool embeds_in(const TorsionStructure& o) const { return o.m % m == 0 && o.mn % mn == 0; }
  std::string str() const { return "(" + std::to_string(m) + "," + std::to_string(mn) + ")"; }
};

/// Canonical (m, mn) for an abelian group given as Z/a x Z/b.
inline TorsionStructure canonical_structure(long a, long b) {
  long g = std::gcd(a, b);
  return {g, a / g * b};
}

template <class F>
struct CurvePoint {
  bool infinity = true;
  F x{}, y{};

  static CurvePoint identity() { return CurvePoint(); }
  static CurvePoint affine(F x, F y) { return CurvePoint{false, std::move(x), std::move(y)}; }
  bool operator==(const CurvePoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }
};

template <class F>
struct Invariants {
  F b2, b4, b6, b8, c4, c6, disc;
};

template <class F>
class EllipticCurve {
 public:
  using Point = CurvePoint<F>;
  using PolyF = Poly<F>;

  EllipticCurve() = default;
  /// Accepts singular models; the group law refuses them.
  EllipticCurve(F a1, F a2, F a3, F a4, F a6)
      : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
    const F& l = a1_;
    F two = from_int_like(l, 2), four = from_int_like(l, 4);
    inv_.b2 = a1_ * a1_ + four * a2_;
    inv_.b4 = two * a4_ + a1_ * a3_;
    inv_.b6 = a3_ * a3_ + four * a6_;
    inv_.b8 = a1_ * a1_ * a6_ + four * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    const F &b2 = inv_.b2, &b4 = inv_.b4, &b6 = inv_.b6, &b8 = inv_.b8;
    inv_.c4 = b2 * b2 - from_int_like(l, 24) * b4;
    inv_.c6 = -(b2 * b2 * b2) + from_int_like(l, 36) * b2 * b4 - from_int_like(l, 216) * b6;
    inv_.disc = -(b2 * b2 * b8) - from_int_like(l, 8) * b4 * b4 * b4 - from_int_like(l, 27) * b6 * b6 +
                from_int_like(l, 9) * b2 * b4 * b6;
    singular_ = is_zero(inv_.disc);
  }

  const F& a1() const { return a1_; }
  const F& a2() const { return a2_; }
  const F& a3() const { return a3_; }
  const F& a4() const { return a4_; }
  const F& a6() const { return a6_; }
  std::vector<F> coeffs() const { return {a1_, a2_, a3_, a4_, a6_}; }
  const Invariants<F>& invariants() const { return inv_; }
  const F& discriminant() const { return inv_.disc; }
  bool is_singular() const { return singular_; }

  F j_invariant() const {
    if (is_singular()) throw JUndefined("discriminant vanishes");
    return inv_.c4 * inv_.c4 * inv_.c4 / inv_.disc;
  }

  F zero() const { return zero_like(a1_); }
  F one() const { return one_like(a1_); }

  bool on_curve(const Point& P) const {
    if (P.infinity) return true;
    const F &x = P.x, &y = P.y;
    return y * y + a1_ * x * y + a3_ * y == ((x + a2_) * x + a4_) * x + a6_;
  }

  Point neg(const Point& P) const {
    if (P.infinity) return P;
    return Point::affine(P.x, -P.y - a1_ * P.x - a3_);
  }

  Point add(const Point& P, const Point& Q) const {
    require_nonsingular();
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    F lambda, nu;
    if (P.x == Q.x) {
      F ysum = P.y + Q.y + a1_ * Q.x + a3_;
      if (is_zero(ysum)) return Point::identity();
      // tangent
      const F& x = P.x;
      F num = from_int_like(x, 3) * x * x + from_int_like(x, 2) * a2_ * x + a4_ - a1_ * P.y;
      F den = from_int_like(x, 2) * P.y + a1_ * x + a3_;
      lambda = num / den;
      nu = (-(x * x * x) + a4_ * x + from_int_like(x, 2) * a6_ - a3_ * P.y) / den;
    } else {
      lambda = (Q.y - P.y) / (Q.x - P.x);
      nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
    }
    F x3 = lambda * lambda + a1_ * lambda - a2_ - P.x - Q.x;
    F y3 = -(lambda + a1_) * x3 - nu - a3_;
    return Point::affine(std::move(x3), std::move(y3));
  }

  Point sub(const Point& P, const Point& Q) const { return add(P, neg(Q)); }
  Point dbl(const Point& P) const { return add(P, P); }

  Point mul(long n, const Point& P) const {
    require_nonsingular();
    if (n < 0) return mul(-n, neg(P));
    Point r = Point::identity(), b = P;
    while (n) {
      if (n & 1) r = add(r, b);
      n >>= 1;
      if (n) b = add(b, b);
    }
    return r;
  }

  /// Least n <= bound with nP = O.
  std::optional<long> order_of_point(const Point& P, long bound) const {
    require_nonsingular();
    Point Q = P;
    for (long n = 1; n <= bound; ++n) {
      if (Q.infinity) return n;
      Q = add(Q, P);
    }
    return std::nullopt;
  }

  /// Checked point constructor.
  Point point(F x, F y) const {
    Point P = Point::affine(std::move(x), std::move(y));
    if (!on_curve(P)) throw NotOnCurve("point does not satisfy the curve equation");
    return P;
  }

  /// psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  PolyF two_torsion_cubic() const {
    const F& l = a1_;
    return PolyF({inv_.b6, from_int_like(l, 2) * inv_.b4, inv_.b2, from_int_like(l, 4)});
  }

  /// f_n = psi_n for odd n and psi_n / psi_2 for even n, as polynomials in x.
  std::vector<PolyF> division_table(int n) const {
    if (n < 0 || n > 64) throw Error("division polynomial index out of range");
    const F& l = a1_;
    const Invariants<F>& I = inv_;
    auto c = [&](long v) { return from_int_like(l, v); };
    std::vector<PolyF> f(static_cast<std::size_t>(std::max(n, 4)) + 3);
    f[0] = PolyF();
    f[1] = PolyF::constant(one());
    f[2] = PolyF::constant(one());
    f[3] = PolyF({I.b8, c(3) * I.b6, c(3) * I.b4, I.b2, c(3)});
    f[4] = PolyF({I.b4 * I.b8 - I.b6 * I.b6, I.b2 * I.b8 - I.b4 * I.b6, c(10) * I.b8, c(10) * I.b6, c(5) * I.b4, I.b2,
                  c(2)});
    const PolyF Fsq = two_torsion_cubic() * two_torsion_cubic();
    for (int k = 5; k <= n + 2 && k < static_cast<int>(f.size()); ++k) {
      const std::size_t m = static_cast<std::size_t>(k / 2);
      if (k % 2 == 1) {
        PolyF t1 = f[m + 2] * f[m] * f[m] * f[m];
        PolyF t2 = f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
        f[static_cast<std::size_t>(k)] = (m % 2 == 0) ? Fsq * t1 - t2 : t1 - Fsq * t2;
      } else {
        f[static_cast<std::size_t>(k)] = f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
      }
    }
    f.resize(static_cast<std::size_t>(n) + 2);
    return f;
  }

  /// psi_n for odd n; psi_2^2 for n = 2; psi_n / psi_2 for even n >= 4.
  PolyF division_poly(int n) const {
    if (n < 1) throw Error("division polynomial index must be positive");
    if (n == 2) return two_torsion_cubic();
    return division_table(n)[static_cast<std::size_t>(n)];
  }

  /// Polynomial whose roots are the x-coordinates of the nonzero points of E[n].
  PolyF torsion_locus(int n) const {
    if (n == 1) return PolyF::constant(one());
    PolyF fn = division_table(n)[static_cast<std::size_t>(n)];
    return n % 2 == 0 ? two_torsion_cubic() * fn : fn;
  }

  /// (num, den) with x(nP) = num(x) / den(x).
  std::pair<PolyF, PolyF> multiplication_x_map(int n) const {
    if (n < 1) throw Error("multiplier must be positive");
    if (n == 1) return {PolyF({zero(), one()}), PolyF::constant(one())};
    auto f = division_table(n + 1);
    const std::size_t k = static_cast<std::size_t>(n);
    const PolyF X({zero(), one()});
    const PolyF Fc = two_torsion_cubic();
    if (n % 2 == 1) return {X * f[k] * f[k] - Fc * f[k - 1] * f[k + 1], f[k] * f[k]};
    return {X * Fc * f[k] * f[k] - f[k - 1] * f[k + 1], Fc * f[k] * f[k]};
  }

  /// Model after x = u^2 x' + r, y = u^3 y' + s u^2 x' + t (discriminant divides by u^12).
  EllipticCurve change(const F& u, const F& r, const F& s, const F& t) const {
    auto c = [&](long v) { return from_int_like(a1_, v); };
    F u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    F b1 = (a1_ + c(2) * s) / u;
    F b2 = (a2_ - s * a1_ + c(3) * r - s * s) / u2;
    F b3 = (a3_ + r * a1_ + c(2) * t) / u3;
    F b4 = (a4_ - s * a3_ + c(2) * r * a2_ - (t + r * s) * a1_ + c(3) * r * r - c(2) * s * t) / u4;
    F b6 = (a6_ + r * a4_ + r * r * a2_ + r * r * r - t * a3_ - t * t - r * t * a1_) / u6;
    return EllipticCurve(b1, b2, b3, b4, b6);
  }

  /// Image of P under the change of variables used by change().
  static Point change_point(const Point& P, const F& u, const F& r, const F& s, const F& t) {
    if (P.infinity) return P;
    F u2 = u * u;
    F x = (P.x - r) / u2;
    F y = (P.y - s * (P.x - r) - t) / (u2 * u);
    return Point::affine(x, y);
  }

  void require_nonsingular() const {
    if (singular_) throw SingularCurve("group law on a singular model");
  }

 private:
  F a1_, a2_, a3_, a4_, a6_;
  Invariants<F> inv_;
  bool singular_ = true;
};

}  // namespace ectors
