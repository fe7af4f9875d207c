#pragma once

// Residue fields F_q = F_p[t]/(g), q = p^k with k <= 6.

#include <array>
#include <memory>
#include <optional>

#include "ectors/poly_zp.hpp"

namespace ectors {

ECTORS_DEFINE_ERROR(CapExceeded);

inline constexpr int kMaxFqDegree = 6;
/// Largest field size for which point enumeration is allowed.
inline constexpr std::uint64_t kFqEnumerationCap = 200000;

class FqElem;

class FqField {
 public:
  struct Data {
    std::uint64_t p;
    int k;
    PolyModP modulus;
    Int q;
    std::array<std::uint64_t, kMaxFqDegree> nonresidue{};  // a fixed non-square, for square roots
  };

  /// g must be irreducible of degree 1..6 over F_p with p odd.
  FqField(const PolyModP& g, std::uint64_t seed = kDefaultSeed);
  /// The prime field F_p.
  static FqField prime(std::uint64_t p);

  std::uint64_t p() const { return d_->p; }
  int degree() const { return d_->k; }
  const Int& size() const { return d_->q; }
  /// Field size as a machine integer; throws CapExceeded above the enumeration cap.
  std::uint64_t enumerable_size() const;
  const PolyModP& modulus() const { return d_->modulus; }
  const std::shared_ptr<const Data>& data() const { return d_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(long v) const;
  FqElem from_int(const Int& v) const;
  /// Class of t (the generator of F_p[t]/(g)).
  FqElem gen() const;
  /// Element with base-p digits of i as coefficients; 0 <= i < q.
  FqElem element(std::uint64_t i) const;
  FqElem from_poly(const PolyModP& f) const;
  FqElem from_coeffs(const std::array<std::uint64_t, kMaxFqDegree>& c) const;

  bool operator==(const FqField& o) const;

 private:
  explicit FqField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class FqElem;
};

class FqElem {
 public:
  FqElem() = default;

  const std::shared_ptr<const FqField::Data>& parent() const { return f_; }
  FqField field() const { return FqField(f_); }
  std::uint64_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  /// Base-p index, inverse of FqField::element.
  std::uint64_t index() const;

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend FqElem operator/(const FqElem& a, const FqElem& b);
  FqElem operator-() const;
  FqElem& operator+=(const FqElem& b) { return *this = *this + b; }
  FqElem& operator-=(const FqElem& b) { return *this = *this - b; }
  FqElem& operator*=(const FqElem& b) { return *this = *this * b; }
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }
  bool operator<(const FqElem& o) const { return index() < o.index(); }

  FqElem inv() const;
  FqElem pow(const Int& e) const;
  std::string str() const;

 private:
  FqElem(std::shared_ptr<const FqField::Data> f, std::array<std::uint64_t, kMaxFqDegree> c)
      : f_(std::move(f)), c_(c) {}
  std::shared_ptr<const FqField::Data> f_;
  std::array<std::uint64_t, kMaxFqDegree> c_{};
  friend class FqField;
};

/// Square test via Euler's criterion.
bool fq_is_square(const FqElem& x);
/// A square root (Tonelli-Shanks), or none when x is not a square.
std::optional<FqElem> fq_sqrt(const FqElem& x);

inline bool is_zero(const FqElem& x) { return x.is_zero(); }
inline FqElem zero_like(const FqElem& x) { return x.field().zero(); }
inline FqElem one_like(const FqElem& x) { return x.field().one(); }
inline FqElem from_int_like(const FqElem& x, long v) { return x.field().from_int(v); }
/// Throws DivisionByZero when p divides the denominator.
FqElem from_rat_like(const FqElem& x, const Rat& v);

}  // namespace ectors
