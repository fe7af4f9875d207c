#pragma once

// Polynomials over the prime field F_p (p < 2^62) and their factorization.

#include <cstdint>
#include <string>
#include <vector>

#include "ectors/arith.hpp"
#include "ectors/polyq.hpp"

namespace ectors {

class PolyModP {
 public:
  PolyModP() = default;
  PolyModP(std::uint64_t p, std::vector<std::uint64_t> c);

  static PolyModP x_pow(std::uint64_t p, unsigned k);
  static PolyModP constant(std::uint64_t p, std::uint64_t c);

  /// Reduce an integral-at-p rational polynomial; throws DivisionByZero when p divides a denominator.
  static PolyModP reduce(const PolyQ& f, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const { return c_.back(); }

  std::uint64_t eval(std::uint64_t x) const;
  PolyModP monic() const;
  PolyModP derivative() const;

  bool operator==(const PolyModP& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const PolyModP& o) const { return !(*this == o); }
  bool operator<(const PolyModP& o) const;

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  PolyModP scale(std::uint64_t s) const;

  std::string str() const;

 private:
  void trim();
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);
PolyModP operator%(const PolyModP& a, const PolyModP& b);
PolyModP operator/(const PolyModP& a, const PolyModP& b);
PolyModP gcd(PolyModP a, PolyModP b);
/// base^e mod m
PolyModP powmod(PolyModP base, const Int& e, const PolyModP& m);

struct FactorModP {
  PolyModP factor;  // monic irreducible
  unsigned multiplicity;
};

/// Complete factorization into monic irreducibles; the leading coefficient is dropped.
/// Squarefree split, distinct-degree, then Cantor-Zassenhaus equal-degree splitting.
std::vector<FactorModP> factor_mod_p(const PolyModP& f, Rng& rng);

/// Degrees of the distinct-degree decomposition of a squarefree polynomial.
std::vector<std::pair<PolyModP, int>> distinct_degree_factor(const PolyModP& f);

/// Roots in F_p (distinct, ascending).
std::vector<std::uint64_t> roots_mod_p(const PolyModP& f, Rng& rng);

bool is_squarefree(const PolyModP& f);

}  // namespace ectors
