#pragma once

#include <vector>

#include "ectors/poly_zp.hpp"
#include "ectors/polyq.hpp"

namespace ectors {

/// Dense integer polynomial reduced modulo M (coefficients in [0, M)).
struct ZPolyMod {
  std::vector<Int> c;  // ascending
  Int modulus;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim();
  static ZPolyMod from_ints(const std::vector<Int>& v, const Int& m);
  static ZPolyMod from_modp(const PolyModP& f, const Int& m);
  PolyModP to_modp(std::uint64_t p) const;
  /// Coefficients lifted to the symmetric range (-M/2, M/2].
  std::vector<Int> symmetric() const;
};

inline constexpr int kFactorDegreeCap = 64;
inline constexpr long kRecombinationSubsetCap = 1L << 20;

/// Lift a coprime factorization of f mod p (f squarefree mod p, p not dividing lc(f))
/// to monic factors mod p^k whose product is f / lc(f) mod p^k.
std::vector<ZPolyMod> hensel_lift(const std::vector<Int>& f, const std::vector<PolyModP>& factors,
                                  std::uint64_t p, unsigned k);
std::vector<ZPolyMod> hensel_lift(const PolyQ& f, const std::vector<PolyModP>& factors, std::uint64_t p,
                                  unsigned k);

struct FactorQ {
  PolyQ factor;  // primitive integral, positive leading coefficient
  unsigned multiplicity;
};

struct FactorizationQ {
  Rat unit;
  std::vector<FactorQ> factors;
};

/// Zassenhaus factorization over Q; f = unit * prod factor^multiplicity.
FactorizationQ factor_over_q(const PolyQ& f, Rng& rng);
FactorizationQ factor_over_q(const PolyQ& f);

bool is_irreducible_q(const PolyQ& f);

}  // namespace ectors
