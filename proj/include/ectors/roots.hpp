#pragma once

// Roots of polynomials over a number field, found p-adically at a totally split
// prime and confirmed by exact evaluation.

#include <vector>

#include "ectors/number_field.hpp"

namespace ectors {

ECTORS_DEFINE_ERROR(NoSplitPrime);
ECTORS_DEFINE_ERROR(TupleCapExceeded);

struct KRootFinderConfig {
  std::uint64_t split_prime_search_bound = 50000;
  /// Cap on log2 of the p-adic precision exponent.
  int precision_doubling_limit = 12;
  std::uint64_t tuple_cap = 1000000;
  int degree_cap = 64;
  /// Suitable split primes compared before committing to the one with fewest candidate tuples.
  int prime_candidates = 4;
};

PolyK to_polyk(const NumberField& K, const PolyQ& g);

/// All distinct roots of g in K, ascending in the canonical element order.
std::vector<NfElem> roots_in_field(const PolyK& g, const KRootFinderConfig& cfg = {});
std::vector<NfElem> roots_in_field(const NumberField& K, const PolyQ& g, const KRootFinderConfig& cfg = {});

/// Square roots of x in K (empty when x is not a square).
std::vector<NfElem> sqrt_in_field(const NfElem& x);

}  // namespace ectors
