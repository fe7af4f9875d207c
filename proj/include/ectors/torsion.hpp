#pragma once

// Torsion certificates for curves over number fields: explicit points for the lower
// bound, reductions at good unramified odd primes for the upper bound.

#include <optional>
#include <string>
#include <vector>

#include "ectors/curves.hpp"
#include "ectors/roots.hpp"

namespace ectors {

ECTORS_DEFINE_ERROR(PrimesExhausted);
ECTORS_DEFINE_ERROR(BadReduction);
ECTORS_DEFINE_ERROR(RootOfUnityMissing);

inline constexpr std::uint64_t kPrimeSearchBound = 10000;
/// Residue fields larger than this are skipped when bounding torsion.
inline constexpr std::uint64_t kReductionFieldCap = 60000;

struct IntegralizedModel {
  CurveK original;
  CurveK scaled;
  Int u;
};

/// Scale by u = lcm of the coordinate denominators: a_i -> u^i a_i.
IntegralizedModel integralize(const CurveK& E);

struct UsablePrime {
  std::uint64_t p;
  PrimeSplitting splitting;
};

/// Odd primes p not dividing disc(f), u, or the numerator of N(Delta_scaled), ascending.
std::vector<UsablePrime> good_usable_primes(const IntegralizedModel& M, std::size_t count,
                                            std::uint64_t start = 3);
std::vector<UsablePrime> good_usable_primes(const CurveK& E, std::size_t count);

/// Reduction of the integral model at the i-th prime factor over p.
CurveFq reduce_curve(const CurveK& E, const PrimeSplitting& s, std::size_t i);

struct ReductionRecord {
  std::uint64_t p;
  std::size_t factor_index;
  int residue_degree;
  std::uint64_t count;
  TorsionStructure group;
};

struct UpperBound {
  /// gcd of the point counts
  long order_bound = 0;
  /// Every admissible (m, mn) embeds in this structure.
  TorsionStructure bound{1, 1};
  std::vector<ReductionRecord> reductions;
};

/// Combine reductions at the given primes (residue fields up to kReductionFieldCap).
UpperBound torsion_upper_bound(const CurveK& E, const std::vector<UsablePrime>& primes);
/// Admissible structures for a bound, ascending.
std::vector<TorsionStructure> admissible_structures(const UpperBound& ub);

/// Points P with l^k P = O: roots of the l-division locus, then repeated l-division.
/// Requires l prime, l <= 11, l^k <= 64 (l <= 7 when k >= 2).
std::vector<PointK> find_torsion_points(const CurveK& E, long l, int k, const KRootFinderConfig& cfg = {});

enum class Verdict { Proven, UpperBoundOnly, LowerBoundOnly, Mismatch };
std::string verdict_str(Verdict v);

struct Generator {
  PointK point;
  long order;
};

struct TorsionCertificate {
  CurveK curve;
  TorsionStructure claimed{1, 1};
  /// Structure of the subgroup generated by points actually exhibited.
  TorsionStructure realized{1, 1};
  std::vector<Generator> generators;
  UpperBound upper;
  Verdict verdict = Verdict::UpperBoundOnly;
  /// Why the search stopped short, when it did.
  std::string note;
};

struct CertifyOptions {
  std::size_t min_primes = 3;
  std::size_t max_primes = 12;
  KRootFinderConfig roots;
};

TorsionCertificate certify_torsion(const CurveK& E, const TorsionStructure& claimed,
                                   const std::vector<PointK>& hints = {}, const CertifyOptions& opt = {});

/// Full torsion subgroup; verdict Proven when the search matched the reductions.
std::pair<TorsionStructure, TorsionCertificate> torsion_structure(const CurveK& E, const CertifyOptions& opt = {});

/// Every element of the subgroup generated by the points (identity included).
std::vector<PointK> subgroup_span(const CurveK& E, const std::vector<PointK>& gens);
/// Abstract structure of a finite subgroup given by its elements.
TorsionStructure structure_of(const CurveK& E, const std::vector<PointK>& elems);

/// Canonical JSON text (sorted keys, no whitespace).
std::string certificate_json(const TorsionCertificate& c);

}  // namespace ectors
