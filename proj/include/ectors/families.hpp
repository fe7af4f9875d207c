#pragma once

// Fixed Weierstrass models of the genus-one curves X1(N), X1(m,mn) and the
// genus-zero families E_v(m,m) / E_v(3,6).

#include <optional>
#include <string>
#include <vector>

#include "ectors/torsion.hpp"

namespace ectors {

ECTORS_DEFINE_ERROR(DegenerateParameter);

enum class ModularKind { X11, X14, X15, X2_10, X2_12, X3_9, X4_8, X6_6 };

struct ModularModel {
  ModularKind kind;
  TorsionStructure level;  // (m, mn) of X1(m, mn)
  std::vector<long> coeffs;  // [a1, a2, a3, a4, a6], all rational integers
  TorsionStructure rational_torsion;
  int required_root_of_unity;
  std::string equation;

  CurveK curve(const NumberField& K) const;
};

const std::vector<ModularKind>& all_modular_kinds();
ModularModel modular_model(ModularKind kind);
/// "11", "14", "15", "2,10", "2,12", "3,9", "4,8", "6,6" (also "X1(2,10)").
ModularKind parse_modular_kind(const std::string& s);
std::string kind_str(ModularKind kind);

enum class FamilyKind { F3_3, F3_6, F4_4, F5_5 };

const std::vector<FamilyKind>& all_family_kinds();
TorsionStructure family_structure(FamilyKind k);
/// m with the family defined over Q(zeta_m).
int family_cyclotomic(FamilyKind k);
FamilyKind parse_family_kind(const std::string& s);
std::string kind_str(FamilyKind kind);
/// Q(zeta_m) as Q[a]/(Phi_m).
NumberField family_base_field(FamilyKind k);

struct FamilyMember {
  FamilyKind kind;
  NfElem v;
  std::optional<NfElem> t;
  std::optional<NfElem> U, V;
  NfElem zeta;  // the root of unity the coefficients were built from
  CurveK curve;
};

/// Throws RootOfUnityMissing, or DegenerateParameter on a vanishing denominator or discriminant.
FamilyMember family_member(FamilyKind kind, const NfElem& v);

/// Listed degenerate parameter values lying in K.
std::vector<NfElem> listed_degenerate_values(FamilyKind kind, const NumberField& K);

struct DegenerateSample {
  NfElem v;
  bool listed;
  bool degenerate;  // computed: denominator or discriminant vanishes
};

std::vector<DegenerateSample> degenerate_locus_check(FamilyKind kind, const std::vector<NfElem>& samples);

/// Random v with small coordinates for which the member is nondegenerate.
NfElem random_nondegenerate_v(FamilyKind kind, const NumberField& K, Rng& rng, long height = 6);

/// Cusps of X1(m,mn) as classes of primitive (a, c) mod mn under a -> a + m*k*c and
/// (a, c) -> (-a, -c); t in (Z/mn)^* acts on the Galois side by a -> t*a.
struct CuspClasses {
  long m = 1, n = 1;  // level (m, n = mn)
  std::vector<int> cls;  // class index of (a, c) at a*n + c, -1 when not primitive
  int count = 0;
};
CuspClasses cusp_classes(const ModularModel& model);

/// Image of Gal(Qbar/K) in (Z/N)^*, as the residues t with sigma_t fixing K and Q(zeta_N) in common.
std::vector<long> galois_image(const NumberField& K, long N);

/// Cusps of the model defined over K. All of them are torsion points of the model.
int rational_cusp_count(const ModularModel& model, const NumberField& K);

struct GrowthReport {
  TorsionStructure over_q;
  TorsionStructure over_k;
  TorsionCertificate cert_q;
  TorsionCertificate cert_k;
};

GrowthReport growth_check(ModularKind kind, const NumberField& K, const CertifyOptions& opt = {});

}  // namespace ectors
