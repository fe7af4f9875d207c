#pragma once

// Torsion classification sets and genera of X1(m, mn), as constant tables.

#include <set>
#include <string>

#include "ectors/elliptic.hpp"
#include "ectors/json_io.hpp"

namespace ectors {

ECTORS_DEFINE_ERROR(OutOfRange);

inline constexpr int kClassificationVersion = 1;

using StructureSet = std::set<TorsionStructure>;

/// Torsion structures over number fields of degree d, d = 1, 2, 3.
const StructureSet& phi(int d);
/// Structures occurring infinitely often over degree-d fields, d = 4, 5, 6.
const StructureSet& phi_infinity(int d);
/// phi(d) for d <= 3, phi_infinity(d) for d = 4, 5, 6.
const StructureSet& known_structures(int d);

/// Genus of X1(m, mn) from the tabulated range.
int genus(long m, long mn);
int genus(const TorsionStructure& s);

Json phi_json();
Json genus_json();

}  // namespace ectors
