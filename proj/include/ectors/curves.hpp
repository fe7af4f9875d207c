#pragma once

// Curves over number fields and residue fields: point counting, group structure,
// isomorphism testing and text I/O.

#include "ectors/elliptic.hpp"
#include "ectors/finite_field.hpp"
#include "ectors/number_field.hpp"

namespace ectors {

using CurveK = EllipticCurve<NfElem>;
using PointK = CurvePoint<NfElem>;
using CurveFq = EllipticCurve<FqElem>;
using PointFq = CurvePoint<FqElem>;
using CurveQ = EllipticCurve<Rat>;
using PointQ = CurvePoint<Rat>;

/// All points of E(F_q), identity first; requires q within the enumeration cap.
std::vector<PointFq> enumerate_points(const CurveFq& E);
std::uint64_t count_points(const CurveFq& E);
/// (d1, d2) with d1 | d2, d1 d2 = #E(F_q) and d2 the group exponent.
TorsionStructure group_structure(const CurveFq& E);
TorsionStructure group_structure(const CurveFq& E, std::uint64_t count);

/// Isomorphic over the common base field.
bool is_isomorphic(const CurveK& E1, const CurveK& E2);

CurveK curve_from_coeffs(const NumberField& K, const std::vector<Rat>& a);
/// "[a1,a2,a3,a4,a6]" with entries in the element syntax.
CurveK parse_curve(const NumberField& K, const std::string& text);
/// "(x,y)" or "O".
PointK parse_point(const NumberField& K, const std::string& text);
std::string curve_str(const CurveK& E);
std::string point_str(const PointK& P);

}  // namespace ectors
