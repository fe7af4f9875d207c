#pragma once

#include <string>
#include <vector>

#include "ectors/poly.hpp"

namespace ectors {

/// Build from ascending integer coefficients.
PolyQ polyq_from_ints(const std::vector<long>& c);
PolyQ polyq_from_ints(const std::vector<Int>& c);

/// monic gcd of f and g
PolyQ poly_gcd(const PolyQ& f, const PolyQ& g);

/// (-1)^{d(d-1)/2} Res(f, f') / lc(f)
Rat discriminant(const PolyQ& f);

/// f / gcd(f, f'), monic
PolyQ squarefree_part(const PolyQ& f);

/// Square-free decomposition: pairs (monic squarefree factor, multiplicity).
std::vector<std::pair<PolyQ, unsigned>> squarefree_decomposition(const PolyQ& f);

/// Positive rational c with f / c primitive integral (sign follows lc).
Rat content(const PolyQ& f);

/// f / content(f) as integer coefficients, leading coefficient positive.
std::vector<Int> primitive_part(const PolyQ& f);

bool is_integral(const PolyQ& f);
bool is_monic(const PolyQ& f);

/// Number of distinct real roots (Sturm sequence).
int count_real_roots(const PolyQ& f);

/// Polynomial text grammar: terms c*x^k, x^k, c joined by +/-; c integer or p/q.
/// `var` names the indeterminate.
PolyQ parse_polyq(const std::string& text, char var = 'x');
std::string to_string(const PolyQ& f, char var = 'x');

/// Largest absolute value of the coefficients of an integral polynomial.
Int max_abs_coeff(const PolyQ& f);

}  // namespace ectors
