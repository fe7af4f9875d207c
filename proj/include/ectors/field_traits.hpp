#pragma once

// Field capability used by the generic polynomial and elliptic-curve code.
//
// An element type E participates if it supports + - * / (and unary -), ==,
// and the free functions below (found by ordinary lookup for Rat, by ADL for
// NfElem / FqElem). Elements carry their parent, so zero/one are derived from
// an existing element.

#include "ectors/arith.hpp"

namespace ectors {

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_int_like(const Rat&, long v) { return Rat(v); }
inline Rat from_rat_like(const Rat&, const Rat& v) { return v; }

}  // namespace ectors
