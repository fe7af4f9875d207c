#pragma once

// JSON forms shared by certificates and the bundled tables.

#include <string>
#include <vector>

#include "json.hpp"

#include "ectors/number_field.hpp"

namespace ectors {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become numbers; everything else a "p/q" string.
Json rat_json(const Rat& r);
Rat json_rat(const Json& j);

/// Ascending coefficient array.
Json poly_json(const PolyQ& f);
PolyQ json_poly(const Json& j);

/// Power-basis coordinates, padded to the field degree.
Json elem_json(const NfElem& x);
NfElem json_elem(const NumberField& K, const Json& j);

}  // namespace ectors
