#pragma once

#include <json.hpp>

#include "dilogeq/coords.hpp"
#include "dilogeq/reduction.hpp"
#include "dilogeq/relations.hpp"

namespace dilogeq {

// ordered_json keeps insertion order, so emitted documents are byte-stable.
using json = nlohmann::ordered_json;

json chord_to_json(const Chord& c);

std::string chord_key(const Chord& c);  // "i,j"

// Object keyed by "i,j".
json coord_map_to_json(const CoordMap& m);

// List of {symbol, coefficient}; wedge symbols are pairs of chords,
// product symbols are chord lists.
json formal_sum_to_json(const FormalSum<WedgePair>& s);
json formal_sum_to_json(const FormalSum<ProductSymbol>& s);

// { n, case, instances: [ { sign, kind, J, terms: [ { blocks, chords } ],
//   constant_L1 } ], expansion_ok } with 1-based integers and constants as
// "p/q" strings.
json certificate_to_json(const Certificate& cert);

}  // namespace dilogeq
