#ifndef HRG_JSON_IO_HPP
#define HRG_JSON_IO_HPP

#include <string>

#include "hrg/action.hpp"
#include "hrg/constructions.hpp"

namespace hrg {

// Strict parsers for the documented file formats: unknown fields, wrong
// types and duplicate ids are Parse errors. Semantic problems (dangling
// references, broken automorphisms, unbalanced cocycles) are left to the
// usual validation reports so they surface with their own kinds.

// {"k": int, "vertices": [id], "edges": [{"id","color","range","source"}],
//  "squares": [{"first": [id,id], "second": [id,id]}]}
Skeleton skeleton_from_json(const std::string& text);
std::string skeleton_to_json(const Skeleton& sk);

// {"l": int, "generators": [{"vertex_map": {v: v'}, "edge_map": {e: e'}}]}
// Maps must cover every vertex and edge; unknown images become unresolved
// slots that validate_action reports.
ZlAction action_from_json(const Skeleton& sk, const std::string& text);
std::string action_to_json(const ZlAction& a);

// {"values": {edge_id: [int, ...]}}; the dimension is read off the entries.
Cocycle cocycle_from_json(const std::string& text);
std::string cocycle_to_json(const Cocycle& c);

} // namespace hrg

#endif
