#pragma once

#include <string>

#include "gkpack/types.hpp"

namespace gk {

// Instance JSON:
//   {"n": int, "rotations": bool, "items": [{"id": int, "w": int, "h": int, "p": int}]}
// Packing JSON:
//   {"region": {"x":0,"y":0,"w":int,"h":int},
//    "placements": [{"id": int, "x": int, "y": int, "rot": bool}]}
// Malformed input raises parse_error naming the offending field.

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);
Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);

Packing parse_packing(const std::string& text);
// Canonical serialization: placements sorted by item id.
std::string serialize_packing(const Packing& packing);
Packing load_packing(const std::string& path);
void save_packing(const std::string& path, const Packing& packing);

}  // namespace gk
