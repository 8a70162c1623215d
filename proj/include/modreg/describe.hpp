#pragma once

#include <json.hpp>
#include <string>

#include "modreg/module.hpp"
#include "modreg/ring.hpp"

namespace modreg {

using json = nlohmann::json;

struct NamedRing {
    std::string name;
    RingPtr ring;
};

struct NamedModule {
    std::string name;
    ModulePtr module;
};

// Description documents are JSON objects:
//   {"kind": "ring",   "name": ..., "construct": {"recipe": ..., ...params}}
//   {"kind": "module", "name": ..., "ring": <ring doc | file path>, "construct": {...}}
// Unknown keys anywhere are rejected (InvalidInputError).
// Ring recipes:   zmod{n} | poly_quotient{p, monic} | product{parts}
//                 | upper_triangular{q, size} | raw{additive_orders, mul_table, one}
// Module recipes: regular{} | from_action{invariant_factors, action}
//                 | cyclic_quotient{ideal_gens} | direct_sum{parts}
NamedRing parse_ring_description(const json& doc, const Limits& limits = default_limits());
// `ring` overrides any "ring" key in the document; when null the document must
// carry one (inline object, or a path resolved against base_dir).
NamedModule parse_module_description(const json& doc, const RingPtr& ring,
                                     const std::string& base_dir,
                                     const Limits& limits = default_limits());

json load_json_file(const std::string& path);  // InvalidInputError on I/O or parse failure

// Self-contained raw descriptions (round-trip through the parsers above).
json ring_description(const FiniteRing& R, const std::string& name);
json module_description(const FiniteModule& M, const std::string& name);

std::string canonical_json(const json& j);  // sorted keys, 2-space indent, trailing newline
std::string content_digest(const std::string& bytes);  // FNV-1a 64-bit, hex
const char* tool_version();

}  // namespace modreg
