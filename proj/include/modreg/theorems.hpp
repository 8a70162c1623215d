#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modreg/properties.hpp"

namespace modreg {

enum class TheoremStatus { Pass, Fail, Skipped, Error };
const char* name(TheoremStatus s);

struct TheoremClause {
    std::string name;
    bool value = false;
};

struct TheoremVerdict {
    std::string theorem;
    std::string instance;
    TheoremStatus status = TheoremStatus::Skipped;
    std::vector<TheoremClause> clauses;  // evaluated clauses, registry order
    std::string reason;                  // skip reason, error message, or failure summary
    double elapsed_ms = 0.0;
};

struct TheoremInfo {
    const char* id;
    const char* title;  // one-line statement of what is being checked
    bool ring_only;     // evaluated on the base ring alone, module ignored
    bool requires_commutative;
    bool requires_nontrivial;
    bool requires_multiplication;
    bool requires_duo;
    bool requires_strongly_f_regular;
};

std::span<const TheoremInfo> theorem_registry();
const TheoremInfo* find_theorem(std::string_view id);

// Finiteness discharges the finitely-generated / finitely-presented
// hypotheses some statements carry; embedded verbatim in sweep reports.
extern const char* const kFinitenessJustification;

struct CatalogRing {
    std::string name;
    RingPtr ring;
};
struct CatalogModule {
    std::string ring_name;
    RingPtr ring;
    std::string name;
    ModulePtr module;
};
struct InstanceCatalog {
    std::vector<CatalogRing> rings;
    std::vector<CatalogModule> modules;
};

struct CatalogSpec {
    std::vector<CatalogRing> rings;
    long max_module_order = 64;
};
CatalogSpec default_catalog_spec(const Limits& limits = default_limits());
// Per ring: the regular module, every cyclic quotient R/I over the full right
// ideal lattice, and direct sums of two cyclic quotients within the size cap.
// Trivial modules are filtered out; duplicate presentations are kept once.
InstanceCatalog generate_catalog(const CatalogSpec& spec, const Limits& limits = default_limits());

TheoremVerdict verify_theorem(const std::string& id, const RingPtr& R, const ModulePtr& M,
                              const Limits& limits = default_limits());

struct SweepOptions {
    std::vector<std::string> theorems;  // empty = every registered theorem
    int jobs = 1;
};
struct SweepFailure {
    size_t verdict_index;           // into SweepReport::verdicts
    std::string reproduction_json;  // self-contained: ring + module descriptions + theorem id
};
struct SweepReport {
    std::vector<TheoremVerdict> verdicts;  // deterministic order: instances, then registry order
    std::vector<SweepFailure> failures;
    long passed = 0;
    long failed = 0;
    long skipped = 0;
    long errors = 0;
    double elapsed_ms = 0.0;
};
SweepReport sweep(const InstanceCatalog& catalog, const SweepOptions& opts = {},
                  const Limits& limits = default_limits());

}  // namespace modreg
