#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "modreg/hom.hpp"
#include "modreg/module.hpp"
#include "modreg/ring.hpp"

namespace modreg {

enum class RingProp {
    Reduced,
    Reversible,
    Ifp,
    Regular,
    UnitRegular,
    StronglyRegular,
    MorphicRight,
    LeftPInjective,
    Abelian,
};

enum class ModProp {
    Reduced,
    Symmetric,
    Ifp,
    Rigid,
    AnnihilatorStable,
    CoReduced,  // = weakly JT-regular
    WeaklyMorphic,
    Morphic,
    WeaklyEndoregular,
    Endoregular,
    AbelianEndoregular,
    Duo,
    Multiplication,
    JtRegular,
    FRegular,
    StronglyFRegular,
    AlmostLocallySimple,
    ZRegular,
    KLocalRetractable,
    PInjectiveOverS,
    Simple,
};

const char* name(RingProp p);
const char* name(ModProp p);
std::optional<RingProp> ring_prop_from_name(std::string_view s);
std::optional<ModProp> mod_prop_from_name(std::string_view s);
std::span<const RingProp> all_ring_props();
std::span<const ModProp> all_mod_props();

// Does prop need a commutative base ring?
bool needs_commutative(ModProp p);

struct Verdict {
    std::string property;
    bool value = false;
    // First counterexample in enumeration order; element indices whose roles
    // are named by `note` (e.g. "m, a").  Empty on true verdicts.
    std::vector<long> witness;
    std::string note;
    double elapsed_ms = 0.0;
};

Verdict evaluate_ring_property(const RingPtr& R, RingProp prop, const Limits& limits = default_limits());

// Evaluates module properties with shared lazily-built state (endomorphism
// ring, submodule lattice, rebuilt submodules); verdicts are memoized.
class PropertyEvaluator {
  public:
    explicit PropertyEvaluator(ModulePtr M, const Limits& limits = default_limits());

    const ModulePtr& module() const { return M_; }
    Verdict evaluate(ModProp prop);

    const EndoRing& endo();
    const std::vector<Submodule>& lattice();
    ModulePtr as_module(const Submodule& N);  // cached submodule-as-module

  private:
    Verdict compute(ModProp prop);

    ModulePtr M_;
    Limits limits_;
    std::optional<EndoRing> endo_;
    std::optional<std::vector<Submodule>> lattice_;
    std::map<std::vector<Elem>, ModulePtr> sub_cache_;
    std::map<ModProp, Verdict> memo_;
};

Verdict evaluate_module_property(const ModulePtr& M, ModProp prop,
                                 const Limits& limits = default_limits());

}  // namespace modreg
