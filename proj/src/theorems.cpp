#include "modreg/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "modreg/describe.hpp"
#include "modreg/hom.hpp"

namespace modreg {

const char* name(TheoremStatus s) {
    switch (s) {
        case TheoremStatus::Pass: return "pass";
        case TheoremStatus::Fail: return "fail";
        case TheoremStatus::Skipped: return "skipped";
        case TheoremStatus::Error: return "error";
    }
    return "?";
}

const char* const kFinitenessJustification =
    "finitely generated / finitely presented hypotheses hold for every instance: "
    "all modules here are finite, and a finite module is finitely presented "
    "(the kernel of a finite free cover is finite, hence finitely generated)";

namespace {

constexpr TheoremInfo kRegistry[] = {
    // id, title, ring_only, commutative, nontrivial, multiplication, duo, strongly F-regular
    {"LEM-REDUCED-CHAR",
     "reduced = symmetric + stable annihilator chains = IFP + stable annihilator chains",
     false, false, true, false, false, false},
    {"COR-REDUCED-RING",
     "a ring is reduced iff its one-sided annihilator chains collapse",
     true, false, false, false, false, false},
    {"PROP-IDEMPOTENT-MAP",
     "on a reduced module, right multiplication by an idempotent is an endomorphism",
     false, false, true, false, false, false},
    {"THM-WE",
     "weakly-endoregular = weakly-morphic+reduced = weakly-morphic+co-reduced = co-reduced+reduced",
     false, true, true, false, false, false},
    {"COR-FG-WE",
     "weakly-morphic+reduced = co-reduced = R/Ann(M) regular = weakly-endoregular",
     false, true, true, false, false, false},
    {"COR-RING-REG",
     "commutative ring: morphic+reduced = co-reduced = regular = (a)+ann(a) splits",
     true, true, false, false, false, false},
    {"LEM-PINJ",
     "morphic implies P-injectivity over S; P-injectivity = cogeneration of all M/phi(M)",
     false, false, true, false, false, false},
    {"THM-ABELIAN",
     "Abelian endoregular = morphic with reduced endomorphism ring",
     false, false, true, false, false, false},
    {"COR-SMOD-RED",
     "Abelian endoregular = morphic with M reduced as a left S-module",
     false, false, true, false, false, false},
    {"COR-STRONGLY-REG-RING",
     "strongly regular = morphic+reduced = left P-injective+reduced = aR+ann(a) splits",
     true, false, false, false, false, false},
    {"LEM-DUO-RED",
     "duo over commutative: M reduced = SM reduced, and both force S reduced",
     false, true, true, false, true, false},
    {"COR-CYCLIC-MORPHIC",
     "finitely generated multiplication modules: weakly-morphic = morphic",
     false, true, true, true, false, false},
    {"PROP-MULT-WE-AE",
     "finitely generated multiplication modules: weakly-endoregular = Abelian endoregular",
     false, true, true, true, false, false},
    {"COR-DUO-SREG",
     "duo over commutative: morphic+reduced = strongly regular endomorphism ring",
     false, true, true, false, true, false},
    {"THM-SFR-DUO",
     "strongly F-regular: duo = morphic with reduced S = Abelian endoregular",
     false, false, true, false, false, true},
    {"LEM-SFR-KLR",
     "strongly F-regular implies k-local-retractable",
     false, false, true, false, false, false},
    {"LEM-SFR-ISO-EQ",
     "duo strongly F-regular: isomorphic submodules are equal",
     false, false, true, false, true, true},
    {"LEM-FREG-WE",
     "F-regular implies weakly-endoregular, weakly-morphic, reduced, co-reduced",
     false, true, true, false, false, false},
    {"THM-FREG-CHAR",
     "seven characterizations of F-regularity via submodules and cyclic submodules",
     false, true, true, false, false, false},
    {"THM-FG-COINCIDE",
     "finitely generated: six regularity notions coincide",
     false, true, true, false, false, false},
    {"PROP-FP-COINCIDE",
     "finitely presented: the coincidences extend to endoregular and strongly F-regular",
     false, true, true, false, false, false},
    {"COR-MULT-CHAIN",
     "multiplication modules: JT = almost locally simple = strongly F-regular = F-regular = co-reduced",
     false, true, true, true, false, false},
    {"PROP-MULT-ALL",
     "finitely generated multiplication modules: all regularity notions coincide",
     false, true, true, true, false, false},
    {"REM-HIERARCHY",
     "JT-regular => almost locally simple => strongly F-regular => F-regular => co-reduced",
     false, true, true, false, false, false},
    {"COR-TRASH",
     "weakly-endoregular = co-reduced+weakly-morphic = weakly-morphic+reduced",
     false, true, false, false, false, false},
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Shared evaluation state for one (ring, module) instance; property verdicts,
// the endomorphism ring, the lattice and submodule evaluators are computed at
// most once across all theorems.
struct Ctx {
    RingPtr R;
    ModulePtr M;  // null for ring-only instances
    Limits limits;

    std::optional<PropertyEvaluator> ev_;
    std::map<RingProp, bool> ringmemo_;
    std::optional<bool> s_reduced_, s_strongly_regular_, sm_reduced_, quot_ann_regular_;
    std::optional<bool> cogenerates_quotients_;
    std::map<std::vector<Elem>, std::shared_ptr<PropertyEvaluator>> subev_;
    std::optional<std::vector<Submodule>> cyclics_;

    Ctx(RingPtr r, ModulePtr m, const Limits& lim) : R(std::move(r)), M(std::move(m)), limits(lim) {
        if (M) ev_.emplace(M, limits);
    }

    bool rp(RingProp p) {
        auto it = ringmemo_.find(p);
        if (it != ringmemo_.end()) return it->second;
        bool v = evaluate_ring_property(R, p, limits).value;
        ringmemo_.emplace(p, v);
        return v;
    }
    bool mp(ModProp p) { return ev_->evaluate(p).value; }

    PropertyEvaluator& sub_eval(const Submodule& N) {
        if (static_cast<long>(N.elems.size()) == M->size()) return *ev_;
        auto it = subev_.find(N.elems);
        if (it != subev_.end()) return *it->second;
        auto e = std::make_shared<PropertyEvaluator>(ev_->as_module(N), limits);
        subev_.emplace(N.elems, e);
        return *e;
    }

    // distinct cyclic submodules mR, deterministic order
    const std::vector<Submodule>& cyclics() {
        if (!cyclics_) {
            std::vector<Submodule> out;
            std::set<std::vector<Elem>> seen;
            for (long m = 0; m < M->size(); ++m) {
                auto N = cyclic_submodule(*M, static_cast<Elem>(m));
                if (seen.insert(N.elems).second) out.push_back(std::move(N));
            }
            cyclics_ = std::move(out);
        }
        return *cyclics_;
    }

    bool every_cyclic(std::initializer_list<ModProp> props) {
        for (const auto& N : cyclics()) {
            auto& e = sub_eval(N);
            for (ModProp p : props)
                if (!e.evaluate(p).value) return false;
        }
        return true;
    }
    bool every_submodule(std::initializer_list<ModProp> props) {
        for (const auto& N : ev_->lattice()) {
            auto& e = sub_eval(N);
            for (ModProp p : props)
                if (!e.evaluate(p).value) return false;
        }
        return true;
    }

    bool s_reduced() {
        if (!s_reduced_)
            s_reduced_ = evaluate_ring_property(ev_->endo().ring, RingProp::Reduced, limits).value;
        return *s_reduced_;
    }
    bool s_strongly_regular() {
        if (!s_strongly_regular_)
            s_strongly_regular_ =
                evaluate_ring_property(ev_->endo().ring, RingProp::StronglyRegular, limits).value;
        return *s_strongly_regular_;
    }

    // M reduced as a left S-module: phi^2(m) = 0 forces phi(S m) = 0.  The
    // orbit S m = {psi(m)} is already S-stable, so it is computed once per m.
    bool sm_reduced() {
        if (sm_reduced_) return *sm_reduced_;
        const auto& S = ev_->endo();
        const long nm = M->size();
        std::vector<std::vector<Elem>> orbit(static_cast<size_t>(nm));
        for (long m = 0; m < nm; ++m) {
            std::vector<char> hit(static_cast<size_t>(nm), 0);
            for (const auto& psi : S.homs) hit[psi.map[static_cast<size_t>(m)]] = 1;
            for (long x = 0; x < nm; ++x)
                if (hit[static_cast<size_t>(x)]) orbit[static_cast<size_t>(m)].push_back(static_cast<Elem>(x));
        }
        bool ok = true;
        for (const auto& phi : S.homs) {
            for (long m = 0; m < nm && ok; ++m) {
                if (phi.map[phi.map[static_cast<size_t>(m)]] != M->zero()) continue;
                for (Elem x : orbit[static_cast<size_t>(m)])
                    if (phi.map[x] != M->zero()) {
                        ok = false;
                        break;
                    }
            }
            if (!ok) break;
        }
        sm_reduced_ = ok;
        return ok;
    }

    // R/Ann_R(M) is a regular ring
    bool quot_ann_regular() {
        if (quot_ann_regular_) return *quot_ann_regular_;
        std::vector<Elem> ann;
        for (long a = 0; a < R->size(); ++a) {
            bool kills = true;
            for (long m = 0; m < M->size(); ++m)
                if (M->act(static_cast<Elem>(m), static_cast<Elem>(a)) != M->zero()) {
                    kills = false;
                    break;
                }
            if (kills) ann.push_back(static_cast<Elem>(a));
        }
        auto Q = quotient_ring(R, ann, limits);
        quot_ann_regular_ = evaluate_ring_property(Q.ring, RingProp::Regular, limits).value;
        return *quot_ann_regular_;
    }

    // M cogenerates M/phi(M) for every endomorphism phi (distinct images only)
    bool cogenerates_quotients() {
        if (cogenerates_quotients_) return *cogenerates_quotients_;
        const auto& S = ev_->endo();
        std::set<std::vector<Elem>> seen;
        bool ok = true;
        for (const auto& phi : S.homs) {
            auto img = image(phi);
            if (!seen.insert(img.elems).second) continue;
            auto Q = quotient(*M, img, limits);
            if (!cogenerates(M, Q.module, limits)) {
                ok = false;
                break;
            }
        }
        cogenerates_quotients_ = ok;
        return ok;
    }
};

struct Outcome {
    std::vector<TheoremClause> clauses;
    bool pass = true;
    std::string note;
};

Outcome equivalence(std::vector<TheoremClause> cs) {
    Outcome o;
    o.clauses = std::move(cs);
    for (const auto& c : o.clauses)
        if (c.value != o.clauses.front().value) {
            o.pass = false;
            o.note = "clauses disagree: " + o.clauses.front().name + "=" +
                     (o.clauses.front().value ? "true" : "false") + " vs " + c.name + "=" +
                     (c.value ? "true" : "false");
            break;
        }
    return o;
}

Outcome vacuous(const std::string& premise) {
    Outcome o;
    o.clauses = {{premise, false}};
    o.note = "premise false; conclusion not evaluated";
    return o;
}

// --- ring-only theorems -----------------------------------------------------

Outcome cor_reduced_ring(Ctx& c) {
    const FiniteRing& R = *c.R;
    bool lstable = true, rstable = true;
    for (long a = 0; a < R.size(); ++a) {
        Elem a2 = R.mul(static_cast<Elem>(a), static_cast<Elem>(a));
        if (left_annihilator(R, static_cast<Elem>(a)) != left_annihilator(R, a2)) lstable = false;
        if (right_annihilator(R, static_cast<Elem>(a)) != right_annihilator(R, a2)) rstable = false;
        if (!lstable && !rstable) break;
    }
    return equivalence({{"reduced", c.rp(RingProp::Reduced)},
                        {"left_annihilator_chain_stable", lstable},
                        {"right_annihilator_chain_stable", rstable}});
}

// R = aR (+) ann(a) for every a, checked as trivial meet plus full size
bool principal_splits(const FiniteRing& R, bool left_too) {
    for (long a = 0; a < R.size(); ++a) {
        auto aR = principal_right_ideal(R, static_cast<Elem>(a)).elems;
        auto check = [&](const std::vector<Elem>& ann) {
            std::vector<Elem> meet;
            std::set_intersection(aR.begin(), aR.end(), ann.begin(), ann.end(),
                                  std::back_inserter(meet));
            return meet == std::vector<Elem>{R.zero()} &&
                   static_cast<long>(aR.size() * ann.size()) == R.size();
        };
        if (!check(right_annihilator(R, static_cast<Elem>(a)))) return false;
        if (left_too && !check(left_annihilator(R, static_cast<Elem>(a)))) return false;
    }
    return true;
}

Outcome cor_ring_reg(Ctx& c) {
    const FiniteRing& R = *c.R;
    bool co_reduced = true;
    for (long a = 0; a < R.size() && co_reduced; ++a) {
        Elem a2 = R.mul(static_cast<Elem>(a), static_cast<Elem>(a));
        if (principal_right_ideal(R, static_cast<Elem>(a)).elems != principal_right_ideal(R, a2).elems)
            co_reduced = false;
    }
    return equivalence({{"morphic_and_reduced", c.rp(RingProp::MorphicRight) && c.rp(RingProp::Reduced)},
                        {"co_reduced", co_reduced},
                        {"regular", c.rp(RingProp::Regular)},
                        {"principal_plus_annihilator_splits", principal_splits(R, true)}});
}

Outcome cor_strongly_reg_ring(Ctx& c) {
    return equivalence(
        {{"morphic_and_reduced", c.rp(RingProp::MorphicRight) && c.rp(RingProp::Reduced)},
         {"left_p_injective_and_reduced", c.rp(RingProp::LeftPInjective) && c.rp(RingProp::Reduced)},
         {"principal_plus_annihilator_splits", principal_splits(*c.R, false)},
         {"strongly_regular", c.rp(RingProp::StronglyRegular)}});
}

// --- module theorems ----------------------------------------------------------

Outcome lem_reduced_char(Ctx& c) {
    bool st = c.mp(ModProp::AnnihilatorStable);
    return equivalence({{"reduced", c.mp(ModProp::Reduced)},
                        {"symmetric_and_annihilator_stable", c.mp(ModProp::Symmetric) && st},
                        {"ifp_and_annihilator_stable", c.mp(ModProp::Ifp) && st}});
}

Outcome prop_idempotent_map(Ctx& c) {
    if (!c.mp(ModProp::Reduced)) return vacuous("reduced");
    const FiniteModule& M = *c.M;
    const FiniteRing& R = *c.R;
    bool linear = true;
    for (Elem e : idempotents(R)) {
        for (long m = 0; m < M.size() && linear; ++m)
            for (long r = 0; r < R.size(); ++r)
                if (M.act(M.act(static_cast<Elem>(m), static_cast<Elem>(r)), e) !=
                    M.act(M.act(static_cast<Elem>(m), e), static_cast<Elem>(r))) {
                    linear = false;
                    break;
                }
        if (!linear) break;
    }
    Outcome o;
    o.clauses = {{"reduced", true}, {"idempotent_scalar_maps_are_endomorphisms", linear}};
    o.pass = linear;
    if (!linear) o.note = "some m*e fails R-linearity on a reduced module";
    return o;
}

Outcome thm_we(Ctx& c) {
    bool wm = c.mp(ModProp::WeaklyMorphic), red = c.mp(ModProp::Reduced);
    bool cored = c.mp(ModProp::CoReduced);
    return equivalence({{"weakly_morphic_and_reduced", wm && red},
                        {"weakly_morphic_and_co_reduced", wm && cored},
                        {"co_reduced_and_reduced", cored && red},
                        {"weakly_endoregular", c.mp(ModProp::WeaklyEndoregular)}});
}

Outcome cor_fg_we(Ctx& c) {
    return equivalence(
        {{"weakly_morphic_and_reduced", c.mp(ModProp::WeaklyMorphic) && c.mp(ModProp::Reduced)},
         {"co_reduced", c.mp(ModProp::CoReduced)},
         {"quotient_by_annihilator_regular", c.quot_ann_regular()},
         {"weakly_endoregular", c.mp(ModProp::WeaklyEndoregular)}});
}

Outcome lem_pinj(Ctx& c) {
    bool morphic = c.mp(ModProp::Morphic);
    bool pinj = c.mp(ModProp::PInjectiveOverS);
    bool cog = c.cogenerates_quotients();
    Outcome o;
    o.clauses = {{"morphic", morphic},
                 {"p_injective_over_s", pinj},
                 {"cogenerates_every_endo_quotient", cog}};
    o.pass = (!morphic || pinj) && (pinj == cog);
    if (!o.pass) o.note = "P-injectivity over S fails its implication or cogeneration equivalence";
    return o;
}

Outcome thm_abelian(Ctx& c) {
    return equivalence(
        {{"morphic_and_endo_ring_reduced", c.mp(ModProp::Morphic) && c.s_reduced()},
         {"abelian_endoregular", c.mp(ModProp::AbelianEndoregular)}});
}

Outcome cor_smod_red(Ctx& c) {
    return equivalence({{"morphic_and_s_module_reduced", c.mp(ModProp::Morphic) && c.sm_reduced()},
                        {"abelian_endoregular", c.mp(ModProp::AbelianEndoregular)}});
}

Outcome lem_duo_red(Ctx& c) {
    bool red = c.mp(ModProp::Reduced);
    bool sm = c.sm_reduced();
    bool sr = c.s_reduced();
    Outcome o;
    o.clauses = {{"reduced", red}, {"s_module_reduced", sm}, {"endo_ring_reduced", sr}};
    o.pass = (red == sm) && (!sm || sr);
    if (!o.pass) o.note = "reduced/S-module-reduced equivalence or the S-reduced implication fails";
    return o;
}

Outcome cor_cyclic_morphic(Ctx& c) {
    return equivalence({{"weakly_morphic", c.mp(ModProp::WeaklyMorphic)},
                        {"morphic", c.mp(ModProp::Morphic)}});
}

Outcome prop_mult_we_ae(Ctx& c) {
    return equivalence({{"weakly_endoregular", c.mp(ModProp::WeaklyEndoregular)},
                        {"abelian_endoregular", c.mp(ModProp::AbelianEndoregular)}});
}

Outcome cor_duo_sreg(Ctx& c) {
    return equivalence(
        {{"morphic_and_reduced", c.mp(ModProp::Morphic) && c.mp(ModProp::Reduced)},
         {"endo_ring_strongly_regular", c.s_strongly_regular()}});
}

Outcome thm_sfr_duo(Ctx& c) {
    return equivalence(
        {{"morphic_and_endo_ring_reduced", c.mp(ModProp::Morphic) && c.s_reduced()},
         {"duo", c.mp(ModProp::Duo)},
         {"abelian_endoregular", c.mp(ModProp::AbelianEndoregular)}});
}

Outcome lem_sfr_klr(Ctx& c) {
    if (!c.mp(ModProp::StronglyFRegular)) return vacuous("strongly_f_regular");
    bool klr = c.mp(ModProp::KLocalRetractable);
    Outcome o;
    o.clauses = {{"strongly_f_regular", true}, {"k_local_retractable", klr}};
    o.pass = klr;
    if (!klr) o.note = "strongly F-regular module is not k-local-retractable";
    return o;
}

Outcome lem_sfr_iso_eq(Ctx& c) {
    const auto& lat = c.ev_->lattice();
    bool ok = true;
    for (size_t i = 0; i < lat.size() && ok; ++i)
        for (size_t j = i + 1; j < lat.size(); ++j) {
            if (lat[i].elems.size() != lat[j].elems.size()) continue;
            if (is_isomorphic(*c.ev_->as_module(lat[i]), *c.ev_->as_module(lat[j]), c.limits).value) {
                ok = false;
                break;
            }
        }
    Outcome o;
    o.clauses = {{"isomorphic_submodules_coincide", ok}};
    o.pass = ok;
    if (!ok) o.note = "two distinct submodules are isomorphic";
    return o;
}

Outcome lem_freg_we(Ctx& c) {
    if (!c.mp(ModProp::FRegular)) return vacuous("f_regular");
    Outcome o;
    o.clauses = {{"f_regular", true},
                 {"weakly_endoregular", c.mp(ModProp::WeaklyEndoregular)},
                 {"weakly_morphic", c.mp(ModProp::WeaklyMorphic)},
                 {"reduced", c.mp(ModProp::Reduced)},
                 {"co_reduced", c.mp(ModProp::CoReduced)}};
    for (size_t i = 1; i < o.clauses.size(); ++i) o.pass = o.pass && o.clauses[i].value;
    if (!o.pass) o.note = "an F-regular module misses one of the implied properties";
    return o;
}

Outcome thm_freg_char(Ctx& c) {
    return equivalence(
        {{"f_regular", c.mp(ModProp::FRegular)},
         {"every_submodule_weakly_endoregular", c.every_submodule({ModProp::WeaklyEndoregular})},
         {"every_submodule_weakly_morphic_and_reduced",
          c.every_submodule({ModProp::WeaklyMorphic, ModProp::Reduced})},
         {"every_cyclic_submodule_morphic_and_reduced",
          c.every_cyclic({ModProp::Morphic, ModProp::Reduced})},
         {"every_cyclic_submodule_co_reduced", c.every_cyclic({ModProp::CoReduced})},
         {"every_cyclic_submodule_abelian_endoregular",
          c.every_cyclic({ModProp::AbelianEndoregular})},
         {"every_cyclic_submodule_f_regular", c.every_cyclic({ModProp::FRegular})}});
}

Outcome thm_fg_coincide(Ctx& c) {
    return equivalence(
        {{"weakly_morphic_and_reduced", c.mp(ModProp::WeaklyMorphic) && c.mp(ModProp::Reduced)},
         {"quotient_by_annihilator_regular", c.quot_ann_regular()},
         {"weakly_endoregular", c.mp(ModProp::WeaklyEndoregular)},
         {"co_reduced", c.mp(ModProp::CoReduced)},
         {"f_regular", c.mp(ModProp::FRegular)},
         {"every_cyclic_submodule_weakly_morphic_and_reduced",
          c.every_cyclic({ModProp::WeaklyMorphic, ModProp::Reduced})}});
}

Outcome prop_fp_coincide(Ctx& c) {
    return equivalence(
        {{"weakly_morphic_and_reduced", c.mp(ModProp::WeaklyMorphic) && c.mp(ModProp::Reduced)},
         {"quotient_by_annihilator_regular", c.quot_ann_regular()},
         {"weakly_endoregular", c.mp(ModProp::WeaklyEndoregular)},
         {"endoregular", c.mp(ModProp::Endoregular)},
         {"co_reduced", c.mp(ModProp::CoReduced)},
         {"f_regular", c.mp(ModProp::FRegular)},
         {"strongly_f_regular", c.mp(ModProp::StronglyFRegular)},
         {"every_cyclic_submodule_weakly_morphic_and_reduced",
          c.every_cyclic({ModProp::WeaklyMorphic, ModProp::Reduced})}});
}

Outcome cor_mult_chain(Ctx& c) {
    return equivalence({{"jt_regular", c.mp(ModProp::JtRegular)},
                        {"almost_locally_simple", c.mp(ModProp::AlmostLocallySimple)},
                        {"strongly_f_regular", c.mp(ModProp::StronglyFRegular)},
                        {"f_regular", c.mp(ModProp::FRegular)},
                        {"co_reduced", c.mp(ModProp::CoReduced)}});
}

Outcome prop_mult_all(Ctx& c) {
    return equivalence(
        {{"weakly_morphic_and_reduced", c.mp(ModProp::WeaklyMorphic) && c.mp(ModProp::Reduced)},
         {"quotient_by_annihilator_regular", c.quot_ann_regular()},
         {"weakly_endoregular", c.mp(ModProp::WeaklyEndoregular)},
         {"abelian_endoregular", c.mp(ModProp::AbelianEndoregular)},
         {"jt_regular", c.mp(ModProp::JtRegular)},
         {"almost_locally_simple", c.mp(ModProp::AlmostLocallySimple)},
         {"strongly_f_regular", c.mp(ModProp::StronglyFRegular)},
         {"every_cyclic_submodule_weakly_morphic_and_reduced",
          c.every_cyclic({ModProp::WeaklyMorphic, ModProp::Reduced})}});
}

Outcome rem_hierarchy(Ctx& c) {
    Outcome o;
    bool jt = c.mp(ModProp::JtRegular);
    bool als = c.mp(ModProp::AlmostLocallySimple);
    bool sfr = c.mp(ModProp::StronglyFRegular);
    bool fr = c.mp(ModProp::FRegular);
    bool cored = c.mp(ModProp::CoReduced);
    o.clauses = {{"jt_regular", jt},
                 {"almost_locally_simple", als},
                 {"strongly_f_regular", sfr},
                 {"f_regular", fr},
                 {"co_reduced", cored}};
    o.pass = (!jt || als) && (!als || sfr) && (!sfr || fr) && (!fr || cored);
    if (!o.pass) o.note = "the regularity hierarchy chain is not monotone";
    return o;
}

Outcome cor_trash(Ctx& c) {
    bool wm = c.mp(ModProp::WeaklyMorphic);
    return equivalence(
        {{"weakly_endoregular", c.mp(ModProp::WeaklyEndoregular)},
         {"co_reduced_and_weakly_morphic", c.mp(ModProp::CoReduced) && wm},
         {"weakly_morphic_and_reduced", wm && c.mp(ModProp::Reduced)}});
}

Outcome dispatch(const TheoremInfo& info, Ctx& c) {
    std::string_view id = info.id;
    if (id == "LEM-REDUCED-CHAR") return lem_reduced_char(c);
    if (id == "COR-REDUCED-RING") return cor_reduced_ring(c);
    if (id == "PROP-IDEMPOTENT-MAP") return prop_idempotent_map(c);
    if (id == "THM-WE") return thm_we(c);
    if (id == "COR-FG-WE") return cor_fg_we(c);
    if (id == "COR-RING-REG") return cor_ring_reg(c);
    if (id == "LEM-PINJ") return lem_pinj(c);
    if (id == "THM-ABELIAN") return thm_abelian(c);
    if (id == "COR-SMOD-RED") return cor_smod_red(c);
    if (id == "COR-STRONGLY-REG-RING") return cor_strongly_reg_ring(c);
    if (id == "LEM-DUO-RED") return lem_duo_red(c);
    if (id == "COR-CYCLIC-MORPHIC") return cor_cyclic_morphic(c);
    if (id == "PROP-MULT-WE-AE") return prop_mult_we_ae(c);
    if (id == "COR-DUO-SREG") return cor_duo_sreg(c);
    if (id == "THM-SFR-DUO") return thm_sfr_duo(c);
    if (id == "LEM-SFR-KLR") return lem_sfr_klr(c);
    if (id == "LEM-SFR-ISO-EQ") return lem_sfr_iso_eq(c);
    if (id == "LEM-FREG-WE") return lem_freg_we(c);
    if (id == "THM-FREG-CHAR") return thm_freg_char(c);
    if (id == "THM-FG-COINCIDE") return thm_fg_coincide(c);
    if (id == "PROP-FP-COINCIDE") return prop_fp_coincide(c);
    if (id == "COR-MULT-CHAIN") return cor_mult_chain(c);
    if (id == "PROP-MULT-ALL") return prop_mult_all(c);
    if (id == "REM-HIERARCHY") return rem_hierarchy(c);
    if (id == "COR-TRASH") return cor_trash(c);
    throw InvalidParameterError("unregistered theorem id: " + std::string(id));
}

TheoremVerdict eval_theorem(const TheoremInfo& info, Ctx& c, const std::string& instance) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremVerdict v;
    v.theorem = info.id;
    v.instance = instance;

    auto skip = [&](const char* why) {
        v.status = TheoremStatus::Skipped;
        v.reason = why;
        v.elapsed_ms = ms_since(t0);
        return v;
    };
    if (info.requires_commutative && !c.R->commutative())
        return skip("requires a commutative base ring");
    if (!info.ring_only) {
        if (info.requires_nontrivial && c.M->size() == 1) return skip("requires a nontrivial module");
        if (info.requires_multiplication && !c.mp(ModProp::Multiplication))
            return skip("requires a multiplication module");
        if (info.requires_duo && !c.mp(ModProp::Duo)) return skip("requires a duo module");
        if (info.requires_strongly_f_regular && !c.mp(ModProp::StronglyFRegular))
            return skip("requires a strongly F-regular module");
    }

    Outcome o = dispatch(info, c);
    v.status = o.pass ? TheoremStatus::Pass : TheoremStatus::Fail;
    v.clauses = std::move(o.clauses);
    v.reason = std::move(o.note);
    v.elapsed_ms = ms_since(t0);
    return v;
}

}  // namespace

std::span<const TheoremInfo> theorem_registry() { return kRegistry; }

const TheoremInfo* find_theorem(std::string_view id) {
    for (const auto& t : kRegistry)
        if (id == t.id) return &t;
    return nullptr;
}

TheoremVerdict verify_theorem(const std::string& id, const RingPtr& R, const ModulePtr& M,
                              const Limits& limits) {
    const TheoremInfo* info = find_theorem(id);
    if (!info) throw InvalidParameterError("unknown theorem id: " + id);
    RingPtr ring = R;
    if (M) {
        if (ring && ring != M->ring() && !ring->same_presentation(*M->ring()))
            throw InvalidParameterError("module is not defined over the given ring");
        ring = M->ring();
    }
    if (!ring) throw InvalidParameterError("verify_theorem needs a ring");
    if (!info->ring_only && !M)
        throw InvalidParameterError(id + std::string(" needs a module instance"));
    Ctx c(ring, info->ring_only ? nullptr : M, limits);
    std::string instance = "ring of order " + std::to_string(ring->size());
    if (!info->ring_only)
        instance = "module of order " + std::to_string(M->size()) + " over " + instance;
    return eval_theorem(*info, c, instance);
}

CatalogSpec default_catalog_spec(const Limits& limits) {
    CatalogSpec spec;
    for (long n = 2; n <= 12; ++n)
        spec.rings.push_back({"zmod(" + std::to_string(n) + ")", FiniteRing::zmod(n, limits)});
    spec.rings.push_back({"poly_quotient(2,x^2+x+1)", FiniteRing::poly_quotient(2, {1, 1, 1}, limits)});
    spec.rings.push_back({"poly_quotient(2,x^2)", FiniteRing::poly_quotient(2, {0, 0, 1}, limits)});
    spec.rings.push_back({"product(zmod(2),zmod(2))",
                          FiniteRing::product({FiniteRing::zmod(2, limits), FiniteRing::zmod(2, limits)}, limits)});
    spec.rings.push_back({"product(zmod(2),zmod(4))",
                          FiniteRing::product({FiniteRing::zmod(2, limits), FiniteRing::zmod(4, limits)}, limits)});
    spec.rings.push_back({"upper_triangular(2,2)", FiniteRing::upper_triangular(2, 2, limits)});
    return spec;
}

InstanceCatalog generate_catalog(const CatalogSpec& spec, const Limits& limits) {
    InstanceCatalog cat;
    for (const auto& [rname, R] : spec.rings) {
        cat.rings.push_back({rname, R});
        std::vector<std::pair<std::string, ModulePtr>> pool;
        auto add = [&](const std::string& name, const ModulePtr& m) {
            if (m->size() <= 1 || m->size() > spec.max_module_order) return;
            cat.modules.push_back({rname, R, name, m});
        };
        auto reg = FiniteModule::regular(R, limits);
        add("regular", reg);
        pool.emplace_back("regular", reg);
        for (const auto& I : right_ideals(*R, limits)) {
            if (I.elems.size() <= 1 || static_cast<long>(I.elems.size()) == R->size()) continue;
            std::string iname = "R/(";
            for (size_t g = 0; g < I.gens.size(); ++g)
                iname += (g ? "," : "") + R->show(I.gens[g]);
            iname += ")";
            auto q = cyclic_quotient(R, I.elems, limits);
            add(iname, q);
            pool.emplace_back(iname, q);
        }
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t j = i; j < pool.size(); ++j) {
                if (pool[i].second->size() * pool[j].second->size() > spec.max_module_order) continue;
                add(pool[i].first + " (+) " + pool[j].first,
                    FiniteModule::direct_sum({pool[i].second, pool[j].second}, limits));
            }
    }
    return cat;
}

SweepReport sweep(const InstanceCatalog& catalog, const SweepOptions& opts, const Limits& limits) {
    auto t0 = std::chrono::steady_clock::now();

    std::vector<const TheoremInfo*> selected;
    if (opts.theorems.empty()) {
        for (const auto& t : kRegistry) selected.push_back(&t);
    } else {
        for (const auto& id : opts.theorems) {
            const TheoremInfo* t = find_theorem(id);
            if (!t) throw InvalidParameterError("unknown theorem id: " + id);
            selected.push_back(t);
        }
    }

    // A task is one instance; all its theorems share one evaluation context.
    struct Task {
        bool ring_instance;
        size_t index;  // into catalog.rings or catalog.modules
    };
    std::vector<Task> tasks;
    for (size_t i = 0; i < catalog.rings.size(); ++i) tasks.push_back({true, i});
    for (size_t i = 0; i < catalog.modules.size(); ++i) tasks.push_back({false, i});

    std::vector<std::vector<TheoremVerdict>> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            const Task& task = tasks[t];
            RingPtr R = task.ring_instance ? catalog.rings[task.index].ring
                                           : catalog.modules[task.index].ring;
            ModulePtr M = task.ring_instance ? nullptr : catalog.modules[task.index].module;
            std::string instance;
            if (task.ring_instance) {
                instance = catalog.rings[task.index].name;
            } else {
                const auto& cm = catalog.modules[task.index];
                instance = cm.ring_name.empty() ? cm.name : cm.ring_name + " / " + cm.name;
            }
            Ctx c(R, M, limits);
            for (const TheoremInfo* info : selected) {
                if (info->ring_only != task.ring_instance) continue;
                TheoremVerdict v;
                try {
                    v = eval_theorem(*info, c, instance);
                } catch (const ResourceLimitError& e) {
                    v.theorem = info->id;
                    v.instance = instance;
                    v.status = TheoremStatus::Error;
                    v.reason = std::string("resource limit: ") + e.what();
                }
                results[t].push_back(std::move(v));
            }
        }
    };
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    SweepReport rep;
    for (size_t t = 0; t < tasks.size(); ++t)
        for (auto& v : results[t]) {
            switch (v.status) {
                case TheoremStatus::Pass: ++rep.passed; break;
                case TheoremStatus::Fail: ++rep.failed; break;
                case TheoremStatus::Skipped: ++rep.skipped; break;
                case TheoremStatus::Error: ++rep.errors; break;
            }
            if (v.status == TheoremStatus::Fail) {
                json repro{{"theorem", v.theorem}, {"instance", v.instance}};
                const Task& task = tasks[t];
                if (task.ring_instance) {
                    repro["ring"] = ring_description(*catalog.rings[task.index].ring,
                                                     catalog.rings[task.index].name);
                } else {
                    const auto& cm = catalog.modules[task.index];
                    repro["ring"] = ring_description(*cm.ring, cm.ring_name);
                    repro["module"] = module_description(*cm.module, cm.name);
                }
                rep.failures.push_back({rep.verdicts.size(), canonical_json(repro)});
            }
            rep.verdicts.push_back(std::move(v));
        }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace modreg
