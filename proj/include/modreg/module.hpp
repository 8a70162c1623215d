#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modreg/ring.hpp"

namespace modreg {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

// Finite right R-module presented by generators g_1..g_t of additive orders
// d_1..d_t and one t x t action matrix per ring basis element, row-vector
// convention: g_p * b_i = row p of A_i.  Elements are mixed-radix indices of
// their coefficient vectors, exactly as in FiniteRing.  The regular module
// shares the ring's element encoding verbatim.
class FiniteModule {
  public:
    // --- presets -------------------------------------------------------------
    static ModulePtr regular(const RingPtr& R, const Limits& limits = default_limits());
    // action[i] is the t x t matrix of b_i.
    static ModulePtr from_action(const RingPtr& R, std::vector<long> invariant_factors,
                                 std::vector<std::vector<std::vector<long>>> action,
                                 const Limits& limits = default_limits());
    static ModulePtr direct_sum(std::vector<ModulePtr> parts, const Limits& limits = default_limits());

    // --- shape ---------------------------------------------------------------
    const RingPtr& ring() const { return ring_; }
    long size() const { return size_; }
    int gen_count() const { return static_cast<int>(d_.size()); }
    const std::vector<long>& invariant_factors() const { return d_; }

    // --- element encoding ------------------------------------------------------
    Elem zero() const { return 0; }
    std::vector<long> coeffs(Elem m) const;
    Elem encode(std::span<const long> coeffs) const;
    Elem gen_elem(int p) const;

    // --- arithmetic ------------------------------------------------------------
    Elem add(Elem m, Elem n) const;
    Elem neg(Elem m) const;
    Elem sub(Elem m, Elem n) const { return add(m, neg(n)); }
    Elem smul(long c, Elem m) const;       // additive scaling
    Elem act(Elem m, Elem a) const;        // m * a, a in R
    Elem act_basis(Elem m, int i) const;   // m * b_i
    long additive_order(Elem m) const;
    std::string show(Elem m) const;

  private:
    FiniteModule() = default;
    void finish(const Limits& limits);
    Elem act_raw(Elem m, int i) const;  // matrix-apply, used to build the cache

    RingPtr ring_;
    std::vector<long> d_;
    std::vector<long> strides_;
    long size_ = 0;
    std::vector<std::vector<long>> action_;  // k matrices, row-major t*t

    std::vector<Elem> col_act_;    // size*k, m * b_i
    std::vector<Elem> add_table_;  // size*size when small
    std::vector<Elem> neg_table_;
};

struct Submodule {
    std::vector<Elem> elems;  // sorted, canonical
    std::vector<Elem> gens;
    bool contains(Elem x) const;
};

// Raw element sets; always defined, not necessarily submodules when R is
// noncommutative.
std::vector<Elem> raw_scalar_image(const FiniteModule& M, Elem a);   // {m*a}
std::vector<Elem> raw_scalar_kernel(const FiniteModule& M, Elem a);  // {m : m*a = 0}

// Ma and l_M(a) as submodules; NotSubmoduleClosed when the raw set is not
// closed under the full scalar action (possible only for noncommutative R).
Submodule scalar_image(const FiniteModule& M, Elem a);
Submodule scalar_kernel(const FiniteModule& M, Elem a);

Submodule cyclic_submodule(const FiniteModule& M, Elem m);  // mR
Submodule submodule_generated(const FiniteModule& M, std::span<const Elem> gens);
Submodule submodule_sum(const FiniteModule& M, const Submodule& N, const Submodule& K);
Submodule submodule_intersect(const Submodule& N, const Submodule& K);
// Full lattice by iterated joins of cyclic submodules; deterministic order
// (by size, then element set).
std::vector<Submodule> all_submodules(const FiniteModule& M, const Limits& limits = default_limits());

// Rebuild a FiniteModule over R from an abstract additive table and scalar
// action on indices 0..n-1 (submodules-as-modules, quotients, localizations).
struct ModuleFromTable {
    ModulePtr module;
    std::vector<Elem> to_module;   // abstract index -> module element
    std::vector<int> from_module;  // module element -> abstract index
};
ModuleFromTable module_from_table(const RingPtr& R, int n, const std::function<int(int, int)>& add,
                                  const std::function<int(int, Elem)>& act, int zero,
                                  const Limits& limits = default_limits());

ModuleFromTable submodule_as_module(const FiniteModule& M, const Submodule& N,
                                    const Limits& limits = default_limits());

// R/I as a right R-module (quotient of the regular module).
ModulePtr cyclic_quotient(const RingPtr& R, std::span<const Elem> ideal,
                          const Limits& limits = default_limits());

struct QuotientModule {
    ModulePtr module;                 // M/N
    std::vector<Elem> to_quotient;    // M element -> quotient element (projection)
    std::vector<Elem> reps;           // quotient element -> coset representative in M
};
QuotientModule quotient(const FiniteModule& M, const Submodule& N,
                        const Limits& limits = default_limits());

struct SummandResult {
    bool value = false;
    std::optional<Submodule> complement;
};
SummandResult is_direct_summand(const FiniteModule& M, const Submodule& N,
                                const Limits& limits = default_limits());

struct RdPureResult {
    bool value = false;
    std::optional<Elem> witness;  // failing scalar
};
RdPureResult is_rd_pure(const FiniteModule& M, const Submodule& N);

struct IsoResult {
    bool value = false;
    std::vector<Elem> map;  // A element -> B element when value
};
IsoResult is_isomorphic(const FiniteModule& A, const FiniteModule& B,
                        const Limits& limits = default_limits());

struct LocalComponent {
    RingPtr factor_ring;           // Re_i
    ModulePtr module;              // M e_i over Re_i
    std::vector<Elem> to_parent;   // component element -> element of M
};
std::vector<LocalComponent> localize(const FiniteModule& M, const LocalDecomposition& dec,
                                     const Limits& limits = default_limits());

}  // namespace modreg
