#pragma once

#include <span>
#include <vector>

#include "modreg/module.hpp"
#include "modreg/ring.hpp"

namespace modreg {

// R-linear map between finite modules over the same ring, stored as its full
// value table.
struct ModuleHom {
    ModulePtr source;
    ModulePtr target;
    std::vector<Elem> map;  // map[m] = phi(m)

    Elem operator()(Elem m) const { return map[m]; }
};

// Every R-linear map A -> B, deterministic order.  Maps are found by
// assigning images to a greedy generating set of A (candidates pruned by
// annihilator containment) and closing/validating over the whole module.
std::vector<ModuleHom> hom_module(const ModulePtr& A, const ModulePtr& B,
                                  const Limits& limits = default_limits());

// S = End_R(M) as a FiniteRing: addition is pointwise, multiplication is
// composition (s*t)(m) = s(t(m)), 1 is the identity map.
struct EndoRing {
    ModulePtr module;
    RingPtr ring;
    std::vector<ModuleHom> homs;   // homs[i] is the endomorphism behind abstract index i
    std::vector<Elem> to_ring;     // abstract index -> ring element
    std::vector<int> from_ring;    // ring element -> abstract index

    const ModuleHom& hom_of(Elem s) const { return homs[static_cast<size_t>(from_ring[s])]; }
};
EndoRing end_ring(const ModulePtr& M, const Limits& limits = default_limits());

Submodule kernel(const ModuleHom& phi);
Submodule image(const ModuleHom& phi);

// l_S(X) = {phi in S : phi(X) = 0}, returned as ring elements of S.
std::vector<Elem> left_annihilator_in_S(const EndoRing& S, std::span<const Elem> X);
// r_M(Phi) = {m : phi(m) = 0 for all phi in Phi}; Phi given as ring elements.
std::vector<Elem> r_M_of_set(const EndoRing& S, std::span<const Elem> phis);
// r_S(Phi) = {psi : phi * psi = 0 for all phi in Phi}, in ring elements.
std::vector<Elem> r_S_of_set(const EndoRing& S, std::span<const Elem> phis);

// trace(M, N) = sum of images of Hom(M, N), as a submodule of M.
Submodule trace(const ModulePtr& M, const Submodule& N, const Limits& limits = default_limits());
// reject(X, M) = intersection of kernels of Hom(X, M), as a submodule of X.
Submodule reject(const ModulePtr& X, const ModulePtr& M, const Limits& limits = default_limits());
// M cogenerates X iff reject(X, M) = {0}.
bool cogenerates(const ModulePtr& M, const ModulePtr& X, const Limits& limits = default_limits());

}  // namespace modreg
