#pragma once

// Brute-force reference implementations used only to cross-check the library.
// Everything here favors directness over speed: subset enumeration, full map
// enumeration, definition-shaped property loops.

#include <vector>

#include "modreg/module.hpp"
#include "modreg/ring.hpp"

namespace modreg::naive {

// All right ideals by subset enumeration (|R| <= 16).
std::vector<std::vector<Elem>> right_ideals_subsets(const FiniteRing& R);

bool is_nilpotent_by_powers(const FiniteRing& R, Elem a);

// All submodules by subset enumeration (|M| <= 16).
std::vector<std::vector<Elem>> submodules_subsets(const FiniteModule& M);

// Module isomorphism by enumerating every bijection (|M| <= 8).
bool isomorphic_by_permutations(const FiniteModule& A, const FiniteModule& B);

// All R-linear maps A -> B by exhaustive matrix enumeration over the
// presentation generators; returns sorted value tables.
std::vector<std::vector<Elem>> homs_by_matrices(const FiniteModule& A, const FiniteModule& B);

}  // namespace modreg::naive
