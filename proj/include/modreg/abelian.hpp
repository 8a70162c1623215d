#pragma once

#include <functional>
#include <vector>

namespace modreg {

// Cyclic decomposition of a finite abelian group given by an addition table
// over indices 0..n-1.  Generators are chosen max-order-first, so the orders
// form an invariant-factor chain d_1, d_2, ... with d_{i+1} | d_i.
struct AbelianBasis {
    std::vector<int> gens;                      // indices into the abstract universe
    std::vector<long> orders;                   // additive order of each generator
    std::vector<std::vector<long>> coords;      // coords[x] = coefficients of element x
};

using AbelianAdd = std::function<int(int, int)>;

// `zero` is the index of the identity element.  Choices are tie-broken by
// smallest index so the decomposition is deterministic.
AbelianBasis decompose_abelian(int n, const AbelianAdd& add, int zero);

}  // namespace modreg
