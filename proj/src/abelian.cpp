#include "modreg/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace modreg {

namespace {

long order_of(int x, const AbelianAdd& add, int zero) {
    long ord = 1;
    int cur = x;
    while (cur != zero) {
        cur = add(cur, x);
        ++ord;
    }
    return ord;
}

// Generators of G as (index-in-universe, order) pairs.  Classic recursive
// construction: pick g of maximal order, decompose G/<g>, lift each quotient
// generator to a representative of the same order (such a lift exists because
// g has maximal order).
std::vector<std::pair<int, long>> basis_of(int n, const AbelianAdd& add, int zero) {
    if (n == 1) return {};

    std::vector<long> ord(static_cast<size_t>(n));
    int g = zero;
    for (int x = 0; x < n; ++x) {
        ord[static_cast<size_t>(x)] = order_of(x, add, zero);
        if (ord[static_cast<size_t>(x)] > ord[static_cast<size_t>(g)]) g = x;
    }
    const long d = ord[static_cast<size_t>(g)];

    // Coset representative: smallest index in x + <g>.
    std::vector<int> rep(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        int best = x, cur = x;
        for (long k = 1; k < d; ++k) {
            cur = add(cur, g);
            best = std::min(best, cur);
        }
        rep[static_cast<size_t>(x)] = best;
    }
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (rep[static_cast<size_t>(x)] == x) reps.push_back(x);
    std::vector<int> qindex(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < reps.size(); ++i) qindex[static_cast<size_t>(reps[i])] = static_cast<int>(i);

    AbelianAdd qadd = [&](int i, int j) {
        int s = add(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]);
        return qindex[static_cast<size_t>(rep[static_cast<size_t>(s)])];
    };
    auto sub = basis_of(static_cast<int>(reps.size()), qadd, qindex[static_cast<size_t>(rep[static_cast<size_t>(zero)])]);

    std::vector<std::pair<int, long>> out;
    out.emplace_back(g, d);
    for (auto [qg, m] : sub) {
        int lifted = -1;
        int cur = reps[static_cast<size_t>(qg)];
        for (long k = 0; k < d; ++k) {
            if (ord[static_cast<size_t>(cur)] == m) {
                lifted = cur;
                break;
            }
            cur = add(cur, g);
        }
        assert(lifted >= 0 && "no lift of matching order; group addition is inconsistent");
        out.emplace_back(lifted, m);
    }
    return out;
}

}  // namespace

AbelianBasis decompose_abelian(int n, const AbelianAdd& add, int zero) {
    AbelianBasis basis;
    auto pairs = basis_of(n, add, zero);
    for (auto& [g, d] : pairs) {
        basis.gens.push_back(g);
        basis.orders.push_back(d);
    }
    const size_t t = basis.gens.size();

    // Enumerate all combinations sum c_i g_i; they must cover the universe
    // exactly once.
    basis.coords.assign(static_cast<size_t>(n), {});
    std::vector<long> c(t, 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    long total = 1;
    for (long d : basis.orders) total *= d;
    if (total != n) throw std::logic_error("abelian decomposition does not cover the group");
    if (t == 0) {
        basis.coords[static_cast<size_t>(zero)] = {};
        return basis;
    }
    int x = zero;
    for (long count = 0;; ++count) {
        if (seen[static_cast<size_t>(x)]) throw std::logic_error("abelian decomposition is not free");
        seen[static_cast<size_t>(x)] = 1;
        basis.coords[static_cast<size_t>(x)] = c;
        // Odometer increment, maintaining x = sum c_i g_i incrementally.
        size_t i = t;
        while (i > 0) {
            --i;
            ++c[i];
            x = add(x, basis.gens[i]);
            if (c[i] < basis.orders[i]) break;
            c[i] = 0;  // x wrapped back automatically: order many additions returned to start
        }
        if (i == 0 && c[0] == 0) break;
    }
    return basis;
}

}  // namespace modreg
