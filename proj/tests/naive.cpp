#include "naive.hpp"

#include <algorithm>

namespace modreg::naive {

std::vector<std::vector<Elem>> right_ideals_subsets(const FiniteRing& R) {
    const long n = R.size();
    std::vector<std::vector<Elem>> out;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        if (!(mask & 1UL)) continue;  // must contain 0
        std::vector<Elem> set;
        for (long x = 0; x < n; ++x)
            if (mask & (1UL << x)) set.push_back(static_cast<Elem>(x));
        bool ok = true;
        for (Elem x : set) {
            for (Elem y : set)
                if (!(mask & (1UL << R.add(x, y)))) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            for (long r = 0; r < n; ++r)
                if (!(mask & (1UL << R.mul(x, static_cast<Elem>(r))))) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) out.push_back(set);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<std::vector<Elem>> submodules_subsets(const FiniteModule& M) {
    const long n = M.size();
    std::vector<std::vector<Elem>> out;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        if (!(mask & 1UL)) continue;
        std::vector<Elem> set;
        for (long x = 0; x < n; ++x)
            if (mask & (1UL << x)) set.push_back(static_cast<Elem>(x));
        bool ok = true;
        for (Elem x : set) {
            for (Elem y : set)
                if (!(mask & (1UL << M.add(x, y)))) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            for (long a = 0; a < M.ring()->size(); ++a)
                if (!(mask & (1UL << M.act(x, static_cast<Elem>(a))))) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) out.push_back(set);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool isomorphic_by_permutations(const FiniteModule& A, const FiniteModule& B) {
    if (A.size() != B.size()) return false;
    const long n = A.size();
    std::vector<Elem> perm(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = static_cast<Elem>(i);
    do {
        if (perm[A.zero()] != B.zero()) continue;
        bool ok = true;
        for (long x = 0; x < n && ok; ++x) {
            for (long y = 0; y < n; ++y)
                if (perm[A.add(static_cast<Elem>(x), static_cast<Elem>(y))] !=
                    B.add(perm[static_cast<size_t>(x)], perm[static_cast<size_t>(y)])) {
                    ok = false;
                    break;
                }
            for (long a = 0; a < A.ring()->size() && ok; ++a)
                if (perm[A.act(static_cast<Elem>(x), static_cast<Elem>(a))] !=
                    B.act(perm[static_cast<size_t>(x)], static_cast<Elem>(a)))
                    ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<std::vector<Elem>> homs_by_matrices(const FiniteModule& A, const FiniteModule& B) {
    const int t = A.gen_count();
    std::vector<std::vector<Elem>> out;
    long long combos = 1;
    for (int p = 0; p < t; ++p) combos *= B.size();
    std::vector<Elem> rows(static_cast<size_t>(t), B.zero());
    for (long long it = 0; it < combos; ++it) {
        // decode the combination: generator p maps to rows[p]
        long long v = it;
        for (int p = t - 1; p >= 0; --p) {
            rows[static_cast<size_t>(p)] = static_cast<Elem>(v % B.size());
            v /= B.size();
        }
        // additive well-definedness: d_p * rows[p] = 0
        bool ok = true;
        for (int p = 0; p < t && ok; ++p)
            if (B.smul(A.invariant_factors()[static_cast<size_t>(p)], rows[static_cast<size_t>(p)]) != B.zero())
                ok = false;
        if (!ok) continue;
        std::vector<Elem> table(static_cast<size_t>(A.size()));
        for (long x = 0; x < A.size(); ++x) {
            auto c = A.coeffs(static_cast<Elem>(x));
            Elem w = B.zero();
            for (int p = 0; p < t; ++p)
                w = B.add(w, B.smul(c[static_cast<size_t>(p)], rows[static_cast<size_t>(p)]));
            table[static_cast<size_t>(x)] = w;
        }
        for (long x = 0; x < A.size() && ok; ++x)
            for (long a = 0; a < A.ring()->size(); ++a)
                if (table[static_cast<size_t>(A.act(static_cast<Elem>(x), static_cast<Elem>(a)))] !=
                    B.act(table[static_cast<size_t>(x)], static_cast<Elem>(a))) {
                    ok = false;
                    break;
                }
        if (ok) out.push_back(std::move(table));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_nilpotent_by_powers(const FiniteRing& R, Elem a) {
    Elem cur = a;
    for (long i = 0; i < R.size(); ++i) {
        if (cur == R.zero()) return true;
        cur = R.mul(cur, a);
    }
    return cur == R.zero();
}

}  // namespace modreg::naive
