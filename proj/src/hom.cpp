#include "modreg/hom.hpp"

#include <algorithm>
#include <map>

namespace modreg {

namespace {

// Greedy minimal-ish generating set: repeatedly adjoin the smallest element
// outside the generated submodule.  Deterministic.
std::vector<Elem> generating_set(const FiniteModule& A) {
    std::vector<Elem> gens;
    auto cur = submodule_generated(A, gens);
    while (static_cast<long>(cur.elems.size()) < A.size()) {
        for (long m = 0; m < A.size(); ++m)
            if (!cur.contains(static_cast<Elem>(m))) {
                gens.push_back(static_cast<Elem>(m));
                break;
            }
        cur = submodule_generated(A, gens);
    }
    return gens;
}

// r_R(u) subseteq r_R(v): every scalar killing u kills v.  Necessary for any
// R-linear map sending u to v.
bool annihilator_contained(const FiniteModule& A, Elem u, const FiniteModule& B, Elem v) {
    const FiniteRing& R = *A.ring();
    for (long a = 0; a < R.size(); ++a)
        if (A.act(u, static_cast<Elem>(a)) == A.zero() && B.act(v, static_cast<Elem>(a)) != B.zero())
            return false;
    return true;
}

bool is_hom_table(const FiniteModule& A, const FiniteModule& B, const std::vector<Elem>& img) {
    for (long x = 0; x < A.size(); ++x) {
        for (long y = x; y < A.size(); ++y)
            if (img[static_cast<size_t>(A.add(static_cast<Elem>(x), static_cast<Elem>(y)))] !=
                B.add(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]))
                return false;
        for (int i = 0; i < A.ring()->gen_count(); ++i)
            if (img[static_cast<size_t>(A.act_basis(static_cast<Elem>(x), i))] !=
                B.act_basis(img[static_cast<size_t>(x)], i))
                return false;
    }
    return true;
}

}  // namespace

std::vector<ModuleHom> hom_module(const ModulePtr& A, const ModulePtr& B, const Limits& limits) {
    if (A->ring() != B->ring() && !A->ring()->same_presentation(*B->ring()))
        throw RingMismatchError("hom requires modules over the same ring");
    const FiniteRing& R = *A->ring();
    std::vector<ModuleHom> out;

    auto gens = generating_set(*A);
    const size_t g = gens.size();

    if (g == 0) {  // A trivial: only the zero map
        out.push_back({A, B, std::vector<Elem>{B->zero()}});
        return out;
    }

    std::vector<std::vector<Elem>> cands(g);
    for (size_t p = 0; p < g; ++p) {
        long du = A->additive_order(gens[p]);
        for (long v = 0; v < B->size(); ++v)
            if (du % B->additive_order(static_cast<Elem>(v)) == 0 &&
                annihilator_contained(*A, gens[p], *B, static_cast<Elem>(v)))
                cands[p].push_back(static_cast<Elem>(v));
    }

    if (g == 1) {
        // A = uR is cyclic: phi(u*a) = v*a is well defined whenever
        // r_R(u) subseteq r_R(v), no search needed.
        Elem u = gens[0];
        for (Elem v : cands[0]) {
            std::vector<Elem> img(static_cast<size_t>(A->size()));
            for (long a = 0; a < R.size(); ++a)
                img[static_cast<size_t>(A->act(u, static_cast<Elem>(a)))] = B->act(v, static_cast<Elem>(a));
            out.push_back({A, B, std::move(img)});
        }
        return out;
    }

    long long tuples = 1;
    for (const auto& c : cands) {
        tuples *= static_cast<long long>(c.size());
        if (tuples > limits.hom_candidate_budget)
            throw ResourceLimitError("hom candidate space exceeds budget");
    }

    std::vector<size_t> pick(g, 0);
    std::vector<Elem> img(static_cast<size_t>(A->size()));
    std::vector<char> defined(static_cast<size_t>(A->size()));
    std::vector<Elem> rec;
    for (long long it = 0; it < tuples; ++it) {
        std::fill(defined.begin(), defined.end(), 0);
        rec.clear();
        bool ok = true;
        auto set = [&](Elem x, Elem val) {
            if (defined[x]) return img[x] == val;
            defined[x] = 1;
            img[x] = val;
            rec.push_back(x);
            return true;
        };
        set(A->zero(), B->zero());
        for (size_t p = 0; p < g && ok; ++p) ok = set(gens[p], cands[p][pick[p]]);
        // pair closure: definitions propagate along addition and basis action
        for (size_t qi = 0; qi < rec.size() && ok; ++qi) {
            Elem x = rec[qi];
            for (size_t j = 0; j <= qi && ok; ++j)
                ok = set(A->add(x, rec[j]), B->add(img[x], img[rec[j]]));
            for (int i = 0; i < R.gen_count() && ok; ++i)
                ok = set(A->act_basis(x, i), B->act_basis(img[x], i));
        }
        if (ok && rec.size() == static_cast<size_t>(A->size()) && is_hom_table(*A, *B, img))
            out.push_back({A, B, img});
        // odometer, last generator fastest
        for (size_t p = g; p-- > 0;) {
            if (++pick[p] < cands[p].size()) break;
            pick[p] = 0;
        }
    }
    return out;
}

EndoRing end_ring(const ModulePtr& M, const Limits& limits) {
    auto homs = hom_module(M, M, limits);
    if (static_cast<long>(homs.size()) > limits.max_endomorphisms)
        throw ResourceLimitError("endomorphism ring exceeds cap");
    const int n = static_cast<int>(homs.size());
    // A hom is determined by its generator images, so index by those tuples:
    // addition is then pointwise on g values and composition is g table
    // lookups, independent of |M|.
    auto gens = generating_set(*M);
    const size_t g = gens.size();
    auto tuple_of = [&](const std::vector<Elem>& table) {
        std::vector<Elem> t(g);
        for (size_t p = 0; p < g; ++p) t[p] = table[gens[p]];
        return t;
    };
    std::vector<std::vector<Elem>> tuples(static_cast<size_t>(n));
    std::map<std::vector<Elem>, int> index;
    for (int i = 0; i < n; ++i) {
        tuples[static_cast<size_t>(i)] = tuple_of(homs[static_cast<size_t>(i)].map);
        index[tuples[static_cast<size_t>(i)]] = i;
    }

    std::vector<Elem> ident_t(g), zero_t(g, M->zero());
    for (size_t p = 0; p < g; ++p) ident_t[p] = gens[p];
    auto it_one = index.find(ident_t);
    auto it_zero = index.find(zero_t);
    if (it_one == index.end() || it_zero == index.end())
        throw InvalidStructureError("endomorphism enumeration misses identity or zero");

    auto lookup = [&](const std::vector<Elem>& t) {
        auto it = index.find(t);
        if (it == index.end()) throw InvalidStructureError("endomorphisms not closed under ring operations");
        return it->second;
    };
    auto add = [&](int i, int j) {
        std::vector<Elem> t(g);
        for (size_t p = 0; p < g; ++p)
            t[p] = M->add(tuples[static_cast<size_t>(i)][p], tuples[static_cast<size_t>(j)][p]);
        return lookup(t);
    };
    auto mul = [&](int i, int j) {  // (s*t)(m) = s(t(m))
        std::vector<Elem> t(g);
        for (size_t p = 0; p < g; ++p)
            t[p] = homs[static_cast<size_t>(i)].map[tuples[static_cast<size_t>(j)][p]];
        return lookup(t);
    };
    auto built = ring_from_table(n, add, mul, it_zero->second, it_one->second, limits);
    EndoRing out;
    out.module = M;
    out.ring = built.ring;
    out.homs = std::move(homs);
    out.to_ring = std::move(built.to_ring);
    out.from_ring = std::move(built.from_ring);
    return out;
}

Submodule kernel(const ModuleHom& phi) {
    Submodule out;
    for (long m = 0; m < phi.source->size(); ++m)
        if (phi.map[static_cast<size_t>(m)] == phi.target->zero()) out.elems.push_back(static_cast<Elem>(m));
    out.gens = out.elems;
    return out;
}

Submodule image(const ModuleHom& phi) {
    std::vector<char> in(static_cast<size_t>(phi.target->size()), 0);
    for (Elem v : phi.map) in[v] = 1;
    Submodule out;
    for (long m = 0; m < phi.target->size(); ++m)
        if (in[static_cast<size_t>(m)]) out.elems.push_back(static_cast<Elem>(m));
    out.gens = out.elems;
    return out;
}

std::vector<Elem> left_annihilator_in_S(const EndoRing& S, std::span<const Elem> X) {
    std::vector<Elem> out;
    for (long s = 0; s < S.ring->size(); ++s) {
        const auto& phi = S.hom_of(static_cast<Elem>(s));
        bool kills = true;
        for (Elem x : X)
            if (phi.map[x] != S.module->zero()) {
                kills = false;
                break;
            }
        if (kills) out.push_back(static_cast<Elem>(s));
    }
    return out;
}

std::vector<Elem> r_M_of_set(const EndoRing& S, std::span<const Elem> phis) {
    std::vector<Elem> out;
    for (long m = 0; m < S.module->size(); ++m) {
        bool killed = true;
        for (Elem s : phis)
            if (S.hom_of(s).map[static_cast<size_t>(m)] != S.module->zero()) {
                killed = false;
                break;
            }
        if (killed) out.push_back(static_cast<Elem>(m));
    }
    return out;
}

std::vector<Elem> r_S_of_set(const EndoRing& S, std::span<const Elem> phis) {
    std::vector<Elem> out;
    for (long t = 0; t < S.ring->size(); ++t) {
        bool ann = true;
        for (Elem s : phis)
            if (S.ring->mul(s, static_cast<Elem>(t)) != S.ring->zero()) {
                ann = false;
                break;
            }
        if (ann) out.push_back(static_cast<Elem>(t));
    }
    return out;
}

Submodule trace(const ModulePtr& M, const Submodule& N, const Limits& limits) {
    auto sub = submodule_as_module(*M, N, limits);
    // target element -> element of M
    std::vector<Elem> back(static_cast<size_t>(sub.module->size()));
    for (size_t i = 0; i < N.elems.size(); ++i) back[sub.to_module[i]] = N.elems[i];
    std::vector<Elem> gens;
    for (const auto& phi : hom_module(M, sub.module, limits))
        for (Elem v : phi.map) gens.push_back(back[v]);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return submodule_generated(*M, gens);
}

Submodule reject(const ModulePtr& X, const ModulePtr& M, const Limits& limits) {
    std::vector<char> in(static_cast<size_t>(X->size()), 1);
    for (const auto& phi : hom_module(X, M, limits))
        for (long x = 0; x < X->size(); ++x)
            if (phi.map[static_cast<size_t>(x)] != M->zero()) in[static_cast<size_t>(x)] = 0;
    Submodule out;
    for (long x = 0; x < X->size(); ++x)
        if (in[static_cast<size_t>(x)]) out.elems.push_back(static_cast<Elem>(x));
    out.gens = out.elems;
    return out;
}

bool cogenerates(const ModulePtr& M, const ModulePtr& X, const Limits& limits) {
    return reject(X, M, limits).elems == std::vector<Elem>{X->zero()};
}

}  // namespace modreg
