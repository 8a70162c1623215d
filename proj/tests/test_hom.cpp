#include <doctest.h>

#include <algorithm>

#include "modreg/hom.hpp"
#include "naive.hpp"

using namespace modreg;

namespace {

ModulePtr z2_over(const RingPtr& R) { return FiniteModule::from_action(R, {2}, {{{1}}}); }

ModulePtr trivial_over(const RingPtr& R) {
    std::vector<std::vector<std::vector<long>>> action(static_cast<size_t>(R->gen_count()));
    return FiniteModule::from_action(R, {}, action);
}

ModulePtr z2_plus_z4_over_z8() {
    return FiniteModule::from_action(FiniteRing::zmod(8), {2, 4}, {{{1, 0}, {0, 1}}});
}

std::vector<std::vector<Elem>> tables_of(const std::vector<ModuleHom>& homs) {
    std::vector<std::vector<Elem>> out;
    for (const auto& h : homs) out.push_back(h.map);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("hom counts") {
    auto R4 = FiniteRing::zmod(4);
    auto A = z2_over(R4);
    CHECK(hom_module(A, A).size() == 2);

    auto M = z2_plus_z4_over_z8();
    CHECK(hom_module(M, M).size() == 32);

    CHECK(hom_module(M, trivial_over(M->ring())).size() == 1);
    auto from_trivial = hom_module(trivial_over(M->ring()), M);
    REQUIRE(from_trivial.size() == 1);
    CHECK(from_trivial[0].map == std::vector<Elem>{0});
}

TEST_CASE("hom enumeration agrees with matrix enumeration") {
    auto R4 = FiniteRing::zmod(4);
    auto R2 = FiniteRing::zmod(2);
    auto T = FiniteRing::upper_triangular(2, 2);
    auto V = FiniteModule::direct_sum({FiniteModule::regular(R2), FiniteModule::regular(R2)});
    std::vector<std::pair<ModulePtr, ModulePtr>> pairs{
        {z2_over(R4), FiniteModule::regular(R4)},
        {FiniteModule::regular(R4), z2_over(R4)},
        {V, V},
        {FiniteModule::regular(T), FiniteModule::regular(T)},
    };
    auto M = z2_plus_z4_over_z8();
    pairs.emplace_back(M, M);
    for (auto& [A, B] : pairs) {
        auto fast = tables_of(hom_module(A, B));
        auto slow = naive::homs_by_matrices(*A, *B);
        CHECK(fast == slow);
    }
}

TEST_CASE("endomorphism ring of the regular module") {
    auto R4 = FiniteRing::zmod(4);
    auto S = end_ring(FiniteModule::regular(R4));
    CHECK(S.ring->size() == 4);
    CHECK(is_ring_isomorphic(*S.ring, *R4));
}

TEST_CASE("endomorphism ring of the 2-dimensional F2 space") {
    auto R2 = FiniteRing::zmod(2);
    auto V = FiniteModule::direct_sum({FiniteModule::regular(R2), FiniteModule::regular(R2)});
    auto S = end_ring(V);
    CHECK(S.ring->size() == 16);
    CHECK_FALSE(S.ring->commutative());
}

TEST_CASE("small endomorphism rings") {
    auto R4 = FiniteRing::zmod(4);
    auto S = end_ring(z2_over(R4));
    CHECK(S.ring->size() == 2);

    CHECK(end_ring(z2_plus_z4_over_z8()).ring->size() == 32);
}

TEST_CASE("endomorphism ring arithmetic is faithful") {
    auto S = end_ring(z2_plus_z4_over_z8());
    const auto& M = *S.module;
    for (long s = 0; s < S.ring->size(); ++s)
        for (long u = 0; u < S.ring->size(); ++u) {
            const auto& f = S.hom_of(static_cast<Elem>(s));
            const auto& g = S.hom_of(static_cast<Elem>(u));
            const auto& sum = S.hom_of(S.ring->add(static_cast<Elem>(s), static_cast<Elem>(u)));
            const auto& prod = S.hom_of(S.ring->mul(static_cast<Elem>(s), static_cast<Elem>(u)));
            for (long m = 0; m < M.size(); ++m) {
                CHECK(sum.map[static_cast<size_t>(m)] ==
                      M.add(f.map[static_cast<size_t>(m)], g.map[static_cast<size_t>(m)]));
                CHECK(prod.map[static_cast<size_t>(m)] == f.map[g.map[static_cast<size_t>(m)]]);
            }
        }
    // identity and zero are where they should be
    for (long m = 0; m < M.size(); ++m) {
        CHECK(S.hom_of(S.ring->one()).map[static_cast<size_t>(m)] == static_cast<Elem>(m));
        CHECK(S.hom_of(S.ring->zero()).map[static_cast<size_t>(m)] == M.zero());
    }
}

TEST_CASE("kernel and image") {
    auto R2 = FiniteRing::zmod(2);
    auto V = FiniteModule::direct_sum({FiniteModule::regular(R2), FiniteModule::regular(R2)});
    auto S = end_ring(V);
    // identity and zero
    CHECK(kernel(S.hom_of(S.ring->one())).elems == std::vector<Elem>{0});
    CHECK(image(S.hom_of(S.ring->one())).elems.size() == 4);
    CHECK(kernel(S.hom_of(S.ring->zero())).elems.size() == 4);
    CHECK(image(S.hom_of(S.ring->zero())).elems == std::vector<Elem>{0});
    // (x,y) -> (y,0): kernel = image = first axis {(0,0),(1,0)} = {0,2}
    std::vector<Elem> swap_table{0, 2, 0, 2};
    bool found = false;
    for (const auto& h : S.homs)
        if (h.map == swap_table) {
            found = true;
            CHECK(kernel(h).elems == std::vector<Elem>{0, 2});
            CHECK(image(h).elems == std::vector<Elem>{0, 2});
        }
    CHECK(found);
}

TEST_CASE("annihilator calculus over S") {
    auto M = z2_plus_z4_over_z8();
    auto S = end_ring(M);
    std::vector<Elem> all(static_cast<size_t>(M->size()));
    for (long m = 0; m < M->size(); ++m) all[static_cast<size_t>(m)] = static_cast<Elem>(m);
    CHECK(left_annihilator_in_S(S, all) == std::vector<Elem>{S.ring->zero()});
    std::vector<Elem> ident{S.ring->one()};
    CHECK(r_M_of_set(S, ident) == std::vector<Elem>{M->zero()});
    // r_S({1}) = {0}; r_S({0}) = S
    CHECK(r_S_of_set(S, ident) == std::vector<Elem>{S.ring->zero()});
    std::vector<Elem> zero{S.ring->zero()};
    CHECK(r_S_of_set(S, zero).size() == static_cast<size_t>(S.ring->size()));
}

TEST_CASE("scalar endomorphisms for commutative rings") {
    auto M = z2_over(FiniteRing::zmod(4));
    auto S = end_ring(M);
    const auto& R = *M->ring();
    // a -> phi_a is a ring map with kernel Ann_R(M)
    std::vector<Elem> phi(static_cast<size_t>(R.size()));
    for (long a = 0; a < R.size(); ++a) {
        std::vector<Elem> table(static_cast<size_t>(M->size()));
        for (long m = 0; m < M->size(); ++m)
            table[static_cast<size_t>(m)] = M->act(static_cast<Elem>(m), static_cast<Elem>(a));
        bool found = false;
        for (size_t i = 0; i < S.homs.size(); ++i)
            if (S.homs[i].map == table) {
                phi[static_cast<size_t>(a)] = S.to_ring[i];
                found = true;
            }
        REQUIRE(found);
    }
    std::vector<Elem> ann;
    for (long a = 0; a < R.size(); ++a) {
        CHECK(phi[static_cast<size_t>(R.mul(static_cast<Elem>(a), static_cast<Elem>(a)))] ==
              S.ring->mul(phi[static_cast<size_t>(a)], phi[static_cast<size_t>(a)]));
        if (phi[static_cast<size_t>(a)] == S.ring->zero()) ann.push_back(static_cast<Elem>(a));
    }
    CHECK(ann == std::vector<Elem>{0, 2});  // Ann_{Z/4}(Z/2) = {0, 2}
}

TEST_CASE("trace, reject, cogeneration") {
    auto R2 = FiniteRing::zmod(2);
    auto V = FiniteModule::direct_sum({FiniteModule::regular(R2), FiniteModule::regular(R2)});
    Submodule zero;
    zero.elems = {0};
    zero.gens = {0};
    CHECK(trace(V, zero).elems == std::vector<Elem>{0});
    auto axis = cyclic_submodule(*V, 2);
    CHECK(trace(V, axis).elems == axis.elems);
    CHECK(cogenerates(V, V));

    auto M = z2_plus_z4_over_z8();
    CHECK(cogenerates(M, M));
    // Z/2 embeds in M, so M cogenerates it
    CHECK(cogenerates(M, z2_over(M->ring())));
}
