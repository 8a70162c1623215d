#include <doctest.h>

#include <algorithm>

#include "modreg/module.hpp"
#include "naive.hpp"

using namespace modreg;

namespace {

// Z/2 + Z/4 over Z/8 with the integer-multiplication action; element (x, y)
// has index x*4 + y.
ModulePtr z2_plus_z4_over_z8() {
    auto R = FiniteRing::zmod(8);
    return FiniteModule::from_action(R, {2, 4}, {{{1, 0}, {0, 1}}});
}

}  // namespace

TEST_CASE("regular module shares the ring encoding") {
    auto R = FiniteRing::zmod(4);
    auto M = FiniteModule::regular(R);
    CHECK(M->invariant_factors() == std::vector<long>{4});
    CHECK(M->size() == 4);
    for (long m = 0; m < 4; ++m)
        for (long a = 0; a < 4; ++a)
            CHECK(M->act(static_cast<Elem>(m), static_cast<Elem>(a)) ==
                  R->mul(static_cast<Elem>(m), static_cast<Elem>(a)));

    auto T = FiniteRing::upper_triangular(2, 2);
    auto MT = FiniteModule::regular(T);
    for (long m = 0; m < T->size(); ++m)
        for (long a = 0; a < T->size(); ++a)
            CHECK(MT->act(static_cast<Elem>(m), static_cast<Elem>(a)) ==
                  T->mul(static_cast<Elem>(m), static_cast<Elem>(a)));
}

TEST_CASE("scalar image and kernel on Z/2 + Z/4 over Z/8") {
    auto M = z2_plus_z4_over_z8();
    auto img = scalar_image(*M, 2);
    CHECK(img.elems == std::vector<Elem>{0, 2});  // (0,0), (0,2)
    auto ker = scalar_kernel(*M, 2);
    CHECK(ker.elems == std::vector<Elem>{0, 2, 4, 6});  // y in {0,2}
    CHECK(static_cast<long>(img.elems.size() * ker.elems.size()) == M->size());
    // zero scalar
    CHECK(scalar_image(*M, 0).elems == std::vector<Elem>{0});
    CHECK(scalar_kernel(*M, 0).elems.size() == 8);
}

TEST_CASE("noncommutative scalar image may fail closure") {
    auto R = FiniteRing::upper_triangular(2, 2);
    auto M = FiniteModule::regular(R);
    Elem e11 = R->encode(std::vector<long>{1, 0, 0});
    // M*e11 = {0, e11} is not closed under right multiplication by e12
    CHECK(raw_scalar_image(*M, e11) == std::vector<Elem>{0, e11});
    CHECK_THROWS_AS(scalar_image(*M, e11), NotSubmoduleClosedError);
}

TEST_CASE("cyclic submodules") {
    auto R4 = FiniteRing::zmod(4);
    auto M4 = FiniteModule::regular(R4);
    CHECK(cyclic_submodule(*M4, 2).elems == std::vector<Elem>{0, 2});

    auto M = z2_plus_z4_over_z8();
    Elem m = M->encode(std::vector<long>{1, 1});
    auto C = cyclic_submodule(*M, m);
    CHECK(C.elems == std::vector<Elem>{0, 2, 5, 7});  // (a mod 2, a mod 4)
    CHECK(C.contains(m));
}

TEST_CASE("submodule lattice sizes") {
    auto R4 = FiniteRing::zmod(4);
    CHECK(all_submodules(*FiniteModule::regular(R4)).size() == 3);

    auto R2 = FiniteRing::zmod(2);
    auto V = FiniteModule::direct_sum({FiniteModule::regular(R2), FiniteModule::regular(R2)});
    CHECK(all_submodules(*V).size() == 5);
}

TEST_CASE("submodule lattice agrees with subset enumeration") {
    auto R6 = FiniteRing::zmod(6);
    auto T = FiniteRing::upper_triangular(2, 2);
    for (auto M : {z2_plus_z4_over_z8(), FiniteModule::regular(R6), FiniteModule::regular(T)}) {
        auto fast = all_submodules(*M);
        auto slow = naive::submodules_subsets(*M);
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].elems == slow[i]);
    }
}

TEST_CASE("submodule closure is a closure operator") {
    auto M = z2_plus_z4_over_z8();
    std::vector<Elem> g1{5};
    auto N1 = submodule_generated(*M, g1);
    // extensive
    for (Elem g : g1) CHECK(N1.contains(g));
    // idempotent
    CHECK(submodule_generated(*M, N1.elems).elems == N1.elems);
    // monotone
    std::vector<Elem> g2{5, 4};
    auto N2 = submodule_generated(*M, g2);
    CHECK(std::includes(N2.elems.begin(), N2.elems.end(), N1.elems.begin(), N1.elems.end()));
    // sum and intersection
    CHECK(submodule_intersect(N1, N1).elems == N1.elems);
    CHECK(submodule_sum(*M, N1, N2).elems == N2.elems);
}

TEST_CASE("quotients") {
    auto R4 = FiniteRing::zmod(4);
    auto M = FiniteModule::regular(R4);
    auto N = cyclic_submodule(*M, 2);
    auto Q = quotient(*M, N);
    CHECK(Q.module->size() == 2);
    // 2 acts as zero downstairs
    for (long x = 0; x < 2; ++x) CHECK(Q.module->act(static_cast<Elem>(x), 2) == 0);
    // projection is R-linear
    for (long m = 0; m < 4; ++m)
        for (long a = 0; a < 4; ++a)
            CHECK(Q.to_quotient[static_cast<size_t>(M->act(static_cast<Elem>(m), static_cast<Elem>(a)))] ==
                  Q.module->act(Q.to_quotient[static_cast<size_t>(m)], static_cast<Elem>(a)));

    Submodule zero;
    zero.elems = {0};
    CHECK(is_isomorphic(*M, *quotient(*M, zero).module).value);
    auto full = submodule_generated(*M, std::vector<Elem>{1});
    CHECK(quotient(*M, full).module->size() == 1);
}

TEST_CASE("direct summands") {
    auto R4 = FiniteRing::zmod(4);
    auto M4 = FiniteModule::regular(R4);
    auto N = cyclic_submodule(*M4, 2);
    CHECK_FALSE(is_direct_summand(*M4, N).value);

    auto R2 = FiniteRing::zmod(2);
    auto V = FiniteModule::direct_sum({FiniteModule::regular(R2), FiniteModule::regular(R2)});
    auto L = cyclic_submodule(*V, V->encode(std::vector<long>{1, 0}));
    auto res = is_direct_summand(*V, L);
    REQUIRE(res.value);
    CHECK(res.complement->elems == std::vector<Elem>{0, 1});  // {(0,0),(0,1)}

    Submodule zero;
    zero.elems = {0};
    auto rz = is_direct_summand(*M4, zero);
    CHECK(rz.value);
    CHECK(rz.complement->elems.size() == 4);
}

TEST_CASE("RD-purity") {
    auto R4 = FiniteRing::zmod(4);
    auto M = FiniteModule::regular(R4);
    auto N = cyclic_submodule(*M, 2);
    auto r = is_rd_pure(*M, N);
    CHECK_FALSE(r.value);
    CHECK(r.witness == 2);

    Submodule zero;
    zero.elems = {0};
    CHECK(is_rd_pure(*M, zero).value);
    auto full = submodule_generated(*M, std::vector<Elem>{1});
    CHECK(is_rd_pure(*M, full).value);

    auto T = FiniteRing::upper_triangular(2, 2);
    CHECK_THROWS_AS(is_rd_pure(*FiniteModule::regular(T), zero), NotCommutativeError);
}

TEST_CASE("summands are RD-pure") {
    auto M = z2_plus_z4_over_z8();
    for (auto& N : all_submodules(*M))
        if (is_direct_summand(*M, N).value) CHECK(is_rd_pure(*M, N).value);
}

TEST_CASE("module isomorphism") {
    auto R4 = FiniteRing::zmod(4);
    auto M4 = FiniteModule::regular(R4);
    auto self = is_isomorphic(*M4, *M4);
    REQUIRE(self.value);
    for (long m = 0; m < 4; ++m)
        for (long a = 0; a < 4; ++a)
            CHECK(self.map[static_cast<size_t>(M4->act(static_cast<Elem>(m), static_cast<Elem>(a)))] ==
                  M4->act(self.map[static_cast<size_t>(m)], static_cast<Elem>(a)));

    auto V = FiniteModule::from_action(R4, {2, 2}, {{{1, 0}, {0, 1}}});
    CHECK_FALSE(is_isomorphic(*V, *M4).value);

    // M/Ma is isomorphic to l_M(a) for M = Z/2 + Z/4 over Z/8, a = 2
    auto M = z2_plus_z4_over_z8();
    auto Q = quotient(*M, scalar_image(*M, 2));
    auto K = submodule_as_module(*M, scalar_kernel(*M, 2));
    CHECK(is_isomorphic(*Q.module, *K.module).value);
}

TEST_CASE("isomorphism agrees with permutation enumeration") {
    auto R4 = FiniteRing::zmod(4);
    auto R2 = FiniteRing::zmod(2);
    std::vector<ModulePtr> small{
        FiniteModule::regular(R4),
        FiniteModule::from_action(R4, {2, 2}, {{{1, 0}, {0, 1}}}),
        FiniteModule::from_action(R4, {4}, {{{1}}}),
        FiniteModule::direct_sum({FiniteModule::regular(R2), FiniteModule::regular(R2)}),
    };
    for (auto& A : small)
        for (auto& B : small) {
            if (A->ring() != B->ring()) continue;
            CHECK(is_isomorphic(*A, *B).value == naive::isomorphic_by_permutations(*A, *B));
        }
}

TEST_CASE("cyclic quotient modules") {
    auto R = FiniteRing::zmod(8);
    auto I = principal_right_ideal(*R, 4);
    auto M = cyclic_quotient(R, I.elems);
    CHECK(M->size() == 4);
    // 4 acts as zero
    for (long m = 0; m < 4; ++m) CHECK(M->act(static_cast<Elem>(m), 4) == 0);

    // direct sum of two cyclic quotients of Z/8 rebuilds Z/2 + Z/4
    auto J = principal_right_ideal(*R, 2);
    auto D = FiniteModule::direct_sum({cyclic_quotient(R, J.elems), M});
    CHECK(is_isomorphic(*D, *z2_plus_z4_over_z8()).value);
}

TEST_CASE("localization") {
    auto R6 = FiniteRing::zmod(6);
    auto M = FiniteModule::regular(R6);
    auto comps = localize(*M, local_decomposition(R6));
    REQUIRE(comps.size() == 2);
    std::vector<long> sizes;
    long prod = 1;
    for (auto& c : comps) {
        sizes.push_back(c.module->size());
        prod *= c.module->size();
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long>{2, 3});
    CHECK(prod == M->size());

    auto R2 = FiniteRing::zmod(2);
    auto V = FiniteModule::direct_sum({FiniteModule::regular(R2), FiniteModule::regular(R2)});
    auto single = localize(*V, local_decomposition(R2));
    REQUIRE(single.size() == 1);
    CHECK(single[0].module->size() == 4);
}

TEST_CASE("action validation") {
    auto R4 = FiniteRing::zmod(4);
    // 1 must act as the identity but cannot: order of the generator does not
    // divide the scalar order
    CHECK_THROWS_AS(FiniteModule::from_action(R4, {3}, {{{1}}}), InvalidActionError);
    CHECK_THROWS_AS(FiniteModule::from_action(R4, {2}, {{{0}}}), InvalidActionError);  // unity broken
    CHECK_THROWS_AS(FiniteModule::from_action(R4, {2, 2}, {{{1, 0}}}), InvalidActionError);  // shape
    auto R2 = FiniteRing::zmod(2);
    CHECK_THROWS_AS(
        FiniteModule::direct_sum({FiniteModule::regular(R2), FiniteModule::regular(R4)}),
        RingMismatchError);
    CHECK_THROWS_AS(is_isomorphic(*FiniteModule::regular(R2), *FiniteModule::regular(R4)),
                    RingMismatchError);
}
