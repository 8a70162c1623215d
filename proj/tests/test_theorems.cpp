#include <doctest.h>

#include <algorithm>
#include <set>

#include "modreg/theorems.hpp"

using namespace modreg;

TEST_CASE("registry is well formed") {
    auto reg = theorem_registry();
    CHECK(reg.size() == 25);
    std::set<std::string> ids;
    for (const auto& t : reg) {
        CHECK(ids.insert(t.id).second);
        CHECK(find_theorem(t.id) == &t);
    }
    CHECK(find_theorem("NOPE") == nullptr);
    CHECK_THROWS_AS(verify_theorem("NOPE", FiniteRing::zmod(4), nullptr), InvalidParameterError);
}

TEST_CASE("THM-WE on the regular Z4 module: all clauses false, verdict pass") {
    auto R = FiniteRing::zmod(4);
    auto v = verify_theorem("THM-WE", R, FiniteModule::regular(R));
    CHECK(v.status == TheoremStatus::Pass);
    REQUIRE(v.clauses.size() == 4);
    for (const auto& c : v.clauses) CHECK_FALSE(c.value);
}

TEST_CASE("COR-RING-REG on Z6: all clauses true") {
    auto v = verify_theorem("COR-RING-REG", FiniteRing::zmod(6), nullptr);
    CHECK(v.status == TheoremStatus::Pass);
    REQUIRE(v.clauses.size() == 4);
    for (const auto& c : v.clauses) CHECK(c.value);
}

TEST_CASE("THM-ABELIAN on Z2 (+) Z2 over Z2: both sides false, pass") {
    auto R = FiniteRing::zmod(2);
    auto reg = FiniteModule::regular(R);
    auto M = FiniteModule::direct_sum({reg, reg});
    auto v = verify_theorem("THM-ABELIAN", R, M);
    CHECK(v.status == TheoremStatus::Pass);
    REQUIRE(v.clauses.size() == 2);
    CHECK_FALSE(v.clauses[0].value);  // S = M2(F2), not reduced, though M is morphic
    CHECK_FALSE(v.clauses[1].value);
}

TEST_CASE("hypothesis filters skip, not pass") {
    auto UT = FiniteRing::upper_triangular(2, 2);
    auto v = verify_theorem("THM-WE", UT, FiniteModule::regular(UT));
    CHECK(v.status == TheoremStatus::Skipped);
    CHECK(v.reason == "requires a commutative base ring");
    CHECK(v.clauses.empty());

    auto R = FiniteRing::zmod(4);
    auto zero = cyclic_quotient(R, right_ideals(*R).back().elems);  // R/R
    REQUIRE(zero->size() == 1);
    auto w = verify_theorem("THM-WE", R, zero);
    CHECK(w.status == TheoremStatus::Skipped);
    CHECK(w.reason == "requires a nontrivial module");

    // regular Z4 is multiplication but Z2 (+) Z4 over Z4 is not
    auto z2 = cyclic_quotient(R, std::vector<Elem>{0, 2});
    auto M = FiniteModule::direct_sum({z2, FiniteModule::regular(R)});
    auto m = verify_theorem("COR-MULT-CHAIN", R, M);
    CHECK(m.status == TheoremStatus::Skipped);
    CHECK(m.reason == "requires a multiplication module");
}

TEST_CASE("ring-only theorems ignore the module argument") {
    auto v = verify_theorem("COR-REDUCED-RING", FiniteRing::upper_triangular(2, 2), nullptr);
    CHECK(v.status == TheoremStatus::Pass);
    REQUIRE(v.clauses.size() == 3);
    for (const auto& c : v.clauses) CHECK_FALSE(c.value);  // UT(2,2) is not reduced
}

TEST_CASE("implication theorems with a false premise pass vacuously") {
    auto R = FiniteRing::zmod(4);
    auto v = verify_theorem("LEM-FREG-WE", R, FiniteModule::regular(R));  // Z4 not F-regular
    CHECK(v.status == TheoremStatus::Pass);
    REQUIRE(v.clauses.size() == 1);
    CHECK(v.clauses[0].name == "f_regular");
    CHECK_FALSE(v.clauses[0].value);
    CHECK(v.reason == "premise false; conclusion not evaluated");
}

TEST_CASE("known instances of the heavier equivalences") {
    auto z6 = FiniteRing::zmod(6);
    auto v = verify_theorem("THM-FREG-CHAR", z6, FiniteModule::regular(z6));
    CHECK(v.status == TheoremStatus::Pass);
    REQUIRE(v.clauses.size() == 7);
    for (const auto& c : v.clauses) CHECK(c.value);  // Z6 is regular, everything holds

    auto z4 = FiniteRing::zmod(4);
    auto w = verify_theorem("THM-FG-COINCIDE", z4, FiniteModule::regular(z4));
    CHECK(w.status == TheoremStatus::Pass);
    REQUIRE(w.clauses.size() == 6);
    for (const auto& c : w.clauses) CHECK_FALSE(c.value);
}

TEST_CASE("default catalog shape") {
    auto spec = default_catalog_spec();
    CHECK(spec.rings.size() == 16);
    CHECK(spec.rings.front().name == "zmod(2)");
    CHECK(spec.rings.back().name == "upper_triangular(2,2)");
    CHECK(spec.max_module_order == 64);

    auto cat = generate_catalog(spec);
    CHECK(cat.rings.size() == 16);
    CHECK(cat.modules.size() > 50);
    for (const auto& m : cat.modules) {
        CHECK(m.module->size() > 1);
        CHECK(m.module->size() <= 64);
    }
    // Z2 (+) Z4 appears over zmod(8)
    bool found = false;
    for (const auto& m : cat.modules) {
        if (m.ring_name != "zmod(8)" || m.module->size() != 8) continue;
        auto f = m.module->invariant_factors();
        std::sort(f.begin(), f.end());
        if (f == std::vector<long>{2, 4}) found = true;
    }
    CHECK(found);
}

TEST_CASE("tiny catalog spec closure") {
    CatalogSpec spec;
    spec.rings.push_back({"zmod(2)", FiniteRing::zmod(2)});
    spec.max_module_order = 4;
    auto cat = generate_catalog(spec);
    REQUIRE(cat.modules.size() == 2);  // regular and Z2 (+) Z2; the zero module is filtered
    CHECK(cat.modules[0].module->size() == 2);
    CHECK(cat.modules[1].module->size() == 4);
}

TEST_CASE("empty catalog gives an empty report") {
    auto rep = sweep({}, {});
    CHECK(rep.verdicts.empty());
    CHECK(rep.failures.empty());
    CHECK(rep.passed == 0);
    CHECK(rep.failed == 0);
}

TEST_CASE("noncommutative-only catalog: THM-WE is all skipped") {
    CatalogSpec spec;
    spec.rings.push_back({"ut", FiniteRing::upper_triangular(2, 2)});
    spec.max_module_order = 8;
    auto cat = generate_catalog(spec);
    SweepOptions opts;
    opts.theorems = {"THM-WE"};
    auto rep = sweep(cat, opts);
    CHECK(rep.skipped == static_cast<long>(cat.modules.size()));
    CHECK(rep.passed == 0);
    CHECK(rep.failed == 0);
    CHECK_THROWS_AS(sweep(cat, SweepOptions{{"NOPE"}, 1}), InvalidParameterError);
}

TEST_CASE("sweep aggregates are independent of parallelism") {
    CatalogSpec spec;
    spec.rings.push_back({"zmod(4)", FiniteRing::zmod(4)});
    spec.rings.push_back({"zmod(6)", FiniteRing::zmod(6)});
    spec.max_module_order = 16;
    auto cat = generate_catalog(spec);
    auto a = sweep(cat, SweepOptions{{}, 1});
    auto b = sweep(cat, SweepOptions{{}, 4});
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (size_t i = 0; i < a.verdicts.size(); ++i) {
        CHECK(a.verdicts[i].theorem == b.verdicts[i].theorem);
        CHECK(a.verdicts[i].instance == b.verdicts[i].instance);
        CHECK(a.verdicts[i].status == b.verdicts[i].status);
        REQUIRE(a.verdicts[i].clauses.size() == b.verdicts[i].clauses.size());
        for (size_t j = 0; j < a.verdicts[i].clauses.size(); ++j) {
            CHECK(a.verdicts[i].clauses[j].name == b.verdicts[i].clauses[j].name);
            CHECK(a.verdicts[i].clauses[j].value == b.verdicts[i].clauses[j].value);
        }
    }
    CHECK(a.failed == 0);
}
