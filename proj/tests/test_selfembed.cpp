#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ramsey/embedding.hpp"
#include "ramsey/families.hpp"
#include "ramsey/selfembed.hpp"

using namespace ramsey;

namespace {
const ToothFn kIdentity({}, ArithmeticTail{1, 1});       // l(n) = n
const ToothFn kEx57({3}, PeriodicTail{{2}});             // l(1)=3, l(n)=2
const ToothFn kEx58({2}, PeriodicTail{{1}});             // l(1)=2, l(n)=1
}  // namespace

TEST_CASE("normalization") {
    // s=1 < l(1)-1=2: rewrite to l*(1)=1, l*(n)=2 for n>1
    auto star57 = normalize_comb(kEx57);
    CHECK(star57(1) == 1);
    for (int n = 2; n <= 30; ++n) CHECK(star57(n) == 2);

    // already satisfy s >= l(s)-1: unchanged
    CHECK(normalize_comb(kEx58) == kEx58);
    CHECK(normalize_comb(kIdentity) == kIdentity);

    CHECK_THROWS_AS(normalize_comb(ToothFn({1}, PeriodicTail{{1}})), std::invalid_argument);
}

TEST_CASE("normalization preserves the function beyond the swap") {
    // l = 5,1,5,1,... : s=1, l(s)=5, shift is 3
    ToothFn fn({}, PeriodicTail{{5, 1}});
    auto norm = normalize_comb(fn);
    CHECK(norm(1) == 1);
    CHECK(norm(2) == 1);
    CHECK(norm(3) == 1);
    CHECK(norm(4) == 2);  // s+1
    for (int n = 5; n <= 40; ++n) CHECK(norm(n) == fn(n - 3));
    auto s_new = spine_degree_first_branch(norm);
    REQUIRE(s_new.has_value());
    CHECK(*s_new >= norm(*s_new) - 1);
}

TEST_CASE("truncations of original and normalized combs contain each other") {
    auto norm = normalize_comb(kEx57);
    auto orig_comb = SymbolicGraph::comb(kEx57);
    auto norm_comb = SymbolicGraph::comb(norm);
    // index shift delta = l(s)-s-1 = 1; one extra spine step absorbs the swap
    const int delta = 1;
    for (int d = 2; d <= 6; ++d) {
        CHECK(find_embedding(truncate(norm_comb, d), truncate(orig_comb, d + delta)).has_value());
        CHECK(find_embedding(truncate(orig_comb, d), truncate(norm_comb, d + delta)).has_value());
    }
}

TEST_CASE("non-monotone prefix under a high increasing tail") {
    // regression: the scan bound must still reach past the prefix when every
    // prefix value is below the tail start
    ToothFn fn({1, 3, 1}, ArithmeticTail{9, 1});
    auto v = comb_self_embeddable(fn);
    CHECK(v.self_embeddable);
    CHECK(v.shift == 2);  // p=1 trips over l(2)=3 > l(3)=1
    for (int n = 1; n <= 60; ++n) CHECK(fn(n) <= fn(n + 2));
}

TEST_CASE("self-embeddability decisions for the worked examples") {
    auto v1 = comb_self_embeddable(kIdentity);
    CHECK(v1.self_embeddable);
    CHECK(v1.shift == 1);
    CHECK_FALSE(v1.normalized);

    auto v2 = comb_self_embeddable(kEx58);
    CHECK_FALSE(v2.self_embeddable);
    CHECK_FALSE(v2.shift.has_value());
    CHECK(v2.p_max == 2);
    // every tested shift has a concrete violating index
    REQUIRE(v2.violations.size() == 2);
    for (const auto& [p, n] : v2.violations) CHECK(kEx58(n) > kEx58(n + p));

    auto v3 = comb_self_embeddable(kEx57);
    CHECK(v3.self_embeddable);
    CHECK(v3.shift == 1);
    CHECK(v3.normalized);
    REQUIRE(v3.tooth.has_value());
    CHECK((*v3.tooth)(1) == 1);
    CHECK((*v3.tooth)(5) == 2);

    CHECK_THROWS_AS(comb_self_embeddable(ToothFn({1}, PeriodicTail{{1}})),
                    std::invalid_argument);
}

TEST_CASE("translation embedding per the figure") {
    auto m = comb_translation_embedding(kIdentity, 1, 3);
    for (int n = 0; n <= 3; ++n)
        CHECK(m.assignment.at(comb_spine_id(n)) == comb_spine_id(n + 1));
    auto comb = SymbolicGraph::comb(kIdentity);
    CHECK(validate_embedding(truncate(comb, 3), truncate(comb, 4), m));

    CHECK_THROWS_AS(comb_translation_embedding(ToothFn({1}, PeriodicTail{{1}}), 1, 3),
                    std::invalid_argument);

    // normalized Example value at p=1, depth=4
    auto norm = normalize_comb(kEx57);
    auto m2 = comb_translation_embedding(norm, 1, 4);
    auto nc = SymbolicGraph::comb(norm);
    CHECK(validate_embedding(truncate(nc, 4), truncate(nc, 5), m2));

    // violating shift is reported with its index
    CHECK_THROWS_WITH_AS(comb_translation_embedding(kEx58, 1, 3),
                         doctest::Contains("index 1"), std::invalid_argument);
}

TEST_CASE("avoid-vertex embeddings") {
    auto comb = SymbolicGraph::comb(kIdentity);

    auto a1 = comb_avoid_vertex_embedding(kIdentity, {0, 0}, 1, 3);
    CHECK(a1.translation == 1);
    CHECK(validate_embedding(truncate(comb, 3),
                             delete_vertices(truncate(comb, 4), {comb_spine_id(0)}), a1.map));

    auto a2 = comb_avoid_vertex_embedding(kIdentity, {2, 1}, 1, 3);
    CHECK(a2.translation == 3);

    auto a3 = comb_avoid_vertex_embedding(kIdentity, {5, 0}, 1, 3);
    CHECK(a3.translation == 6);

    CHECK_THROWS_AS(comb_avoid_vertex_embedding(kIdentity, {1, 5}, 1, 3),
                    std::invalid_argument);  // tooth at x1 has order 1
}

TEST_CASE("deletion containment constructions") {
    auto ray = SymbolicGraph::ray();
    auto r1 = verify_deletion_containment(ray, {{0}, {}}, 4);
    CHECK(r1.contained);
    CHECK(r1.margin == 1);

    auto kinf = SymbolicGraph::complete_infinite();
    auto r2 = verify_deletion_containment(kinf, {{1, 3}, {}}, 5);
    CHECK(r2.contained);
    CHECK(r2.margin == 2);

    auto comb = SymbolicGraph::comb(kIdentity);
    auto r3 = verify_deletion_containment(
        comb, {{comb_spine_id(1), comb_tooth_id(3, 1)}, {}}, 4);
    CHECK(r3.contained);
    CHECK(r3.margin == 4);  // least multiple of p=1 beyond spine index 3

    // edge deletions
    auto r4 = verify_deletion_containment(ray, {{}, {{2, 3}}}, 4);
    CHECK(r4.contained);
    auto r5 = verify_deletion_containment(kinf, {{0}, {{1, 2}}}, 4);
    CHECK(r5.contained);

    CHECK_THROWS_AS(verify_deletion_containment(SymbolicGraph::star(), {{1}, {}}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_deletion_containment(SymbolicGraph::comb(kEx58), {{0}, {}}, 3),
                    std::invalid_argument);  // no direct translation exists
}

namespace {

ToothFn random_tooth(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 6), val(1, 5), qlen(1, 4), coin(0, 1);
    while (true) {
        std::vector<int> prefix(len(rng));
        for (auto& v : prefix) v = val(rng);
        ToothFn::Tail tail;
        if (coin(rng)) {
            std::vector<int> cycle(qlen(rng));
            for (auto& v : cycle) v = val(rng);
            tail = PeriodicTail{cycle};
        } else {
            tail = ArithmeticTail{val(rng), std::uniform_int_distribution<int>(0, 2)(rng)};
        }
        ToothFn fn(std::move(prefix), std::move(tail));
        if (spine_degree_first_branch(fn)) return fn;
    }
}

}  // namespace

TEST_CASE("decider and constructor cohere on random functions") {
    std::mt19937 rng(5577001);
    for (int trial = 0; trial < 60; ++trial) {
        ToothFn fn = random_tooth(rng);
        auto verdict = comb_self_embeddable(fn);
        REQUIRE(verdict.tooth.has_value());
        const ToothFn& decided = *verdict.tooth;
        if (verdict.self_embeddable) {
            REQUIRE(verdict.shift.has_value());
            const int p = *verdict.shift;
            for (int n = 1; n <= 100; ++n) CHECK(decided(n) <= decided(n + p));
            for (int depth : {5, 10, 20}) {
                auto m = comb_translation_embedding(decided, p, depth);
                auto comb = SymbolicGraph::comb(decided);
                CHECK(validate_embedding(truncate(comb, depth), truncate(comb, depth + p), m));
            }
            // least witness: every smaller shift has a recorded violation
            for (const auto& [q, n] : verdict.violations) {
                CHECK(q < p);
                CHECK(decided(n) > decided(n + q));
            }
            CHECK(static_cast<int>(verdict.violations.size()) == p - 1);
        } else {
            CHECK(static_cast<int>(verdict.violations.size()) == verdict.p_max);
            for (const auto& [q, n] : verdict.violations) CHECK(decided(n) > decided(n + q));
        }
    }
}
