#include "doctest.h"
#include "oracles.hpp"

#include "mullreg/partition.hpp"

using namespace mullreg;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}

TEST_CASE("parsing") {
    CHECK(Partition::parse("5,5,3,2,1") == P({5, 5, 3, 2, 1}));
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("7 5 1 1") == P({7, 5, 1, 1}));
    CHECK_THROWS_AS(Partition::parse("3,4"), NotNonIncreasing);
    CHECK_THROWS_AS(Partition::parse("3,0"), NotNonIncreasing);
    CHECK_THROWS_AS(Partition::parse("2,-1"), NotNonIncreasing);
    CHECK_THROWS_AS(Partition::parse("1,x"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,1-2"), ParseError);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), NotAPartition);
}

TEST_CASE("string round trip") {
    CHECK(Partition{}.str() == "0");
    CHECK(P({13, 10, 9, 7, 5, 2, 2, 1}).str() == "13,10,9,7,5,2,2,1");
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : all_partitions(n))
            CHECK(Partition::parse(p.str()) == p);
}

TEST_CASE("transpose") {
    CHECK(P({5, 5, 3, 2, 1}).transposed() == P({5, 4, 3, 2, 2}));
    CHECK(Partition{}.transposed() == Partition{});
    CHECK(P({4, 2, 2, 1}).transposed() == P({4, 3, 1, 1}));
    CHECK(P({4, 2, 2, 1}).transposed() == oracles::transpose_by_counting(P({4, 2, 2, 1})));
    for (int n = 0; n <= 25; ++n)
        for (const Partition& p : all_partitions(n)) {
            CHECK(p.transposed().transposed() == p);
            if (n <= 14)
                CHECK(p.transposed() == oracles::transpose_by_counting(p));
        }
}

TEST_CASE("hooks") {
    HookStats h = hook_stats(P({8, 8, 7, 6, 6, 1}), {3, 5});
    CHECK(h.arm == 2);
    CHECK(h.leg == 2);
    CHECK(h.hook == 5);
    CHECK(h.hand == Box{3, 7});
    CHECK(h.foot == Box{5, 5});

    h = hook_stats(P({1}), {1, 1});
    CHECK(h.arm == 0);
    CHECK(h.leg == 0);
    CHECK(h.hook == 1);

    h = hook_stats(P({4, 2, 2, 1}), {2, 1});
    CHECK(h.arm == oracles::arm_by_counting(P({4, 2, 2, 1}), {2, 1}));
    CHECK(h.leg == oracles::leg_by_counting(P({4, 2, 2, 1}), {2, 1}));
    CHECK(h.arm == 1);
    CHECK(h.leg == 2);
    CHECK(h.hook == 4);

    CHECK_THROWS_AS(hook_stats(P({2, 1}), {1, 3}), BoxNotInPartition);
    CHECK_THROWS_AS(hook_stats(P({2, 1}), {3, 1}), BoxNotInPartition);

    for (int n = 0; n <= 14; ++n)
        for (const Partition& p : all_partitions(n))
            for_each_hook(p, [&](Box box, int arm, int leg) {
                HookStats s = hook_stats(p, box);
                CHECK(s.arm == oracles::arm_by_counting(p, box));
                CHECK(s.leg == oracles::leg_by_counting(p, box));
                CHECK(s.hook == s.arm + s.leg + 1);
                CHECK(s.arm == arm);
                CHECK(s.leg == leg);
            });
}

TEST_CASE("residues") {
    CHECK(residue({1, 5}, 4) == 0);
    CHECK(residue({7, 7}, 3) == 0);
    CHECK(residue({3, 2}, 5) == 4);
    CHECK_THROWS_AS(residue({1, 1}, 1), BadParameters);
}

TEST_CASE("b-regularity") {
    CHECK_FALSE(is_b_regular(P({3, 3, 3}), 3));
    CHECK(is_b_regular(P({7, 5, 1, 1}), 3));
    CHECK(is_b_regular(Partition{}, 2));
    CHECK(is_b_regular(P({3, 3}), 3));
    CHECK_FALSE(is_b_regular(P({5, 4, 4, 4, 1}), 3));
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(P({2, 2}), P({3, 1})));
    CHECK_FALSE(dominance_leq(P({3, 1}), P({2, 2})));
    for (const Partition& p : all_partitions(8))
        CHECK(dominance_leq(p, p));
    // Reversal under transposition, same sizes.
    for (int n = 0; n <= 15; ++n) {
        std::vector<Partition> ps = all_partitions(n);
        std::vector<Partition> ts;
        ts.reserve(ps.size());
        for (const Partition& p : ps)
            ts.push_back(p.transposed());
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t k = 0; k < ps.size(); ++k)
                CHECK(dominance_leq(ps[i], ps[k]) == dominance_leq(ts[k], ts[i]));
    }
}

TEST_CASE("concatenation") {
    CHECK(concat(P({5}), P({3, 1})) == P({5, 3, 1}));
    CHECK(concat(P({3}), Partition{}) == P({3}));
    CHECK(concat(Partition{}, P({3})) == P({3}));
    CHECK_THROWS_AS(concat(P({2}), P({3})), NotAPartition);
}

TEST_CASE("hook classification") {
    // Boundary case: leg = a, arm = b-a-1 is neither shallow nor steep.
    HookStats h = hook_stats(P({8, 8, 7, 6, 6, 1}), {3, 5});
    HookClass c = classify_hook(h, 2, 5);
    CHECK_FALSE(c.shallow);
    CHECK_FALSE(c.steep);
    CHECK(c.critical); // hook 5 = 1*5 with leg 2 = 1*2

    h = HookStats{{1, 1}, 0, 0, 1, {1, 1}, {1, 1}};
    c = classify_hook(h, 2, 5);
    CHECK(c.shallow);
    CHECK(c.steep);
    CHECK_FALSE(c.critical);

    // For divisible hooks, the inequality form matches the explicit
    // characterization: shallow iff leg <= ta-1 and arm >= t(b-a), t = hook/b.
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : all_partitions(n))
            for (int b = 2; b <= 7; ++b)
                for (int a = 1; a < b; ++a)
                    for_each_hook(p, [&](Box, int arm, int leg) {
                        int hook = arm + leg + 1;
                        if (hook % b != 0)
                            return;
                        int t = hook / b;
                        HookClass hc = classify_hook(
                            HookStats{{1, 1}, arm, leg, hook, {1, 1}, {1, 1}}, a, b);
                        CHECK(hc.shallow == (leg <= t * a - 1 && arm >= t * (b - a)));
                        CHECK(hc.steep == (arm <= t * a - 1 && leg >= t * (b - a)));
                        if (hc.shallow && hc.steep)
                            CHECK(b < 2 * a);
                    });
}

TEST_CASE("steep divisible hook count") {
    CHECK(count_steep_divisible(Partition{}, 1, 4) == 0);
    CHECK(count_steep_divisible(P({4, 2, 2, 1}), 1, 4) == 0);
    CHECK(count_steep_divisible(P({1, 1, 1, 1}), 1, 4) == 1);
}

TEST_CASE("hook finders") {
    CHECK_FALSE(first_divisible_not_shallow(P({1}), 1, 2).has_value());
    // (1,1,1,1) with a=1, b=4: the single divisible hook is steep, not shallow.
    auto box = first_divisible_not_shallow(P({1, 1, 1, 1}), 1, 4);
    REQUIRE(box.has_value());
    CHECK(*box == Box{1, 1});
    CHECK_FALSE(first_divisible_not_shallow_or_steep(P({1, 1, 1, 1}), 1, 4).has_value());
    // Row-major first critical hook of (8,8,7,6,6,1) at a=2, b=5: the box
    // (1,3) has hook 10 = 2*5 with leg 4 = 2*2; (3,5) is critical as well
    // but comes later.
    auto crit = first_critical_hook(P({8, 8, 7, 6, 6, 1}), 2, 5);
    REQUIRE(crit.has_value());
    CHECK(*crit == Box{1, 3});
    CHECK(classify_hook(hook_stats(P({8, 8, 7, 6, 6, 1}), {3, 5}), 2, 5).critical);
    CHECK_FALSE(first_critical_hook(P({2, 1}), 2, 5).has_value());
}

TEST_CASE("enumeration") {
    std::vector<Partition> zero = all_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Partition{});
    CHECK(all_partitions(5).size() == 7);
    CHECK(all_partitions(10).size() == 42);

    std::vector<Partition> five = all_partitions(5);
    CHECK(five.front() == P({5}));
    CHECK(five.back() == P({1, 1, 1, 1, 1}));

    std::vector<long long> counts = oracles::partition_counts(40);
    for (int n = 0; n <= 40; ++n) {
        PartitionStream stream(n);
        long long seen = 0;
        Partition prev;
        while (auto p = stream.next()) {
            CHECK(p->size() == n);
            if (seen > 0)
                CHECK(p->parts() < prev.parts()); // strictly reverse-lexicographic
            prev = std::move(*p);
            ++seen;
        }
        CHECK(seen == counts[n]);
    }
}
