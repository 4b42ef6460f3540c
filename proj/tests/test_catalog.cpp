#include <set>

#include "doctest.h"
#include "kirkman/catalog.hpp"

using namespace kirkman;

TEST_CASE("catalog self test") {
    Report r = catalog::self_test();
    for (const std::string& p : r.problems) MESSAGE(p);
    CHECK(r.ok);
}

TEST_CASE("kts9 table") {
    const catalog::Entry& e = catalog::get("kts9");
    CHECK(e.design.blocks.size() == 12);
    REQUIRE(e.resolution.has_value());
    CHECK(e.resolution->classes.size() == 4);
    // first class of the table: {1,2,3},{4,5,6},{7,8,9} one-based
    std::set<Block> first;
    for (int bi : e.resolution->classes[0].block_indices) first.insert(e.design.blocks[bi]);
    CHECK(first == std::set<Block>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    CHECK(e.colourings.size() == 3);
}

TEST_CASE("kts15 counts") {
    const catalog::Entry& e = catalog::get("kts15");
    CHECK(e.design.blocks.size() == 35);
    CHECK(e.resolution->classes.size() == 7);
}

TEST_CASE("sigma systems develop to the right sizes and are rainbow") {
    struct Want {
        const char* id;
        int v;
        int blocks;
        int classes;
    } wants[] = {
        {"sigma21", 21, 70, 10},   {"sigma33", 33, 176, 16},  {"sigma39", 39, 247, 19},
        {"sigma57", 57, 532, 28},  {"sigma69", 69, 782, 34},
    };
    for (const auto& w : wants) {
        const catalog::Entry& e = catalog::get(w.id);
        CHECK(e.design.v == w.v);
        CHECK(static_cast<int>(e.design.blocks.size()) == w.blocks);
        CHECK(static_cast<int>(e.resolution->classes.size()) == w.classes);
        CHECK(verify_kts(e.design, *e.resolution).ok);
        RainbowReport rb = rainbow_check(e.design, *e.resolution, *e.find_colouring("rainbow"));
        CHECK(rb.is_rainbow);
    }
    // class count identity 1 + (v-3)/6 + (v-3)/3 = (v-1)/2
    for (int v : {21, 33, 39, 57, 69})
        CHECK(1 + (v - 3) / 6 + (v - 3) / 3 == (v - 1) / 2);
}

TEST_CASE("sigma33 short-orbit class contains the listed starter and its shift") {
    // starter block {1_0, 2_0, 1_2} with m = 10 encodes to {1, 2, 21};
    // its 5-step shift is {6, 7, 26}
    const catalog::Entry& e = catalog::get("sigma33");
    const std::vector<Block>& blocks = e.design.blocks;
    CHECK(std::find(blocks.begin(), blocks.end(), Block{1, 2, 21}) != blocks.end());
    CHECK(std::find(blocks.begin(), blocks.end(), Block{6, 7, 26}) != blocks.end());
    // both in the same class
    int ci1 = -1, ci2 = -1;
    for (std::size_t ci = 0; ci < e.resolution->classes.size(); ++ci) {
        for (int bi : e.resolution->classes[ci].block_indices) {
            if (blocks[bi] == Block{1, 2, 21}) ci1 = static_cast<int>(ci);
            if (blocks[bi] == Block{6, 7, 26}) ci2 = static_cast<int>(ci);
        }
    }
    CHECK(ci1 == ci2);
}

TEST_CASE("sigma21 fixed class holds the infinity block and the starter development") {
    // m = 6: infinity block {18,19,20}; starter {0_0,4_1,1_2} = {0,10,13}
    const catalog::Entry& e = catalog::get("sigma21");
    int inf_class = -1;
    for (std::size_t ci = 0; ci < e.resolution->classes.size(); ++ci)
        for (int bi : e.resolution->classes[ci].block_indices)
            if (e.design.blocks[bi] == Block{18, 19, 20}) inf_class = static_cast<int>(ci);
    REQUIRE(inf_class >= 0);
    std::set<Block> cls;
    for (int bi : e.resolution->classes[inf_class].block_indices)
        cls.insert(e.design.blocks[bi]);
    CHECK(cls.count({0, 10, 13}) == 1);
    // development by i_j -> (i+1 mod 6)_j: {1,11,14}
    CHECK(cls.count({1, 11, 14}) == 1);
}

TEST_CASE("tv systems: counts, starter membership, colour type") {
    const catalog::Entry& e1 = catalog::get("tv33-1");
    CHECK(e1.design.blocks.size() == 176);
    CHECK(e1.resolution->classes.size() == 16);
    // starter class blocks {1,2,4} and {5,6,8} are present
    CHECK(std::find(e1.design.blocks.begin(), e1.design.blocks.end(), Block{1, 2, 4}) !=
          e1.design.blocks.end());
    CHECK(std::find(e1.design.blocks.begin(), e1.design.blocks.end(), Block{5, 6, 8}) !=
          e1.design.blocks.end());
    const Colouring* c = e1.find_colouring("paper");
    REQUIRE(c);
    CHECK(colour_type(*c) == std::vector<int>{8, 8, 8, 9});

    for (int i : {2, 17, 29, 30}) {
        const catalog::Entry& e = catalog::get("tv33-" + std::to_string(i));
        CHECK(e.design.blocks.size() == 176);
        CHECK(e.resolution->classes.size() == 16);
        CHECK(verify_kts(e.design, *e.resolution).ok);
        CHECK(is_weak(e.design, *e.find_colouring("paper")).report.ok);
    }
}

TEST_CASE("tv systems are pairwise distinct as Kirkman systems") {
    // several share an underlying STS(33); the resolutions tell them apart
    std::set<std::vector<Block>> block_sets;
    std::set<std::set<std::vector<Block>>> resolved;
    for (int i = 1; i <= 30; ++i) {
        const catalog::Entry& e = catalog::get("tv33-" + std::to_string(i));
        block_sets.insert(e.design.blocks);
        std::set<std::vector<Block>> classes;
        for (const ResolutionClass& cl : e.resolution->classes) {
            std::vector<Block> blocks;
            for (int bi : cl.block_indices) blocks.push_back(e.design.blocks[bi]);
            std::sort(blocks.begin(), blocks.end());
            classes.insert(std::move(blocks));
        }
        resolved.insert(std::move(classes));
    }
    CHECK(block_sets.size() == 21);
    CHECK(resolved.size() == 30);
}

TEST_CASE("rotational system: orbit sizes and colouring") {
    const catalog::Entry& e = catalog::get("rot33-59a");
    CHECK(e.design.v == 33);
    CHECK(e.design.blocks.size() == 176);
    CHECK(verify_pairwise_balance(e.design).report.ok);

    // orbit of {inf, 0, 16} has length 16, the other five have length 32
    std::set<Block> orbit;
    for (int t = 0; t < 32; ++t) {
        Block b{32, t % 32, (16 + t) % 32};
        std::sort(b.begin(), b.end());
        orbit.insert(b);
    }
    CHECK(orbit.size() == 16);

    const Colouring* c = e.find_colouring("paper");
    REQUIRE(c);
    CHECK(c->delta == 3);
    CHECK(is_weak(e.design, *c).report.ok);
    // the final character colours the infinity point (encoded 32)
    CHECK(c->colours[32] == 1);  // '2' in the published string
}

TEST_CASE("q13 catalog entry") {
    const catalog::Entry& e = catalog::get("q13");
    CHECK(e.design.v == 13);
    CHECK(e.design.k == 4);
    REQUIRE(e.ordered_tuples.size() == 13);
    CHECK(e.ordered_tuples[0] == std::array<int, 4>{0, 1, 3, 9});
    CHECK(e.ordered_tuples[12] == std::array<int, 4>{12, 0, 2, 8});
    const Colouring* c = e.find_colouring("2col");
    REQUIRE(c);
    CHECK(is_weak(e.design, *c).report.ok);
    CHECK(colour_type(*c) == std::vector<int>{6, 7});
}

TEST_CASE("gdd4x4 catalog entry") {
    const catalog::Entry& e = catalog::get("gdd4x4");
    CHECK(e.design.blocks.size() == 16);
    CHECK(e.groups->groups.size() == 4);
    // tuple (0,0,1,2) encodes to {0, 4, 9, 14}
    CHECK(std::find(e.design.blocks.begin(), e.design.blocks.end(), Block{0, 4, 9, 14}) !=
          e.design.blocks.end());
}

TEST_CASE("catalog id list") {
    CHECK(catalog::ids().size() == 7 + 30 + 3);
    CHECK(catalog::has("tv33-30"));
    CHECK_FALSE(catalog::has("tv33-31"));
    CHECK_THROWS_AS(catalog::get("nope"), contract_error);
}
