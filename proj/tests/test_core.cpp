#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "kirkman/catalog.hpp"
#include "kirkman/core.hpp"

using namespace kirkman;

namespace {

const catalog::Entry& kts9() { return catalog::get("kts9"); }

}  // namespace

TEST_CASE("pairwise balance accepts the classic systems") {
    PairBalanceReport r = verify_pairwise_balance(kts9().design);
    CHECK(r.report.ok);
    CHECK(kts9().design.blocks.size() == 12);

    const catalog::Entry& q13 = catalog::get("q13");
    CHECK(verify_pairwise_balance(q13.design).report.ok);
    CHECK(q13.design.blocks.size() == 13);
}

TEST_CASE("pairwise balance reports a doubled pair") {
    Design d;
    d.v = 4;
    d.k = 3;
    d.blocks = {{0, 1, 2}, {0, 1, 3}};
    PairBalanceReport r = verify_pairwise_balance(d);
    CHECK_FALSE(r.report.ok);
    REQUIRE_FALSE(r.offending_pairs.empty());
    CHECK(r.offending_pairs.front() == std::pair<int, int>{0, 1});
}

TEST_CASE("structure validation flags bad blocks") {
    Design d;
    d.v = 5;
    d.k = 3;
    d.blocks = {{0, 1, 1}};
    CHECK_FALSE(validate_structure(d).ok);
    d.blocks = {{0, 2, 1}};
    CHECK_FALSE(validate_structure(d).ok);
    d.blocks = {{0, 1, 2}, {0, 1, 2}};
    CHECK_FALSE(validate_structure(d).ok);
    d.blocks = {{0, 1, 5}};
    CHECK_FALSE(validate_structure(d).ok);
}

TEST_CASE("resolution verifier accepts the catalog classes and rejects a swap") {
    const catalog::Entry& e = kts9();
    CHECK(verify_resolution(e.design, *e.resolution).ok);

    Resolution broken = *e.resolution;
    std::swap(broken.classes[0].block_indices[0], broken.classes[1].block_indices[0]);
    CHECK_FALSE(verify_resolution(e.design, broken).ok);
}

TEST_CASE("GDD verifier") {
    const catalog::Entry& g = catalog::get("gdd4x4");
    CHECK(verify_gdd(g.design, *g.groups).ok);

    // singleton groups turn the GDD condition into pairwise balance
    GroupPartition singles;
    for (int p = 0; p < 9; ++p) singles.groups.push_back({p});
    CHECK(verify_gdd(kts9().design, singles).ok);

    // moving a block point into its own group breaks condition (ii)
    GroupPartition bad = *g.groups;
    const Block& b0 = g.design.blocks[0];
    // put the first two points of block 0 into one group
    bad.groups.assign(4, {});
    std::vector<int> rest;
    for (int p = 0; p < 16; ++p)
        if (p != b0[0] && p != b0[1]) rest.push_back(p);
    bad.groups[0] = {b0[0], b0[1]};
    bad.groups[1] = {rest[0], rest[1]};
    bad.groups[2].assign(rest.begin() + 2, rest.begin() + 8);
    bad.groups[3].assign(rest.begin() + 8, rest.end());
    CHECK_FALSE(verify_gdd(g.design, bad).ok);
}

TEST_CASE("delete_point gives a 2^4 frame and verify_frame accepts it") {
    const catalog::Entry& e = kts9();
    FrameParts f = delete_point(e.design, *e.resolution, 0);
    CHECK(f.design.v == 8);
    CHECK(f.design.blocks.size() == 8);
    CHECK(f.groups.groups.size() == 4);
    CHECK(group_type(f.groups) == "2^4");
    CHECK(f.resolution.classes.size() == 4);
    CHECK(verify_frame(f.design, f.groups, f.resolution).ok);
    // each group is missed by exactly one class
    std::vector<int> missed(4, 0);
    for (const auto& cl : f.resolution.classes) ++missed[*cl.missing_group];
    CHECK(missed == std::vector<int>{1, 1, 1, 1});

    // deleting any point of a bigger catalog system also yields a frame
    const catalog::Entry& s21 = catalog::get("sigma21");
    FrameParts f21 = delete_point(s21.design, *s21.resolution, 5);
    CHECK(group_type(f21.groups) == "2^10");
    CHECK(verify_frame(f21.design, f21.groups, f21.resolution).ok);
}

TEST_CASE("delete_point rejects the degenerate KTS(3)") {
    Design d;
    d.v = 3;
    d.k = 3;
    d.blocks = {{0, 1, 2}};
    Resolution r;
    r.classes.push_back({{0}, std::nullopt});
    CHECK_THROWS_AS(delete_point(d, r, 0), contract_error);
}

TEST_CASE("frames reject odd groups") {
    // fabricate: 2^4 frame with one group split 1/3
    const catalog::Entry& e = kts9();
    FrameParts f = delete_point(e.design, *e.resolution, 0);
    GroupPartition odd = f.groups;
    int moved = odd.groups[0].back();
    odd.groups[0].pop_back();
    odd.groups[1].push_back(moved);
    CHECK_FALSE(verify_frame(f.design, odd, f.resolution).ok);
}

TEST_CASE("weak colouring checks") {
    const catalog::Entry& e = kts9();
    const Colouring* c = e.find_colouring("3x3");
    REQUIRE(c != nullptr);
    CHECK(is_weak(e.design, *c).report.ok);

    Colouring mono;
    mono.delta = 1;
    mono.colours.assign(9, 0);
    WeakReport w = is_weak(e.design, mono);
    CHECK_FALSE(w.report.ok);
    CHECK(w.monochromatic_blocks.size() == 12);
}

TEST_CASE("colour types and equity") {
    const catalog::Entry& e = kts9();
    CHECK(colour_type(*e.find_colouring("3x3")) == std::vector<int>{3, 3, 3});
    CHECK(colour_type(*e.find_colouring("2-3-4")) == std::vector<int>{2, 3, 4});
    CHECK(colour_type(*e.find_colouring("1-4-4")) == std::vector<int>{1, 4, 4});
    CHECK(is_equitable(*e.find_colouring("3x3")));
    CHECK_FALSE(is_equitable(*e.find_colouring("1-4-4")));

    Colouring all_one;
    all_one.delta = 3;
    all_one.colours.assign(9, 0);
    CHECK(colour_type(all_one) == std::vector<int>{9});
    CHECK_FALSE(is_equitable(all_one));

    CHECK(type_to_string(std::vector<int>{8, 8, 8, 9}) == "8^3 9^1");
}

TEST_CASE("rainbow check on the catalog colourings") {
    const catalog::Entry& e = kts9();
    RainbowReport r = rainbow_check(e.design, *e.resolution, *e.find_colouring("3x3"));
    CHECK(r.is_rainbow);
    // the rainbow class is the one containing {0,1,2}
    bool contains = false;
    for (int bi : e.resolution->classes[r.rainbow_class].block_indices)
        contains = contains || e.design.blocks[bi] == Block{0, 1, 2};
    CHECK(contains);

    const catalog::Entry& k15 = catalog::get("kts15");
    CHECK(rainbow_check(k15.design, *k15.resolution, *k15.find_colouring("rainbow")).is_rainbow);

    Colouring two;
    two.delta = 2;
    two.colours.assign(9, 0);
    CHECK_THROWS_AS(rainbow_check(e.design, *e.resolution, two), contract_error);
}

TEST_CASE("some equitable weak 3-colouring of KTS(9) is not rainbow") {
    // brute-force oracle over all 3/3/3 partitions with point 0 in class 0
    const catalog::Entry& e = kts9();
    bool found_non_rainbow = false;
    std::vector<int> pts(9);
    std::iota(pts.begin(), pts.end(), 0);
    std::vector<int> col(9);
    // choose class of point sets by bitmask enumeration
    for (int m1 = 0; m1 < (1 << 9) && !found_non_rainbow; ++m1) {
        if (__builtin_popcount(m1) != 3 || !(m1 & 1)) continue;
        for (int m2 = 0; m2 < (1 << 9); ++m2) {
            if (__builtin_popcount(m2) != 3 || (m1 & m2)) continue;
            for (int p = 0; p < 9; ++p)
                col[p] = (m1 >> p & 1) ? 0 : (m2 >> p & 1) ? 1 : 2;
            Colouring c;
            c.delta = 3;
            c.colours = col;
            if (!is_weak(e.design, c).report.ok) continue;
            RainbowReport r = rainbow_check(e.design, *e.resolution, c);
            if (!r.is_rainbow) {
                found_non_rainbow = true;
                break;
            }
        }
    }
    CHECK(found_non_rainbow);
}

TEST_CASE("subsystem verifier") {
    const catalog::Entry& e = kts9();
    // any single block is a trivial sub-KTS(3)
    Block b = e.design.blocks[0];
    CHECK(verify_subsystem(e.design, *e.resolution, b).ok);
    // three points not forming a block are not
    std::vector<int> non_block{0, 1, 3};
    CHECK(std::find(e.design.blocks.begin(), e.design.blocks.end(), Block{0, 1, 3}) ==
          e.design.blocks.end());
    CHECK_FALSE(verify_subsystem(e.design, *e.resolution, non_block).ok);
}

TEST_CASE("admissibility predicates") {
    CHECK(admissible_kts(33));
    CHECK_FALSE(admissible_kts(13));
    CHECK(admissible_sts(13));
    CHECK_FALSE(admissible_sts(11));
    CHECK(admissible_qs(13));
    CHECK(admissible_qs(16));
    CHECK_FALSE(admissible_qs(10));

    CHECK(admissible_frame(2, 4));
    CHECK_FALSE(admissible_frame(2, 5));  // g(u-1) = 8 not divisible by 3
    CHECK(admissible_frame(6, 4));
    CHECK_FALSE(admissible_frame(3, 4));  // odd g

    CHECK_FALSE(admissible_frame_gum(4, 3, 10));  // u = 3 forces m = g
    CHECK(admissible_frame_gum(4, 3, 4));
    CHECK(admissible_frame_gum(2, 6, 2));
    CHECK_FALSE(admissible_frame_gum(2, 6, 8));   // m != g mod 6
    CHECK_FALSE(admissible_frame_gum(2, 6, 14));  // m > g(u-1)/2 = 5
    CHECK_FALSE(admissible_frame_gum(2, 4, 2));   // gu not divisible by 3
}

TEST_CASE("KTS counting identities") {
    const catalog::Entry& e = catalog::get("sigma21");
    CHECK(verify_kts(e.design, *e.resolution).ok);
    CHECK(e.design.blocks.size() == 70);
    CHECK(e.resolution->classes.size() == 10);
}

TEST_CASE("weakness is monotone under colour refinement") {
    const catalog::Entry& e = catalog::get("kts15");
    Colouring base = *e.find_colouring("rainbow");
    CHECK(is_weak(e.design, base).report.ok);
    std::mt19937 rng(7);
    for (int round = 0; round < 30; ++round) {
        // split a random subset of one colour class into a fresh colour
        Colouring refined = base;
        refined.delta = base.delta + 1;
        int victim = static_cast<int>(rng() % base.delta);
        for (std::size_t p = 0; p < refined.colours.size(); ++p)
            if (refined.colours[p] == victim && rng() % 2) refined.colours[p] = base.delta;
        CHECK(is_weak(e.design, refined).report.ok);
        base = refined;
    }
}

TEST_CASE("canonical form is stable and order independent") {
    const catalog::Entry& e = kts9();
    Design shuffled = e.design;
    std::mt19937 rng(11);
    std::shuffle(shuffled.blocks.begin(), shuffled.blocks.end(), rng);
    CHECK(same_canonical_blocks(shuffled, e.design));
    Design other = e.design;
    other.blocks[0] = {0, 1, 3};
    CHECK_FALSE(same_canonical_blocks(other, e.design));
}

TEST_CASE("permutations") {
    Permutation p{{1, 2, 0}};
    CHECK(p.is_bijection());
    CHECK(p.inverse().images == std::vector<int>{2, 0, 1});
    Permutation bad{{0, 0, 2}};
    CHECK_FALSE(bad.is_bijection());
}
