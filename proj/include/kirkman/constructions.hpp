#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kirkman/core.hpp"

namespace kirkman::constructions {

// Output bundle: a design plus whatever structure the construction yields.
struct Built {
    Design design;
    std::optional<GroupPartition> groups;
    std::optional<Resolution> resolution;
    std::optional<Colouring> colouring;
};

// Resolvable transversal design: 3-RGDD of type v^3 for odd v, groups
// 0..v-1 / v..2v-1 / 2v..3v-1, blocks {a_i, b_{i+d}, c_{2i+d}}, one
// parallel class per d.
Built td3_resolvable(int v);

// KTS(3v) with an equitable weak 3-colouring -> KTS(9v) with the same;
// three relabelled copies plus nine transversal designs over the copies'
// colour thirds.
Built tripling(const Design& kts, const Resolution& res, const Colouring& colouring);

// One ingredient per distinct group size t: a rainbow KTS(3t+w) together
// with a designated rainbow sub-KTS on w points.
struct RainbowIngredient {
    Design design;
    Resolution resolution;
    Colouring colouring;
    std::vector<int> sub_points;
};

// Kirkman frame + per-size rainbow ingredients -> rainbow KTS(3v+w).
// Point (x,i) of level i encodes as i*(v+w/3)+x; added points follow the
// frame's. The output colouring maps (x,i) to i.
Built rainbow_frame_construction(const Design& frame, const GroupPartition& groups,
                                 const Resolution& res, int w,
                                 const std::map<int, RainbowIngredient>& ingredients);

// Quadruple system of order u -> 4-coloured 4-GDD of type 4^u carrying a
// 16-block gadget on each base block; point (q,i) encodes as 4q+i.
Built quadruple_to_4gdd(const Design& q);

// Coloured 4-GDD of type 4^u (per-block colour multiplicity <= 2, one
// point of each colour per group) weighted by 2g with a 3-frame of type
// (2g)^4 on every block -> coloured 3-frame of type (8g)^u.
Built gdd_blowup(const Design& gdd, const GroupPartition& groups, const Colouring& colouring,
                 int g, const Design& ingredient, const GroupPartition& ingredient_groups,
                 const Resolution& ingredient_res);

// Fill for one group: a KTS(g+1) whose point g lands on the shared
// infinity point.
struct Fill {
    Design design;
    Resolution resolution;
    std::optional<Colouring> colouring;
};

// Frame of type g^u plus one fill per group -> KTS(gu+1); infinity is the
// new point gu. When fills carry colourings, they must agree with the
// frame colouring on shared points and with each other on infinity.
Built frame_fill_one_point(const Design& frame, const GroupPartition& groups,
                           const Resolution& res, const std::vector<Fill>& fills,
                           const Colouring* frame_colouring = nullptr);

// Relabel a coloured KTS(g+1) so that it fills group `group_points` with
// colours matching `point_colours` and infinity colour `inf_colour`.
Fill align_fill(const Design& kts, const Resolution& res, const Colouring& colouring,
                const std::vector<int>& group_points, const std::vector<int>& point_colours,
                int inf_colour);

// delta-coloured resolvable 3-GDD of type 4^3: point i_j (encoded 4j+i)
// has colour c_j+i mod delta; {0_0,0_1,0_2} is a block unless c0=c1=c2.
Built rgdd_4_3_coloured(int c0, int c1, int c2, int delta);

// delta-coloured 3-frame of type 8^4 via weight-4 inflation of a 2^4
// frame; point i_j encodes as 8j+i and has colour c_j+i mod delta.
// The base frame defaults to the point-deleted KTS(9); it is relabelled
// so one block meets groups 0,1,2 at their 0-points.
Built frame_8_4_coloured(const std::array<int, 4>& offsets, int delta,
                         const FrameParts* base = nullptr);

// STS embedding data for the quadruple-system pipeline: where each point
// of the STS lands in Q, and which added point extends each STS block.
struct StsEmbedding {
    std::vector<int> point_image;  // sts point -> q point, injective
    std::vector<int> block_extra;  // per sts block: the added q point x_i
};

// delta-chromatic STS + quadruple system Q(w) containing its extension ->
// KTS(8w+1) with a weak delta-colouring containing the STS on the points
// 0_x. Pass an empty STS for the plumbing-only run.
Built sts_to_kts_pipeline(const Design& sts, const Colouring& sts_colouring,
                          const StsEmbedding& embedding, const Design& q, int delta);

// Doubling-plus-infinity: order-v quadruple system -> order-2v+1 triple
// system (q_i = i, q_i' = v+i, infinity = 2v). `order` fixes the
// (w,x,y,z) tuple per block; defaults to ascending. Resolutions are
// recovered separately by the solver.
Design kq_build(const Design& q,
                const std::vector<std::array<int, 4>>& order = {});

// K(Q) with colours doubled: primes get colour+delta, infinity colour 0.
// The designated w per block is the lowest point of the most frequent
// colour, so {x,y,z} is never monochromatic. No resolution attached.
Built kq_colour_2delta(const Design& q, const Colouring& colouring);

// K(Q) with one extra colour: needs every q-block to carry >= 3 colours;
// (x,y,z) is the least tricoloured triple, primes copy their twin's
// colour, infinity gets the fresh colour delta. No resolution attached.
Built kq_colour_delta_plus_one(const Design& q, const Colouring& colouring);

}  // namespace kirkman::constructions
