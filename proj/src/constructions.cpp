#include "kirkman/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kirkman/catalog.hpp"

namespace kirkman::constructions {

namespace {

[[noreturn]] void broken(const std::string& what, const Report& r) {
    std::string msg = "construction postcondition failed: " + what;
    for (const std::string& p : r.problems) msg += "\n  " + p;
    throw std::logic_error(msg);
}

void must(const Report& r, const std::string& what) {
    if (!r.ok) broken(what, r);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw contract_error(what);
}

Block sorted_block(std::initializer_list<int> pts) {
    Block b(pts);
    std::sort(b.begin(), b.end());
    return b;
}

}  // namespace

Built td3_resolvable(int v) {
    require(v >= 3 && v % 2 == 1, "td3_resolvable: v must be odd and >= 3");
    Built out;
    out.design.v = 3 * v;
    out.design.k = 3;
    out.groups.emplace();
    for (int j = 0; j < 3; ++j) {
        std::vector<int> g(v);
        std::iota(g.begin(), g.end(), j * v);
        out.groups->groups.push_back(std::move(g));
    }
    out.resolution.emplace();
    for (int d = 0; d < v; ++d) {
        ResolutionClass cl;
        for (int i = 0; i < v; ++i) {
            cl.block_indices.push_back(static_cast<int>(out.design.blocks.size()));
            out.design.blocks.push_back(
                sorted_block({i, v + (i + d) % v, 2 * v + (2 * i + d) % v}));
        }
        out.resolution->classes.push_back(std::move(cl));
    }
    must(verify_gdd(out.design, *out.groups), "td3 GDD");
    must(verify_resolution(out.design, &*out.groups, *out.resolution), "td3 resolution");
    return out;
}

Built tripling(const Design& kts, const Resolution& res, const Colouring& colouring) {
    must(verify_kts(kts, res), "tripling input KTS");
    require(colouring.delta == 3, "tripling: colouring must use 3 colours");
    require(is_weak(kts, colouring).report.ok, "tripling: colouring must be weak");
    require(is_equitable(colouring), "tripling: colouring must be equitable");
    int v3 = kts.v;
    int v = v3 / 3;
    require(v3 % 3 == 0 && v % 2 == 1, "tripling: order must be an odd multiple of 3");

    // relabel so colour class i sits at positions [i*v, (i+1)*v) of a copy
    std::vector<int> rank(v3);
    {
        std::vector<int> order(v3);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return colouring.colours[a] < colouring.colours[b];
        });
        for (int pos = 0; pos < v3; ++pos) rank[order[pos]] = pos;
    }

    Built out;
    out.design.v = 9 * v;
    out.design.k = 3;
    out.resolution.emplace();

    // three relabelled copies; class r of the output joins class r of all
    // three copies
    std::vector<std::vector<int>> copy_class(res.classes.size());
    for (int copy = 0; copy < 3; ++copy) {
        int base = copy * v3;
        std::vector<int> block_map(kts.blocks.size());
        for (std::size_t bi = 0; bi < kts.blocks.size(); ++bi) {
            Block nb;
            for (int p : kts.blocks[bi]) nb.push_back(base + rank[p]);
            std::sort(nb.begin(), nb.end());
            block_map[bi] = static_cast<int>(out.design.blocks.size());
            out.design.blocks.push_back(std::move(nb));
        }
        for (std::size_t ci = 0; ci < res.classes.size(); ++ci)
            for (int bi : res.classes[ci].block_indices)
                copy_class[ci].push_back(block_map[bi]);
    }
    for (auto& cls : copy_class) {
        ResolutionClass cl;
        cl.block_indices = std::move(cls);
        out.resolution->classes.push_back(std::move(cl));
    }

    // nine transversal designs over thirds of the copies; the schedule rows
    // keep every block bichromatic and classes align across each row
    static constexpr int kSchedule[3][3][3] = {
        {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}},
        {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}},
        {{0, 2, 2}, {1, 0, 0}, {2, 1, 1}},
    };
    auto third = [&](int copy, int i, int x) { return copy * v3 + i * v + x; };
    for (int row = 0; row < 3; ++row) {
        std::vector<std::vector<int>> classes(v);
        for (int j = 0; j < 3; ++j) {
            int a = kSchedule[row][j][0];
            int b = kSchedule[row][j][1];
            int c = kSchedule[row][j][2];
            for (int d = 0; d < v; ++d) {
                for (int i = 0; i < v; ++i) {
                    classes[d].push_back(static_cast<int>(out.design.blocks.size()));
                    out.design.blocks.push_back(sorted_block({third(0, a, i),
                                                              third(1, b, (i + d) % v),
                                                              third(2, c, (2 * i + d) % v)}));
                }
            }
        }
        for (auto& cls : classes) {
            ResolutionClass cl;
            cl.block_indices = std::move(cls);
            out.resolution->classes.push_back(std::move(cl));
        }
    }

    Colouring col;
    col.delta = 3;
    col.colours.resize(9 * v);
    for (int p = 0; p < 9 * v; ++p) col.colours[p] = p % v3 / v;
    out.colouring = std::move(col);

    canonicalize(out.design, *out.resolution);
    must(verify_kts(out.design, *out.resolution), "tripling output KTS");
    must(is_weak(out.design, *out.colouring).report, "tripling output weak");
    if (!is_equitable(*out.colouring)) broken("tripling output equitable", Report{});
    return out;
}

// ------------------------------------------------------- rainbow frame

namespace {

struct PlacedIngredient {
    std::vector<Block> blocks;                     // relabelled, sub removed unless keep_sub
    std::vector<std::vector<int>> r1_classes;      // block lists, rainbow class first
    std::vector<std::vector<int>> r2_classes;      // block lists
};

}  // namespace

Built rainbow_frame_construction(const Design& frame, const GroupPartition& groups,
                                 const Resolution& res, int w,
                                 const std::map<int, RainbowIngredient>& ingredients) {
    must(verify_frame(frame, groups, res), "rainbow frame input");
    require(w % 6 == 3, "rainbow_frame_construction: w must be 3 mod 6");
    int w3 = w / 3;
    int v = frame.v;
    int base = v + w3;  // points per level

    auto enc = [&](int x, int level) { return level * base + x; };

    // validate ingredients and compute their relabelled placements lazily
    struct Checked {
        const RainbowIngredient* ing;
        int rainbow_class;
        std::vector<char> in_sub;
        std::vector<int> r1_index;  // host class indices restricting to sub partitions
    };
    std::map<int, Checked> checked;
    for (const auto& grp : groups.groups) {
        int t = static_cast<int>(grp.size());
        if (checked.count(t)) continue;
        auto it = ingredients.find(t);
        require(it != ingredients.end(),
                "missing ingredient for group size " + std::to_string(t));
        const RainbowIngredient& ing = it->second;
        require(ing.design.v == 3 * t + w, "ingredient order must be 3t+w");
        must(verify_kts(ing.design, ing.resolution), "ingredient KTS");
        RainbowReport rb = rainbow_check(ing.design, ing.resolution, ing.colouring);
        require(rb.is_rainbow, "ingredient must be rainbow coloured");
        require(static_cast<int>(ing.sub_points.size()) == w,
                "ingredient subsystem must have w points");
        must(verify_subsystem(ing.design, ing.resolution, ing.sub_points),
             "ingredient subsystem");
        Checked c;
        c.ing = &ing;
        c.rainbow_class = rb.rainbow_class;
        c.in_sub.assign(ing.design.v, 0);
        for (int p : ing.sub_points) c.in_sub[p] = 1;
        // sub points equitably coloured: w/3 per colour
        int per[3] = {0, 0, 0};
        for (int p : ing.sub_points) ++per[ing.colouring.colours[p]];
        require(per[0] == w3 && per[1] == w3 && per[2] == w3,
                "ingredient subsystem must be equitably 3-coloured");
        // classes that restrict to partitions of the sub (the rainbow class
        // must be among them)
        for (std::size_t ci = 0; ci < ing.resolution.classes.size(); ++ci) {
            int sub_blocks = 0;
            for (int bi : ing.resolution.classes[ci].block_indices) {
                int hit = 0;
                for (int p : ing.design.blocks[bi]) hit += c.in_sub[p];
                if (hit == 3) ++sub_blocks;
            }
            if (sub_blocks == w / 3) c.r1_index.push_back(static_cast<int>(ci));
        }
        require(static_cast<int>(c.r1_index.size()) == (w - 1) / 2,
                "ingredient must have (w-1)/2 classes covering the subsystem");
        require(std::find(c.r1_index.begin(), c.r1_index.end(), c.rainbow_class) !=
                    c.r1_index.end(),
                "ingredient rainbow class must restrict to the subsystem");
        checked.emplace(t, std::move(c));
    }

    Built out;
    out.design.v = 3 * base;
    out.design.k = 3;
    out.resolution.emplace();

    // frame block expansion: three 2-coloured gadget classes per block
    static constexpr int kGadget[3][3][3] = {
        {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}},
        {{0, 2, 2}, {1, 0, 0}, {2, 1, 1}},
        {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}},
    };
    // expanded partial classes: 3 per original class, in (class, gadget) order
    std::vector<std::vector<int>> expanded_partial;
    std::vector<int> expanded_missing;
    for (std::size_t ci = 0; ci < res.classes.size(); ++ci) {
        for (int r = 0; r < 3; ++r) {
            std::vector<int> cls;
            for (int bi : res.classes[ci].block_indices) {
                const Block& b = frame.blocks[bi];
                for (int row = 0; row < 3; ++row) {
                    cls.push_back(static_cast<int>(out.design.blocks.size()));
                    out.design.blocks.push_back(
                        sorted_block({enc(b[0], kGadget[r][row][0]),
                                      enc(b[1], kGadget[r][row][1]),
                                      enc(b[2], kGadget[r][row][2])}));
                }
            }
            expanded_partial.push_back(std::move(cls));
            expanded_missing.push_back(*res.classes[ci].missing_group);
        }
    }

    // place one ingredient copy per group; group 0 keeps its subsystem
    std::size_t u = groups.groups.size();
    std::vector<PlacedIngredient> placed(u);
    for (std::size_t g = 0; g < u; ++g) {
        std::vector<int> gpts = groups.groups[g];
        std::sort(gpts.begin(), gpts.end());
        int t = static_cast<int>(gpts.size());
        const Checked& ck = checked.at(t);
        const RainbowIngredient& ing = *ck.ing;
        bool keep_sub = g == 0;

        // per colour: non-sub points -> G x {c} and sub points -> W x {c}
        std::vector<int> map(ing.design.v, -1);
        for (int c = 0; c < 3; ++c) {
            std::vector<int> non_sub, sub;
            for (int p = 0; p < ing.design.v; ++p) {
                if (ing.colouring.colours[p] != c) continue;
                (ck.in_sub[p] ? sub : non_sub).push_back(p);
            }
            require(static_cast<int>(non_sub.size()) == t,
                    "ingredient colour class does not fit the group");
            for (int i = 0; i < t; ++i) map[non_sub[i]] = enc(gpts[i], c);
            for (int j = 0; j < w3; ++j) map[sub[j]] = enc(v + j, c);
        }

        PlacedIngredient& pl = placed[g];
        std::vector<int> block_map(ing.design.blocks.size(), -1);
        for (std::size_t bi = 0; bi < ing.design.blocks.size(); ++bi) {
            const Block& b = ing.design.blocks[bi];
            int hit = ck.in_sub[b[0]] + ck.in_sub[b[1]] + ck.in_sub[b[2]];
            if (hit == 3 && !keep_sub) continue;
            Block nb{map[b[0]], map[b[1]], map[b[2]]};
            std::sort(nb.begin(), nb.end());
            block_map[bi] = static_cast<int>(out.design.blocks.size());
            pl.blocks.push_back(nb);
            out.design.blocks.push_back(std::move(nb));
        }
        auto collect = [&](int ci) {
            std::vector<int> cls;
            for (int bi : ing.resolution.classes[ci].block_indices)
                if (block_map[bi] >= 0) cls.push_back(block_map[bi]);
            return cls;
        };
        pl.r1_classes.push_back(collect(ck.rainbow_class));
        for (int ci : ck.r1_index)
            if (ci != ck.rainbow_class) pl.r1_classes.push_back(collect(ci));
        std::vector<char> is_r1(ing.resolution.classes.size(), 0);
        for (int ci : ck.r1_index) is_r1[ci] = 1;
        for (std::size_t ci = 0; ci < ing.resolution.classes.size(); ++ci)
            if (!is_r1[ci]) pl.r2_classes.push_back(collect(static_cast<int>(ci)));
    }

    // assembly (i): per group, partial classes missing it pair with that
    // ingredient's full classes
    std::vector<std::vector<int>> missing_of_group(u);
    for (std::size_t ei = 0; ei < expanded_partial.size(); ++ei)
        missing_of_group[expanded_missing[ei]].push_back(static_cast<int>(ei));
    for (std::size_t g = 0; g < u; ++g) {
        require(missing_of_group[g].size() == placed[g].r2_classes.size(),
                "class budget mismatch between frame and ingredient");
        for (std::size_t i = 0; i < missing_of_group[g].size(); ++i) {
            ResolutionClass cl;
            cl.block_indices = expanded_partial[missing_of_group[g][i]];
            const auto& full = placed[g].r2_classes[i];
            cl.block_indices.insert(cl.block_indices.end(), full.begin(), full.end());
            out.resolution->classes.push_back(std::move(cl));
        }
    }
    // assembly (ii): the global rainbow class
    {
        ResolutionClass cl;
        for (std::size_t g = 0; g < u; ++g) {
            const auto& rc = placed[g].r1_classes[0];
            cl.block_indices.insert(cl.block_indices.end(), rc.begin(), rc.end());
        }
        out.resolution->classes.push_back(std::move(cl));
    }
    // assembly (iii): remaining short classes, paired by position
    for (int i = 1; i <= (w - 3) / 2; ++i) {
        ResolutionClass cl;
        for (std::size_t g = 0; g < u; ++g) {
            const auto& rc = placed[g].r1_classes[i];
            cl.block_indices.insert(cl.block_indices.end(), rc.begin(), rc.end());
        }
        out.resolution->classes.push_back(std::move(cl));
    }

    Colouring col;
    col.delta = 3;
    col.colours.resize(out.design.v);
    for (int p = 0; p < out.design.v; ++p) col.colours[p] = p / base;
    out.colouring = std::move(col);

    canonicalize(out.design, *out.resolution);
    must(verify_kts(out.design, *out.resolution), "rainbow frame output KTS");
    RainbowReport rb = rainbow_check(out.design, *out.resolution, *out.colouring);
    if (!rb.is_rainbow) broken("rainbow frame output rainbow", rb.report);
    return out;
}

// ------------------------------------------------------- quadruple blow-ups

Built quadruple_to_4gdd(const Design& q) {
    must(verify_pairwise_balance(q).report, "quadruple system input");
    require(q.k == 4, "quadruple_to_4gdd: block size must be 4");
    int u = q.v;
    require(admissible_qs(u) && u >= 4, "quadruple_to_4gdd: order not admissible");

    const catalog::Entry& gadget = catalog::get("gdd4x4");
    Built out;
    out.design.v = 4 * u;
    out.design.k = 4;
    out.groups.emplace();
    for (int p = 0; p < u; ++p)
        out.groups->groups.push_back({4 * p, 4 * p + 1, 4 * p + 2, 4 * p + 3});
    Colouring col;
    col.delta = 4;
    col.colours.resize(4 * u);
    for (int p = 0; p < 4 * u; ++p) col.colours[p] = p % 4;
    out.colouring = std::move(col);

    if (u == 4) {
        out.design.blocks = gadget.design.blocks;
    } else {
        for (const Block& b : q.blocks) {
            for (const Block& gb : gadget.design.blocks) {
                Block nb;
                for (int gp : gb) nb.push_back(4 * b[gp / 4] + gp % 4);
                std::sort(nb.begin(), nb.end());
                out.design.blocks.push_back(std::move(nb));
            }
        }
    }
    canonicalize(out.design);
    must(verify_gdd(out.design, *out.groups), "4-GDD output");
    for (const Block& b : out.design.blocks) {
        int mult[4] = {0, 0, 0, 0};
        for (int p : b) ++mult[out.colouring->colours[p]];
        if (*std::max_element(mult, mult + 4) > 2)
            broken("4-GDD block colour multiplicity", Report{});
    }
    return out;
}

Built gdd_blowup(const Design& gdd, const GroupPartition& groups, const Colouring& colouring,
                 int g, const Design& ingredient, const GroupPartition& ingredient_groups,
                 const Resolution& ingredient_res) {
    require(g >= 1, "gdd_blowup: g must be positive");
    must(verify_gdd(gdd, groups), "blow-up master GDD");
    require(gdd.k == 4 && colouring.delta == 4, "blow-up master must be a 4-coloured 4-GDD");
    std::vector<int> owner = groups.point_to_group(gdd.v);
    // (a) at most two points of one colour per block
    for (const Block& b : gdd.blocks) {
        int mult[4] = {0, 0, 0, 0};
        for (int p : b) ++mult[colouring.colours[p]];
        require(*std::max_element(mult, mult + 4) <= 2, "blow-up master violates property (a)");
    }
    // (b) one point of each colour per group
    for (const auto& grp : groups.groups) {
        require(grp.size() == 4, "blow-up master groups must have size 4");
        std::set<int> cols;
        for (int p : grp) cols.insert(colouring.colours[p]);
        require(cols.size() == 4, "blow-up master violates property (b)");
    }
    must(verify_frame(ingredient, ingredient_groups, ingredient_res), "blow-up ingredient frame");
    require(ingredient_groups.groups.size() == 4, "ingredient frame must have 4 groups");
    for (const auto& grp : ingredient_groups.groups)
        require(static_cast<int>(grp.size()) == 2 * g, "ingredient frame type must be (2g)^4");

    int width = 2 * g;
    auto enc = [&](int p, int s) { return p * width + s; };

    // ingredient partial classes by missing group, g classes each
    std::vector<std::vector<int>> ing_classes_of_group(4);
    for (std::size_t ci = 0; ci < ingredient_res.classes.size(); ++ci)
        ing_classes_of_group[*ingredient_res.classes[ci].missing_group].push_back(
            static_cast<int>(ci));
    for (const auto& lst : ing_classes_of_group)
        require(static_cast<int>(lst.size()) == g, "ingredient classes per group must equal g");
    std::vector<std::vector<int>> ing_sorted_groups;
    for (const auto& grp : ingredient_groups.groups) {
        std::vector<int> s = grp;
        std::sort(s.begin(), s.end());
        ing_sorted_groups.push_back(std::move(s));
    }
    std::vector<int> ing_group_of = ingredient_groups.point_to_group(ingredient.v);
    std::vector<int> ing_slot(ingredient.v);
    for (int j = 0; j < 4; ++j)
        for (int s = 0; s < width; ++s) ing_slot[ing_sorted_groups[j][s]] = s;

    Built out;
    out.design.v = gdd.v * width;
    out.design.k = 3;
    out.groups.emplace();
    for (const auto& grp : groups.groups) {
        std::vector<int> ng;
        std::vector<int> sorted = grp;
        std::sort(sorted.begin(), sorted.end());
        for (int p : sorted)
            for (int s = 0; s < width; ++s) ng.push_back(enc(p, s));
        out.groups->groups.push_back(std::move(ng));
    }

    // per master block: a relabelled frame copy; frag_classes[bi][j] holds
    // the g fragment classes missing the fragment of block point j
    std::vector<std::array<std::vector<std::vector<int>>, 4>> frag_classes(gdd.blocks.size());
    for (std::size_t bi = 0; bi < gdd.blocks.size(); ++bi) {
        const Block& b = gdd.blocks[bi];
        std::vector<int> block_map(ingredient.blocks.size());
        for (std::size_t ibi = 0; ibi < ingredient.blocks.size(); ++ibi) {
            Block nb;
            for (int ip : ingredient.blocks[ibi])
                nb.push_back(enc(b[ing_group_of[ip]], ing_slot[ip]));
            std::sort(nb.begin(), nb.end());
            block_map[ibi] = static_cast<int>(out.design.blocks.size());
            out.design.blocks.push_back(std::move(nb));
        }
        for (int j = 0; j < 4; ++j) {
            for (int ci : ing_classes_of_group[j]) {
                std::vector<int> frag;
                for (int ibi : ingredient_res.classes[ci].block_indices)
                    frag.push_back(block_map[ibi]);
                frag_classes[bi][j].push_back(std::move(frag));
            }
        }
    }

    // Fundamental Frame Construction assembly: for each master point p the
    // fragments of the blocks through p combine into g partial classes
    out.resolution.emplace();
    std::vector<int> master_group_of = owner;
    for (int p = 0; p < gdd.v; ++p) {
        std::vector<std::pair<int, int>> through;  // (block, position of p)
        for (std::size_t bi = 0; bi < gdd.blocks.size(); ++bi) {
            const Block& b = gdd.blocks[bi];
            auto it = std::find(b.begin(), b.end(), p);
            if (it != b.end())
                through.emplace_back(static_cast<int>(bi),
                                     static_cast<int>(it - b.begin()));
        }
        for (int k = 0; k < g; ++k) {
            ResolutionClass cl;
            cl.missing_group = master_group_of[p];
            for (auto [bi, pos] : through) {
                const auto& frag = frag_classes[bi][pos][k];
                cl.block_indices.insert(cl.block_indices.end(), frag.begin(), frag.end());
            }
            out.resolution->classes.push_back(std::move(cl));
        }
    }

    Colouring col;
    col.delta = 4;
    col.colours.resize(out.design.v);
    for (int p = 0; p < gdd.v; ++p)
        for (int s = 0; s < width; ++s) col.colours[enc(p, s)] = colouring.colours[p];
    out.colouring = std::move(col);

    canonicalize(out.design, *out.resolution);
    must(verify_frame(out.design, *out.groups, *out.resolution), "blow-up output frame");
    must(is_weak(out.design, *out.colouring).report, "blow-up output weak");
    for (const auto& grp : out.groups->groups) {
        int per[4] = {0, 0, 0, 0};
        for (int p : grp) ++per[out.colouring->colours[p]];
        for (int c = 0; c < 4; ++c)
            if (per[c] != 2 * g) broken("blow-up group colour balance", Report{});
    }
    return out;
}

Built frame_fill_one_point(const Design& frame, const GroupPartition& groups,
                           const Resolution& res, const std::vector<Fill>& fills,
                           const Colouring* frame_colouring) {
    must(verify_frame(frame, groups, res), "fill input frame");
    require(fills.size() == groups.groups.size(), "one fill per group required");
    int inf = frame.v;

    bool coloured = frame_colouring != nullptr;
    for (const Fill& f : fills) {
        require(coloured == f.colouring.has_value(),
                "fills must all carry colourings or none");
    }

    Built out;
    out.design.v = frame.v + 1;
    out.design.k = 3;
    out.design.blocks = frame.blocks;
    out.resolution.emplace();

    std::optional<int> inf_colour;
    std::vector<std::vector<std::vector<int>>> fill_classes(groups.groups.size());
    for (std::size_t gi = 0; gi < groups.groups.size(); ++gi) {
        const Fill& f = fills[gi];
        std::vector<int> gpts = groups.groups[gi];
        std::sort(gpts.begin(), gpts.end());
        int g = static_cast<int>(gpts.size());
        require(f.design.v == g + 1, "fill order must be group size + 1");
        must(verify_kts(f.design, f.resolution), "fill KTS");
        if (coloured) {
            for (int p = 0; p < g; ++p)
                require(f.colouring->colours[p] == frame_colouring->colours[gpts[p]],
                        "fill colouring does not match the frame on group points");
            if (!inf_colour) inf_colour = f.colouring->colours[g];
            require(*inf_colour == f.colouring->colours[g],
                    "fills disagree on the infinity colour");
        }
        auto map_point = [&](int p) { return p == g ? inf : gpts[p]; };
        std::vector<int> block_map(f.design.blocks.size());
        for (std::size_t bi = 0; bi < f.design.blocks.size(); ++bi) {
            Block nb;
            for (int p : f.design.blocks[bi]) nb.push_back(map_point(p));
            std::sort(nb.begin(), nb.end());
            block_map[bi] = static_cast<int>(out.design.blocks.size());
            out.design.blocks.push_back(std::move(nb));
        }
        for (const ResolutionClass& cl : f.resolution.classes) {
            std::vector<int> cls;
            for (int bi : cl.block_indices) cls.push_back(block_map[bi]);
            fill_classes[gi].push_back(std::move(cls));
        }
    }

    // pair each group's partial classes with its fill classes
    std::vector<std::vector<int>> partial_of_group(groups.groups.size());
    for (std::size_t ci = 0; ci < res.classes.size(); ++ci)
        partial_of_group[*res.classes[ci].missing_group].push_back(static_cast<int>(ci));
    for (std::size_t gi = 0; gi < groups.groups.size(); ++gi) {
        require(partial_of_group[gi].size() == fill_classes[gi].size(),
                "partial class count does not match fill class count");
        for (std::size_t i = 0; i < partial_of_group[gi].size(); ++i) {
            ResolutionClass cl;
            cl.block_indices = res.classes[partial_of_group[gi][i]].block_indices;
            const auto& fc = fill_classes[gi][i];
            cl.block_indices.insert(cl.block_indices.end(), fc.begin(), fc.end());
            out.resolution->classes.push_back(std::move(cl));
        }
    }

    if (coloured) {
        Colouring col;
        col.delta = frame_colouring->delta;
        col.colours = frame_colouring->colours;
        col.colours.push_back(*inf_colour);
        out.colouring = std::move(col);
    }

    canonicalize(out.design, *out.resolution);
    must(verify_kts(out.design, *out.resolution), "fill output KTS");
    if (out.colouring) must(is_weak(out.design, *out.colouring).report, "fill output weak");
    return out;
}

Fill align_fill(const Design& kts, const Resolution& res, const Colouring& colouring,
                const std::vector<int>& group_points, const std::vector<int>& point_colours,
                int inf_colour) {
    int g = static_cast<int>(group_points.size());
    require(kts.v == g + 1, "align_fill: order mismatch");
    require(colouring.delta > inf_colour && inf_colour >= 0, "align_fill: bad infinity colour");

    // target colour sequence for fill points 0..g-1 (sorted group points),
    // then infinity
    std::vector<int> sorted = group_points;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> target(g + 1);
    for (int i = 0; i < g; ++i) target[i] = point_colours[i];
    target[g] = inf_colour;

    // match fill colour classes to target colour classes of the same size
    // (the identification may permute colours)
    std::vector<std::vector<int>> slots(colouring.delta), sources(colouring.delta);
    for (int i = 0; i <= g; ++i) slots[target[i]].push_back(i);
    for (int p = 0; p <= g; ++p) sources[colouring.colours[p]].push_back(p);
    auto by_size = [](const std::vector<std::vector<int>>& cls) {
        std::vector<int> order(cls.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return cls[a].size() < cls[b].size();
        });
        return order;
    };
    std::vector<int> slot_order = by_size(slots);
    std::vector<int> source_order = by_size(sources);
    Fill out;
    std::vector<int> map(g + 1, -1);
    for (int i = 0; i < colouring.delta; ++i) {
        const auto& sl = slots[slot_order[i]];
        const auto& so = sources[source_order[i]];
        require(sl.size() == so.size(),
                "align_fill: colour class sizes do not match the target");
        for (std::size_t j = 0; j < sl.size(); ++j) map[so[j]] = sl[j];
    }
    out.design.v = g + 1;
    out.design.k = 3;
    for (const Block& b : kts.blocks) {
        Block nb;
        for (int p : b) nb.push_back(map[p]);
        std::sort(nb.begin(), nb.end());
        out.design.blocks.push_back(std::move(nb));
    }
    out.resolution = res;
    canonicalize(out.design, out.resolution);
    Colouring col;
    col.delta = colouring.delta;
    col.colours = target;
    out.colouring = std::move(col);
    return out;
}

// ------------------------------------------------------- coloured gadgets

namespace {

using Tuple3 = std::array<int, 3>;
using Rgdd = std::array<std::array<Tuple3, 4>, 4>;  // 4 classes x 4 tuples

constexpr Rgdd kTableEqual = {{
    {{{0, 0, 1}, {1, 1, 2}, {2, 3, 3}, {3, 2, 0}}},
    {{{0, 1, 3}, {1, 0, 0}, {2, 2, 1}, {3, 3, 2}}},
    {{{0, 2, 2}, {1, 3, 1}, {2, 1, 0}, {3, 0, 3}}},
    {{{0, 3, 0}, {1, 2, 3}, {2, 0, 2}, {3, 1, 1}}},
}};

constexpr Rgdd kTableGeneric = {{
    {{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}}},
    {{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}, {3, 2, 1}}},
    {{{0, 2, 3}, {1, 3, 2}, {2, 0, 1}, {3, 1, 0}}},
    {{{0, 3, 1}, {1, 2, 0}, {2, 1, 3}, {3, 0, 2}}},
}};

constexpr Rgdd kTable12 = {{
    {{{0, 0, 0}, {1, 2, 1}, {2, 3, 2}, {3, 1, 3}}},
    {{{0, 1, 2}, {1, 3, 3}, {2, 2, 0}, {3, 0, 1}}},
    {{{0, 2, 3}, {1, 0, 2}, {2, 1, 1}, {3, 3, 0}}},
    {{{0, 3, 1}, {1, 1, 0}, {2, 0, 3}, {3, 2, 2}}},
}};

constexpr Rgdd kTable13 = {{
    {{{0, 0, 0}, {1, 2, 2}, {2, 3, 3}, {3, 1, 1}}},
    {{{0, 2, 1}, {1, 0, 3}, {2, 1, 2}, {3, 3, 0}}},
    {{{0, 1, 3}, {1, 3, 1}, {2, 2, 0}, {3, 0, 2}}},
    {{{0, 3, 2}, {1, 1, 0}, {2, 0, 1}, {3, 2, 3}}},
}};

Rgdd swap_last_two(const Rgdd& t) {
    Rgdd out = t;
    for (auto& cls : out)
        for (auto& tup : cls) std::swap(tup[1], tup[2]);
    return out;
}

// solution of the delta=4 case with offsets (0, a, b)
Rgdd rgdd4(int a, int b) {
    if (a == 0 && b == 0) return kTableEqual;
    if (a > b) return swap_last_two(rgdd4(b, a));
    if ((a == 0) || (a == b)) return kTableGeneric;
    if (a == 1 && b == 2) return kTable12;
    if (a == 1 && b == 3) return kTable13;
    return swap_last_two(kTable13);  // (2,3)
}

// relabelling of group j in the residual cases where the shifted colour
// window overlaps both ends of 0..3
std::array<int, 4> group_relabel(int delta, int dj) {
    std::array<int, 4> id{0, 1, 2, 3};
    if (delta == 5 && dj == 2) return {0, 1, 3, 2};
    if (delta == 5 && dj == 3) return {0, 2, 3, 1};
    if (delta == 6 && dj == 3) return {0, 3, 2, 1};
    return id;
}

}  // namespace

Built rgdd_4_3_coloured(int c0, int c1, int c2, int delta) {
    require(delta >= 4, "rgdd_4_3_coloured: delta must be at least 4");
    auto mod = [&](int x) { return ((x % delta) + delta) % delta; };
    require(c0 == mod(c0) && c1 == mod(c1) && c2 == mod(c2),
            "rgdd_4_3_coloured: colours must lie in 0..delta-1");
    int d1 = mod(c1 - c0);
    int d2 = mod(c2 - c0);

    Rgdd tuples;
    std::array<int, 4> rel1{0, 1, 2, 3}, rel2{0, 1, 2, 3};
    if (delta == 4 || (d1 == 0 && d2 == 0)) {
        tuples = rgdd4(d1, d2);
    } else {
        // colour windows of the three groups
        auto in_window = [&](int colour, int start) {
            return mod(colour - start) < 4;
        };
        bool x1_meets = in_window(0, d1) || in_window(1, d1) || in_window(2, d1) ||
                        in_window(3, d1);
        bool x2_meets = in_window(0, d2) || in_window(1, d2) || in_window(2, d2) ||
                        in_window(3, d2);
        if (!x1_meets || !x2_meets) {
            tuples = kTableGeneric;
        } else {
            auto reduce = [&](int dj) { return dj <= 3 ? dj : 4 - delta + dj; };
            int a = reduce(d1);
            int b = reduce(d2);
            require(!(a == 0 && b == 0), "rgdd reduction hit the equal-offset case");
            tuples = rgdd4(a, b);
            rel1 = group_relabel(delta, d1);
            rel2 = group_relabel(delta, d2);
        }
    }

    Built out;
    out.design.v = 12;
    out.design.k = 3;
    out.groups.emplace();
    for (int j = 0; j < 3; ++j) out.groups->groups.push_back({4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3});
    out.resolution.emplace();
    for (const auto& cls : tuples) {
        ResolutionClass cl;
        for (const Tuple3& t : cls) {
            cl.block_indices.push_back(static_cast<int>(out.design.blocks.size()));
            out.design.blocks.push_back(sorted_block({rel2[t[2]] + 8, rel1[t[1]] + 4, t[0]}));
        }
        out.resolution->classes.push_back(std::move(cl));
    }
    Colouring col;
    col.delta = delta;
    col.colours.resize(12);
    const int offs[3] = {c0, c1, c2};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 4; ++i) col.colours[4 * j + i] = mod(offs[j] + i);
    out.colouring = std::move(col);

    canonicalize(out.design, *out.resolution);
    must(verify_gdd(out.design, *out.groups), "rgdd 4^3 GDD");
    must(verify_resolution(out.design, &*out.groups, *out.resolution), "rgdd 4^3 resolution");
    must(is_weak(out.design, *out.colouring).report, "rgdd 4^3 weak");
    bool has_zero_block = std::find(out.design.blocks.begin(), out.design.blocks.end(),
                                    Block{0, 4, 8}) != out.design.blocks.end();
    if (!(c0 == c1 && c1 == c2) && !has_zero_block)
        broken("rgdd 4^3 is missing the {0_0,0_1,0_2} block", Report{});
    return out;
}

Built frame_8_4_coloured(const std::array<int, 4>& offsets, int delta, const FrameParts* base) {
    require(delta >= 4, "frame_8_4_coloured: delta must be at least 4");
    FrameParts own;
    if (!base) {
        const catalog::Entry& kts9 = catalog::get("kts9");
        own = delete_point(kts9.design, *kts9.resolution, 0);
        base = &own;
    }
    must(verify_frame(base->design, base->groups, base->resolution), "8^4 base frame");
    require(base->groups.groups.size() == 4, "8^4 base frame must have type 2^4");
    for (const auto& g : base->groups.groups)
        require(g.size() == 2, "8^4 base frame must have type 2^4");

    // relabel the base so its lexicographically least block meets groups
    // 0,1,2 at their 0-points
    std::vector<int> owner = base->groups.point_to_group(base->design.v);
    Block b0 = *std::min_element(base->design.blocks.begin(), base->design.blocks.end());
    std::vector<int> group_order;  // new group index -> old group index
    for (int p : b0) group_order.push_back(owner[p]);
    for (int gi = 0; gi < 4; ++gi)
        if (std::find(group_order.begin(), group_order.end(), gi) == group_order.end())
            group_order.push_back(gi);
    // base point -> (x, j): j new group, x in {0,1}; block points become 0_j
    std::vector<std::pair<int, int>> base_label(base->design.v);
    for (int nj = 0; nj < 4; ++nj) {
        int oj = group_order[nj];
        std::vector<int> pts = base->groups.groups[oj];
        std::sort(pts.begin(), pts.end());
        if (nj < 3) {
            int zero = b0[nj];
            base_label[zero] = {0, nj};
            base_label[pts[0] == zero ? pts[1] : pts[0]] = {1, nj};
        } else {
            base_label[pts[0]] = {0, nj};
            base_label[pts[1]] = {1, nj};
        }
    }

    auto mod = [&](int x) { return ((x % delta) + delta) % delta; };
    auto enc = [&](int x, int y, int j) { return 8 * j + 4 * x + y; };

    Built out;
    out.design.v = 32;
    out.design.k = 3;
    out.groups.emplace();
    for (int j = 0; j < 4; ++j) {
        std::vector<int> g;
        for (int i = 0; i < 8; ++i) g.push_back(8 * j + i);
        out.groups->groups.push_back(std::move(g));
    }

    // each base block carries a coloured resolvable GDD; remember the four
    // classes of each gadget in order
    std::vector<std::array<std::vector<int>, 4>> gadget_classes(base->design.blocks.size());
    for (std::size_t bi = 0; bi < base->design.blocks.size(); ++bi) {
        const Block& b = base->design.blocks[bi];
        // order the three spots by new group index
        std::array<std::pair<int, int>, 3> spots;  // (j, x)
        for (int i = 0; i < 3; ++i)
            spots[i] = {base_label[b[i]].second, base_label[b[i]].first};
        std::sort(spots.begin(), spots.end());
        Built gadget = rgdd_4_3_coloured(mod(offsets[spots[0].first] + 4 * spots[0].second),
                                         mod(offsets[spots[1].first] + 4 * spots[1].second),
                                         mod(offsets[spots[2].first] + 4 * spots[2].second),
                                         delta);
        std::vector<int> block_map(gadget.design.blocks.size());
        for (std::size_t gbi = 0; gbi < gadget.design.blocks.size(); ++gbi) {
            Block nb;
            for (int gp : gadget.design.blocks[gbi]) {
                int j = gp / 4;
                int y = gp % 4;
                nb.push_back(enc(spots[j].second, y, spots[j].first));
            }
            std::sort(nb.begin(), nb.end());
            block_map[gbi] = static_cast<int>(out.design.blocks.size());
            out.design.blocks.push_back(std::move(nb));
        }
        for (int k = 0; k < 4; ++k)
            for (int gbi : gadget.resolution->classes[k].block_indices)
                gadget_classes[bi][k].push_back(block_map[gbi]);
    }

    // base partial classes inflate into 4 classes each
    out.resolution.emplace();
    for (const ResolutionClass& cl : base->resolution.classes) {
        int old_missing = *cl.missing_group;
        int new_missing =
            static_cast<int>(std::find(group_order.begin(), group_order.end(), old_missing) -
                             group_order.begin());
        for (int k = 0; k < 4; ++k) {
            ResolutionClass nc;
            nc.missing_group = new_missing;
            for (int bi : cl.block_indices) {
                const auto& frag = gadget_classes[bi][k];
                nc.block_indices.insert(nc.block_indices.end(), frag.begin(), frag.end());
            }
            out.resolution->classes.push_back(std::move(nc));
        }
    }

    Colouring col;
    col.delta = delta;
    col.colours.resize(32);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 8; ++i) col.colours[8 * j + i] = mod(offsets[j] + i);
    out.colouring = std::move(col);

    canonicalize(out.design, *out.resolution);
    must(verify_frame(out.design, *out.groups, *out.resolution), "8^4 output frame");
    must(is_weak(out.design, *out.colouring).report, "8^4 output weak");
    bool has_zero_block = std::find(out.design.blocks.begin(), out.design.blocks.end(),
                                    Block{0, 8, 16}) != out.design.blocks.end();
    if (!(offsets[0] == offsets[1] && offsets[1] == offsets[2]) && !has_zero_block)
        broken("8^4 frame is missing the {0_0,0_1,0_2} block", Report{});
    return out;
}

// ------------------------------------------------------- STS pipeline

Built sts_to_kts_pipeline(const Design& sts, const Colouring& sts_colouring,
                          const StsEmbedding& embedding, const Design& q, int delta) {
    require(delta >= 4, "pipeline requires delta >= 4");
    must(verify_pairwise_balance(q).report, "pipeline quadruple system");
    require(q.k == 4, "pipeline needs a quadruple system");
    if (sts.v > 0) {
        must(verify_pairwise_balance(sts).report, "pipeline STS");
        require(sts.k == 3, "pipeline STS block size");
        require(sts_colouring.delta == delta &&
                    static_cast<int>(sts_colouring.colours.size()) == sts.v,
                "pipeline STS colouring mismatch");
        require(is_weak(sts, sts_colouring).report.ok, "pipeline STS colouring must be weak");
    }
    require(static_cast<int>(embedding.point_image.size()) == sts.v,
            "embedding point map size");
    require(embedding.block_extra.size() == sts.blocks.size(), "embedding block map size");

    int w = q.v;
    // colour的 of each q point: embedded points take the STS colours, the
    // rest are filled round-robin
    std::vector<int> qcol(w, -1);
    std::vector<char> taken(w, 0);
    for (int p = 0; p < sts.v; ++p) {
        int img = embedding.point_image[p];
        require(img >= 0 && img < w && !taken[img], "embedding point map must be injective");
        taken[img] = 1;
        qcol[img] = sts_colouring.colours[p];
    }
    // each extended block lands in a distinct q-block
    std::set<Block> qblocks(q.blocks.begin(), q.blocks.end());
    std::set<Block> used_blocks;
    std::vector<Block> embedded_sorted(sts.blocks.size());
    for (std::size_t bi = 0; bi < sts.blocks.size(); ++bi) {
        int extra = embedding.block_extra[bi];
        require(extra >= 0 && extra < w, "embedding extra point out of range");
        for (int p = 0; p < sts.v; ++p)
            require(embedding.point_image[p] != extra, "extra point collides with an image");
        Block ext;
        for (int p : sts.blocks[bi]) ext.push_back(embedding.point_image[p]);
        ext.push_back(extra);
        std::sort(ext.begin(), ext.end());
        require(qblocks.count(ext) > 0, "extended block is not a block of Q");
        require(used_blocks.insert(ext).second, "two STS blocks map into one q-block");
        embedded_sorted[bi] = ext;
    }
    {
        int next = 0;
        for (int p = 0; p < w; ++p)
            if (qcol[p] < 0) qcol[p] = next++ % delta;
    }

    // per q-block, group order: an embedded block keeps the STS points on
    // gadget groups 0,1,2 so the {0_x,0_y,0_z} block appears
    std::vector<std::array<int, 4>> block_groups(q.blocks.size());
    std::vector<char> is_embedded(q.blocks.size(), 0);
    {
        std::map<Block, int> sts_of_block;
        for (std::size_t bi = 0; bi < sts.blocks.size(); ++bi)
            sts_of_block[embedded_sorted[bi]] = static_cast<int>(bi);
        for (std::size_t qi = 0; qi < q.blocks.size(); ++qi) {
            const Block& qb = q.blocks[qi];
            auto it = sts_of_block.find(qb);
            if (it == sts_of_block.end()) {
                std::copy(qb.begin(), qb.end(), block_groups[qi].begin());
            } else {
                is_embedded[qi] = 1;
                const Block& sb = sts.blocks[it->second];
                std::vector<int> imgs;
                for (int p : sb) imgs.push_back(embedding.point_image[p]);
                std::sort(imgs.begin(), imgs.end());
                for (int i = 0; i < 3; ++i) block_groups[qi][i] = imgs[i];
                block_groups[qi][3] = embedding.block_extra[it->second];
            }
        }
    }

    auto enc = [&](int qp, int i) { return 8 * qp + i; };
    Design frame;
    frame.v = 8 * w;
    frame.k = 3;
    GroupPartition fgroups;
    for (int p = 0; p < w; ++p) {
        std::vector<int> g;
        for (int i = 0; i < 8; ++i) g.push_back(enc(p, i));
        fgroups.groups.push_back(std::move(g));
    }

    // gadget per q-block; fragments[qi][pos] = 4 class block-lists missing
    // the group of block point pos
    std::vector<std::array<std::array<std::vector<int>, 4>, 4>> fragments(q.blocks.size());
    for (std::size_t qi = 0; qi < q.blocks.size(); ++qi) {
        const auto& bg = block_groups[qi];
        Built gadget = frame_8_4_coloured(
            {qcol[bg[0]], qcol[bg[1]], qcol[bg[2]], qcol[bg[3]]}, delta);
        std::vector<int> block_map(gadget.design.blocks.size());
        for (std::size_t gbi = 0; gbi < gadget.design.blocks.size(); ++gbi) {
            Block nb;
            for (int gp : gadget.design.blocks[gbi]) nb.push_back(enc(bg[gp / 8], gp % 8));
            std::sort(nb.begin(), nb.end());
            block_map[gbi] = static_cast<int>(frame.blocks.size());
            frame.blocks.push_back(std::move(nb));
        }
        std::array<int, 4> next{0, 0, 0, 0};
        for (const ResolutionClass& cl : gadget.resolution->classes) {
            int j = *cl.missing_group;
            auto& slot = fragments[qi][j][next[j]++];
            for (int gbi : cl.block_indices) slot.push_back(block_map[gbi]);
        }
    }
    if (static_cast<long long>(frame.blocks.size()) !=
        static_cast<long long>(q.blocks.size()) * 128)
        broken("pipeline frame block count", Report{});

    Resolution fres;
    for (int p = 0; p < w; ++p) {
        for (int k = 0; k < 4; ++k) {
            ResolutionClass cl;
            cl.missing_group = p;
            for (std::size_t qi = 0; qi < q.blocks.size(); ++qi) {
                const auto& bg = block_groups[qi];
                for (int pos = 0; pos < 4; ++pos) {
                    if (bg[pos] != p) continue;
                    const auto& frag = fragments[qi][pos][k];
                    cl.block_indices.insert(cl.block_indices.end(), frag.begin(), frag.end());
                }
            }
            fres.classes.push_back(std::move(cl));
        }
    }
    Colouring fcol;
    fcol.delta = delta;
    fcol.colours.resize(frame.v);
    for (int p = 0; p < w; ++p)
        for (int i = 0; i < 8; ++i) fcol.colours[enc(p, i)] = (qcol[p] + i) % delta;
    must(verify_frame(frame, fgroups, fres), "pipeline 8^w frame");
    must(is_weak(frame, fcol).report, "pipeline frame weak");

    // fill every group with a relabelled KTS(9) avoiding monochromatic
    // blocks; infinity takes colour 0
    const catalog::Entry& kts9 = catalog::get("kts9");
    const int inf_colour = 0;
    std::vector<Fill> fills;
    for (int p = 0; p < w; ++p) {
        std::vector<int> target(9);
        for (int i = 0; i < 8; ++i) target[i] = (qcol[p] + i) % delta;
        target[8] = inf_colour;
        // first relabelling of the KTS(9) with no monochromatic block
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        bool found = false;
        do {
            bool ok = true;
            for (const Block& b : kts9.design.blocks) {
                int c0 = target[perm[b[0]]];
                if (c0 == target[perm[b[1]]] && c0 == target[perm[b[2]]]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        require(found, "no monochromatic-free KTS(9) placement exists");
        Fill fill;
        fill.design.v = 9;
        fill.design.k = 3;
        for (const Block& b : kts9.design.blocks) {
            Block nb{perm[b[0]], perm[b[1]], perm[b[2]]};
            std::sort(nb.begin(), nb.end());
            fill.design.blocks.push_back(std::move(nb));
        }
        fill.resolution = *kts9.resolution;
        canonicalize(fill.design, fill.resolution);
        Colouring fc;
        fc.delta = delta;
        fc.colours = target;
        fill.colouring = std::move(fc);
        fills.push_back(std::move(fill));
    }

    Built out = frame_fill_one_point(frame, fgroups, fres, fills, &fcol);

    // the embedded STS blocks appear as {0_x, 0_y, 0_z}
    for (std::size_t bi = 0; bi < sts.blocks.size(); ++bi) {
        Block want;
        for (int p : sts.blocks[bi]) want.push_back(enc(embedding.point_image[p], 0));
        std::sort(want.begin(), want.end());
        if (!std::binary_search(out.design.blocks.begin(), out.design.blocks.end(), want))
            broken("pipeline lost an embedded STS block", Report{});
    }
    return out;
}

// ------------------------------------------------------- quadruple doubling

namespace {

// triples of the order-9 gadget on {inf, w,x,y,z, w',x',y',z'} for one
// ordered block; the infinity triples {inf,q,q'} are emitted separately
std::vector<Block> kq_block_triples(int v, const std::array<int, 4>& t) {
    int w = t[0], x = t[1], y = t[2], z = t[3];
    int wp = v + w, xp = v + x, yp = v + y, zp = v + z;
    return {
        sorted_block({x, y, z}),    sorted_block({w, y, zp}),  sorted_block({xp, w, z}),
        sorted_block({x, w, yp}),   sorted_block({xp, yp, zp}), sorted_block({wp, yp, z}),
        sorted_block({x, wp, zp}),  sorted_block({xp, wp, y}),
    };
}

std::vector<std::array<int, 4>> default_order(const Design& q) {
    std::vector<std::array<int, 4>> out;
    for (const Block& b : q.blocks) out.push_back({b[0], b[1], b[2], b[3]});
    return out;
}

}  // namespace

Design kq_build(const Design& q, const std::vector<std::array<int, 4>>& order) {
    must(verify_pairwise_balance(q).report, "kq input quadruple system");
    require(q.k == 4, "kq_build needs block size 4");
    int v = q.v;
    std::vector<std::array<int, 4>> tuples = order.empty() ? default_order(q) : order;
    require(tuples.size() == q.blocks.size(), "ordering must list every block once");
    {
        std::set<Block> want(q.blocks.begin(), q.blocks.end());
        for (const auto& t : tuples) {
            Block b(t.begin(), t.end());
            std::sort(b.begin(), b.end());
            require(want.erase(b) == 1, "ordering is not a permutation of the block set");
        }
    }
    Design out;
    out.v = 2 * v + 1;
    out.k = 3;
    for (int i = 0; i < v; ++i) out.blocks.push_back(sorted_block({2 * v, i, v + i}));
    for (const auto& t : tuples) {
        auto triples = kq_block_triples(v, t);
        out.blocks.insert(out.blocks.end(), triples.begin(), triples.end());
    }
    canonicalize(out);
    must(verify_pairwise_balance(out).report, "kq output pair balance");
    return out;
}

Built kq_colour_2delta(const Design& q, const Colouring& colouring) {
    must(verify_pairwise_balance(q).report, "kq input quadruple system");
    int delta = colouring.delta;
    require(is_weak(q, colouring).report.ok, "kq_colour_2delta needs a weak colouring");
    int v = q.v;

    std::vector<std::array<int, 4>> tuples;
    for (const Block& b : q.blocks) {
        // w = lowest point whose colour is most frequent in the block
        int best = -1, best_mult = -1;
        for (int p : b) {
            int mult = 0;
            for (int p2 : b) mult += colouring.colours[p2] == colouring.colours[p];
            if (mult > best_mult) {
                best_mult = mult;
                best = p;
            }
        }
        std::array<int, 4> t;
        t[0] = best;
        int pos = 1;
        for (int p : b)
            if (p != best) t[pos++] = p;
        // the remaining three are never monochromatic
        require(!(colouring.colours[t[1]] == colouring.colours[t[2]] &&
                  colouring.colours[t[2]] == colouring.colours[t[3]]),
                "designated-w rule failed to split a block");
        tuples.push_back(t);
    }
    Built out;
    out.design = kq_build(q, tuples);
    Colouring col;
    col.delta = 2 * delta;
    col.colours.resize(2 * v + 1);
    for (int i = 0; i < v; ++i) {
        col.colours[i] = colouring.colours[i];
        col.colours[v + i] = colouring.colours[i] + delta;
    }
    col.colours[2 * v] = 0;
    out.colouring = std::move(col);
    must(is_weak(out.design, *out.colouring).report, "kq 2delta output weak");
    return out;
}

Built kq_colour_delta_plus_one(const Design& q, const Colouring& colouring) {
    must(verify_pairwise_balance(q).report, "kq input quadruple system");
    int delta = colouring.delta;
    int v = q.v;
    std::vector<std::array<int, 4>> tuples;
    for (const Block& b : q.blocks) {
        // least triple with pairwise distinct colours, in lexicographic order
        static constexpr int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        int chosen = -1;
        for (int t = 0; t < 4 && chosen < 0; ++t) {
            int a = colouring.colours[b[kTriples[t][0]]];
            int bb = colouring.colours[b[kTriples[t][1]]];
            int c = colouring.colours[b[kTriples[t][2]]];
            if (a != bb && a != c && bb != c) chosen = t;
        }
        require(chosen >= 0, "a block has fewer than 3 distinct colours");
        std::array<int, 4> t;
        t[1] = b[kTriples[chosen][0]];
        t[2] = b[kTriples[chosen][1]];
        t[3] = b[kTriples[chosen][2]];
        t[0] = b[0] + b[1] + b[2] + b[3] - t[1] - t[2] - t[3];
        tuples.push_back(t);
    }
    Built out;
    out.design = kq_build(q, tuples);
    Colouring col;
    col.delta = delta + 1;
    col.colours.resize(2 * v + 1);
    for (int i = 0; i < v; ++i) {
        col.colours[i] = colouring.colours[i];
        col.colours[v + i] = colouring.colours[i];
    }
    col.colours[2 * v] = delta;
    out.colouring = std::move(col);
    must(is_weak(out.design, *out.colouring).report, "kq delta+1 output weak");
    return out;
}

}  // namespace kirkman::constructions
