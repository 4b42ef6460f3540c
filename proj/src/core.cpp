#include "kirkman/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace kirkman {

void Report::fail(std::string msg) {
    ok = false;
    if (problems.size() < kMaxProblems) {
        problems.push_back(std::move(msg));
    } else if (problems.size() == kMaxProblems) {
        problems.push_back("...");
    }
}

std::vector<int> GroupPartition::point_to_group(int v) const {
    std::vector<int> owner(v, -1);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        for (int p : groups[gi]) {
            if (p < 0 || p >= v) throw contract_error("group point out of range");
            if (owner[p] != -1) throw contract_error("groups overlap");
            owner[p] = static_cast<int>(gi);
        }
    }
    for (int p = 0; p < v; ++p) {
        if (owner[p] == -1) throw contract_error("groups do not cover all points");
    }
    return owner;
}

bool Permutation::is_bijection() const {
    std::vector<char> seen(images.size(), 0);
    for (int x : images) {
        if (x < 0 || x >= static_cast<int>(images.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) inv.images[images[i]] = static_cast<int>(i);
    return inv;
}

static std::string block_str(const Block& b) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << "}";
    return os.str();
}

Report validate_structure(const Design& d) {
    Report r;
    if (d.v < 0) r.fail("negative point count");
    if (d.k < 2) r.fail("block size below 2");
    std::set<Block> seen;
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const Block& b = d.blocks[bi];
        if (static_cast<int>(b.size()) != d.k) {
            r.fail("block " + std::to_string(bi) + " has size " + std::to_string(b.size()));
            continue;
        }
        bool asc = true;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) asc = asc && b[i] < b[i + 1];
        if (!asc) r.fail("block " + std::to_string(bi) + " not strictly increasing");
        for (int p : b) {
            if (p < 0 || p >= d.v) {
                r.fail("block " + std::to_string(bi) + " point " + std::to_string(p) +
                       " out of range");
                break;
            }
        }
        if (!seen.insert(b).second) r.fail("duplicate block " + block_str(b));
    }
    return r;
}

PairBalanceReport verify_pairwise_balance(const Design& d) {
    PairBalanceReport out;
    out.report = validate_structure(d);
    if (!out.report.ok) return out;
    std::vector<int> count(static_cast<std::size_t>(d.v) * d.v, 0);
    for (const Block& b : d.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                ++count[static_cast<std::size_t>(b[i]) * d.v + b[j]];
    }
    for (int x = 0; x < d.v; ++x) {
        for (int y = x + 1; y < d.v; ++y) {
            int c = count[static_cast<std::size_t>(x) * d.v + y];
            if (c != 1) {
                if (out.offending_pairs.size() < Report::kMaxProblems)
                    out.offending_pairs.emplace_back(x, y);
                out.report.fail("pair {" + std::to_string(x) + "," + std::to_string(y) +
                                "} covered " + std::to_string(c) + " times");
            }
        }
    }
    return out;
}

static Report verify_resolution_impl(const Design& d, const GroupPartition* groups,
                                     const Resolution& res) {
    Report r;
    std::vector<char> used(d.blocks.size(), 0);
    for (std::size_t ci = 0; ci < res.classes.size(); ++ci) {
        const ResolutionClass& cl = res.classes[ci];
        std::vector<char> covered(d.v, 0);
        bool structural = true;
        for (int bi : cl.block_indices) {
            if (bi < 0 || bi >= static_cast<int>(d.blocks.size())) {
                r.fail("class " + std::to_string(ci) + ": block index " + std::to_string(bi) +
                       " out of range");
                structural = false;
                continue;
            }
            if (used[bi]) {
                r.fail("block " + std::to_string(bi) + " appears in more than one class");
            }
            used[bi] = 1;
            for (int p : d.blocks[bi]) {
                if (covered[p]) r.fail("class " + std::to_string(ci) + ": point " +
                                       std::to_string(p) + " covered twice");
                covered[p] = 1;
            }
        }
        if (!structural) continue;
        std::vector<char> expect(d.v, 1);
        if (cl.missing_group) {
            if (!groups) {
                r.fail("class " + std::to_string(ci) + " labelled but no groups given");
                continue;
            }
            int gi = *cl.missing_group;
            if (gi < 0 || gi >= static_cast<int>(groups->groups.size())) {
                r.fail("class " + std::to_string(ci) + ": missing-group index out of range");
                continue;
            }
            for (int p : groups->groups[gi]) expect[p] = 0;
        }
        for (int p = 0; p < d.v; ++p) {
            if (covered[p] && !expect[p])
                r.fail("class " + std::to_string(ci) + " covers excluded point " +
                       std::to_string(p));
            if (!covered[p] && expect[p])
                r.fail("class " + std::to_string(ci) + " misses point " + std::to_string(p));
        }
    }
    for (std::size_t bi = 0; bi < used.size(); ++bi) {
        if (!used[bi]) r.fail("block " + std::to_string(bi) + " in no class");
    }
    return r;
}

Report verify_resolution(const Design& d, const GroupPartition* groups, const Resolution& res) {
    return verify_resolution_impl(d, groups, res);
}

Report verify_resolution(const Design& d, const Resolution& res) {
    return verify_resolution_impl(d, nullptr, res);
}

Report verify_gdd(const Design& d, const GroupPartition& groups) {
    Report r = validate_structure(d);
    if (!r.ok) return r;
    std::vector<int> owner;
    try {
        owner = groups.point_to_group(d.v);
    } catch (const contract_error& e) {
        r.fail(e.what());
        return r;
    }
    std::vector<int> count(static_cast<std::size_t>(d.v) * d.v, 0);
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const Block& b = d.blocks[bi];
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                if (owner[b[i]] == owner[b[j]]) {
                    r.fail("block " + std::to_string(bi) + " meets group " +
                           std::to_string(owner[b[i]]) + " twice");
                }
                ++count[static_cast<std::size_t>(b[i]) * d.v + b[j]];
            }
        }
    }
    for (int x = 0; x < d.v; ++x) {
        for (int y = x + 1; y < d.v; ++y) {
            int c = count[static_cast<std::size_t>(x) * d.v + y];
            int want = owner[x] == owner[y] ? 0 : 1;
            if (c != want) {
                r.fail("pair {" + std::to_string(x) + "," + std::to_string(y) + "} covered " +
                       std::to_string(c) + " times, expected " + std::to_string(want));
            }
        }
    }
    return r;
}

Report verify_frame(const Design& d, const GroupPartition& groups, const Resolution& res) {
    Report r = verify_gdd(d, groups);
    if (!r.ok) return r;
    for (std::size_t ci = 0; ci < res.classes.size(); ++ci) {
        if (!res.classes[ci].missing_group)
            r.fail("class " + std::to_string(ci) + " is not labelled with a missing group");
    }
    if (!r.ok) return r;
    Report rr = verify_resolution(d, &groups, res);
    if (!rr.ok) return rr;
    std::vector<int> missed(groups.groups.size(), 0);
    for (const ResolutionClass& cl : res.classes) ++missed[*cl.missing_group];
    for (std::size_t gi = 0; gi < groups.groups.size(); ++gi) {
        int g = static_cast<int>(groups.groups[gi].size());
        if (g % 2 != 0) r.fail("group " + std::to_string(gi) + " has odd size");
        if (missed[gi] != g / 2)
            r.fail("group " + std::to_string(gi) + " missed by " + std::to_string(missed[gi]) +
                   " classes, expected " + std::to_string(g / 2));
    }
    return r;
}

Report verify_kts(const Design& d, const Resolution& res) {
    Report r;
    if (d.k != 3) {
        r.fail("block size is not 3");
        return r;
    }
    PairBalanceReport pb = verify_pairwise_balance(d);
    if (!pb.report.ok) return pb.report;
    Report rr = verify_resolution(d, res);
    if (!rr.ok) return rr;
    long long want_b = static_cast<long long>(d.v) * (d.v - 1) / 6;
    if (static_cast<long long>(d.blocks.size()) != want_b)
        r.fail("block count " + std::to_string(d.blocks.size()) + " != v(v-1)/6 = " +
               std::to_string(want_b));
    if (static_cast<int>(res.classes.size()) != (d.v - 1) / 2)
        r.fail("class count " + std::to_string(res.classes.size()) + " != (v-1)/2 = " +
               std::to_string((d.v - 1) / 2));
    for (const ResolutionClass& cl : res.classes) {
        if (cl.missing_group) r.fail("KTS resolution has a labelled class");
    }
    return r;
}

WeakReport is_weak(const Design& d, const Colouring& c) {
    WeakReport out;
    if (static_cast<int>(c.colours.size()) != d.v) {
        out.report.fail("colouring length != v");
        return out;
    }
    for (int x : c.colours) {
        if (x < 0 || x >= c.delta) {
            out.report.fail("colour index out of range");
            return out;
        }
    }
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const Block& b = d.blocks[bi];
        bool mono = true;
        for (std::size_t i = 1; i < b.size(); ++i)
            mono = mono && c.colours[b[i]] == c.colours[b[0]];
        if (mono) {
            if (out.monochromatic_blocks.size() < Report::kMaxProblems)
                out.monochromatic_blocks.push_back(static_cast<int>(bi));
            out.report.fail("block " + std::to_string(bi) + " " + block_str(b) +
                            " is monochromatic");
        }
    }
    return out;
}

std::vector<int> colour_type(const Colouring& c) {
    std::vector<int> sizes(c.delta, 0);
    for (int x : c.colours) {
        if (x < 0 || x >= c.delta) throw contract_error("colour index out of range");
        ++sizes[x];
    }
    std::vector<int> type;
    for (int s : sizes)
        if (s > 0) type.push_back(s);
    std::sort(type.begin(), type.end());
    return type;
}

bool is_equitable(const Colouring& c) {
    if (c.delta <= 0) return false;
    std::vector<int> sizes(c.delta, 0);
    for (int x : c.colours) ++sizes[x];
    auto [mn, mx] = std::minmax_element(sizes.begin(), sizes.end());
    return *mx - *mn <= 1;
}

std::string type_to_string(const std::vector<int>& type) {
    std::map<int, int> mult;
    for (int s : type) ++mult[s];
    std::ostringstream os;
    bool first = true;
    for (auto [size, m] : mult) {
        if (!first) os << " ";
        first = false;
        os << size << "^" << m;
    }
    return os.str();
}

RainbowReport rainbow_check(const Design& d, const Resolution& res, const Colouring& c) {
    if (c.delta != 3) throw contract_error("rainbow_check requires delta = 3");
    RainbowReport out;
    if (d.v % 3 != 0) {
        out.report.fail("v not divisible by 3");
        return out;
    }
    WeakReport weak = is_weak(d, c);
    if (!weak.report.ok) {
        out.report = weak.report;
        return out;
    }
    std::vector<int> sizes(3, 0);
    for (int x : c.colours) ++sizes[x];
    for (int i = 0; i < 3; ++i) {
        if (sizes[i] != d.v / 3) {
            out.report.fail("colour class " + std::to_string(i) + " has size " +
                            std::to_string(sizes[i]) + ", expected v/3");
        }
    }
    if (!out.report.ok) return out;
    std::vector<int> hits;
    for (std::size_t ci = 0; ci < res.classes.size(); ++ci) {
        bool all_tri = true;
        for (int bi : res.classes[ci].block_indices) {
            const Block& b = d.blocks[bi];
            bool tri = c.colours[b[0]] != c.colours[b[1]] &&
                       c.colours[b[0]] != c.colours[b[2]] &&
                       c.colours[b[1]] != c.colours[b[2]];
            if (!tri) {
                all_tri = false;
                break;
            }
        }
        if (all_tri && !res.classes[ci].block_indices.empty())
            hits.push_back(static_cast<int>(ci));
    }
    if (hits.empty()) {
        out.report.fail("no parallel class is fully tricoloured");
        return out;
    }
    if (hits.size() > 1) {
        out.report.fail("more than one rainbow class (input is not a weak-coloured KTS)");
        return out;
    }
    out.is_rainbow = true;
    out.rainbow_class = hits[0];
    return out;
}

Report verify_subsystem(const Design& d, const Resolution& res,
                        const std::vector<int>& sub_points) {
    Report r;
    std::vector<char> in_sub(d.v, 0);
    for (int p : sub_points) {
        if (p < 0 || p >= d.v) {
            r.fail("sub point out of range");
            return r;
        }
        in_sub[p] = 1;
    }
    int w = static_cast<int>(sub_points.size());
    // relabelling sub point -> 0..w-1 in ascending order
    std::vector<int> sorted_sub = sub_points;
    std::sort(sorted_sub.begin(), sorted_sub.end());
    std::vector<int> relabel(d.v, -1);
    for (int i = 0; i < w; ++i) relabel[sorted_sub[i]] = i;

    Design sub;
    sub.v = w;
    sub.k = 3;
    std::vector<int> sub_index_of(d.blocks.size(), -1);
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        int hit = 0;
        for (int p : d.blocks[bi]) hit += in_sub[p];
        if (hit != 0 && hit != 1 && hit != 3) {
            r.fail("block " + std::to_string(bi) + " meets subset in " + std::to_string(hit) +
                   " points");
        }
        if (hit == 3) {
            Block nb;
            for (int p : d.blocks[bi]) nb.push_back(relabel[p]);
            std::sort(nb.begin(), nb.end());
            sub_index_of[bi] = static_cast<int>(sub.blocks.size());
            sub.blocks.push_back(nb);
        }
    }
    if (!r.ok) return r;
    PairBalanceReport pb = verify_pairwise_balance(sub);
    if (!pb.report.ok) {
        r.fail("induced blocks are not an STS on the subset");
        for (const std::string& s : pb.report.problems) r.fail("  " + s);
        return r;
    }
    // induced classes: restriction of each host class is empty or partitions
    // the subset
    Resolution sub_res;
    for (std::size_t ci = 0; ci < res.classes.size(); ++ci) {
        ResolutionClass cl;
        for (int bi : res.classes[ci].block_indices) {
            if (sub_index_of[bi] >= 0) cl.block_indices.push_back(sub_index_of[bi]);
        }
        if (cl.block_indices.empty()) continue;
        if (static_cast<int>(cl.block_indices.size()) * 3 != w) {
            r.fail("host class " + std::to_string(ci) +
                   " restricts to a partial cover of the subset");
            continue;
        }
        sub_res.classes.push_back(cl);
    }
    if (!r.ok) return r;
    Report rr = verify_kts(sub, sub_res);
    if (!rr.ok) {
        r.fail("induced design is not a KTS on the subset");
        for (const std::string& s : rr.problems) r.fail("  " + s);
    }
    return r;
}

FrameParts delete_point(const Design& d, const Resolution& res, int p) {
    if (p < 0 || p >= d.v) throw contract_error("delete_point: point out of range");
    if (d.v < 9) throw contract_error("delete_point: need v >= 9 for a frame with u >= 4");
    Report kts = verify_kts(d, res);
    if (!kts.ok) throw contract_error("delete_point: input is not a verified KTS");

    std::vector<int> relabel(d.v, -1);
    for (int x = 0; x < d.v; ++x) {
        if (x < p) relabel[x] = x;
        else if (x > p) relabel[x] = x - 1;
    }

    FrameParts out;
    out.design.v = d.v - 1;
    out.design.k = 3;
    std::vector<int> new_index(d.blocks.size(), -1);
    std::vector<std::vector<int>> pair_groups;
    std::vector<int> group_of_block(d.blocks.size(), -1);
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const Block& b = d.blocks[bi];
        bool through = std::find(b.begin(), b.end(), p) != b.end();
        if (through) {
            std::vector<int> g;
            for (int x : b)
                if (x != p) g.push_back(relabel[x]);
            std::sort(g.begin(), g.end());
            group_of_block[bi] = static_cast<int>(pair_groups.size());
            pair_groups.push_back(g);
        } else {
            Block nb;
            for (int x : b) nb.push_back(relabel[x]);
            std::sort(nb.begin(), nb.end());
            new_index[bi] = static_cast<int>(out.design.blocks.size());
            out.design.blocks.push_back(nb);
        }
    }
    out.groups.groups = pair_groups;
    for (const ResolutionClass& cl : res.classes) {
        ResolutionClass nc;
        int missing = -1;
        for (int bi : cl.block_indices) {
            if (group_of_block[bi] >= 0) {
                missing = group_of_block[bi];
            } else {
                nc.block_indices.push_back(new_index[bi]);
            }
        }
        if (missing < 0) throw contract_error("delete_point: class without a block through p");
        nc.missing_group = missing;
        out.resolution.classes.push_back(nc);
    }
    return out;
}

bool admissible_sts(long long v) { return v >= 1 && (v % 6 == 1 || v % 6 == 3); }
bool admissible_kts(long long v) { return v >= 3 && v % 6 == 3; }
bool admissible_qs(long long v) { return v >= 1 && (v % 12 == 1 || v % 12 == 4); }

bool admissible_frame(long long g, long long u) {
    return u >= 4 && g > 0 && g % 2 == 0 && (g * (u - 1)) % 3 == 0;
}

bool admissible_frame_gum(long long g, long long u, long long m) {
    if (g <= 0 || u <= 0 || m <= 0) return false;
    if (g % 2 != 0) return false;              // (a)
    if ((g * u) % 3 != 0) return false;        // (b)
    if ((m - g) % 6 != 0) return false;        // (c)
    if (u < 3) return false;                   // (d)
    if (u == 3) return m == g;                 // (e)
    return m <= g * (u - 1) / 2;               // (e)
}

void canonicalize(Design& d) {
    for (Block& b : d.blocks) std::sort(b.begin(), b.end());
    std::sort(d.blocks.begin(), d.blocks.end());
}

void canonicalize(Design& d, Resolution& res) {
    for (Block& b : d.blocks) std::sort(b.begin(), b.end());
    std::vector<int> order(d.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return d.blocks[a] < d.blocks[b]; });
    std::vector<int> pos(d.blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<Block> sorted_blocks(d.blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) sorted_blocks[i] = d.blocks[order[i]];
    d.blocks = std::move(sorted_blocks);
    for (ResolutionClass& cl : res.classes) {
        for (int& bi : cl.block_indices) bi = pos[bi];
        std::sort(cl.block_indices.begin(), cl.block_indices.end());
    }
}

bool same_canonical_blocks(const Design& a, const Design& b) {
    if (a.v != b.v || a.k != b.k) return false;
    Design ca = a, cb = b;
    canonicalize(ca);
    canonicalize(cb);
    return ca.blocks == cb.blocks;
}

std::vector<int> group_sizes(const GroupPartition& g) {
    std::vector<int> sizes;
    for (const auto& grp : g.groups) sizes.push_back(static_cast<int>(grp.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::string group_type(const GroupPartition& g) { return type_to_string(group_sizes(g)); }

}  // namespace kirkman
