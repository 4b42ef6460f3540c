#include "kirkman/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "kirkman/catalog_data.hpp"
#include "kirkman/io.hpp"

namespace kirkman::catalog {

namespace {

std::vector<std::vector<std::string>> token_lines(const char* text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

Block parse_braced_triple(const std::string& tok) {
    // "{1,2,3}" with 1-based points
    Block b;
    std::string inner = tok.substr(1, tok.size() - 2);
    std::istringstream is(inner);
    std::string part;
    while (std::getline(is, part, ',')) b.push_back(std::stoi(part) - 1);
    std::sort(b.begin(), b.end());
    return b;
}

// tables printed as rows; column j is parallel class j
void load_table(const char* text, int v, Entry& e) {
    auto rows = token_lines(text);
    std::size_t ncols = rows[0].size();
    e.design.v = v;
    e.design.k = 3;
    e.resolution.emplace();
    for (std::size_t c = 0; c < ncols; ++c) {
        ResolutionClass cl;
        for (const auto& row : rows) {
            cl.block_indices.push_back(static_cast<int>(e.design.blocks.size()));
            e.design.blocks.push_back(parse_braced_triple(row[c]));
        }
        e.resolution->classes.push_back(std::move(cl));
    }
}

Colouring colouring_from_classes(const char* text, int v) {
    auto rows = token_lines(text);
    Colouring c;
    c.delta = static_cast<int>(rows.size());
    c.colours.assign(v, -1);
    for (std::size_t ci = 0; ci < rows.size(); ++ci) {
        for (const std::string& tok : rows[ci]) c.colours[std::stoi(tok) - 1] = static_cast<int>(ci);
    }
    for (int x : c.colours)
        if (x < 0) throw contract_error("colour classes do not cover all points");
    return c;
}

Colouring colouring_from_digits(const std::string& digits, int delta) {
    Colouring c;
    c.delta = delta;
    for (char ch : digits) c.colours.push_back(ch - '1');
    return c;
}

// ------------------------------------------------------------- sigma systems

struct SymPoint {
    bool inf;
    int i;
    int j;
};

SymPoint parse_sym(const std::string& tok) {
    if (tok[0] == 'I') return {true, 0, std::stoi(tok.substr(1))};
    auto us = tok.find('_');
    return {false, std::stoi(tok.substr(0, us)), std::stoi(tok.substr(us + 1))};
}

int sigma_encode(const SymPoint& p, int m) { return p.inf ? 3 * m + p.j : p.j * m + p.i; }

int sigma_shift(int point, int m, int times) {
    if (point >= 3 * m) return point;
    int j = point / m;
    int i = point % m;
    return j * m + (i + times) % m;
}

Entry load_sigma(const std::string& id, const char* text) {
    Entry e;
    e.id = id;
    auto lines = token_lines(text);
    int m = -1;
    Block fixed_starter;
    std::vector<Block> short_base, long_base;
    for (const auto& line : lines) {
        if (line[0] == "m") {
            m = std::stoi(line[1]);
        } else if (line[0] == "fixed") {
            for (std::size_t i = 1; i < line.size(); ++i)
                fixed_starter.push_back(sigma_encode(parse_sym(line[i]), m));
        } else if (line[0] == "short" || line[0] == "long") {
            int shift = std::stoi(line[1]);
            Block b;
            for (std::size_t i = 2; i < line.size(); ++i)
                b.push_back(sigma_shift(sigma_encode(parse_sym(line[i]), m), m, shift));
            (line[0] == "short" ? short_base : long_base).push_back(b);
        }
    }
    int v = 3 * m + 3;
    e.design.v = v;
    e.design.k = 3;
    e.resolution.emplace();
    auto add_class = [&](const std::vector<Block>& blocks) {
        ResolutionClass cl;
        for (const Block& b : blocks) {
            Block sb = b;
            std::sort(sb.begin(), sb.end());
            cl.block_indices.push_back(static_cast<int>(e.design.blocks.size()));
            e.design.blocks.push_back(sb);
        }
        e.resolution->classes.push_back(std::move(cl));
    };
    std::vector<Block> fixed{{3 * m, 3 * m + 1, 3 * m + 2}};
    for (int t = 0; t < m; ++t) {
        Block b;
        for (int p : fixed_starter) b.push_back(sigma_shift(p, m, t));
        fixed.push_back(b);
    }
    add_class(fixed);
    for (int j = 0; j < m / 2; ++j) {
        std::vector<Block> cls;
        for (const Block& b : short_base) {
            Block nb;
            for (int p : b) nb.push_back(sigma_shift(p, m, j));
            cls.push_back(nb);
        }
        add_class(cls);
    }
    for (int j = 0; j < m; ++j) {
        std::vector<Block> cls;
        for (const Block& b : long_base) {
            Block nb;
            for (int p : b) nb.push_back(sigma_shift(p, m, j));
            cls.push_back(nb);
        }
        add_class(cls);
    }
    Colouring col;
    col.delta = 3;
    for (int p = 0; p < v; ++p) col.colours.push_back(p >= 3 * m ? p - 3 * m : p / m);
    e.colourings.emplace_back("rainbow", std::move(col));
    canonicalize(e.design, *e.resolution);
    return e;
}

// ------------------------------------------------------------- TV systems

struct TvSource {
    std::vector<Block> starter_class;   // 11 triples
    std::vector<Block> starter_blocks;  // 5 triples (systems 1..29)
    bool perm_development = false;      // system 30
    std::string colour_string;
};

std::map<int, TvSource> parse_tv_sources() {
    std::map<int, TvSource> out;
    auto lines = token_lines(catalog_data::kTv33);
    int current = -1;
    for (const auto& line : lines) {
        if (line[0] == "system") {
            current = std::stoi(line[1]);
        } else if (line[0] == "P") {
            Block b{std::stoi(line[1]), std::stoi(line[2]), std::stoi(line[3])};
            out[current].starter_class.push_back(b);
        } else if (line[0] == "S") {
            Block b{std::stoi(line[1]), std::stoi(line[2]), std::stoi(line[3])};
            out[current].starter_blocks.push_back(b);
        } else if (line[0] == "PERM") {
            out[current].perm_development = true;
        } else if (line[0] == "colour") {
            out[current].colour_string = line[1];
        }
    }
    return out;
}

Entry load_tv(int index) {
    static const std::map<int, TvSource> sources = parse_tv_sources();
    const TvSource& src = sources.at(index);
    Entry e;
    e.id = "tv33-" + std::to_string(index);
    e.design.v = 33;
    e.design.k = 3;
    e.resolution.emplace();
    auto add_class = [&](const std::vector<Block>& blocks) {
        ResolutionClass cl;
        for (const Block& b : blocks) {
            Block sb = b;
            std::sort(sb.begin(), sb.end());
            cl.block_indices.push_back(static_cast<int>(e.design.blocks.size()));
            e.design.blocks.push_back(sb);
        }
        e.resolution->classes.push_back(std::move(cl));
    };
    if (!src.perm_development) {
        for (int t = 0; t < 33; t += 3) {
            std::vector<Block> cls;
            for (const Block& b : src.starter_class) {
                Block nb;
                for (int p : b) nb.push_back((p + t) % 33);
                cls.push_back(nb);
            }
            add_class(cls);
        }
        for (const Block& sb : src.starter_blocks) {
            std::vector<Block> cls;
            for (int t = 0; t < 33; t += 3) {
                Block nb;
                for (int p : sb) nb.push_back((p + t) % 33);
                cls.push_back(nb);
            }
            add_class(cls);
        }
    } else {
        // development by the permutation (0 1 ... 31)(32)
        for (int j = 0; j < 16; ++j) {
            std::vector<Block> cls;
            for (const Block& b : src.starter_class) {
                Block nb;
                for (int p : b) nb.push_back(p == 32 ? 32 : (p + j) % 32);
                cls.push_back(nb);
            }
            add_class(cls);
        }
    }
    e.colourings.emplace_back("paper", colouring_from_digits(src.colour_string, 4));
    canonicalize(e.design, *e.resolution);
    return e;
}

// ------------------------------------------------------------- rotational 59a

Entry load_rot33() {
    Entry e;
    e.id = "rot33-59a";
    e.design.v = 33;
    e.design.k = 3;
    auto lines = token_lines(catalog_data::kRot33);
    std::vector<Block> base;
    std::string colour;
    std::vector<std::vector<int>> classes;
    bool in_res = false;
    for (const auto& line : lines) {
        if (line[0] == "base") {
            Block b;
            for (std::size_t i = 1; i < line.size(); ++i)
                b.push_back(line[i] == "inf" ? 32 : std::stoi(line[i]));
            base.push_back(b);
        } else if (line[0] == "colour") {
            colour = line[1];
        } else if (line[0] == "resolution") {
            in_res = true;
        } else if (line[0] == "class" && in_res) {
            std::vector<int> cl;
            for (std::size_t i = 1; i < line.size(); ++i) cl.push_back(std::stoi(line[i]));
            classes.push_back(std::move(cl));
        }
    }
    // develop mod 32, infinity (encoded 32) fixed; duplicates collapse
    std::set<Block> blocks;
    for (const Block& b : base) {
        for (int t = 0; t < 32; ++t) {
            Block nb;
            for (int p : b) nb.push_back(p == 32 ? 32 : (p + t) % 32);
            std::sort(nb.begin(), nb.end());
            blocks.insert(nb);
        }
    }
    e.design.blocks.assign(blocks.begin(), blocks.end());
    if (e.design.blocks.size() != 176)
        throw contract_error("rot33 development did not yield 176 distinct blocks");
    e.colourings.emplace_back("paper", colouring_from_digits(colour, 3));
    // cached resolution certificate, revalidated by self_test
    if (!classes.empty()) {
        e.resolution.emplace();
        for (auto& cl : classes) {
            ResolutionClass rc;
            rc.block_indices = cl;
            e.resolution->classes.push_back(std::move(rc));
        }
    }
    return e;
}

// ------------------------------------------------------------- q13, gdd4x4

Entry load_q13() {
    Entry e;
    e.id = "q13";
    e.design.v = 13;
    e.design.k = 4;
    auto lines = token_lines(catalog_data::kQ13);
    Colouring col;
    col.delta = 2;
    col.colours.assign(13, 1);
    for (const auto& line : lines) {
        if (line[0] == "colourclass") {
            for (std::size_t i = 1; i < line.size(); ++i) col.colours[std::stoi(line[i])] = 0;
        } else {
            std::array<int, 4> t{std::stoi(line[0]), std::stoi(line[1]), std::stoi(line[2]),
                                 std::stoi(line[3])};
            e.ordered_tuples.push_back(t);
            Block b(t.begin(), t.end());
            std::sort(b.begin(), b.end());
            e.design.blocks.push_back(b);
        }
    }
    e.colourings.emplace_back("2col", std::move(col));
    canonicalize(e.design);
    return e;
}

Entry load_gdd44() {
    Entry e;
    e.id = "gdd4x4";
    e.design.v = 16;
    e.design.k = 4;
    e.groups.emplace();
    for (int j = 0; j < 4; ++j) e.groups->groups.push_back({4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3});
    for (const auto& line : token_lines(catalog_data::kGdd44)) {
        Block b;
        for (int j = 0; j < 4; ++j) b.push_back(4 * j + std::stoi(line[j]));
        std::sort(b.begin(), b.end());
        e.design.blocks.push_back(b);
    }
    Colouring col;
    col.delta = 4;
    for (int p = 0; p < 16; ++p) col.colours.push_back(p % 4);
    e.colourings.emplace_back("cols", std::move(col));
    canonicalize(e.design);
    return e;
}

Entry load_entry(const std::string& id) {
    Entry e;
    e.id = id;
    if (id == "kts9") {
        load_table(catalog_data::kKts9, 9, e);
        e.colourings.emplace_back("3x3", colouring_from_classes(catalog_data::kKts9Colour3x3, 9));
        e.colourings.emplace_back("2-3-4",
                                  colouring_from_classes(catalog_data::kKts9Colour234, 9));
        e.colourings.emplace_back("1-4-4",
                                  colouring_from_classes(catalog_data::kKts9Colour144, 9));
        canonicalize(e.design, *e.resolution);
        return e;
    }
    if (id == "kts15") {
        load_table(catalog_data::kKts15, 15, e);
        e.colourings.emplace_back("rainbow",
                                  colouring_from_classes(catalog_data::kKts15Rainbow, 15));
        canonicalize(e.design, *e.resolution);
        return e;
    }
    if (id == "sigma21") return load_sigma(id, catalog_data::kSigma21);
    if (id == "sigma33") return load_sigma(id, catalog_data::kSigma33);
    if (id == "sigma39") return load_sigma(id, catalog_data::kSigma39);
    if (id == "sigma57") return load_sigma(id, catalog_data::kSigma57);
    if (id == "sigma69") return load_sigma(id, catalog_data::kSigma69);
    if (id.rfind("tv33-", 0) == 0) {
        int index = std::stoi(id.substr(5));
        if (index < 1 || index > 30) throw contract_error("unknown catalog id " + id);
        return load_tv(index);
    }
    if (id == "rot33-59a") return load_rot33();
    if (id == "q13") return load_q13();
    if (id == "gdd4x4") return load_gdd44();
    throw contract_error("unknown catalog id " + id);
}

}  // namespace

const Colouring* Entry::find_colouring(const std::string& name) const {
    for (const auto& [n, c] : colourings)
        if (n == name) return &c;
    return nullptr;
}

std::vector<std::string> ids() {
    std::vector<std::string> out{"kts9", "kts15", "sigma21", "sigma33", "sigma39",
                                 "sigma57", "sigma69"};
    for (int i = 1; i <= 30; ++i) out.push_back("tv33-" + std::to_string(i));
    out.push_back("rot33-59a");
    out.push_back("gdd4x4");
    out.push_back("q13");
    return out;
}

bool has(const std::string& id) {
    static const std::vector<std::string> all = ids();
    return std::find(all.begin(), all.end(), id) != all.end();
}

const Entry& get(const std::string& id) {
    static std::map<std::string, Entry> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, load_entry(id)).first;
    return it->second;
}

Report self_test() {
    Report r;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) r.fail(what);
    };
    for (const std::string& id : ids()) {
        const Entry& e = get(id);
        if (e.groups) {
            // a GDD covers cross-group pairs only
            check(verify_gdd(e.design, *e.groups).ok, id + ": GDD check failed");
        } else {
            PairBalanceReport pb = verify_pairwise_balance(e.design);
            check(pb.report.ok, id + ": pairwise balance failed");
        }
        if (e.resolution) {
            if (e.design.k == 3) {
                check(verify_kts(e.design, *e.resolution).ok, id + ": KTS check failed");
            } else {
                check(verify_resolution(e.design, *e.resolution).ok,
                      id + ": resolution check failed");
            }
        }
        for (const auto& [name, col] : e.colourings) {
            check(is_weak(e.design, col).report.ok,
                  id + ": colouring '" + name + "' is not weak");
            if (col.delta == 3 && e.resolution && e.design.k == 3) {
                RainbowReport rb = rainbow_check(e.design, *e.resolution, col);
                if (name == "rainbow" || name == "3x3")
                    check(rb.is_rainbow, id + ": colouring '" + name + "' is not rainbow");
            }
        }
        if (id.rfind("tv33-", 0) == 0) {
            const Colouring* col = e.find_colouring("paper");
            check(col && colour_type(*col) == std::vector<int>{8, 8, 8, 9},
                  id + ": paper colouring type is not 8^3 9^1");
            check(col && is_equitable(*col), id + ": paper colouring not equitable");
        }
        if (id == "gdd4x4") {
            const Colouring& col = e.colourings[0].second;
            for (const Block& b : e.design.blocks) {
                int mult[4] = {0, 0, 0, 0};
                for (int p : b) ++mult[col.colours[p]];
                check(*std::max_element(mult, mult + 4) <= 2,
                      "gdd4x4: block with 3+ points of one colour");
            }
            for (const auto& g : e.groups->groups) {
                std::set<int> cols;
                for (int p : g) cols.insert(col.colours[p]);
                check(cols.size() == 4, "gdd4x4: group missing a colour");
            }
        }
    }
    // the thirty TV systems are pairwise distinct as Kirkman systems: some
    // share an underlying block set, none share a resolution
    std::set<std::set<std::vector<Block>>> tv_resolutions;
    for (int i = 1; i <= 30; ++i) {
        const Entry& e = get("tv33-" + std::to_string(i));
        std::set<std::vector<Block>> classes;
        for (const ResolutionClass& cl : e.resolution->classes) {
            std::vector<Block> blocks;
            for (int bi : cl.block_indices) blocks.push_back(e.design.blocks[bi]);
            std::sort(blocks.begin(), blocks.end());
            classes.insert(std::move(blocks));
        }
        tv_resolutions.insert(std::move(classes));
    }
    check(tv_resolutions.size() == 30, "TV systems are not pairwise distinct");
    return r;
}

Colouring kq13_example_colouring() {
    Colouring c;
    auto lines = token_lines(catalog_data::kKq13Colouring);
    for (const std::string& tok : lines[0]) c.colours.push_back(std::stoi(tok));
    c.delta = 3;
    return c;
}

}  // namespace kirkman::catalog
