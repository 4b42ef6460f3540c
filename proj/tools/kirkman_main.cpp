// Command line front end: catalog access, verification, colouring search,
// resolution search and the construction pipeline.
//
// Exit codes: 0 success / SAT, 1 verification failure / UNSAT / NONE,
// 2 usage error, 3 timeout.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kirkman/catalog.hpp"
#include "kirkman/constructions.hpp"
#include "kirkman/core.hpp"
#include "kirkman/io.hpp"
#include "kirkman/solver.hpp"

using namespace kirkman;
namespace cons = kirkman::constructions;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

struct LoadedDesign {
    Design design;
    std::optional<GroupPartition> groups;
    std::optional<Resolution> resolution;
    const catalog::Entry* entry = nullptr;  // set when loaded from the catalog
};

LoadedDesign resolve_design(const std::string& ref) {
    LoadedDesign out;
    if (catalog::has(ref)) {
        const catalog::Entry& e = catalog::get(ref);
        out.design = e.design;
        out.groups = e.groups;
        out.resolution = e.resolution;
        out.entry = &e;
        return out;
    }
    io::DesignFile f = io::load_design(ref);
    out.design = std::move(f.design);
    out.groups = std::move(f.groups);
    out.resolution = std::move(f.resolution);
    return out;
}

// a colouring reference is a name attached to the design, a catalog-wide
// "<id>-<name>" pair, or a file path
Colouring resolve_colouring(const std::string& ref, const LoadedDesign& d) {
    if (d.entry) {
        if (const Colouring* c = d.entry->find_colouring(ref)) return *c;
    }
    for (const std::string& id : catalog::ids()) {
        if (ref.rfind(id + "-", 0) == 0) {
            const catalog::Entry& e = catalog::get(id);
            if (const Colouring* c = e.find_colouring(ref.substr(id.size() + 1))) return *c;
        }
    }
    return io::load_colouring(ref, d.design.v);
}

void print_report(const std::string& what, const Report& r) {
    std::printf("check %s %s\n", what.c_str(), r.ok ? "ok" : "FAIL");
    for (const std::string& p : r.problems) std::printf("problem %s\n", p.c_str());
}

void emit_output(const cons::Built& b, const std::string& path) {
    io::DesignFile f{b.design, b.groups, b.resolution};
    std::string text = io::emit_design(f);
    if (path.empty() || path == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        io::write_file(path, text);
        if (b.colouring) io::write_file(path + ".colouring", io::emit_colouring(*b.colouring));
        std::printf("wrote %s (v %d, blocks %zu)\n", path.c_str(), b.design.v,
                    b.design.blocks.size());
    }
}

std::map<std::string, std::string> keyvals(const std::vector<std::string>& args,
                                           const char* what) {
    std::map<std::string, std::string> out;
    for (const std::string& a : args) {
        auto eq = a.find('=');
        if (eq == std::string::npos)
            throw contract_error(std::string(what) + " expects name=value, got '" + a + "'");
        out[a.substr(0, eq)] = a.substr(eq + 1);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

int run_verify(const std::string& design_ref, bool check_resolution, bool check_gdd,
               bool check_frame, const std::string& colouring_ref, bool check_rainbow) {
    LoadedDesign d = resolve_design(design_ref);
    bool all_ok = true;

    // a GDD or frame covers cross-group pairs only, so the BIBD pair check
    // applies just to plain designs
    if (!check_gdd && !check_frame) {
        PairBalanceReport pb = verify_pairwise_balance(d.design);
        print_report("pairwise-balance", pb.report);
        all_ok = all_ok && pb.report.ok;
    } else {
        Report structure = validate_structure(d.design);
        print_report("structure", structure);
        all_ok = all_ok && structure.ok;
    }

    if (check_resolution) {
        if (!d.resolution) {
            std::printf("check resolution FAIL\nproblem no resolution attached\n");
            all_ok = false;
        } else {
            Report r = verify_resolution(d.design, d.groups ? &*d.groups : nullptr,
                                         *d.resolution);
            print_report("resolution", r);
            all_ok = all_ok && r.ok;
        }
    }
    if (check_gdd) {
        if (!d.groups) {
            std::printf("check gdd FAIL\nproblem no groups attached\n");
            all_ok = false;
        } else {
            Report r = verify_gdd(d.design, *d.groups);
            print_report("gdd", r);
            all_ok = all_ok && r.ok;
        }
    }
    if (check_frame) {
        if (!d.groups || !d.resolution) {
            std::printf("check frame FAIL\nproblem needs groups and resolution\n");
            all_ok = false;
        } else {
            Report r = verify_frame(d.design, *d.groups, *d.resolution);
            print_report("frame", r);
            all_ok = all_ok && r.ok;
        }
    }
    if (!colouring_ref.empty()) {
        Colouring c = resolve_colouring(colouring_ref, d);
        WeakReport w = is_weak(d.design, c);
        print_report("weak-colouring", w.report);
        std::printf("colour-type %s\n", type_to_string(colour_type(c)).c_str());
        std::printf("equitable %s\n", is_equitable(c) ? "yes" : "no");
        all_ok = all_ok && w.report.ok;
        if (check_rainbow) {
            if (!d.resolution) {
                std::printf("check rainbow FAIL\nproblem needs a resolution\n");
                all_ok = false;
            } else {
                RainbowReport rb = rainbow_check(d.design, *d.resolution, c);
                print_report("rainbow", rb.report);
                std::printf("rainbow %s\n", rb.is_rainbow ? "yes" : "no");
                if (rb.is_rainbow)
                    std::printf("rainbow-class %d\n", rb.rainbow_class);
                all_ok = all_ok && rb.is_rainbow;
            }
        }
    } else if (check_rainbow) {
        std::printf("check rainbow FAIL\nproblem --rainbow needs --colouring\n");
        all_ok = false;
    }
    return all_ok ? kExitOk : kExitFail;
}

int run_construct(const std::string& recipe, const std::vector<std::string>& params,
                  const std::vector<std::string>& inputs, const std::string& out_path) {
    auto pm = keyvals(params, "--param");
    auto in = keyvals(inputs, "--input");
    auto need_input = [&](const std::string& name) -> std::string {
        auto it = in.find(name);
        if (it == in.end()) throw contract_error("missing --input " + name + "=...");
        return it->second;
    };
    auto param_int = [&](const std::string& name, std::optional<int> fallback =
                                                       std::nullopt) -> int {
        auto it = pm.find(name);
        if (it == pm.end()) {
            if (fallback) return *fallback;
            throw contract_error("missing --param " + name + "=...");
        }
        return std::stoi(it->second);
    };

    cons::Built built;
    if (recipe == "td3") {
        built = cons::td3_resolvable(param_int("v"));
    } else if (recipe == "delete-point") {
        LoadedDesign k = resolve_design(need_input("kts"));
        if (!k.resolution) throw contract_error("delete-point input needs a resolution");
        FrameParts f = delete_point(k.design, *k.resolution, param_int("p", 0));
        built.design = std::move(f.design);
        built.groups = std::move(f.groups);
        built.resolution = std::move(f.resolution);
    } else if (recipe == "tripling") {
        LoadedDesign k = resolve_design(need_input("kts"));
        if (!k.resolution) throw contract_error("tripling input needs a resolution");
        Colouring c = resolve_colouring(need_input("colouring"), k);
        built = cons::tripling(k.design, *k.resolution, c);
    } else if (recipe == "rainbow-frame") {
        LoadedDesign f = resolve_design(need_input("frame"));
        if (!f.groups || !f.resolution)
            throw contract_error("rainbow-frame input needs groups and a resolution");
        int w = param_int("w", 3);
        std::map<int, cons::RainbowIngredient> ings;
        for (const auto& [name, ref] : in) {
            if (name.rfind("ingredient", 0) != 0 && name != "ingredient") continue;
            LoadedDesign id = resolve_design(ref);
            if (!id.resolution) throw contract_error("ingredient needs a resolution");
            cons::RainbowIngredient ing;
            ing.design = id.design;
            ing.resolution = *id.resolution;
            std::string cref = in.count(name + "-colouring") ? in.at(name + "-colouring")
                                                             : std::string("3x3");
            if (id.entry && !id.entry->find_colouring(cref) && id.entry->colourings.size() == 1)
                cref = id.entry->colourings.front().first;
            ing.colouring = resolve_colouring(cref, id);
            if (pm.count("sub")) {
                ing.sub_points = parse_int_list(pm.at("sub"));
            } else {
                // default: least block of the rainbow class (w = 3)
                RainbowReport rb = rainbow_check(ing.design, ing.resolution, ing.colouring);
                if (!rb.is_rainbow) throw contract_error("ingredient is not rainbow");
                Block best;
                for (int bi : ing.resolution.classes[rb.rainbow_class].block_indices) {
                    const Block& b = ing.design.blocks[bi];
                    if (best.empty() || b < best) best = b;
                }
                ing.sub_points = best;
            }
            int t = (ing.design.v - w) / 3;
            ings[t] = std::move(ing);
        }
        built = cons::rainbow_frame_construction(f.design, *f.groups, *f.resolution, w, ings);
    } else if (recipe == "quad-to-gdd") {
        LoadedDesign q = resolve_design(need_input("q"));
        built = cons::quadruple_to_4gdd(q.design);
    } else if (recipe == "gdd-blowup") {
        LoadedDesign g = resolve_design(need_input("gdd"));
        LoadedDesign f = resolve_design(need_input("frame"));
        if (!g.groups) throw contract_error("gdd input needs groups");
        if (!f.groups || !f.resolution)
            throw contract_error("ingredient frame needs groups and a resolution");
        Colouring c = resolve_colouring(
            in.count("colouring") ? in.at("colouring") : "gdd4x4-cols", g);
        built = cons::gdd_blowup(g.design, *g.groups, c, param_int("g"), f.design, *f.groups,
                                 *f.resolution);
    } else if (recipe == "frame-fill") {
        LoadedDesign f = resolve_design(need_input("frame"));
        if (!f.groups || !f.resolution)
            throw contract_error("frame-fill input needs groups and a resolution");
        LoadedDesign fillsrc = resolve_design(need_input("fill"));
        if (!fillsrc.resolution) throw contract_error("fill needs a resolution");
        std::vector<cons::Fill> fills;
        std::optional<Colouring> frame_col;
        if (in.count("frame-colouring"))
            frame_col = resolve_colouring(in.at("frame-colouring"), f);
        std::optional<Colouring> fill_col;
        if (in.count("fill-colouring"))
            fill_col = resolve_colouring(in.at("fill-colouring"), fillsrc);
        for (const auto& grp : f.groups->groups) {
            if (frame_col && fill_col) {
                std::vector<int> gpts = grp;
                std::sort(gpts.begin(), gpts.end());
                std::vector<int> pcols;
                for (int p : gpts) pcols.push_back(frame_col->colours[p]);
                fills.push_back(cons::align_fill(fillsrc.design, *fillsrc.resolution,
                                                 *fill_col, gpts, pcols,
                                                 param_int("inf-colour", 0)));
            } else {
                cons::Fill fill;
                fill.design = fillsrc.design;
                fill.resolution = *fillsrc.resolution;
                fills.push_back(std::move(fill));
            }
        }
        built = cons::frame_fill_one_point(f.design, *f.groups, *f.resolution, fills,
                                           frame_col ? &*frame_col : nullptr);
    } else if (recipe == "rgdd43") {
        std::vector<int> c = parse_int_list(pm.count("c") ? pm.at("c") : "0,0,0");
        if (c.size() != 3) throw contract_error("--param c=c0,c1,c2");
        built = cons::rgdd_4_3_coloured(c[0], c[1], c[2], param_int("delta", 4));
    } else if (recipe == "frame84") {
        std::vector<int> c = parse_int_list(pm.count("c") ? pm.at("c") : "0,0,0,0");
        if (c.size() != 4) throw contract_error("--param c=c0,c1,c2,c3");
        built = cons::frame_8_4_coloured({c[0], c[1], c[2], c[3]}, param_int("delta", 4));
    } else if (recipe == "pipeline") {
        LoadedDesign q = resolve_design(need_input("q"));
        int delta = param_int("delta", 4);
        Design sts;
        sts.v = 0;
        sts.k = 3;
        Colouring sc;
        sc.delta = delta;
        cons::StsEmbedding emb;
        if (in.count("sts")) {
            LoadedDesign s = resolve_design(in.at("sts"));
            sts = s.design;
            sc = resolve_colouring(need_input("sts-colouring"), s);
            emb.point_image = parse_int_list(pm.at("inject"));
            emb.block_extra = parse_int_list(pm.at("extras"));
        }
        built = cons::sts_to_kts_pipeline(sts, sc, emb, q.design, delta);
    } else if (recipe == "kq") {
        LoadedDesign q = resolve_design(need_input("q"));
        std::vector<std::array<int, 4>> order;
        if (pm.count("order") && pm.at("order") == "aswritten") {
            if (!q.entry || q.entry->ordered_tuples.empty())
                throw contract_error("as-written ordering only available for catalog q13");
            order = q.entry->ordered_tuples;
        }
        cons::Built b;
        b.design = cons::kq_build(q.design, order);
        auto res = solver::find_resolution(b.design, param_int("budget", 300));
        if (res.status == solver::ResolveStatus::FOUND) b.resolution = res.resolution;
        built = std::move(b);
    } else if (recipe == "kq2d" || recipe == "kqd1") {
        LoadedDesign q = resolve_design(need_input("q"));
        Colouring c = resolve_colouring(need_input("colouring"), q);
        built = recipe == "kq2d" ? cons::kq_colour_2delta(q.design, c)
                                 : cons::kq_colour_delta_plus_one(q.design, c);
        auto res = solver::find_resolution(built.design, param_int("budget", 300));
        if (res.status == solver::ResolveStatus::FOUND) built.resolution = res.resolution;
    } else {
        std::fprintf(stderr, "unknown recipe '%s'\n", recipe.c_str());
        return kExitUsage;
    }
    emit_output(built, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triple system construction, verification and colouring toolkit"};
    app.require_subcommand(1);

    // catalog
    auto* cat = app.add_subcommand("catalog", "list or emit embedded designs");
    auto* cat_list = cat->add_subcommand("list", "list catalog identifiers");
    auto* cat_emit = cat->add_subcommand("emit", "emit a catalog design or colouring");
    std::string cat_name, cat_colouring, cat_out;
    bool one_based = false;
    cat_emit->add_option("--name", cat_name, "catalog identifier")->required();
    cat_emit->add_option("--with-colouring", cat_colouring,
                         "emit this attached colouring instead of the design");
    cat_emit->add_option("--out", cat_out, "output file (default stdout)");
    cat_emit->add_flag("--one-based", one_based, "display points 1-based");

    // verify
    auto* ver = app.add_subcommand("verify", "run verifier suites against a design");
    std::string v_design, v_colouring;
    bool v_res = false, v_gdd = false, v_frame = false, v_rainbow = false;
    ver->add_option("--design", v_design, "catalog id or DESIGN file")->required();
    ver->add_flag("--resolution", v_res, "check the attached resolution");
    ver->add_flag("--gdd", v_gdd, "check the group divisible design property");
    ver->add_flag("--frame", v_frame, "check the Kirkman frame property");
    ver->add_option("--colouring", v_colouring, "colouring name or file to check");
    ver->add_flag("--rainbow", v_rainbow, "check the rainbow property");

    // chromatic
    auto* chrom = app.add_subcommand("chromatic", "exact chromatic number");
    std::string c_design;
    int c_max = 8, c_threads = 1;
    double c_budget = 600.0;
    chrom->add_option("--design", c_design)->required();
    chrom->add_option("--max", c_max, "largest delta to try");
    chrom->add_option("--budget", c_budget, "time budget in seconds");
    chrom->add_option("--threads", c_threads, "worker threads");

    // colour
    auto* col = app.add_subcommand("colour", "search for a weak colouring");
    std::string l_design, l_type;
    int l_delta = 3, l_minbc = 2, l_threads = 1;
    double l_budget = 600.0;
    bool l_equitable = false, l_rainbow = false;
    col->add_option("--design", l_design)->required();
    col->add_option("--delta", l_delta, "number of colours")->required();
    col->add_flag("--equitable", l_equitable, "class sizes differ by at most one");
    col->add_option("--type", l_type, "required colour type, e.g. 2,3,4");
    col->add_option("--min-block-colours", l_minbc, "minimum distinct colours per block");
    col->add_flag("--rainbow", l_rainbow, "require a rainbow class (delta = 3)");
    col->add_option("--budget", l_budget, "time budget in seconds");
    col->add_option("--threads", l_threads, "worker threads");

    // resolve
    auto* res = app.add_subcommand("resolve", "find a resolution into parallel classes");
    std::string r_design;
    double r_budget = 600.0;
    res->add_option("--design", r_design)->required();
    res->add_option("--budget", r_budget, "time budget in seconds");

    // construct
    auto* con = app.add_subcommand("construct", "run a construction recipe");
    std::string recipe, out_path;
    std::vector<std::string> params, inputs;
    con->add_option("recipe", recipe,
                    "td3 | delete-point | tripling | rainbow-frame | quad-to-gdd | gdd-blowup | "
                    "frame-fill | rgdd43 | frame84 | pipeline | kq | kq2d | kqd1")
        ->required();
    con->add_option("--param", params, "name=value parameter")->take_all();
    con->add_option("--input", inputs, "name=ref input (catalog id or file)")->take_all();
    con->add_option("--out", out_path, "output DESIGN file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cat_list->parsed()) {
            for (const std::string& id : catalog::ids()) {
                const catalog::Entry& e = catalog::get(id);
                std::printf("%s v %d k %d blocks %zu\n", id.c_str(), e.design.v, e.design.k,
                            e.design.blocks.size());
            }
            return kExitOk;
        }
        if (cat_emit->parsed()) {
            const catalog::Entry& e = catalog::get(cat_name);
            std::string text;
            if (!cat_colouring.empty()) {
                const Colouring* c = e.find_colouring(cat_colouring);
                if (!c) throw contract_error("no colouring named " + cat_colouring);
                text = io::emit_colouring(*c);
            } else {
                io::DesignFile f{e.design, e.groups, e.resolution};
                text = io::emit_design(f, one_based);
            }
            if (cat_out.empty())
                std::fputs(text.c_str(), stdout);
            else
                io::write_file(cat_out, text);
            return kExitOk;
        }
        if (ver->parsed())
            return run_verify(v_design, v_res, v_gdd, v_frame, v_colouring, v_rainbow);
        if (chrom->parsed()) {
            LoadedDesign d = resolve_design(c_design);
            auto r = solver::chromatic_number(d.design, c_max, c_budget, c_threads);
            std::printf("nodes %llu\nseconds %.3f\n",
                        static_cast<unsigned long long>(r.nodes), r.seconds);
            if (r.status == solver::ChromStatus::FOUND) {
                std::printf("chromatic-number %d\n", *r.chromatic_number);
                return kExitOk;
            }
            if (r.status == solver::ChromStatus::ABOVE_MAX) {
                std::printf("chromatic-number >%d\n", c_max);
                return kExitFail;
            }
            std::printf("chromatic-number INDETERMINATE\n");
            return kExitTimeout;
        }
        if (col->parsed()) {
            LoadedDesign d = resolve_design(l_design);
            solver::SearchOptions o;
            o.delta = l_delta;
            o.equitable = l_equitable;
            o.min_colours_per_block = l_minbc;
            o.time_budget_seconds = l_budget;
            o.threads = l_threads;
            if (!l_type.empty()) o.required_type = parse_int_list(l_type);
            if (l_rainbow) {
                if (!d.resolution) throw contract_error("--rainbow needs a resolution");
                o.rainbow = &*d.resolution;
            }
            auto r = solver::search_weak_colouring(d.design, o);
            std::printf("nodes %llu\nseconds %.3f\n",
                        static_cast<unsigned long long>(r.nodes), r.seconds);
            if (r.status == solver::SearchStatus::SAT) {
                std::printf("status SAT\ncolouring %s", io::emit_colouring(*r.colouring).c_str());
                std::printf("colour-type %s\n",
                            type_to_string(colour_type(*r.colouring)).c_str());
                return kExitOk;
            }
            std::printf("status %s\n",
                        r.status == solver::SearchStatus::UNSAT ? "UNSAT" : "TIMEOUT");
            return r.status == solver::SearchStatus::UNSAT ? kExitFail : kExitTimeout;
        }
        if (res->parsed()) {
            LoadedDesign d = resolve_design(r_design);
            auto r = solver::find_resolution(d.design, r_budget);
            std::printf("nodes %llu\npasses %d\nseconds %.3f\n",
                        static_cast<unsigned long long>(r.nodes), r.passes, r.seconds);
            if (r.status == solver::ResolveStatus::FOUND) {
                std::printf("status FOUND\n");
                io::DesignFile f{d.design, d.groups, r.resolution};
                std::fputs(io::emit_design(f).c_str(), stdout);
                return kExitOk;
            }
            std::printf("status %s\n",
                        r.status == solver::ResolveStatus::NONE ? "NONE" : "TIMEOUT");
            return r.status == solver::ResolveStatus::NONE ? kExitFail : kExitTimeout;
        }
        if (con->parsed()) return run_construct(recipe, params, inputs, out_path);
    } catch (const io::parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitUsage;
    } catch (const contract_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFail;
    }
    return kExitUsage;
}
