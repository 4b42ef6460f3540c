#include "kirkman/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

namespace kirkman::solver {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct TimeoutSignal {};

// ---------------------------------------------------------------- colouring

// Backtracking weak-colouring engine. Static point order by descending
// block degree; colours tried in ascending order; colour classes are
// interchangeable only within groups of equal target size, and the search
// introduces them in index order within each group.
class ColourSearcher {
  public:
    ColourSearcher(const Design& d, const SearchOptions& opt, int rainbow_class)
        : d_(d), v_(d.v), k_(d.k), delta_(opt.delta) {
        if (delta_ < 1 || delta_ > 30) throw contract_error("delta out of supported range");
        point_blocks_.resize(v_);
        for (std::size_t bi = 0; bi < d.blocks.size(); ++bi)
            for (int p : d.blocks[bi]) point_blocks_[p].push_back(static_cast<int>(bi));

        order_.resize(v_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return point_blocks_[a].size() > point_blocks_[b].size();
        });

        // per-block allowed repeat budget: k - min_colours_per_block, with
        // rainbow-class blocks forced to all-distinct colours
        int base_repeats = k_ - opt.min_colours_per_block;
        if (base_repeats < 0) throw contract_error("min_colours_per_block exceeds k");
        allowed_repeats_.assign(d.blocks.size(), base_repeats);
        if (rainbow_class >= 0) {
            for (int bi : opt.rainbow->classes[rainbow_class].block_indices)
                allowed_repeats_[bi] = 0;
        }

        // targets: exact class sizes when constrained, otherwise v
        if (opt.required_type) {
            targets_ = *opt.required_type;
            if (static_cast<int>(targets_.size()) > delta_)
                throw contract_error("required_type has more parts than delta");
            targets_.resize(delta_, 0);
            std::sort(targets_.begin(), targets_.end(), std::greater<int>());
            if (std::accumulate(targets_.begin(), targets_.end(), 0) != v_)
                throw contract_error("required_type sizes do not sum to v");
        } else if (opt.equitable || rainbow_class >= 0) {
            targets_.assign(delta_, v_ / delta_);
            for (int c = 0; c < v_ % delta_; ++c) ++targets_[c];
        } else {
            targets_.assign(delta_, v_);
        }
        // symmetry groups: runs of equal target (all colours when unconstrained)
        group_first_.resize(delta_);
        for (int c = 0; c < delta_; ++c)
            group_first_[c] = (c > 0 && targets_[c] == targets_[c - 1]) ? group_first_[c - 1] : c;

        colour_.assign(v_, -1);
        domain_.assign(v_, delta_ == 30 ? 0x3fffffffu : ((1u << delta_) - 1));
        counts_.assign(d.blocks.size() * delta_, 0);
        block_assigned_.assign(d.blocks.size(), 0);
        block_distinct_.assign(d.blocks.size(), 0);
        class_count_.assign(delta_, 0);
    }

    SearchOutcome run(Clock::time_point t0, double budget) {
        t0_ = t0;
        budget_ = budget;
        SearchOutcome out;
        try {
            bool sat = dfs(0);
            out.status = sat ? SearchStatus::SAT : SearchStatus::UNSAT;
            if (sat) {
                Colouring c;
                c.delta = delta_;
                c.colours = colour_;
                out.colouring = std::move(c);
            }
        } catch (const TimeoutSignal&) {
            out.status = SearchStatus::TIMEOUT;
        }
        out.nodes = nodes_;
        out.seconds = seconds_since(t0);
        return out;
    }

    // replay a fixed prefix of assignments (points in static order); returns
    // false if the prefix is already contradictory
    bool replay_prefix(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            int p = order_[i];
            int c = prefix[i];
            if (colour_[p] != -1) {
                if (colour_[p] != c) return false;
                continue;
            }
            if (!(domain_[p] >> c & 1u) || class_count_[c] >= targets_[c]) return false;
            if (!assign_and_propagate(p, c)) return false;
        }
        return true;
    }

    // children of the current state at static-order position pos; a point
    // already fixed by propagation has exactly one child
    std::vector<int> branch_colours(std::size_t pos) {
        std::vector<int> out;
        if (pos >= static_cast<std::size_t>(v_)) return out;
        int p = order_[pos];
        if (colour_[p] != -1) return {colour_[p]};
        for (int c = 0; c < delta_; ++c) {
            if (!(domain_[p] >> c & 1u)) continue;
            if (class_count_[c] >= targets_[c]) continue;
            if (class_count_[c] == 0 && !group_order_ok(c)) continue;
            out.push_back(c);
        }
        return out;
    }

    void set_cancel_flag(const std::atomic<bool>* flag) { cancel_ = flag; }

  private:
    bool group_order_ok(int c) const {
        for (int c2 = group_first_[c]; c2 < c; ++c2)
            if (class_count_[c2] == 0) return false;
        return true;
    }

    struct TrailEntry {
        int point;
        std::uint32_t removed_mask;  // 0 marks an assignment entry
    };

    bool remove_colour(int p, int c) {
        std::uint32_t bit = 1u << c;
        if (!(domain_[p] & bit)) return true;
        domain_[p] &= ~bit;
        trail_.push_back({p, bit});
        if (domain_[p] == 0) return false;
        if (colour_[p] == -1 && (domain_[p] & (domain_[p] - 1)) == 0) {
            int only = std::countr_zero(domain_[p]);
            forced_.emplace_back(p, only);
        }
        return true;
    }

    bool do_assign(int p, int c) {
        // counters are updated for every block before any early exit so that
        // a single undo pass stays consistent
        colour_[p] = c;
        trail_.push_back({p, 0});
        ++class_count_[c];
        for (int bi : point_blocks_[p]) {
            std::uint8_t& cnt = counts_[static_cast<std::size_t>(bi) * delta_ + c];
            ++cnt;
            ++block_assigned_[bi];
            if (cnt == 1) ++block_distinct_[bi];
        }
        if (class_count_[c] > targets_[c]) return false;
        for (int bi : point_blocks_[p]) {
            int repeats = block_assigned_[bi] - block_distinct_[bi];
            if (repeats > allowed_repeats_[bi]) return false;
            if (repeats == allowed_repeats_[bi]) {
                // no repeat budget left: every used colour is banned for the
                // undecided points of this block
                for (int q : d_.blocks[bi]) {
                    if (colour_[q] != -1) continue;
                    for (int c2 = 0; c2 < delta_; ++c2) {
                        if (counts_[static_cast<std::size_t>(bi) * delta_ + c2] &&
                            !remove_colour(q, c2))
                            return false;
                    }
                }
            }
        }
        return true;
    }

    bool assign_and_propagate(int p, int c) {
        std::size_t trail_mark = trail_.size();
        forced_.clear();
        bool ok = do_assign(p, c);
        for (std::size_t i = 0; ok && i < forced_.size(); ++i) {
            auto [q, qc] = forced_[i];
            if (colour_[q] != -1) continue;
            ok = do_assign(q, qc);
        }
        if (!ok) undo_to(trail_mark);
        return ok;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            TrailEntry e = trail_.back();
            trail_.pop_back();
            if (e.removed_mask) {
                domain_[e.point] |= e.removed_mask;
            } else {
                int c = colour_[e.point];
                colour_[e.point] = -1;
                --class_count_[c];
                for (int bi : point_blocks_[e.point]) {
                    std::uint8_t& cnt = counts_[static_cast<std::size_t>(bi) * delta_ + c];
                    --cnt;
                    --block_assigned_[bi];
                    if (cnt == 0) --block_distinct_[bi];
                }
            }
        }
    }

    bool dfs(std::size_t pos) {
        // budget check fires on the first node and then every 1024 nodes
        if ((++nodes_ & 1023) == 1) {
            if (budget_ > 0 && seconds_since(t0_) > budget_) throw TimeoutSignal{};
            if (cancel_ && cancel_->load(std::memory_order_relaxed)) throw TimeoutSignal{};
        }
        while (pos < static_cast<std::size_t>(v_) && colour_[order_[pos]] != -1) ++pos;
        if (pos >= static_cast<std::size_t>(v_)) return true;
        int p = order_[pos];
        for (int c = 0; c < delta_; ++c) {
            if (!(domain_[p] >> c & 1u)) continue;
            if (class_count_[c] >= targets_[c]) continue;
            if (class_count_[c] == 0 && !group_order_ok(c)) continue;
            std::size_t mark = trail_.size();
            if (assign_and_propagate(p, c)) {
                if (dfs(pos + 1)) return true;
                undo_to(mark);
            }
        }
        return false;
    }

    const Design& d_;
    int v_, k_, delta_;
    std::vector<std::vector<int>> point_blocks_;
    std::vector<int> order_;
    std::vector<int> allowed_repeats_;
    std::vector<int> targets_;
    std::vector<int> group_first_;

    std::vector<int> colour_;
    std::vector<std::uint32_t> domain_;
    std::vector<std::uint8_t> counts_;
    std::vector<int> block_assigned_;
    std::vector<int> block_distinct_;
    std::vector<int> class_count_;
    std::vector<TrailEntry> trail_;
    std::vector<std::pair<int, int>> forced_;

    Clock::time_point t0_;
    double budget_ = 0;
    std::uint64_t nodes_ = 0;
    const std::atomic<bool>* cancel_ = nullptr;
};

void verify_certificate(const Design& d, const SearchOptions& opt, int rainbow_class,
                        const Colouring& c) {
    if (!is_weak(d, c).report.ok) throw std::logic_error("solver returned a non-weak colouring");
    if (opt.equitable && !is_equitable(c))
        throw std::logic_error("solver violated the equitable constraint");
    if (opt.required_type) {
        std::vector<int> want;
        for (int s : *opt.required_type)
            if (s > 0) want.push_back(s);
        std::sort(want.begin(), want.end());
        if (colour_type(c) != want) throw std::logic_error("solver violated required_type");
    }
    if (opt.min_colours_per_block > 2) {
        for (const Block& b : d.blocks) {
            std::vector<int> cols;
            for (int p : b) cols.push_back(c.colours[p]);
            std::sort(cols.begin(), cols.end());
            cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
            if (static_cast<int>(cols.size()) < opt.min_colours_per_block)
                throw std::logic_error("solver violated min_colours_per_block");
        }
    }
    if (rainbow_class >= 0) {
        RainbowReport rb = rainbow_check(d, *opt.rainbow, c);
        if (!rb.is_rainbow) throw std::logic_error("solver violated rainbow constraint");
    }
}

SearchOutcome search_single(const Design& d, const SearchOptions& opt, int rainbow_class,
                            Clock::time_point t0, double budget) {
    ColourSearcher searcher(d, opt, rainbow_class);
    SearchOutcome out = searcher.run(t0, budget);
    if (out.status == SearchStatus::SAT) verify_certificate(d, opt, rainbow_class, *out.colouring);
    return out;
}

// top-level branch splitting: enumerate assignment prefixes of the first
// few points, search the subtrees on worker threads
SearchOutcome search_parallel(const Design& d, const SearchOptions& opt, int rainbow_class,
                              Clock::time_point t0, double budget) {
    int want = opt.threads * 4;
    std::vector<std::vector<int>> prefixes{{}};
    std::size_t depth = 0;
    while (static_cast<int>(prefixes.size()) < want && depth < 12 &&
           depth < static_cast<std::size_t>(d.v)) {
        std::vector<std::vector<int>> next;
        for (const auto& pre : prefixes) {
            ColourSearcher s(d, opt, rainbow_class);
            if (!s.replay_prefix(pre)) continue;
            for (int c : s.branch_colours(depth)) {
                std::vector<int> np = pre;
                np.push_back(c);
                next.push_back(std::move(np));
            }
        }
        if (next.empty()) {
            // every prefix is contradictory: exhausted
            SearchOutcome out;
            out.status = SearchStatus::UNSAT;
            out.seconds = seconds_since(t0);
            return out;
        }
        prefixes = std::move(next);
        ++depth;
    }

    std::atomic<bool> found{false};
    std::atomic<std::size_t> next_index{0};
    std::vector<SearchOutcome> results(prefixes.size());
    std::vector<char> ran(prefixes.size(), 0);
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next_index.fetch_add(1);
            if (i >= prefixes.size()) return;
            if (found.load()) return;
            ColourSearcher s(d, opt, rainbow_class);
            if (!s.replay_prefix(prefixes[i])) {
                results[i].status = SearchStatus::UNSAT;
                ran[i] = 1;
                continue;
            }
            s.set_cancel_flag(&found);
            results[i] = s.run(t0, budget);
            ran[i] = 1;
            if (results[i].status == SearchStatus::SAT) found.store(true);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opt.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    SearchOutcome agg;
    agg.status = SearchStatus::UNSAT;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (ran[i]) agg.nodes += results[i].nodes;
    }
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (ran[i] && results[i].status == SearchStatus::SAT) {
            agg.status = SearchStatus::SAT;
            agg.colouring = results[i].colouring;
            break;
        }
    }
    if (agg.status != SearchStatus::SAT) {
        bool timed_out = false;
        for (std::size_t i = 0; i < prefixes.size(); ++i)
            // a cancelled run reports TIMEOUT; only real timeouts count when
            // nothing was found
            if (!ran[i] || results[i].status == SearchStatus::TIMEOUT) timed_out = true;
        if (timed_out) agg.status = SearchStatus::TIMEOUT;
    }
    agg.seconds = seconds_since(t0);
    if (agg.status == SearchStatus::SAT)
        verify_certificate(d, opt, rainbow_class, *agg.colouring);
    return agg;
}

SearchOutcome search_one_rainbow(const Design& d, const SearchOptions& opt, int rainbow_class,
                                 Clock::time_point t0, double budget) {
    if (opt.threads > 1) return search_parallel(d, opt, rainbow_class, t0, budget);
    return search_single(d, opt, rainbow_class, t0, budget);
}

}  // namespace

SearchOutcome search_weak_colouring(const Design& d, const SearchOptions& options) {
    Report structure = validate_structure(d);
    if (!structure.ok) throw contract_error("search on structurally invalid design");
    if (options.rainbow && options.delta != 3)
        throw contract_error("rainbow search requires delta = 3");
    auto t0 = Clock::now();
    if (!options.rainbow) return search_one_rainbow(d, options, -1, t0, options.time_budget_seconds);

    // try each parallel class as the rainbow class; UNSAT only after all
    SearchOutcome agg;
    agg.status = SearchStatus::UNSAT;
    for (std::size_t r = 0; r < options.rainbow->classes.size(); ++r) {
        double left = options.time_budget_seconds - seconds_since(t0);
        if (left <= 0) {
            agg.status = SearchStatus::TIMEOUT;
            break;
        }
        SearchOutcome out = search_one_rainbow(d, options, static_cast<int>(r), t0,
                                               options.time_budget_seconds);
        agg.nodes += out.nodes;
        if (out.status == SearchStatus::SAT) {
            agg.status = SearchStatus::SAT;
            agg.colouring = out.colouring;
            break;
        }
        if (out.status == SearchStatus::TIMEOUT) agg.status = SearchStatus::TIMEOUT;
    }
    agg.seconds = seconds_since(t0);
    return agg;
}

ChromaticOutcome chromatic_number(const Design& d, int max_delta, double budget_seconds,
                                  int threads) {
    auto t0 = Clock::now();
    ChromaticOutcome out;
    out.status = ChromStatus::ABOVE_MAX;
    for (int delta = 2; delta <= max_delta; ++delta) {
        SearchOptions opt;
        opt.delta = delta;
        opt.threads = threads;
        opt.time_budget_seconds = budget_seconds - seconds_since(t0);
        if (opt.time_budget_seconds <= 0) {
            out.status = ChromStatus::TIMEOUT;
            out.seconds = seconds_since(t0);
            return out;
        }
        SearchOutcome res = search_weak_colouring(d, opt);
        out.nodes += res.nodes;
        if (res.status == SearchStatus::SAT) {
            out.chromatic_number = delta;
            out.status = ChromStatus::FOUND;
            break;
        }
        if (res.status == SearchStatus::TIMEOUT) {
            out.status = ChromStatus::TIMEOUT;
            break;
        }
    }
    out.seconds = seconds_since(t0);
    return out;
}

// ---------------------------------------------------------------- resolution

namespace {

// Dancing-links exact cover. Items: one per block (assign exactly one
// class) and one per (point, class) cell (cover each point once per
// class). Options: block b in class c. Every parallel class contains
// exactly one block through point 0, so those blocks are pinned to
// classes 0..r-1 up front.
class ResolutionSearcher {
  public:
    ResolutionSearcher(const Design& d, std::uint64_t cap, Clock::time_point t0, double budget,
                       std::uint64_t shuffle_seed, int anchor_point = 0)
        : d_(d), v_(d.v), cap_(cap), t0_(t0), budget_(budget), seed_(shuffle_seed),
          anchor_point_(anchor_point) {
        r_ = static_cast<int>(d.blocks.size()) * d.k / d.v;
    }

    // true = definitive answer in *found; false = node cap hit
    bool run(bool* found, std::vector<std::vector<int>>* classes) {
        *found = false;
        int b = static_cast<int>(d_.blocks.size());
        // every parallel class contains exactly one block through the anchor
        std::vector<int> anchors;
        for (int bi = 0; bi < b; ++bi)
            if (std::find(d_.blocks[bi].begin(), d_.blocks[bi].end(), anchor_point_) !=
                d_.blocks[bi].end())
                anchors.push_back(bi);
        if (static_cast<int>(anchors.size()) != r_) return true;  // definitive NONE
        std::vector<int> pinned_class(b, -1);
        for (int c = 0; c < r_; ++c) pinned_class[anchors[c]] = c;

        build(pinned_class);

        bool ok;
        try {
            ok = search();
        } catch (const TimeoutSignal&) {
            timed_out_ = true;
            return false;
        }
        if (capped_) return false;
        *found = ok;
        if (ok) {
            classes->assign(r_, {});
            for (int row : solution_)
                (*classes)[row_class_[row]].push_back(row_block_[row]);
            for (auto& cl : *classes) std::sort(cl.begin(), cl.end());
        }
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool timed_out() const { return timed_out_; }

  private:
    // column layout: [0, b) block items, [b, b + v*r) cell items
    int cell_col(int p, int c) const { return static_cast<int>(d_.blocks.size()) + p * r_ + c; }

    void build(const std::vector<int>& pinned_class) {
        int b = static_cast<int>(d_.blocks.size());
        int ncols = b + v_ * r_;
        // header nodes 0..ncols (0-based cols shifted by 1; node 0 = root)
        left_.assign(ncols + 1, 0);
        right_.assign(ncols + 1, 0);
        up_.assign(ncols + 1, 0);
        down_.assign(ncols + 1, 0);
        col_.assign(ncols + 1, 0);
        size_.assign(ncols + 1, 0);
        for (int i = 0; i <= ncols; ++i) {
            left_[i] = i - 1;
            right_[i] = i + 1;
            up_[i] = i;
            down_[i] = i;
            col_[i] = i;
        }
        left_[0] = ncols;
        right_[ncols] = 0;

        std::vector<std::pair<int, int>> rows;  // (block, class)
        for (int bi = 0; bi < b; ++bi) {
            if (pinned_class[bi] >= 0) {
                rows.emplace_back(bi, pinned_class[bi]);
                continue;
            }
            for (int c = 0; c < r_; ++c) rows.emplace_back(bi, c);
        }
        if (seed_) {
            std::mt19937_64 rng(seed_);
            std::shuffle(rows.begin(), rows.end(), rng);
        }
        row_block_.clear();
        row_class_.clear();
        for (auto [bi, c] : rows) {
            int first = -1;
            auto add_node = [&](int column) {
                int n = static_cast<int>(left_.size());
                left_.push_back(n);
                right_.push_back(n);
                up_.push_back(up_[column + 1]);
                down_.push_back(column + 1);
                col_.push_back(column + 1);
                row_of_.resize(left_.size(), -1);
                row_of_[n] = static_cast<int>(row_block_.size());
                down_[up_[column + 1]] = n;
                up_[column + 1] = n;
                ++size_[column + 1];
                if (first < 0) {
                    first = n;
                } else {
                    left_[n] = left_[first];
                    right_[n] = first;
                    right_[left_[first]] = n;
                    left_[first] = n;
                }
            };
            add_node(bi);
            for (int p : d_.blocks[bi]) add_node(cell_col(p, c));
            row_block_.push_back(bi);
            row_class_.push_back(c);
        }
    }

    void cover(int c) {
        right_[left_[c]] = right_[c];
        left_[right_[c]] = left_[c];
        for (int i = down_[c]; i != c; i = down_[i]) {
            for (int j = right_[i]; j != i; j = right_[j]) {
                down_[up_[j]] = down_[j];
                up_[down_[j]] = up_[j];
                --size_[col_[j]];
            }
        }
    }

    void uncover(int c) {
        for (int i = up_[c]; i != c; i = up_[i]) {
            for (int j = left_[i]; j != i; j = left_[j]) {
                ++size_[col_[j]];
                down_[up_[j]] = j;
                up_[down_[j]] = j;
            }
        }
        right_[left_[c]] = c;
        left_[right_[c]] = c;
    }

    bool search() {
        if ((++nodes_ & 2047) == 1 && budget_ > 0 && seconds_since(t0_) > budget_)
            throw TimeoutSignal{};
        if (cap_ && nodes_ > cap_) {
            capped_ = true;
            return false;
        }
        if (right_[0] == 0) return true;
        int best = right_[0];
        for (int c = right_[0]; c != 0; c = right_[c])
            if (size_[c] < size_[best]) best = c;
        if (size_[best] == 0) return false;
        cover(best);
        for (int i = down_[best]; i != best; i = down_[i]) {
            solution_.push_back(row_of_[i]);
            for (int j = right_[i]; j != i; j = right_[j]) cover(col_[j]);
            if (search()) return true;
            for (int j = left_[i]; j != i; j = left_[j]) uncover(col_[j]);
            solution_.pop_back();
            if (capped_) break;
        }
        uncover(best);
        return false;
    }

    const Design& d_;
    int v_;
    int r_;
    std::vector<int> left_, right_, up_, down_, col_, size_, row_of_;
    std::vector<int> row_block_, row_class_;
    std::vector<int> solution_;
    std::uint64_t cap_ = 0;
    std::uint64_t nodes_ = 0;
    bool capped_ = false;
    bool timed_out_ = false;
    Clock::time_point t0_;
    double budget_;
    std::uint64_t seed_;
    int anchor_point_;
};

}  // namespace

ResolveOutcome find_resolution(const Design& d, double budget_seconds, std::uint64_t seed) {
    ResolveOutcome out;
    auto t0 = Clock::now();
    if (d.v <= 0 || d.k <= 0 || d.v % d.k != 0 ||
        (d.blocks.size() * static_cast<std::size_t>(d.k)) % static_cast<std::size_t>(d.v) != 0) {
        // point or block counts cannot split into parallel classes
        out.status = ResolveStatus::NONE;
        out.seconds = seconds_since(t0);
        return out;
    }
    // restart strategy: small node caps with fresh shuffles and rotating
    // anchor points; the cap grows slowly so the search stays complete
    // (a pass that finishes under its cap is definitive)
    std::uint64_t cap = 1u << 15;
    for (int pass = 0;; ++pass) {
        out.passes = pass + 1;
        std::uint64_t shuffle = pass == 0 ? 0 : seed + pass;
        int anchor = pass % std::max(1, d.v);
        ResolutionSearcher s(d, cap, t0, budget_seconds, shuffle, anchor);
        bool found = false;
        std::vector<std::vector<int>> classes;
        bool definitive = s.run(&found, &classes);
        out.nodes += s.nodes();
        out.cap = cap;
        if (s.timed_out()) {
            out.status = ResolveStatus::TIMEOUT;
            break;
        }
        if (definitive) {
            if (found) {
                Resolution res;
                for (auto& cl : classes) {
                    ResolutionClass rc;
                    rc.block_indices = std::move(cl);
                    std::sort(rc.block_indices.begin(), rc.block_indices.end());
                    res.classes.push_back(std::move(rc));
                }
                Report check = verify_resolution(d, res);
                if (!check.ok) throw std::logic_error("find_resolution produced a bad resolution");
                out.resolution = std::move(res);
                out.status = ResolveStatus::FOUND;
            } else {
                out.status = ResolveStatus::NONE;
            }
            break;
        }
        if (pass % 8 == 7) cap += cap / 2;
        if (seconds_since(t0) > budget_seconds) {
            out.status = ResolveStatus::TIMEOUT;
            break;
        }
    }
    out.seconds = seconds_since(t0);
    return out;
}

}  // namespace kirkman::solver
