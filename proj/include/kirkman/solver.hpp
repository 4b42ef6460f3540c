#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kirkman/core.hpp"

namespace kirkman::solver {

struct SearchOptions {
    int delta = 3;
    bool equitable = false;
    // class sizes in any order; must sum to v
    std::optional<std::vector<int>> required_type;
    int min_colours_per_block = 2;
    // when set, additionally require a rainbow parallel class (delta must be 3)
    const Resolution* rainbow = nullptr;
    double time_budget_seconds = 600.0;
    int threads = 1;
    std::uint64_t seed = 0;
};

enum class SearchStatus { SAT, UNSAT, TIMEOUT };

struct SearchOutcome {
    SearchStatus status = SearchStatus::UNSAT;
    std::optional<Colouring> colouring;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

// Exhaustive backtracking search for a weak delta-colouring subject to the
// requested constraints. SAT certificates are re-verified before return;
// UNSAT is exhaustive over the colour-symmetry-reduced space.
SearchOutcome search_weak_colouring(const Design& d, const SearchOptions& options);

enum class ChromStatus { FOUND, ABOVE_MAX, TIMEOUT };

struct ChromaticOutcome {
    std::optional<int> chromatic_number;
    ChromStatus status = ChromStatus::TIMEOUT;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

// Least delta in [2, max_delta] admitting a weak colouring, with UNSAT
// proofs for all smaller values. The budget covers the whole ladder.
ChromaticOutcome chromatic_number(const Design& d, int max_delta = 8,
                                  double budget_seconds = 600.0, int threads = 1);

enum class ResolveStatus { FOUND, NONE, TIMEOUT };

struct ResolveOutcome {
    ResolveStatus status = ResolveStatus::NONE;
    std::optional<Resolution> resolution;
    std::uint64_t nodes = 0;
    int passes = 1;         // deterministic pass plus any randomized restarts
    std::uint64_t cap = 0;  // node cap of the last pass (0 = uncapped)
    double seconds = 0.0;
};

// Assemble the blocks into parallel classes by exact cover. NONE is
// reported only when a complete pass exhausted the search space.
ResolveOutcome find_resolution(const Design& d, double budget_seconds = 600.0,
                               std::uint64_t seed = 0);

}  // namespace kirkman::solver
