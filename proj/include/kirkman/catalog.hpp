#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kirkman/core.hpp"

namespace kirkman::catalog {

// A catalog entry: design plus whatever structure the source listing gives.
// Points are 0-based; 1-based tables are shifted on load. Symbolic points
// of the sigma systems encode as i_j -> j*m + i and inf_k -> 3m + k.
struct Entry {
    std::string id;
    Design design;
    std::optional<GroupPartition> groups;
    std::optional<Resolution> resolution;
    std::vector<std::pair<std::string, Colouring>> colourings;
    // q13 only: the blocks in listed order with listed point order
    std::vector<std::array<int, 4>> ordered_tuples;

    const Colouring* find_colouring(const std::string& name) const;
};

std::vector<std::string> ids();
bool has(const std::string& id);
// Loads (and caches) the entry; throws contract_error for unknown ids.
const Entry& get(const std::string& id);

// Full verifier suite over every entry (pair balance, resolution / frame /
// GDD as applicable, stored colourings weak, rainbow certificates rainbow).
Report self_test();

// The published 3-colouring of the doubled-plus-infinity system over q13
// (primes encode as 13+i, infinity as 26).
Colouring kq13_example_colouring();

}  // namespace kirkman::catalog
