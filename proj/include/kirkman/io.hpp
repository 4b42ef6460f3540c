#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "kirkman/core.hpp"

namespace kirkman::io {

// Line-oriented DESIGN format, '#' starts a comment:
//   DESIGN v <v> k <k>
//   GROUPS            (optional; one line of points per group)
//   BLOCKS            (one ascending block per line)
//   RESOLUTION        (optional; CLASS <indices> or PARTIAL <group> <indices>)
struct DesignFile {
    Design design;
    std::optional<GroupPartition> groups;
    std::optional<Resolution> resolution;
};

class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

DesignFile parse_design(const std::string& text);
DesignFile load_design(const std::string& path);

std::string emit_design(const DesignFile& f, bool one_based = false);

// Colouring file: one line of space-separated colour indices, or a compact
// digit string ('1'..'9' are colours 0..8, '0' is colour 9).
Colouring parse_colouring(const std::string& text, int v);
Colouring load_colouring(const std::string& path, int v);
std::string emit_colouring(const Colouring& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace kirkman::io
