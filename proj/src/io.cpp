#include "kirkman/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace kirkman::io {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, const std::string& tok) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw parse_error(line.number, "expected integer, got '" + tok + "'");
    }
}

}  // namespace

DesignFile parse_design(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw parse_error(1, "empty design file");
    DesignFile out;

    const Line& head = lines[0];
    if (head.tokens.size() != 5 || head.tokens[0] != "DESIGN" || head.tokens[1] != "v" ||
        head.tokens[3] != "k")
        throw parse_error(head.number, "expected header 'DESIGN v <v> k <k>'");
    out.design.v = parse_int(head, head.tokens[2]);
    out.design.k = parse_int(head, head.tokens[4]);
    if (out.design.v < 0 || out.design.k < 2)
        throw parse_error(head.number, "invalid v or k");

    enum class Section { None, Groups, Blocks, Resolution };
    Section section = Section::None;
    bool saw_blocks = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& first = line.tokens[0];
        if (first == "GROUPS") {
            if (out.groups) throw parse_error(line.number, "duplicate GROUPS section");
            out.groups.emplace();
            section = Section::Groups;
            continue;
        }
        if (first == "BLOCKS") {
            if (saw_blocks) throw parse_error(line.number, "duplicate BLOCKS section");
            saw_blocks = true;
            section = Section::Blocks;
            continue;
        }
        if (first == "RESOLUTION") {
            if (out.resolution) throw parse_error(line.number, "duplicate RESOLUTION section");
            out.resolution.emplace();
            section = Section::Resolution;
            continue;
        }
        switch (section) {
            case Section::None:
                throw parse_error(line.number, "content before any section header");
            case Section::Groups: {
                std::vector<int> grp;
                for (const std::string& tok : line.tokens) {
                    int p = parse_int(line, tok);
                    if (p < 0 || p >= out.design.v)
                        throw parse_error(line.number, "group point out of range");
                    grp.push_back(p);
                }
                out.groups->groups.push_back(std::move(grp));
                break;
            }
            case Section::Blocks: {
                Block b;
                for (const std::string& tok : line.tokens) {
                    int p = parse_int(line, tok);
                    if (p < 0 || p >= out.design.v)
                        throw parse_error(line.number, "block point out of range");
                    b.push_back(p);
                }
                if (static_cast<int>(b.size()) != out.design.k)
                    throw parse_error(line.number, "block has wrong size");
                for (std::size_t i = 0; i + 1 < b.size(); ++i)
                    if (b[i] >= b[i + 1])
                        throw parse_error(line.number,
                                          "block not strictly increasing (repeated point?)");
                out.design.blocks.push_back(std::move(b));
                break;
            }
            case Section::Resolution: {
                ResolutionClass cl;
                std::size_t start;
                if (first == "CLASS") {
                    start = 1;
                } else if (first == "PARTIAL") {
                    if (line.tokens.size() < 2)
                        throw parse_error(line.number, "PARTIAL needs a group index");
                    cl.missing_group = parse_int(line, line.tokens[1]);
                    start = 2;
                } else {
                    throw parse_error(line.number, "expected CLASS or PARTIAL");
                }
                for (std::size_t i = start; i < line.tokens.size(); ++i) {
                    int bi = parse_int(line, line.tokens[i]);
                    if (bi < 0 || bi >= static_cast<int>(out.design.blocks.size()))
                        throw parse_error(line.number, "block index out of range");
                    cl.block_indices.push_back(bi);
                }
                out.resolution->classes.push_back(std::move(cl));
                break;
            }
        }
    }
    if (!saw_blocks) throw parse_error(lines.back().number, "missing BLOCKS section");
    if (out.resolution) {
        for (const ResolutionClass& cl : out.resolution->classes) {
            if (cl.missing_group) {
                if (!out.groups)
                    throw parse_error(lines.back().number,
                                      "PARTIAL class without GROUPS section");
                if (*cl.missing_group < 0 ||
                    *cl.missing_group >= static_cast<int>(out.groups->groups.size()))
                    throw parse_error(lines.back().number, "missing-group index out of range");
            }
        }
    }
    return out;
}

DesignFile load_design(const std::string& path) {
    return parse_design(read_file(path));
}

std::string emit_design(const DesignFile& f, bool one_based) {
    int shift = one_based ? 1 : 0;
    std::ostringstream os;
    os << "DESIGN v " << f.design.v << " k " << f.design.k << "\n";
    if (f.groups) {
        os << "GROUPS\n";
        for (const auto& g : f.groups->groups) {
            for (std::size_t i = 0; i < g.size(); ++i) os << (i ? " " : "") << g[i] + shift;
            os << "\n";
        }
    }
    os << "BLOCKS\n";
    for (const Block& b : f.design.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i] + shift;
        os << "\n";
    }
    if (f.resolution) {
        os << "RESOLUTION\n";
        for (const ResolutionClass& cl : f.resolution->classes) {
            if (cl.missing_group)
                os << "PARTIAL " << *cl.missing_group;
            else
                os << "CLASS";
            for (int bi : cl.block_indices) os << " " << bi;
            os << "\n";
        }
    }
    return os.str();
}

Colouring parse_colouring(const std::string& text, int v) {
    // strip comments and whitespace-split
    std::vector<std::string> toks;
    {
        std::istringstream in(text);
        std::string raw;
        while (std::getline(in, raw)) {
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream ls(raw);
            std::string t;
            while (ls >> t) toks.push_back(t);
        }
    }
    Colouring c;
    if (toks.size() == 1 && static_cast<int>(toks[0].size()) == v && v > 1) {
        bool digits = std::all_of(toks[0].begin(), toks[0].end(),
                                  [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
        if (digits) {
            for (char ch : toks[0]) c.colours.push_back(ch == '0' ? 9 : ch - '1');
            c.delta = *std::max_element(c.colours.begin(), c.colours.end()) + 1;
            return c;
        }
    }
    for (const std::string& t : toks) {
        try {
            c.colours.push_back(std::stoi(t));
        } catch (const std::exception&) {
            throw parse_error(1, "bad colour token '" + t + "'");
        }
    }
    if (static_cast<int>(c.colours.size()) != v)
        throw parse_error(1, "colouring has " + std::to_string(c.colours.size()) +
                                 " entries, expected " + std::to_string(v));
    int mx = -1;
    for (int x : c.colours) {
        if (x < 0) throw parse_error(1, "negative colour");
        mx = std::max(mx, x);
    }
    c.delta = mx + 1;
    return c;
}

Colouring load_colouring(const std::string& path, int v) {
    return parse_colouring(read_file(path), v);
}

std::string emit_colouring(const Colouring& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.colours.size(); ++i) os << (i ? " " : "") << c.colours[i];
    os << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace kirkman::io
