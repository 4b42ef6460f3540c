#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kirkman {

using Block = std::vector<int>;

// Block design with uniform block size k on points 0..v-1.
// Blocks are stored strictly increasing; lambda is 1 throughout.
struct Design {
    int v = 0;
    int k = 3;
    std::vector<Block> blocks;
};

// Partition of the point set into groups (GDD / frame structure).
struct GroupPartition {
    std::vector<std::vector<int>> groups;

    // point -> group index; throws if groups do not cover 0..v-1
    std::vector<int> point_to_group(int v) const;
};

// One (partial) parallel class: block indices, plus the missing group
// index when the class is frame-style.
struct ResolutionClass {
    std::vector<int> block_indices;
    std::optional<int> missing_group;
};

struct Resolution {
    std::vector<ResolutionClass> classes;
};

// Point colouring with colours 0..delta-1.
struct Colouring {
    int delta = 0;
    std::vector<int> colours;
};

struct Permutation {
    std::vector<int> images;

    bool is_bijection() const;
    Permutation inverse() const;
};

// Report-style verification result. Collects up to kMaxProblems messages.
struct Report {
    bool ok = true;
    std::vector<std::string> problems;

    static constexpr std::size_t kMaxProblems = 16;

    void fail(std::string msg);
    explicit operator bool() const { return ok; }
};

struct PairBalanceReport {
    Report report;
    std::vector<std::pair<int, int>> offending_pairs;  // bounded like problems
};

struct WeakReport {
    Report report;
    std::vector<int> monochromatic_blocks;
};

struct RainbowReport {
    bool is_rainbow = false;
    int rainbow_class = -1;  // valid when is_rainbow
    Report report;
};

class contract_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------- verifiers

// Structural invariants: ranges, ascending blocks, block size, no duplicates.
Report validate_structure(const Design& d);

// Every unordered point pair in exactly one block (lambda = 1).
PairBalanceReport verify_pairwise_balance(const Design& d);

// Classes partition the block set; each class partitions V (full) or
// V minus its missing group (labelled).
Report verify_resolution(const Design& d, const GroupPartition* groups,
                         const Resolution& res);
Report verify_resolution(const Design& d, const Resolution& res);

// Cross-group pairs exactly once, no block meets a group twice.
Report verify_gdd(const Design& d, const GroupPartition& groups);

// verify_gdd + labelled resolution + each group of size g missed by
// exactly g/2 classes (so every group must have even size).
Report verify_frame(const Design& d, const GroupPartition& groups,
                    const Resolution& res);

// Convenience: pairwise balance + resolution + KTS counting identities
// b = v(v-1)/6, r = (v-1)/2. k must be 3.
Report verify_kts(const Design& d, const Resolution& res);

WeakReport is_weak(const Design& d, const Colouring& c);

// Multiset of nonzero colour-class sizes, ascending.
std::vector<int> colour_type(const Colouring& c);
// Sizes over all delta classes (including empty ones) differ by at most 1.
bool is_equitable(const Colouring& c);
// Render a type multiset in partition notation, e.g. "8^3 9^1".
std::string type_to_string(const std::vector<int>& type);

// Rainbow test for a weak 3-colouring of a KTS: classes of size v/3 and
// one parallel class entirely tricoloured. delta != 3 is a contract error.
RainbowReport rainbow_check(const Design& d, const Resolution& res,
                            const Colouring& c);

// sub_points induce a KTS whose classes are restrictions of host classes;
// every host block meets sub_points in 0, 1 or 3 points.
Report verify_subsystem(const Design& d, const Resolution& res,
                        const std::vector<int>& sub_points);

// Deleting one point of a KTS(v) gives a Kirkman frame of type 2^((v-1)/2):
// groups are the deleted blocks' remaining pairs, classes turn partial.
struct FrameParts {
    Design design;
    GroupPartition groups;
    Resolution resolution;
};
FrameParts delete_point(const Design& d, const Resolution& res, int p);

// ---------------------------------------------------------------- admissibility

enum class DesignKind { STS, KTS, QS, FrameUniform, FrameOneOdd };

// Necessary-and-sufficient existence conditions:
//   STS(v): v = 1,3 mod 6; KTS(v): v = 3 mod 6; Q(v): v = 1,4 mod 12;
//   frame g^u: u >= 4, g even, 3 | g(u-1);
//   frame g^u m^1: g even, 3 | gu, m = g mod 6, u >= 3,
//                  u = 3 -> m = g, u > 3 -> 0 < m <= g(u-1)/2.
bool admissible_sts(long long v);
bool admissible_kts(long long v);
bool admissible_qs(long long v);
bool admissible_frame(long long g, long long u);
bool admissible_frame_gum(long long g, long long u, long long m);

// ---------------------------------------------------------------- helpers

// Blocks sorted lexicographically; resolution/class indices remapped.
void canonicalize(Design& d);
void canonicalize(Design& d, Resolution& res);
bool same_canonical_blocks(const Design& a, const Design& b);

std::vector<int> group_sizes(const GroupPartition& g);
// Multiset notation of group sizes, e.g. "2^4".
std::string group_type(const GroupPartition& g);

}  // namespace kirkman
