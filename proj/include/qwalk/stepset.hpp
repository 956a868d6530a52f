#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

enum class Direction : int { N = 0, NE, E, SE, S, SW, W, NW };

inline constexpr std::array<const char*, 8> kDirectionNames = {"N", "NE", "E", "SE", "S", "SW", "W", "NW"};
inline constexpr std::array<std::pair<int, int>, 8> kDirectionVectors = {
    {{0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}}};

std::pair<int, int> vec(Direction d);
std::optional<Direction> direction_of(int i, int j);

// A subset of the eight directions, held as a bitmask in the order
// N, NE, E, SE, S, SW, W, NW.
class StepSet {
public:
    StepSet() = default;
    explicit StepSet(std::uint8_t mask) : mask_(mask) {}
    StepSet(std::initializer_list<Direction> ds);

    static StepSet from_vectors(const std::vector<std::pair<int, int>>& vs);

    std::uint8_t mask() const { return mask_; }
    int size() const;
    bool contains(Direction d) const { return mask_ & (1u << static_cast<int>(d)); }
    bool contains(int i, int j) const;
    std::vector<std::pair<int, int>> vectors() const;
    std::vector<Direction> directions() const;

    StepSet with(Direction d) const { return StepSet(static_cast<std::uint8_t>(mask_ | (1u << static_cast<int>(d)))); }
    bool subset_of(const StepSet& o) const { return (mask_ & ~o.mask_) == 0; }

    friend bool operator==(const StepSet& a, const StepSet& b) { return a.mask_ == b.mask_; }
    friend bool operator<(const StepSet& a, const StepSet& b) { return a.mask_ < b.mask_; }

    std::string str() const;

private:
    std::uint8_t mask_ = 0;
};

StepSet parse_stepset(const std::string& text);
StepSet reflect(const StepSet& s);
StepSet rev(const StepSet& s);
// (i,j) -> (-i,j) and (i,-j)
StepSet mirror_x(const StepSet& s);
StepSet mirror_y(const StepSet& s);

struct SymmetryReport {
    bool x_axis_symmetric = false;  // invariant under (i,j) -> (i,-j)
    bool y_axis_symmetric = false;  // invariant under (i,j) -> (-i,j)
    bool rev_invariant = false;
    bool reflect_rev_invariant = false;
    bool reflect_invariant = false;
};

SymmetryReport symmetry_report(const StepSet& s);

bool has_valid_walk(const StepSet& s);
bool is_singular(const StepSet& s);

// Steps that can actually occur in some quarter-plane walk.
StepSet playable_steps(const StepSet& s);

struct ClassId {
    enum class Kind { Empty, Singular, NonSingular };
    Kind kind = Kind::Empty;
    int index = 0;  // inequality type 1..4 or class 5..11

    static ClassId empty() { return {Kind::Empty, 0}; }
    static ClassId singular(int k) { return {Kind::Singular, k}; }
    static ClassId nonsingular(int k) { return {Kind::NonSingular, k}; }
    // Table number 1..11, or 0 for the empty class.
    int table_number() const { return kind == Kind::Empty ? 0 : index; }
    std::string str() const;
    friend bool operator==(const ClassId& a, const ClassId& b) { return a.kind == b.kind && a.index == b.index; }
};

// Coordinate whose constraint governs a singular walk: 0 for x, 1 for y.
struct Governing {
    int axis;
    int up, down, level;
};
Governing governing_constraint(const StepSet& s);

ClassId classify(const StepSet& s);

// Canonical step set of each class 1..11.
StepSet class_representative(int k);
std::optional<int> parse_class_alias(const std::string& text);

struct SweepRecord {
    StepSet steps;
    ClassId cls;
    StepSet reflect_partner;
    SymmetryReport symmetry;
};

struct ClassSweep {
    std::vector<SweepRecord> records;  // all 56 triples
    int empty_sets = 0;
    int singular_sets = 0;
    int nonsingular_sets = 0;
    int reflect_invariant_nonempty = 0;
    int reflect_classes = 0;           // among non-empty triples
    int singular_reflect_classes = 0;
    int nonsingular_reflect_classes = 0;
    int final_classes = 0;
};

ClassSweep enumerate_all_classes();
std::string sweep_json(const ClassSweep& sweep);

}  // namespace qwalk
