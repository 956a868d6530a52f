#include "qwalk/stepset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qwalk {

std::pair<int, int> vec(Direction d) { return kDirectionVectors[static_cast<int>(d)]; }

std::optional<Direction> direction_of(int i, int j) {
    for (int k = 0; k < 8; ++k)
        if (kDirectionVectors[k] == std::make_pair(i, j)) return static_cast<Direction>(k);
    return std::nullopt;
}

StepSet::StepSet(std::initializer_list<Direction> ds) {
    for (auto d : ds) mask_ |= static_cast<std::uint8_t>(1u << static_cast<int>(d));
}

StepSet StepSet::from_vectors(const std::vector<std::pair<int, int>>& vs) {
    StepSet s;
    for (auto [i, j] : vs) {
        auto d = direction_of(i, j);
        if (!d) throw std::invalid_argument("not a unit step: (" + std::to_string(i) + "," + std::to_string(j) + ")");
        s = s.with(*d);
    }
    return s;
}

int StepSet::size() const { return std::popcount(static_cast<unsigned>(mask_)); }

bool StepSet::contains(int i, int j) const {
    auto d = direction_of(i, j);
    return d && contains(*d);
}

std::vector<std::pair<int, int>> StepSet::vectors() const {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < 8; ++k)
        if (mask_ & (1u << k)) out.push_back(kDirectionVectors[k]);
    return out;
}

std::vector<Direction> StepSet::directions() const {
    std::vector<Direction> out;
    for (int k = 0; k < 8; ++k)
        if (mask_ & (1u << k)) out.push_back(static_cast<Direction>(k));
    return out;
}

std::string StepSet::str() const {
    std::string out;
    for (int k = 0; k < 8; ++k)
        if (mask_ & (1u << k)) {
            if (!out.empty()) out += ",";
            out += kDirectionNames[k];
        }
    return out;
}

StepSet parse_stepset(const std::string& text) {
    StepSet s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        std::transform(tok.begin(), tok.end(), tok.begin(), ::toupper);
        if (tok.empty()) throw std::invalid_argument("empty step token in '" + text + "'");
        auto it = std::find_if(kDirectionNames.begin(), kDirectionNames.end(),
                               [&](const char* n) { return tok == n; });
        if (it == kDirectionNames.end()) throw std::invalid_argument("unknown step token '" + tok + "'");
        auto d = static_cast<Direction>(it - kDirectionNames.begin());
        if (s.contains(d)) throw std::invalid_argument("duplicate step token '" + tok + "'");
        s = s.with(d);
    }
    return s;
}

static StepSet transform(const StepSet& s, int a, int b, int c, int d) {
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : s.vectors()) out.emplace_back(a * i + b * j, c * i + d * j);
    return StepSet::from_vectors(out);
}

StepSet reflect(const StepSet& s) { return transform(s, 0, 1, 1, 0); }
StepSet rev(const StepSet& s) { return transform(s, -1, 0, 0, -1); }
StepSet mirror_x(const StepSet& s) { return transform(s, -1, 0, 0, 1); }
StepSet mirror_y(const StepSet& s) { return transform(s, 1, 0, 0, -1); }

SymmetryReport symmetry_report(const StepSet& s) {
    SymmetryReport r;
    r.x_axis_symmetric = mirror_y(s) == s;
    r.y_axis_symmetric = mirror_x(s) == s;
    r.rev_invariant = rev(s) == s;
    r.reflect_rev_invariant = reflect(rev(s)) == s;
    r.reflect_invariant = reflect(s) == s;
    return r;
}

bool has_valid_walk(const StepSet& s) {
    StepSet forbidden{Direction::SE, Direction::S, Direction::SW, Direction::W, Direction::NW};
    return !s.subset_of(forbidden);
}

bool is_singular(const StepSet& s) {
    using D = Direction;
    StepSet A{D::W, D::NW, D::N, D::NE, D::E};
    StepSet B{D::NE, D::N, D::NW, D::W, D::SW};
    for (const StepSet& f : {A, reflect(A), rev(A), reflect(rev(A)), B, reflect(B)})
        if (s.subset_of(f)) return true;
    return false;
}

StepSet playable_steps(const StepSet& s) {
    if (!has_valid_walk(s)) return StepSet();
    StepSet p = s;
    for (bool changed = true; changed;) {
        changed = false;
        auto vs = p.vectors();
        bool xup = std::any_of(vs.begin(), vs.end(), [](auto v) { return v.first > 0; });
        bool yup = std::any_of(vs.begin(), vs.end(), [](auto v) { return v.second > 0; });
        std::vector<std::pair<int, int>> keep;
        for (auto v : vs)
            if ((xup || v.first >= 0) && (yup || v.second >= 0)) keep.push_back(v);
        if (keep.size() != vs.size()) {
            p = StepSet::from_vectors(keep);
            changed = true;
        }
    }
    return p;
}

Governing governing_constraint(const StepSet& s) {
    StepSet p = playable_steps(s);
    auto vs = p.vectors();
    auto profile = [&](int axis) {
        Governing g{axis, 0, 0, 0};
        for (auto v : vs) {
            int c = axis == 0 ? v.first : v.second;
            (c > 0 ? g.up : c < 0 ? g.down : g.level)++;
        }
        return g;
    };
    Governing gx = profile(0), gy = profile(1);
    if (gx.down == 0 && gy.down == 0) return gy;  // no constraint binds
    if (gx.down == 0) return gy;
    if (gy.down == 0) return gx;
    bool y_ge_x = std::all_of(vs.begin(), vs.end(), [](auto v) { return v.second >= v.first; });
    bool x_ge_y = std::all_of(vs.begin(), vs.end(), [](auto v) { return v.first >= v.second; });
    if (y_ge_x) return gx;
    if (x_ge_y) return gy;
    throw std::invalid_argument("step set " + s.str() + " has two binding constraints");
}

static int inequality_type(const StepSet& s) {
    StepSet p = playable_steps(s);
    auto vs = p.vectors();
    bool any_down = std::any_of(vs.begin(), vs.end(), [](auto v) { return v.first < 0 || v.second < 0; });
    if (!any_down) return 1;
    Governing g = governing_constraint(s);
    if (g.up == 1 && g.down == 1) return 2;
    if (g.up == 2 && g.down == 1 && g.level == 0) return 3;
    if (g.up == 1 && g.down == 2 && g.level == 0) return 4;
    throw std::logic_error("unrecognised singular profile for " + s.str());
}

StepSet class_representative(int k) {
    using D = Direction;
    switch (k) {
        case 1: return {D::N, D::NE, D::E};
        case 2: return {D::N, D::NE, D::SW};
        case 3: return {D::NE, D::E, D::NW};
        case 4: return {D::NE, D::W, D::SW};
        case 5: return {D::NE, D::S, D::W};
        case 6: return {D::N, D::E, D::SW};
        case 7: return {D::N, D::SE, D::W};
        case 8: return {D::N, D::SE, D::SW};
        case 9: return {D::NE, D::SE, D::W};
        case 10: return {D::NE, D::SE, D::NW};
        case 11: return {D::N, D::NW, D::SE};
    }
    throw std::invalid_argument("class number must be in 1..11");
}

std::optional<int> parse_class_alias(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) return std::nullopt;
    int k = std::stoi(text);
    if (k < 1 || k > 11) return std::nullopt;
    return k;
}

ClassId classify(const StepSet& s) {
    if (s.size() != 3) throw std::invalid_argument("classify expects exactly three steps, got " + s.str());
    if (!has_valid_walk(s)) return ClassId::empty();
    if (is_singular(s)) return ClassId::singular(inequality_type(s));
    for (int k = 5; k <= 11; ++k) {
        StepSet r = class_representative(k);
        if (s == r || reflect(s) == r) return ClassId::nonsingular(k);
    }
    throw std::logic_error("non-singular step set " + s.str() + " matches no class representative");
}

std::string ClassId::str() const {
    switch (kind) {
        case Kind::Empty: return "empty";
        case Kind::Singular: return "singular-" + std::to_string(index);
        case Kind::NonSingular: return "class-" + std::to_string(index);
    }
    return "?";
}

ClassSweep enumerate_all_classes() {
    ClassSweep sw;
    std::set<std::uint8_t> seen;
    std::set<int> final_ids;
    for (unsigned m = 0; m < 256; ++m) {
        StepSet s(static_cast<std::uint8_t>(m));
        if (s.size() != 3) continue;
        SweepRecord rec{s, classify(s), reflect(s), symmetry_report(s)};
        sw.records.push_back(rec);
        switch (rec.cls.kind) {
            case ClassId::Kind::Empty: ++sw.empty_sets; continue;
            case ClassId::Kind::Singular: ++sw.singular_sets; break;
            case ClassId::Kind::NonSingular: ++sw.nonsingular_sets; break;
        }
        final_ids.insert(rec.cls.table_number());
        if (rec.symmetry.reflect_invariant) ++sw.reflect_invariant_nonempty;
        std::uint8_t key = std::min(s.mask(), rec.reflect_partner.mask());
        if (seen.insert(key).second) {
            ++sw.reflect_classes;
            if (rec.cls.kind == ClassId::Kind::Singular)
                ++sw.singular_reflect_classes;
            else
                ++sw.nonsingular_reflect_classes;
        }
    }
    sw.final_classes = static_cast<int>(final_ids.size());
    return sw;
}

}  // namespace qwalk
