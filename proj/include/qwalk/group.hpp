#pragma once

#include "qwalk/poly2.hpp"
#include "qwalk/stepset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

struct RatFunc {
    Poly2 num, den;

    RatFunc() : num(0), den(1) {}
    RatFunc(Poly2 n, Poly2 d);  // reduces
    static RatFunc parse(const std::string& text);  // "num/den" or "num"
    int degree() const { return std::max(num.total_degree(), den.total_degree()); }
    std::string str() const;
};

bool operator==(const RatFunc& a, const RatFunc& b);

// (x, y) -> (first, second)
struct RationalMap {
    RatFunc first, second;

    static RationalMap identity();
    int degree() const { return std::max(first.degree(), second.degree()); }
    RationalMap swap_xy() const;  // conjugation by (x,y) -> (y,x)
    std::string str() const;
};

struct Generators {
    RationalMap tau_x, tau_y;
};

std::optional<Generators> try_generators(const StepSet& s);
Generators generators(const StepSet& s);

// f o g: substitute g into f.
RationalMap compose(const RationalMap& f, const RationalMap& g);
RatFunc substitute(const RatFunc& f, const RationalMap& g);
bool maps_equal(const RationalMap& f, const RationalMap& g);
bool ratfuncs_equal(const RatFunc& f, const RatFunc& g);

bool kernel_invariance_check(const StepSet& s);

struct OrbitResult {
    bool finite = false;
    int order = 0;        // when finite
    int bound = 0;        // element bound in force when not finite
    int max_degree_seen = 0;
    int dihedral_k() const { return order / 2; }
    std::string str() const;
};

OrbitResult group_order(const StepSet& s, int element_bound = 200, int degree_bound = 64);

// Degrees of (tau_x tau_y)^n for n = 1..count.
std::vector<int> alternating_word_degrees(const StepSet& s, int count, int degree_cap = 1000);
bool strictly_increasing(const std::vector<int>& v);

struct SurveyRow {
    StepSet steps;
    bool singular = false;
    bool constructible = false;
    OrbitResult orbit;
    SymmetryReport sym;
    bool kreweras_like = false;
    bool predicate() const;  // disjunction of the four combinatorial conditions
    bool consistent() const;
};

std::vector<SurveyRow> finite_group_survey(int element_bound = 200, int degree_bound = 64, int jobs = 1);
std::string survey_csv(const std::vector<SurveyRow>& rows);

}  // namespace qwalk
