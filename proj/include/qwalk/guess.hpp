#pragma once

#include "qwalk/enumerate.hpp"
#include "qwalk/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qwalk {

// sum_j p_j(n) a(n+j) = 0 with p[j][k] the coefficient of n^k in p_j.
struct Recurrence {
    int order = 0;
    int degree = 0;
    std::vector<std::vector<Integer>> p;

    Integer eval(int j, long n) const;
    // Residual at n; zero when the recurrence holds there.
    Integer residual(const CountSequence& a, long n) const;
    bool holds_on(const CountSequence& a) const;
    // Terms generated from the first `order` entries of a; where the leading
    // polynomial vanishes the input value is taken instead.
    CountSequence regenerate(const CountSequence& a) const;
    std::string str() const;
};

struct GuessBounds {
    int max_order = 8;
    int max_degree = 8;
    int guard = 20;
};

struct GuessReport {
    std::string id;
    GuessBounds bounds;
    int terms = 0;
    std::optional<Recurrence> recurrence;
    bool found() const { return recurrence.has_value(); }
    std::string str() const;
};

// Minimum sequence length accepted by guess_p_recurrence.
int guess_terms_required(const GuessBounds& b);

// Searches ansatzes by increasing order + degree, then order; the first one
// verified on every term (including the last `guard` ones, which are not
// used for fitting) wins.  Throws std::invalid_argument on too few terms.
GuessReport guess_p_recurrence(const CountSequence& seq, const GuessBounds& b, const std::string& id = "");

struct EvidenceRow {
    int cls = 0;
    StepSet steps;
    bool singular = false;
    GuessReport guess;
    bool group_defined = false;
    bool group_finite = false;
    int group_order_or_bound = 0;
    bool symmetry_predicate = false;
    bool consistent() const;
};

struct EvidenceConfig {
    int n_terms = 150;
    GuessBounds bounds;
    int group_bound = 200;
    int degree_bound = 64;
    int jobs = 1;
};

std::vector<EvidenceRow> holonomy_evidence_survey(const EvidenceConfig& cfg);
std::string evidence_csv(const std::vector<EvidenceRow>& rows);

}  // namespace qwalk
