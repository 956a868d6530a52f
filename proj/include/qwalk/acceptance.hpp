#pragma once

#include "qwalk/checks.hpp"
#include "qwalk/closedforms.hpp"
#include "qwalk/guess.hpp"

#include <string>
#include <vector>

namespace qwalk {

struct AcceptanceConfig {
    VerifyConfig verify;
    EvidenceConfig evidence;
    int group_bound = 200;
    int degree_bound = 64;
    int jobs = 1;
};

struct CriterionResult {
    CriterionResult() = default;
    CriterionResult(int i, std::string t) : id(i), title(std::move(t)) {}

    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    std::vector<Check> checks;
};

struct GroupTableRow {
    std::string dihedral;  // D2, D3 or D4
    int order = 0;
    std::string tau_x, tau_y;
};

// The generator table for the finite groups, as printed (x-bar written 1/x).
const std::vector<GroupTableRow>& group_table();

inline constexpr int kCriteria = 10;

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});
std::string criterion_line(const CriterionResult& r);

}  // namespace qwalk
