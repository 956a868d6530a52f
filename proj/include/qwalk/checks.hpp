#pragma once

#include "qwalk/series.hpp"

#include <string>
#include <vector>

namespace qwalk {

struct Check {
    std::string name;
    int order_tested = 0;
    bool pass = false;
    std::string first_mismatch;  // empty on success
};

struct ClassReport {
    std::string subject;
    std::vector<Check> checks;
    bool pass() const;
};

// Coefficientwise comparison over t^lo .. t^hi.
Check compare(const std::string& name, const TSeries& got, const TSeries& want, int lo, int hi);
Check compare(const std::string& name, const BiSeries& got, const BiSeries& want, int lo, int hi);
Check expect_zero(const std::string& name, const TSeries& r, int lo, int hi);
Check expect_zero(const std::string& name, const BiSeries& r, int lo, int hi);
Check expect_true(const std::string& name, bool ok, int order, const std::string& detail = "");

// Passes when the inner check failed; used to pin down misprinted formulas.
Check expect_mismatch(const std::string& name, const Check& inner);

std::string reports_json(const std::vector<ClassReport>& reports);
std::string reports_text(const std::vector<ClassReport>& reports);

}  // namespace qwalk
