#include "qwalk/checks.hpp"
#include "qwalk/stepset.hpp"

#include "json.hpp"

#include <sstream>

namespace qwalk {

using nlohmann::json;

bool ClassReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::string monomial_name(int n, int ex, int ey) {
    std::string s = "t^" + std::to_string(n);
    if (ex) s += " x^" + std::to_string(ex);
    if (ey) s += " y^" + std::to_string(ey);
    return s;
}

template <class C>
std::string order_problem(const Series<C>& got, const Series<C>& want, int hi) {
    if (got.order() < hi) return "computed only through t^" + std::to_string(got.order());
    if (want.order() < hi) return "reference known only through t^" + std::to_string(want.order());
    return "";
}

}  // namespace

Check compare(const std::string& name, const TSeries& got, const TSeries& want, int lo, int hi) {
    Check c{name, hi, false, order_problem(got, want, hi)};
    if (!c.first_mismatch.empty()) return c;
    for (int n = lo; n <= hi; ++n) {
        if (got.coeff(n) != want.coeff(n)) {
            c.first_mismatch = "t^" + std::to_string(n) + ": got " + got.coeff(n).get_str() + ", expected " +
                               want.coeff(n).get_str();
            return c;
        }
    }
    c.pass = true;
    return c;
}

Check compare(const std::string& name, const BiSeries& got, const BiSeries& want, int lo, int hi) {
    Check c{name, hi, false, order_problem(got, want, hi)};
    if (!c.first_mismatch.empty()) return c;
    for (int n = lo; n <= hi; ++n) {
        const Laurent& a = got.coeff(n);
        const Laurent& b = want.coeff(n);
        if (a == b) continue;
        Laurent d = a - b;
        bool done = false;
        d.for_each([&](int ex, int ey, const Rat&) {
            if (done) return;
            done = true;
            c.first_mismatch = monomial_name(n, ex, ey) + ": got " + a.coeff(ex, ey).get_str() + ", expected " +
                               b.coeff(ex, ey).get_str();
        });
        return c;
    }
    c.pass = true;
    return c;
}

Check expect_zero(const std::string& name, const TSeries& r, int lo, int hi) {
    return compare(name, r, TSeries::zero(r.order()), lo, hi);
}

Check expect_zero(const std::string& name, const BiSeries& r, int lo, int hi) {
    return compare(name, r, BiSeries::zero(r.order()), lo, hi);
}

Check expect_true(const std::string& name, bool ok, int order, const std::string& detail) {
    return {name, order, ok, ok ? "" : (detail.empty() ? "condition is false" : detail)};
}

Check expect_mismatch(const std::string& name, const Check& inner) {
    if (inner.pass) return {name, inner.order_tested, false, "printed form agrees; no disagreement found"};
    return {name, inner.order_tested, true, ""};
}

std::string reports_json(const std::vector<ClassReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name},
                              {"order_tested", c.order_tested},
                              {"pass", c.pass},
                              {"first_mismatch", c.first_mismatch.empty() ? json(nullptr) : json(c.first_mismatch)}});
        out.push_back({{"class", r.subject}, {"checks", checks}});
    }
    return out.dump(2) + "\n";
}

std::string reports_text(const std::vector<ClassReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << r.subject << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : r.checks) {
            os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << " (t^" << c.order_tested << ")";
            if (!c.first_mismatch.empty()) os << "  " << c.first_mismatch;
            os << "\n";
        }
    }
    return os.str();
}

std::string sweep_json(const ClassSweep& sweep) {
    json recs = json::array();
    for (const auto& r : sweep.records) {
        recs.push_back({{"steps", r.steps.str()},
                        {"class", r.cls.str()},
                        {"table_number", r.cls.table_number()},
                        {"reflect_partner", r.reflect_partner.str()},
                        {"x_axis_symmetric", r.symmetry.x_axis_symmetric},
                        {"y_axis_symmetric", r.symmetry.y_axis_symmetric},
                        {"rev_invariant", r.symmetry.rev_invariant},
                        {"reflect_rev_invariant", r.symmetry.reflect_rev_invariant},
                        {"reflect_invariant", r.symmetry.reflect_invariant}});
    }
    json out = {{"empty_sets", sweep.empty_sets},
                {"singular_sets", sweep.singular_sets},
                {"nonsingular_sets", sweep.nonsingular_sets},
                {"reflect_invariant_nonempty", sweep.reflect_invariant_nonempty},
                {"reflect_classes", sweep.reflect_classes},
                {"singular_reflect_classes", sweep.singular_reflect_classes},
                {"nonsingular_reflect_classes", sweep.nonsingular_reflect_classes},
                {"final_classes", sweep.final_classes},
                {"records", recs}};
    return out.dump(2) + "\n";
}

}  // namespace qwalk
