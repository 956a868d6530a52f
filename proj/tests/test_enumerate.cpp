#include "doctest.h"
#include "qwalk/enumerate.hpp"

#include <map>
#include <sstream>

using namespace qwalk;

namespace {

// Every walk spelled out, for cross-checking the dynamic programme.
void brute(const StepSet& s, int x, int y, int left, std::map<std::tuple<int, int, int>, long>& out, int len) {
    out[{len, x, y}]++;
    if (left == 0) return;
    for (auto [i, j] : s.vectors())
        if (x + i >= 0 && y + j >= 0) brute(s, x + i, y + j, left - 1, out, len + 1);
}

std::vector<long> as_longs(const CountSequence& c) {
    std::vector<long> v;
    for (const auto& z : c) v.push_back(z.get_si());
    return v;
}

}  // namespace

TEST_CASE("layer counts agree with explicit walk enumeration") {
    for (int k = 1; k <= 11; ++k) {
        StepSet s = class_representative(k);
        const int n = 9;
        std::map<std::tuple<int, int, int>, long> bf;
        brute(s, 0, 0, n, bf, 0);
        WalkTable w = count_walks(s, n);
        long cells = 0;
        for (int len = 0; len <= n; ++len)
            for (int i = 0; i <= len; ++i)
                for (int j = 0; j <= len; ++j) {
                    auto it = bf.find({len, i, j});
                    long want = it == bf.end() ? 0 : it->second;
                    CHECK(w.count(len, i, j) == want);
                    cells += want;
                }
        long total = 0;
        for (auto& [key, c] : bf) total += c;
        CHECK(cells == total);
    }
}

TEST_CASE("known counting sequences") {
    CHECK(as_longs(count_totals(parse_stepset("N,SE,W"), 6)) == std::vector<long>{1, 1, 2, 4, 9, 21, 51});
    CHECK(as_longs(count_totals(parse_stepset("NE,SE,NW"), 3)) == std::vector<long>{1, 1, 3, 7});
    CHECK(as_longs(count_totals(parse_stepset("NE,S,W"), 0)) == std::vector<long>{1});
    CHECK(as_longs(count_totals(parse_stepset("N,NE,E"), 3)) == std::vector<long>{1, 3, 9, 27});
    // class 5 totals start 1, 1, 3
    CHECK(as_longs(count_totals(class_representative(5), 2)) == std::vector<long>{1, 1, 3});
    CHECK(as_longs(count_totals(parse_stepset("SE,S,SW"), 4)) == std::vector<long>{1, 0, 0, 0, 0});
}

TEST_CASE("streaming totals equal the table totals") {
    for (int k = 1; k <= 11; ++k) {
        StepSet s = class_representative(k);
        CHECK(count_totals(s, 20) == totals(count_walks(s, 20)));
    }
}

TEST_CASE("slices") {
    WalkTable w = count_walks(class_representative(5), 6);
    TSeries o = origin_series(w);
    CHECK(o.coeff(0) == 1);
    CHECK(o.coeff(3) == 2);
    CHECK(o.coeff(6) == 16);
    BiSeries x = slice(w, Slice::XAxis);
    CHECK(x.coeff(2) == Laurent::x());
    CHECK(x.coeff(3) == Laurent(2));
    // Kreweras is symmetric in the diagonal, so both axes agree
    CHECK(slice(w, Slice::YAxis) == x);
    BiSeries d = slice(w, Slice::Diagonal);
    CHECK(d.coeff(1) == Laurent::x());
    CHECK(d.coeff(2) == Laurent::x(2));
    CHECK(d.coeff(3) == Laurent(2) + Laurent::x(3));
    CHECK(at_xy(complete_series(w), 1, 1) == totals_series(w));
}

TEST_CASE("fundamental equation and kernel form hold for every class") {
    for (int k = 1; k <= 11; ++k) {
        StepSet s = class_representative(k);
        WalkTable w = count_walks(s, 12);
        CHECK(verify_fundamental_equation(s, w));
        CHECK(verify_kernel_form(s, w));
        // a table for a different step set fails
        StepSet other = class_representative(k % 11 + 1);
        CHECK_FALSE(verify_fundamental_equation(other, w));
    }
}

TEST_CASE("loop reversal: origin returns of s and rev(s) coincide") {
    for (int k = 1; k <= 11; ++k) {
        StepSet s = class_representative(k);
        CHECK(origin_series(count_walks(s, 14)) == origin_series(count_walks(rev(s), 14)));
    }
}

TEST_CASE("writers") {
    std::ostringstream csv;
    write_counts_csv(csv, count_totals(parse_stepset("N,SE,W"), 3));
    CHECK(csv.str().find("3,4") != std::string::npos);
    std::ostringstream js;
    write_table_jsonl(js, count_walks(parse_stepset("N,SE,W"), 2));
    CHECK(js.str().find("\"n\"") != std::string::npos);
}
