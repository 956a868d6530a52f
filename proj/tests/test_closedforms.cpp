#include "doctest.h"
#include "qwalk/closedforms.hpp"

using namespace qwalk;
using D = Direction;

namespace {

bool all_pass(const std::vector<Check>& cs) {
    bool ok = true;
    for (const auto& c : cs) {
        if (!c.pass) MESSAGE(c.name << ": " << c.first_mismatch);
        ok = ok && c.pass;
    }
    return ok;
}

}  // namespace

TEST_CASE("grammar series agrees with enumeration for the singular classes") {
    const int N = 10;
    for (int k = 1; k <= 4; ++k) {
        StepSet s = class_representative(k);
        WalkTable w = count_walks(s, N);
        GrammarSystem g = grammar_system(s, N);
        CHECK(g.S == complete_series(w));
        CHECK(grammar_residual_M(g).is_zero());
        CHECK(grammar_residual_S(g).is_zero());
        CHECK(singular_counting_series(s, N) == totals_series(w));
    }
}

TEST_CASE("Dyck paths: the grammar with C = 0") {
    // A = B = t, C = 0 gives M = sum C_n t^(2n)
    BiSeries A(std::vector<Laurent>{Laurent(0), Laurent(1)}, 0, kExact);
    BiSeries C(std::vector<Laurent>{}, 0, kExact);
    GrammarSystem g = grammar_system(A, A, C, 12);
    TSeries m = constant_part(g.M);
    for (int n = 0; n <= 6; ++n) CHECK(m.coeff(2 * n) == Rat(catalan(n)));
    for (int n = 0; n < 6; ++n) CHECK(m.coeff(2 * n + 1) == 0);
}

TEST_CASE("counting forms of the table") {
    const int N = 25;
    for (int k = 1; k <= 7; ++k) {
        TSeries tot = totals_series(count_walks(class_representative(k), N));
        CHECK(table_row_series(k, N, Form::Corrected, 0).W == tot);
    }
    // printed rows 2 and 3 carry each other's counting form
    TSeries t2 = totals_series(count_walks(class_representative(2), N));
    TSeries t3 = totals_series(count_walks(class_representative(3), N));
    CHECK(table_row_series(2, N, Form::Printed, 0).W == t3);
    CHECK(table_row_series(3, N, Form::Printed, 0).W == t2);
    CHECK_FALSE(table_row_series(5, N, Form::Printed, 0).W == totals_series(count_walks(class_representative(5), N)));
}

TEST_CASE("complete forms of the table against the enumeration on their frames") {
    const int N = 10;
    for (int k : {1, 2, 3, 4, 5}) {
        TableRow r = table_row_series(k, 0, Form::Printed, N);
        REQUIRE(r.Q.has_value());
        CHECK(r.Q->trunc(N) == complete_series(count_walks(r.frame, N)));
    }
}

TEST_CASE("hook formula") {
    CHECK(hook_count(2, 1, 0) == 2);
    CHECK(hook_count(2, 2, 2) == 5);
    CHECK(hook_count(3, 2, 1) == 16);
    CHECK(hook_count(1, 2, 0) == 0);
    CHECK(hook_count(0, 0, 0) == 1);
}

TEST_CASE("tandem counts") {
    CHECK(tandem_counts(1, 0, 1) == 1);
    CHECK(tandem_counts(1, 1, 0) == 0);
    Integer sum = 0;
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j) sum += tandem_counts(5, i, j);
    CHECK(sum == 21);
    // a shape that is not a partition contributes nothing
    CHECK(tandem_counts(2, 0, 0) == 0);
    CHECK(tandem_counts(3, 0, 0) == 1);
    WalkTable w = count_walks(parse_stepset("N,SE,W"), 9);
    for (int n = 0; n <= 9; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) CHECK(tandem_counts(n, i, j) == w.count(n, i, j));
    CHECK(tandem_series(9) == complete_series(w));
}

TEST_CASE("the displayed hook substitution swaps i and j") {
    // one step N ends at (0,1)
    CHECK(tandem_counts_printed(1, 1, 0) == 1);
    CHECK(tandem_counts_printed(1, 0, 1) == 0);
}

TEST_CASE("tableau of a walk") {
    std::vector<Direction> walk{D::N, D::N, D::SE, D::W, D::SE};
    auto tab = tableau(walk);
    REQUIRE(tab.size() == 3);
    CHECK(tab[0] == std::vector<int>{1, 2});
    CHECK(tab[1] == std::vector<int>{3, 5});
    CHECK(tab[2] == std::vector<int>{4});
    TableauShape sh = tableau_shape(walk);
    CHECK(sh == TableauShape{2, 2, 1});
    // endpoint (n2 - n3, n1 - n2) = (1, 0)
}

TEST_CASE("per-class verification passes for the singular and tandem classes") {
    VerifyConfig cfg;
    cfg.count_order = 20;
    cfg.complete_order = 10;
    for (int k = 1; k <= 4; ++k) CHECK(all_pass(singular_class_checks(k, cfg)));
    CHECK(all_pass(tandem_checks(cfg)));
}
