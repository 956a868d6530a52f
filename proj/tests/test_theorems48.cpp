#include "doctest.h"
#include "qwalk/closedforms.hpp"

#include <cmath>
#include <stdexcept>

using namespace qwalk;

TEST_CASE("class 8: H(x) against the axis series") {
    const int N = 15;
    WalkTable w = count_walks(class_representative(8), N);
    Laurent x = Laurent::x();
    BiSeries want = (slice(w, Slice::XAxis) * (x * x + Laurent(1)) - lift(origin_series(w))).shifted(1).trunc(N);
    CHECK(class8_H(N) == want);
    CHECK_FALSE(class8_H(N, false, true) == want);
    CHECK_FALSE(class8_H(N, true, false) == want);
    for (int n = 1; 2 * n - 1 <= N; ++n) CHECK(Rat(class8_a(n)) == at_xy(want, 1, 1).coeff(2 * n - 1));
}

TEST_CASE("class 8: M and the complete series") {
    const int N = 12;
    BiSeries M = class8_M(N);
    // M = t/y + t^2 + ...
    CHECK(M.coeff(0).is_zero());
    CHECK(M.coeff(1) == Laurent::y(-1));
    CHECK(M.coeff(2) == Laurent(1));
    WalkTable w = count_walks(class_representative(8), N);
    CHECK(class8_series(N).Q == complete_series(w));
    CHECK_FALSE(class8_series(N, Form::Printed).Q == complete_series(w));
}

TEST_CASE("class 9: S, R, T") {
    const int N = 13;
    WalkTable w = count_walks(class_representative(9), N);
    BiSeries S = class9_S(N);
    // [y^(n-2k) t^(2n-1)] S = 2 binom(n,k) binom(2n-2,n-1)/n; n = 1: 2y
    CHECK(S.coeff(1) == Laurent::y() * Laurent(2));
    CHECK(S.coeff(2).is_zero());
    // n = 2, k = 0, 1: 2y^2 + 4
    CHECK(S.coeff(3) == Laurent::y(2) * Laurent(2) + Laurent(4));
    CHECK(class9_R(N) == monomial_map(slice(w, Slice::YAxis), 0, 1, 1, 0));
    CHECK_THROWS_AS(class9_R(N, Form::Printed), std::domain_error);
    CHECK(class9_series(N).Q == complete_series(w));
    CHECK_FALSE(class9_series(N, Form::Printed).Q == complete_series(w));
    BiSeries T = class9_T(N);
    CHECK_FALSE(T == class9_T(N, Form::Printed));
}

TEST_CASE("iterated kernel for class 10") {
    BiSeries Y1 = iterated_Y1(7);
    CHECK(at_xy(Y1, 1, 1).trunc(4) == tseries({0, 1, 0, 2, 0}, 4));
    // one extra order is consumed by the 1/t in Y_{-1}
    BiSeries back = iterated_Yminus1_of(Y1, 6);
    CHECK(back == BiSeries(Laurent::x(), 6));
    const int order = 14;
    CHECK(iterated_terms_needed(order) == order / 2 + 1);
    IteratedKernel ik = iterated_kernel(iterated_terms_needed(order), order);
    WalkTable w = count_walks(class_representative(10), order);
    CHECK(ik.Qx0 == slice(w, Slice::XAxis));
    CHECK(ik.W == totals_series(w));
    for (int n = 0; n < static_cast<int>(ik.Y.size()); ++n) {
        // Y_n starts at x t^n
        if (ik.Y[n].order() >= n) CHECK(ik.Y[n].coeff(n) == Laurent::x());
    }
    CHECK_THROWS_AS(iterated_kernel(iterated_terms_needed(order) - 1, order), std::invalid_argument);
}

TEST_CASE("transcendence asymptotic ratio tends to 1") {
    AsymptoticReport r = transcendence_asymptotic(200);
    REQUIRE(r.n.size() >= 3);
    CHECK(r.all_positive);
    CHECK(r.monotone);
    CHECK(std::fabs(r.r.back() - 1.0) < 0.002);
    CHECK(std::fabs(r.richardson - 1.0) < 1e-4);
}

TEST_CASE("per-class verification of classes 8 to 10") {
    VerifyConfig cfg;
    cfg.theorem_order = 12;
    cfg.iterated_order = 14;
    for (int k : {8, 9, 10}) {
        ClassReport rep = verify_class(k, cfg);
        for (const Check& c : rep.checks) {
            INFO(k << " " << c.name << ": " << c.first_mismatch);
            CHECK(c.pass);
        }
    }
}
