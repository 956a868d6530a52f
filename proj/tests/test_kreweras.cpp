#include "doctest.h"
#include "qwalk/closedforms.hpp"

using namespace qwalk;

TEST_CASE("T = t(2 + T^3)") {
    const int N = 20;
    TSeries T = kreweras_T(N);
    CHECK(T.coeff(1) == 2);
    CHECK(T.coeff(4) == 8);
    CHECK((T - (TSeries(Rat(2)) + T * T * T).shifted(1).trunc(N)).is_zero());
}

TEST_CASE("Kreweras excursions") {
    const int N = 18;
    TSeries o = kreweras_origin(N);
    // 4^n binom(3n, n) / ((n+1)(2n+1)) at t^(3n)
    CHECK(o.coeff(0) == 1);
    CHECK(o.coeff(3) == 2);
    CHECK(o.coeff(6) == 16);
    CHECK(o.coeff(9) == 192);
    CHECK(o == origin_series(count_walks(class_representative(5), N)));
    CHECK_FALSE(kreweras_origin(N, Form::Printed) == o);
}

TEST_CASE("Kreweras axis and complete series") {
    const int N = 12;
    WalkTable w = count_walks(class_representative(5), N);
    CHECK(kreweras_axis(N) == slice(w, Slice::XAxis));
    CHECK(kreweras_complete(N) == complete_series(w));
    CHECK_FALSE(kreweras_complete(N, Form::Printed) == complete_series(w));
    // R = t x Q(x, 0)
    CHECK(kreweras_R(N).trunc(N) == (kreweras_axis(N) * Laurent::x()).shifted(1).trunc(N));
}

TEST_CASE("reverse Kreweras by loop reversal and by the factorization") {
    const int N = 12;
    WalkTable w = count_walks(class_representative(6), N);
    ReverseKreweras rk = reverse_kreweras(N);
    CHECK(rk.R00 == origin_series(w));
    CHECK(rk.R00 == kreweras_origin(N));
    CHECK(rk.Qx0 == slice(w, Slice::XAxis));
    CHECK(rk.Q == complete_series(w));
    for (const Check& c : reverse_kreweras_steps(N)) {
        INFO(c.name << ": " << c.first_mismatch);
        CHECK(c.pass);
    }
}

TEST_CASE("reverse Kreweras S(x) from the axis series") {
    const int N = 10;
    WalkTable w = count_walks(class_representative(6), N + 1);
    BiSeries axis = slice(w, Slice::XAxis);
    TSeries origin = origin_series(w);
    BiSeries want = (axis - lift(origin) * Rat(1, 2)).shifted(1).trunc(N);
    CHECK(reverse_kreweras_S(N) == want);
}

TEST_CASE("counting forms for classes 5 and 6") {
    const int N = 20;
    for (int k : {5, 6}) {
        TSeries tot = totals_series(count_walks(class_representative(k), N));
        CHECK(table_row_series(k, N, Form::Corrected, 0).W == tot);
        CHECK_FALSE(table_row_series(k, N, Form::Printed, 0).W == tot);
    }
}
