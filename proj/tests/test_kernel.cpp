#include "doctest.h"
#include "qwalk/closedforms.hpp"
#include "qwalk/kernel.hpp"

using namespace qwalk;

TEST_CASE("kernel coefficients of Kreweras steps") {
    // K = xy - t(x^2 y^2 + x + y):  a = -x^2, b0 = 1, c = -x
    KernelCoeffs k = kernel_coeffs(parse_stepset("NE,S,W"));
    CHECK(k.a == -Laurent::x(2));
    CHECK(k.b0 == Laurent(1));
    CHECK(k.c == -Laurent::x());
    BiSeries K = k.kernel();
    Laurent x = Laurent::x(), y = Laurent::y();
    CHECK(K.coeff(0) == x * y);
    CHECK(K.coeff(1) == -(x * x * y * y + x + y));
    CHECK(step_inventory(parse_stepset("NE,S,W")) == x * y + Laurent::monomial(1, 0, -1) + Laurent::x(-1));
}

TEST_CASE("small root agrees with the quadratic formula and annihilates the kernel") {
    for (int k = 5; k <= 11; ++k) {
        StepSet s = class_representative(k);
        YRoots r = y_roots(s, 10);
        CHECK(r.y0 == y0_by_radical(s, 10));
        CHECK(kernel_residual(s, r.y0).is_zero());
        CHECK(r.y0.coeff(0).is_zero());
    }
}

TEST_CASE("Kreweras small root starts t + t^2/x") {
    YRoots r = y_roots(parse_stepset("NE,S,W"), 4);
    CHECK(r.y0.coeff(1) == Laurent(1));
    CHECK(r.y0.coeff(2) == Laurent::x(-1));
}

TEST_CASE("canonical factorization reproduces the discriminant") {
    const int N = 12;
    BiSeries delta = reverse_kreweras_delta(N);
    CanonicalFactors f = canonical_factorization(delta);
    CHECK((f.plus * f.zero * f.minus - delta).is_zero());
    for (int n = 1; n <= N; ++n) {
        if (!f.plus.coeff(n).is_zero()) CHECK(f.plus.coeff(n).xmin() >= 1);
        if (!f.minus.coeff(n).is_zero()) CHECK(f.minus.coeff(n).xmax() <= -1);
        if (!f.zero.coeff(n).is_zero()) {
            CHECK(f.zero.coeff(n).xmin() == 0);
            CHECK(f.zero.coeff(n).xmax() == 0);
        }
    }
    CHECK(f.plus.coeff(0) == Laurent(1));
    CHECK(f.minus.coeff(0) == Laurent(1));
}

TEST_CASE("closed forms of the discriminant factors") {
    const int N = 12;
    CanonicalFactors f = canonical_factorization(reverse_kreweras_delta(N));
    CHECK(delta_plus_closed_form(N) == f.plus);
    CHECK(delta_minus_closed_form(N, Form::Corrected) == f.minus);
    // the printed sign of the quadratic term is wrong
    CHECK_FALSE(delta_minus_closed_form(N, Form::Printed) == f.minus);
}
