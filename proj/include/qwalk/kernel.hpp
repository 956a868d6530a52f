#pragma once

#include "qwalk/series.hpp"
#include "qwalk/stepset.hpp"

namespace qwalk {

// K(x,y) = xy - t sum x^(i+1) y^(j+1) = a(x) t y^2 + b(t,x) y + c(x) t.
// b is stored as b = x - t*b0(x).  The tilde triple is the same split with
// the roles of x and y exchanged (all three are polynomials in y).
struct KernelCoeffs {
    Laurent a, b0, c;
    Laurent at, bt0, ct;

    BiSeries b() const;   // x - t b0
    BiSeries bt() const;  // y - t bt0
    BiSeries kernel() const;  // as a series in t with x,y-polynomial coefficients
};

KernelCoeffs kernel_coeffs(const StepSet& s);

// Step inventory sum x^i y^j.
Laurent step_inventory(const StepSet& s);

// Large root Y1 = num / den with num carrying a principal part in t.
struct RootSeries {
    BiSeries num;
    Laurent den;
};

struct YRoots {
    BiSeries y0;
    RootSeries y1;
};

// Roots of K(x, Y) = 0 in Y through order N.
YRoots y_roots(const StepSet& s, int N);
// Same, from the quadratic formula; must agree with y_roots.
BiSeries y0_by_radical(const StepSet& s, int N);

// Residual K(x, Y0) through the order of Y0.
BiSeries kernel_residual(const StepSet& s, const BiSeries& y0);

struct CanonicalFactors {
    BiSeries plus, zero, minus;
};

// Delta = plus * zero * minus with plus in 1 + x Q[x][[t]], zero free of x,
// minus in 1 + (1/x) Q[1/x][[t]].
CanonicalFactors canonical_factorization(const BiSeries& delta);

}  // namespace qwalk
