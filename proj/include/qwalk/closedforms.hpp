#pragma once

#include "qwalk/checks.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/series.hpp"
#include "qwalk/stepset.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qwalk {

// Printed is a formula as displayed; Corrected is the version that agrees
// with the enumeration.
enum class Form { Printed, Corrected };

// T = t (2 + T^3), through t^N.
TSeries kreweras_T(int N);

// ---- singular walks -------------------------------------------------------

// W -> (MA)* M,  M -> eps | C M | A M B M, each step (i,j) weighted x^i y^j t.
struct GrammarSystem {
    BiSeries S, M, A, B, C;
};

// With track_xy false all weights are evaluated at x = y = 1.
GrammarSystem grammar_system(const StepSet& s, int N, bool track_xy = true);
// Weights given explicitly (A, B, C are exact polynomials in t).
GrammarSystem grammar_system(const BiSeries& A, const BiSeries& B, const BiSeries& C, int N);
BiSeries grammar_residual_M(const GrammarSystem& g);
BiSeries grammar_residual_S(const GrammarSystem& g);

BiSeries singular_series(const StepSet& s, int N);
TSeries singular_counting_series(const StepSet& s, int N);

// ---- Table rows 1..7 ------------------------------------------------------

struct TableRow {
    int row = 0;
    TSeries W;
    std::optional<BiSeries> Q;
    StepSet frame;  // step set the complete form describes
};

// The complete form is computed through complete_order (N when negative).
TableRow table_row_series(int k, int N, Form form = Form::Printed, int complete_order = -1);

// ---- Kreweras and reverse Kreweras ----------------------------------------

// R(x,t) = 1/(2t) - 1/x - (1/T - 1/x) sqrt(1 - x T^2), equal to t x Q5(x,0).
BiSeries kreweras_R(int N);
// Q5(x,0;t); throws std::logic_error if the poles at t = 0 or x = 0 survive.
BiSeries kreweras_axis(int N);
// Q5(0,0;t): Corrected (4T - T^4)/(8t), Printed (4T - T^2)/(8t).
TSeries kreweras_origin(int N, Form form = Form::Corrected);
// Corrected: (xy - t x Q5(x,0) - t y Q5(0,y)) / (xy - t(x + y + x^2 y^2)).
// Printed:   (xy - t Q5(x,0) - t Q5(0,y)) / (xy - t(x + x + x^2 y^2)).
BiSeries kreweras_complete(int N, Form form = Form::Corrected);

// S(x,t) with S(x) = t Q6(x,0) - t Q6(0,0)/2.  The printed version has 1/(tx)
// where the theorem for Q6(x,0) gives 1/x.
BiSeries reverse_kreweras_S(int N, Form form = Form::Corrected);

struct ReverseKreweras {
    TSeries R00;
    BiSeries Qx0;
    BiSeries Q;
};

ReverseKreweras reverse_kreweras(int N);
// Factorization, composite identity, diagonal identity, negative-part
// residual and the two recombination formulas.
std::vector<Check> reverse_kreweras_steps(int N);

// Delta = (1 - t/x)^2 - 4 t^2 x and the closed forms of its factors.
BiSeries reverse_kreweras_delta(int N);
BiSeries delta_minus_closed_form(int N, Form form);
BiSeries delta_plus_closed_form(int N);

// ---- tandem walks and tableaux ---------------------------------------------

struct TableauShape {
    int n1 = 0, n2 = 0, n3 = 0;
    int size() const { return n1 + n2 + n3; }
    friend bool operator==(const TableauShape&, const TableauShape&) = default;
};

// Number of standard Young tableaux of shape (n1, n2, n3); 0 if not a partition.
Integer hook_count(int n1, int n2, int n3);
// Walks of length n with steps N, SE, W ending at (i, j), by the hook formula.
Integer tandem_counts(int n, int i, int j);
// The substituted display with the roles of i and j as printed.
Integer tandem_counts_printed(int n, int i, int j);
// Rows bottom to top; label k goes on row 1, 2, 3 for N, SE, W.
std::vector<std::vector<int>> tableau(const std::vector<Direction>& walk);
TableauShape tableau_shape(const std::vector<Direction>& walk);
BiSeries tandem_series(int N);

// ---- classes 8 and 9 ------------------------------------------------------

// [x^k t^(2n-1)] H = C_(n-1) k/(n+1) binom(n+1, (n+k+1)/2) on n + k odd.
// odd_parity = false keeps k = n mod 2 instead, with the half-integer rounded
// down; catalan = false drops the factor C_(n-1).
BiSeries class8_H(int N, bool odd_parity = true, bool catalan = true);
// M(y,t) = (y - t y^2 - sqrt(y^2 - 2 y^3 t + t^2 y^4 - 4 t^2)) / (2t), in y.
BiSeries class8_M(int N);
// Y1 = (1 - sqrt(1 - 4 t^2 (x + 1/x))) / (2t).
BiSeries class8_Y1(int N);

struct Class8 {
    BiSeries H, M, Q;
};
// Corrected numerator xy - H(x) - y M(y) + H(M(y)); Printed uses M(y) for y M(y).
Class8 class8_series(int N, Form form = Form::Corrected);

// S with [y^(n-2k) t^(2n-1)] S = 2 binom(n,k) binom(2n-2,n-1) / n, in y.
BiSeries class9_S(int N);
// Printed R = (y^2 - 1) S / (y^2 + 1).  Corrected R = (1/y) ((y - 1/y) G)^(>0)
// with G = sum C_m (y + 1/y)^m t^(2m).
BiSeries class9_R(int N, Form form = Form::Corrected);
// Root in y of xy - t x^2 (y^2 + 1) - t y; Printed omits the factor 2.
BiSeries class9_T(int N, Form form = Form::Corrected);

struct Class9 {
    BiSeries S, R, Q;
};
Class9 class9_series(int N, Form form = Form::Corrected);

// ---- iterated kernel, class 10 --------------------------------------------

// Y_{+1}(x) = x (1 - sqrt(1 - 4 t^2 (1 + x^2))) / (2 t (1 + x^2)).
BiSeries iterated_Y1(int N);
// Y_{-1}(z) = z / (t (1 + z^2)) - Y_{+1}(z) for a series z of valuation >= 1.
BiSeries iterated_Yminus1_of(const BiSeries& z, int N);

struct IteratedKernel {
    std::vector<BiSeries> Y;       // Y_0 .. Y_n_terms
    std::vector<TSeries> Y_at_1;
    BiSeries Qx0;
    TSeries W;
};

int iterated_terms_needed(int order);
// Throws std::invalid_argument naming the required term count when n_terms is too small.
// symbolic_order bounds the x-dependent part (order when negative).
IteratedKernel iterated_kernel(int n_terms, int order, int symbolic_order = -1);

// ---- transcendence asymptotic ---------------------------------------------

// a(n) = [t^(2n-1)] H(1,t)
Integer class8_a(int n);

struct AsymptoticReport {
    std::vector<int> n;
    std::vector<double> r;
    double richardson = 0;  // 2 r(n_last) - r(n_last / 2)
    bool all_positive = false;
    bool monotone = false;
};

AsymptoticReport transcendence_asymptotic(int n_max);

// ---- per-class verification ------------------------------------------------

struct VerifyConfig {
    int count_order = 30;
    int complete_order = 14;
    int theorem_order = 20;
    int iterated_order = 25;
};

std::vector<Check> singular_class_checks(int k, const VerifyConfig& cfg);
std::vector<Check> kreweras_checks(const VerifyConfig& cfg);
std::vector<Check> reverse_kreweras_checks(const VerifyConfig& cfg);
std::vector<Check> tandem_checks(const VerifyConfig& cfg);
std::vector<Check> class8_checks(const VerifyConfig& cfg);
std::vector<Check> class9_checks(const VerifyConfig& cfg);
std::vector<Check> iterated_checks(const VerifyConfig& cfg);
// Functional-equation and loop-reversal checks shared by every class.
std::vector<Check> oracle_checks(int k, int n);

ClassReport verify_class(int k, const VerifyConfig& cfg = {});

}  // namespace qwalk
