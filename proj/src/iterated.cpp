#include "qwalk/closedforms.hpp"

#include <string>

namespace qwalk {

namespace {

// t z sum_m C_m t^(2m) (1 + z^2)^m, which is Y_{+1}(z) for z of valuation >= 0.
template <class C>
Series<C> y_plus(const Series<C>& z0, int N) {
    Series<C> z = z0.order() > N ? z0.trunc(N) : z0;
    Series<C> u = (Series<C>(CoeffOps<C>::one()) + z * z).shifted(2).trunc(N);
    Series<C> acc(CoeffOps<C>::one(), N);
    Series<C> pw(CoeffOps<C>::one(), N);
    for (int m = 1; 2 * m <= N; ++m) {
        pw = (pw * u).trunc(N);
        acc += pw * C(Rat(catalan(m)));
    }
    return (z * acc).shifted(1).trunc(N);
}

}  // namespace

BiSeries iterated_Y1(int N) { return y_plus(BiSeries(Laurent::x(), N), N); }

BiSeries iterated_Yminus1_of(const BiSeries& z, int N) {
    BiSeries one(Laurent(1));
    BiSeries first = (z.trunc(N + 1) / (one + z * z).trunc(N + 1)).shifted(-1);
    return (first - y_plus(z, N + 1)).trunc(N);
}

int iterated_terms_needed(int order) { return order / 2 + 1; }

IteratedKernel iterated_kernel(int n_terms, int order, int symbolic_order) {
    if (symbolic_order < 0) symbolic_order = order;
    int need = iterated_terms_needed(std::max(order, symbolic_order));
    if (n_terms < need)
        throw std::invalid_argument("iterated kernel: order " + std::to_string(std::max(order, symbolic_order)) +
                                    " needs at least " + std::to_string(need) + " terms, got " +
                                    std::to_string(n_terms));
    IteratedKernel r;
    const int Ns = symbolic_order + 1;
    r.Y.push_back(BiSeries(Laurent::x(), Ns));
    for (int n = 1; n <= n_terms; ++n) r.Y.push_back(y_plus(r.Y.back(), Ns));

    const int Nw = order + 1;
    r.Y_at_1.push_back(TSeries(Rat(1), Nw));
    for (int n = 1; n <= n_terms; ++n) r.Y_at_1.push_back(y_plus(r.Y_at_1.back(), Nw));

    BiSeries sum = BiSeries::zero(Ns);
    TSeries sum1 = TSeries::zero(Nw);
    for (int n = 0; n < n_terms; ++n) {
        BiSeries term = r.Y[n] * r.Y[n + 1];
        TSeries term1 = r.Y_at_1[n] * r.Y_at_1[n + 1];
        if (n % 2) {
            sum -= term;
            sum1 -= term1;
        } else {
            sum += term;
            sum1 += term1;
        }
    }
    r.Qx0 = (sum * Laurent::x(-2)).shifted(-1).trunc(symbolic_order);
    TSeries Q10 = sum1.shifted(-1).trunc(order);
    TSeries one(Rat(1));
    r.W = ((one - Q10.shifted(1) * Rat(2)) / tseries({1, -3})).trunc(order);
    return r;
}

std::vector<Check> iterated_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    const int Ns = cfg.theorem_order, Nw = cfg.iterated_order;
    StepSet s = class_representative(10);
    WalkTable w = count_walks(s, std::max(Ns, Nw));

    TSeries y1_at_1 = at_xy(iterated_Y1(4), 1, 1);
    out.push_back(compare("Y_{+1}(1) = t + 2t^3 + O(t^5)", y1_at_1, tseries({0, 1, 0, 2, 0}, 4), 0, 4));

    BiSeries Y1 = iterated_Y1(Ns + 1);
    BiSeries back = iterated_Yminus1_of(Y1, Ns);
    out.push_back(compare("Y_{-1}(Y_{+1}(x)) = x", back, BiSeries(Laurent::x(), Ns), 0, Ns));

    IteratedKernel ik = iterated_kernel(iterated_terms_needed(std::max(Ns, Nw)), Nw, Ns);

    // Y_n Y_{n-2} = t Y_{n-1} (Y_n + Y_{n-2}), the reciprocal recurrence cleared of denominators.
    bool rec = true;
    std::string detail;
    for (int n = 2; n <= std::min<int>(8, ik.Y.size() - 1); ++n) {
        BiSeries res = ik.Y[n] * ik.Y[n - 2] - (ik.Y[n - 1] * (ik.Y[n] + ik.Y[n - 2])).shifted(1).trunc(Ns);
        res = res.trunc(std::min(res.order(), Ns));
        if (!res.is_zero()) {
            rec = false;
            detail = "fails at n = " + std::to_string(n);
            break;
        }
    }
    out.push_back(expect_true("1/Y_n = 1/(t Y_{n-1}) - 1/Y_{n-2} for n <= 8", rec, Ns, detail));

    bool growth = true;
    for (std::size_t n = 0; n < ik.Y.size(); ++n)
        growth = growth && ik.Y[n].valuation() == static_cast<int>(n) && ik.Y[n].coeff(n) == Laurent::x();
    out.push_back(expect_true("Y_n = x t^n + higher order", growth, Ns));

    out.push_back(compare("Q(x,0) from the alternating sum against the x-axis slice", ik.Qx0,
                          slice(w, Slice::XAxis).trunc(Ns), 0, Ns));
    out.push_back(compare("(1 - 2t Q(1,0)) / (1 - 3t) against totals", ik.W, totals_series(w).trunc(Nw), 0, Nw));

    bool threw = false;
    try {
        iterated_kernel(2, Nw);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    out.push_back(expect_true("too few terms is rejected", threw, Nw));
    return out;
}

}  // namespace qwalk
