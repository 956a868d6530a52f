#include "qwalk/closedforms.hpp"
#include "qwalk/kernel.hpp"

namespace qwalk {

namespace {

BiSeries bi(std::initializer_list<Laurent> c) { return BiSeries(std::vector<Laurent>(c), 0, kExact); }

Laurent mono(const Rat& c, int ex, int ey = 0) { return Laurent::monomial(c, ex, ey); }

const Laurent& xbar() {
    static const Laurent v = Laurent::x(-1);
    return v;
}

bool nonnegative_in_x(const BiSeries& f) {
    for (int n = f.valuation(); n <= f.last_stored(); ++n)
        if (!f.coeff(n).is_zero() && f.coeff(n).xmin() < 0) return false;
    return true;
}

BiSeries x_to_xbar(const BiSeries& f) { return monomial_map(f, -1, 0, 0, 1); }

BiSeries nonpositive_part(const BiSeries& f) { return part_split(f).nonpos(); }

}  // namespace

TSeries kreweras_T(int N) {
    std::function<TSeries(const TSeries&)> phi = [](const TSeries& T) {
        return (TSeries(Rat(2)) + T * T * T).shifted(1).trunc(T.order());
    };
    return solve_fixed_point(phi, N);
}

BiSeries kreweras_R(int N) {
    int W = N + 3;
    BiSeries T = lift(kreweras_T(W));
    BiSeries sq = sqrt_series(BiSeries(Laurent(1), W) - (T * T) * Laurent::x());
    BiSeries R = BiSeries::monomial(Laurent(Rat(1, 2)), -1) - BiSeries(xbar()) - (T.inverse() - BiSeries(xbar())) * sq;
    return R.trunc(N);
}

BiSeries kreweras_axis(int N) {
    BiSeries R = kreweras_R(N + 1);
    if (R.valuation() < 1) throw std::logic_error("Kreweras axis series: pole in t does not cancel");
    BiSeries q = (R * xbar()).shifted(-1);
    if (!nonnegative_in_x(q)) throw std::logic_error("Kreweras axis series: pole at x = 0 does not cancel");
    return q.trunc(N);
}

TSeries kreweras_origin(int N, Form form) {
    TSeries T = kreweras_T(N + 1);
    TSeries tail = form == Form::Corrected ? T * T * T * T : T * T;
    return ((T * Rat(4) - tail) * Rat(1, 8)).shifted(-1).trunc(N);
}

BiSeries kreweras_complete(int N, Form form) {
    BiSeries qx = kreweras_axis(N);
    BiSeries qy = monomial_map(qx, 0, 0, 1, 0);
    Laurent x = Laurent::x(), y = Laurent::y();
    BiSeries num, kernel;
    if (form == Form::Corrected) {
        num = BiSeries(x * y) - (qx * x + qy * y).shifted(1);
        kernel = bi({x * y, -(x + y + mono(1, 2, 2))});
    } else {
        num = BiSeries(x * y) - (qx + qy).shifted(1);
        kernel = bi({x * y, -(x + x + mono(1, 2, 2))});
    }
    return (num / kernel).trunc(N);
}

BiSeries reverse_kreweras_S(int N, Form form) {
    int W = N + 4;
    BiSeries T = lift(kreweras_T(W));
    BiSeries T2 = T * T, T3 = T2 * T;
    Laurent x = Laurent::x();
    BiSeries one(Laurent(1), W);
    BiSeries U = one - (T * (one + T3 * Laurent(Rat(1, 4)))) * x + T2 * mono(Rat(1, 4), 2);
    // (-2x/T)(1 - T^2/(2x)) + 1/x, or 1/(tx) in the printed table
    BiSeries last = form == Form::Corrected ? BiSeries(xbar()) : BiSeries::monomial(xbar(), -1);
    BiSeries A = T.inverse() * mono(-2, 1) + T + last;
    // (1 - tx - t/x^2) x / (2t)
    BiSeries tail = BiSeries(std::vector<Laurent>{mono(Rat(1, 2), 1), -(mono(Rat(1, 2), 2) + mono(Rat(1, 2), -1))},
                             -1, kExact);
    BiSeries S = A * sqrt_series(U) * Laurent(Rat(1, 2)) + tail;
    if (form == Form::Corrected && (S.valuation() < 1 || !nonnegative_in_x(S)))
        throw std::logic_error("reverse Kreweras S: poles do not cancel");
    return S.trunc(N);
}

ReverseKreweras reverse_kreweras(int N) {
    ReverseKreweras r;
    r.R00 = kreweras_origin(N);
    BiSeries S = reverse_kreweras_S(N + 1);
    r.Qx0 = (S + lift(r.R00).shifted(1) * Laurent(Rat(1, 2))).shifted(-1).trunc(N);
    Laurent x = Laurent::x(), y = Laurent::y();
    BiSeries Sy = monomial_map(S, 0, 0, 1, 0);
    BiSeries kernel = bi({x * y, -(mono(1, 2, 1) + mono(1, 1, 2) + Laurent(1))});
    r.Q = ((BiSeries(x * y) - S - Sy) / kernel).trunc(N);
    return r;
}

BiSeries reverse_kreweras_delta(int N) {
    BiSeries u = bi({Laurent(1), -xbar()});
    return (u * u - BiSeries::monomial(mono(4, 1), 2)).trunc(N);
}

BiSeries delta_minus_closed_form(int N, Form form) {
    BiSeries T = lift(kreweras_T(N));
    BiSeries one(Laurent(1), N);
    BiSeries X = T * (one + T * T * T * Laurent(Rat(1, 4)));
    BiSeries quad = T * T * mono(Rat(form == Form::Corrected ? -1 : 1, 4), -1);
    return one - (X + quad) * xbar();
}

BiSeries delta_plus_closed_form(int N) {
    BiSeries T = lift(kreweras_T(N));
    return BiSeries(Laurent(1), N) - T * T * Laurent::x();
}

std::vector<Check> reverse_kreweras_steps(int N) {
    std::vector<Check> out;
    const int M = N + 2;
    StepSet s = class_representative(6);
    WalkTable w = count_walks(s, M);
    BiSeries Q = complete_series(w);
    BiSeries R0 = slice(w, Slice::XAxis);
    BiSeries R00 = lift(origin_series(w));
    BiSeries Qd = slice(w, Slice::Diagonal);
    Laurent x = Laurent::x(), y = Laurent::y();
    BiSeries one(Laurent(1), M);

    BiSeries delta = reverse_kreweras_delta(M);
    CanonicalFactors cf = canonical_factorization(delta);
    out.push_back(compare("factorization reproduces Delta", cf.plus * cf.zero * cf.minus, delta, 0, N));
    out.push_back(compare("Delta_plus = 1 - x T^2", cf.plus, delta_plus_closed_form(N), 0, N));
    out.push_back(compare("Delta_minus = 1 - (1/x)(T(1 + T^3/4) - T^2/(4x))", cf.minus,
                          delta_minus_closed_form(N, Form::Corrected), 0, N));
    out.push_back(expect_mismatch("Delta_minus with +T^2/(4x) as printed disagrees",
                                  compare("", cf.minus, delta_minus_closed_form(N, Form::Printed), 0, N)));

    // x̄ȳ Q(x̄,ȳ) + y Q(x̄,xy) - x Q(xy,ȳ) = (x̄ȳ + y - x - 2t R0(x̄) + t R00) / K̄
    BiSeries kbar = bi({Laurent(1), -(xbar() + Laurent::y(-1) + x * y)});
    BiSeries lhs = monomial_map(Q, -1, 0, 0, -1) * mono(1, -1, -1) + monomial_map(Q, -1, 1, 0, 1) * y -
                   monomial_map(Q, 1, 0, 1, -1) * x;
    BiSeries R0bar = x_to_xbar(R0);
    BiSeries rhs = BiSeries(mono(1, -1, -1) + y - x) - (R0bar * Laurent(2) - R00).shifted(1);
    out.push_back(compare("composite identity", (kbar * lhs).trunc(N), rhs.trunc(N), 0, N));

    // -x Qd sqrt(Delta) = 2 Y0 - x - 2t R0(x̄) + t R00
    BiSeries root = sqrt_series(delta);
    BiSeries Y0 = (bi({Laurent(1), -xbar()}) - root) / BiSeries::monomial(mono(2, 1), 1);
    BiSeries core = Y0 * Laurent(2) - BiSeries(x) - (R0bar * Laurent(2) - R00).shifted(1);
    out.push_back(compare("diagonal identity", (-(Qd * root) * x).trunc(N), core.trunc(N), 0, N));

    BiSeries s0m = sqrt_series((cf.zero * cf.minus).trunc(M));
    BiSeries inv = s0m.inverse();
    // 0 = (-2t R0(x̄) + t R00)/sqrt(D0 D-) - ((x - 2Y0)/sqrt(D0 D-))^<=
    BiSeries bound = (-(R0bar * Laurent(2)) + R00).shifted(1) * inv;
    BiSeries neg = nonpositive_part((BiSeries(x) - Y0 * Laurent(2)) * inv);
    out.push_back(expect_zero("negative-part residual", (bound - neg).trunc(N), 0, N));

    // (x / sqrt(D0 D-))^<= sqrt(D0 D-) = x (1 - sqrt(D-))
    BiSeries lhs1 = nonpositive_part(inv * x) * s0m;
    BiSeries rhs1 = (one - sqrt_series(cf.minus)) * x;
    out.push_back(compare("recombination of x / sqrt(D0 D-)", lhs1.trunc(N), rhs1.trunc(N), 0, N));

    // ((1/(xt)) sqrt(D+))^<= = 1/(xt) - T^2/(2t)
    BiSeries T = lift(kreweras_T(M + 1));
    BiSeries lhs2 = nonpositive_part((sqrt_series(cf.plus) * xbar()).shifted(-1));
    BiSeries rhs2 = BiSeries::monomial(xbar(), -1) - (T * T * Laurent(Rat(1, 2))).shifted(-1);
    out.push_back(compare("negative part of sqrt(D+) / (xt)", lhs2.trunc(N), rhs2.trunc(N), -1, N));

    // (2Y0 / sqrt(D0 D-))^<= = (1/x)(1 - t/x)/t / sqrt(D0 D-) - (1/(xt) - T^2/(2t))
    BiSeries neg2 = nonpositive_part(Y0 * Laurent(2) * inv);
    BiSeries good = (bi({xbar(), -xbar() * xbar()}) * inv).shifted(-1) - rhs2;
    BiSeries printed = (bi({xbar(), Laurent(0), -xbar()}) * inv).shifted(-1) - rhs2;
    out.push_back(compare("negative part of 2 Y0 / sqrt(D0 D-)", neg2.trunc(N), good.trunc(N), -1, N));
    out.push_back(expect_mismatch("factor (1 - t^2) as printed disagrees",
                                  compare("", neg2.trunc(N), printed.trunc(N), -1, N)));

    // Clearing denominators: -2t R0(x̄) + t R00 = x(1 - sqrt(D-)) - (1/t)((1/x)(1 - t/x) - (1/x - T^2/2) sqrt(D0 D-))
    BiSeries assembled = rhs1 - (bi({xbar(), -xbar() * xbar()}) -
                                 (BiSeries(xbar()) - T * T * Laurent(Rat(1, 2))) * s0m)
                                    .shifted(-1);
    out.push_back(compare("boundary series from the negative parts", assembled.trunc(N),
                          (-(R0bar * Laurent(2)) + R00).shifted(1).trunc(N), 0, N));
    return out;
}

std::vector<Check> kreweras_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    const int N = cfg.theorem_order, Nq = cfg.complete_order, Nc = cfg.count_order;
    StepSet s = class_representative(5);
    WalkTable w = count_walks(s, std::max({N, Nq, Nc}));
    BiSeries axis;
    try {
        axis = kreweras_axis(N);
        out.push_back(expect_true("poles of the axis series cancel", true, N));
    } catch (const std::logic_error& e) {
        out.push_back(expect_true("poles of the axis series cancel", false, N, e.what()));
        return out;
    }
    out.push_back(compare("Q5(x,0) against the x-axis slice", axis, slice(w, Slice::XAxis).trunc(N), 0, N));
    TSeries origin = origin_series(w).trunc(N);
    out.push_back(compare("x -> 0 limit of Q5(x,0) against origin returns", constant_part(axis), origin, 0, N));
    out.push_back(compare("Q5(0,0) = (4T - T^4)/(8t)", kreweras_origin(N, Form::Corrected), origin, 0, N));
    out.push_back(expect_mismatch("Q5(0,0) = (4T - T^2)/(8t) as printed disagrees",
                                  compare("", kreweras_origin(N, Form::Printed), origin, 0, N)));
    BiSeries oracle_q = complete_series(w).trunc(Nq);
    out.push_back(compare("Q5(x,y) with denominator xy - t(x + y + x^2 y^2)", kreweras_complete(Nq, Form::Corrected),
                          oracle_q, 0, Nq));
    out.push_back(expect_mismatch("Q5(x,y) with numerator and denominator as printed disagrees",
                                  compare("", kreweras_complete(Nq, Form::Printed), oracle_q, 0, Nq)));
    TSeries tot = totals_series(w).trunc(Nc);
    out.push_back(compare("table counting form with T(1 - 3t)", table_row_series(5, Nc, Form::Corrected, 0).W, tot, 0,
                          Nc));
    TableRow printed = table_row_series(5, Nc, Form::Printed, Nq);
    out.push_back(expect_mismatch("table counting form with T(1 - t) as printed disagrees",
                                  compare("", printed.W, tot, 0, Nc)));
    out.push_back(compare("table complete form", *printed.Q, oracle_q, 0, Nq));
    return out;
}

std::vector<Check> reverse_kreweras_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    const int N = cfg.theorem_order, Nq = cfg.complete_order, Nc = cfg.count_order;
    StepSet s = class_representative(6);
    WalkTable w = count_walks(s, std::max({N, Nq, Nc}));
    WalkTable wk = count_walks(class_representative(5), N);
    ReverseKreweras rk = reverse_kreweras(N);
    TSeries origin = origin_series(w).trunc(N);
    out.push_back(compare("R00 by loop reversal from Kreweras origin returns", origin_series(wk), origin, 0, N));
    out.push_back(compare("R00 = (4T - T^4)/(8t)", rk.R00, origin, 0, N));
    out.push_back(compare("Q6(x,0) against the x-axis slice", rk.Qx0, slice(w, Slice::XAxis).trunc(N), 0, N));

    // Opposite branch of sqrt(U).
    BiSeries S = reverse_kreweras_S(N + 1);
    BiSeries tail = BiSeries(std::vector<Laurent>{mono(Rat(1, 2), 1), -(mono(Rat(1, 2), 2) + mono(Rat(1, 2), -1))},
                             -1, kExact);
    BiSeries flipped = tail * Laurent(2) - S;
    BiSeries axis_oracle = slice(w, Slice::XAxis).trunc(N);
    BiSeries flipped_axis = (flipped + lift(rk.R00).shifted(1) * Laurent(Rat(1, 2))).shifted(-1);
    out.push_back(expect_mismatch("other branch of sqrt(U) disagrees",
                                  compare("", flipped_axis.trunc(N), axis_oracle, -2, N)));

    out.push_back(compare("Q6(1,1) against totals", at_xy(rk.Q, 1, 1), totals_series(w).trunc(N), 0, N));
    out.push_back(compare("Q6(x,y) against the enumeration", rk.Q, complete_series(w).trunc(N), 0, N));
    for (auto& c : reverse_kreweras_steps(N)) out.push_back(std::move(c));

    TSeries tot = totals_series(w).trunc(Nc);
    out.push_back(compare("table counting form, corrected", table_row_series(6, Nc, Form::Corrected, 0).W, tot, 0, Nc));
    TableRow printed = table_row_series(6, Nc, Form::Printed, Nq);
    out.push_back(expect_mismatch("table counting form as printed disagrees", compare("", printed.W, tot, 0, Nc)));
    BiSeries oracle_q = complete_series(w).trunc(Nq);
    out.push_back(compare("table complete form with S(x) from Q6(x,0)", *table_row_series(6, 0, Form::Corrected, Nq).Q,
                          oracle_q, 0, Nq));
    out.push_back(expect_mismatch("table complete form with 1/(tx) in S as printed disagrees",
                                  compare("", *printed.Q, oracle_q, 0, Nq)));
    return out;
}

}  // namespace qwalk
