#include "qwalk/closedforms.hpp"

namespace qwalk {

namespace {

BiSeries bi(std::initializer_list<Laurent> c) { return BiSeries(std::vector<Laurent>(c), 0, kExact); }

Laurent mono(const Rat& c, int ex, int ey = 0) { return Laurent::monomial(c, ex, ey); }

BiSeries swap_vars(const BiSeries& f) { return monomial_map(f, 0, 1, 1, 0); }

// (1 - sqrt(1 - 4 t^2 u)) / (2t) for a Laurent polynomial u.
BiSeries catalan_root(const Laurent& u, int N) {
    BiSeries rt = sqrt_series(bi({Laurent(1), Laurent(0), u * Laurent(-4)}).trunc(N + 1));
    return ((BiSeries(Laurent(1)) - rt) * Laurent(Rat(1, 2))).shifted(-1).trunc(N);
}

}  // namespace

BiSeries class8_H(int N, bool odd_parity, bool with_catalan) {
    std::vector<Laurent> c(std::max(N + 1, 0));
    for (int n = 1; 2 * n - 1 <= N; ++n) {
        LaurentBuilder b(0, n + 1, 0, 0);
        for (int k = 1; k <= n + 1; ++k) {
            bool keep = odd_parity ? (n + k) % 2 == 1 : (k - n) % 2 == 0;
            if (!keep) continue;
            Rat v = ratio(binomial(n + 1, (n + k + 1) / 2) * k, n + 1);
            if (with_catalan) v *= catalan(n - 1);
            b.add(k, 0, v);
        }
        c[2 * n - 1] = b.build();
    }
    return BiSeries(std::move(c), 0, N);
}

BiSeries class8_M(int N) {
    int W = N + 2;
    Laurent y = Laurent::y();
    // sqrt(y^2 - 2y^3 t + t^2 y^4 - 4t^2) = y sqrt(1 - 2yt + (y^2 - 4/y^2) t^2)
    BiSeries rt = sqrt_series(bi({Laurent(1), y * Laurent(-2), y * y - mono(4, 0, -2)}).trunc(W)) * y;
    BiSeries num = bi({y, -y * y}) - rt;
    return (num * Laurent(Rat(1, 2))).shifted(-1).trunc(N);
}

BiSeries class8_Y1(int N) { return catalan_root(Laurent::x() + Laurent::x(-1), N); }

Class8 class8_series(int N, Form form) {
    Class8 r;
    r.H = class8_H(N + 1);
    r.M = class8_M(N + 1);
    BiSeries HM = substitute_x(r.H, swap_vars(r.M));
    BiSeries HMy = swap_vars(HM);  // H(M(y)) as a series in y
    Laurent x = Laurent::x(), y = Laurent::y();
    BiSeries mterm = form == Form::Corrected ? r.M * y : r.M;
    BiSeries num = BiSeries(x * y) - r.H - mterm + HMy;
    BiSeries kernel = bi({x * y, -(mono(1, 1, 2) + mono(1, 2) + Laurent(1))});
    r.Q = (num / kernel).trunc(N);
    r.H = r.H.trunc(N);
    r.M = r.M.trunc(N);
    return r;
}

BiSeries class9_S(int N) {
    std::vector<Laurent> c(std::max(N + 1, 0));
    for (int n = 1; 2 * n - 1 <= N; ++n) {
        Laurent l;
        for (int k = 0; 2 * k <= n; ++k)
            l += mono(ratio(Integer(2) * binomial(n, k) * binomial(2 * n - 2, n - 1), n), 0, n - 2 * k);
        c[2 * n - 1] = l;
    }
    return BiSeries(std::move(c), 0, N);
}

BiSeries class9_R(int N, Form form) {
    if (form == Form::Printed)
        throw std::domain_error("the printed R divides by 1 + y^2 and has no Laurent expansion; compare "
                                "(1 + y^2) R with (y^2 - 1) S instead");
    // G = X / t with X the root in x: X = (1 - sqrt(1 - 4t^2 (y + 1/y))) / (2t (y + 1/y))
    Laurent u = Laurent::y() + Laurent::y(-1);
    BiSeries C = catalan_root(u, N + 2);
    BiSeries G = (C.shifted(-1) / BiSeries(u)).trunc(N);
    BiSeries f = swap_vars(G * (Laurent::y() - Laurent::y(-1)));
    return swap_vars(part_split(f).pos) * Laurent::y(-1);
}

BiSeries class9_T(int N, Form form) {
    int W = N + 3;
    Laurent x = Laurent::x(), xb = Laurent::x(-1);
    // sqrt((x - t)^2 - 4 t^2 x^4) = x sqrt(1 - 2t/x + t^2/x^2 - 4 t^2 x^2)
    BiSeries rt = sqrt_series(bi({Laurent(1), xb * Laurent(-2), xb * xb - mono(4, 2)}).trunc(W)) * x;
    BiSeries num = bi({x, Laurent(-1)}) - rt;
    Rat scale = form == Form::Corrected ? Rat(1, 2) : Rat(1);
    return (num * mono(scale, -2)).shifted(-1).trunc(N);
}

Class9 class9_series(int N, Form form) {
    Class9 r;
    r.S = class9_S(N);
    BiSeries R = class9_R(N + 1);
    BiSeries Y = class9_T(N + 1, form);
    BiSeries RY = substitute_y(R, swap_vars(Y));  // R(Y(x))
    RY = swap_vars(RY);
    Laurent x = Laurent::x(), y = Laurent::y();
    BiSeries num = BiSeries(x * y) - Y * (BiSeries(x) - RY.shifted(1)) - (R * y).shifted(1);
    BiSeries kernel = bi({x * y, -(mono(1, 2, 2) + mono(1, 2) + y)});
    r.Q = (num / kernel).trunc(N);
    r.R = R.trunc(N);
    return r;
}

std::vector<Check> class8_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    const int N = cfg.theorem_order;
    StepSet s = class_representative(8);
    WalkTable w = count_walks(s, N + 1);
    BiSeries Qx0 = slice(w, Slice::XAxis);
    BiSeries Q00 = lift(origin_series(w));
    Laurent x = Laurent::x(), xb = Laurent::x(-1);
    // H = t (x^2 + 1) Q(x,0) - t Q(0,0)
    BiSeries H_oracle = (Qx0 * (x * x + Laurent(1)) - Q00).shifted(1).trunc(N);
    out.push_back(compare("H with n + k odd and factor C_(n-1)", class8_H(N), H_oracle, 0, N));
    out.push_back(expect_mismatch("H with k = n mod 2 as printed disagrees",
                                  compare("", class8_H(N, false, true), H_oracle, 0, N)));
    out.push_back(expect_mismatch("H without the factor C_(n-1) disagrees",
                                  compare("", class8_H(N, true, false), H_oracle, 0, N)));

    // (x - 1/x) Y1 = t (x^2 + 1) Q(x,0) - t (1/x^2 + 1) Q(1/x,0)
    BiSeries lhs = class8_Y1(N) * (x - xb);
    BiSeries Qbar = monomial_map(Qx0, -1, 0, 0, 1);
    BiSeries rhs = (Qx0 * (x * x + Laurent(1)) - Qbar * (xb * xb + Laurent(1))).shifted(1);
    out.push_back(compare("antisymmetric kernel identity", lhs, rhs.trunc(N), 0, N));

    BiSeries M = class8_M(N);
    Laurent y = Laurent::y(), yb = Laurent::y(-1);
    BiSeries shown = BiSeries(std::vector<Laurent>{Laurent(0), yb, Laurent(1), y + yb * yb * yb,
                                                   y * y + mono(3, 0, -2)},
                              0, 4);
    out.push_back(compare("M expansion through t^4", M.trunc(4), shown, 0, 4));
    BiSeries Kres = M * y - (M * (y * y)).shifted(1) - (M * M + BiSeries(Laurent(1))).shifted(1);
    out.push_back(expect_zero("M is the root of the kernel in x", Kres.trunc(N), 0, N));

    Class8 c = class8_series(N);
    BiSeries oracle = complete_series(w).trunc(N);
    out.push_back(compare("Q8(x,y) with numerator xy - H(x) - y M(y) + H(M(y))", c.Q, oracle, 0, N));
    out.push_back(compare("Q8(1,1) against totals", at_xy(c.Q, 1, 1), totals_series(w).trunc(N), 0, N));
    out.push_back(expect_mismatch("Q8(x,y) with M(y) in place of y M(y) as printed disagrees",
                                  compare("", class8_series(N, Form::Printed).Q, oracle, 0, N)));
    return out;
}

std::vector<Check> class9_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    const int N = cfg.theorem_order;
    StepSet s = class_representative(9);
    WalkTable w = count_walks(s, N + 1);
    BiSeries R_oracle = swap_vars(slice(w, Slice::YAxis)).trunc(N);
    BiSeries S = class9_S(N);

    bool odd_only = true;
    for (int n = 0; n <= N; n += 2) odd_only = odd_only && S.coeff(n).is_zero();
    bool parity = true;
    for (int m = 1; m <= N; m += 2) {
        int n = (m + 1) / 2;
        S.coeff(m).for_each([&](int ex, int ey, const Rat&) { parity = parity && ex == 0 && ey >= 0 && (n - ey) % 2 == 0; });
    }
    out.push_back(expect_true("S lives on odd powers of t", odd_only, N));
    out.push_back(expect_true("S has y-exponents n - 2k at t^(2n-1)", parity, N));

    BiSeries R = class9_R(N);
    out.push_back(compare("R = (1/y)((y - 1/y) G)^(>0) against the y-axis slice", R, R_oracle, 0, N));
    out.push_back(expect_true("R starts at 1", R.coeff(0) == Laurent(1), 0));
    Laurent y = Laurent::y();
    BiSeries printed_lhs = R_oracle * (y * y + Laurent(1));
    BiSeries printed_rhs = S * (y * y - Laurent(1));
    out.push_back(expect_mismatch("(y^2 + 1) R = (y^2 - 1) S as printed disagrees",
                                  compare("", printed_lhs, printed_rhs, 0, N)));

    Laurent x = Laurent::x();
    auto kernel_at = [&](const BiSeries& Y) {
        return (Y * x - ((Y * Y + BiSeries(Laurent(1))) * (x * x) + Y).shifted(1)).trunc(N);
    };
    out.push_back(expect_zero("T with denominator 2 t x^2 is the kernel root", kernel_at(class9_T(N)), 0, N));
    out.push_back(expect_mismatch("T with denominator t x^2 as printed is not a root",
                                  expect_zero("", kernel_at(class9_T(N, Form::Printed)), 0, N)));

    Class9 c = class9_series(N);
    BiSeries oracle = complete_series(w).trunc(N);
    out.push_back(compare("Q9(x,y) against the enumeration", c.Q, oracle, 0, N));
    out.push_back(compare("Q9(1,1) against totals", at_xy(c.Q, 1, 1), totals_series(w).trunc(N), 0, N));
    out.push_back(expect_mismatch("Q9(x,y) with the printed T disagrees",
                                  compare("", class9_series(N, Form::Printed).Q, oracle, 0, N)));
    return out;
}

}  // namespace qwalk
