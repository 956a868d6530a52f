#include "qwalk/closedforms.hpp"

namespace qwalk {

namespace {

using D = Direction;

TSeries poly_t(std::vector<Rat> c) { return TSeries(std::move(c), 0, kExact); }

// (a + b t - sqrt(disc)) / (c t (3t - 1)), all through t^N.
TSeries radical_row(const Rat& a, const Rat& b, const TSeries& disc, const Rat& c, int N) {
    TSeries num = poly_t({a, b}) - sqrt_series(disc.trunc(N + 2));
    TSeries den = poly_t({0, -c, 3 * c});
    return (num / den).trunc(N);
}

BiSeries bi(std::initializer_list<Laurent> c) { return BiSeries(std::vector<Laurent>(c), 0, kExact); }

Laurent mono(long c, int ex, int ey) { return Laurent::monomial(c, ex, ey); }

// (xy - F(x) - F(y)) / kernel, with F a series in x.
BiSeries assemble_symmetric(const BiSeries& F, const BiSeries& kernel, int N) {
    BiSeries Fy = monomial_map(F, 0, 0, 1, 0);
    BiSeries num = BiSeries(Laurent::monomial(1, 1, 1)) - F - Fy;
    return (num.trunc(N) / kernel).trunc(N);
}

TSeries row5_W(int N, Form form) {
    int W = N + 3;
    TSeries T = kreweras_T(W), t1 = TSeries::t(1);
    TSeries one(Rat(1));
    TSeries lin = form == Form::Printed ? poly_t({1, -1}) : poly_t({1, -3});
    TSeries num = T * lin + t1 * (T - one) * sqrt_series(one.trunc(W) - T * T) * Rat(2);
    TSeries den = t1 * T * poly_t({-1, 3});
    return (num / den).trunc(N);
}

TSeries row6_W(int N, Form form) {
    int W = N + 3;
    TSeries T = kreweras_T(W), t1 = TSeries::t(1);
    TSeries one(Rat(1));
    TSeries T2 = T * T, T3 = T2 * T;
    // (1 - T)(1 + T^2/4 + T^3/4) = U(1)
    TSeries U1 = (one - T) * (one + T2 * Rat(1, 4) + T3 * Rat(1, 4));
    TSeries rad = sqrt_series(U1);
    TSeries num;
    if (form == Form::Printed)
        num = (T2 * t1 + T - t1 * Rat(2)) * rad + T + T * t1;
    else
        num = (T2 * t1 + T * t1 - t1 * Rat(2)) * rad + T - T * t1 * Rat(3);
    TSeries den = t1 * T * poly_t({-1, 3});
    return (num / den).trunc(N);
}

}  // namespace

TableRow table_row_series(int k, int N, Form form, int complete_order) {
    int Nq = complete_order < 0 ? N : complete_order;
    int Wq = Nq + 3;
    TableRow r;
    r.row = k;
    BiSeries t1 = BiSeries::t(1);
    switch (k) {
        case 1: {
            r.W = (TSeries(Rat(1), N) / poly_t({1, -3})).trunc(N);
            r.frame = {D::N, D::NE, D::E};
            r.Q = (BiSeries(Laurent(1), Nq) / bi({Laurent(1), -(mono(1, 1, 0) + mono(1, 0, 1) + mono(1, 1, 1))}))
                      .trunc(Nq);
            break;
        }
        case 2:
        case 3: {
            TSeries w2 = radical_row(1, -4, poly_t({1, 0, -8}), 4, N);
            TSeries w3 = radical_row(1, -3, poly_t({1, -2, -3}), 2, N);
            bool two = (k == 2) == (form == Form::Printed);
            r.W = two ? w2 : w3;
            if (k == 2) {
                r.frame = {D::N, D::NE, D::SW};
                // D = 1 - 2yt + t^2 y^2 - 4t^2
                BiSeries disc = bi({Laurent(1), mono(-2, 0, 1), mono(1, 0, 2) - Laurent(4)});
                BiSeries rt = sqrt_series(disc.trunc(Wq));
                BiSeries num = -(bi({Laurent(-1), mono(1, 0, 1)}) + rt);
                BiSeries inner = bi({-mono(1, 1, 1), Laurent(2) + mono(1, 1, 2)}) + rt * mono(1, 1, 1);
                r.Q = (num / (t1 * inner)).trunc(Nq);
            } else {
                r.frame = {D::N, D::NE, D::SE};
                // E = 1 - 4 x t^2 - 4 x^2 t^2
                BiSeries disc = bi({Laurent(1), Laurent(0), mono(-4, 1, 0) + mono(-4, 2, 0)});
                BiSeries rt = sqrt_series(disc.trunc(Wq));
                BiSeries num = -(rt - BiSeries(Laurent(1)));
                BiSeries inner = bi({-Laurent::y(), mono(2, 1, 0)}) + rt * Laurent::y();
                r.Q = (num / (t1 * inner * (Laurent(1) + Laurent::x()))).trunc(Nq);
            }
            break;
        }
        case 4: {
            r.W = radical_row(1, -2, poly_t({1, 0, -8}), 2, N);
            r.frame = {D::N, D::S, D::SE};
            // E = 1 - 4 t^2 - 4 x t^2
            BiSeries disc = bi({Laurent(1), Laurent(0), Laurent(-4) + mono(-4, 1, 0)});
            BiSeries rt = sqrt_series(disc.trunc(Wq));
            BiSeries num = -(rt - BiSeries(Laurent(1)));
            BiSeries inner = bi({-Laurent::y(), Laurent(2) + mono(2, 1, 0)}) + rt * Laurent::y();
            r.Q = (num / (t1 * inner)).trunc(Nq);
            break;
        }
        case 5: {
            r.W = row5_W(N, form);
            r.frame = class_representative(5);
            BiSeries kernel = bi({mono(1, 1, 1), -(mono(1, 1, 0) + mono(1, 0, 1) + mono(1, 2, 2))});
            r.Q = assemble_symmetric(kreweras_R(Nq + 1), kernel, Nq);
            break;
        }
        case 6: {
            r.W = row6_W(N, form);
            r.frame = class_representative(6);
            BiSeries kernel = bi({mono(1, 1, 1), -(mono(1, 2, 1) + mono(1, 1, 2) + Laurent(1))});
            r.Q = assemble_symmetric(reverse_kreweras_S(Nq + 1, form), kernel, Nq);
            break;
        }
        case 7: {
            TSeries disc = poly_t({1, 1}) * poly_t({1, -3});
            TSeries num = poly_t({1, -1}) - sqrt_series(disc.trunc(N + 3));
            r.W = (num / poly_t({0, 0, 2})).trunc(N);
            r.frame = class_representative(7);
            std::vector<Laurent> c;
            for (int n = 0; n <= Nq; ++n) {
                Laurent l;
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; i + j <= n; ++j) {
                        Integer a = form == Form::Printed ? tandem_counts_printed(n, i, j) : tandem_counts(n, i, j);
                        if (sgn(a)) l += Laurent::monomial(Rat(a), i, j);
                    }
                c.push_back(l);
            }
            r.Q = BiSeries(std::move(c), 0, Nq);
            break;
        }
        default:
            throw std::invalid_argument("table rows with closed forms are 1..7");
    }
    return r;
}

}  // namespace qwalk
