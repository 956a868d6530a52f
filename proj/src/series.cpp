#include "qwalk/series.hpp"

#include <map>
#include <sstream>

namespace qwalk {

TSeries tseries(const std::vector<Rat>& coeffs, int order) { return TSeries(coeffs, 0, order); }

BiSeries scale(const BiSeries& f, const Laurent& c) { return f * c; }

BiSeries lift(const TSeries& f) {
    return BiSeries(f.map([](const Rat& r) { return Laurent(r); }));
}

TSeries constant_part(const BiSeries& f) {
    return f.map([](const Laurent& l) { return l.coeff(0, 0); });
}

BiSeries map_laurent(const BiSeries& f, const std::function<Laurent(const Laurent&)>& g) {
    return f.map([&](const Laurent& l) { return g(l); });
}

BiSeries monomial_map(const BiSeries& f, int a, int b, int c, int d) {
    return f.map([=](const Laurent& l) { return l.monomial_map(a, b, c, d); });
}

BiSeries at_x(const BiSeries& f, const Rat& v) {
    return f.map([&](const Laurent& l) { return l.at_x(v); });
}

BiSeries at_y(const BiSeries& f, const Rat& v) {
    return f.map([&](const Laurent& l) { return l.at_y(v); });
}

TSeries at_xy(const BiSeries& f, const Rat& x, const Rat& y) {
    return f.map([&](const Laurent& l) { return l.at_x(x).at_y(y).constant_term(); });
}

BiSeries substitute_x(const BiSeries& f, const BiSeries& s) {
    // Exponent range of x over the stored coefficients.
    int imin = 0, imax = 0;
    bool any = false;
    for (int n = f.valuation(); n <= f.last_stored(); ++n) {
        const Laurent& c = f.coeff(n);
        if (c.is_zero()) continue;
        imin = any ? std::min(imin, c.xmin()) : c.xmin();
        imax = any ? std::max(imax, c.xmax()) : c.xmax();
        any = true;
    }
    if (!any) return BiSeries::zero(f.order());

    std::map<int, BiSeries> powers;
    powers.emplace(0, BiSeries(Laurent(1)));
    if (imax > 0) {
        BiSeries p = s;
        for (int i = 1; i <= imax; ++i) {
            powers.emplace(i, p);
            if (i < imax) p = p * s;
        }
    }
    if (imin < 0) {
        BiSeries inv = s.inverse();
        BiSeries p = inv;
        for (int i = -1; i >= imin; --i) {
            powers.emplace(i, p);
            if (i > imin) p = p * inv;
        }
    }

    // Order of the result: every term is honest, and the unknown tail of f
    // is assumed to keep x-exponents within the observed window.
    int order = kExact;
    if (!f.is_exact()) {
        int sv = s.valuation();
        int tail = f.order() + 1 + std::min({0, std::min(imin, 0) * sv, std::max(imax, 0) * sv});
        order = tail - 1;
    }
    struct Term {
        int n;
        Laurent row;
        int power;
    };
    std::vector<Term> terms;
    for (int n = f.valuation(); n <= f.last_stored(); ++n) {
        const Laurent& c = f.coeff(n);
        if (c.is_zero()) continue;
        for (int i = c.xmin(); i <= c.xmax(); ++i) {
            Laurent row = c.filtered([i](int ex, int) { return ex == i; }).shifted(-i, 0);
            if (row.is_zero()) continue;
            const BiSeries& p = powers.at(i);
            if (!p.is_exact()) order = std::min(order, n + p.order());
            terms.push_back({n, std::move(row), i});
        }
    }
    BiSeries out = BiSeries::zero(order);
    for (auto& t : terms) {
        BiSeries piece = (powers.at(t.power) * t.row).shifted(t.n);
        if (order < kExact) piece = piece.trunc(order);
        out = out + piece;
    }
    return out;
}

BiSeries substitute_y(const BiSeries& f, const BiSeries& s) {
    BiSeries g = f.map([](const Laurent& l) { return l.swap_xy(); });
    BiSeries sw = s.map([](const Laurent& l) { return l.swap_xy(); });
    return substitute_x(g, sw).map([](const Laurent& l) { return l.swap_xy(); });
}

PartSplit part_split(const BiSeries& f) {
    return {f.map([](const Laurent& l) { return l.x_positive(); }),
            f.map([](const Laurent& l) { return l.x_zero(); }),
            f.map([](const Laurent& l) { return l.x_negative(); })};
}

void assert_linear_window(const BiSeries& f, int slope, int offset, const std::string& what) {
    for (int n = f.valuation(); n <= f.last_stored(); ++n) {
        const Laurent& c = f.coeff(n);
        if (c.is_zero()) continue;
        int bound = slope * std::abs(n) + offset;
        int worst = std::max({std::abs(c.xmin()), std::abs(c.xmax()), std::abs(c.ymin()), std::abs(c.ymax())});
        if (worst > bound)
            throw std::runtime_error(what + ": exponent window " + std::to_string(worst) + " exceeds bound " +
                                     std::to_string(bound) + " at t^" + std::to_string(n));
    }
}

std::string to_string(const TSeries& f, int upto) {
    std::ostringstream os;
    int hi = f.is_exact() ? f.last_stored() : f.order();
    if (upto >= 0) hi = std::min(hi, upto);
    bool first = true;
    for (int n = f.valuation(); n <= hi; ++n) {
        const Rat& c = f.coeff(n);
        if (is_zero(c)) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rat a = abs(c);
        if (a != 1 || n == 0) os << a.get_str();
        if (n != 0) os << (a != 1 ? "*" : "") << "t" << (n != 1 ? "^" + std::to_string(n) : "");
    }
    if (first) os << "0";
    if (!f.is_exact()) os << " + O(t^" << f.order() + 1 << ")";
    return os.str();
}

std::string to_string(const BiSeries& f, int upto) {
    std::ostringstream os;
    int hi = f.is_exact() ? f.last_stored() : f.order();
    if (upto >= 0) hi = std::min(hi, upto);
    bool first = true;
    for (int n = f.valuation(); n <= hi; ++n) {
        const Laurent& c = f.coeff(n);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (n != 0) os << "*t" << (n != 1 ? "^" + std::to_string(n) : "");
    }
    if (first) os << "0";
    if (!f.is_exact()) os << " + O(t^" << f.order() + 1 << ")";
    return os.str();
}

}  // namespace qwalk
