#pragma once

#include "qwalk/laurent.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

// Truncation order of a polynomial that is known exactly.
inline constexpr int kExact = std::numeric_limits<int>::max() / 4;

inline bool is_zero(const Laurent& l) { return l.is_zero(); }

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Rat> {
    static Rat one() { return 1; }
    static bool is_one(const Rat& r) { return r == 1; }
    static Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
};

template <>
struct CoeffOps<Laurent> {
    static Laurent one() { return Laurent(1); }
    static bool is_one(const Laurent& l) { return l.is_one(); }
    static Laurent exact_div(const Laurent& a, const Laurent& b) {
        auto q = a.divide_exact(b);
        if (!q) throw std::domain_error("coefficient division is not exact: " + a.str() + " / " + b.str());
        return *q;
    }
};

// Truncated Laurent series in t: coefficients c[k] belong to t^(val + k),
// and everything through t^order is known.  A series with order kExact
// is a polynomial.
template <class C>
class Series {
public:
    Series() : val_(0), ord_(kExact) {}
    Series(const C& c, int order = kExact) : val_(0), ord_(order) {
        if (order >= 0) coeffs_.push_back(c);
        normalize();
    }
    Series(std::vector<C> coeffs, int val, int order) : val_(val), ord_(order), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static Series zero(int order = kExact) { return Series(std::vector<C>{}, order + 1, order); }
    static Series monomial(const C& c, int n, int order = kExact) {
        return Series(std::vector<C>{c}, n, order);
    }
    // t^n exactly
    static Series t(int n = 1) { return monomial(CoeffOps<C>::one(), n); }

    int valuation() const { return val_; }
    int order() const { return ord_; }
    bool is_exact() const { return ord_ >= kExact; }
    bool is_zero() const { return coeffs_.empty(); }
    int last_stored() const { return val_ + static_cast<int>(coeffs_.size()) - 1; }

    const C& coeff(int n) const {
        if (n > ord_) throw std::out_of_range("coefficient t^" + std::to_string(n) + " beyond truncation order " +
                                              std::to_string(ord_));
        if (n < val_ || n > last_stored()) return zero_coeff();
        return coeffs_[n - val_];
    }
    const C& operator[](int n) const { return coeff(n); }

    Series trunc(int order) const {
        if (order > ord_)
            throw std::domain_error("cannot raise truncation order from " + std::to_string(ord_) + " to " +
                                    std::to_string(order));
        std::vector<C> c;
        for (int n = val_; n <= std::min(order, last_stored()); ++n) c.push_back(coeffs_[n - val_]);
        return Series(std::move(c), val_, order);
    }

    template <class F>
    auto map(F f) const -> Series<decltype(f(std::declval<const C&>()))> {
        using D = decltype(f(std::declval<const C&>()));
        std::vector<D> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return Series<D>(std::move(out), val_, ord_);
    }

    Series shifted(int k) const {
        Series r = *this;
        r.val_ += k;
        if (!is_exact()) r.ord_ += k;
        return r;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) { return add(a, b, false); }
    friend Series operator-(const Series& a, const Series& b) { return add(a, b, true); }
    Series& operator+=(const Series& b) { return *this = *this + b; }
    Series& operator-=(const Series& b) { return *this = *this - b; }

    friend Series operator*(const Series& a, const Series& b) {
        if (a.is_zero() || b.is_zero()) {
            int o = product_order(a, b);
            return zero(o);
        }
        int o = product_order(a, b);
        int v = a.val_ + b.val_;
        int hi = std::min(o, a.last_stored() + b.last_stored());
        std::vector<C> c(hi >= v ? hi - v + 1 : 0);
        for (int i = a.val_; i <= a.last_stored(); ++i) {
            const C& ai = a.coeffs_[i - a.val_];
            if (qwalk::is_zero(ai)) continue;
            for (int j = b.val_; j <= b.last_stored() && i + j <= hi; ++j) {
                const C& bj = b.coeffs_[j - b.val_];
                if (qwalk::is_zero(bj)) continue;
                c[i + j - v] += ai * bj;
            }
        }
        return Series(std::move(c), v, o);
    }
    Series& operator*=(const Series& b) { return *this = *this * b; }

    friend Series operator*(const Series& a, const C& s) {
        Series r = a;
        for (auto& c : r.coeffs_) c = c * s;
        r.normalize();
        return r;
    }
    friend Series operator*(const C& s, const Series& a) { return a * s; }

    // f / g with exact coefficient division by the leading coefficient of g.
    friend Series operator/(const Series& f, const Series& g) {
        if (g.is_zero()) throw std::domain_error("division by a series with no invertible leading term");
        int rel_f = f.is_exact() ? kExact : f.ord_ - f.val_;
        int rel_g = g.is_exact() ? kExact : g.ord_ - g.val_;
        if (rel_f >= kExact && rel_g >= kExact) {
            if (g.coeffs_.size() != 1)
                throw std::domain_error("quotient of exact series needs an explicit truncation order");
        }
        int qv = f.val_ - g.val_;
        int rel = std::min(rel_f, rel_g);
        int qo = rel >= kExact ? kExact : qv + rel;
        if (!f.is_exact() && !g.is_exact() && f.val_ >= 0 && g.val_ >= 0 && qv >= 0)
            qo = std::min(qo, std::min(f.ord_, g.ord_));
        if (f.is_zero()) return zero(qo);
        int qhi = qo >= kExact ? qv + (f.last_stored() - f.val_) : qo;
        const C& lead = g.coeffs_[0];
        std::vector<C> q;
        for (int n = qv; n <= qhi; ++n) {
            C acc = f.raw(n + g.val_);
            for (int i = 1; i <= n - qv && i < static_cast<int>(g.coeffs_.size()); ++i) {
                const C& gi = g.coeffs_[i];
                if (qwalk::is_zero(gi)) continue;
                const C& qk = q[n - qv - i];
                if (qwalk::is_zero(qk)) continue;
                acc -= gi * qk;
            }
            q.push_back(qwalk::is_zero(acc) ? acc : CoeffOps<C>::exact_div(acc, lead));
        }
        return Series(std::move(q), qv, qo);
    }

    Series inverse() const { return Series(CoeffOps<C>::one()) / *this; }

    friend bool operator==(const Series& a, const Series& b) {
        return a.val_ == b.val_ && a.ord_ == b.ord_ && a.coeffs_ == b.coeffs_;
    }

    // Compare two series on t^lo..t^hi; returns the first exponent where they differ.
    friend std::optional<int> first_difference(const Series& a, const Series& b, int lo, int hi) {
        for (int n = lo; n <= hi; ++n)
            if (!(a.coeff(n) == b.coeff(n))) return n;
        return std::nullopt;
    }

    const std::vector<C>& raw_coeffs() const { return coeffs_; }

private:
    int val_;
    int ord_;
    std::vector<C> coeffs_;

    static const C& zero_coeff() {
        static const C z{};
        return z;
    }

    const C& raw(int n) const {
        if (n < val_ || n > last_stored()) return zero_coeff();
        return coeffs_[n - val_];
    }

    static int product_order(const Series& a, const Series& b) {
        if (a.is_exact() && b.is_exact()) return kExact;
        int oa = a.is_exact() ? kExact : a.ord_ + b.val_;
        int ob = b.is_exact() ? kExact : b.ord_ + a.val_;
        int o = std::min(oa, ob);
        if (a.val_ >= 0 && b.val_ >= 0) o = std::min(o, std::min(a.ord_, b.ord_));
        return o;
    }

    static Series add(const Series& a, const Series& b, bool subtract) {
        int o = std::min(a.ord_, b.ord_);
        int lo = std::min(a.is_zero() ? kExact : a.val_, b.is_zero() ? kExact : b.val_);
        if (lo >= kExact) return zero(o);
        int hi = std::max(a.is_zero() ? lo : a.last_stored(), b.is_zero() ? lo : b.last_stored());
        hi = std::min(hi, o);
        std::vector<C> c;
        for (int n = lo; n <= hi; ++n) {
            C v = a.raw(n);
            if (subtract)
                v -= b.raw(n);
            else
                v += b.raw(n);
            c.push_back(std::move(v));
        }
        return Series(std::move(c), lo, o);
    }

    void normalize() {
        // Drop coefficients beyond the order and strip leading and trailing zeros.
        if (!is_exact() && last_stored() > ord_) coeffs_.resize(std::max(0, ord_ - val_ + 1));
        std::size_t k = 0;
        while (k < coeffs_.size() && qwalk::is_zero(coeffs_[k])) ++k;
        if (k == coeffs_.size()) {
            coeffs_.clear();
            val_ = is_exact() ? 0 : ord_ + 1;
            return;
        }
        if (k) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k));
            val_ += static_cast<int>(k);
        }
        while (!coeffs_.empty() && qwalk::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
};

using TSeries = Series<Rat>;
using BiSeries = Series<Laurent>;

// Series with an explicit truncation order from a coefficient list starting at t^0.
TSeries tseries(const std::vector<Rat>& coeffs, int order = kExact);

// Common order of a group of series (the minimum), for explicit re-truncation.
template <class C>
int min_order(std::initializer_list<std::reference_wrapper<const Series<C>>> xs) {
    int o = kExact;
    for (const auto& s : xs) o = std::min(o, s.get().order());
    return o;
}

// f + g after truncating both to the smaller order.
template <class C>
Series<C> add_truncating(const Series<C>& f, const Series<C>& g) {
    int o = std::min(f.order(), g.order());
    return (f.order() == o ? f : f.trunc(o)) + (g.order() == o ? g : g.trunc(o));
}

template <class C>
Series<C> sub_truncating(const Series<C>& f, const Series<C>& g) {
    return add_truncating(f, -g);
}

// Square root of a series with constant term 1 (the branch with g(0) = 1).
template <class C>
Series<C> sqrt_series(const Series<C>& f) {
    if (f.is_exact()) throw std::domain_error("sqrt of an exact series needs a truncation order");
    if (f.valuation() < 0 || !CoeffOps<C>::is_one(f.coeff(0)))
        throw std::domain_error("sqrt_series: constant term is not 1");
    int N = f.order();
    std::vector<C> g(N + 1);
    g[0] = CoeffOps<C>::one();
    for (int k = 1; k <= N; ++k) {
        C acc = f.coeff(k);
        for (int i = 1; i < k; ++i) {
            if (qwalk::is_zero(g[i]) || qwalk::is_zero(g[k - i])) continue;
            acc -= g[i] * g[k - i];
        }
        g[k] = acc * Rat(1, 2);
    }
    return Series<C>(std::move(g), 0, N);
}

// Solves g = phi(g) through order N by iteration from g = 0.  Each pass must
// fix at least one more coefficient, otherwise the map is not contracting.
template <class C>
Series<C> solve_fixed_point(const std::function<Series<C>(const Series<C>&)>& phi, int N,
                            Series<C> start = Series<C>::zero(0)) {
    Series<C> g = start.order() >= N ? start.trunc(N) : Series<C>(std::vector<C>{}, N + 1, N);
    int agreed = -1;
    for (int iter = 0; iter <= N + 2; ++iter) {
        Series<C> next = phi(g);
        if (next.order() < N)
            throw std::domain_error("fixed point: functional loses precision (order " +
                                    std::to_string(next.order()) + " < " + std::to_string(N) + ")");
        next = next.trunc(N);
        auto diff = first_difference(g, next, std::min(g.valuation(), next.valuation()), N);
        if (!diff) return next;
        if (*diff <= agreed) throw std::domain_error("fixed point: no valuation gain (non-contracting functional)");
        agreed = *diff;
        g = std::move(next);
    }
    throw std::domain_error("fixed point: did not stabilise");
}

// Multiply each coefficient of a BiSeries by a Laurent polynomial.
BiSeries scale(const BiSeries& f, const Laurent& c);
BiSeries lift(const TSeries& f);                       // rational coefficients as constants
TSeries constant_part(const BiSeries& f);               // x^0 y^0 coefficients
BiSeries map_laurent(const BiSeries& f, const std::function<Laurent(const Laurent&)>& g);
BiSeries monomial_map(const BiSeries& f, int a, int b, int c, int d);
BiSeries at_x(const BiSeries& f, const Rat& v);
BiSeries at_y(const BiSeries& f, const Rat& v);
TSeries at_xy(const BiSeries& f, const Rat& x, const Rat& y);

// Substitutes the series s for x in every coefficient of f.
BiSeries substitute_x(const BiSeries& f, const BiSeries& s);
BiSeries substitute_y(const BiSeries& f, const BiSeries& s);

// Positive / zero / negative parts in x, per coefficient.
struct PartSplit {
    BiSeries pos, zero, neg;
    BiSeries nonneg() const { return pos + zero; }
    BiSeries nonpos() const { return neg + zero; }
};
PartSplit part_split(const BiSeries& f);

// Largest |exponent| growth rate seen; used to assert linear exponent windows.
void assert_linear_window(const BiSeries& f, int slope, int offset, const std::string& what);

std::string to_string(const TSeries& f, int upto = -1);
std::string to_string(const BiSeries& f, int upto = -1);

}  // namespace qwalk
