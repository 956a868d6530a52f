#include "qwalk/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qwalk {

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer catalan(long n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

Laurent::Laurent(const Rat& c) {
    if (!qwalk::is_zero(c)) {
        xlo_ = xhi_ = ylo_ = yhi_ = 0;
        data_.assign(1, c);
    }
}

Laurent Laurent::monomial(const Rat& c, int ex, int ey) {
    Laurent r;
    if (!qwalk::is_zero(c)) {
        r.xlo_ = r.xhi_ = ex;
        r.ylo_ = r.yhi_ = ey;
        r.data_.assign(1, c);
    }
    return r;
}

bool Laurent::is_one() const { return is_constant() && data_[0] == 1; }
bool Laurent::is_constant() const {
    return is_zero() || (xlo_ == 0 && xhi_ == 0 && ylo_ == 0 && yhi_ == 0);
}
bool Laurent::is_monomial() const { return data_.size() == 1; }

std::size_t Laurent::term_count() const {
    return std::count_if(data_.begin(), data_.end(), [](const Rat& r) { return sgn(r) != 0; });
}

Rat Laurent::coeff(int ex, int ey) const {
    if (is_zero() || ex < xlo_ || ex > xhi_ || ey < ylo_ || ey > yhi_) return 0;
    return at(ex, ey);
}

void Laurent::for_each(const std::function<void(int, int, const Rat&)>& f) const {
    if (is_zero()) return;
    for (int ey = ylo_; ey <= yhi_; ++ey)
        for (int ex = xlo_; ex <= xhi_; ++ex) {
            const Rat& c = at(ex, ey);
            if (sgn(c) != 0) f(ex, ey, c);
        }
}

void Laurent::reshape(int xlo, int xhi, int ylo, int yhi) {
    if (!is_zero() && xlo == xlo_ && xhi == xhi_ && ylo == ylo_ && yhi == yhi_) return;
    std::vector<Rat> nd(static_cast<std::size_t>(xhi - xlo + 1) * (yhi - ylo + 1));
    int nw = xhi - xlo + 1;
    if (!is_zero()) {
        for (int ey = ylo_; ey <= yhi_; ++ey)
            for (int ex = xlo_; ex <= xhi_; ++ex)
                nd[(ey - ylo) * nw + (ex - xlo)] = at(ex, ey);
    }
    xlo_ = xlo;
    xhi_ = xhi;
    ylo_ = ylo;
    yhi_ = yhi;
    data_ = std::move(nd);
}

void Laurent::trim() {
    if (data_.empty()) return;
    int nxlo = xhi_ + 1, nxhi = xlo_ - 1, nylo = yhi_ + 1, nyhi = ylo_ - 1;
    for (int ey = ylo_; ey <= yhi_; ++ey)
        for (int ex = xlo_; ex <= xhi_; ++ex)
            if (sgn(at(ex, ey)) != 0) {
                nxlo = std::min(nxlo, ex);
                nxhi = std::max(nxhi, ex);
                nylo = std::min(nylo, ey);
                nyhi = std::max(nyhi, ey);
            }
    if (nxlo > nxhi) {
        *this = Laurent();
        return;
    }
    if (nxlo == xlo_ && nxhi == xhi_ && nylo == ylo_ && nyhi == yhi_) return;
    std::vector<Rat> nd(static_cast<std::size_t>(nxhi - nxlo + 1) * (nyhi - nylo + 1));
    int nw = nxhi - nxlo + 1;
    for (int ey = nylo; ey <= nyhi; ++ey)
        for (int ex = nxlo; ex <= nxhi; ++ex)
            nd[(ey - nylo) * nw + (ex - nxlo)] = std::move(at(ex, ey));
    xlo_ = nxlo;
    xhi_ = nxhi;
    ylo_ = nylo;
    yhi_ = nyhi;
    data_ = std::move(nd);
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    reshape(std::min(xlo_, o.xlo_), std::max(xhi_, o.xhi_), std::min(ylo_, o.ylo_),
            std::max(yhi_, o.yhi_));
    for (int ey = o.ylo_; ey <= o.yhi_; ++ey)
        for (int ex = o.xlo_; ex <= o.xhi_; ++ex) {
            const Rat& c = o.at(ex, ey);
            if (sgn(c) != 0) at(ex, ey) += c;
        }
    trim();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Rat& c) {
    if (qwalk::is_zero(c)) return *this = Laurent();
    for (auto& d : data_) d *= c;
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& d : r.data_) d = -d;
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    if (b.is_monomial()) {
        Laurent r = a;
        r.xlo_ += b.xlo_;
        r.xhi_ += b.xlo_;
        r.ylo_ += b.ylo_;
        r.yhi_ += b.ylo_;
        if (b.data_[0] != 1) r *= b.data_[0];
        return r;
    }
    if (a.is_monomial()) return b * a;
    LaurentBuilder acc(a.xlo_ + b.xlo_, a.xhi_ + b.xhi_, a.ylo_ + b.ylo_, a.yhi_ + b.yhi_);
    // Collect the nonzero terms of b once.
    std::vector<std::tuple<int, int, const Rat*>> bt;
    for (int ey = b.ylo_; ey <= b.yhi_; ++ey)
        for (int ex = b.xlo_; ex <= b.xhi_; ++ex)
            if (sgn(b.at(ex, ey)) != 0) bt.emplace_back(ex, ey, &b.at(ex, ey));
    for (int ey = a.ylo_; ey <= a.yhi_; ++ey)
        for (int ex = a.xlo_; ex <= a.xhi_; ++ex) {
            const Rat& c = a.at(ex, ey);
            if (sgn(c) == 0) continue;
            for (auto& [bx, by, bc] : bt) acc.add_product(ex + bx, ey + by, c, *bc);
        }
    return acc.build();
}

bool operator==(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.xlo_ == b.xlo_ && a.xhi_ == b.xhi_ && a.ylo_ == b.ylo_ && a.yhi_ == b.yhi_ &&
           a.data_ == b.data_;
}

Laurent Laurent::pow(int e) const {
    if (e < 0) {
        if (!is_monomial()) throw std::domain_error("negative power of a non-monomial Laurent polynomial");
        Rat c = 1 / data_[0];
        Rat r = 1;
        for (int k = 0; k < -e; ++k) r *= c;
        return monomial(r, xlo_ * e, ylo_ * e);
    }
    Laurent r(1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Laurent Laurent::shifted(int dx, int dy) const {
    Laurent r = *this;
    if (r.is_zero()) return r;
    r.xlo_ += dx;
    r.xhi_ += dx;
    r.ylo_ += dy;
    r.yhi_ += dy;
    return r;
}

Laurent Laurent::monomial_map(int a, int b, int c, int d) const {
    if (is_zero()) return Laurent();
    int corners[4][2] = {{xlo_, ylo_}, {xlo_, yhi_}, {xhi_, ylo_}, {xhi_, yhi_}};
    int nxlo = a * xlo_ + b * ylo_, nxhi = nxlo, nylo = c * xlo_ + d * ylo_, nyhi = nylo;
    for (auto& p : corners) {
        int nx = a * p[0] + b * p[1], ny = c * p[0] + d * p[1];
        nxlo = std::min(nxlo, nx);
        nxhi = std::max(nxhi, nx);
        nylo = std::min(nylo, ny);
        nyhi = std::max(nyhi, ny);
    }
    LaurentBuilder acc(nxlo, nxhi, nylo, nyhi);
    for_each([&](int ex, int ey, const Rat& v) { acc.add(a * ex + b * ey, c * ex + d * ey, v); });
    return acc.build();
}

Laurent Laurent::at_x(const Rat& v) const {
    if (is_zero()) return Laurent();
    LaurentBuilder acc(0, 0, ylo_, yhi_);
    for_each([&](int ex, int ey, const Rat& c) {
        Rat p = 1;
        if (ex >= 0) {
            for (int k = 0; k < ex; ++k) p *= v;
        } else {
            for (int k = 0; k < -ex; ++k) p /= v;
        }
        acc.add(0, ey, c * p);
    });
    return acc.build();
}

Laurent Laurent::at_y(const Rat& v) const { return swap_xy().at_x(v).swap_xy(); }

Laurent Laurent::filtered(const std::function<bool(int, int)>& keep) const {
    Laurent r = *this;
    if (r.is_zero()) return r;
    for (int ey = ylo_; ey <= yhi_; ++ey)
        for (int ex = xlo_; ex <= xhi_; ++ex)
            if (!keep(ex, ey)) r.at(ex, ey) = 0;
    r.trim();
    return r;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (is_zero()) return Laurent();
    if (d.is_monomial()) {
        Laurent r = shifted(-d.xlo_, -d.ylo_);
        r *= 1 / d.data_[0];
        return r;
    }
    int qxlo = xlo_ - d.xlo_, qxhi = xhi_ - d.xhi_;
    int qylo = ylo_ - d.ylo_, qyhi = yhi_ - d.yhi_;
    if (qxlo > qxhi || qylo > qyhi) return std::nullopt;
    // Leading term of d in lex order (y first, then x).
    int dly = d.yhi_, dlx = d.xhi_;
    while (sgn(d.at(dlx, dly)) == 0) --dlx;
    Rat dinv = 1 / d.at(dlx, dly);
    Laurent r = *this;
    LaurentBuilder q(qxlo, qxhi, qylo, qyhi);
    while (!r.is_zero()) {
        int ly = r.yhi_, lx = r.xhi_;
        while (sgn(r.at(lx, ly)) == 0) --lx;
        int mx = lx - dlx, my = ly - dly;
        if (mx < qxlo || mx > qxhi || my < qylo || my > qyhi) return std::nullopt;
        Rat c = r.at(lx, ly) * dinv;
        q.add(mx, my, c);
        r.reshape(std::min(r.xlo_, d.xlo_ + mx), std::max(r.xhi_, d.xhi_ + mx), std::min(r.ylo_, d.ylo_ + my),
                  std::max(r.yhi_, d.yhi_ + my));
        d.for_each([&](int ex, int ey, const Rat& v) { r.at(ex + mx, ey + my) -= c * v; });
        r.trim();
    }
    return q.build();
}

static void append_power(std::ostringstream& os, const char* v, int e, bool& first) {
    if (e == 0) return;
    if (!first) os << "*";
    os << v;
    if (e != 1) os << "^" << e;
    first = false;
}

std::string Laurent::str(const char* xs, const char* ys) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    // Highest degree first reads naturally.
    for (int ey = yhi_; ey >= ylo_; --ey)
        for (int ex = xhi_; ex >= xlo_; --ex) {
            Rat c = at(ex, ey);
            if (sgn(c) == 0) continue;
            bool neg = sgn(c) < 0;
            if (neg) c = -c;
            if (lead)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            lead = false;
            bool first = true;
            if (c != 1 || (ex == 0 && ey == 0)) {
                os << c.get_str();
                first = false;
            }
            append_power(os, xs, ex, first);
            append_power(os, ys, ey, first);
        }
    return os.str();
}

LaurentBuilder::LaurentBuilder(int xlo, int xhi, int ylo, int yhi)
    : xlo_(xlo), xhi_(xhi), ylo_(ylo), yhi_(yhi) {
    if (xlo <= xhi && ylo <= yhi) data_.resize(static_cast<std::size_t>(xhi - xlo + 1) * (yhi - ylo + 1));
}

void LaurentBuilder::add(int ex, int ey, const Rat& c) {
    if (ex < xlo_ || ex > xhi_ || ey < ylo_ || ey > yhi_) throw std::out_of_range("LaurentBuilder: term outside box");
    data_[(ey - ylo_) * (xhi_ - xlo_ + 1) + (ex - xlo_)] += c;
}

void LaurentBuilder::add_product(int ex, int ey, const Rat& a, const Rat& b) {
    Rat& slot = data_[(ey - ylo_) * (xhi_ - xlo_ + 1) + (ex - xlo_)];
    // Integer fast path avoids canonicalisation when both denominators are 1.
    if (a.get_den() == 1 && b.get_den() == 1 && slot.get_den() == 1) {
        mpz_addmul(slot.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    } else {
        slot += a * b;
    }
}

Laurent LaurentBuilder::build() {
    Laurent r;
    if (data_.empty()) return r;
    r.xlo_ = xlo_;
    r.xhi_ = xhi_;
    r.ylo_ = ylo_;
    r.yhi_ = yhi_;
    r.data_ = std::move(data_);
    r.trim();
    return r;
}

}  // namespace qwalk
