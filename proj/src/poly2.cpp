#include "qwalk/poly2.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace zpoly {

void trim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
    if (sgn(c) == 0) return {};
    ZPoly r = a;
    for (auto& v : r) v *= c;
    return r;
}

Integer content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& v : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive(const ZPoly& p) {
    if (p.empty()) return p;
    Integer g = content(p);
    if (sgn(p.back()) < 0) g = -g;
    ZPoly r = p;
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) throw std::domain_error("zpoly division by zero");
    q.clear();
    if (a.empty()) return true;
    if (a.size() < b.size()) return false;
    ZPoly r = a;
    q.assign(a.size() - b.size() + 1, 0);
    for (int k = degree(r) - degree(b); k >= 0; --k) {
        Integer& top = r[k + b.size() - 1];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        q[k] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= f * b[i];
    }
    trim(r);
    trim(q);
    return r.empty();
}

static ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    const Integer& lb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        Integer lr = r.back();
        std::size_t shift = r.size() - b.size();
        for (auto& v : r) v *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
        trim(r);
    }
    return r;
}

static ZPoly positive(const ZPoly& p) {
    if (!p.empty() && sgn(p.back()) < 0) return scale(p, -1);
    return p;
}

ZPoly gcd(ZPoly a, ZPoly b) {
    trim(a);
    trim(b);
    if (a.empty()) return positive(b);
    if (b.empty()) return positive(a);
    Integer g;
    Integer ca = content(a), cb = content(b);
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = primitive(a);
    b = primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    ZPoly p = primitive(a);
    return scale(p, g);
}

}  // namespace zpoly

Poly2::Poly2(long c) : Poly2(Integer(c)) {}

Poly2::Poly2(const Integer& c) {
    if (sgn(c) != 0) c_.push_back(ZPoly{c});
}

Poly2 Poly2::monomial(const Integer& c, int ex, int ey) {
    Poly2 p;
    if (sgn(c) == 0) return p;
    if (ex < 0 || ey < 0) throw std::domain_error("Poly2 exponents must be nonnegative");
    p.c_.resize(ey + 1);
    p.c_[ey].assign(ex + 1, 0);
    p.c_[ey][ex] = c;
    return p;
}

void Poly2::trim() {
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

int Poly2::deg_x() const {
    int d = -1;
    for (const auto& z : c_) d = std::max(d, zpoly::degree(z));
    return d;
}

int Poly2::total_degree() const {
    int d = -1;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].empty()) d = std::max(d, static_cast<int>(j) + zpoly::degree(c_[j]));
    return d;
}

const ZPoly& Poly2::coeff_y(int j) const {
    static const ZPoly empty;
    if (j < 0 || j > deg_y()) return empty;
    return c_[j];
}

Integer Poly2::coeff(int ex, int ey) const {
    const ZPoly& z = coeff_y(ey);
    if (ex < 0 || ex > zpoly::degree(z)) return 0;
    return z[ex];
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& z : r.c_)
        for (auto& v : z) v = -v;
    return r;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = zpoly::add(a.coeff_y(j), b.coeff_y(j));
    r.trim();
    return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    if (a.is_zero() || b.is_zero()) return r;
    int dx = a.deg_x() + b.deg_x();
    r.c_.assign(a.c_.size() + b.c_.size() - 1, ZPoly(dx + 1));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            const ZPoly& p = a.c_[i];
            const ZPoly& q = b.c_[j];
            ZPoly& out = r.c_[i + j];
            for (std::size_t u = 0; u < p.size(); ++u) {
                if (sgn(p[u]) == 0) continue;
                for (std::size_t v = 0; v < q.size(); ++v)
                    mpz_addmul(out[u + v].get_mpz_t(), p[u].get_mpz_t(), q[v].get_mpz_t());
            }
        }
    for (auto& z : r.c_) zpoly::trim(z);
    r.trim();
    return r;
}

Poly2 Poly2::pow(int e) const {
    if (e < 0) throw std::domain_error("negative power of a polynomial");
    Poly2 r(1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly2 Poly2::swap_xy() const {
    Poly2 r;
    for (std::size_t j = 0; j < c_.size(); ++j)
        for (std::size_t i = 0; i < c_[j].size(); ++i)
            if (sgn(c_[j][i]) != 0) r = r + monomial(c_[j][i], static_cast<int>(j), static_cast<int>(i));
    return r;
}

Integer Poly2::integer_content() const {
    Integer g = 0;
    for (const auto& z : c_) {
        Integer cz = zpoly::content(z);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cz.get_mpz_t());
    }
    return g;
}

ZPoly Poly2::content_y() const {
    ZPoly g;
    for (const auto& z : c_) {
        if (z.empty()) continue;
        g = zpoly::gcd(g, z);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

Poly2 Poly2::divide_exact(const ZPoly& d) const {
    Poly2 r;
    r.c_.resize(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!zpoly::divide_exact(c_[j], d, r.c_[j])) throw std::domain_error("Poly2: inexact content division");
    r.trim();
    return r;
}

bool Poly2::divide_exact(const Poly2& d, Poly2& q) const {
    if (d.is_zero()) throw std::domain_error("Poly2 division by zero");
    q = Poly2();
    if (is_zero()) return true;
    if (deg_y() < d.deg_y()) return false;
    Poly2 r = *this;
    q.c_.assign(deg_y() - d.deg_y() + 1, ZPoly{});
    const ZPoly& lc = d.c_.back();
    for (int k = r.deg_y() - d.deg_y(); k >= 0; --k) {
        if (r.deg_y() < k + d.deg_y()) continue;
        const ZPoly& top = r.c_[k + d.deg_y()];
        if (top.empty()) continue;
        ZPoly f;
        if (!zpoly::divide_exact(top, lc, f)) return false;
        q.c_[k] = f;
        for (int i = 0; i <= d.deg_y(); ++i) r.c_[k + i] = zpoly::sub(r.c_[k + i], zpoly::mul(f, d.c_[i]));
        r.trim();
    }
    q.trim();
    return r.is_zero();
}

Poly2 pseudo_remainder(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    const ZPoly& lb = b.c_.back();
    int db = b.deg_y();
    while (!r.is_zero() && r.deg_y() >= db) {
        ZPoly lr = r.c_.back();
        int shift = r.deg_y() - db;
        for (auto& z : r.c_) z = zpoly::mul(z, lb);
        for (int i = 0; i <= db; ++i) r.c_[shift + i] = zpoly::sub(r.c_[shift + i], zpoly::mul(lr, b.c_[i]));
        r.trim();
    }
    return r;
}

static Poly2 primitive_y(const Poly2& p) {
    if (p.is_zero()) return p;
    return p.divide_exact(p.content_y());
}

static Poly2 from_zpoly(const ZPoly& z) {
    Poly2 r;
    for (std::size_t i = 0; i < z.size(); ++i) r = r + Poly2::monomial(z[i], static_cast<int>(i), 0);
    return r;
}

Poly2 gcd(const Poly2& a0, const Poly2& b0) {
    Poly2 a = a0, b = b0;
    if (a.is_zero() && b.is_zero()) return Poly2();
    if (a.is_zero()) std::swap(a, b);
    ZPoly ca = a.content_y();
    ZPoly cb = b.is_zero() ? ZPoly{} : b.content_y();
    ZPoly g = zpoly::gcd(ca, cb);
    a = primitive_y(a);
    b = primitive_y(b);
    if (a.deg_y() < b.deg_y()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly2 r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_y(r);
    }
    Poly2 out = primitive_y(a) * from_zpoly(g);
    if (sgn(out.leading_coefficient()) < 0) out = -out;
    return out;
}

Integer Poly2::leading_coefficient() const {
    int best_deg = -1, best_x = -1;
    Integer lc = 0;
    for (std::size_t j = 0; j < c_.size(); ++j)
        for (std::size_t i = 0; i < c_[j].size(); ++i) {
            if (sgn(c_[j][i]) == 0) continue;
            int d = static_cast<int>(i + j);
            if (d > best_deg || (d == best_deg && static_cast<int>(i) > best_x)) {
                best_deg = d;
                best_x = static_cast<int>(i);
                lc = c_[j][i];
            }
        }
    return lc;
}

unsigned long Poly2::eval_mod(unsigned long x, unsigned long y, unsigned long p) const {
    Integer acc = 0, xv = x, yv = y, pv = p;
    for (int j = deg_y(); j >= 0; --j) {
        Integer inner = 0;
        const ZPoly& z = c_[j];
        for (int i = zpoly::degree(z); i >= 0; --i) inner = (inner * xv + z[i]) % pv;
        acc = (acc * yv + inner) % pv;
    }
    if (sgn(acc) < 0) acc += pv;
    return acc.get_ui();
}

static void append_term(std::ostringstream& os, const Integer& c, int ex, int ey, bool first) {
    Integer a = abs(c);
    if (!first)
        os << (sgn(c) < 0 ? "-" : "+");
    else if (sgn(c) < 0)
        os << "-";
    bool need_star = false;
    if (a != 1 || (ex == 0 && ey == 0)) {
        os << a.get_str();
        need_star = true;
    }
    if (ex) {
        os << (need_star ? "*" : "") << "x" << (ex > 1 ? "^" + std::to_string(ex) : "");
        need_star = true;
    }
    if (ey) os << (need_star ? "*" : "") << "y" << (ey > 1 ? "^" + std::to_string(ey) : "");
}

std::string Poly2::str() const {
    if (is_zero()) return "0";
    // Graded order, highest degree first, x before y within a degree.
    std::vector<std::tuple<int, int, int>> terms;
    for (std::size_t j = 0; j < c_.size(); ++j)
        for (std::size_t i = 0; i < c_[j].size(); ++i)
            if (sgn(c_[j][i]) != 0) terms.emplace_back(static_cast<int>(i + j), static_cast<int>(i), static_cast<int>(j));
    std::sort(terms.begin(), terms.end(), [](auto& l, auto& r) { return l > r; });
    std::ostringstream os;
    bool first = true;
    for (auto [d, i, j] : terms) {
        append_term(os, c_[j][i], i, j, first);
        first = false;
    }
    return os.str();
}

Poly2 Poly2::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    Poly2 out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        Integer coef = 1;
        int ex = 0, ey = 0;
        bool any = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (s[pos] == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::size_t e = pos;
                while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
                coef *= Integer(s.substr(pos, e - pos));
                pos = e;
            } else if (s[pos] == 'x' || s[pos] == 'y') {
                char v = s[pos++];
                int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    std::size_t q = ++pos;
                    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
                    if (q == pos) throw std::invalid_argument("bad exponent in '" + text + "'");
                    e = std::stoi(s.substr(pos, q - pos));
                    pos = q;
                }
                (v == 'x' ? ex : ey) += e;
            } else {
                throw std::invalid_argument("unexpected character in polynomial '" + text + "'");
            }
            any = true;
        }
        if (!any) throw std::invalid_argument("dangling sign in polynomial '" + text + "'");
        out = out + monomial(coef * sign, ex, ey);
    }
    return out;
}

}  // namespace qwalk
