#pragma once

#include "qwalk/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qwalk {

// Laurent polynomial in x and y over the rationals, stored as a dense
// rectangle of exponents that is kept tight (no zero rows or columns on
// the border).  A polynomial with y-range {0} is what the series code
// calls an x-Laurent coefficient.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rat& c);
    Laurent(long c) : Laurent(Rat(c)) {}

    static Laurent monomial(const Rat& c, int ex, int ey = 0);
    static Laurent x(int e = 1) { return monomial(1, e, 0); }
    static Laurent y(int e = 1) { return monomial(1, 0, e); }

    bool is_zero() const { return data_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const;
    bool depends_on_y() const { return !is_zero() && (ylo_ != 0 || yhi_ != 0); }
    bool depends_on_x() const { return !is_zero() && (xlo_ != 0 || xhi_ != 0); }

    int xmin() const { return xlo_; }
    int xmax() const { return xhi_; }
    int ymin() const { return ylo_; }
    int ymax() const { return yhi_; }
    std::size_t term_count() const;

    Rat coeff(int ex, int ey = 0) const;
    Rat constant_term() const { return coeff(0, 0); }

    // Visit nonzero terms in increasing (ey, ex) order.
    void for_each(const std::function<void(int, int, const Rat&)>& f) const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Rat& c);
    Laurent operator-() const;

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const Rat& c) { return a *= c; }
    friend Laurent operator*(const Rat& c, Laurent a) { return a *= c; }
    friend bool operator==(const Laurent& a, const Laurent& b);

    Laurent pow(int e) const;
    Laurent shifted(int dx, int dy = 0) const;

    // x^i y^j  ->  x^(a i + b j) y^(c i + d j)
    Laurent monomial_map(int a, int b, int c, int d) const;
    Laurent swap_xy() const { return monomial_map(0, 1, 1, 0); }

    Laurent at_x(const Rat& v) const;  // result has no x
    Laurent at_y(const Rat& v) const;  // result has no y

    // Keep terms whose (ex, ey) satisfy the predicate.
    Laurent filtered(const std::function<bool(int, int)>& keep) const;
    Laurent x_positive() const { return filtered([](int ex, int) { return ex > 0; }); }
    Laurent x_zero() const { return filtered([](int ex, int) { return ex == 0; }); }
    Laurent x_negative() const { return filtered([](int ex, int) { return ex < 0; }); }

    // Exact division; nullopt when the divisor does not divide.
    std::optional<Laurent> divide_exact(const Laurent& d) const;

    std::string str(const char* xs = "x", const char* ys = "y") const;

private:
    int xlo_ = 0, xhi_ = -1, ylo_ = 0, yhi_ = -1;
    std::vector<Rat> data_;

    int width() const { return xhi_ - xlo_ + 1; }
    const Rat& at(int ex, int ey) const { return data_[(ey - ylo_) * width() + (ex - xlo_)]; }
    Rat& at(int ex, int ey) { return data_[(ey - ylo_) * width() + (ex - xlo_)]; }
    void reshape(int xlo, int xhi, int ylo, int yhi);
    void trim();

    friend class LaurentBuilder;
};

// Accumulates terms into a fixed box, then produces a tight Laurent.
class LaurentBuilder {
public:
    LaurentBuilder(int xlo, int xhi, int ylo, int yhi);
    void add(int ex, int ey, const Rat& c);
    void add_product(int ex, int ey, const Rat& a, const Rat& b);
    Laurent build();

private:
    int xlo_, xhi_, ylo_, yhi_;
    std::vector<Rat> data_;
};

}  // namespace qwalk
