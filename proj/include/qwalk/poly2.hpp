#pragma once

#include "qwalk/rational.hpp"

#include <string>
#include <vector>

namespace qwalk {

// Polynomial in x over the integers, dense, low degree first, no trailing zeros.
using ZPoly = std::vector<Integer>;

namespace zpoly {
void trim(ZPoly& p);
int degree(const ZPoly& p);  // -1 for zero
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
Integer content(const ZPoly& p);
ZPoly primitive(const ZPoly& p);
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q);
ZPoly gcd(ZPoly a, ZPoly b);
}  // namespace zpoly

// Polynomial in x, y over the integers; c_[j] is the coefficient of y^j.
class Poly2 {
public:
    Poly2() = default;
    Poly2(long c);
    explicit Poly2(const Integer& c);
    static Poly2 monomial(const Integer& c, int ex, int ey);
    static Poly2 x() { return monomial(1, 1, 0); }
    static Poly2 y() { return monomial(1, 0, 1); }
    // Parses sums of terms like "3*x^2*y - x + 1".
    static Poly2 parse(const std::string& text);

    bool is_zero() const { return c_.empty(); }
    int deg_y() const { return static_cast<int>(c_.size()) - 1; }
    int deg_x() const;
    int total_degree() const;
    const ZPoly& coeff_y(int j) const;
    Integer coeff(int ex, int ey) const;

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

    Poly2 pow(int e) const;
    Poly2 swap_xy() const;
    Integer integer_content() const;
    ZPoly content_y() const;  // gcd in Z[x] of the y-coefficients
    Poly2 divide_exact(const ZPoly& d) const;
    bool divide_exact(const Poly2& d, Poly2& q) const;
    // Leading coefficient under graded lex order (total degree, then x-degree).
    Integer leading_coefficient() const;
    // Value modulo p at (x, y).
    unsigned long eval_mod(unsigned long x, unsigned long y, unsigned long p) const;

    std::string str() const;

    friend Poly2 gcd(const Poly2& a, const Poly2& b);

private:
    std::vector<ZPoly> c_;
    void trim();
    friend Poly2 pseudo_remainder(const Poly2& a, const Poly2& b);
};

Poly2 gcd(const Poly2& a, const Poly2& b);

}  // namespace qwalk
