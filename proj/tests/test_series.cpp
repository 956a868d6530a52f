#include "doctest.h"
#include "qwalk/series.hpp"

#include <stdexcept>

using namespace qwalk;

namespace {

TSeries catalan_gf(int N) {
    std::vector<Rat> c;
    for (int n = 0; n <= N; ++n) c.push_back(Rat(catalan(n)));
    return tseries(c, N);
}

}  // namespace

TEST_CASE("integer helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(factorial(6) == 720);
    CHECK(catalan(5) == 42);
    CHECK(ratio(6, 4) == Rat(3, 2));
    CHECK(ratio(6, 4).get_den() == 2);
}

TEST_CASE("Laurent polynomial arithmetic") {
    Laurent x = Laurent::x(), y = Laurent::y();
    Laurent p = x + Laurent::x(-1);
    CHECK((p * p) == Laurent::x(2) + Laurent(2) + Laurent::x(-2));
    CHECK((p * p).xmin() == -2);
    CHECK((x * y - x * y).is_zero());
    CHECK(p.at_x(2) == Laurent(Rat(5, 2)));
    CHECK((x * y + y).divide_exact(x + Laurent(1)) == y);
    CHECK_FALSE((x + Laurent(2)).divide_exact(x + Laurent(1)).has_value());
    CHECK((x * y).swap_xy() == x * y);
    CHECK(Laurent::monomial(3, 2, 1).monomial_map(-1, 0, 0, 1) == Laurent::monomial(3, -2, 1));
    CHECK((Laurent::x(2) + x + Laurent::x(-1)).x_positive() == Laurent::x(2) + x);
    // terms are printed by increasing y degree
    CHECK((x + y).str() == "y + x");
}

TEST_CASE("series arithmetic with explicit orders") {
    TSeries one_minus_t = tseries({1, -1});
    TSeries geo = TSeries(Rat(1), 10) / one_minus_t;
    for (int n = 0; n <= 10; ++n) CHECK(geo.coeff(n) == 1);
    CHECK(geo.order() == 10);
    CHECK_THROWS_AS(geo.coeff(11), std::out_of_range);
    CHECK_THROWS_AS(geo.trunc(12), std::domain_error);
    // sums truncate to the smaller order
    TSeries s = geo + geo.trunc(4);
    CHECK(s.order() == 4);
    CHECK(s.coeff(4) == 2);
    TSeries p = geo * geo;
    CHECK(p.coeff(5) == 6);
    CHECK(p.order() == 10);
    CHECK(TSeries::t(3).shifted(-1) == TSeries::t(2));
    CHECK(geo.shifted(2).order() == 12);
}

TEST_CASE("Catalan numbers from the quadratic and from a fixed point") {
    const int N = 25;
    // C = (1 - sqrt(1 - 4t)) / (2t)
    TSeries rt = sqrt_series(tseries({1, -4}, N + 1));
    TSeries C = ((TSeries(Rat(1)) - rt) * Rat(1, 2)).shifted(-1).trunc(N);
    CHECK(C == catalan_gf(N));
    // C = 1 + t C^2
    std::function<TSeries(const TSeries&)> phi = [](const TSeries& g) {
        return TSeries(Rat(1)) + (g * g).shifted(1).trunc(g.order());
    };
    CHECK(solve_fixed_point(phi, N) == catalan_gf(N));
}

TEST_CASE("square root residuals") {
    TSeries f = tseries({1, 3, -2, 5, 7}, 30);
    TSeries g = sqrt_series(f);
    CHECK((g * g - f).is_zero());
    CHECK_THROWS_AS(sqrt_series(tseries({2, 1}, 5)), std::domain_error);
    CHECK_THROWS_AS(sqrt_series(tseries({1, 1})), std::domain_error);
    BiSeries b = BiSeries(std::vector<Laurent>{Laurent(1), Laurent::x(-1) * Laurent(-2), Laurent::x(3)}, 0, 15);
    BiSeries r = sqrt_series(b);
    CHECK((r * r - b).is_zero());
}

TEST_CASE("fixed point rejects a non-contracting map") {
    std::function<TSeries(const TSeries&)> phi = [](const TSeries& g) { return g + TSeries(Rat(1), g.order()); };
    CHECK_THROWS_AS(solve_fixed_point(phi, 5), std::domain_error);
}

TEST_CASE("division by a Laurent polynomial leading coefficient") {
    Laurent x = Laurent::x();
    BiSeries K(std::vector<Laurent>{x, Laurent(-1) - x * x}, 0, kExact);  // x - t(1 + x^2)
    BiSeries q = BiSeries(x, 12) / K;
    BiSeries back = (q * K).trunc(12);
    CHECK(back == BiSeries(x, 12));
    // the coefficients of 1/(1 - t(x + 1/x)) are central trinomial-style Laurent polynomials
    BiSeries M(std::vector<Laurent>{Laurent(1), -(x + Laurent::x(-1))}, 0, kExact);
    BiSeries inv = BiSeries(Laurent(1), 8) / M;
    CHECK(inv.coeff(2) == Laurent::x(2) + Laurent(2) + Laurent::x(-2));
}

TEST_CASE("monomial maps, evaluation and parts") {
    Laurent x = Laurent::x(), y = Laurent::y();
    BiSeries f(std::vector<Laurent>{Laurent(1), x + y, x * y + Laurent::x(-1)}, 0, 2);
    BiSeries g = monomial_map(f, -1, 0, 0, 1);
    CHECK(g.coeff(1) == Laurent::x(-1) + y);
    CHECK(at_xy(f, 1, 1) == tseries({1, 2, 2}, 2));
    CHECK(at_x(f, 2).coeff(1) == Laurent(2) + y);
    PartSplit ps = part_split(f);
    CHECK(ps.pos.coeff(2) == x * y);
    CHECK(ps.neg.coeff(2) == Laurent::x(-1));
    CHECK(ps.zero.coeff(1) == y);
    CHECK((ps.pos + ps.zero + ps.neg) == f);
    CHECK(constant_part(f) == tseries({1}, 2));
    CHECK(lift(tseries({1, 2}, 3)).coeff(1) == Laurent(2));
}

TEST_CASE("substitution of a series for x") {
    // f = x + x^2 t, s = t + t^2  ->  t + t^2 + t^3 + ...
    Laurent x = Laurent::x();
    BiSeries f(std::vector<Laurent>{x, x * x}, 0, 6);
    BiSeries s(std::vector<Laurent>{Laurent(0), Laurent(1), Laurent(1)}, 0, 6);
    BiSeries r = substitute_x(f, s);
    // t + t^2 + t (t + t^2)^2 = t + t^2 + t^3 + 2 t^4 + t^5
    CHECK(constant_part(r) == tseries({0, 1, 1, 1, 2, 1, 0}, 6));
    BiSeries fy = monomial_map(f, 0, 0, 1, 0);
    CHECK(constant_part(substitute_y(fy, s)) == constant_part(r));
}

TEST_CASE("printing") {
    CHECK(to_string(tseries({1, 0, -2}, 3)) == "1 - 2*t^2 + O(t^4)");
}
