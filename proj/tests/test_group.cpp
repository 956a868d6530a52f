#include "doctest.h"
#include "qwalk/acceptance.hpp"
#include "qwalk/group.hpp"

#include <stdexcept>

using namespace qwalk;

namespace {

RationalMap map_of(const std::string& a, const std::string& b) {
    return RationalMap{RatFunc::parse(a), RatFunc::parse(b)};
}

}  // namespace

TEST_CASE("rational function parsing and reduction") {
    RatFunc f = RatFunc::parse("(x^2*y+y)/(x^2+1)");
    CHECK(f == RatFunc::parse("y"));
    CHECK(RatFunc::parse("x/y").degree() == 1);
    CHECK(RatFunc::parse("(x^2+1)/(x*y)").str() == "(x^2+1)/(x*y)");
    CHECK(ratfuncs_equal(RatFunc::parse("2*x/(2*y)"), RatFunc::parse("x/y")));
}

TEST_CASE("Kreweras generators") {
    Generators g = generators(parse_stepset("NE,S,W"));
    CHECK(maps_equal(g.tau_x, map_of("1/(x*y)", "y")));
    CHECK(maps_equal(g.tau_y, map_of("x", "1/(x*y)")));
    OrbitResult o = group_order(parse_stepset("NE,S,W"));
    CHECK(o.finite);
    CHECK(o.order == 6);
    CHECK(o.dihedral_k() == 3);
}

TEST_CASE("tandem and class 8 generators") {
    Generators g7 = generators(parse_stepset("N,SE,W"));
    CHECK(maps_equal(g7.tau_x, map_of("y/x", "y")));
    CHECK(maps_equal(g7.tau_y, map_of("x", "x/y")));
    Generators g8 = generators(parse_stepset("N,SE,SW"));
    CHECK(maps_equal(g8.tau_x, map_of("1/x", "y")));
    CHECK(maps_equal(g8.tau_y, map_of("x", "(x^2+1)/(x*y)")));
    CHECK(group_order(parse_stepset("N,SE,SW")).order == 4);
    CHECK(group_order(class_representative(9)).order == 4);
}

TEST_CASE("generators are involutions that preserve the kernel") {
    for (int k = 5; k <= 11; ++k) {
        StepSet s = class_representative(k);
        Generators g = generators(s);
        CHECK(maps_equal(compose(g.tau_x, g.tau_x), RationalMap::identity()));
        CHECK(maps_equal(compose(g.tau_y, g.tau_y), RationalMap::identity()));
        CHECK(kernel_invariance_check(s));
    }
}

TEST_CASE("the group of class 10 is not found within the bound") {
    OrbitResult o = group_order(class_representative(10), 60);
    CHECK_FALSE(o.finite);
    CHECK(o.bound == 60);
    std::vector<int> d = alternating_word_degrees(class_representative(10), 6);
    CHECK(d.size() == 6);
    CHECK(strictly_increasing(d));
    // a finite group cycles instead
    CHECK_FALSE(strictly_increasing(alternating_word_degrees(class_representative(5), 6)));
}

TEST_CASE("generators need steps on both sides of each axis") {
    CHECK_FALSE(try_generators(parse_stepset("N,NE,E")).has_value());
    CHECK_THROWS(generators(parse_stepset("N,NE,E")));
}

TEST_CASE("swapping x and y conjugates the generators") {
    for (int k = 5; k <= 11; ++k) {
        StepSet s = class_representative(k);
        Generators g = generators(s);
        Generators h = generators(reflect(s));
        CHECK(maps_equal(h.tau_x, g.tau_y.swap_xy()));
        CHECK(maps_equal(h.tau_y, g.tau_x.swap_xy()));
        CHECK(group_order(reflect(s), 16).finite == group_order(s, 16).finite);
    }
}

TEST_CASE("generator table has the listed orders") {
    const auto& rows = group_table();
    CHECK(rows.size() == 11);
    for (const auto& r : rows) {
        int k = std::stoi(r.dihedral.substr(1));
        CHECK(r.order == 2 * k);
    }
}
