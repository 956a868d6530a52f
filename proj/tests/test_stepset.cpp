#include "doctest.h"
#include "qwalk/stepset.hpp"

#include <set>
#include <stdexcept>

using namespace qwalk;
using D = Direction;

TEST_CASE("parsing and printing step sets") {
    StepSet s = parse_stepset("ne, S,w");
    CHECK(s == StepSet{D::NE, D::S, D::W});
    CHECK(s.str() == "NE,S,W");
    CHECK(s.size() == 3);
    CHECK(s.contains(1, 1));
    CHECK_FALSE(s.contains(1, 0));
    CHECK_THROWS_AS(parse_stepset("N,FOO"), std::invalid_argument);
    CHECK_THROWS_AS(parse_stepset("N,N"), std::invalid_argument);
    CHECK_THROWS_AS(parse_stepset("N,,E"), std::invalid_argument);
}

TEST_CASE("reflect and rev") {
    StepSet k{D::NE, D::S, D::W};
    CHECK(rev(k) == StepSet{D::SW, D::N, D::E});
    CHECK(reflect(k) == k);
    CHECK(reflect(StepSet{D::N, D::SE}) == StepSet{D::E, D::NW});
    for (unsigned m = 0; m < 256; ++m) {
        StepSet s(static_cast<std::uint8_t>(m));
        CHECK(reflect(reflect(s)) == s);
        CHECK(rev(rev(s)) == s);
        CHECK(mirror_x(mirror_x(s)) == s);
        CHECK(mirror_y(mirror_y(s)) == s);
    }
}

TEST_CASE("symmetry report uses the axis of reflection") {
    // {NE,SE,W} is unchanged by (i,j) -> (i,-j): symmetric in the x-axis
    SymmetryReport r = symmetry_report(StepSet{D::NE, D::SE, D::W});
    CHECK(r.x_axis_symmetric);
    CHECK_FALSE(r.y_axis_symmetric);
    CHECK(symmetry_report(StepSet{D::NE, D::NW, D::S}).y_axis_symmetric);
    CHECK(symmetry_report(StepSet{D::N, D::SE, D::W}).reflect_rev_invariant);
}

TEST_CASE("valid walks and singular sets") {
    CHECK_FALSE(has_valid_walk(StepSet{D::SE, D::S, D::SW}));
    CHECK(has_valid_walk(StepSet{D::NE, D::S, D::W}));
    CHECK(is_singular(StepSet{D::N, D::NE, D::E}));
    CHECK(is_singular(StepSet{D::N, D::NE, D::SW}));
    CHECK_FALSE(is_singular(StepSet{D::NE, D::S, D::W}));
    CHECK_FALSE(is_singular(StepSet{D::N, D::NW, D::SE}));
}

TEST_CASE("classification of the representatives") {
    CHECK(classify(parse_stepset("NE,S,W")) == ClassId::nonsingular(5));
    CHECK(classify(parse_stepset("SE,S,SW")) == ClassId::empty());
    CHECK(classify(parse_stepset("N,NW,SE")) == ClassId::nonsingular(11));
    for (int k = 1; k <= 11; ++k) {
        ClassId c = classify(class_representative(k));
        CHECK(c.table_number() == k);
        CHECK(c.kind == (k <= 4 ? ClassId::Kind::Singular : ClassId::Kind::NonSingular));
    }
    CHECK(classify(class_representative(5)).str() == "class-5");
    CHECK(classify(class_representative(2)).str() == "singular-2");
    CHECK_THROWS_AS(classify(parse_stepset("N,E")), std::invalid_argument);
}

TEST_CASE("class is invariant under reflect") {
    for (unsigned m = 0; m < 256; ++m) {
        StepSet s(static_cast<std::uint8_t>(m));
        if (s.size() != 3) continue;
        CHECK(classify(s) == classify(reflect(s)));
    }
}

TEST_CASE("governing constraint of singular sets") {
    Governing g = governing_constraint(parse_stepset("N,NE,SW"));
    CHECK(g.up == 1);
    CHECK(g.down == 1);
    CHECK(g.level == 1);
    // {NE,W,SW}: only the x-constraint binds, two steps go down
    Governing h = governing_constraint(parse_stepset("NE,W,SW"));
    CHECK(h.axis == 0);
    CHECK(h.up == 1);
    CHECK(h.down == 2);
}

TEST_CASE("playable steps drop steps that can never occur") {
    // with no step going right, W can never be used
    CHECK(playable_steps(parse_stepset("N,W,NW")) == parse_stepset("N"));
    CHECK(playable_steps(parse_stepset("NE,S,W")) == parse_stepset("NE,S,W"));
}

TEST_CASE("aliases") {
    CHECK(parse_class_alias("5") == 5);
    CHECK_FALSE(parse_class_alias("0").has_value());
    CHECK_FALSE(parse_class_alias("12").has_value());
    CHECK_FALSE(parse_class_alias("NE").has_value());
    CHECK_THROWS_AS(class_representative(12), std::invalid_argument);
}

TEST_CASE("sweep of the 56 triples") {
    ClassSweep sw = enumerate_all_classes();
    CHECK(sw.records.size() == 56);
    CHECK(sw.empty_sets == 10);
    CHECK(sw.reflect_invariant_nonempty == 4);
    CHECK(sw.reflect_classes == 25);
    CHECK(sw.final_classes == 11);
    CHECK(sw.singular_sets == 35);
    CHECK(sw.nonsingular_sets == 11);
    CHECK(sw.singular_reflect_classes == 18);
    CHECK(sw.nonsingular_reflect_classes == 7);
    std::set<int> seen;
    for (const auto& r : sw.records) seen.insert(r.cls.table_number());
    CHECK(seen.size() == 12);  // 0 for empty plus 1..11
}
