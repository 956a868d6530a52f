#include "doctest.h"
#include "qwalk/guess.hpp"

#include <stdexcept>

using namespace qwalk;

namespace {

CountSequence motzkin(int n) {
    CountSequence m{1, 1};
    for (int k = 2; k <= n; ++k) {
        Integer v = m[k - 1];
        for (int i = 0; i <= k - 2; ++i) v += m[i] * m[k - 2 - i];
        m.push_back(v);
    }
    return m;
}

GuessBounds small(int r, int d, int guard = 10) {
    GuessBounds b;
    b.max_order = r;
    b.max_degree = d;
    b.guard = guard;
    return b;
}

}  // namespace

TEST_CASE("Motzkin numbers") {
    CountSequence m = motzkin(150);
    GuessReport g = guess_p_recurrence(m, GuessBounds{}, "motzkin");
    REQUIRE(g.found());
    CHECK(g.recurrence->order == 2);
    CHECK(g.recurrence->degree == 1);
    CHECK(g.recurrence->str() == "(n+4)*a(n+2) - (2*n+5)*a(n+1) - 3*(n+1)*a(n) = 0");
    CHECK(g.recurrence->holds_on(m));
}

TEST_CASE("constant and geometric sequences") {
    GuessReport c = guess_p_recurrence(CountSequence(60, Integer(7)), small(3, 3));
    REQUIRE(c.found());
    CHECK(c.recurrence->order == 1);
    CHECK(c.recurrence->degree == 0);
    CHECK(c.recurrence->str() == "a(n+1) - a(n) = 0");
    CountSequence pow3{1};
    for (int n = 1; n < 60; ++n) pow3.push_back(pow3.back() * 3);
    GuessReport g = guess_p_recurrence(pow3, small(3, 3));
    REQUIRE(g.found());
    CHECK(g.recurrence->str() == "a(n+1) - 3*a(n) = 0");
}

TEST_CASE("Catalan numbers need degree one") {
    CountSequence c;
    for (int n = 0; n < 60; ++n) c.push_back(catalan(n));
    GuessReport g = guess_p_recurrence(c, small(3, 3));
    REQUIRE(g.found());
    CHECK(g.recurrence->order == 1);
    CHECK(g.recurrence->degree == 1);
    CHECK(g.recurrence->residual(c, 10) == 0);
}

TEST_CASE("regenerating from the initial terms reproduces the sequence") {
    CountSequence tot = count_totals(class_representative(7), 120);
    GuessReport g = guess_p_recurrence(tot, GuessBounds{});
    REQUIRE(g.found());
    CHECK(g.recurrence->regenerate(tot) == tot);
    CountSequence bad = tot;
    bad[100] += 1;
    CHECK_FALSE(g.recurrence->holds_on(bad));
}

TEST_CASE("a perturbed tail is caught by the guard terms") {
    CountSequence m = motzkin(80);
    m[78] += 1;
    GuessReport g = guess_p_recurrence(m, small(2, 2, 10));
    CHECK_FALSE(g.found());
}

TEST_CASE("class 10 totals have no small recurrence") {
    CountSequence tot = count_totals(class_representative(10), 80);
    GuessReport g = guess_p_recurrence(tot, small(3, 3));
    CHECK_FALSE(g.found());
    CHECK(g.str().find("NotFound") != std::string::npos);
}

TEST_CASE("larger bounds find the same recurrence") {
    CountSequence m = motzkin(120);
    GuessReport a = guess_p_recurrence(m, small(2, 1));
    GuessReport b = guess_p_recurrence(m, small(5, 5));
    REQUIRE(a.found());
    REQUIRE(b.found());
    CHECK(a.recurrence->str() == b.recurrence->str());
    CHECK_FALSE(guess_p_recurrence(m, small(1, 5)).found());
}

TEST_CASE("too few terms is an error") {
    GuessBounds b = small(4, 4, 10);
    CHECK(guess_terms_required(b) == 25 + 10 + 4);
    CountSequence m = motzkin(guess_terms_required(b) - 2);
    CHECK_THROWS_AS(guess_p_recurrence(m, b), std::invalid_argument);
    CHECK_NOTHROW(guess_p_recurrence(motzkin(guess_terms_required(b) - 1), b));
}

TEST_CASE("evidence rows") {
    EvidenceRow r;
    r.singular = true;
    r.guess.recurrence = Recurrence{};
    CHECK(r.consistent());
    r.singular = false;
    r.group_defined = true;
    r.group_finite = false;
    r.symmetry_predicate = false;
    CHECK_FALSE(r.consistent());
    r.guess.recurrence.reset();
    CHECK(r.consistent());
}
