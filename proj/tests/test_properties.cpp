#include "doctest.h"
#include "qwalk/closedforms.hpp"
#include "qwalk/group.hpp"
#include "qwalk/guess.hpp"

#include <random>

using namespace qwalk;

namespace {

std::mt19937& rng() {
    static std::mt19937 g(20261019);
    return g;
}

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

TSeries random_series(int N, bool unit_constant) {
    std::vector<Rat> c;
    for (int n = 0; n <= N; ++n) c.push_back(Rat(uniform(-9, 9), uniform(1, 4)));
    if (unit_constant) c[0] = 1;
    for (auto& v : c) v.canonicalize();
    return tseries(c, N);
}

BiSeries random_biseries(int N) {
    std::vector<Laurent> c;
    for (int n = 0; n <= N; ++n) {
        Laurent l;
        for (int k = 0; k < 3; ++k) l += Laurent::monomial(uniform(-5, 5), uniform(-2, 2), uniform(-1, 1));
        c.push_back(l);
    }
    c[0] = Laurent(1);
    return BiSeries(c, 0, N);
}

StepSet random_stepset() { return StepSet(static_cast<std::uint8_t>(uniform(1, 255))); }

}  // namespace

TEST_CASE("series ring laws") {
    for (int trial = 0; trial < 30; ++trial) {
        int N = uniform(3, 15);
        TSeries f = random_series(N, false), g = random_series(N, false), h = random_series(N, true);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f / h) * h == f);
        TSeries r = sqrt_series(h);
        CHECK(r * r == h);
    }
}

TEST_CASE("bivariate square roots and monomial maps") {
    for (int trial = 0; trial < 15; ++trial) {
        int N = uniform(3, 8);
        BiSeries f = random_biseries(N), g = random_biseries(N);
        BiSeries r = sqrt_series(f);
        CHECK(r * r == f);
        // x -> 1/x is an involution and a ring map
        auto inv = [](const BiSeries& s) { return monomial_map(s, -1, 0, 0, 1); };
        CHECK(inv(inv(f)) == f);
        CHECK(inv(f * g) == inv(f) * inv(g));
        PartSplit p = part_split(f);
        CHECK(p.pos + p.zero + p.neg == f);
    }
}

TEST_CASE("fundamental equation for random step sets of any size") {
    for (int trial = 0; trial < 40; ++trial) {
        StepSet s = random_stepset();
        WalkTable w = count_walks(s, uniform(0, 10));
        CHECK(verify_fundamental_equation(s, w));
        CHECK(verify_kernel_form(s, w));
    }
}

TEST_CASE("reflect preserves totals and rev preserves excursions") {
    for (int trial = 0; trial < 40; ++trial) {
        StepSet s = random_stepset();
        const int n = 12;
        CHECK(count_totals(s, n) == count_totals(reflect(s), n));
        CHECK(origin_series(count_walks(s, n)) == origin_series(count_walks(rev(s), n)));
    }
}

TEST_CASE("classification is stable under reflect and matches singularity") {
    for (unsigned m = 0; m < 256; ++m) {
        StepSet s(static_cast<std::uint8_t>(m));
        if (s.size() != 3) continue;
        ClassId c = classify(s);
        if (c.kind == ClassId::Kind::Singular) {
            CHECK(is_singular(s));
            CHECK(singular_counting_series(s, 12) == totals_series(count_walks(s, 12)));
        }
        if (c.kind == ClassId::Kind::NonSingular) {
            CHECK_FALSE(is_singular(s));
            Generators g = generators(s);
            CHECK(maps_equal(compose(g.tau_x, g.tau_x), RationalMap::identity()));
            CHECK(maps_equal(compose(g.tau_y, g.tau_y), RationalMap::identity()));
        }
    }
}

TEST_CASE("hook formula summed over endpoints gives the totals") {
    CountSequence tot = count_totals(parse_stepset("N,SE,W"), 14);
    for (int n = 0; n <= 14; ++n) {
        Integer sum = 0;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) sum += tandem_counts(n, i, j);
        CHECK(sum == tot[n]);
    }
}

TEST_CASE("guessing recovers recurrences built at random") {
    for (int trial = 0; trial < 12; ++trial) {
        int r = uniform(1, 3), d = uniform(0, 2);
        // a monic leading coefficient keeps the sequence integral
        Recurrence rec;
        rec.order = r;
        rec.degree = d;
        rec.p.assign(r + 1, std::vector<Integer>(d + 1, 0));
        for (int j = 0; j < r; ++j)
            for (int k = 0; k <= d; ++k) rec.p[j][k] = uniform(-3, 3);
        rec.p[0][d] = uniform(1, 3);
        rec.p[r][0] = 1;
        CountSequence a;
        for (int j = 0; j < r; ++j) a.push_back(uniform(1, 5));
        a.resize(guess_terms_required(GuessBounds{4, 3, 10}) + 5, 0);
        CountSequence g = rec.regenerate(a);
        CHECK(rec.holds_on(g));
        GuessReport rep = guess_p_recurrence(g, GuessBounds{4, 3, 10});
        REQUIRE(rep.found());
        CHECK(rep.recurrence->holds_on(g));
        CHECK(rep.recurrence->order + rep.recurrence->degree <= r + d);
    }
}
