#include "qwalk/group.hpp"

#include "qwalk/kernel.hpp"

#include <future>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qwalk {

namespace {

constexpr unsigned long kPrime = 2305843009213693951UL;  // 2^61 - 1
constexpr std::uint64_t kSeed = 20090626;

struct EvalPoint {
    unsigned long x, y;
};

const std::vector<EvalPoint>& eval_points() {
    static const std::vector<EvalPoint> pts = [] {
        std::mt19937_64 rng(kSeed);
        std::vector<EvalPoint> v;
        for (int k = 0; k < 3; ++k) v.push_back({rng() % kPrime, rng() % kPrime});
        return v;
    }();
    return pts;
}

unsigned long mulmod(unsigned long a, unsigned long b) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

Poly2 to_poly(const Laurent& l) {
    Poly2 p;
    l.for_each([&](int ex, int ey, const Rat& c) {
        if (c.get_den() != 1) throw std::domain_error("kernel coefficient is not integral");
        p = p + Poly2::monomial(c.get_num(), ex, ey);
    });
    return p;
}

}  // namespace

RatFunc::RatFunc(Poly2 n, Poly2 d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den = Poly2(1);
        return;
    }
    Poly2 g = gcd(num, den);
    Poly2 q;
    if (!(g == Poly2(1))) {
        if (!num.divide_exact(g, q)) throw std::logic_error("gcd does not divide numerator");
        num = q;
        if (!den.divide_exact(g, q)) throw std::logic_error("gcd does not divide denominator");
        den = q;
    }
    if (sgn(den.leading_coefficient()) < 0) {
        num = -num;
        den = -den;
    }
}

RatFunc RatFunc::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return RatFunc(Poly2::parse(text), Poly2(1));
    auto strip = [](std::string s) {
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
        return s;
    };
    return RatFunc(Poly2::parse(strip(text.substr(0, slash))), Poly2::parse(strip(text.substr(slash + 1))));
}

std::string RatFunc::str() const {
    auto wrap = [](const Poly2& p) {
        std::string s = p.str();
        bool compound = s.find_first_of("+-", 1) != std::string::npos;
        return compound ? "(" + s + ")" : s;
    };
    if (den == Poly2(1)) return num.str();
    std::string d = den.str();
    bool product = d.find_first_of("+-*", 1) != std::string::npos;
    return wrap(num) + "/" + (product ? "(" + d + ")" : d);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return ratfuncs_equal(a, b); }

RationalMap RationalMap::identity() { return {RatFunc(Poly2::x(), Poly2(1)), RatFunc(Poly2::y(), Poly2(1))}; }

RationalMap RationalMap::swap_xy() const {
    return {RatFunc(second.num.swap_xy(), second.den.swap_xy()), RatFunc(first.num.swap_xy(), first.den.swap_xy())};
}

std::string RationalMap::str() const { return "(" + first.str() + ", " + second.str() + ")"; }

std::optional<Generators> try_generators(const StepSet& s) {
    KernelCoeffs k = kernel_coeffs(s);
    if (k.a.is_zero() || k.c.is_zero() || k.at.is_zero() || k.ct.is_zero()) return std::nullopt;
    Poly2 a = to_poly(k.a), c = to_poly(k.c), at = to_poly(k.at), ct = to_poly(k.ct);
    Generators g;
    g.tau_y = {RatFunc(Poly2::x(), Poly2(1)), RatFunc(c, a * Poly2::y())};
    g.tau_x = {RatFunc(ct, at * Poly2::x()), RatFunc(Poly2::y(), Poly2(1))};
    return g;
}

Generators generators(const StepSet& s) {
    auto g = try_generators(s);
    if (!g) throw std::domain_error("degenerate kernel for " + s.str() + ": the group is not defined");
    return *g;
}

RatFunc substitute(const RatFunc& f, const RationalMap& g) {
    int dx = std::max(f.num.deg_x(), f.den.deg_x());
    int dy = std::max(f.num.deg_y(), f.den.deg_y());
    dx = std::max(dx, 0);
    dy = std::max(dy, 0);
    auto powers = [](const Poly2& p, int n) {
        std::vector<Poly2> v{Poly2(1)};
        for (int k = 1; k <= n; ++k) v.push_back(v.back() * p);
        return v;
    };
    auto xn = powers(g.first.num, dx), xd = powers(g.first.den, dx);
    auto yn = powers(g.second.num, dy), yd = powers(g.second.den, dy);
    auto hom = [&](const Poly2& p) {
        Poly2 out;
        for (int j = 0; j <= p.deg_y(); ++j) {
            const ZPoly& z = p.coeff_y(j);
            Poly2 row;
            for (int i = 0; i < static_cast<int>(z.size()); ++i)
                if (sgn(z[i]) != 0) row = row + Poly2(z[i]) * xn[i] * xd[dx - i];
            if (!row.is_zero()) out = out + row * yn[j] * yd[dy - j];
        }
        return out;
    };
    Poly2 n = hom(f.num), d = hom(f.den);
    if (d.is_zero()) throw std::domain_error("composition produced a zero denominator");
    return RatFunc(n, d);
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
    return {substitute(f.first, g), substitute(f.second, g)};
}

bool ratfuncs_equal(const RatFunc& f, const RatFunc& g) {
    for (const auto& pt : eval_points()) {
        unsigned long l = mulmod(f.num.eval_mod(pt.x, pt.y, kPrime), g.den.eval_mod(pt.x, pt.y, kPrime));
        unsigned long r = mulmod(g.num.eval_mod(pt.x, pt.y, kPrime), f.den.eval_mod(pt.x, pt.y, kPrime));
        if (l != r) return false;
    }
    return (f.num * g.den - g.num * f.den).is_zero();
}

bool maps_equal(const RationalMap& f, const RationalMap& g) {
    return ratfuncs_equal(f.first, g.first) && ratfuncs_equal(f.second, g.second);
}

bool kernel_invariance_check(const StepSet& s) {
    Generators g = generators(s);
    Poly2 num;
    for (auto [i, j] : s.vectors()) num = num + Poly2::monomial(1, i + 1, j + 1);
    RatFunc inv(num, Poly2::x() * Poly2::y());
    return ratfuncs_equal(substitute(inv, g.tau_x), inv) && ratfuncs_equal(substitute(inv, g.tau_y), inv);
}

std::string OrbitResult::str() const {
    if (finite) return "finite order " + std::to_string(order) + " (D" + std::to_string(dihedral_k()) + ")";
    return "exceeds bound " + std::to_string(bound) + " (max degree seen " + std::to_string(max_degree_seen) + ")";
}

static std::string map_key(const RationalMap& m) {
    const auto& pt = eval_points()[0];
    auto val = [&](const RatFunc& f) {
        unsigned long d = f.den.eval_mod(pt.x, pt.y, kPrime);
        if (d == 0) return std::string("inf");
        Integer inv, dv = d, pv = kPrime;
        mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), pv.get_mpz_t());
        return std::to_string(mulmod(f.num.eval_mod(pt.x, pt.y, kPrime), inv.get_ui()));
    };
    return val(m.first) + ":" + val(m.second);
}

OrbitResult group_order(const StepSet& s, int element_bound, int degree_bound) {
    Generators g = generators(s);
    std::vector<RationalMap> elems{RationalMap::identity()};
    std::unordered_map<std::string, std::vector<std::size_t>> buckets;
    buckets[map_key(elems[0])].push_back(0);
    OrbitResult res;
    res.bound = element_bound;
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const RationalMap* gen : {&g.tau_x, &g.tau_y}) {
            RationalMap h = compose(*gen, elems[head]);
            res.max_degree_seen = std::max(res.max_degree_seen, h.degree());
            if (h.degree() > degree_bound) return res;
            std::string key = map_key(h);
            auto& b = buckets[key];
            bool found = std::any_of(b.begin(), b.end(), [&](std::size_t k) { return maps_equal(elems[k], h); });
            if (found) continue;
            b.push_back(elems.size());
            elems.push_back(std::move(h));
            if (static_cast<int>(elems.size()) > element_bound) return res;
        }
    }
    res.finite = true;
    res.order = static_cast<int>(elems.size());
    return res;
}

std::vector<int> alternating_word_degrees(const StepSet& s, int count, int degree_cap) {
    Generators g = generators(s);
    RationalMap step = compose(g.tau_x, g.tau_y);
    RationalMap w = RationalMap::identity();
    std::vector<int> out;
    for (int n = 1; n <= count; ++n) {
        w = compose(step, w);
        out.push_back(w.degree());
        if (w.degree() > degree_cap) break;
    }
    return out;
}

bool strictly_increasing(const std::vector<int>& v) {
    for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] <= v[k - 1]) return false;
    return true;
}

bool SurveyRow::predicate() const {
    return sym.x_axis_symmetric || sym.y_axis_symmetric || sym.rev_invariant || sym.reflect_rev_invariant ||
           kreweras_like;
}

bool SurveyRow::consistent() const {
    if (singular) return true;
    return constructible && orbit.finite == predicate();
}

std::vector<SurveyRow> finite_group_survey(int element_bound, int degree_bound, int jobs) {
    std::vector<StepSet> sets;
    for (unsigned m = 0; m < 256; ++m) {
        StepSet s(static_cast<std::uint8_t>(m));
        if (s.size() == 3 && has_valid_walk(s)) sets.push_back(s);
    }
    auto work = [&](const StepSet& s) {
        SurveyRow r;
        r.steps = s;
        r.singular = is_singular(s);
        r.sym = symmetry_report(s);
        r.kreweras_like = s == class_representative(5) || s == rev(class_representative(5));
        r.constructible = try_generators(s).has_value();
        if (r.constructible) r.orbit = group_order(s, element_bound, degree_bound);
        return r;
    };
    std::vector<SurveyRow> rows(sets.size());
    jobs = std::max(1, jobs);
    for (std::size_t start = 0; start < sets.size(); start += jobs) {
        std::vector<std::future<SurveyRow>> fs;
        for (std::size_t k = start; k < std::min(sets.size(), start + jobs); ++k)
            fs.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, work, sets[k]));
        for (std::size_t k = 0; k < fs.size(); ++k) rows[start + k] = fs[k].get();
    }
    return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
    std::ostringstream os;
    os << "steps,singular,group_order_or_bound,x_sym,y_sym,rev_inv,reflect_rev_inv,conjecture_consistent\n";
    auto b = [](bool v) { return v ? "true" : "false"; };
    for (const auto& r : rows) {
        std::string order = !r.constructible ? "undefined"
                            : r.orbit.finite ? std::to_string(r.orbit.order)
                                             : ">" + std::to_string(r.orbit.bound);
        os << '"' << r.steps.str() << "\"," << b(r.singular) << "," << order << "," << b(r.sym.x_axis_symmetric)
           << "," << b(r.sym.y_axis_symmetric) << "," << b(r.sym.rev_invariant) << ","
           << b(r.sym.reflect_rev_invariant) << "," << (r.singular ? "n/a" : b(r.consistent())) << "\n";
    }
    return os.str();
}

}  // namespace qwalk
