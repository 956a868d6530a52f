#include "qwalk/guess.hpp"

#include "qwalk/group.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;
constexpr u64 kPrime = (1ULL << 61) - 1;

u64 mulmod(u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % kPrime); }

u64 powmod(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

u64 inv(u64 a) { return powmod(a, kPrime - 2); }

// Rank of a matrix modulo the prime.
int rank_mod(std::vector<std::vector<u64>> m, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(m.size()); ++i)
            if (m[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        u64 iv = inv(m[rank][c]);
        for (int k = c; k < cols; ++k) m[rank][k] = mulmod(m[rank][k], iv);
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == rank || !m[i][c]) continue;
            u64 f = m[i][c];
            for (int k = c; k < cols; ++k) m[i][k] = (m[i][k] + kPrime - mulmod(f, m[rank][k])) % kPrime;
        }
        ++rank;
    }
    return rank;
}

// Basis of the rational nullspace.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m, int cols) {
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(m.size()); ++i)
            if (sgn(m[i][c])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        Rat iv = 1 / m[rank][c];
        for (int k = c; k < cols; ++k) m[rank][k] *= iv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == rank || !sgn(m[i][c])) continue;
            Rat f = m[i][c];
            for (int k = c; k < cols; ++k)
                if (sgn(m[rank][k])) m[i][k] -= f * m[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Integer ipow(long n, int k) {
    Integer r = 1;
    for (int i = 0; i < k; ++i) r *= n;
    return r;
}

std::optional<Recurrence> to_recurrence(const std::vector<Rat>& v, int r, int d) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> z;
    Integer g = 0;
    for (const auto& x : v) {
        Integer e = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        z.push_back(e);
    }
    if (g == 0) return std::nullopt;
    Recurrence rec;
    rec.order = r;
    rec.degree = d;
    rec.p.assign(r + 1, std::vector<Integer>(d + 1));
    for (int j = 0; j <= r; ++j)
        for (int k = 0; k <= d; ++k) rec.p[j][k] = z[j * (d + 1) + k] / g;
    int lead_k = -1;
    for (int k = d; k >= 0; --k)
        if (sgn(rec.p[r][k])) {
            lead_k = k;
            break;
        }
    if (lead_k < 0) return std::nullopt;
    if (sgn(rec.p[r][lead_k]) < 0)
        for (auto& pj : rec.p)
            for (auto& c : pj) c = -c;
    return rec;
}

std::string poly_str(const std::vector<Integer>& q) {
    std::string s;
    bool first = true;
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        if (!sgn(q[k])) continue;
        Integer c = abs(q[k]);
        if (!first || sgn(q[k]) < 0) s += sgn(q[k]) < 0 ? "-" : "+";
        first = false;
        std::string mon = k == 0 ? "" : k == 1 ? "n" : "n^" + std::to_string(k);
        if (mon.empty())
            s += c.get_str();
        else if (c == 1)
            s += mon;
        else
            s += c.get_str() + "*" + mon;
    }
    return s;
}

}  // namespace

Integer Recurrence::eval(int j, long n) const {
    Integer v = 0;
    for (int k = degree; k >= 0; --k) v = v * n + p[j][k];
    return v;
}

Integer Recurrence::residual(const CountSequence& a, long n) const {
    Integer s = 0;
    for (int j = 0; j <= order; ++j) s += eval(j, n) * a[n + j];
    return s;
}

bool Recurrence::holds_on(const CountSequence& a) const {
    for (long n = 0; n + order < static_cast<long>(a.size()); ++n)
        if (sgn(residual(a, n))) return false;
    return true;
}

CountSequence Recurrence::regenerate(const CountSequence& a) const {
    CountSequence out(a.begin(), a.begin() + std::min<std::size_t>(order, a.size()));
    for (long n = 0; n + order < static_cast<long>(a.size()); ++n) {
        Integer lead = eval(order, n);
        if (!sgn(lead)) {
            out.push_back(a[n + order]);
            continue;
        }
        Integer s = 0;
        for (int j = 0; j < order; ++j) s -= eval(j, n) * out[n + j];
        if (!mpz_divisible_p(s.get_mpz_t(), lead.get_mpz_t())) break;
        out.push_back(s / lead);
    }
    return out;
}

std::string Recurrence::str() const {
    std::string s;
    bool first = true;
    for (int j = order; j >= 0; --j) {
        const auto& pj = p[j];
        Integer g = 0;
        int lead_k = -1;
        for (int k = 0; k <= degree; ++k) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), pj[k].get_mpz_t());
            if (sgn(pj[k])) lead_k = k;
        }
        if (lead_k < 0) continue;
        int sign = sgn(pj[lead_k]);
        std::vector<Integer> q(lead_k + 1);
        int nterms = 0;
        for (int k = 0; k <= lead_k; ++k) {
            q[k] = pj[k] / g * sign;
            if (sgn(q[k])) ++nterms;
        }
        std::string factor;
        if (!(lead_k == 0 && q[0] == 1)) factor = nterms > 1 ? "(" + poly_str(q) + ")" : poly_str(q);
        std::string body;
        if (g != 1) body = g.get_str();
        if (!factor.empty()) body += (body.empty() ? "" : "*") + factor;
        std::string term = j == 0 ? "a(n)" : "a(n+" + std::to_string(j) + ")";
        body += (body.empty() ? "" : "*") + term;
        if (first)
            s += (sign < 0 ? "-" : "") + body;
        else
            s += (sign < 0 ? " - " : " + ") + body;
        first = false;
    }
    return s + " = 0";
}

std::string GuessReport::str() const {
    std::ostringstream os;
    if (!id.empty()) os << id << ": ";
    if (recurrence)
        os << "Found order " << recurrence->order << " degree " << recurrence->degree << ": " << recurrence->str();
    else
        os << "NotFound within order " << bounds.max_order << ", degree " << bounds.max_degree;
    os << " (" << terms << " terms, guard " << bounds.guard << ")";
    return os.str();
}

int guess_terms_required(const GuessBounds& b) {
    return (b.max_order + 1) * (b.max_degree + 1) + b.guard + b.max_order;
}

GuessReport guess_p_recurrence(const CountSequence& seq, const GuessBounds& b, const std::string& id) {
    if (b.max_order < 1 || b.max_degree < 0 || b.guard < 0) throw std::invalid_argument("guess: invalid bounds");
    int need = guess_terms_required(b);
    if (static_cast<int>(seq.size()) < need)
        throw std::invalid_argument("guess: " + std::to_string(seq.size()) + " terms given, " + std::to_string(need) +
                                    " required");
    GuessReport rep;
    rep.id = id;
    rep.bounds = b;
    rep.terms = static_cast<int>(seq.size());
    const long L = static_cast<long>(seq.size());
    std::vector<u64> amod(L);
    for (long i = 0; i < L; ++i) amod[i] = mpz_fdiv_ui(seq[i].get_mpz_t(), kPrime);

    for (int sum = 1; sum <= b.max_order + b.max_degree; ++sum) {
        for (int r = 1; r <= std::min(sum, b.max_order); ++r) {
            int d = sum - r;
            if (d > b.max_degree) continue;
            int U = (r + 1) * (d + 1);
            long fit = L - r - b.guard;
            if (fit < U) continue;
            std::vector<std::vector<u64>> mm(fit, std::vector<u64>(U));
            for (long n = 0; n < fit; ++n)
                for (int j = 0; j <= r; ++j) {
                    u64 nk = 1;
                    for (int k = 0; k <= d; ++k) {
                        mm[n][j * (d + 1) + k] = mulmod(nk, amod[n + j]);
                        nk = mulmod(nk, static_cast<u64>(n) % kPrime);
                    }
                }
            if (rank_mod(std::move(mm), U) == U) continue;

            auto attempt = [&](long rows) -> std::optional<Recurrence> {
                std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(U));
                for (long n = 0; n < rows; ++n)
                    for (int j = 0; j <= r; ++j)
                        for (int k = 0; k <= d; ++k) m[n][j * (d + 1) + k] = Rat(ipow(n, k) * seq[n + j]);
                for (const auto& v : nullspace(std::move(m), U)) {
                    auto rec = to_recurrence(v, r, d);
                    if (rec && rec->holds_on(seq)) return rec;
                }
                return std::nullopt;
            };
            long short_rows = std::min(fit, static_cast<long>(U) + 10);
            auto rec = attempt(short_rows);
            if (!rec && short_rows < fit) rec = attempt(fit);
            if (rec) {
                rep.recurrence = std::move(rec);
                return rep;
            }
        }
    }
    return rep;
}

bool EvidenceRow::consistent() const {
    if (singular) return guess.found();
    return group_defined && guess.found() == group_finite && group_finite == symmetry_predicate;
}

std::vector<EvidenceRow> holonomy_evidence_survey(const EvidenceConfig& cfg) {
    auto one = [&cfg](int k) {
        EvidenceRow row;
        row.cls = k;
        row.steps = class_representative(k);
        row.singular = classify(row.steps).kind == ClassId::Kind::Singular;
        CountSequence seq = count_totals(row.steps, cfg.n_terms - 1);
        row.guess = guess_p_recurrence(seq, cfg.bounds, "class " + std::to_string(k));
        if (try_generators(row.steps)) {
            row.group_defined = true;
            OrbitResult o = group_order(row.steps, cfg.group_bound, cfg.degree_bound);
            row.group_finite = o.finite;
            row.group_order_or_bound = o.finite ? o.order : o.bound;
        }
        SymmetryReport sym = symmetry_report(row.steps);
        bool kreweras_like = row.steps == class_representative(5) || row.steps == rev(class_representative(5));
        row.symmetry_predicate = sym.x_axis_symmetric || sym.y_axis_symmetric || sym.rev_invariant ||
                                 sym.reflect_rev_invariant || kreweras_like;
        return row;
    };
    std::vector<EvidenceRow> rows(11);
    int jobs = std::max(1, cfg.jobs);
    for (int start = 1; start <= 11; start += jobs) {
        std::vector<std::future<EvidenceRow>> fs;
        for (int k = start; k < start + jobs && k <= 11; ++k) fs.push_back(std::async(std::launch::async, one, k));
        for (auto& f : fs) {
            EvidenceRow r = f.get();
            rows[r.cls - 1] = std::move(r);
        }
    }
    return rows;
}

std::string evidence_csv(const std::vector<EvidenceRow>& rows) {
    std::ostringstream os;
    os << "class,steps,singular,guess,order,degree,recurrence,group,symmetry_predicate,consistent\n";
    auto b = [](bool v) { return v ? "true" : "false"; };
    for (const auto& r : rows) {
        std::string group = !r.group_defined ? "undefined"
                            : r.group_finite ? std::to_string(r.group_order_or_bound)
                                             : ">" + std::to_string(r.group_order_or_bound);
        os << r.cls << ",\"" << r.steps.str() << "\"," << b(r.singular) << ","
           << (r.guess.found() ? "Found" : "NotFound") << ",";
        if (r.guess.found())
            os << r.guess.recurrence->order << "," << r.guess.recurrence->degree << ",\""
               << r.guess.recurrence->str() << "\",";
        else
            os << ",,,";
        os << group << "," << b(r.symmetry_predicate) << "," << b(r.consistent()) << "\n";
    }
    return os.str();
}

}  // namespace qwalk
