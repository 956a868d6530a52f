#include "qwalk/enumerate.hpp"

#include <map>

namespace qwalk {

Integer Layer::total() const {
    Integer s = 0;
    for (const auto& c : cells) s += c;
    return s;
}

Layer next_layer(const StepSet& s, const Layer& prev) {
    Layer out(prev.n + 1);
    auto steps = s.vectors();
    for (int i = 0; i <= prev.n; ++i)
        for (int j = 0; j <= prev.n; ++j) {
            const Integer& c = prev.at(i, j);
            if (sgn(c) == 0) continue;
            for (auto [a, b] : steps) {
                int ni = i + a, nj = j + b;
                if (ni < 0 || nj < 0) continue;
                out.at(ni, nj) += c;
            }
        }
    return out;
}

WalkTable count_walks(const StepSet& s, int n_max) {
    WalkTable w{s, n_max, {}};
    Layer l(0);
    l.at(0, 0) = 1;
    w.layers.push_back(l);
    for (int n = 1; n <= n_max; ++n) w.layers.push_back(next_layer(s, w.layers.back()));
    return w;
}

CountSequence totals(const WalkTable& w) {
    CountSequence c;
    for (const auto& l : w.layers) c.push_back(l.total());
    return c;
}

CountSequence count_totals(const StepSet& s, int n_max) {
    CountSequence c;
    Layer l(0);
    l.at(0, 0) = 1;
    c.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        l = next_layer(s, l);
        c.push_back(l.total());
    }
    return c;
}

BiSeries slice(const WalkTable& w, Slice which) {
    std::vector<Laurent> coeffs;
    for (const auto& l : w.layers) {
        LaurentBuilder b(0, l.n, 0, 0);
        for (int k = 0; k <= l.n; ++k) {
            const Integer* c = nullptr;
            switch (which) {
                case Slice::XAxis: c = &l.at(k, 0); break;
                case Slice::YAxis: c = &l.at(0, k); break;
                case Slice::Diagonal: c = &l.at(k, k); break;
                case Slice::Origin: c = k == 0 ? &l.at(0, 0) : nullptr; break;
            }
            if (c && sgn(*c) != 0) b.add(k, 0, Rat(*c));
        }
        coeffs.push_back(b.build());
    }
    return BiSeries(std::move(coeffs), 0, w.n_max);
}

TSeries origin_series(const WalkTable& w) { return constant_part(slice(w, Slice::Origin)); }

TSeries totals_series(const WalkTable& w) {
    std::vector<Rat> c;
    for (const auto& t : totals(w)) c.push_back(Rat(t));
    return TSeries(std::move(c), 0, w.n_max);
}

BiSeries complete_series(const WalkTable& w) {
    std::vector<Laurent> coeffs;
    for (const auto& l : w.layers) {
        LaurentBuilder b(0, l.n, 0, l.n);
        for (int i = 0; i <= l.n; ++i)
            for (int j = 0; j <= l.n; ++j)
                if (sgn(l.at(i, j)) != 0) b.add(i, j, Rat(l.at(i, j)));
        coeffs.push_back(b.build());
    }
    return BiSeries(std::move(coeffs), 0, w.n_max);
}

namespace {

using Sparse = std::map<std::pair<int, int>, Integer>;

void add_shifted(Sparse& r, const Layer& l, int a, int b, const Integer& sign, bool row0, bool col0) {
    for (int i = 0; i <= l.n; ++i)
        for (int j = 0; j <= l.n; ++j) {
            if (row0 && j != 0) continue;
            if (col0 && i != 0) continue;
            const Integer& c = l.at(i, j);
            if (sgn(c) != 0) r[{i + a, j + b}] += sign * c;
        }
}

bool all_zero(const Sparse& r) {
    for (const auto& [k, v] : r)
        if (sgn(v) != 0) return false;
    return true;
}

}  // namespace

bool verify_fundamental_equation(const StepSet& s, const WalkTable& w) {
    auto steps = s.vectors();
    bool corner = s.contains(-1, -1);
    for (int n = 0; n <= w.n_max; ++n) {
        Sparse r;
        add_shifted(r, w.layers[n], 0, 0, 1, false, false);
        if (n == 0) r[{0, 0}] -= 1;
        if (n > 0) {
            const Layer& p = w.layers[n - 1];
            for (auto [a, b] : steps) {
                add_shifted(r, p, a, b, -1, false, false);
                if (b == -1) add_shifted(r, p, a, b, 1, true, false);
                if (a == -1) add_shifted(r, p, a, b, 1, false, true);
            }
            if (corner) r[{-1, -1}] -= p.at(0, 0);
        }
        if (!all_zero(r)) return false;
    }
    return true;
}

bool verify_kernel_form(const StepSet& s, const WalkTable& w) {
    // Multiply through by xy: shifts by (1,1) on every term.
    auto steps = s.vectors();
    bool corner = s.contains(-1, -1);
    for (int n = 0; n <= w.n_max; ++n) {
        Sparse r;
        add_shifted(r, w.layers[n], 1, 1, 1, false, false);
        if (n == 0) r[{1, 1}] -= 1;
        if (n > 0) {
            const Layer& p = w.layers[n - 1];
            for (auto [a, b] : steps) add_shifted(r, p, a + 1, b + 1, -1, false, false);
            for (auto [a, b] : steps) {
                if (b == -1) add_shifted(r, p, a + 1, 0, 1, true, false);
                if (a == -1) add_shifted(r, p, 0, b + 1, 1, false, true);
            }
            if (corner) r[{0, 0}] -= p.at(0, 0);
        }
        if (!all_zero(r)) return false;
    }
    return true;
}

void write_table_jsonl(std::ostream& os, const WalkTable& w) {
    for (const auto& l : w.layers)
        for (int i = 0; i <= l.n; ++i)
            for (int j = 0; j <= l.n; ++j)
                if (sgn(l.at(i, j)) != 0)
                    os << "{\"n\":" << l.n << ",\"i\":" << i << ",\"j\":" << j << ",\"count\":\""
                       << l.at(i, j).get_str() << "\"}\n";
}

void write_counts_csv(std::ostream& os, const CountSequence& c) {
    os << "n,count\n";
    for (std::size_t n = 0; n < c.size(); ++n) os << n << "," << c[n].get_str() << "\n";
}

}  // namespace qwalk
