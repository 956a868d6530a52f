#include "qwalk/closedforms.hpp"

#include <map>
#include <set>

namespace qwalk {

Integer hook_count(int n1, int n2, int n3) {
    if (!(n1 >= n2 && n2 >= n3 && n3 >= 0)) return 0;
    Integer num = Integer(n1 - n2 + 1) * (n2 - n3 + 1) * (n1 - n3 + 2) * factorial(n1 + n2 + n3);
    Integer den = factorial(n1 + 2) * factorial(n2 + 1) * factorial(n3);
    return num / den;
}

Integer tandem_counts(int n, int i, int j) {
    if (n < 0 || i < 0 || j < 0) return 0;
    int rem = n - 2 * i - j;
    if (rem < 0 || rem % 3 != 0) return 0;
    int n3 = rem / 3, n2 = n3 + i, n1 = n2 + j;
    return hook_count(n1, n2, n3);
}

Integer tandem_counts_printed(int n, int i, int j) {
    if (n < 0 || i < 0 || j < 0) return 0;
    int a = n - i - 2 * j, b = n - i + j + 3, c = n + 2 * i + j + 6;
    if (a < 0 || b < 0 || a % 3 || b % 3 || c % 3) return 0;
    Integer num = Integer(i + 1) * (j + 1) * (i + j + 2) * factorial(n);
    Integer den = factorial(a / 3) * factorial(b / 3) * factorial(c / 3);
    return num / den;
}

std::vector<std::vector<int>> tableau(const std::vector<Direction>& walk) {
    std::vector<std::vector<int>> rows(3);
    for (std::size_t k = 0; k < walk.size(); ++k) {
        int r;
        switch (walk[k]) {
            case Direction::N: r = 0; break;
            case Direction::SE: r = 1; break;
            case Direction::W: r = 2; break;
            default: throw std::invalid_argument("tableau: walk uses a step outside N, SE, W");
        }
        rows[r].push_back(static_cast<int>(k) + 1);
    }
    return rows;
}

TableauShape tableau_shape(const std::vector<Direction>& walk) {
    auto rows = tableau(walk);
    return {static_cast<int>(rows[0].size()), static_cast<int>(rows[1].size()), static_cast<int>(rows[2].size())};
}

BiSeries tandem_series(int N) {
    std::vector<Laurent> c;
    for (int n = 0; n <= N; ++n) {
        LaurentBuilder b(0, n, 0, n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; 2 * i + j <= n; ++j) {
                Integer a = tandem_counts(n, i, j);
                if (sgn(a)) b.add(i, j, Rat(a));
            }
        c.push_back(b.build());
    }
    return BiSeries(std::move(c), 0, N);
}

namespace {

bool is_standard(const std::vector<std::vector<int>>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
            if (r > 0 && (c >= rows[r - 1].size() || rows[r][c] <= rows[r - 1][c])) return false;
        }
    }
    return true;
}

void quarter_plane_walks(std::vector<Direction>& prefix, int x, int y, int n,
                         const std::function<void(const std::vector<Direction>&)>& visit) {
    visit(prefix);
    if (static_cast<int>(prefix.size()) == n) return;
    for (Direction d : {Direction::N, Direction::SE, Direction::W}) {
        auto [i, j] = vec(d);
        if (x + i < 0 || y + j < 0) continue;
        prefix.push_back(d);
        quarter_plane_walks(prefix, x + i, y + j, n, visit);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Check> tandem_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    const int Nc = cfg.count_order, Nq = cfg.complete_order;
    StepSet s = class_representative(7);
    WalkTable w = count_walks(s, std::max(Nc, Nq));
    TSeries tot = totals_series(w).trunc(Nc);
    out.push_back(compare("Motzkin counting form", table_row_series(7, Nc, Form::Corrected, 0).W, tot, 0, Nc));
    BiSeries oracle = complete_series(w).trunc(Nq);
    out.push_back(compare("hook formula with i = n2 - n3, j = n1 - n2", tandem_series(Nq), oracle, 0, Nq));
    out.push_back(expect_mismatch("hook formula with i and j as displayed disagrees",
                                  compare("", *table_row_series(7, 0, Form::Printed, Nq).Q, oracle, 0, Nq)));

    // Walk -> tableau: standard, injective, and the shape counts match the hook formula.
    const int L = 10;
    std::set<std::vector<std::vector<int>>> seen;
    std::map<std::tuple<int, int, int>, long> per_shape;
    bool standard = true, shape_matches_end = true;
    long walks = 0;
    std::vector<Direction> prefix;
    quarter_plane_walks(prefix, 0, 0, L, [&](const std::vector<Direction>& wk) {
        ++walks;
        auto rows = tableau(wk);
        standard = standard && is_standard(rows);
        seen.insert(rows);
        TableauShape sh = tableau_shape(wk);
        int x = 0, y = 0;
        for (Direction d : wk) {
            x += vec(d).first;
            y += vec(d).second;
        }
        shape_matches_end = shape_matches_end && x == sh.n2 - sh.n3 && y == sh.n1 - sh.n2;
        per_shape[{sh.n1, sh.n2, sh.n3}]++;
    });
    out.push_back(expect_true("tableaux of walks are standard", standard, L));
    out.push_back(expect_true("walk to tableau map is injective", static_cast<long>(seen.size()) == walks, L));
    out.push_back(expect_true("endpoint is (n2 - n3, n1 - n2)", shape_matches_end, L));
    bool counts = true;
    for (const auto& [shape, m] : per_shape) {
        auto [a, b, c] = shape;
        counts = counts && hook_count(a, b, c) == m;
    }
    out.push_back(expect_true("walks per shape equal hook counts", counts, L));
    return out;
}

}  // namespace qwalk
