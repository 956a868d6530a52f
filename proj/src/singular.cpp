#include "qwalk/closedforms.hpp"

namespace qwalk {

GrammarSystem grammar_system(const BiSeries& A, const BiSeries& B, const BiSeries& C, int N) {
    BiSeries AB = A * B;
    std::function<BiSeries(const BiSeries&)> phi = [&](const BiSeries& m) {
        return BiSeries(Laurent(1)) + C * m + AB * (m * m);
    };
    GrammarSystem g;
    g.A = A;
    g.B = B;
    g.C = C;
    g.M = solve_fixed_point(phi, N);
    // (MA)* M, summed term by term; MA has positive valuation.
    BiSeries MA = (g.M * A).trunc(N);
    BiSeries term = g.M, sum = g.M;
    while (true) {
        term = (term * MA).trunc(N);
        if (term.is_zero()) break;
        sum = sum + term;
    }
    g.S = sum;
    return g;
}

GrammarSystem grammar_system(const StepSet& s, int N, bool track_xy) {
    Governing gov = governing_constraint(s);
    BiSeries A = BiSeries::zero(), B = BiSeries::zero(), C = BiSeries::zero();
    for (auto [i, j] : playable_steps(s).vectors()) {
        BiSeries w = BiSeries::monomial(track_xy ? Laurent::monomial(1, i, j) : Laurent(1), 1);
        int c = gov.axis == 0 ? i : j;
        (c > 0 ? A : c < 0 ? B : C) += w;
    }
    return grammar_system(A, B, C, N);
}

BiSeries grammar_residual_M(const GrammarSystem& g) {
    return g.M - (BiSeries(Laurent(1)) + g.C * g.M + (g.A * g.B) * (g.M * g.M));
}

BiSeries grammar_residual_S(const GrammarSystem& g) {
    BiSeries MA = g.M * g.A;
    BiSeries closed = (g.M * g.M) * g.A / (BiSeries(Laurent(1)) - MA) + g.M;
    return g.S - closed;
}

BiSeries singular_series(const StepSet& s, int N) {
    if (!is_singular(s) || !has_valid_walk(s))
        throw std::invalid_argument(s.str() + " is not a singular step set with walks");
    return grammar_system(s, N).S;
}

TSeries singular_counting_series(const StepSet& s, int N) {
    if (!is_singular(s) || !has_valid_walk(s))
        throw std::invalid_argument(s.str() + " is not a singular step set with walks");
    return constant_part(grammar_system(s, N, false).S);
}

std::vector<Check> singular_class_checks(int k, const VerifyConfig& cfg) {
    std::vector<Check> out;
    const int Nc = cfg.count_order, Nq = cfg.complete_order;
    TSeries class_totals = totals_series(count_walks(class_representative(k), Nc));

    for (unsigned m = 0; m < 256; ++m) {
        StepSet s(static_cast<std::uint8_t>(m));
        if (s.size() != 3 || !(classify(s) == ClassId::singular(k))) continue;
        std::string tag = "{" + s.str() + "}";
        TSeries counts = totals_series(count_walks(s, Nc));
        out.push_back(compare("grammar counting series " + tag, singular_counting_series(s, Nc), counts, 0, Nc));
        GrammarSystem g = grammar_system(s, Nq);
        BiSeries oracle = complete_series(count_walks(s, Nq));
        out.push_back(compare("grammar complete series " + tag, g.S, oracle, 0, Nq));
        out.push_back(expect_zero("grammar M residual " + tag, grammar_residual_M(g), 0, Nq));
        out.push_back(expect_zero("grammar S residual " + tag, grammar_residual_S(g), 0, Nq));
    }

    TableRow printed = table_row_series(k, Nc, Form::Printed, Nq);
    TableRow fixed = table_row_series(k, Nc, Form::Corrected, 0);
    out.push_back(compare("table counting form", fixed.W, class_totals, 0, Nc));
    if (k == 2 || k == 3) {
        out.push_back(expect_mismatch("printed counting form of row " + std::to_string(k) + " belongs to the other row",
                                      compare("", printed.W, class_totals, 0, Nc)));
    }
    BiSeries frame_oracle = complete_series(count_walks(printed.frame, Nq));
    out.push_back(compare("table complete form on {" + printed.frame.str() + "}", printed.Q->trunc(Nq), frame_oracle,
                          0, Nq));
    out.push_back(compare("grammar series equals table complete form on {" + printed.frame.str() + "}",
                          singular_series(printed.frame, Nq), printed.Q->trunc(Nq), 0, Nq));
    if (k == 2) {
        using D = Direction;
        BiSeries t1 = BiSeries::t(1);
        BiSeries A = t1 * Laurent::monomial(1, 1, 1), B = t1 * Laurent::monomial(1, -1, -1);
        GrammarSystem wrong = grammar_system(A, B, t1 * Laurent::x(), Nq);
        GrammarSystem right = grammar_system(A, B, t1 * Laurent::y(), Nq);
        StepSet ex{D::NE, D::SW, D::N};
        BiSeries oracle = complete_series(count_walks(ex, Nq));
        out.push_back(compare("worked example with C = y t", right.S, oracle, 0, Nq));
        out.push_back(expect_mismatch("worked example with C = x t as printed", compare("", wrong.S, oracle, 0, Nq)));
    }
    return out;
}

}  // namespace qwalk
