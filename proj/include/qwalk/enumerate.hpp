#pragma once

#include "qwalk/rational.hpp"
#include "qwalk/series.hpp"
#include "qwalk/stepset.hpp"

#include <ostream>
#include <vector>

namespace qwalk {

// Counts of walks of one length, indexed by endpoint (i, j) with 0 <= i, j <= n.
struct Layer {
    int n = 0;
    std::vector<Integer> cells;  // (n+1) x (n+1), row i

    Layer() = default;
    explicit Layer(int len) : n(len), cells(static_cast<std::size_t>(len + 1) * (len + 1)) {}
    const Integer& at(int i, int j) const { return cells[static_cast<std::size_t>(i) * (n + 1) + j]; }
    Integer& at(int i, int j) { return cells[static_cast<std::size_t>(i) * (n + 1) + j]; }
    Integer get(int i, int j) const { return (i < 0 || j < 0 || i > n || j > n) ? Integer(0) : at(i, j); }
    Integer total() const;
};

struct WalkTable {
    StepSet steps;
    int n_max = 0;
    std::vector<Layer> layers;

    const Integer& count(int n, int i, int j) const { return layers[n].at(i, j); }
};

using CountSequence = std::vector<Integer>;

Layer next_layer(const StepSet& s, const Layer& prev);
WalkTable count_walks(const StepSet& s, int n_max);
CountSequence totals(const WalkTable& w);
// Streaming version keeping only one layer.
CountSequence count_totals(const StepSet& s, int n_max);

enum class Slice { XAxis, YAxis, Origin, Diagonal };

BiSeries slice(const WalkTable& w, Slice which);
TSeries origin_series(const WalkTable& w);
TSeries totals_series(const WalkTable& w);
// Complete generating function Q(x,y;t) truncated at n_max.
BiSeries complete_series(const WalkTable& w);

bool verify_fundamental_equation(const StepSet& s, const WalkTable& w);
// K(x,y) Q(x,y) = xy - t A(x) Q(x,0) - t B(y) Q(0,y) + chi t Q(0,0), coefficientwise.
bool verify_kernel_form(const StepSet& s, const WalkTable& w);

void write_table_jsonl(std::ostream& os, const WalkTable& w);
void write_counts_csv(std::ostream& os, const CountSequence& c);

}  // namespace qwalk
