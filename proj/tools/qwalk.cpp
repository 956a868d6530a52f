#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/acceptance.hpp"
#include "qwalk/closedforms.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/group.hpp"
#include "qwalk/guess.hpp"
#include "qwalk/stepset.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace qwalk;

namespace {

struct RunConfig {
    std::string target;
    int order = 30;
    int length = 30;
    int group_bound = 200;
    int degree_bound = 64;
    int guess_order = 8;
    int guess_degree = 8;
    int guess_terms = 150;
    int guard = 20;
    std::string format;
    std::string out;
    std::string slice = "totals";
    int jobs = 1;
    bool with_guess = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

StepSet resolve_steps(const std::string& text) {
    if (auto k = parse_class_alias(text)) return class_representative(*k);
    try {
        return parse_stepset(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot open " + cfg.out + " for writing");
    f << text;
}

std::string fmt_or(const RunConfig& cfg, const char* def) { return cfg.format.empty() ? def : cfg.format; }

int cmd_classify(const RunConfig& cfg) {
    StepSet s = resolve_steps(cfg.target);
    if (s.size() != 3) throw UsageError("classify expects three steps, got " + s.str());
    ClassId c = classify(s);
    SymmetryReport sym = symmetry_report(s);
    std::string f = fmt_or(cfg, "text");
    std::ostringstream os;
    if (f == "json") {
        json j = {{"steps", s.str()},
                  {"class", c.str()},
                  {"table_number", c.table_number()},
                  {"singular", c.kind == ClassId::Kind::Singular},
                  {"reflect_partner", reflect(s).str()},
                  {"x_axis_symmetric", sym.x_axis_symmetric},
                  {"y_axis_symmetric", sym.y_axis_symmetric},
                  {"rev_invariant", sym.rev_invariant},
                  {"reflect_rev_invariant", sym.reflect_rev_invariant}};
        os << j.dump(2) << "\n";
    } else if (f == "csv") {
        os << "steps,class,table_number,singular,reflect_partner,x_sym,y_sym,rev_inv,reflect_rev_inv\n";
        os << '"' << s.str() << "\",\"" << c.str() << "\"," << c.table_number() << ","
           << (c.kind == ClassId::Kind::Singular) << ",\"" << reflect(s).str() << "\"," << sym.x_axis_symmetric << ","
           << sym.y_axis_symmetric << "," << sym.rev_invariant << "," << sym.reflect_rev_invariant << "\n";
    } else {
        os << s.str() << ": " << c.str() << "\n";
        os << "singular: " << (c.kind == ClassId::Kind::Singular ? "yes" : "no") << "\n";
        os << "reflect partner: " << reflect(s).str() << "\n";
        os << "x-axis symmetric: " << sym.x_axis_symmetric << ", y-axis symmetric: " << sym.y_axis_symmetric
           << ", rev-invariant: " << sym.rev_invariant << ", reflect-rev-invariant: " << sym.reflect_rev_invariant
           << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_count(const RunConfig& cfg) {
    StepSet s = resolve_steps(cfg.target);
    if (cfg.length < 0) throw UsageError("--length must be non-negative");
    std::string f = fmt_or(cfg, "text");
    std::ostringstream os;
    if (cfg.slice == "totals") {
        CountSequence c = count_totals(s, cfg.length);
        if (f == "csv") {
            write_counts_csv(os, c);
        } else if (f == "json") {
            json arr = json::array();
            for (const auto& v : c) arr.push_back(v.get_str());
            os << json{{"steps", s.str()}, {"totals", arr}}.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
            os << "\n";
        }
        emit(cfg, os.str());
        return 0;
    }
    WalkTable w = count_walks(s, cfg.length);
    if (cfg.slice == "full") {
        if (f == "text") {
            os << to_string(complete_series(w)) << "\n";
        } else if (f == "csv") {
            os << "n,i,j,count\n";
            for (int n = 0; n <= w.n_max; ++n)
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j)
                        if (sgn(w.count(n, i, j))) os << n << "," << i << "," << j << "," << w.count(n, i, j) << "\n";
        } else {
            write_table_jsonl(os, w);
        }
        emit(cfg, os.str());
        return 0;
    }
    Slice which;
    if (cfg.slice == "x")
        which = Slice::XAxis;
    else if (cfg.slice == "y")
        which = Slice::YAxis;
    else if (cfg.slice == "origin")
        which = Slice::Origin;
    else if (cfg.slice == "diagonal")
        which = Slice::Diagonal;
    else
        throw UsageError("unknown slice '" + cfg.slice + "' (totals, x, y, origin, diagonal, full)");
    BiSeries sl = slice(w, which);
    if (f == "text") {
        os << to_string(sl) << "\n";
    } else {
        // the slice is stored as a series in one variable, exponent k
        std::vector<std::tuple<int, int, std::string>> rows;
        for (int n = 0; n <= w.n_max; ++n)
            sl.coeff(n).for_each([&](int ex, int, const Rat& c) { rows.emplace_back(n, ex, c.get_str()); });
        if (f == "csv") {
            os << "n,k,count\n";
            for (auto& [n, k, c] : rows) os << n << "," << k << "," << c << "\n";
        } else {
            json arr = json::array();
            for (auto& [n, k, c] : rows) arr.push_back({{"n", n}, {"k", k}, {"count", c}});
            os << json{{"steps", s.str()}, {"slice", cfg.slice}, {"terms", arr}}.dump(2) << "\n";
        }
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_group(const RunConfig& cfg) {
    StepSet s = resolve_steps(cfg.target);
    auto g = try_generators(s);
    if (!g) {
        std::cerr << "degenerate kernel for " << s.str() << ": the group is not defined\n";
        return 1;
    }
    OrbitResult o = group_order(s, cfg.group_bound, cfg.degree_bound);
    bool inv = kernel_invariance_check(s);
    std::string f = fmt_or(cfg, "text");
    std::ostringstream os;
    if (f == "json") {
        json j = {{"steps", s.str()},
                  {"tau_x", g->tau_x.str()},
                  {"tau_y", g->tau_y.str()},
                  {"finite", o.finite},
                  {"kernel_invariant", inv}};
        if (o.finite) {
            j["order"] = o.order;
            j["dihedral"] = "D" + std::to_string(o.dihedral_k());
        } else {
            j["element_bound"] = o.bound;
            j["max_degree_seen"] = o.max_degree_seen;
        }
        os << j.dump(2) << "\n";
    } else if (f == "csv") {
        os << "steps,tau_x,tau_y,group_order_or_bound,kernel_invariant\n";
        os << '"' << s.str() << "\",\"" << g->tau_x.str() << "\",\"" << g->tau_y.str() << "\","
           << (o.finite ? std::to_string(o.order) : ">" + std::to_string(o.bound)) << "," << inv << "\n";
    } else {
        os << s.str() << "\n";
        os << "tau_x(x,y) = " << g->tau_x.str() << "\n";
        os << "tau_y(x,y) = " << g->tau_y.str() << "\n";
        os << "group: " << o.str() << "\n";
        os << "kernel invariance: " << (inv ? "holds" : "fails") << "\n";
    }
    emit(cfg, os.str());
    return inv ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyConfig vc;
    vc.count_order = cfg.order;
    std::vector<int> classes;
    bool all = cfg.target == "all";
    if (all) {
        for (int k = 1; k <= 11; ++k) classes.push_back(k);
    } else if (auto k = parse_class_alias(cfg.target)) {
        classes.push_back(*k);
    } else {
        throw UsageError("verify expects a class number 1..11 or 'all'");
    }
    std::vector<ClassReport> reports(classes.size());
    int jobs = std::max(1, cfg.jobs);
    for (std::size_t start = 0; start < classes.size(); start += jobs) {
        std::vector<std::future<ClassReport>> fs;
        for (std::size_t i = start; i < std::min(classes.size(), start + jobs); ++i)
            fs.push_back(std::async(std::launch::async, [&vc, k = classes[i]] { return verify_class(k, vc); }));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            reports[start + i] = fs[i].get();
            std::cerr << "class " << reports[start + i].subject << ": "
                      << (reports[start + i].pass() ? "pass" : "FAIL") << "\n";
        }
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass();

    std::vector<CriterionResult> crit;
    if (all) {
        AcceptanceConfig ac;
        ac.verify = vc;
        ac.group_bound = cfg.group_bound;
        ac.degree_bound = cfg.degree_bound;
        ac.evidence.n_terms = cfg.guess_terms;
        ac.evidence.bounds = {cfg.guess_order, cfg.guess_degree, cfg.guard};
        ac.evidence.group_bound = cfg.group_bound;
        ac.evidence.degree_bound = cfg.degree_bound;
        ac.jobs = cfg.jobs;
        crit = run_acceptance(ac);
        for (const auto& c : crit) {
            std::cerr << criterion_line(c) << "\n";
            ok = ok && c.pass;
        }
    }

    std::string f = fmt_or(cfg, "json");
    std::ostringstream os;
    if (f == "text") {
        os << reports_text(reports);
        for (const auto& c : crit) os << criterion_line(c) << "\n";
    } else if (f == "csv") {
        os << "class,check,order_tested,pass,first_mismatch\n";
        for (const auto& r : reports)
            for (const auto& c : r.checks)
                os << r.subject << ",\"" << c.name << "\"," << c.order_tested << "," << (c.pass ? "true" : "false")
                   << ",\"" << c.first_mismatch << "\"\n";
        for (const auto& c : crit)
            os << "criterion " << c.id << ",\"" << c.title << "\",," << (c.pass ? "true" : "false") << ",\""
               << (c.pass ? "" : c.detail) << "\"\n";
    } else if (all) {
        json j = {{"classes", json::parse(reports_json(reports))}, {"criteria", json::array()}};
        for (const auto& c : crit)
            j["criteria"].push_back(
                {{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
        os << j.dump(2) << "\n";
    } else {
        os << reports_json(reports);
    }
    emit(cfg, os.str());
    return ok ? 0 : 1;
}

int cmd_guess(const RunConfig& cfg) {
    StepSet s = resolve_steps(cfg.target);
    GuessBounds b{cfg.guess_order, cfg.guess_degree, cfg.guard};
    CountSequence seq = count_totals(s, cfg.guess_terms - 1);
    GuessReport rep;
    try {
        rep = guess_p_recurrence(seq, b, s.str());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::string f = fmt_or(cfg, "text");
    std::ostringstream os;
    if (f == "json") {
        json j = {{"steps", s.str()},
                  {"terms", rep.terms},
                  {"max_order", b.max_order},
                  {"max_degree", b.max_degree},
                  {"guard", b.guard},
                  {"outcome", rep.found() ? "Found" : "NotFound"}};
        if (rep.found()) {
            j["order"] = rep.recurrence->order;
            j["degree"] = rep.recurrence->degree;
            j["recurrence"] = rep.recurrence->str();
        }
        os << j.dump(2) << "\n";
    } else if (f == "csv") {
        os << "steps,outcome,order,degree,recurrence\n\"" << s.str() << "\"," << (rep.found() ? "Found" : "NotFound");
        if (rep.found())
            os << "," << rep.recurrence->order << "," << rep.recurrence->degree << ",\"" << rep.recurrence->str()
               << "\"\n";
        else
            os << ",,,\n";
    } else {
        os << rep.str() << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_survey(const RunConfig& cfg) {
    ClassSweep sw = enumerate_all_classes();
    std::cerr << "group survey over all step sets...\n";
    auto groups = finite_group_survey(cfg.group_bound, cfg.degree_bound, cfg.jobs);
    std::vector<SurveyRow> triples;
    int inconsistent = 0;
    for (const auto& r : groups)
        if (r.steps.size() == 3) {
            triples.push_back(r);
            if (!r.consistent()) ++inconsistent;
        }
    std::vector<EvidenceRow> evidence;
    if (cfg.with_guess) {
        std::cerr << "guessing recurrences for the 11 classes...\n";
        EvidenceConfig ec;
        ec.n_terms = cfg.guess_terms;
        ec.bounds = {cfg.guess_order, cfg.guess_degree, cfg.guard};
        ec.group_bound = cfg.group_bound;
        ec.degree_bound = cfg.degree_bound;
        ec.jobs = cfg.jobs;
        evidence = holonomy_evidence_survey(ec);
        for (const auto& r : evidence)
            if (!r.consistent()) ++inconsistent;
    }
    std::string f = fmt_or(cfg, "csv");
    std::ostringstream os;
    if (f == "json") {
        json j = json::parse(sweep_json(sw));
        json g = json::array();
        for (const auto& r : triples)
            g.push_back({{"steps", r.steps.str()},
                         {"singular", r.singular},
                         {"constructible", r.constructible},
                         {"finite", r.orbit.finite},
                         {"order", r.orbit.finite ? r.orbit.order : 0},
                         {"predicate", r.predicate()},
                         {"consistent", r.consistent()}});
        j["groups"] = g;
        j["inconsistent_rows"] = inconsistent;
        if (cfg.with_guess) {
            std::istringstream is(evidence_csv(evidence));
            json e = json::array();
            for (const auto& r : evidence)
                e.push_back({{"class", r.cls},
                             {"steps", r.steps.str()},
                             {"guess", r.guess.found() ? r.guess.recurrence->str() : "NotFound"},
                             {"consistent", r.consistent()}});
            j["holonomy"] = e;
        }
        os << j.dump(2) << "\n";
    } else if (f == "text") {
        os << "empty sets: " << sw.empty_sets << "\n"
           << "singular sets: " << sw.singular_sets << ", non-singular sets: " << sw.nonsingular_sets << "\n"
           << "reflect-invariant non-empty sets: " << sw.reflect_invariant_nonempty << "\n"
           << "reflect classes: " << sw.reflect_classes << " (" << sw.singular_reflect_classes << " singular, "
           << sw.nonsingular_reflect_classes << " non-singular)\n"
           << "final classes: " << sw.final_classes << "\n"
           << "conjecture table inconsistent rows: " << inconsistent << "\n";
        if (cfg.with_guess)
            for (const auto& r : evidence) os << r.guess.str() << "\n";
    } else {
        os << survey_csv(triples);
        if (cfg.with_guess) os << "\n" << evidence_csv(evidence);
    }
    std::cerr << sw.reflect_classes << " reflect classes, " << sw.final_classes << " final classes, "
              << inconsistent << " inconsistent rows\n";
    emit(cfg, os.str());
    return inconsistent == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qwalk: three-step quarter-plane walks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", cfg.out, "write the report to this file");
        sub->add_option("--jobs", cfg.jobs, "parallel workers")->check(CLI::PositiveNumber);
    };
    auto add_group_bounds = [&cfg](CLI::App* sub) {
        sub->add_option("--group-bound", cfg.group_bound, "element bound for the orbit search")
            ->check(CLI::PositiveNumber);
        sub->add_option("--degree-bound", cfg.degree_bound, "degree bound for the orbit search")
            ->check(CLI::PositiveNumber);
    };
    auto add_guess_bounds = [&cfg](CLI::App* sub) {
        sub->add_option("--guess-order", cfg.guess_order, "maximum recurrence order")->check(CLI::PositiveNumber);
        sub->add_option("--guess-degree", cfg.guess_degree, "maximum coefficient degree")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--guard", cfg.guard, "terms held back for verification")->check(CLI::NonNegativeNumber);
    };
    const char* steps_help = "comma-separated steps such as NE,S,W, or a class number 1..11";

    auto* classify = app.add_subcommand("classify", "class, symmetries and reflect partner of a step set");
    classify->add_option("steps", cfg.target, steps_help)->required();
    add_common(classify);

    auto* count = app.add_subcommand("count", "walk counts from the enumeration");
    count->add_option("steps", cfg.target, steps_help)->required();
    count->add_option("-n,--length", cfg.length, "maximum walk length")->check(CLI::NonNegativeNumber);
    count->add_option("--slice", cfg.slice, "totals, x, y, origin, diagonal or full");
    add_common(count);

    auto* group = app.add_subcommand("group", "generators and order of the group of the walk");
    group->add_option("steps", cfg.target, steps_help)->required();
    add_group_bounds(group);
    add_common(group);

    auto* verify = app.add_subcommand("verify", "check closed forms against the enumeration");
    verify->add_option("class", cfg.target, "class number 1..11 or all")->required();
    verify->add_option("--order", cfg.order, "truncation order for counting sequences")->check(CLI::PositiveNumber);
    add_group_bounds(verify);
    add_guess_bounds(verify);
    add_common(verify);

    auto* guess = app.add_subcommand("guess", "guess a P-recurrence for the walk totals");
    guess->add_option("steps", cfg.target, steps_help)->required();
    guess->add_option("-n,--length", cfg.guess_terms, "number of terms")->check(CLI::PositiveNumber);
    add_guess_bounds(guess);
    add_common(guess);

    auto* survey = app.add_subcommand("survey", "taxonomy and group survey over all triples");
    survey->add_flag("--with-guess", cfg.with_guess, "add recurrence guessing for the 11 classes");
    add_group_bounds(survey);
    add_guess_bounds(survey);
    add_common(survey);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify) return cmd_classify(cfg);
        if (*count) return cmd_count(cfg);
        if (*group) return cmd_group(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*guess) return cmd_guess(cfg);
        if (*survey) return cmd_survey(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
