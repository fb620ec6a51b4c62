// recog: build pattern universes, run decision-tree recognizers, compute
// win-count tournaments, and machine-check the nontransitivity claims.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "recog/adversary.hpp"
#include "recog/builtins.hpp"
#include "recog/dsl.hpp"
#include "recog/simulation.hpp"
#include "recog/tournament.hpp"
#include "recog/universe_io.hpp"

using json = nlohmann::ordered_json;
using namespace recog;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct ResolvedUniverse {
    Universe u;
    std::string kind;  // "theorem1", "theorem2" or "file"
    int n = 0;         // family parameter when kind == "theorem2"
};

ResolvedUniverse resolve_universe(const std::string& spec) {
    if (spec == "theorem1") return {theorem1_universe(), "theorem1", 3};
    if (spec.rfind("theorem2:", 0) == 0) {
        const std::string digits = spec.substr(9);
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(digits, &used);
            if (used != digits.size()) throw std::invalid_argument(digits);
        } catch (const std::exception&) {
            throw DomainError("--universe theorem2:<n>: invalid n '" + digits + "'");
        }
        return {theorem2_universe(n), "theorem2", n};
    }
    return {load_universe(spec), "file", 0};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<DecisionTree> builtin_tree(const std::string& name, const ResolvedUniverse& ru) {
    if (ru.kind == "file") return std::nullopt;
    if (ru.kind == "theorem1") {
        if (name == "A") return algorithm_a();
        if (name == "B") return algorithm_b();
        if (name == "C") return algorithm_c();
    }
    if (name.size() >= 2 && name[0] == 'A') {
        try {
            std::size_t used = 0;
            const int q = std::stoi(name.substr(1), &used);
            if (used == name.size() - 1 && q >= 0 && q < ru.n) {
                return spine_algorithm(ru.n, q);
            }
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

// A --tree argument is a builtin name, a comma list of builtin names,
// @<file> holding one tree per line, or inline DSL.
std::vector<DecisionTree> resolve_tree_arg(const std::string& arg, const ResolvedUniverse& ru) {
    std::vector<DecisionTree> out;
    if (!arg.empty() && arg[0] == '@') {
        const std::string text = read_file(arg.substr(1));
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out.push_back(parse_tree(line, ru.u));
        }
        if (out.empty()) throw FormatError(arg.substr(1) + ": no trees found");
        return out;
    }
    if (auto t = builtin_tree(arg, ru)) {
        out.push_back(*t);
        return out;
    }
    if (arg.find('(') == std::string::npos && arg.find(',') != std::string::npos) {
        std::istringstream parts(arg);
        std::string name;
        while (std::getline(parts, name, ',')) {
            if (auto t = builtin_tree(name, ru)) {
                out.push_back(*t);
            } else {
                throw FormatError("unknown builtin algorithm '" + name + "'");
            }
        }
        return out;
    }
    out.push_back(parse_tree(arg, ru.u));
    return out;
}

// Labels are positional so that builtin, file and inline sources of the
// same trees produce identical reports.
std::vector<LabeledTree> resolve_trees(const std::vector<std::string>& args,
                                       const ResolvedUniverse& ru) {
    std::vector<LabeledTree> out;
    for (const std::string& arg : args) {
        for (DecisionTree& t : resolve_tree_arg(arg, ru)) {
            validate_tree(t, ru.u);
            out.push_back({"T" + std::to_string(out.size() + 1), std::move(t)});
        }
    }
    return out;
}

json universe_json(const Universe& u) {
    json images = json::array();
    for (const Image& img : u.images()) {
        json templates = json::array();
        for (const Template& t : img.templates) templates.push_back(t.text());
        images.push_back({{"name", img.name}, {"size", img.size}, {"templates", templates}});
    }
    return {{"hash", universe_hash(u)},
            {"L", u.sign_arity()},
            {"pattern_count", u.pattern_count()},
            {"images", images}};
}

json trees_json(const std::vector<LabeledTree>& trees, const Universe& u) {
    json out = json::array();
    for (const LabeledTree& t : trees) {
        out.push_back({{"label", t.label}, {"dsl", format_tree(t.tree, u)}});
    }
    return out;
}

void print_universe_header(const Universe& u, std::ostream& out) {
    out << "universe: L=" << u.sign_arity() << ", " << u.image_count() << " images, "
        << u.pattern_count() << " patterns, hash=" << universe_hash(u) << "\n";
}

void print_tree_list(const std::vector<LabeledTree>& trees, const Universe& u,
                     std::ostream& out) {
    for (const LabeledTree& t : trees) {
        out << t.label << " = " << format_tree(t.tree, u) << "\n";
    }
}

json outcome_json(const PreferenceOutcome& o) {
    return {{"relation", relation_name(o.relation)},
            {"first_wins", o.first_wins},
            {"second_wins", o.second_wins},
            {"ties", o.ties}};
}

double wall_ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// ---- subcommand payloads -------------------------------------------------

struct Options {
    std::string universe_spec = "theorem1";
    std::string format = "table";
    std::vector<std::string> tree_args;
    std::string claim;  // verify positional
    int n = 0;
    std::string mode = "auto";
    std::int64_t steps = 10000;
    int trials = 1;
    std::uint64_t seed = 1;
    std::uint64_t limit = 10;
    bool inject_fault = false;
};

int cmd_universe(const Options& opt) {
    const ResolvedUniverse ru = resolve_universe(opt.universe_spec);
    if (opt.format == "json") {
        json doc = {{"command", "universe"}, {"universe", universe_json(ru.u)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        print_universe_header(ru.u, std::cout);
        for (const Image& img : ru.u.images()) {
            std::cout << img.name << ": " << img.size << " patterns\n";
        }
        std::cout << "\n" << emit_universe(ru.u);
    }
    return kExitOk;
}

int cmd_times(const Options& opt) {
    const ResolvedUniverse ru = resolve_universe(opt.universe_spec);
    const auto trees = resolve_trees(opt.tree_args, ru);
    if (trees.empty()) throw DomainError("times: at least one --tree is required");
    const TimeTable table = render_time_table(trees, ru.u);
    if (opt.format == "json") {
        json doc = {{"command", "times"},
                    {"universe", universe_json(ru.u)},
                    {"trees", trees_json(trees, ru.u)},
                    {"rows", table.row_names},
                    {"columns", table.col_names},
                    {"cells", table.cells}};
        std::cout << doc.dump(2) << "\n";
    } else {
        print_universe_header(ru.u, std::cout);
        print_tree_list(trees, ru.u, std::cout);
        std::cout << "\n" << table.to_text();
    }
    return kExitOk;
}

int cmd_compare(const Options& opt) {
    const ResolvedUniverse ru = resolve_universe(opt.universe_spec);
    const auto trees = resolve_trees(opt.tree_args, ru);
    if (trees.size() != 2) throw DomainError("compare: exactly two trees are required");
    const PreferenceOutcome o = compare(trees[0].tree, trees[1].tree, ru.u);
    if (opt.format == "json") {
        json doc = {{"command", "compare"},
                    {"universe", universe_json(ru.u)},
                    {"trees", trees_json(trees, ru.u)},
                    {"outcome", outcome_json(o)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        print_universe_header(ru.u, std::cout);
        print_tree_list(trees, ru.u, std::cout);
        std::cout << relation_name(o.relation) << " (" << o.first_wins << " vs "
                  << o.second_wins << ", ties " << o.ties << ")\n";
    }
    return kExitOk;
}

int cmd_tournament(const Options& opt) {
    const ResolvedUniverse ru = resolve_universe(opt.universe_spec);
    const auto trees = resolve_trees(opt.tree_args, ru);
    if (trees.empty()) throw DomainError("tournament: at least one --tree is required");
    const TournamentMatrix m = tournament(trees, ru.u);
    if (opt.format == "json") {
        json outcomes = json::array();
        json ties = json::array();
        for (std::size_t i = 0; i < trees.size(); ++i) {
            json tie_row = json::array();
            for (std::size_t j = 0; j < trees.size(); ++j) {
                tie_row.push_back(i == j ? 0 : m.tie_count(i, j));
            }
            ties.push_back(tie_row);
            for (std::size_t j = i + 1; j < trees.size(); ++j) {
                json o = outcome_json(m.outcome(i, j));
                o["first"] = m.labels[i];
                o["second"] = m.labels[j];
                outcomes.push_back(o);
            }
        }
        json doc = {{"command", "tournament"},
                    {"universe", universe_json(ru.u)},
                    {"algorithms", trees_json(trees, ru.u)},
                    {"wins", m.wins},
                    {"outcomes", outcomes},
                    {"ties", ties}};
        std::cout << doc.dump(2) << "\n";
    } else {
        print_universe_header(ru.u, std::cout);
        print_tree_list(trees, ru.u, std::cout);
        std::cout << "\n" << m.to_text() << "\n";
        for (std::size_t i = 0; i < trees.size(); ++i) {
            for (std::size_t j = i + 1; j < trees.size(); ++j) {
                const PreferenceOutcome o = m.outcome(i, j);
                std::cout << m.labels[i] << " vs " << m.labels[j] << ": "
                          << relation_name(o.relation) << " (" << o.first_wins << " vs "
                          << o.second_wins << ", ties " << o.ties << ")\n";
            }
        }
    }
    return kExitOk;
}

int cmd_adversary(const Options& opt) {
    const ResolvedUniverse ru = resolve_universe(opt.universe_spec);
    const auto trees = resolve_trees(opt.tree_args, ru);
    if (trees.empty()) throw DomainError("adversary: at least one --tree target is required");
    json targets = json::array();
    std::ostringstream text;
    for (const LabeledTree& t : trees) {
        const auto start = std::chrono::steady_clock::now();
        const MarginResult r = max_margin_vs(t.tree, ru.u);
        const double ms = wall_ms_since(start);
        targets.push_back({{"target", t.label},
                           {"margin", r.margin},
                           {"witness", format_tree(r.witness, ru.u)},
                           {"states_explored", r.states_explored}});
        text << t.label << ": max margin " << r.margin << ", witness "
             << format_tree(r.witness, ru.u) << " (" << r.states_explored << " states, "
             << ms << " ms)\n";
    }
    if (opt.format == "json") {
        json doc = {{"command", "adversary"},
                    {"universe", universe_json(ru.u)},
                    {"trees", trees_json(trees, ru.u)},
                    {"targets", targets}};
        std::cout << doc.dump(2) << "\n";
    } else {
        print_universe_header(ru.u, std::cout);
        print_tree_list(trees, ru.u, std::cout);
        std::cout << text.str();
    }
    return kExitOk;
}

int cmd_enumerate(const Options& opt) {
    const ResolvedUniverse ru = resolve_universe(opt.universe_spec);
    const BigInt total = count_reduced_trees(ru.u);
    std::vector<std::string> listed;
    enumerate_reduced_trees(ru.u, opt.limit, [&](const DecisionTree& t) {
        listed.push_back(format_tree(t, ru.u));
        return true;
    });
    if (opt.format == "json") {
        json doc = {{"command", "enumerate"},
                    {"universe", universe_json(ru.u)},
                    {"count", total.str()},
                    {"limit", opt.limit},
                    {"trees", listed}};
        std::cout << doc.dump(2) << "\n";
    } else {
        print_universe_header(ru.u, std::cout);
        std::cout << "correct reduced trees: " << total.str() << "\n";
        for (const std::string& line : listed) std::cout << line << "\n";
        if (BigInt(listed.size()) < total) {
            std::cout << "... (" << BigInt(total - listed.size()).str() << " more)\n";
        }
    }
    return kExitOk;
}

int cmd_simulate(const Options& opt) {
    const ResolvedUniverse ru = resolve_universe(opt.universe_spec);
    const auto trees = resolve_trees(opt.tree_args, ru);
    if (trees.size() != 2) throw DomainError("simulate: exactly two trees are required");
    const Distribution dist = Distribution::uniform(ru.u);
    const SimulationReport r =
        simulate(trees[0].tree, trees[1].tree, dist, ru.u, opt.steps, opt.trials, opt.seed);
    const Rational exact_fraction = r.exact_expectation / r.steps;
    if (opt.format == "json") {
        json doc = {{"command", "simulate"},
                    {"universe", universe_json(ru.u)},
                    {"trees", trees_json(trees, ru.u)},
                    {"steps", r.steps},
                    {"trials", r.trials},
                    {"seed", r.seed},
                    {"win_count", r.win_count},
                    {"empirical_win_fraction", r.empirical_win_fraction},
                    {"exact_expectation", r.exact_expectation.str()},
                    {"exact_win_fraction", static_cast<double>(exact_fraction)},
                    {"standard_error", r.standard_error}};
        std::cout << doc.dump(2) << "\n";
    } else {
        print_universe_header(ru.u, std::cout);
        print_tree_list(trees, ru.u, std::cout);
        std::cout << "steps " << r.steps << ", trials " << r.trials << ", seed " << r.seed
                  << "\n"
                  << "empirical win fraction: " << r.empirical_win_fraction << "\n"
                  << "exact expectation:      " << r.exact_expectation.str() << " ("
                  << static_cast<double>(exact_fraction) << " per step)\n"
                  << "standard error:         " << r.standard_error << "\n";
    }
    return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;  // table-format artifact lines
    json data;
};

Check check_time_table(const std::vector<LabeledTree>& algos, const Universe& u) {
    Check c{"time-table", false, "", {}};
    const std::vector<std::vector<std::string>> expected = {
        {"1", "2", "3"}, {"2", "3", "1"}, {"3", "1", "2"}, {"3", "3", "3"}};
    try {
        const TimeTable t = render_time_table(algos, u);
        c.ok = t.cells == expected;
        c.detail = t.to_text();
        c.data = {{"cells", t.cells}, {"expected", expected}};
    } catch (const IncorrectTreeError& e) {
        c.detail = std::string(e.what()) + "\n" + e.report.to_text(u);
        c.data = {{"error", e.what()}};
    }
    return c;
}

json cycle_steps_json(const CycleReport& r) {
    json steps = json::array();
    for (const CycleStep& s : r.steps) {
        steps.push_back({{"from", s.from},
                         {"to", s.to},
                         {"wins_forward", s.wins_forward.str()},
                         {"wins_backward", s.wins_backward.str()},
                         {"better", s.better}});
    }
    return steps;
}

Check check_cycle(const std::vector<LabeledTree>& algos, const Universe& u,
                  std::uint64_t expected_forward, std::uint64_t expected_backward) {
    Check c{"cycle", false, "", {}};
    try {
        const CycleReport r = verify_cycle(algos, u);
        bool wins_match = true;
        for (const CycleStep& s : r.steps) {
            wins_match = wins_match && s.wins_forward == expected_forward &&
                         s.wins_backward == expected_backward;
        }
        c.ok = r.ok && wins_match;
        c.detail = r.to_text();
        c.data = {{"steps", cycle_steps_json(r)}, {"holds", r.ok}};
    } catch (const IncorrectTreeError& e) {
        c.detail = std::string(e.what()) + "\n" + e.report.to_text(u);
        c.data = {{"error", e.what()}};
    }
    return c;
}

Check check_no_dominator(const std::vector<LabeledTree>& algos, const Universe& u) {
    Check c{"no-dominator", false, "", {}};
    try {
        const DominatorReport r = verify_no_dominator(algos, u);
        c.ok = r.ok;
        std::ostringstream text;
        json targets = json::array();
        for (const auto& t : r.targets) {
            const std::string witness = format_tree(t.witness, u);
            text << "target " << t.label << ": max margin " << t.margin << ", witness "
                 << witness << " (" << t.states_explored << " states)\n";
            targets.push_back({{"target", t.label},
                               {"margin", t.margin},
                               {"witness", witness},
                               {"states_explored", t.states_explored}});
        }
        if (!r.ok) {
            text << "a correct reduced tree strictly beats a target; "
                    "the witnesses above are optimal challengers\n";
        }
        c.detail = text.str();
        c.data = {{"targets", targets}};
    } catch (const IncorrectTreeError& e) {
        c.detail = std::string(e.what()) + "\n" + e.report.to_text(u);
        c.data = {{"error", e.what()}};
    }
    return c;
}

int report_checks(const std::string& command, const Universe& u, std::vector<Check> checks,
                  const std::string& format) {
    bool all_ok = true;
    for (const Check& c : checks) all_ok = all_ok && c.ok;
    if (format == "json") {
        json list = json::array();
        for (const Check& c : checks) {
            list.push_back({{"name", c.name}, {"ok", c.ok}, {"data", c.data}});
        }
        json doc = {{"command", command},
                    {"universe", universe_json(u)},
                    {"checks", list},
                    {"ok", all_ok}};
        std::cout << doc.dump(2) << "\n";
    } else {
        print_universe_header(u, std::cout);
        int failed = 0;
        for (const Check& c : checks) {
            failed += c.ok ? 0 : 1;
            std::cout << "[" << (c.ok ? "PASS" : "FAIL") << "] " << c.name << "\n";
            std::istringstream lines(c.detail);
            std::string line;
            while (std::getline(lines, line)) std::cout << "  " << line << "\n";
        }
        std::cout << "result: "
                  << (all_ok ? "PASS"
                             : "FAIL (" + std::to_string(failed) + " of " +
                                   std::to_string(checks.size()) + " checks failed)")
                  << "\n";
    }
    return all_ok ? kExitOk : kExitClaimFailed;
}

int cmd_verify_theorem1(const Options& opt) {
    const Universe u = theorem1_universe();
    std::vector<LabeledTree> algos = theorem1_algorithms();
    // Test hook: relabel a deep leaf of A so every check trips.
    if (opt.inject_fault) algos[0].tree = parse_tree("(P1 a0 (P2 a1 (P3 a2 a2)))", u);
    std::vector<Check> checks;
    checks.push_back(check_time_table(algos, u));
    checks.push_back(check_cycle(algos, u, 16, 8));
    checks.push_back(check_no_dominator(algos, u));
    return report_checks("verify-theorem1", u, std::move(checks), opt.format);
}

int cmd_verify_theorem2(const Options& opt) {
    if (opt.n < 3) {
        throw DomainError("verify theorem2: n must be >= 3, got " + std::to_string(opt.n));
    }
    const Universe u = theorem2_universe(opt.n);
    std::string mode = opt.mode;
    if (mode == "auto") mode = u.expanded() ? "exact" : "image-level";

    std::vector<Check> checks;
    if (mode == "image-level") {
        const CycleReport r = verify_cycle_image_level(opt.n);
        checks.push_back({"cycle-image-level", r.ok, r.to_text(), {{"steps", cycle_steps_json(r)}}});
    } else {
        if (!u.expanded()) {
            throw CapacityError("verify theorem2: n=" + std::to_string(opt.n) +
                                " cannot run in exact mode (" + std::to_string(u.pattern_count()) +
                                " patterns exceed the expansion limit); use --mode image-level");
        }
        std::vector<LabeledTree> spines = spine_algorithms(opt.n);
        if (opt.inject_fault) spines[0].tree = spine_algorithm(opt.n, 1);

        const CycleReport r = verify_cycle(spines, u);
        checks.push_back({"cycle-exact", r.ok, r.to_text(), {{"steps", cycle_steps_json(r)}}});

        Check cross{"image-level-matches-exact", true, "", {}};
        std::ostringstream text;
        for (int p = 0; p < opt.n; ++p) {
            for (int q = 0; q < opt.n; ++q) {
                const auto expanded = pairwise_wins(spines[static_cast<std::size_t>(p)].tree,
                                                    spines[static_cast<std::size_t>(q)].tree, u);
                const auto symbolic = image_level_wins(opt.n, p, q);
                if (symbolic.first != expanded.first || symbolic.second != expanded.second) {
                    cross.ok = false;
                    text << "mismatch at pair (" << p << "," << q << "): image-level ("
                         << symbolic.first << "," << symbolic.second << ") vs exact ("
                         << expanded.first << "," << expanded.second << ")\n";
                }
            }
        }
        if (cross.ok) text << "all " << opt.n * opt.n << " pairs agree\n";
        cross.detail = text.str();
        cross.data = {{"pairs", opt.n * opt.n}};
        checks.push_back(std::move(cross));

        if (opt.n == 3) {
            Check same{"n3-equals-theorem1", false, "", {}};
            const bool universes_equal = u == theorem1_universe();
            const bool trees_equal = spine_algorithm(3, 0) == algorithm_a() &&
                                     spine_algorithm(3, 1) == algorithm_b() &&
                                     spine_algorithm(3, 2) == algorithm_c();
            same.ok = universes_equal && trees_equal;
            same.detail = std::string("universe match: ") + (universes_equal ? "yes" : "no") +
                          ", algorithm match: " + (trees_equal ? "yes" : "no") + "\n";
            same.data = {{"universe_match", universes_equal}, {"algorithm_match", trees_equal}};
            checks.push_back(std::move(same));
        }
    }
    return report_checks("verify-theorem2", u, std::move(checks), opt.format);
}

int cmd_verify(const Options& opt) {
    Options local = opt;
    if (local.claim == "theorem1") return cmd_verify_theorem1(local);
    if (local.claim.rfind("theorem2", 0) == 0) {
        if (local.claim.rfind("theorem2:", 0) == 0) {
            const std::string digits = local.claim.substr(9);
            try {
                std::size_t used = 0;
                local.n = std::stoi(digits, &used);
                if (used != digits.size()) throw std::invalid_argument(digits);
            } catch (const std::exception&) {
                throw DomainError("verify theorem2:<n>: invalid n '" + digits + "'");
            }
        }
        return cmd_verify_theorem2(local);
    }
    throw DomainError("verify: unknown claim '" + local.claim +
                      "' (expected theorem1, theorem2 or theorem2:<n>)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision-tree recognizer tournaments over finite pattern universes"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* cmd, bool with_trees) {
        cmd->add_option("--universe", opt.universe_spec,
                        "theorem1, theorem2:<n>, or a universe file path")
            ->capture_default_str();
        cmd->add_option("--format", opt.format, "table or json")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
        if (with_trees) {
            cmd->add_option("--tree", opt.tree_args,
                            "tree DSL, @file (one tree per line), or a builtin name "
                            "(A, B, C; A0..A<n-1>); repeatable");
        }
    };

    add_common(app.add_subcommand("universe", "print a universe and its stats"), false);
    add_common(app.add_subcommand("times", "per-image recognition time table"), true);
    add_common(app.add_subcommand("compare", "pairwise win counts and preference"), true);
    add_common(app.add_subcommand("tournament", "full pairwise win matrix"), true);

    CLI::App* verify = app.add_subcommand("verify", "machine-check the nontransitivity claims");
    verify->add_option("claim", opt.claim, "theorem1, theorem2 or theorem2:<n>")->required();
    verify->add_option("--n", opt.n, "family parameter for theorem2");
    verify->add_option("--mode", opt.mode, "exact, image-level or auto")
        ->check(CLI::IsMember({"exact", "image-level", "auto"}))
        ->capture_default_str();
    verify->add_option("--format", opt.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    verify->add_flag("--inject-fault", opt.inject_fault)->group("");

    CLI::App* adversary =
        app.add_subcommand("adversary", "optimal challenger search against target trees");
    add_common(adversary, true);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "count and stream correct reduced trees");
    add_common(enumerate, false);
    enumerate->add_option("--limit", opt.limit, "maximum trees to stream")
        ->capture_default_str();

    CLI::App* simulate = app.add_subcommand("simulate", "seeded random-sequence win estimate");
    add_common(simulate, true);
    simulate->add_option("--steps", opt.steps, "sequence length")->capture_default_str();
    simulate->add_option("--trials", opt.trials, "independent sequences")->capture_default_str();
    simulate->add_option("--seed", opt.seed, "generator seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("universe")) return cmd_universe(opt);
        if (app.got_subcommand("times")) return cmd_times(opt);
        if (app.got_subcommand("compare")) return cmd_compare(opt);
        if (app.got_subcommand("tournament")) return cmd_tournament(opt);
        if (app.got_subcommand("verify")) return cmd_verify(opt);
        if (app.got_subcommand("adversary")) return cmd_adversary(opt);
        if (app.got_subcommand("enumerate")) return cmd_enumerate(opt);
        if (app.got_subcommand("simulate")) return cmd_simulate(opt);
    } catch (const IncorrectTreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClaimFailed;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitClaimFailed;
    }
    return kExitUsage;
}
