#include "likelic/cli.hpp"

#include "likelic/activation.hpp"
#include "likelic/dsl.hpp"
#include "likelic/errors.hpp"
#include "likelic/inference.hpp"
#include "likelic/update.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace likelic::cli {

namespace {

using nlohmann::json;

/// Bad invocation detected after flag parsing (unreadable file, malformed
/// LABEL=GRADE). Maps to kUsageError.
class UsageFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ParseError decorated with the file it came from.
class FileParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_file(const std::string& path, std::istream& in)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw UsageFailure("cannot read " + path);
    buf << f.rdbuf();
    return buf.str();
}

template <typename F>
auto parsing(const std::string& path, F&& f)
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw FileParseError(path + ":" + e.what());
    }
}

ContextGraph load_context(const std::string& path, std::istream& in)
{
    auto text = read_file(path, in);
    return parsing(path, [&] { return parse_context(text); });
}

std::vector<VertexId> sorted_vertices(const ContextGraph& g)
{
    std::vector<VertexId> ids;
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
        ids.push_back(VertexId{i});
    std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
    return ids;
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ','))
        if (!cur.empty())
            out.push_back(cur);
    return out;
}

int parse_int_grade(std::string_view text, std::string_view what)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw UsageFailure(fmt::format("{} must be an integer grade, got '{}'", what, text));
    return std::stoi(std::string(text));
}

std::string base_flag_or_env(const std::optional<double>& flag)
{
    return flag ? fmt::format("{}", *flag) : fmt::format("{}", base_from_environment());
}

double resolve_base(const std::optional<double>& flag)
{
    if (flag)
        return *flag;
    try {
        return base_from_environment();
    } catch (const std::invalid_argument& e) {
        throw UsageFailure(e.what());
    }
}

std::string aligned(const std::vector<std::pair<std::string, std::string>>& rows)
{
    std::size_t width = 0;
    for (const auto& [k, v] : rows)
        width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : rows)
        out += fmt::format("{:<{}}  {}\n", k, width, v);
    return out;
}

// Subcommands

struct QueryArgs {
    std::string context;
    std::string from;
    std::string to;
    std::string format = "text";
};

void cmd_infer(const QueryArgs& a, Io io)
{
    auto g = load_context(a.context, io.in);
    auto d = derived_implication(g, g.require(a.from), g.require(a.to));
    if (a.format == "json") {
        json j;
        j["from"] = a.from;
        j["to"] = a.to;
        j["value"] = d.value.grade();
        if (d.witness) {
            json path = json::array();
            for (auto v : d.witness->vertices)
                path.push_back(g.label(v));
            j["witness"] = path;
        } else {
            j["witness"] = nullptr;
        }
        io.out << j.dump(2) << '\n';
        return;
    }
    io.out << describe(d.value) << '\n';
    io.out << (d.witness ? render_witness(g, *d.witness) : std::string("no path")) << '\n';
}

void cmd_explain(const QueryArgs& a, Io io)
{
    auto g = load_context(a.context, io.in);
    io.out << explain(g, g.require(a.from), g.require(a.to)) << '\n';
}

void cmd_allpairs(const QueryArgs& a, Io io)
{
    auto g = load_context(a.context, io.in);
    auto m = all_pairs_derived(g);
    auto order = sorted_vertices(g);
    if (a.format == "json") {
        json j;
        j["labels"] = json::array();
        j["values"] = json::array();
        for (auto r : order) {
            j["labels"].push_back(g.label(r));
            json row = json::array();
            for (auto c : order)
                row.push_back(m.at(r, c).grade());
            j["values"].push_back(row);
        }
        io.out << j.dump(2) << '\n';
        return;
    }
    std::size_t width = 1;
    for (auto v : order)
        width = std::max(width, g.label(v).size());
    std::string header = fmt::format("{:<{}}", "", width);
    for (auto c : order)
        header += fmt::format("  {:>{}}", g.label(c), width);
    io.out << header << '\n';
    for (auto r : order) {
        std::string line = fmt::format("{:<{}}", g.label(r), width);
        for (auto c : order)
            line += fmt::format("  {:>{}}", r == c ? std::string(".") : std::to_string(m.at(r, c).grade()), width);
        io.out << line << '\n';
    }
}

struct PropagateArgs {
    std::string context;
    std::string source;
    std::string mode = "fixpoint";
};

void cmd_propagate(const PropagateArgs& a, Io io)
{
    auto g = load_context(a.context, io.in);
    auto eq = a.source.rfind('=');
    if (eq == std::string::npos || eq == 0)
        throw UsageFailure("--source expects LABEL=GRADE");
    int grade = parse_int_grade(std::string_view(a.source).substr(eq + 1), "--source grade");
    Evidence e{g.require(a.source.substr(0, eq)), Likeliness(grade), EvidenceMode::Source};
    auto values = propagate(g, e, mode_from_name(a.mode));
    std::vector<std::pair<std::string, std::string>> rows;
    for (auto v : sorted_vertices(g))
        if (auto x = values.get(v))
            rows.emplace_back(g.label(v), describe(*x));
    io.out << aligned(rows);
}

struct ScenarioArgs {
    std::string context;
    std::string scenarios;
    std::string compare;
    std::string rows;
    std::string mode = "fixpoint";
};

void cmd_scenario(const ScenarioArgs& a, Io io)
{
    auto ctx_text = read_file(a.context, io.in);
    auto g = parsing(a.context, [&] { return parse_context(ctx_text); });
    const auto& scn_path = a.scenarios.empty() ? a.context : a.scenarios;
    auto scn_text = a.scenarios.empty() ? ctx_text : read_file(a.scenarios, io.in);
    auto all = parsing(scn_path, [&] { return parse_scenarios(scn_text, g); });

    auto names = split_commas(a.compare);
    if (names.empty())
        throw UsageFailure("--compare needs at least one name");
    std::vector<Scenario> chosen;
    for (const auto& n : names) {
        if (n == kDefaultColumn)
            continue;
        auto it = std::find_if(all.begin(), all.end(), [&](const Scenario& s) { return s.name == n; });
        if (it == all.end())
            throw DomainError("unknown scenario \"" + n + "\"");
        if (std::none_of(chosen.begin(), chosen.end(), [&](const Scenario& s) { return s.name == n; }))
            chosen.push_back(*it);
    }

    std::vector<VertexId> rows;
    if (!a.rows.empty()) {
        for (const auto& r : split_commas(a.rows))
            rows.push_back(g.require(r));
    } else {
        for (auto v : sorted_vertices(g))
            if (g.base_valuation().contains(v))
                rows.push_back(v);
        if (rows.empty())
            rows = sorted_vertices(g);
    }

    auto full = compare_scenarios(g, g.base_valuation(), chosen, rows, mode_from_name(a.mode));

    // Reorder columns as requested.
    ScenarioTable view;
    view.rows = full.rows;
    view.cells.resize(full.rows.size());
    for (const auto& n : names) {
        view.columns.push_back(n);
        for (std::size_t r = 0; r < full.rows.size(); ++r)
            view.cells[r].push_back(full.at(full.rows[r], n));
    }
    io.out << view.render();
}

struct ScaleArgs {
    std::optional<double> prob;
    bool bounds = false;
    std::optional<int> capacity;
    std::optional<double> base;
    std::string rule = "additive";
};

void cmd_scale(const ScaleArgs& a, Io io)
{
    const int chosen = (a.prob ? 1 : 0) + (a.bounds ? 1 : 0) + (a.capacity ? 1 : 0);
    if (chosen != 1)
        throw UsageFailure("scale needs exactly one of --prob, --boundaries, --capacity");
    auto bounds = boundaries(resolve_base(a.base));
    if (a.prob) {
        io.out << describe(likeliness_from_probability(*a.prob, bounds)) << '\n';
        return;
    }
    if (a.bounds) {
        io.out << fmt::format("base {} ({:.3f} dB)\n", base_flag_or_env(a.base), bounds.base_odds_db);
        for (int k = 1; k <= 6; ++k) {
            double c = bounds.lower_cut(k);
            auto below = Likeliness(k - 1).name();
            auto above = Likeliness(k).name();
            io.out << fmt::format("{}|{}  {:<24} p={:.10f}  {:+.3f} dB\n", k - 1, k,
                                  fmt::format("{}/{}", below, above), c, log_odds_db(c));
        }
        return;
    }
    CapacityRule rule;
    if (a.rule == "additive")
        rule = CapacityRule::Additive;
    else if (a.rule == "independent")
        rule = CapacityRule::Independent;
    else
        throw UsageFailure("--rule must be additive or independent");
    io.out << aggregation_capacity(bounds, *a.capacity, rule) << '\n';
}

struct LearnArgs {
    std::string context;
    std::string script;
};

EdgeKind kind_from_keyword(const Token& t, std::size_t line)
{
    for (auto k : {EdgeKind::Implication, EdgeKind::Is0, EdgeKind::Subj1, EdgeKind::Obj2})
        if (!t.quoted && keyword(k) == t.text)
            return k;
    throw ParseError(ParseError::Kind::Syntax, line, t.column, "expected edge, 0edge, 1edge or 2edge");
}

ContextGraph run_learning_script(ContextGraph g, std::string_view script)
{
    ActivityMap act(g.vertex_count());
    std::size_t number = 0;
    std::istringstream is{std::string(script)};
    std::string line;
    while (std::getline(is, line)) {
        ++number;
        auto tokens = tokenize_line(line, number);
        if (tokens.empty())
            continue;
        const auto& kw = tokens.front();
        auto arity = [&](std::size_t n) {
            if (tokens.size() != n + 1)
                throw ParseError(ParseError::Kind::Syntax, number, kw.column,
                                 fmt::format("'{}' takes {} argument(s)", kw.text, n));
        };
        auto vertex = [&](const Token& t) {
            if (auto v = g.find(t.text))
                return *v;
            throw ParseError(ParseError::Kind::UnknownLabel, number, t.column, "unknown label \"" + t.text + "\"");
        };
        if (kw.quoted)
            throw ParseError(ParseError::Kind::Syntax, number, kw.column, "expected a script command");
        if (kw.text == "activate") {
            arity(1);
            act.set(vertex(tokens[1]), Activity::Active);
        } else if (kw.text == "block") {
            arity(1);
            act.set(vertex(tokens[1]), Activity::Blocked);
        } else if (kw.text == "step") {
            arity(1);
            const auto& t = tokens[1];
            if (t.quoted || t.text.empty()
                || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw ParseError(ParseError::Kind::Syntax, number, t.column, "step count must be a number");
            act = spread(g, std::move(act), std::stoul(t.text));
        } else if (kw.text == "coactivate") {
            arity(0);
            g = learn_edges_on_coactivation(g, act);
        } else if (kw.text == "adjoin") {
            arity(3);
            g = adjoin_vertex(g, tokens[1].text, vertex(tokens[2]), kind_from_keyword(tokens[3], number));
        } else {
            throw ParseError(ParseError::Kind::Syntax, number, kw.column, "unknown script command '" + kw.text + "'");
        }
    }
    return g;
}

void cmd_learn(const LearnArgs& a, Io io)
{
    auto g = load_context(a.context, io.in);
    auto script = read_file(a.script, io.in);
    g = parsing(a.script, [&] { return run_learning_script(std::move(g), script); });
    io.out << serialize_context(g);
}

struct DotArgs {
    std::string context;
    std::string valuation;
};

void cmd_export_dot(const DotArgs& a, Io io)
{
    auto g = load_context(a.context, io.in);
    if (a.valuation.empty()) {
        io.out << export_dot(g);
        return;
    }
    auto text = read_file(a.valuation, io.in);
    auto values = parsing(a.valuation, [&] { return parse_valuation(text, g); });
    io.out << export_dot(g, &values);
}

} // namespace

std::string describe(Likeliness x) { return fmt::format("{} ({})", x.grade(), x.name()); }

double base_from_environment()
{
    const char* raw = std::getenv("LIKELIC_BASE");
    if (!raw || !*raw)
        return kDefaultBaseProbability;
    char* end = nullptr;
    double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(v > 0.0 && v < 0.5))
        throw std::invalid_argument(fmt::format("LIKELIC_BASE must be a probability in (0, 0.5), got '{}'", raw));
    return v;
}

std::vector<DiceRow> dice_rows(const BoundarySet& bounds)
{
    struct Spec {
        std::string_view name, event;
        double p;
    };
    static constexpr Spec kRows[] = {
        {"de Méré A", "at least one 6 in four rolls of one die", 0.5177},
        {"de Méré B", "at least one double-6 in 24 throws of two dice", 0.4914},
        {"Pepys A", "at least two 6s when 12 dice are rolled", 0.6187},
        {"Pepys B", "at least three 6s when 18 dice are rolled", 0.5973},
    };
    std::vector<DiceRow> out;
    for (const auto& r : kRows)
        out.push_back({r.name, r.event, r.p, likeliness_from_probability(r.p, bounds)});
    return out;
}

std::string demo_dice(const BoundarySet& bounds)
{
    std::string out;
    auto rows = dice_rows(bounds);
    for (const auto& r : rows)
        out += fmt::format("{}: p={:.4f} → l={} ({})  # {}\n", r.name, r.probability, r.grade.grade(),
                           r.grade.name(), r.event);
    std::vector<int> grades;
    for (const auto& r : rows)
        grades.push_back(r.grade.grade());
    std::sort(grades.begin(), grades.end());
    grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
    out += fmt::format("distinct grades: {}\n", grades.size());
    return out;
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Naive likeliness inference on context graphs", "likelic"};
    app.require_subcommand(1, 1);
    app.failure_message(CLI::FailureMessage::help);

    const std::vector<std::string> formats{"text", "json"};
    const std::vector<std::string> modes{"fixpoint", "wavefront", "literal"};

    QueryArgs infer_args, explain_args, allpairs_args;
    auto* infer = app.add_subcommand("infer", "Derived likeliness of FROM -> TO with a witness path");
    infer->add_option("--context", infer_args.context, "Context file")->required();
    infer->add_option("--from", infer_args.from, "Antecedent label")->required();
    infer->add_option("--to", infer_args.to, "Consequent label")->required();
    infer->add_option("--format", infer_args.format, "Output format")->check(CLI::IsMember(formats));

    auto* expl = app.add_subcommand("explain", "Render the best implication chain FROM -> TO");
    expl->add_option("--context", explain_args.context, "Context file")->required();
    expl->add_option("--from", explain_args.from, "Antecedent label")->required();
    expl->add_option("--to", explain_args.to, "Consequent label")->required();

    auto* allpairs = app.add_subcommand("allpairs", "Derived likeliness for every ordered vertex pair");
    allpairs->add_option("--context", allpairs_args.context, "Context file")->required();
    allpairs->add_option("--format", allpairs_args.format, "Output format")->check(CLI::IsMember(formats));

    PropagateArgs prop_args;
    auto* prop = app.add_subcommand("propagate", "Propagate one piece of evidence through the graph");
    prop->add_option("--context", prop_args.context, "Context file")->required();
    prop->add_option("--source", prop_args.source, "Evidence as LABEL=GRADE")->required();
    prop->add_option("--mode", prop_args.mode, "fixpoint (default), wavefront, or literal (diagnostic)")
        ->check(CLI::IsMember(modes));

    ScenarioArgs scn_args;
    auto* scn = app.add_subcommand("scenario", "Compare scenario columns against the defaults");
    scn->add_option("--context", scn_args.context, "Context file (may also hold scenario blocks)")->required();
    scn->add_option("--scenarios", scn_args.scenarios, "Separate scenario file");
    scn->add_option("--compare", scn_args.compare, "Comma-separated columns; 'default' is the defaults column")
        ->required();
    scn->add_option("--rows", scn_args.rows, "Comma-separated row labels");
    scn->add_option("--mode", scn_args.mode, "Propagation mode")->check(CLI::IsMember(modes));

    ScaleArgs scale_args;
    auto* scale = app.add_subcommand("scale", "Probability to likeliness conversions");
    auto* prob_opt = scale->add_option("--prob", scale_args.prob, "Probability to grade")->check(CLI::Range(0.0, 1.0));
    auto* bounds_opt = scale->add_flag("--boundaries", scale_args.bounds, "Print the six cut points");
    auto* cap_opt = scale->add_option("--capacity", scale_args.capacity, "Aggregation capacity from grade 1, 2 or 3");
    scale->add_option("--base", scale_args.base, "Base threshold probability (default 1e-9 or LIKELIC_BASE)");
    scale->add_option("--rule", scale_args.rule, "Capacity rule: additive or independent");
    prob_opt->excludes(bounds_opt)->excludes(cap_opt);
    bounds_opt->excludes(cap_opt);

    LearnArgs learn_args;
    auto* learn = app.add_subcommand("learn", "Run an activation script and print the learned context");
    learn->add_option("--context", learn_args.context, "Context file")->required();
    learn->add_option("--script", learn_args.script, "Script: activate, block, step N, coactivate, adjoin")
        ->required();

    DotArgs dot_args;
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a context");
    dot->add_option("--context", dot_args.context, "Context file")->required();
    dot->add_option("--valuation", dot_args.valuation, "File of fact lines to label vertices with");

    auto* dice = app.add_subcommand("demo-dice", "Grade the de Méré and Pepys dice probabilities");
    std::optional<double> dice_base;
    dice->add_option("--base", dice_base, "Base threshold probability");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    }

    Io io{in, out, err};
    try {
        if (infer->parsed())
            cmd_infer(infer_args, io);
        else if (expl->parsed())
            cmd_explain(explain_args, io);
        else if (allpairs->parsed())
            cmd_allpairs(allpairs_args, io);
        else if (prop->parsed())
            cmd_propagate(prop_args, io);
        else if (scn->parsed())
            cmd_scenario(scn_args, io);
        else if (scale->parsed())
            cmd_scale(scale_args, io);
        else if (learn->parsed())
            cmd_learn(learn_args, io);
        else if (dot->parsed())
            cmd_export_dot(dot_args, io);
        else if (dice->parsed())
            io.out << demo_dice(boundaries(resolve_base(dice_base)));
    } catch (const UsageFailure& e) {
        err << "likelic: " << e.what() << '\n';
        return kUsageError;
    } catch (const FileParseError& e) {
        err << "likelic: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "likelic: " << e.what() << '\n';
        return kDomainError;
    }
    return kSuccess;
}

} // namespace likelic::cli
