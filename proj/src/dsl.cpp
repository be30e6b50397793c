#include "likelic/dsl.hpp"

#include "likelic/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace likelic {

namespace {

using Kind = ParseError::Kind;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

bool is_punct(const Token& t) { return !t.quoted && (t.text == "->" || t.text == ":" || t.text == "="); }

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto tokens = tokenize_line(text.substr(start, end - start), number);
        if (!tokens.empty())
            out.push_back({number, std::move(tokens)});
        start = end + 1;
    }
    return out;
}

/// Cursor over one line's tokens with directive-level helpers.
class Cursor {
public:
    explicit Cursor(const Line& line) : line_(line) {}

    std::size_t line() const { return line_.number; }

    const Token& keyword() { return line_.tokens.front(); }

    const Token& label(std::string_view what)
    {
        const Token& t = next(what);
        if (is_punct(t))
            fail(t, "expected " + std::string(what) + ", found '" + t.text + "'");
        return t;
    }

    void punct(std::string_view p)
    {
        const Token& t = next("'" + std::string(p) + "'");
        if (t.quoted || t.text != p)
            fail(t, "expected '" + std::string(p) + "', found '" + t.text + "'");
    }

    Likeliness grade() { return parse_grade(next("grade"), line_.number); }

    const Token& last() const { return line_.tokens.at(pos_ - 1); }

    void finish()
    {
        if (pos_ < line_.tokens.size())
            fail(line_.tokens[pos_], "unexpected trailing token '" + line_.tokens[pos_].text + "'");
    }

    [[noreturn]] void fail(const Token& t, const std::string& msg, Kind kind = Kind::Syntax) const
    {
        throw ParseError(kind, line_.number, t.column, msg);
    }

private:
    const Token& next(std::string_view what)
    {
        if (pos_ >= line_.tokens.size()) {
            const auto& back = line_.tokens.back();
            throw ParseError(Kind::Syntax, line_.number, back.column + back.text.size(),
                             "expected " + std::string(what) + " at end of line");
        }
        return line_.tokens[pos_++];
    }

    const Line& line_;
    std::size_t pos_ = 1;
};

struct RawLabel {
    std::string text;
    std::size_t line;
    std::size_t column;
};

RawLabel raw(const Token& t, std::size_t line) { return {t.text, line, t.column}; }

struct RawEvidence {
    RawLabel label;
    Likeliness value;
    EvidenceMode mode;
};

struct RawExclusion {
    RawLabel condition;
    RawLabel target;
    Likeliness floor;
};

struct RawScenario {
    std::string name;
    std::vector<RawEvidence> evidence;
    std::vector<RawExclusion> exclusions;
};

struct Document {
    GraphBuilder graph;
    std::vector<RawScenario> scenarios;
};

std::optional<EdgeKind> structural_kind(std::string_view kw)
{
    if (kw == "0edge") return EdgeKind::Is0;
    if (kw == "1edge") return EdgeKind::Subj1;
    if (kw == "2edge") return EdgeKind::Obj2;
    return std::nullopt;
}

void parse_scenario_line(Cursor& c, RawScenario& s)
{
    const Token& kw = c.keyword();
    if (kw.quoted)
        c.fail(kw, "expected a scenario directive");
    if (kw.text == "observe" || kw.text == "clamp") {
        auto mode = kw.text == "observe" ? EvidenceMode::Source : EvidenceMode::Clamp;
        auto label = raw(c.label("label"), c.line());
        c.punct("=");
        auto value = c.grade();
        c.finish();
        for (const auto& e : s.evidence) {
            if (e.label.text == label.text && (e.mode != mode || e.value != value))
                throw ParseError(Kind::Conflict, c.line(), label.column,
                                 "conflicting evidence for \"" + label.text + "\" in scenario " + s.name);
        }
        s.evidence.push_back({label, value, mode});
        return;
    }
    if (kw.text == "exclude") {
        auto cond = raw(c.label("condition label"), c.line());
        c.punct("->");
        auto target = raw(c.label("target label"), c.line());
        c.punct(":");
        auto floor = c.grade();
        if (floor.grade() > 2)
            c.fail(c.last(), "exclusion floor must be 0, 1 or 2", Kind::Range);
        c.finish();
        s.exclusions.push_back({cond, target, floor});
        return;
    }
    c.fail(kw, "unknown scenario directive '" + kw.text + "'");
}

Document parse_document(std::string_view text)
{
    Document doc;
    std::optional<RawScenario> open;
    std::size_t open_line = 0;
    std::set<std::string> names;

    for (const auto& line : split_lines(text)) {
        Cursor c(line);
        const Token& kw = c.keyword();

        if (open) {
            if (!kw.quoted && kw.text == "end") {
                c.finish();
                doc.scenarios.push_back(std::move(*open));
                open.reset();
            } else if (!kw.quoted && kw.text == "scenario") {
                c.fail(kw, "nested scenario block");
            } else {
                parse_scenario_line(c, *open);
            }
            continue;
        }

        if (kw.quoted)
            c.fail(kw, "expected a directive, found a quoted label");

        if (kw.text == "node") {
            const Token& l = c.label("label");
            c.finish();
            doc.graph.add_vertex(l.text);
        } else if (kw.text == "edge") {
            const Token& a = c.label("source label");
            c.punct("->");
            const Token& b = c.label("target label");
            c.punct(":");
            auto value = c.grade();
            c.finish();
            auto src = doc.graph.add_vertex(a.text);
            auto dst = doc.graph.add_vertex(b.text);
            if (src == dst)
                c.fail(b, "self-loop on \"" + a.text + "\"");
            if (auto prev = doc.graph.view().implication(src, dst); prev && *prev != value)
                c.fail(a, "contradicts earlier edge " + a.text + " -> " + b.text + " : "
                              + std::to_string(prev->grade()), Kind::Conflict);
            doc.graph.add_implication(src, dst, value);
        } else if (auto sk = structural_kind(kw.text)) {
            const Token& a = c.label("source label");
            c.punct("->");
            const Token& b = c.label("target label");
            c.finish();
            auto src = doc.graph.add_vertex(a.text);
            auto dst = doc.graph.add_vertex(b.text);
            if (src == dst)
                c.fail(b, "self-loop on \"" + a.text + "\"");
            doc.graph.add_structural(src, dst, *sk);
        } else if (kw.text == "fact") {
            const Token& a = c.label("label");
            c.punct("=");
            auto value = c.grade();
            c.finish();
            auto v = doc.graph.add_vertex(a.text);
            if (auto prev = doc.graph.view().base_valuation().get(v); prev && *prev != value)
                c.fail(a, "contradicts earlier fact " + a.text + " = " + std::to_string(prev->grade()),
                       Kind::Conflict);
            doc.graph.set_fact(v, value);
        } else if (kw.text == "scenario") {
            const Token& name = c.label("scenario name");
            c.finish();
            if (!names.insert(name.text).second)
                c.fail(name, "duplicate scenario \"" + name.text + "\"", Kind::Conflict);
            open = RawScenario{name.text, {}, {}};
            open_line = line.number;
        } else if (kw.text == "end") {
            c.fail(kw, "'end' without an open scenario");
        } else {
            c.fail(kw, "unknown directive '" + kw.text + "'");
        }
    }
    if (open)
        throw ParseError(Kind::Syntax, open_line, 1, "scenario \"" + open->name + "\" is missing 'end'");
    return doc;
}

VertexId resolve(const ContextGraph& g, const RawLabel& l)
{
    if (auto v = g.find(l.text))
        return *v;
    throw ParseError(Kind::UnknownLabel, l.line, l.column, "unknown label \"" + l.text + "\"");
}

bool needs_quotes(std::string_view label)
{
    if (label == "->" || label == ":" || label == "=")
        return true;
    return std::any_of(label.begin(), label.end(),
                       [](char c) { return is_space(c) || c == '"' || c == '\\' || c == '#'; });
}

std::vector<VertexId> sorted_vertices(const ContextGraph& g)
{
    std::vector<VertexId> ids;
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
        ids.push_back(VertexId{i});
    std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
    return ids;
}

} // namespace

std::vector<Token> tokenize_line(std::string_view line, std::size_t line_number)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (is_space(line[i])) {
            ++i;
            continue;
        }
        if (line[i] == '#')
            break;
        Token t;
        t.column = i + 1;
        if (line[i] == '"') {
            t.quoted = true;
            ++i;
            bool closed = false;
            while (i < line.size()) {
                char ch = line[i++];
                if (ch == '"') {
                    closed = true;
                    break;
                }
                if (ch == '\\') {
                    if (i >= line.size())
                        break;
                    ch = line[i++];
                    if (ch != '"' && ch != '\\')
                        throw ParseError(Kind::Syntax, line_number, i - 1, "unknown escape in quoted label");
                }
                t.text += ch;
            }
            if (!closed)
                throw ParseError(Kind::Syntax, line_number, t.column, "unterminated quoted label");
            if (i < line.size() && !is_space(line[i]) && line[i] != '#')
                throw ParseError(Kind::Syntax, line_number, i + 1, "expected whitespace after quoted label");
            if (t.text.empty())
                throw ParseError(Kind::Syntax, line_number, t.column, "empty label");
        } else {
            while (i < line.size() && !is_space(line[i]) && line[i] != '#') {
                if (line[i] == '"')
                    throw ParseError(Kind::Syntax, line_number, i + 1, "stray quote inside a bare label");
                t.text += line[i++];
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

Likeliness parse_grade(const Token& token, std::size_t line_number)
{
    const auto& s = token.text;
    if (token.quoted || s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(Kind::Syntax, line_number, token.column, "expected a grade, found '" + s + "'");
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || value > Likeliness::kMax)
        throw ParseError(Kind::Range, line_number, token.column, "grade " + s + " is outside 0..6");
    return Likeliness(static_cast<int>(value));
}

ContextGraph parse_context(std::string_view text) { return std::move(parse_document(text).graph).build(); }

std::vector<Scenario> parse_scenarios(std::string_view text, const ContextGraph& g)
{
    auto doc = parse_document(text);
    std::vector<Scenario> out;
    for (const auto& rs : doc.scenarios) {
        Scenario s{rs.name, {}, {}};
        for (const auto& e : rs.evidence) {
            Evidence ev{resolve(g, e.label), e.value, e.mode};
            if (std::find(s.evidence.begin(), s.evidence.end(), ev) == s.evidence.end())
                s.evidence.push_back(ev);
        }
        for (const auto& x : rs.exclusions)
            s.exclusions.push_back({resolve(g, x.condition), resolve(g, x.target), x.floor});
        out.push_back(std::move(s));
    }
    return out;
}

Valuation parse_valuation(std::string_view text, const ContextGraph& g)
{
    Valuation out;
    for (const auto& line : split_lines(text)) {
        Cursor c(line);
        const Token& kw = c.keyword();
        if (kw.quoted || kw.text != "fact")
            c.fail(kw, "valuation files may only contain 'fact' lines");
        const Token& a = c.label("label");
        c.punct("=");
        auto value = c.grade();
        c.finish();
        auto v = resolve(g, raw(a, line.number));
        if (auto prev = out.get(v); prev && *prev != value)
            c.fail(a, "contradicts earlier fact for \"" + a.text + "\"", Kind::Conflict);
        out.set(v, value);
    }
    return out;
}

std::string quote_label(std::string_view label)
{
    if (!needs_quotes(label))
        return std::string(label);
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string serialize_context(const ContextGraph& g)
{
    std::ostringstream os;
    os << "# likelic context: " << g.vertex_count() << " vertices, " << g.implication_count()
       << " implications, " << g.structural_edges().size() << " structural links\n";

    const auto order = sorted_vertices(g);
    for (auto v : order)
        os << "node " << quote_label(g.label(v)) << '\n';

    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        return std::tuple(g.label(a.src), g.label(a.dst), a.kind) < std::tuple(g.label(b.src), g.label(b.dst), b.kind);
    });
    for (const auto& e : edges) {
        os << keyword(e.kind) << ' ' << quote_label(g.label(e.src)) << " -> " << quote_label(g.label(e.dst));
        if (e.kind == EdgeKind::Implication)
            os << " : " << e.value->grade();
        os << '\n';
    }

    for (auto v : order)
        if (auto x = g.base_valuation().get(v))
            os << "fact " << quote_label(g.label(v)) << " = " << x->grade() << '\n';
    return os.str();
}

} // namespace likelic
