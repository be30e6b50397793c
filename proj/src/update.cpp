#include "likelic/update.hpp"

#include "likelic/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace likelic {

namespace {

constexpr int kUnset = -1;

Valuation to_valuation(const std::vector<int>& values)
{
    Valuation out;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != kUnset)
            out.set(VertexId{static_cast<std::uint32_t>(i)}, Likeliness(values[i]));
    return out;
}

Propagation fixpoint(const ContextGraph& g, VertexId source, int level)
{
    std::vector<int> value(g.vertex_count(), kUnset);
    value[source.index] = level;
    const auto edges = g.edges();
    Propagation out;
    bool changed = true;
    while (changed) {
        changed = false;
        ++out.sweeps;
        for (const auto& e : edges) {
            if (e.kind != EdgeKind::Implication || value[e.src.index] == kUnset)
                continue;
            int cand = std::min(value[e.src.index], e.value->grade());
            if (cand > value[e.dst.index]) {
                value[e.dst.index] = cand;
                changed = true;
            }
        }
    }
    out.values = to_valuation(value);
    return out;
}

Propagation wavefront(const ContextGraph& g, VertexId source, int level)
{
    std::vector<int> value(g.vertex_count(), kUnset);
    std::vector<bool> pinned(g.vertex_count(), false);
    value[source.index] = level;
    pinned[source.index] = true;

    std::set<VertexId> frontier;
    for (const auto& arc : g.implications_from(source)) {
        value[arc.dst.index] = std::min(level, arc.value.grade());
        pinned[arc.dst.index] = true;
        frontier.insert(arc.dst);
    }

    Propagation out;
    out.sweeps = 1;
    while (!frontier.empty()) {
        const auto snapshot = value;
        std::set<VertexId> next;
        for (auto v : frontier) {
            for (const auto& arc : g.implications_from(v)) {
                if (pinned[arc.dst.index])
                    continue;
                int cand = std::min(snapshot[v.index], arc.value.grade());
                if (cand > value[arc.dst.index]) {
                    value[arc.dst.index] = cand;
                    next.insert(arc.dst);
                }
            }
        }
        frontier = std::move(next);
        ++out.sweeps;
    }
    out.values = to_valuation(value);
    return out;
}

Propagation literal(const ContextGraph& g, VertexId source, int level)
{
    // With an unconstrained source the fixpoint is the plain bottleneck value.
    const auto best = fixpoint(g, source, Likeliness::kMax).values;
    Propagation out;
    for (auto [v, x] : best.entries())
        out.values.set(v, Likeliness(std::max(level, x.grade())));
    out.values.set(source, Likeliness(level));
    out.sweeps = 1;
    return out;
}

void check_scenario(const ContextGraph& g, const Scenario& s)
{
    for (std::size_t i = 0; i < s.evidence.size(); ++i) {
        const auto& e = s.evidence[i];
        if (!g.contains(e.vertex))
            throw DomainError("scenario " + s.name + ": unknown evidence vertex");
        for (std::size_t j = 0; j < i; ++j)
            if (s.evidence[j].vertex == e.vertex && !(s.evidence[j] == e))
                throw DomainError("scenario " + s.name + ": conflicting evidence for \"" + g.label(e.vertex) + "\"");
    }
    for (const auto& x : s.exclusions) {
        if (!g.contains(x.condition) || !g.contains(x.target))
            throw DomainError("scenario " + s.name + ": unknown exclusion vertex");
        if (x.floor.grade() > 2)
            throw DomainError("scenario " + s.name + ": exclusion floor must be 0, 1 or 2");
    }
}

} // namespace

std::string_view mode_name(PropagationMode mode)
{
    switch (mode) {
    case PropagationMode::Fixpoint: return "fixpoint";
    case PropagationMode::Wavefront: return "wavefront";
    case PropagationMode::Literal: return "literal";
    }
    return "fixpoint";
}

PropagationMode mode_from_name(std::string_view name)
{
    for (auto m : {PropagationMode::Fixpoint, PropagationMode::Wavefront, PropagationMode::Literal})
        if (mode_name(m) == name)
            return m;
    throw std::invalid_argument("unknown propagation mode '" + std::string(name) + "'");
}

Propagation propagate_from(const ContextGraph& g, const Evidence& source, PropagationMode mode)
{
    if (!g.contains(source.vertex))
        throw DomainError("unknown source vertex");
    if (source.mode != EvidenceMode::Source)
        throw DomainError("propagation needs Source evidence, not a clamp");
    const int level = source.value.grade();
    switch (mode) {
    case PropagationMode::Fixpoint: return fixpoint(g, source.vertex, level);
    case PropagationMode::Wavefront: return wavefront(g, source.vertex, level);
    case PropagationMode::Literal: return literal(g, source.vertex, level);
    }
    return fixpoint(g, source.vertex, level);
}

Valuation propagate(const ContextGraph& g, const Evidence& source, PropagationMode mode)
{
    Valuation out = g.base_valuation();
    out.merge_max(propagate_from(g, source, mode).values);
    return out;
}

Valuation apply_scenario(const ContextGraph& g, const Valuation& defaults, const Scenario& s, PropagationMode mode)
{
    check_scenario(g, s);

    Valuation current = defaults;
    for (const auto& e : s.evidence)
        if (e.mode == EvidenceMode::Source)
            current.merge_max(propagate_from(g, e, mode).values);

    Valuation final_view = current;
    for (const auto& e : s.evidence)
        if (e.mode == EvidenceMode::Clamp)
            final_view.set(e.vertex, e.value);

    std::vector<const Exclusion*> firing;
    for (const auto& x : s.exclusions)
        if (final_view.get(x.condition) == Likeliness::necessary())
            firing.push_back(&x);
    for (const auto* x : firing) {
        auto cur = current.get(x->target);
        current.set(x->target, cur ? otimes(*cur, x->floor) : x->floor);
    }

    for (const auto& e : s.evidence)
        if (e.mode == EvidenceMode::Clamp)
            current.set(e.vertex, e.value);
    return current;
}

std::optional<Likeliness> ScenarioTable::at(std::string_view row, std::string_view column) const
{
    auto r = std::find(rows.begin(), rows.end(), row);
    auto c = std::find(columns.begin(), columns.end(), column);
    if (r == rows.end() || c == columns.end())
        throw DomainError("no cell (" + std::string(row) + ", " + std::string(column) + ")");
    return cells[static_cast<std::size_t>(r - rows.begin())][static_cast<std::size_t>(c - columns.begin())];
}

std::string ScenarioTable::render() const
{
    std::ostringstream os;
    os << "# columns:";
    for (const auto& c : columns)
        os << ' ' << c;
    os << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << rows[r] << ':';
        for (const auto& cell : cells[r]) {
            os << ' ';
            if (cell)
                os << cell->grade();
            else
                os << '-';
        }
        os << '\n';
    }
    return os.str();
}

ScenarioTable compare_scenarios(const ContextGraph& g, const Valuation& defaults,
                                std::span<const Scenario> scenarios, std::span<const VertexId> rows,
                                PropagationMode mode)
{
    ScenarioTable table;
    table.columns.emplace_back(kDefaultColumn);
    std::vector<Valuation> results{defaults};
    for (const auto& s : scenarios) {
        if (std::find(table.columns.begin(), table.columns.end(), s.name) != table.columns.end())
            throw DomainError("duplicate scenario column \"" + s.name + "\"");
        table.columns.push_back(s.name);
        results.push_back(apply_scenario(g, defaults, s, mode));
    }
    for (auto v : rows) {
        if (!g.contains(v))
            throw DomainError("unknown row vertex");
        table.rows.push_back(g.label(v));
        auto& line = table.cells.emplace_back();
        for (const auto& r : results)
            line.push_back(r.get(v));
    }
    return table;
}

} // namespace likelic
