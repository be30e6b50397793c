#include "likelic/inference.hpp"

#include "likelic/errors.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <utility>

namespace likelic {

namespace {

void check_query(const ContextGraph& g, VertexId a, VertexId b)
{
    if (!g.contains(a) || !g.contains(b))
        throw DomainError("unknown vertex in implication query");
    if (a == b)
        throw DomainError("reflexive query \"" + g.label(a) + "\" -> itself is not defined");
}

// Bottleneck to every vertex; -1 marks unreachable.
std::vector<int> widest(const ContextGraph& g, VertexId source)
{
    std::vector<int> best(g.vertex_count(), -1);
    std::priority_queue<std::pair<int, std::uint32_t>> frontier;
    best[source.index] = Likeliness::kMax;
    frontier.emplace(Likeliness::kMax, source.index);
    while (!frontier.empty()) {
        auto [value, v] = frontier.top();
        frontier.pop();
        if (value < best[v])
            continue;
        for (const auto& arc : g.implications_from(VertexId{v})) {
            int cand = std::min(value, arc.value.grade());
            if (cand > best[arc.dst.index]) {
                best[arc.dst.index] = cand;
                frontier.emplace(cand, arc.dst.index);
            }
        }
    }
    return best;
}

// Shortest path a -> b over edges of grade >= floor, lexicographically
// smallest by label among shortest ones. b must be reachable.
std::vector<VertexId> tie_broken_path(const ContextGraph& g, VertexId a, VertexId b, int floor)
{
    const auto n = g.vertex_count();
    std::vector<std::vector<VertexId>> reverse(n);
    for (std::uint32_t s = 0; s < n; ++s)
        for (const auto& arc : g.implications_from(VertexId{s}))
            if (arc.value.grade() >= floor)
                reverse[arc.dst.index].push_back(VertexId{s});

    // Hop distance to b.
    std::vector<int> to_b(n, -1);
    std::deque<VertexId> queue{b};
    to_b[b.index] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto u : reverse[v.index]) {
            if (to_b[u.index] < 0) {
                to_b[u.index] = to_b[v.index] + 1;
                queue.push_back(u);
            }
        }
    }

    std::vector<VertexId> path{a};
    auto cur = a;
    while (cur != b) {
        std::optional<VertexId> pick;
        for (const auto& arc : g.implications_from(cur)) {
            if (arc.value.grade() < floor || to_b[arc.dst.index] != to_b[cur.index] - 1)
                continue;
            if (!pick || g.label(arc.dst) < g.label(*pick))
                pick = arc.dst;
        }
        cur = *pick;
        path.push_back(cur);
    }
    return path;
}

struct Enumerator {
    const ContextGraph& g;
    VertexId target;
    std::vector<bool> on_path;
    int best = -1;

    void walk(VertexId v, int bottleneck)
    {
        if (v == target) {
            best = std::max(best, bottleneck);
            return;
        }
        on_path[v.index] = true;
        for (const auto& arc : g.implications_from(v))
            if (!on_path[arc.dst.index])
                walk(arc.dst, std::min(bottleneck, arc.value.grade()));
        on_path[v.index] = false;
    }
};

} // namespace

Likeliness path_likeliness(const ContextGraph& g, std::span<const VertexId> vertices)
{
    if (vertices.size() < 2)
        throw DomainError("a path needs at least two vertices");
    Likeliness acc = Likeliness::necessary();
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        auto u = vertices[i];
        auto v = vertices[i + 1];
        if (!g.contains(u) || !g.contains(v))
            throw DomainError("unknown vertex on path");
        auto grade = g.implication(u, v);
        if (!grade)
            throw DomainError("no implication edge " + g.label(u) + " -> " + g.label(v));
        acc = otimes(acc, *grade);
    }
    return acc;
}

std::vector<Likeliness> widest_from(const ContextGraph& g, VertexId source)
{
    if (!g.contains(source))
        throw DomainError("unknown source vertex");
    auto best = widest(g, source);
    std::vector<Likeliness> out;
    out.reserve(best.size());
    for (int x : best)
        out.emplace_back(std::max(x, 0));
    return out;
}

Derived derived_implication(const ContextGraph& g, VertexId a, VertexId b, EdgePolicy policy)
{
    check_query(g, a, b);
    if (policy == EdgePolicy::StoredFirst) {
        if (auto stored = g.implication(a, b))
            return {*stored, PathWitness{{a, b}, *stored}};
    }
    auto best = widest(g, a);
    if (best[b.index] < 0)
        return {Likeliness::impossible(), std::nullopt};
    Likeliness value(best[b.index]);
    return {value, PathWitness{tie_broken_path(g, a, b, value.grade()), value}};
}

Likeliness brute_force_derived(const ContextGraph& g, VertexId a, VertexId b, EdgePolicy policy)
{
    if (g.vertex_count() > kBruteForceLimit)
        throw DomainError("brute-force enumeration is limited to " + std::to_string(kBruteForceLimit) + " vertices");
    check_query(g, a, b);
    if (policy == EdgePolicy::StoredFirst) {
        if (auto stored = g.implication(a, b))
            return *stored;
    }
    Enumerator e{g, b, std::vector<bool>(g.vertex_count(), false)};
    e.walk(a, Likeliness::kMax);
    return Likeliness(std::max(e.best, 0));
}

std::string render_witness(const ContextGraph& g, const PathWitness& w)
{
    std::string out = g.label(w.vertices.front());
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
        auto grade = g.implication(w.vertices[i], w.vertices[i + 1]);
        out += " -(" + std::to_string(grade ? grade->grade() : 0) + ")-> " + g.label(w.vertices[i + 1]);
    }
    out += " : " + std::to_string(w.value.grade());
    return out;
}

std::string explain(const ContextGraph& g, VertexId a, VertexId b, EdgePolicy policy)
{
    auto d = derived_implication(g, a, b, policy);
    if (!d.witness)
        return "no path";
    return render_witness(g, *d.witness);
}

} // namespace likelic
