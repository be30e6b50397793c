#include "likelic/activation.hpp"

#include "likelic/errors.hpp"

#include <algorithm>

namespace likelic {

void ActivityMap::set(VertexId v, Activity a)
{
    if (v.index >= levels_.size())
        levels_.resize(v.index + 1, Activity::Inactive);
    levels_[v.index] = a;
}

bool operator==(const ActivityMap& a, const ActivityMap& b)
{
    const auto n = std::max(a.size(), b.size());
    for (std::uint32_t i = 0; i < n; ++i)
        if (a.get(VertexId{i}) != b.get(VertexId{i}))
            return false;
    return true;
}

ActivityMap spread(const ContextGraph& g, ActivityMap act, std::size_t steps)
{
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    for (std::size_t s = 0; s < steps; ++s) {
        for (std::uint32_t i = 0; i < n; ++i)
            if (act.get(VertexId{i}) == Activity::Active)
                act.set(VertexId{i}, Activity::Spreading);

        ActivityMap next = act;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (act.get(VertexId{i}) != Activity::Spreading)
                continue;
            for (auto w : g.successors(VertexId{i}))
                if (act.get(w) == Activity::Inactive)
                    next.set(w, Activity::Active);
        }
        act = std::move(next);
    }
    return act;
}

ContextGraph adjoin_vertex(const ContextGraph& g, std::string_view label, VertexId anchor, EdgeKind kind)
{
    if (!g.contains(anchor))
        throw DomainError("unknown anchor vertex");
    GraphBuilder b(g);
    auto v = b.add_vertex(label);
    if (v == anchor)
        throw DomainError("cannot adjoin \"" + std::string(label) + "\" to itself");
    if (kind == EdgeKind::Implication) {
        // An existing implication keeps its grade.
        if (!g.implication(v, anchor))
            b.add_implication(v, anchor, kLearnedGrade);
    } else {
        b.add_structural(v, anchor, kind);
    }
    return std::move(b).build();
}

ContextGraph learn_edges_on_coactivation(const ContextGraph& g, const ActivityMap& act)
{
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    std::vector<VertexId> active;
    for (std::uint32_t i = 0; i < n; ++i)
        if (static_cast<int>(act.get(VertexId{i})) >= static_cast<int>(Activity::Active))
            active.push_back(VertexId{i});

    GraphBuilder b(g);
    for (auto u : active)
        for (auto v : active)
            if (u != v && !g.implication(u, v))
                b.add_implication(u, v, kLearnedGrade);
    return std::move(b).build();
}

} // namespace likelic
