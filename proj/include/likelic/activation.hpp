#pragma once

// Spreading activation and incremental learning on a context graph.

#include "likelic/graph.hpp"

#include <string_view>
#include <vector>

namespace likelic {

enum class Activity : std::int8_t {
    Blocked = -1,
    Inactive = 0,
    Active = 1,
    Spreading = 2,
};

/// Total map from vertices to activity; vertices not yet covered are Inactive.
class ActivityMap {
public:
    ActivityMap() = default;
    explicit ActivityMap(std::size_t vertex_count) : levels_(vertex_count, Activity::Inactive) {}

    Activity get(VertexId v) const { return v.index < levels_.size() ? levels_[v.index] : Activity::Inactive; }
    void set(VertexId v, Activity a);

    std::size_t size() const { return levels_.size(); }

    friend bool operator==(const ActivityMap& a, const ActivityMap& b);

private:
    std::vector<Activity> levels_;
};

/// Synchronous steps. In each step vertices that were Active are promoted
/// to Spreading, then every Spreading vertex activates its Inactive
/// out-neighbours over all edge kinds. Blocked vertices never change.
ActivityMap spread(const ContextGraph& g, ActivityMap act, std::size_t steps);

/// Grade given to implication edges created by adjunction or co-activation.
inline constexpr Likeliness kLearnedGrade = Likeliness::typical();

/// New vertex `label` with one edge label -> anchor of the given kind.
/// Throws DomainError for an unknown anchor or when label names the anchor.
ContextGraph adjoin_vertex(const ContextGraph& g, std::string_view label, VertexId anchor, EdgeKind kind);

/// Adds u -> v at kLearnedGrade for every ordered pair of distinct vertices
/// at level >= Active that has no implication edge yet.
ContextGraph learn_edges_on_coactivation(const ContextGraph& g, const ActivityMap& act);

} // namespace likelic
