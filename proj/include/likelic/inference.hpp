#pragma once

// Derived implications: the value of a path is the minimum of its edge
// grades, and the derived value of a -> b is the best path value.

#include "likelic/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace likelic {

/// Whether a stored implication a -> b answers the query a -> b by itself.
enum class EdgePolicy {
    StoredFirst,  ///< stored inner-model value wins (default)
    AllPaths,     ///< the single-edge path competes with every longer path
};

struct PathWitness {
    std::vector<VertexId> vertices;  ///< simple path, at least two vertices
    Likeliness value;
};

struct Derived {
    Likeliness value;
    std::optional<PathWitness> witness;  ///< empty iff no path exists
};

/// Minimum edge grade along `vertices`. Throws DomainError naming the first
/// consecutive pair that is not an implication edge, or for paths shorter
/// than two vertices.
Likeliness path_likeliness(const ContextGraph& g, std::span<const VertexId> vertices);

/// Widest-path query. Among maximizing paths the witness is a shortest one,
/// ties broken by the lexicographically smallest label sequence.
/// Throws DomainError for unknown vertices or a == b.
Derived derived_implication(const ContextGraph& g, VertexId a, VertexId b,
                            EdgePolicy policy = EdgePolicy::StoredFirst);

/// Bottleneck value from `source` to every vertex under AllPaths (0 where
/// unreachable, source itself 6). Best-first search, O(E log V).
std::vector<Likeliness> widest_from(const ContextGraph& g, VertexId source);

/// Exhaustive simple-path enumeration; the reference for derived_implication.
/// Throws DomainError for graphs with more than kBruteForceLimit vertices.
Likeliness brute_force_derived(const ContextGraph& g, VertexId a, VertexId b,
                               EdgePolicy policy = EdgePolicy::StoredFirst);

inline constexpr std::size_t kBruteForceLimit = 12;

/// Square matrix of derived values indexed [src][dst]. The diagonal holds 6
/// as a matrix convention only; reflexive queries are not defined.
class LikelinessMatrix {
public:
    LikelinessMatrix() = default;
    explicit LikelinessMatrix(std::size_t n, Likeliness fill = Likeliness::impossible())
        : n_(n), cells_(n * n, fill)
    {
    }

    std::size_t size() const { return n_; }
    Likeliness& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
    Likeliness operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
    Likeliness at(VertexId a, VertexId b) const { return (*this)(a.index, b.index); }

    friend bool operator==(const LikelinessMatrix&, const LikelinessMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Likeliness> cells_;
};

/// (max, min) Floyd-Warshall; rows of each pivot step run in parallel.
LikelinessMatrix all_pairs_derived(const ContextGraph& g, EdgePolicy policy = EdgePolicy::StoredFirst);

/// Serial reference for all_pairs_derived, same relaxation order.
LikelinessMatrix all_pairs_derived_serial(const ContextGraph& g, EdgePolicy policy = EdgePolicy::StoredFirst);

/// "Snowbird -(5)-> skiing -(4)-> ski-accident -(3)-> death : 3", or
/// "no path".
std::string explain(const ContextGraph& g, VertexId a, VertexId b, EdgePolicy policy = EdgePolicy::StoredFirst);

/// Renders a witness in the explain() format.
std::string render_witness(const ContextGraph& g, const PathWitness& w);

} // namespace likelic
