#pragma once

// Context graphs: proposition vertices, valued implication edges and the
// unvalued structural isa/subject/object links.

#include "likelic/scale.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace likelic {

/// Dense index of a vertex within one graph.
struct VertexId {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

enum class EdgeKind : std::uint8_t {
    Implication,
    Is0,    ///< isa
    Subj1,  ///< subject
    Obj2,   ///< object
};

std::string_view keyword(EdgeKind kind);  ///< "edge", "0edge", "1edge", "2edge"

struct Edge {
    VertexId src;
    VertexId dst;
    EdgeKind kind = EdgeKind::Implication;
    std::optional<Likeliness> value;  ///< set iff kind == Implication

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Out-going implication arc in the adjacency view.
struct Arc {
    VertexId dst;
    Likeliness value;
};

/// Partial map from vertices to grades.
class Valuation {
public:
    Valuation() = default;

    std::optional<Likeliness> get(VertexId v) const
    {
        return v.index < slots_.size() ? slots_[v.index] : std::nullopt;
    }
    bool contains(VertexId v) const { return get(v).has_value(); }

    void set(VertexId v, Likeliness x);
    void erase(VertexId v);

    /// Keep the larger of the existing and the offered grade.
    void raise(VertexId v, Likeliness x);

    /// raise() every entry of other into this.
    void merge_max(const Valuation& other);

    std::size_t size() const;
    bool empty() const { return size() == 0; }

    /// Defined entries in vertex order.
    std::vector<std::pair<VertexId, Likeliness>> entries() const;

    friend bool operator==(const Valuation& a, const Valuation& b);

private:
    std::vector<std::optional<Likeliness>> slots_;
};

class GraphBuilder;

/// Immutable context graph. Build one with GraphBuilder or the free
/// functions below, which return new values.
class ContextGraph {
public:
    std::size_t vertex_count() const { return labels_.size(); }
    std::span<const std::string> labels() const { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v.index); }

    std::optional<VertexId> find(std::string_view label) const;

    /// Throws DomainError naming the label when it is absent.
    VertexId require(std::string_view label) const;

    bool contains(VertexId v) const { return v.index < labels_.size(); }

    std::optional<Likeliness> implication(VertexId src, VertexId dst) const;
    std::span<const Arc> implications_from(VertexId v) const { return out_.at(v.index); }
    std::size_t implication_count() const;

    /// Isa/subject/object links in insertion order.
    std::span<const Edge> structural_edges() const { return structural_; }

    /// Every edge: implications (by source, then insertion) followed by
    /// structural links.
    std::vector<Edge> edges() const;

    /// All out-neighbours regardless of edge kind, without duplicates.
    std::vector<VertexId> successors(VertexId v) const;

    const Valuation& base_valuation() const { return base_; }

private:
    friend class GraphBuilder;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<Arc>> out_;
    std::vector<Edge> structural_;
    Valuation base_;
};

/// Single-owner mutable builder.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(ContextGraph start) : g_(std::move(start)) {}

    /// Returns the existing id when the label is already present. Throws
    /// std::invalid_argument for empty labels or labels containing a newline.
    VertexId add_vertex(std::string_view label);

    enum class Update { Inserted, Unchanged, Overwritten };

    /// Throws DomainError for self-loops or unknown vertices.
    Update add_implication(VertexId src, VertexId dst, Likeliness value);

    /// Structural link; duplicates are ignored. kind must not be Implication.
    void add_structural(VertexId src, VertexId dst, EdgeKind kind);

    void set_fact(VertexId v, Likeliness value);

    const ContextGraph& view() const { return g_; }
    ContextGraph build() && { return std::move(g_); }
    ContextGraph build() const& { return g_; }

private:
    void check_vertex(VertexId v) const;

    ContextGraph g_;
};

struct VertexAdded {
    ContextGraph graph;
    VertexId id;
};

struct ImplicationAdded {
    ContextGraph graph;
    std::optional<std::string> warning;  ///< set when an existing value was replaced
};

VertexAdded add_vertex(const ContextGraph& g, std::string_view label);
ImplicationAdded add_implication(const ContextGraph& g, VertexId src, VertexId dst, Likeliness value);

/// Graphviz rendering. Vertices defined in `values` are labelled "name (grade)".
std::string export_dot(const ContextGraph& g, const Valuation* values = nullptr);

} // namespace likelic
