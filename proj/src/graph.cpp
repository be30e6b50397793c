#include "likelic/graph.hpp"

#include "likelic/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace likelic {

std::string_view keyword(EdgeKind kind)
{
    switch (kind) {
    case EdgeKind::Implication: return "edge";
    case EdgeKind::Is0: return "0edge";
    case EdgeKind::Subj1: return "1edge";
    case EdgeKind::Obj2: return "2edge";
    }
    return "edge";
}

// Valuation

void Valuation::set(VertexId v, Likeliness x)
{
    if (v.index >= slots_.size())
        slots_.resize(v.index + 1);
    slots_[v.index] = x;
}

void Valuation::erase(VertexId v)
{
    if (v.index < slots_.size())
        slots_[v.index].reset();
}

void Valuation::raise(VertexId v, Likeliness x)
{
    auto cur = get(v);
    if (!cur || *cur < x)
        set(v, x);
}

void Valuation::merge_max(const Valuation& other)
{
    for (auto [v, x] : other.entries())
        raise(v, x);
}

std::size_t Valuation::size() const
{
    return static_cast<std::size_t>(
        std::count_if(slots_.begin(), slots_.end(), [](const auto& s) { return s.has_value(); }));
}

std::vector<std::pair<VertexId, Likeliness>> Valuation::entries() const
{
    std::vector<std::pair<VertexId, Likeliness>> out;
    for (std::size_t i = 0; i < slots_.size(); ++i)
        if (slots_[i])
            out.emplace_back(VertexId{static_cast<std::uint32_t>(i)}, *slots_[i]);
    return out;
}

bool operator==(const Valuation& a, const Valuation& b) { return a.entries() == b.entries(); }

// ContextGraph

std::optional<VertexId> ContextGraph::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

VertexId ContextGraph::require(std::string_view label) const
{
    if (auto v = find(label))
        return *v;
    throw DomainError("unknown vertex \"" + std::string(label) + "\"");
}

std::optional<Likeliness> ContextGraph::implication(VertexId src, VertexId dst) const
{
    if (!contains(src))
        return std::nullopt;
    for (const auto& arc : out_[src.index])
        if (arc.dst == dst)
            return arc.value;
    return std::nullopt;
}

std::size_t ContextGraph::implication_count() const
{
    std::size_t n = 0;
    for (const auto& arcs : out_)
        n += arcs.size();
    return n;
}

std::vector<Edge> ContextGraph::edges() const
{
    std::vector<Edge> out;
    for (std::size_t s = 0; s < out_.size(); ++s)
        for (const auto& arc : out_[s])
            out.push_back({VertexId{static_cast<std::uint32_t>(s)}, arc.dst, EdgeKind::Implication, arc.value});
    out.insert(out.end(), structural_.begin(), structural_.end());
    return out;
}

std::vector<VertexId> ContextGraph::successors(VertexId v) const
{
    std::vector<VertexId> out;
    for (const auto& arc : out_.at(v.index))
        out.push_back(arc.dst);
    for (const auto& e : structural_)
        if (e.src == v)
            out.push_back(e.dst);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// GraphBuilder

VertexId GraphBuilder::add_vertex(std::string_view label)
{
    if (label.empty())
        throw std::invalid_argument("vertex label must not be empty");
    if (label.find_first_of("\r\n") != std::string_view::npos)
        throw std::invalid_argument("vertex label must not contain a newline");
    if (auto existing = g_.find(label))
        return *existing;
    VertexId id{static_cast<std::uint32_t>(g_.labels_.size())};
    g_.labels_.emplace_back(label);
    g_.index_.emplace(std::string(label), id);
    g_.out_.emplace_back();
    return id;
}

void GraphBuilder::check_vertex(VertexId v) const
{
    if (!g_.contains(v))
        throw DomainError("unknown vertex id " + std::to_string(v.index));
}

GraphBuilder::Update GraphBuilder::add_implication(VertexId src, VertexId dst, Likeliness value)
{
    check_vertex(src);
    check_vertex(dst);
    if (src == dst)
        throw DomainError("self-loop on \"" + g_.label(src) + "\" is not an implication");
    for (auto& arc : g_.out_[src.index]) {
        if (arc.dst == dst) {
            if (arc.value == value)
                return Update::Unchanged;
            arc.value = value;
            return Update::Overwritten;
        }
    }
    g_.out_[src.index].push_back({dst, value});
    return Update::Inserted;
}

void GraphBuilder::add_structural(VertexId src, VertexId dst, EdgeKind kind)
{
    if (kind == EdgeKind::Implication)
        throw std::invalid_argument("add_structural called with an implication kind");
    check_vertex(src);
    check_vertex(dst);
    if (src == dst)
        throw DomainError("self-loop on \"" + g_.label(src) + "\"");
    Edge e{src, dst, kind, std::nullopt};
    if (std::find(g_.structural_.begin(), g_.structural_.end(), e) == g_.structural_.end())
        g_.structural_.push_back(e);
}

void GraphBuilder::set_fact(VertexId v, Likeliness value)
{
    check_vertex(v);
    g_.base_.set(v, value);
}

// Value-returning operations

VertexAdded add_vertex(const ContextGraph& g, std::string_view label)
{
    GraphBuilder b(g);
    auto id = b.add_vertex(label);
    return {std::move(b).build(), id};
}

ImplicationAdded add_implication(const ContextGraph& g, VertexId src, VertexId dst, Likeliness value)
{
    GraphBuilder b(g);
    auto previous = g.implication(src, dst);
    ImplicationAdded out{{}, std::nullopt};
    if (b.add_implication(src, dst, value) == GraphBuilder::Update::Overwritten) {
        out.warning = "implication " + g.label(src) + " -> " + g.label(dst) + " changed from "
                      + std::to_string(previous->grade()) + " to " + std::to_string(value.grade());
    }
    out.graph = std::move(b).build();
    return out;
}

// DOT

namespace {

std::string dot_quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<VertexId> by_label(const ContextGraph& g)
{
    std::vector<VertexId> ids(g.vertex_count());
    for (std::size_t i = 0; i < ids.size(); ++i)
        ids[i] = VertexId{static_cast<std::uint32_t>(i)};
    std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
    return ids;
}

} // namespace

std::string export_dot(const ContextGraph& g, const Valuation* values)
{
    std::ostringstream os;
    os << "digraph {\n";
    const auto order = by_label(g);
    for (auto v : order) {
        os << "  " << dot_quote(g.label(v));
        if (values) {
            if (auto x = values->get(v))
                os << " [label=" << dot_quote(g.label(v) + " (" + std::to_string(x->grade()) + ")") << "]";
        }
        os << ";\n";
    }

    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        return std::tuple(g.label(a.src), g.label(a.dst), a.kind) < std::tuple(g.label(b.src), g.label(b.dst), b.kind);
    });
    for (const auto& e : edges) {
        os << "  " << dot_quote(g.label(e.src)) << " -> " << dot_quote(g.label(e.dst));
        if (e.kind == EdgeKind::Implication)
            os << " [label=\"" << e.value->grade() << "\"]";
        else
            os << " [label=\"" << keyword(e.kind).front() << "\", style=dotted]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace likelic
