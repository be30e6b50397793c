#pragma once

// Test-only helpers: fixture loading, random graphs and label-level views
// that do not depend on vertex ids.

#include "likelic/dsl.hpp"
#include "likelic/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace likelic::test {

inline std::string read_data(const std::string& name)
{
    std::ifstream f(std::string(LIKELIC_DATA_DIR) + "/" + name);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

inline std::string data_path(const std::string& name) { return std::string(LIKELIC_DATA_DIR) + "/" + name; }

inline ContextGraph snowbird() { return parse_context(read_data("snowbird.ctx")); }

inline VertexId id(const ContextGraph& g, const std::string& label) { return g.require(label); }

struct RandomGraphSpec {
    std::size_t max_vertices = 8;
    double edge_probability = 0.3;
    double structural_probability = 0.0;
    double fact_probability = 0.0;
    bool fixed_size = false;
};

/// Labels are "v0", "v1", ... unless `letters` is set, in which case random
/// lowercase words are used.
inline ContextGraph random_graph(std::mt19937& rng, const RandomGraphSpec& spec, bool letters = false)
{
    std::uniform_int_distribution<std::size_t> size(spec.fixed_size ? spec.max_vertices : 1, spec.max_vertices);
    std::bernoulli_distribution edge(spec.edge_probability);
    std::bernoulli_distribution structural(spec.structural_probability);
    std::bernoulli_distribution fact(spec.fact_probability);
    std::uniform_int_distribution<int> grade(0, 6);
    std::uniform_int_distribution<int> letter('a', 'z');
    std::uniform_int_distribution<int> word_len(1, 6);
    std::uniform_int_distribution<int> kind(1, 3);

    GraphBuilder b;
    const auto n = size(rng);
    std::set<std::string> used;
    while (used.size() < n) {
        std::string label;
        if (letters) {
            for (int i = word_len(rng); i > 0; --i)
                label += static_cast<char>(letter(rng));
        } else {
            label = "v" + std::to_string(used.size());
        }
        if (used.insert(label).second)
            b.add_vertex(label);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (edge(rng))
                b.add_implication({i}, {j}, Likeliness(grade(rng)));
            if (structural(rng))
                b.add_structural({i}, {j}, static_cast<EdgeKind>(kind(rng)));
        }
        if (fact(rng))
            b.set_fact({i}, Likeliness(grade(rng)));
    }
    return std::move(b).build();
}

/// Everything a graph says, keyed by labels.
struct LabelView {
    std::set<std::string> vertices;
    std::set<std::tuple<std::string, std::string, int, int>> edges;  // src, dst, kind, grade (-1 if none)
    std::map<std::string, int> facts;

    friend bool operator==(const LabelView&, const LabelView&) = default;
};

inline LabelView label_view(const ContextGraph& g)
{
    LabelView v;
    for (const auto& l : g.labels())
        v.vertices.insert(l);
    for (const auto& e : g.edges())
        v.edges.emplace(g.label(e.src), g.label(e.dst), static_cast<int>(e.kind), e.value ? e.value->grade() : -1);
    for (auto [id, x] : g.base_valuation().entries())
        v.facts.emplace(g.label(id), x.grade());
    return v;
}

inline std::map<std::string, int> by_label(const ContextGraph& g, const Valuation& values)
{
    std::map<std::string, int> out;
    for (auto [v, x] : values.entries())
        out.emplace(g.label(v), x.grade());
    return out;
}

/// Same vertices and edges, inserted in a shuffled order.
inline ContextGraph shuffled_copy(const ContextGraph& g, std::mt19937& rng)
{
    std::vector<std::string> labels(g.labels().begin(), g.labels().end());
    std::shuffle(labels.begin(), labels.end(), rng);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    GraphBuilder b;
    for (const auto& l : labels)
        b.add_vertex(l);
    for (const auto& e : edges) {
        auto s = b.view().require(g.label(e.src));
        auto d = b.view().require(g.label(e.dst));
        if (e.kind == EdgeKind::Implication)
            b.add_implication(s, d, *e.value);
        else
            b.add_structural(s, d, e.kind);
    }
    for (auto [v, x] : g.base_valuation().entries())
        b.set_fact(b.view().require(g.label(v)), x);
    return std::move(b).build();
}

} // namespace likelic::test
