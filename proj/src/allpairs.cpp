#include "likelic/inference.hpp"

#include <algorithm>
#include <cstdint>

namespace likelic {

namespace {

using Grid = std::vector<std::uint8_t>;

Grid initial_grid(const ContextGraph& g)
{
    const auto n = g.vertex_count();
    Grid d(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        d[i * n + i] = Likeliness::kMax;
        for (const auto& arc : g.implications_from(VertexId{static_cast<std::uint32_t>(i)}))
            d[i * n + arc.dst.index] = static_cast<std::uint8_t>(arc.value.grade());
    }
    return d;
}

LikelinessMatrix finish(const ContextGraph& g, const Grid& d, EdgePolicy policy)
{
    const auto n = g.vertex_count();
    LikelinessMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Likeliness(d[i * n + j]);
    if (policy == EdgePolicy::StoredFirst) {
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& arc : g.implications_from(VertexId{static_cast<std::uint32_t>(i)}))
                m(i, arc.dst.index) = arc.value;
    }
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Likeliness::necessary();
    return m;
}

} // namespace

LikelinessMatrix all_pairs_derived(const ContextGraph& g, EdgePolicy policy)
{
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    Grid d = initial_grid(g);
    std::uint8_t* cells = d.data();
    // Row k and column k are fixed points of pivot step k (the diagonal is
    // the min-identity), so rows can be relaxed independently.
    for (std::int64_t k = 0; k < n; ++k) {
        const std::uint8_t* pivot_row = cells + k * n;
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            if (i == k)
                continue;
            std::uint8_t* row = cells + i * n;
            const std::uint8_t through = row[k];
            if (through == 0)
                continue;
            for (std::int64_t j = 0; j < n; ++j)
                row[j] = std::max(row[j], std::min(through, pivot_row[j]));
        }
    }
    return finish(g, d, policy);
}

LikelinessMatrix all_pairs_derived_serial(const ContextGraph& g, EdgePolicy policy)
{
    const auto n = g.vertex_count();
    Grid d = initial_grid(g);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i * n + j] = std::max(d[i * n + j], std::min(d[i * n + k], d[k * n + j]));
    return finish(g, d, policy);
}

} // namespace likelic
