#pragma once

// Evidence propagation over a context graph and scenario conditioning with
// clamps and exclusions.

#include "likelic/graph.hpp"

#include <string>
#include <vector>

namespace likelic {

enum class EvidenceMode {
    Source,  ///< starts a propagation
    Clamp,   ///< overrides the final value of its vertex
};

struct Evidence {
    VertexId vertex;
    Likeliness value;
    EvidenceMode mode = EvidenceMode::Source;

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

/// When `condition` ends up necessary (6), `target` is demoted to at most `floor`.
struct Exclusion {
    VertexId condition;
    VertexId target;
    Likeliness floor;  ///< 0, 1 or 2

    friend bool operator==(const Exclusion&, const Exclusion&) = default;
};

struct Scenario {
    std::string name;
    std::vector<Evidence> evidence;
    std::vector<Exclusion> exclusions;
};

enum class PropagationMode {
    /// max over paths p of min(l(a), l(p)); order-independent. Default.
    Fixpoint,
    /// Round-based: the source's direct successors are pinned at
    /// min(l(a), stored edge), then neighbours of just-updated vertices are
    /// raised round by round. Reproduces the "John in Snowbird" valuation.
    Wavefront,
    /// Diagnostic only: max(l(a), best path value), the update rule read
    /// word for word. Lets every reachable vertex exceed the source.
    Literal,
};

std::string_view mode_name(PropagationMode mode);
PropagationMode mode_from_name(std::string_view name);  ///< throws std::invalid_argument

struct Propagation {
    Valuation values;       ///< grades reached from the source alone
    std::size_t sweeps = 0; ///< relaxation sweeps or rounds until quiescence
};

/// Values reached from one source, without merging any prior valuation.
/// Throws DomainError for unknown vertices or non-Source evidence.
Propagation propagate_from(const ContextGraph& g, const Evidence& source, PropagationMode mode);

/// propagate_from() merged by max into the graph's base valuation.
Valuation propagate(const ContextGraph& g, const Evidence& source,
                    PropagationMode mode = PropagationMode::Fixpoint);

/// defaults -> max-merge of every Source propagation -> exclusions whose
/// condition is 6 in the final view -> clamps.
/// Throws DomainError for conflicting evidence on one vertex or invalid floors.
Valuation apply_scenario(const ContextGraph& g, const Valuation& defaults, const Scenario& s,
                         PropagationMode mode = PropagationMode::Fixpoint);

/// Rows are vertices, columns are "default" followed by one column per scenario.
struct ScenarioTable {
    std::vector<std::string> columns;
    std::vector<std::string> rows;
    std::vector<std::vector<std::optional<Likeliness>>> cells;  ///< cells[row][column]

    /// Throws DomainError when either name is absent.
    std::optional<Likeliness> at(std::string_view row, std::string_view column) const;

    /// One line per row: "label: v v v" ("-" for undefined cells), preceded
    /// by a "# columns: ..." header.
    std::string render() const;
};

inline constexpr std::string_view kDefaultColumn = "default";

ScenarioTable compare_scenarios(const ContextGraph& g, const Valuation& defaults,
                                std::span<const Scenario> scenarios, std::span<const VertexId> rows,
                                PropagationMode mode = PropagationMode::Fixpoint);

} // namespace likelic
