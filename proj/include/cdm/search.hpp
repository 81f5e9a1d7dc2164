#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdm/designs.hpp"
#include "cdm/group.hpp"

namespace cdm {

/// Search for a (G, k, s) contracted difference matrix.
///
/// Exhaustive mode assigns entries in row-major order and prunes a partial
/// matrix as soon as a fully determined coefficient combination violates
/// the bilinear condition (s = 0) or pushes some multiplicity above p^s
/// (s > 0).  Random mode restarts: entries are drawn uniformly from the
/// values passing the same incremental check, with no repair.
///
/// The three `reduce_*` toggles are outcome-preserving symmetry reductions
/// (column order, per-column/per-row negation, row order); they never
/// change found/none.  `canonical_first_row` is different: it pins row 0
/// to its lexicographically first feasible value, which weakens an
/// exhausted_none to a restricted claim and is reported as a restriction.
struct SearchConfig {
    GroupSpec group;
    int k = 2;
    std::int64_t s = 0;
    enum class Mode { exhaustive, random } mode = Mode::exhaustive;

    bool canonical_first_row = false;
    bool reduce_columns = true;
    bool reduce_negation = true;
    bool reduce_row_order = true;

    std::uint64_t node_budget = 10'000'000;
    /// Optional wall-clock cap in seconds; 0 means no time cap.
    double time_budget_s = 0.0;
    std::uint64_t seed = 0;
    /// Exhaustive only: keep going after a hit and count every solution.
    bool count_all = false;

    /// Partition restriction: value range [lo, hi) for the first
    /// undetermined cell; hi = -1 means |G|.
    std::int64_t first_cell_lo = 0;
    std::int64_t first_cell_hi = -1;
};

struct SearchResult {
    enum class Outcome { found, exhausted_none, budget_exceeded } outcome =
        Outcome::exhausted_none;
    std::optional<ContractedDifferenceMatrix> matrix;
    std::uint64_t nodes_visited = 0;
    std::uint64_t solutions_count = 0;
    /// Completeness-weakening restrictions in effect (empty for a full
    /// exhaustive claim); currently only "first-row-canonical".
    std::vector<std::string> restrictions_applied;
    /// Outcome-preserving reductions that were on (informational).
    std::vector<std::string> reductions_applied;
    std::uint64_t seed = 0;
};

SearchResult search_cdm(const SearchConfig& config);

/// Splits the exhaustive tree by fixing the first undetermined entry to
/// disjoint value ranges; the union of the parts covers the space exactly
/// once and node counts add up.
std::vector<SearchConfig> partition_space(const SearchConfig& config, int parts);

/// Disjunction semantics: found beats budget_exceeded beats
/// exhausted_none; node counts and solution counts are summed.
SearchResult merge_results(const std::vector<SearchResult>& parts);

/// Runs the parts of an exhaustive config concurrently and merges.
SearchResult search_cdm_partitioned(const SearchConfig& config, int parts);

/// The lexicographically first row vector of the given length whose
/// expansion covers G exactly once (entries compared by element index).
std::vector<Elem> lex_first_feasible_row(const GroupSpec& g, int length);

}  // namespace cdm
