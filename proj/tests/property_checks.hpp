// Shared helpers for the property suites and the acceptance harness.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "cdm/designs.hpp"
#include "cdm/group.hpp"

namespace cdm::testing {

inline ContractedDifferenceMatrix random_cdm(std::mt19937_64& rng, const GroupSpec& g, int k,
                                             std::int64_t s) {
    const auto elems = enumerate_elements(g);
    std::uniform_int_distribution<std::size_t> dist(0, elems.size() - 1);
    MatrixRows rows(static_cast<std::size_t>(k));
    for (auto& row : rows) {
        for (int j = 0; j < g.total_exponent() + static_cast<int>(s); ++j) {
            row.push_back(elems[dist(rng)]);
        }
    }
    return make_cdm(g, s, std::move(rows));
}

// Counts disagreements between the bilinear route and the expansion route
// over `trials` uniform random matrices.
inline int fast_full_disagreements(std::mt19937_64& rng, const GroupSpec& g, int k,
                                   std::int64_t s, int trials) {
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
        const ContractedDifferenceMatrix m = random_cdm(rng, g, k, s);
        if (check_cdm_fast(m).ok != check_cdm_full(m).ok) ++bad;
    }
    return bad;
}

// Row 0 and column 0 of an expansion are all-identity.
inline bool expansion_border_is_zero(const ContractedDifferenceMatrix& m) {
    const DifferenceMatrix e = p_expand(m);
    for (const auto& entry : e.rows.front()) {
        if (!e.group.is_zero(entry)) return false;
    }
    for (const auto& row : e.rows) {
        if (!e.group.is_zero(row.front())) return false;
    }
    return true;
}

inline ContractedDifferenceMatrix permute_columns(const ContractedDifferenceMatrix& m,
                                                  const std::vector<std::size_t>& perm) {
    MatrixRows rows(m.row_count());
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        for (std::size_t j : perm) rows[i].push_back(m.rows[i][j]);
    }
    return make_cdm(m.group, m.s, std::move(rows));
}

inline ContractedDifferenceMatrix negate_column(const ContractedDifferenceMatrix& m,
                                                std::size_t col) {
    MatrixRows rows = m.rows;
    for (auto& row : rows) row[col] = m.group.neg(row[col]);
    return make_cdm(m.group, m.s, std::move(rows));
}

inline ContractedDifferenceMatrix permute_rows(const ContractedDifferenceMatrix& m,
                                               const std::vector<std::size_t>& perm) {
    MatrixRows rows;
    for (std::size_t i : perm) rows.push_back(m.rows[i]);
    return make_cdm(m.group, m.s, std::move(rows));
}

inline ContractedDifferenceMatrix negate_row(const ContractedDifferenceMatrix& m, std::size_t i) {
    MatrixRows rows = m.rows;
    for (auto& e : rows[i]) e = m.group.neg(e);
    return make_cdm(m.group, m.s, std::move(rows));
}

}  // namespace cdm::testing
