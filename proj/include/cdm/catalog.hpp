#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdm/designs.hpp"
#include "cdm/group.hpp"

namespace cdm {

enum class CatalogSource { trivial, chain, noncyclic2, computer_search, field };

enum class Maximality {
    proven_row_bound,          // m <= lambda|G| forces k <= n
    proven_cyclic_obstruction, // nontrivial cyclic 2-group, odd lambda
    proven_exhaustive,         // unrestricted exhaustive search
    restricted_exhaustive,     // exhaustive under the first-row canonical form
    unknown
};

std::string to_string(CatalogSource s);
std::string to_string(Maximality m);

/// One best-known (G, k, 0) contracted difference matrix for an abelian
/// 2-group of order <= 64, with how it was obtained and what is known
/// about maximality of k.
struct CatalogEntry {
    GroupSpec group;
    int best_known_k = 0;
    CatalogSource source = CatalogSource::trivial;
    Maximality maximality = Maximality::unknown;
    ContractedDifferenceMatrix matrix;
};

/// All 29 abelian 2-groups of order <= 64, in order of ascending order.
const std::vector<CatalogEntry>& catalog_entries();

std::optional<CatalogEntry> catalog_get(const GroupSpec& g);

struct CatalogReport {
    bool ok = false;
    int total = 0;
    int verified_ok = 0;
    int k_matches = 0;
    std::vector<std::string> failures;
};

/// verify_cdm_fast on every catalog matrix and a cross-check of its row
/// count against the recorded best-known k.
CatalogReport catalog_verify_all();

/// Reported maxima for (G, m, 1) difference matrices over the order-16
/// groups, from the orthomorphism-search literature.  The first two carry
/// no witness matrix here; the third is witnessed by the expansion of the
/// catalog's (Z_4xZ_2xZ_2, 3, 0) matrix.
struct ExternalRecord {
    GroupSpec group;
    std::int64_t max_m = 0;
    std::int64_t lambda = 1;
    bool has_witness = false;
};

const std::vector<ExternalRecord>& external_dm_records();

}  // namespace cdm
