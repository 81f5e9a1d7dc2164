#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdm/designs.hpp"
#include "cdm/gf.hpp"
#include "cdm/group.hpp"

namespace cdm {

/// The multiplication table of GF(p^n) in additive form: rows and columns
/// indexed 0, 1, x, x^2, ..., x^{p^n-2}; a (Z_p^n, p^n, 1) difference
/// matrix.
DifferenceMatrix drake_dm(std::int64_t p, int n, std::int64_t cap = kDefaultEnumerationCap);

/// The n x n table with (i, j) entry additive_coords(x^{i+j}); a
/// (Z_p^n, n, 0) contracted difference matrix.
ContractedDifferenceMatrix contracted_field_cdm(std::int64_t p, int n,
                                                std::int64_t cap = kDefaultEnumerationCap);

/// Entrywise image under a surjective homomorphism.  The image of a
/// verified (G, m, lambda) matrix is an (H, m, lambda*|Ker|) matrix.
DifferenceMatrix hom_image_dm(const DifferenceMatrix& a, const Homomorphism& phi);
/// Likewise (G, k, s) -> (H, k, s+u) with p^u = |Ker|.
ContractedDifferenceMatrix hom_image_cdm(const ContractedDifferenceMatrix& m,
                                         const Homomorphism& phi);

/// Rowwise Kronecker product of a verified (H, m, lambda) matrix over the
/// subgroup and a verified (G/H, m, mu) matrix over the quotient; the
/// result is a (G, m, lambda*mu) matrix over the host.  Column order: one
/// block per subgroup-matrix column, quotient columns cycling within.
DifferenceMatrix kronecker_compose_dm(const DiagonalSubgroup& sub,
                                      const DifferenceMatrix& a_over_sub,
                                      const DifferenceMatrix& b_over_quot);

/// Horizontal concatenation [embed(L) | lift(M)] of a verified (H, k, s)
/// matrix over the subgroup and a verified (G/H, k, t) matrix over the
/// quotient; an (G, k, s+t) contracted matrix over the host.
ContractedDifferenceMatrix concat_compose_cdm(const DiagonalSubgroup& sub,
                                              const ContractedDifferenceMatrix& l_over_sub,
                                              const ContractedDifferenceMatrix& m_over_quot);

/// Column concatenation of two verified matrices over the same group:
/// (G, m, lambda) + (G, m, mu) -> (G, m, lambda+mu).  Verification-gated.
DifferenceMatrix sum_compose_dm(const DifferenceMatrix& a, const DifferenceMatrix& b,
                                std::int64_t cap = kDefaultEnumerationCap);

/// Pairwise-sum product: rows indexed (i, i'), columns (j, j'), entry
/// a_{ij} + b_{i'j'}; a (G, m*m', lambda*mu*|G|) matrix.
/// Verification-gated: the result is checked before release.
DifferenceMatrix product_compose_dm(const DifferenceMatrix& a, const DifferenceMatrix& b,
                                    std::int64_t cap = kDefaultEnumerationCap);

/// One step of the subgroup chain: the cumulative cofactors at entry, the
/// host positions reduced by one, and the (elementary) step quotient.
struct ChainStep {
    std::vector<int> cofactors_before;
    std::vector<int> reduced_positions;
    GroupSpec quotient;
};

/// Chain G = G_0 > G_1 > ... > G_r built by reducing the floor(n/e)
/// largest direct factors at each step, stopping at the first elementary
/// subgroup.  Every quotient is Z_p^{floor(n/e)} and the terminal subgroup
/// Z_p^ell with ell >= floor(n/e).
struct ChainPlan {
    GroupSpec group;
    int k = 0;  // floor(n/e)
    std::vector<ChainStep> steps;
    std::vector<int> terminal_cofactors;
    std::vector<int> terminal_positions;
    GroupSpec terminal;
};

ChainPlan buratti_chain(const GroupSpec& g);

/// A verified (G, floor(n/e), 0) contracted difference matrix built by
/// composing field-table base cases along the chain.
ContractedDifferenceMatrix chain_cdm(const GroupSpec& g);

/// p-expansion of chain_cdm: a (G, p^{floor(n/e)}, 1) difference matrix.
DifferenceMatrix chain_dm(const GroupSpec& g, std::int64_t cap = kDefaultEnumerationCap);

/// The four-row (Z_{2^e} x Z_2, 4, 1) difference matrix, e >= 1.
DifferenceMatrix pan_chang_dm(int e);

/// The 2 x (e+1) contracted matrix
/// [(0,1) (1,0) (2,0) ... (2^{e-1},0); (2^{e-1},1) (0,1) (1,0) ... (2^{e-2},0)].
ContractedDifferenceMatrix pan_chang_cdm(int e);

/// A verified (G, 2, 0) contracted matrix for any abelian noncyclic
/// 2-group, by peeling Z_2^2 quotients down to an elementary or
/// Z_{2^e} x Z_2 base case.
ContractedDifferenceMatrix noncyclic2_cdm(const GroupSpec& g);

/// The four computer-found (G, 3, 0) contracted matrices, keyed by group:
/// Z_4xZ_2^2, Z_4^2xZ_2, Z_4xZ_2^3, Z_8xZ_2^3.
const std::vector<ContractedDifferenceMatrix>& searched_three_row_cdms();

/// Greedy chain builder over quotient base cases (elementary tables, the
/// searched three-row matrices for k = 3 at p = 2, the noncyclic two-row
/// constructions for k = 2).  Returns a verified (G, k, 0) matrix, or
/// nullopt when no chain is found -- which carries no nonexistence
/// meaning.
std::optional<ContractedDifferenceMatrix> best_known_cdm(const GroupSpec& g, int k);

/// Largest k for which best_known_cdm succeeds (0 for the trivial group).
int best_known_max_k(const GroupSpec& g);

}  // namespace cdm
