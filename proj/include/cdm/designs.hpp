#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdm/group.hpp"

namespace cdm {

using MatrixRows = std::vector<std::vector<Elem>>;

/// An m x (lambda |G|) matrix over G whose pairwise row differences cover
/// G exactly lambda times each.  Constructors emit unverified values; only
/// the verify operations set `verified`, and the composition operations
/// require it.
struct DifferenceMatrix {
    GroupSpec group;
    std::int64_t lambda = 1;
    MatrixRows rows;
    bool verified = false;

    std::size_t row_count() const noexcept { return rows.size(); }
    std::size_t col_count() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
};

/// A k x (n+s) matrix over a p-group of order p^n whose p-expansion is a
/// (G, p^k, p^s) difference matrix.
struct ContractedDifferenceMatrix {
    GroupSpec group;
    std::int64_t s = 0;
    MatrixRows rows;
    bool verified = false;

    std::size_t row_count() const noexcept { return rows.size(); }
    std::size_t col_count() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
};

/// Validates shape (column count = lambda |G|, m >= 1) and entries.
DifferenceMatrix make_dm(GroupSpec group, std::int64_t lambda, MatrixRows rows);
/// Validates shape (column count = n+s, k >= 1) and entries.
ContractedDifferenceMatrix make_cdm(GroupSpec group, std::int64_t s, MatrixRows rows);

struct DmWitness {
    std::size_t row_a = 0;
    std::size_t row_b = 0;
    Elem element;
    std::int64_t multiplicity = 0;
};

struct DmReport {
    bool ok = false;
    std::optional<DmWitness> witness;
    explicit operator bool() const noexcept { return ok; }
};

/// Failure witness for the fast contracted check: for s = 0 the offending
/// coefficient pair (a, b); for s > 0 the offending a together with an
/// element of wrong multiplicity.
struct CdmWitness {
    std::vector<Coord> a;
    std::optional<std::vector<Coord>> b;
    std::optional<Elem> element;
    std::optional<std::int64_t> multiplicity;
};

struct CdmReport {
    bool ok = false;
    std::optional<CdmWitness> witness;
    explicit operator bool() const noexcept { return ok; }
};

/// Pure check of the lambda-cover property over all distinct row pairs.
DmReport check_dm(const DifferenceMatrix& a, std::int64_t cap = kDefaultEnumerationCap);
/// check_dm + stamps `verified` on success.
DmReport verify_dm(DifferenceMatrix& a, std::int64_t cap = kDefaultEnumerationCap);

/// Pure bilinear-form check.  For s = 0 tests a M b^T != 0 over all
/// nonzero integer vectors a, b with entries in (-p, p); for s > 0 tests
/// that {a M c^T : c in Z_p^{n+s}} covers each element of G exactly p^s
/// times for every nonzero a with entries in (-p, p).
CdmReport check_cdm_fast(const ContractedDifferenceMatrix& m,
                         std::int64_t cap = kDefaultEnumerationCap);
CdmReport verify_cdm_fast(ContractedDifferenceMatrix& m,
                          std::int64_t cap = kDefaultEnumerationCap);

/// Expansion-route check: p_expand then check_dm with lambda = p^s.
/// Independent of the bilinear route; the two must agree.
DmReport check_cdm_full(const ContractedDifferenceMatrix& m,
                        std::int64_t cap = kDefaultEnumerationCap);
DmReport verify_cdm_full(ContractedDifferenceMatrix& m,
                         std::int64_t cap = kDefaultEnumerationCap);

/// The p^k x p^{n+s} matrix with (r, c) entry r M c^T, rows and columns in
/// enumerate_elements order of Z_p^k and Z_p^{n+s}.
DifferenceMatrix p_expand(const ContractedDifferenceMatrix& m,
                          std::int64_t cap = kDefaultEnumerationCap);

/// Translates each column j by -a_{0j} and then each row i by -a_{i0}, so
/// row 0 and column 0 become all-identity.  Requires a verified input;
/// the translate is again a difference matrix.
DifferenceMatrix normalize_dm(const DifferenceMatrix& a);

/// Identity row plus lambda copies of the element list.
DifferenceMatrix trivial_dm(const GroupSpec& g, std::int64_t lambda,
                            std::int64_t cap = kDefaultEnumerationCap);
/// Single row [e_1, p e_1, ..., e_2, ...] padded with s identities.
ContractedDifferenceMatrix trivial_cdm(const GroupSpec& g, std::int64_t s);

DifferenceMatrix delete_rows(const DifferenceMatrix& a, const std::vector<std::size_t>& indices);
ContractedDifferenceMatrix delete_rows(const ContractedDifferenceMatrix& m,
                                       const std::vector<std::size_t>& indices);

/// Row-count bound m <= lambda |G| for any (G, m, lambda) difference matrix.
std::int64_t max_rows_bound(const GroupSpec& g, std::int64_t lambda);
/// True when lambda is odd and the Sylow 2-subgroup is nontrivial cyclic,
/// in which case no (G, 3, lambda) difference matrix exists.
bool sylow2_obstruction(const GroupSpec& g, std::int64_t lambda);
/// (Z_p^n, m, p^s) difference matrix exists iff m <= p^{n+s}.
bool elem_ab_dm_feasible(std::int64_t p, int n, std::int64_t s, std::int64_t m);
/// (Z_p^n, k, s) contracted difference matrix exists iff k <= n+s.
bool elem_ab_cdm_feasible(std::int64_t p, int n, std::int64_t s, std::int64_t k);

/// All integer vectors of the given length with entries in (-p, p),
/// excluding the zero vector, in a fixed deterministic order.
std::vector<std::vector<Coord>> signed_range_vectors(std::int64_t p, int length);

std::int64_t int_pow(std::int64_t base, int exp);

}  // namespace cdm
