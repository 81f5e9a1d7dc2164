#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdm/designs.hpp"
#include "cdm/group.hpp"

namespace cdm {

struct DsParams {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t n = 0;
    bool operator==(const DsParams&) const = default;
};

/// The Menon/Hadamard parameter series
/// (2^{2d+2}, 2^d(2^{d+1}-1), 2^d(2^d-1), 2^{2d}).
DsParams hadamard_params(int d);

/// A k-subset of a group of order v whose nonzero internal differences
/// cover every non-identity element exactly lambda times; n = k - lambda.
struct DifferenceSet {
    GroupSpec group;
    std::vector<Elem> elements;  // sorted by element index
    DsParams params;
    bool verified = false;
};

DifferenceSet make_difference_set(GroupSpec group, std::vector<Elem> elements, DsParams params);

struct DsReport {
    bool ok = false;
    std::optional<Elem> element;
    std::int64_t multiplicity = 0;
    explicit operator bool() const noexcept { return ok; }
};

/// Autocorrelation check: coefficient k at the identity, lambda elsewhere.
DsReport check_difference_set(const DifferenceSet& d, std::int64_t cap = kDefaultEnumerationCap);
DsReport verify_difference_set(DifferenceSet& d, std::int64_t cap = kDefaultEnumerationCap);

/// A family of difference sets whose pairwise group-ring products are
/// (mu - nu) D(i,j) + nu G for fixed integers mu, nu.
struct LinkingSystem {
    GroupSpec group;
    std::vector<DifferenceSet> sets;
    DsParams params;
    std::int64_t mu = 0;
    std::int64_t nu = 0;
    bool verified = false;
};

/// The 2^{d+1}-1 subgroups of the host corresponding to the hyperplanes
/// of an elementary abelian E of rank d+1, one per nonzero GF(2)
/// functional, functionals enumerated lexicographically.  Each subgroup
/// is returned as its sorted element list in host coordinates.
std::vector<std::vector<Elem>> hyperplane_subgroups(const DiagonalSubgroup& e);

/// Builds the size-(m-1) family D_i = union_j (b_ij + e_ij + H_j) from a
/// verified (G/E, m, 1) difference matrix (normalized internally when
/// needed) and optional shifts e_ij in E (default all-identity).
/// The dm entries live on E.quotient(); b_ij is the canonical coset
/// representative of the (i, j) entry.
LinkingSystem build_linking_system(const DiagonalSubgroup& e, const DifferenceMatrix& dm,
                                   const std::optional<std::vector<std::vector<Elem>>>& e_choices =
                                       std::nullopt);

struct LinkingPairReport {
    std::size_t i = 0;
    std::size_t j = 0;
    bool ok = false;
    std::int64_t mu = 0;
    std::int64_t nu = 0;
    std::vector<Elem> linking_set;  // D(i,j), when identified
    std::string error;
};

struct LinkingReport {
    bool ok = false;
    std::int64_t mu = 0;
    std::int64_t nu = 0;
    std::vector<LinkingPairReport> pairs;
    std::string error;
    explicit operator bool() const noexcept { return ok; }
};

/// Checks every ordered pair (i, j), i != j: the convolution of D_i with
/// -D_j must take exactly two values, the level set of the value attained
/// on k elements must be a (v,k,lambda,n)-difference set, and (mu, nu)
/// must agree across pairs.
LinkingReport check_linking(const LinkingSystem& sys, std::int64_t cap = kDefaultEnumerationCap);
LinkingReport verify_linking(LinkingSystem& sys, std::int64_t cap = kDefaultEnumerationCap);

}  // namespace cdm
