#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdm {

class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Coord = std::int64_t;

/// One group element, as a coordinate vector against the factors of its
/// GroupSpec (largest factor first).
using Elem = std::vector<Coord>;

inline constexpr std::int64_t kDefaultEnumerationCap = std::int64_t{1} << 22;

bool is_prime(std::int64_t m);

/// A finite abelian p-group Z_{p^{a_1}} x ... x Z_{p^{a_r}} with
/// a_1 >= a_2 >= ... >= a_r >= 1.  Construction canonicalizes: trivial
/// factors are dropped and the remaining exponents sorted nonincreasing.
/// The trivial group is the empty factor list.
class GroupSpec {
public:
    GroupSpec() : p_(2) {}
    GroupSpec(std::int64_t p, std::vector<int> exponents);

    /// Parses the text form, e.g. "Z4xZ2xZ2".  "Z1" is the trivial group.
    static GroupSpec parse(std::string_view text);

    std::int64_t p() const noexcept { return p_; }
    const std::vector<int>& exponents() const noexcept { return exponents_; }
    int rank() const noexcept { return static_cast<int>(exponents_.size()); }
    /// n with |G| = p^n.
    int total_exponent() const noexcept { return n_; }
    /// e with exponent(G) = p^e; 0 for the trivial group.
    int exponent() const noexcept { return exponents_.empty() ? 0 : exponents_.front(); }
    std::int64_t order() const noexcept { return order_; }
    std::int64_t factor_order(int i) const { return factor_orders_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::int64_t>& factor_orders() const noexcept { return factor_orders_; }
    bool trivial() const noexcept { return exponents_.empty(); }
    bool elementary() const noexcept;
    bool cyclic() const noexcept { return exponents_.size() <= 1; }

    bool operator==(const GroupSpec& o) const noexcept {
        return p_ == o.p_ && exponents_ == o.exponents_;
    }
    bool operator!=(const GroupSpec& o) const noexcept { return !(*this == o); }

    std::string text() const;

    Elem zero() const { return Elem(exponents_.size(), 0); }
    bool is_zero(const Elem& g) const;
    /// Reduces arbitrary integer coordinates into canonical range.
    Elem reduce(Elem g) const;
    Elem add(const Elem& g, const Elem& h) const;
    Elem sub(const Elem& g, const Elem& h) const;
    Elem neg(const Elem& g) const;
    Elem scalar_mul(std::int64_t c, const Elem& g) const;
    /// Throws StructuralError unless g is a canonical element of this group.
    void check_element(const Elem& g) const;

    /// Lexicographic index with coords[0] most significant; 0 is the identity.
    std::int64_t index_of(const Elem& g) const;
    Elem element_at(std::int64_t index) const;

private:
    std::int64_t p_;
    std::vector<int> exponents_;
    std::vector<std::int64_t> factor_orders_;
    int n_ = 0;
    std::int64_t order_ = 1;
};

/// All elements of g in lexicographic order (coords[0] most significant);
/// the identity comes first.  Throws CapacityError when |G| > cap.
std::vector<Elem> enumerate_elements(const GroupSpec& g,
                                     std::int64_t cap = kDefaultEnumerationCap);

/// The subgroup of `host` generated by {p^{b_i} e_i} for a cofactor vector
/// b, together with its canonical quotient and the three structure maps.
/// Subgroup is isomorphic to prod Z_{p^{a_i-b_i}}, quotient to
/// prod Z_{p^{b_i}} (both canonicalized, trivial factors dropped).
class DiagonalSubgroup {
public:
    DiagonalSubgroup(GroupSpec host, std::vector<int> cofactors);

    const GroupSpec& host() const noexcept { return host_; }
    const GroupSpec& subgroup() const noexcept { return subgroup_; }
    const GroupSpec& quotient() const noexcept { return quotient_; }
    const std::vector<int>& cofactors() const noexcept { return cofactors_; }

    /// Subgroup element -> host element; coordinate j lands at host
    /// position sub_positions[j], multiplied by p^{b_i}.
    Elem embed(const Elem& sub_elem) const;
    /// Quotient element -> its canonical coset representative in the host
    /// (i-th coordinate in [0, p^{b_i}), zero elsewhere).
    Elem coset_rep(const Elem& quot_elem) const;
    /// Host element -> its class in the quotient.
    Elem project(const Elem& host_elem) const;
    /// host = embed(second) + coset_rep(first), uniquely.
    std::pair<Elem, Elem> decompose(const Elem& host_elem) const;

    const std::vector<int>& sub_positions() const noexcept { return sub_positions_; }
    const std::vector<int>& quot_positions() const noexcept { return quot_positions_; }

private:
    GroupSpec host_;
    std::vector<int> cofactors_;
    GroupSpec subgroup_;
    GroupSpec quotient_;
    std::vector<int> sub_positions_;
    std::vector<int> quot_positions_;
};

/// A homomorphism between abelian p-groups given by an integer matrix T:
/// g |-> (sum_i T[j][i] g_i mod p^{b_j})_j.  The constructor rejects
/// matrices that are not well defined (T[j][i] must be divisible by
/// p^{max(0, b_j - a_i)}).
class Homomorphism {
public:
    Homomorphism(GroupSpec source, GroupSpec target,
                 std::vector<std::vector<Coord>> matrix);

    /// Keeps the first `keep` coordinates (canonical "drop the last
    /// components" map); requires the kept factor orders to match.
    static Homomorphism projection(const GroupSpec& source, int keep);
    static Homomorphism identity(const GroupSpec& g);
    /// Reverses the coordinate order; requires a palindromic factor list.
    static Homomorphism coordinate_reversal(const GroupSpec& g);

    const GroupSpec& source() const noexcept { return source_; }
    const GroupSpec& target() const noexcept { return target_; }
    const std::vector<std::vector<Coord>>& matrix() const noexcept { return matrix_; }

    Elem apply(const Elem& g) const;

    /// Image subgroup size, computed by closure over generator images.
    std::int64_t image_size(std::int64_t cap = kDefaultEnumerationCap) const;
    bool surjective(std::int64_t cap = kDefaultEnumerationCap) const;
    std::int64_t kernel_size(std::int64_t cap = kDefaultEnumerationCap) const;

private:
    GroupSpec source_;
    GroupSpec target_;
    std::vector<std::vector<Coord>> matrix_;  // matrix_[j][i]
};

}  // namespace cdm
