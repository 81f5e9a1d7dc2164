#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdm/group.hpp"

namespace cdm {

inline constexpr std::int64_t kDefaultFieldCap = std::int64_t{1} << 20;

/// GF(p^n) presented as Z_p[x]/(f) for a monic primitive f of degree n.
/// `modulus` holds c_0..c_{n-1} of f = x^n + c_{n-1} x^{n-1} + ... + c_0,
/// constant term first.  Primitivity (x generates the multiplicative
/// group) is checked at construction.
struct FieldSpec {
    std::int64_t p;
    int n;
    std::vector<Coord> modulus;

    std::string poly_text() const;  // e.g. "x^3+x+1"
};

/// A field element as its coefficient vector, coefficient of x^i at
/// position i (length n).
using FieldElem = std::vector<Coord>;

/// Validates that `modulus` is monic-primitive for GF(p^n).
FieldSpec make_field(std::int64_t p, int n, std::vector<Coord> modulus,
                     std::int64_t cap = kDefaultFieldCap);

/// The lexicographically smallest monic primitive polynomial for GF(p^n),
/// comparing coefficient tuples (c_0,...,c_{n-1}) low degree first.
FieldSpec find_primitive_poly(std::int64_t p, int n,
                              std::int64_t cap = kDefaultFieldCap);

FieldElem ff_zero(const FieldSpec& f);
FieldElem ff_one(const FieldSpec& f);
FieldElem ff_x(const FieldSpec& f);
FieldElem ff_add(const FieldSpec& f, const FieldElem& a, const FieldElem& b);
FieldElem ff_mul(const FieldSpec& f, const FieldElem& a, const FieldElem& b);
FieldElem ff_pow(const FieldSpec& f, const FieldElem& a, std::int64_t k);

/// Additive-group coordinates in Z_p^n with the highest-degree
/// coefficient first, so 1 -> (0,...,0,1) and x^{n-1} -> (1,0,...,0).
Elem additive_coords(const FieldSpec& f, const FieldElem& a);

/// Prime factorization by trial division (ascending, with multiplicity).
std::vector<std::int64_t> trial_factorize(std::int64_t m);

}  // namespace cdm
