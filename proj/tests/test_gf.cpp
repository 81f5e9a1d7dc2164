#include <doctest.h>

#include <random>
#include <set>

#include "cdm/gf.hpp"

using namespace cdm;

TEST_CASE("smallest primitive polynomials for the classical small fields") {
    CHECK(find_primitive_poly(2, 2).modulus == std::vector<Coord>{1, 1});      // x^2+x+1
    CHECK(find_primitive_poly(2, 3).modulus == std::vector<Coord>{1, 1, 0});   // x^3+x+1
    CHECK(find_primitive_poly(2, 4).modulus == std::vector<Coord>{1, 1, 0, 0});  // x^4+x+1
    CHECK(find_primitive_poly(2, 5).modulus == std::vector<Coord>{1, 0, 1, 0, 0});  // x^5+x^2+1
    CHECK(find_primitive_poly(3, 2).modulus == std::vector<Coord>{2, 1});      // x^2+x+2
    CHECK(find_primitive_poly(2, 3).poly_text() == "x^3+x+1");
    CHECK(find_primitive_poly(3, 2).poly_text() == "x^2+x+2");
}

TEST_CASE("make_field rejects non-primitive moduli") {
    CHECK_THROWS_AS(make_field(2, 2, {1, 0}), StructuralError);     // x^2+1 reducible
    CHECK_THROWS_AS(make_field(2, 4, {1, 1, 1, 1}), StructuralError);  // irreducible, order 5
    CHECK_NOTHROW(make_field(2, 4, {1, 1, 0, 0}));
    CHECK_THROWS_AS(find_primitive_poly(2, 25), CapacityError);
}

TEST_CASE("field products reduce against the modulus") {
    const FieldSpec f8 = find_primitive_poly(2, 3);
    const FieldElem x = ff_x(f8);
    const FieldElem x2 = ff_pow(f8, x, 2);
    CHECK(additive_coords(f8, ff_mul(f8, x, x2)) == Elem{0, 1, 1});  // x^3 = x+1
    const FieldSpec f4 = find_primitive_poly(2, 2);
    CHECK(additive_coords(f4, ff_mul(f4, ff_x(f4), ff_x(f4))) == Elem{1, 1});
    const FieldElem a = ff_pow(f8, x, 5);
    CHECK(ff_mul(f8, a, ff_one(f8)) == a);
}

TEST_CASE("additive coordinates put the highest-degree coefficient first") {
    const FieldSpec f4 = find_primitive_poly(2, 2);
    CHECK(additive_coords(f4, ff_x(f4)) == Elem{1, 0});
    CHECK(additive_coords(f4, ff_zero(f4)) == Elem{0, 0});
    const FieldSpec f8 = find_primitive_poly(2, 3);
    CHECK(additive_coords(f8, ff_pow(f8, ff_x(f8), 3)) == Elem{0, 1, 1});
}

TEST_CASE("x is primitive: its powers exhaust the nonzero elements") {
    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 10}, {3, 1}, {3, 2}, {3, 4},
             {5, 2}, {7, 2}, {11, 1}}) {
        const FieldSpec f = find_primitive_poly(p, n);
        std::int64_t q = 1;
        for (int i = 0; i < n; ++i) q *= p;
        std::set<FieldElem> powers;
        FieldElem cur = ff_one(f);
        for (std::int64_t k = 0; k < q - 1; ++k) {
            powers.insert(cur);
            cur = ff_mul(f, cur, ff_x(f));
        }
        CHECK(powers.size() == static_cast<std::size_t>(q - 1));
        CHECK(cur == ff_one(f));  // order exactly q-1
    }
}

TEST_CASE("additive coordinates give an additive isomorphism") {
    std::mt19937_64 rng(5);
    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 4}, {3, 3}, {5, 2}}) {
        const FieldSpec f = find_primitive_poly(p, n);
        const GroupSpec g(p, std::vector<int>(static_cast<std::size_t>(n), 1));
        std::uniform_int_distribution<Coord> dist(0, p - 1);
        for (int t = 0; t < 1000; ++t) {
            FieldElem a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
            for (auto& c : a) c = dist(rng);
            for (auto& c : b) c = dist(rng);
            CHECK(additive_coords(f, ff_add(f, a, b)) ==
                  g.add(additive_coords(f, a), additive_coords(f, b)));
        }
    }
}

TEST_CASE("multiplication is commutative and distributes over addition") {
    std::mt19937_64 rng(9);
    const FieldSpec f = find_primitive_poly(3, 3);
    std::uniform_int_distribution<Coord> dist(0, 2);
    for (int t = 0; t < 500; ++t) {
        FieldElem a(3), b(3), c(3);
        for (auto& v : a) v = dist(rng);
        for (auto& v : b) v = dist(rng);
        for (auto& v : c) v = dist(rng);
        CHECK(ff_mul(f, a, b) == ff_mul(f, b, a));
        CHECK(ff_mul(f, a, ff_add(f, b, c)) == ff_add(f, ff_mul(f, a, b), ff_mul(f, a, c)));
    }
}
