#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cdm/constructions.hpp"
#include "cdm/designs.hpp"
#include "cdm/io.hpp"
#include "property_checks.hpp"

using namespace cdm;

namespace {

DifferenceMatrix golden_5x8() {
    GroupSpec g = GroupSpec::parse("Z2xZ2xZ2");
    return make_dm(g, 1, parse_rows_text(g,
        "000 000 000 000 000 000 000 000; "
        "000 101 111 010 110 011 001 100; "
        "000 100 010 110 001 101 011 111; "
        "000 111 110 001 011 100 101 010; "
        "000 001 101 100 111 110 010 011"));
}

ContractedDifferenceMatrix two_row_z42() {
    GroupSpec g = GroupSpec::parse("Z4xZ2");
    return make_cdm(g, 0, parse_rows_text(g, "01 10 20; 21 01 10"));
}

}  // namespace

TEST_CASE("p-expansion matches the printed index convention") {
    SUBCASE("2-expansion of the 2x3 matrix over Z4xZ2") {
        const DifferenceMatrix e = p_expand(two_row_z42());
        CHECK(e.row_count() == 4);
        CHECK(e.col_count() == 8);
        // row indexed (1,1), column indexed (0,1,1)
        CHECK(e.rows[3][3] == Elem{0, 1});
        // row indexed (0,1), column indexed (1,0,0)
        CHECK(e.rows[1][4] == Elem{2, 1});
    }
    SUBCASE("all-zero one-row matrix expands to the all-identity block") {
        GroupSpec g = GroupSpec::parse("Z4xZ2");
        ContractedDifferenceMatrix z = make_cdm(g, 0, MatrixRows{{g.zero(), g.zero(), g.zero()}});
        const DifferenceMatrix e = p_expand(z);
        CHECK(e.row_count() == 2);
        CHECK(e.col_count() == 8);
        for (const auto& row : e.rows) {
            for (const auto& entry : row) CHECK(g.is_zero(entry));
        }
    }
    SUBCASE("3-expansion of the 2x2 matrix over Z3xZ3") {
        GroupSpec g = GroupSpec::parse("Z3xZ3");
        ContractedDifferenceMatrix m = make_cdm(g, 0, parse_rows_text(g, "01 10; 10 11"));
        const DifferenceMatrix e = p_expand(m);
        CHECK(e.rows[8][8] == Elem{0, 2});  // row (2,2), column (2,2)
    }
}

TEST_CASE("difference-matrix verification with brute-force cross-check") {
    DifferenceMatrix a = golden_5x8();
    CHECK(verify_dm(a).ok);
    CHECK(a.verified);

    // Mutate entry (1,1) from 101 to 100 and recount rows 0/1 by hand.
    DifferenceMatrix bad = golden_5x8();
    bad.rows[1][1] = Elem{1, 0, 0};
    std::map<Elem, int> counts;
    for (std::size_t j = 0; j < bad.col_count(); ++j) {
        counts[bad.group.sub(bad.rows[0][j], bad.rows[1][j])]++;
    }
    bool oracle_sees_fault = false;
    for (const auto& [elem, count] : counts) {
        if (count != 1) oracle_sees_fault = true;
    }
    CHECK(oracle_sees_fault);
    const auto r = verify_dm(bad);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(bad.verified);
    REQUIRE(r.witness.has_value());
    // The reported witness multiplicity must agree with the hand recount
    // when it names the (0,1) pair.
    if (r.witness->row_a == 0 && r.witness->row_b == 1) {
        auto it = counts.find(r.witness->element);
        const int seen = it == counts.end() ? 0 : it->second;
        CHECK(seen == r.witness->multiplicity);
        CHECK(seen != 1);
    }
}

TEST_CASE("the trivial designs verify") {
    for (const char* name : {"Z4xZ2", "Z8", "Z9xZ3", "Z2xZ2"}) {
        const GroupSpec g = GroupSpec::parse(name);
        DifferenceMatrix t = trivial_dm(g, 2);
        CHECK(verify_dm(t).ok);
        ContractedDifferenceMatrix c = trivial_cdm(g, 1);
        CHECK(verify_cdm_fast(c).ok);
    }
    CHECK(trivial_cdm(GroupSpec::parse("Z4xZ2"), 0).rows.front() ==
          std::vector<Elem>{{1, 0}, {2, 0}, {0, 1}});
    GroupSpec z8 = GroupSpec::parse("Z8");
    CHECK(trivial_cdm(z8, 0).rows.front() == std::vector<Elem>{{1}, {2}, {4}});
}

TEST_CASE("fast contracted verification and witnesses") {
    SUBCASE("the 2x3 matrix over Z4xZ2 passes at s = 0") {
        ContractedDifferenceMatrix m = two_row_z42();
        CHECK(verify_cdm_fast(m).ok);
        CHECK(m.verified);
    }
    SUBCASE("a repeated row always fails with an (a, b) witness") {
        GroupSpec g = GroupSpec::parse("Z4xZ2");
        ContractedDifferenceMatrix m =
            make_cdm(g, 0, parse_rows_text(g, "01 10 20; 01 10 20"));
        const auto r = check_cdm_fast(m);
        CHECK_FALSE(r.ok);
        REQUIRE(r.witness.has_value());
        REQUIRE(r.witness->b.has_value());
        // The witness must actually evaluate to the identity.
        Elem acc = g.zero();
        for (std::size_t i = 0; i < m.row_count(); ++i) {
            for (std::size_t j = 0; j < m.col_count(); ++j) {
                acc = g.add(acc, g.scalar_mul(r.witness->a[i] * (*r.witness->b)[j], m.rows[i][j]));
            }
        }
        CHECK(g.is_zero(acc));
    }
    SUBCASE("the 4x4 matrix over Z2xZ2 passes at s = 2") {
        GroupSpec g = GroupSpec::parse("Z2xZ2");
        ContractedDifferenceMatrix m =
            make_cdm(g, 2, parse_rows_text(g, "00 00 01 10; 00 01 10 00; 01 10 00 01; 10 00 01 11"));
        CHECK(verify_cdm_fast(m).ok);
        CHECK(verify_cdm_full(m).ok);
    }
    SUBCASE("multiplicity witness for s > 0") {
        GroupSpec g = GroupSpec::parse("Z2xZ2");
        ContractedDifferenceMatrix m =
            make_cdm(g, 1, parse_rows_text(g, "00 00 00; 01 10 11"));
        const auto r = check_cdm_fast(m);
        CHECK_FALSE(r.ok);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->element.has_value());
        CHECK(r.witness->multiplicity.has_value());
    }
}

TEST_CASE("fast and full verification agree") {
    SUBCASE("on golden matrices") {
        ContractedDifferenceMatrix m = two_row_z42();
        CHECK(check_cdm_fast(m).ok == check_cdm_full(m).ok);
    }
    SUBCASE("exhaustively over all small shapes") {
        // every 2x2 matrix over Z_2^2 and over Z_4, both routes
        for (const char* name : {"Z2xZ2", "Z4"}) {
            const GroupSpec g = GroupSpec::parse(name);
            const auto elems = enumerate_elements(g);
            for (const auto& a : elems)
            for (const auto& b : elems)
            for (const auto& cc : elems)
            for (const auto& d : elems) {
                const ContractedDifferenceMatrix m = make_cdm(g, 0, MatrixRows{{a, b}, {cc, d}});
                CHECK(check_cdm_fast(m).ok == check_cdm_full(m).ok);
            }
        }
        // every 1x2 matrix over Z_2 at s = 1
        const GroupSpec z2 = GroupSpec::parse("Z2");
        for (const auto& a : enumerate_elements(z2)) {
            for (const auto& b : enumerate_elements(z2)) {
                const ContractedDifferenceMatrix m = make_cdm(z2, 1, MatrixRows{{a, b}});
                CHECK(check_cdm_fast(m).ok == check_cdm_full(m).ok);
            }
        }
    }
    SUBCASE("on random matrices over small groups") {
        std::mt19937_64 rng(1234);
        for (const char* name : {"Z4xZ2", "Z2xZ2", "Z8", "Z9"}) {
            const GroupSpec g = GroupSpec::parse(name);
            CHECK(cdm::testing::fast_full_disagreements(rng, g, 2, 0, 150) == 0);
            CHECK(cdm::testing::fast_full_disagreements(rng, g, 2, 1, 100) == 0);
            CHECK(cdm::testing::fast_full_disagreements(rng, g, 3, 0, 100) == 0);
        }
    }
}

TEST_CASE("normalization fixes the first row and column") {
    SUBCASE("an already-normalized field table is unchanged") {
        DifferenceMatrix d = drake_dm(2, 3);
        verify_dm(d);
        const DifferenceMatrix n = normalize_dm(d);
        CHECK(n.rows == d.rows);
    }
    SUBCASE("a translated matrix renormalizes and idempotence holds") {
        DifferenceMatrix d = drake_dm(2, 2);
        // translate every column by its own first entry plus a constant
        for (auto& row : d.rows) {
            for (auto& e : row) e = d.group.add(e, Elem{1, 1});
        }
        verify_dm(d);
        DifferenceMatrix n = normalize_dm(d);
        for (const auto& e : n.rows.front()) CHECK(n.group.is_zero(e));
        for (const auto& row : n.rows) CHECK(n.group.is_zero(row.front()));
        CHECK(verify_dm(n).ok);
        const DifferenceMatrix n2 = normalize_dm(n);
        CHECK(n2.rows == n.rows);
    }
    SUBCASE("unverified input is rejected") {
        DifferenceMatrix d = drake_dm(2, 2);
        CHECK_THROWS_AS(normalize_dm(d), VerificationError);
    }
}

TEST_CASE("row deletion preserves verification") {
    DifferenceMatrix a = golden_5x8();
    verify_dm(a);
    DifferenceMatrix b = delete_rows(a, {4});
    CHECK(b.verified);
    CHECK(b.row_count() == 4);
    CHECK(check_dm(b).ok);
    ContractedDifferenceMatrix m = contracted_field_cdm(2, 4);
    verify_cdm_fast(m);
    ContractedDifferenceMatrix m2 = delete_rows(m, {3});
    CHECK(m2.verified);
    CHECK(check_cdm_fast(m2).ok);
    CHECK_THROWS_AS(delete_rows(b, {0, 1, 2, 3}), StructuralError);
}

TEST_CASE("feasibility bounds") {
    CHECK(max_rows_bound(GroupSpec::parse("Z2xZ2xZ2"), 1) == 8);
    CHECK(max_rows_bound(GroupSpec::parse("Z4xZ2"), 3) == 24);
    CHECK(sylow2_obstruction(GroupSpec::parse("Z8"), 1));
    CHECK_FALSE(sylow2_obstruction(GroupSpec::parse("Z8"), 2));
    CHECK_FALSE(sylow2_obstruction(GroupSpec::parse("Z4xZ2"), 1));
    CHECK_FALSE(sylow2_obstruction(GroupSpec::parse("Z9"), 1));
    CHECK_FALSE(elem_ab_cdm_feasible(2, 2, 0, 3));
    CHECK(elem_ab_cdm_feasible(2, 2, 0, 2));
    CHECK(elem_ab_cdm_feasible(2, 2, 1, 3));
    CHECK(elem_ab_dm_feasible(2, 2, 0, 4));
    CHECK_FALSE(elem_ab_dm_feasible(2, 2, 0, 5));
    CHECK(elem_ab_dm_feasible(2, 2, 1, 8));
}

TEST_CASE("expansion border is all-identity for assorted matrices") {
    CHECK(cdm::testing::expansion_border_is_zero(two_row_z42()));
    CHECK(cdm::testing::expansion_border_is_zero(contracted_field_cdm(2, 3)));
    CHECK(cdm::testing::expansion_border_is_zero(contracted_field_cdm(3, 2)));
    CHECK(cdm::testing::expansion_border_is_zero(trivial_cdm(GroupSpec::parse("Z8xZ2"), 1)));
}

TEST_CASE("column and row symmetries preserve the fast check") {
    std::mt19937_64 rng(77);
    ContractedDifferenceMatrix base = two_row_z42();
    REQUIRE(check_cdm_fast(base).ok);
    std::vector<std::size_t> cols{0, 1, 2};
    std::vector<std::size_t> rows{0, 1};
    for (int t = 0; t < 20; ++t) {
        std::shuffle(cols.begin(), cols.end(), rng);
        std::shuffle(rows.begin(), rows.end(), rng);
        ContractedDifferenceMatrix m = cdm::testing::permute_columns(base, cols);
        m = cdm::testing::permute_rows(m, rows);
        if (t % 2) m = cdm::testing::negate_column(m, t % 3);
        if (t % 3 == 0) m = cdm::testing::negate_row(m, t % 2);
        CHECK(check_cdm_fast(m).ok);
    }
    // and the same transformations keep invalid matrices invalid
    ContractedDifferenceMatrix bad = cdm::testing::random_cdm(rng, base.group, 2, 0);
    while (check_cdm_fast(bad).ok) bad = cdm::testing::random_cdm(rng, base.group, 2, 0);
    CHECK_FALSE(check_cdm_fast(cdm::testing::negate_column(bad, 1)).ok);
}

TEST_CASE("every verified instance respects the row bound") {
    std::vector<DifferenceMatrix> instances;
    instances.push_back(drake_dm(2, 2));
    instances.push_back(drake_dm(2, 3));
    instances.push_back(drake_dm(3, 1));
    instances.push_back(trivial_dm(GroupSpec::parse("Z4xZ2"), 2));
    instances.push_back(p_expand(two_row_z42()));
    for (auto& a : instances) {
        REQUIRE(verify_dm(a).ok);
        CHECK(static_cast<std::int64_t>(a.row_count()) <= max_rows_bound(a.group, a.lambda));
    }
}
