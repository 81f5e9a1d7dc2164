#include <doctest.h>

#include <set>

#include "cdm/io.hpp"
#include "cdm/search.hpp"
#include "property_checks.hpp"

using namespace cdm;

namespace {

SearchConfig base_config(const char* group, int k, std::int64_t s = 0) {
    SearchConfig cfg;
    cfg.group = GroupSpec::parse(group);
    cfg.k = k;
    cfg.s = s;
    return cfg;
}

// Canonical key of a matrix for orbit bookkeeping.
std::string key_of(const ContractedDifferenceMatrix& m) {
    return render_rows_text(m.group, m.rows);
}

}  // namespace

TEST_CASE("infeasible row counts exit immediately") {
    SearchConfig cfg = base_config("Z4xZ2", 5);
    const SearchResult r = search_cdm(cfg);
    CHECK(r.outcome == SearchResult::Outcome::exhausted_none);
    CHECK(r.nodes_visited == 0);
}

TEST_CASE("exhaustive search finds known solutions and verifies them") {
    SearchConfig cfg = base_config("Z4xZ2xZ2", 3);
    const SearchResult r = search_cdm(cfg);
    REQUIRE(r.outcome == SearchResult::Outcome::found);
    REQUIRE(r.matrix.has_value());
    CHECK(r.matrix->verified);
    CHECK(check_cdm_fast(*r.matrix).ok);
}

TEST_CASE("exhaustive search proves small nonexistence") {
    SUBCASE("no three-row matrix over Z4xZ2") {
        SearchConfig cfg = base_config("Z4xZ2", 3);
        const SearchResult r = search_cdm(cfg);
        CHECK(r.outcome == SearchResult::Outcome::exhausted_none);
        CHECK(r.restrictions_applied.empty());
    }
    SUBCASE("reductions do not change the verdict") {
        SearchConfig cfg = base_config("Z4xZ2", 3);
        cfg.reduce_columns = cfg.reduce_negation = cfg.reduce_row_order = false;
        const SearchResult r = search_cdm(cfg);
        CHECK(r.outcome == SearchResult::Outcome::exhausted_none);
    }
}

TEST_CASE("solution count matches plain enumeration over Z2xZ2") {
    // Independent oracle: try all |G|^4 two-by-two matrices through the
    // expansion-route verifier.
    const GroupSpec g = GroupSpec::parse("Z2xZ2");
    const auto elems = enumerate_elements(g);
    std::uint64_t brute = 0;
    for (const auto& a : elems) {
        for (const auto& b : elems) {
            for (const auto& c : elems) {
                for (const auto& d : elems) {
                    const ContractedDifferenceMatrix m =
                        make_cdm(g, 0, MatrixRows{{a, b}, {c, d}});
                    if (check_cdm_full(m).ok) ++brute;
                }
            }
        }
    }
    SearchConfig cfg = base_config("Z2xZ2", 2);
    cfg.count_all = true;
    cfg.reduce_columns = cfg.reduce_negation = cfg.reduce_row_order = false;
    const SearchResult r = search_cdm(cfg);
    CHECK(r.outcome == SearchResult::Outcome::found);
    CHECK(r.solutions_count == brute);
    CHECK(brute > 0);
}

TEST_CASE("symmetry reductions cover every orbit") {
    const GroupSpec g = GroupSpec::parse("Z4xZ2");

    // Independent enumeration of all 2x3 solutions.
    std::set<std::string> full_set;
    std::vector<ContractedDifferenceMatrix> solutions;
    const auto elems = enumerate_elements(g);
    for (std::int64_t i0 = 0; i0 < 8; ++i0)
    for (std::int64_t i1 = 0; i1 < 8; ++i1)
    for (std::int64_t i2 = 0; i2 < 8; ++i2)
    for (std::int64_t i3 = 0; i3 < 8; ++i3)
    for (std::int64_t i4 = 0; i4 < 8; ++i4)
    for (std::int64_t i5 = 0; i5 < 8; ++i5) {
        const ContractedDifferenceMatrix m = make_cdm(
            g, 0,
            MatrixRows{{elems[i0], elems[i1], elems[i2]}, {elems[i3], elems[i4], elems[i5]}});
        if (check_cdm_fast(m).ok) {
            full_set.insert(key_of(m));
            solutions.push_back(m);
        }
    }

    SearchConfig all = base_config("Z4xZ2", 2);
    all.count_all = true;
    all.reduce_columns = all.reduce_negation = all.reduce_row_order = false;
    const SearchResult rall = search_cdm(all);
    CHECK(rall.solutions_count == full_set.size());

    // The canonical-form constraints of the reduced search, restated.
    auto is_canonical = [&](const ContractedDifferenceMatrix& m) {
        for (std::size_t j = 0; j < 3; ++j) {
            const auto idx = g.index_of(m.rows[0][j]);
            if (g.index_of(g.neg(m.rows[0][j])) < idx) return false;
            if (j > 0 && idx <= g.index_of(m.rows[0][j - 1])) return false;
        }
        return g.index_of(g.neg(m.rows[1][0])) >= g.index_of(m.rows[1][0]);
    };
    std::size_t canonical_count = 0;
    std::set<std::string> closure;
    std::vector<std::vector<std::size_t>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& m : solutions) {
        if (!is_canonical(m)) continue;
        ++canonical_count;
        for (const auto& perm : perms) {
            for (int negmask = 0; negmask < 8; ++negmask) {
                for (int rowneg = 0; rowneg < 2; ++rowneg) {
                    ContractedDifferenceMatrix t = cdm::testing::permute_columns(m, perm);
                    for (int j = 0; j < 3; ++j) {
                        if (negmask & (1 << j)) t = cdm::testing::negate_column(t, j);
                    }
                    if (rowneg) t = cdm::testing::negate_row(t, 1);
                    closure.insert(key_of(t));
                }
            }
        }
    }
    SearchConfig reduced = base_config("Z4xZ2", 2);
    reduced.count_all = true;
    const SearchResult rred = search_cdm(reduced);
    CHECK(rred.outcome == SearchResult::Outcome::found);
    CHECK(rred.solutions_count == canonical_count);
    CHECK(closure == full_set);
}

TEST_CASE("partitions cover the space exactly once") {
    SearchConfig cfg = base_config("Z4xZ2", 2);
    cfg.count_all = true;
    const SearchResult whole = search_cdm(cfg);

    for (int parts : {1, 3, 8}) {
        const auto configs = partition_space(cfg, parts);
        REQUIRE(configs.size() == static_cast<std::size_t>(parts));
        std::vector<SearchResult> results;
        for (const auto& part : configs) results.push_back(search_cdm(part));
        const SearchResult merged = merge_results(results);
        CHECK(merged.nodes_visited == whole.nodes_visited);
        CHECK(merged.solutions_count == whole.solutions_count);
        CHECK(merged.outcome == whole.outcome);
    }
}

TEST_CASE("merging keeps found over none") {
    SearchResult a;
    a.outcome = SearchResult::Outcome::exhausted_none;
    a.nodes_visited = 10;
    SearchResult b;
    b.outcome = SearchResult::Outcome::found;
    b.nodes_visited = 5;
    b.solutions_count = 1;
    const SearchResult merged = merge_results({a, b});
    CHECK(merged.outcome == SearchResult::Outcome::found);
    CHECK(merged.nodes_visited == 15);
}

TEST_CASE("random mode is reproducible and budget-bounded") {
    SearchConfig cfg = base_config("Z4xZ2xZ2", 3);
    cfg.mode = SearchConfig::Mode::random;
    cfg.seed = 42;
    cfg.node_budget = 1'000'000;
    const SearchResult r1 = search_cdm(cfg);
    const SearchResult r2 = search_cdm(cfg);
    REQUIRE(r1.outcome == SearchResult::Outcome::found);
    CHECK(r1.nodes_visited == r2.nodes_visited);
    CHECK(render_rows_text(cfg.group, r1.matrix->rows) ==
          render_rows_text(cfg.group, r2.matrix->rows));

    SearchConfig tiny = cfg;
    tiny.node_budget = 10;
    const SearchResult r3 = search_cdm(tiny);
    CHECK(r3.outcome == SearchResult::Outcome::budget_exceeded);
    CHECK(r3.nodes_visited <= 10);
}

TEST_CASE("the first-row restriction is reported and matches the footnote row") {
    const GroupSpec z442 = GroupSpec::parse("Z4xZ4xZ2");
    CHECK(render_rows_text(z442, {lex_first_feasible_row(z442, z442.total_exponent())}) ==
          "001 010 020 100 200");
    SearchConfig cfg = base_config("Z8xZ2", 3);
    cfg.canonical_first_row = true;
    const SearchResult r = search_cdm(cfg);
    CHECK(r.outcome == SearchResult::Outcome::exhausted_none);
    REQUIRE(r.restrictions_applied.size() == 1);
    CHECK(r.restrictions_applied.front() == "first-row-canonical");
}

TEST_CASE("restricted-exhaustive maxima for two order-32 groups") {
    // With row 0 pinned to its lexicographically first feasible value,
    // no three-row matrix exists over these groups; the catalog records
    // their two-row maxima as restricted-exhaustive.
    for (const char* name : {"Z16xZ2", "Z8xZ4"}) {
        SearchConfig cfg = base_config(name, 3);
        cfg.canonical_first_row = true;
        cfg.node_budget = std::uint64_t{1} << 40;
        const SearchResult r = search_cdm(cfg);
        CHECK(r.outcome == SearchResult::Outcome::exhausted_none);
        CHECK(r.restrictions_applied == std::vector<std::string>{"first-row-canonical"});
    }
}

TEST_CASE("concurrent partitioned driver agrees on nonexistence") {
    SearchConfig cfg = base_config("Z4xZ2", 3);
    const SearchResult r = search_cdm_partitioned(cfg, 4);
    CHECK(r.outcome == SearchResult::Outcome::exhausted_none);
}

TEST_CASE("found matrices from the searcher always pass the expansion oracle") {
    for (const char* name : {"Z4xZ2xZ2", "Z2xZ2xZ2", "Z2xZ2xZ2xZ2"}) {
        SearchConfig cfg = base_config(name, 3);
        const SearchResult r = search_cdm(cfg);
        REQUIRE(r.outcome == SearchResult::Outcome::found);
        CHECK(check_cdm_full(*r.matrix).ok);
    }
}

TEST_CASE("searches with s > 0 work against the expansion oracle") {
    SearchConfig cfg = base_config("Z4", 2, 1);
    const SearchResult r = search_cdm(cfg);
    REQUIRE(r.outcome == SearchResult::Outcome::found);
    CHECK(check_cdm_full(*r.matrix).ok);
    CHECK(r.matrix->col_count() == 3);
}
