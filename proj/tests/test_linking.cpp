#include <doctest.h>

#include <random>

#include "cdm/constructions.hpp"
#include "cdm/io.hpp"
#include "cdm/linking.hpp"

using namespace cdm;

namespace {

// The size-3 system over Z4xZ2xZ2 built from the GF(4) table.
LinkingSystem small_system(const std::optional<std::vector<std::vector<Elem>>>& shifts) {
    GroupSpec host = GroupSpec::parse("Z4xZ2xZ2");
    DiagonalSubgroup e(host, {1, 1, 0});
    DifferenceMatrix base = drake_dm(2, 2);
    verify_dm(base);
    DifferenceMatrix dm = hom_image_dm(base, Homomorphism::coordinate_reversal(base.group));
    verify_dm(dm);
    return build_linking_system(e, dm, shifts);
}

}  // namespace

TEST_CASE("parameter series") {
    CHECK(hadamard_params(1) == DsParams{16, 6, 2, 4});
    CHECK(hadamard_params(2) == DsParams{64, 28, 12, 16});
    CHECK(hadamard_params(3) == DsParams{256, 120, 56, 64});
    CHECK_THROWS_AS(hadamard_params(0), StructuralError);
}

TEST_CASE("hyperplane subgroups of a rank-2 elementary subgroup") {
    GroupSpec host = GroupSpec::parse("Z4xZ2xZ2");
    DiagonalSubgroup e(host, {1, 1, 0});
    const auto hs = hyperplane_subgroups(e);
    REQUIRE(hs.size() == 3);
    for (const auto& h : hs) CHECK(h.size() == 2);
    CHECK(hs[0] == std::vector<Elem>{{0, 0, 0}, {2, 0, 0}});
    CHECK(hs[1] == std::vector<Elem>{{0, 0, 0}, {0, 0, 1}});
    CHECK(hs[2] == std::vector<Elem>{{0, 0, 0}, {2, 0, 1}});
}

TEST_CASE("hyperplane subgroups of a rank-3 subgroup of Z2^6") {
    GroupSpec host(2, std::vector<int>(6, 1));
    DiagonalSubgroup e(host, {1, 1, 1, 0, 0, 0});
    const auto hs = hyperplane_subgroups(e);
    CHECK(hs.size() == 7);
    for (const auto& h : hs) CHECK(h.size() == 4);
    CHECK_THROWS_AS(hyperplane_subgroups(DiagonalSubgroup(GroupSpec::parse("Z4xZ2"), {0, 1})),
                    StructuralError);
}

TEST_CASE("difference-set verification") {
    const DsParams p{16, 6, 2, 4};
    GroupSpec g = GroupSpec::parse("Z4xZ2xZ2");
    const auto shifts = parse_rows_text(g, "000 000 000; 001 200 200; 001 000 000");
    LinkingSystem sys = small_system(shifts);
    SUBCASE("the first member set is a (16,6,2,4)-difference set") {
        DifferenceSet d = sys.sets.front();
        CHECK(verify_difference_set(d).ok);
        CHECK(d.params == p);
    }
    SUBCASE("the full group fails the parameter check") {
        CHECK_THROWS_AS(make_difference_set(g, enumerate_elements(g), p), StructuralError);
    }
    SUBCASE("swapping one element for a non-member fails with a witness") {
        DifferenceSet d = sys.sets.front();
        for (const auto& cand : enumerate_elements(g)) {
            if (std::find(d.elements.begin(), d.elements.end(), cand) == d.elements.end()) {
                d.elements.back() = cand;
                break;
            }
        }
        DifferenceSet mutated = make_difference_set(g, d.elements, p);
        const auto r = verify_difference_set(mutated);
        CHECK_FALSE(r.ok);
        CHECK(r.element.has_value());
        CHECK(r.multiplicity != p.lambda);
    }
}

TEST_CASE("sums and parameter identities of verified difference sets") {
    GroupSpec g = GroupSpec::parse("Z4xZ2xZ2");
    const auto shifts = parse_rows_text(g, "000 000 000; 001 200 200; 001 000 000");
    LinkingSystem sys = small_system(shifts);
    for (auto& d : sys.sets) {
        REQUIRE(verify_difference_set(d).ok);
        CHECK(d.params.k * (d.params.k - 1) == d.params.lambda * (d.params.v - 1));
        // autocorrelation coefficients sum to k^2
        std::int64_t total = 0;
        for (const auto& a : d.elements) {
            for (const auto& b : d.elements) {
                total += 1;
                (void)a;
                (void)b;
            }
        }
        CHECK(total == d.params.k * d.params.k);
    }
}

TEST_CASE("a pair of identical sets is rejected with a precise error") {
    GroupSpec g = GroupSpec::parse("Z4xZ2xZ2");
    const auto shifts = parse_rows_text(g, "000 000 000; 001 200 200; 001 000 000");
    LinkingSystem sys = small_system(shifts);
    LinkingSystem twins;
    twins.group = sys.group;
    twins.params = sys.params;
    twins.sets = {sys.sets[0], sys.sets[0]};
    const auto r = check_linking(twins);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.pairs.empty());
    CHECK_FALSE(r.pairs.front().error.empty());
}

TEST_CASE("the built system verifies for any choice of shifts") {
    std::mt19937_64 rng(2024);
    GroupSpec host = GroupSpec::parse("Z4xZ2xZ2");
    DiagonalSubgroup e(host, {1, 1, 0});
    const auto epts = enumerate_elements(e.subgroup());
    std::uniform_int_distribution<std::size_t> dist(0, epts.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Elem>> shifts(3);
        for (auto& row : shifts) {
            for (int j = 0; j < 3; ++j) row.push_back(e.embed(epts[dist(rng)]));
        }
        LinkingSystem sys = small_system(shifts);
        CHECK(verify_linking(sys).ok);
    }
}

TEST_CASE("system size is one less than the matrix row count") {
    LinkingSystem sys = small_system(std::nullopt);
    CHECK(sys.sets.size() == 3);
    CHECK(verify_linking(sys).ok);
}

TEST_CASE("a size-7 system in Z2^6 from the GF(8) table") {
    GroupSpec host(2, std::vector<int>(6, 1));
    DiagonalSubgroup e(host, {1, 1, 1, 0, 0, 0});
    DifferenceMatrix dm = drake_dm(2, 3);
    verify_dm(dm);
    LinkingSystem sys = build_linking_system(e, dm, std::nullopt);
    CHECK(sys.sets.size() == 7);
    CHECK(sys.params == hadamard_params(2));
    const auto r = verify_linking(sys);
    CHECK(r.ok);
}

TEST_CASE("structural requirements of the construction") {
    GroupSpec host = GroupSpec::parse("Z4xZ2xZ2");
    DiagonalSubgroup e(host, {1, 1, 0});
    DifferenceMatrix dm = drake_dm(2, 2);
    SUBCASE("unverified matrices are refused") {
        CHECK_THROWS_AS(build_linking_system(e, dm, std::nullopt), VerificationError);
    }
    SUBCASE("a non-normalized matrix is normalized internally") {
        verify_dm(dm);
        DifferenceMatrix shifted = dm;
        for (auto& row : shifted.rows) {
            for (auto& entry : row) entry = dm.group.add(entry, Elem{1, 1});
        }
        verify_dm(shifted);
        LinkingSystem a = build_linking_system(e, dm, std::nullopt);
        LinkingSystem b = build_linking_system(e, shifted, std::nullopt);
        for (std::size_t i = 0; i < a.sets.size(); ++i) {
            CHECK(a.sets[i].elements == b.sets[i].elements);
        }
    }
    SUBCASE("shift entries must lie in E") {
        verify_dm(dm);
        std::vector<std::vector<Elem>> shifts(3, std::vector<Elem>(3, host.zero()));
        shifts[0][0] = Elem{1, 0, 0};
        CHECK_THROWS_AS(build_linking_system(e, dm, shifts), StructuralError);
    }
}
