#include "cdm/catalog.hpp"

#include "cdm/io.hpp"

namespace cdm {

std::string to_string(CatalogSource s) {
    switch (s) {
        case CatalogSource::trivial: return "trivial";
        case CatalogSource::chain: return "chain";
        case CatalogSource::noncyclic2: return "noncyclic2";
        case CatalogSource::computer_search: return "computer-search";
        case CatalogSource::field: return "field";
    }
    return "?";
}

std::string to_string(Maximality m) {
    switch (m) {
        case Maximality::proven_row_bound: return "proven-row-bound";
        case Maximality::proven_cyclic_obstruction: return "proven-cyclic-obstruction";
        case Maximality::proven_exhaustive: return "proven-exhaustive";
        case Maximality::restricted_exhaustive: return "restricted-exhaustive";
        case Maximality::unknown: return "unknown";
    }
    return "?";
}

namespace {

CatalogEntry entry(const char* group, int k, CatalogSource src, Maximality max, const char* rows) {
    GroupSpec g = GroupSpec::parse(group);
    CatalogEntry e;
    e.group = g;
    e.best_known_k = k;
    e.source = src;
    e.maximality = max;
    e.matrix = make_cdm(g, 0, parse_rows_text(g, rows));
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    using S = CatalogSource;
    using M = Maximality;
    std::vector<CatalogEntry> v;
    v.reserve(29);
    // order 2
    v.push_back(entry("Z2", 1, S::trivial, M::proven_cyclic_obstruction, "1"));
    // order 4
    v.push_back(entry("Z2xZ2", 2, S::chain, M::proven_row_bound, "01 10; 10 11"));
    v.push_back(entry("Z4", 1, S::trivial, M::proven_cyclic_obstruction, "1 2"));
    // order 8
    v.push_back(entry("Z2xZ2xZ2", 3, S::chain, M::proven_row_bound,
                      "001 010 100; 010 100 011; 100 011 110"));
    v.push_back(entry("Z4xZ2", 2, S::noncyclic2, M::proven_exhaustive, "01 10 20; 21 01 10"));
    v.push_back(entry("Z8", 1, S::trivial, M::proven_cyclic_obstruction, "1 2 4"));
    // order 16
    v.push_back(entry("Z2xZ2xZ2xZ2", 4, S::chain, M::proven_row_bound,
                      "0001 0010 0100 1000; 0010 0100 1000 0011; "
                      "0100 1000 0011 0110; 1000 0011 0110 1100"));
    v.push_back(entry("Z4xZ2xZ2", 3, S::computer_search, M::proven_exhaustive,
                      "001 010 100 200; 010 201 001 100; 211 100 201 210"));
    v.push_back(entry("Z4xZ4", 2, S::noncyclic2, M::proven_exhaustive,
                      "01 10 02 20; 10 11 20 22"));
    v.push_back(entry("Z8xZ2", 2, S::noncyclic2, M::proven_exhaustive,
                      "01 10 20 40; 41 01 10 20"));
    v.push_back(entry("Z16", 1, S::trivial, M::proven_cyclic_obstruction, "1 2 4 8"));
    // order 32
    v.push_back(entry("Z2xZ2xZ2xZ2xZ2", 5, S::chain, M::proven_row_bound,
                      "00001 00010 00100 01000 10000; 00010 00100 01000 10000 00101; "
                      "00100 01000 10000 00101 01010; 01000 10000 00101 01010 10100; "
                      "10000 00101 01010 10100 01101"));
    v.push_back(entry("Z4xZ2xZ2xZ2", 3, S::computer_search, M::unknown,
                      "0001 0010 0100 1000 2000; 0010 0100 2001 0001 1000; "
                      "1001 2110 0001 0010 0101"));
    v.push_back(entry("Z4xZ4xZ2", 3, S::computer_search, M::restricted_exhaustive,
                      "001 010 020 100 200; 021 001 211 010 100; 220 101 200 210 320"));
    v.push_back(entry("Z8xZ2xZ2", 2, S::noncyclic2, M::restricted_exhaustive,
                      "010 100 200 001 400; 210 010 100 400 401"));
    v.push_back(entry("Z8xZ4", 2, S::noncyclic2, M::restricted_exhaustive,
                      "01 10 20 02 40; 21 01 10 40 42"));
    v.push_back(entry("Z16xZ2", 2, S::noncyclic2, M::restricted_exhaustive,
                      "01 10 20 40 80; 81 01 10 20 40"));
    v.push_back(entry("Z32", 1, S::trivial, M::proven_cyclic_obstruction, "1 2 4 8 (16)"));
    // order 64
    v.push_back(entry("Z2xZ2xZ2xZ2xZ2xZ2", 6, S::chain, M::proven_row_bound,
                      "000001 000010 000100 001000 010000 100000; "
                      "000010 000100 001000 010000 100000 000011; "
                      "000100 001000 010000 100000 000011 000110; "
                      "001000 010000 100000 000011 000110 001100; "
                      "010000 100000 000011 000110 001100 011000; "
                      "100000 000011 000110 001100 011000 110000"));
    v.push_back(entry("Z4xZ2xZ2xZ2xZ2", 3, S::chain, M::unknown,
                      "00100 01000 20000 00001 00010 10000; "
                      "01000 20000 01100 00010 10000 00011; "
                      "20000 01100 21000 10000 00011 10010"));
    v.push_back(entry("Z4xZ4xZ2xZ2", 3, S::chain, M::unknown,
                      "0010 0200 2000 0001 0100 1000; 0200 2000 0210 0100 1000 0101; "
                      "2000 0210 2200 1000 0101 1100"));
    v.push_back(entry("Z4xZ4xZ4", 3, S::chain, M::unknown,
                      "002 020 200 001 010 100; 020 200 022 010 100 011; "
                      "200 022 220 100 011 110"));
    v.push_back(entry("Z8xZ2xZ2xZ2", 3, S::computer_search, M::unknown,
                      "4101 2000 1100 0010 7111 0101; 4010 0111 2011 4001 7001 0001; "
                      "4000 7110 5100 0011 5010 2011"));
    v.push_back(entry("Z8xZ4xZ2", 2, S::noncyclic2, M::unknown,
                      "020 400 010 200 001 100; 400 420 200 210 100 101"));
    v.push_back(entry("Z8xZ8", 2, S::noncyclic2, M::unknown,
                      "04 40 02 20 01 10; 40 44 20 22 10 11"));
    v.push_back(entry("Z16xZ2xZ2", 2, S::noncyclic2, M::unknown,
                      "010 800 001 100 200 400; 800 810 401 001 100 200"));
    v.push_back(entry("Z16xZ4", 2, S::noncyclic2, M::unknown,
                      "02 80 01 10 20 40; 80 82 41 01 10 20"));
    v.push_back(entry("Z32xZ2", 2, S::noncyclic2, M::unknown,
                      "01 10 20 40 80 (16)0; (16)1 01 10 20 40 80"));
    v.push_back(entry("Z64", 1, S::trivial, M::proven_cyclic_obstruction, "1 2 4 8 (16) (32)"));
    return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::optional<CatalogEntry> catalog_get(const GroupSpec& g) {
    for (const auto& e : catalog_entries()) {
        if (e.group == g) return e;
    }
    return std::nullopt;
}

CatalogReport catalog_verify_all() {
    CatalogReport report;
    for (const auto& e : catalog_entries()) {
        ++report.total;
        ContractedDifferenceMatrix m = e.matrix;
        const bool rows_match = static_cast<int>(m.row_count()) == e.best_known_k;
        if (rows_match) {
            ++report.k_matches;
        } else {
            report.failures.push_back(e.group.text() + ": row count != recorded k");
        }
        if (check_cdm_fast(m)) {
            ++report.verified_ok;
        } else {
            report.failures.push_back(e.group.text() + ": matrix failed verification");
        }
    }
    report.ok = report.failures.empty();
    return report;
}

const std::vector<ExternalRecord>& external_dm_records() {
    static const std::vector<ExternalRecord> records = {
        {GroupSpec::parse("Z8xZ2"), 5, 1, false},
        {GroupSpec::parse("Z4xZ4"), 8, 1, false},
        {GroupSpec::parse("Z4xZ2xZ2"), 8, 1, true},
    };
    return records;
}

}  // namespace cdm
