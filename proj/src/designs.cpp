#include "cdm/designs.hpp"

#include <algorithm>

#include "packed_group.hpp"

namespace cdm {

std::int64_t int_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (std::int64_t{1} << 62) / base) throw CapacityError("power exceeds 2^62");
        r *= base;
    }
    return r;
}

DifferenceMatrix make_dm(GroupSpec group, std::int64_t lambda, MatrixRows rows) {
    if (lambda < 1) throw StructuralError("difference matrix: lambda must be positive");
    if (rows.empty()) throw StructuralError("difference matrix: at least one row required");
    const std::size_t cols = static_cast<std::size_t>(lambda * group.order());
    for (const auto& row : rows) {
        if (row.size() != cols) {
            throw StructuralError("difference matrix: column count must be lambda*|G|");
        }
        for (const Elem& g : row) group.check_element(g);
    }
    return DifferenceMatrix{std::move(group), lambda, std::move(rows), false};
}

ContractedDifferenceMatrix make_cdm(GroupSpec group, std::int64_t s, MatrixRows rows) {
    if (s < 0) throw StructuralError("contracted matrix: s must be nonnegative");
    if (rows.empty()) throw StructuralError("contracted matrix: at least one row required");
    const std::size_t cols = static_cast<std::size_t>(group.total_exponent() + s);
    for (const auto& row : rows) {
        if (row.size() != cols) {
            throw StructuralError("contracted matrix: column count must be n+s");
        }
        for (const Elem& g : row) group.check_element(g);
    }
    return ContractedDifferenceMatrix{std::move(group), s, std::move(rows), false};
}

DmReport check_dm(const DifferenceMatrix& a, std::int64_t cap) {
    const GroupSpec& g = a.group;
    if (g.order() > cap) throw CapacityError("difference check exceeds cap");
    const std::size_t cols = a.col_count();
    if (cols != static_cast<std::size_t>(a.lambda * g.order())) {
        throw StructuralError("difference matrix: column count must be lambda*|G|");
    }
    const auto pk = detail::build_packed(g, cap);
    std::vector<std::vector<std::int32_t>> idx(a.rows.size(),
                                               std::vector<std::int32_t>(cols));
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            idx[i][j] = static_cast<std::int32_t>(g.index_of(a.rows[i][j]));
        }
    }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        for (std::size_t l = i + 1; l < a.rows.size(); ++l) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t j = 0; j < cols; ++j) {
                ++counts[static_cast<std::size_t>(pk.add(idx[i][j], pk.neg(idx[l][j])))];
            }
            for (std::size_t e = 0; e < counts.size(); ++e) {
                if (counts[e] != a.lambda) {
                    return DmReport{false,
                                    DmWitness{i, l, g.element_at(static_cast<std::int64_t>(e)), counts[e]}};
                }
            }
        }
    }
    return DmReport{true, std::nullopt};
}

DmReport verify_dm(DifferenceMatrix& a, std::int64_t cap) {
    DmReport r = check_dm(a, cap);
    if (r.ok) a.verified = true;
    return r;
}

std::vector<std::vector<Coord>> signed_range_vectors(std::int64_t p, int length) {
    std::vector<std::vector<Coord>> out;
    std::vector<Coord> v(static_cast<std::size_t>(length), -(p - 1));
    for (;;) {
        if (std::any_of(v.begin(), v.end(), [](Coord c) { return c != 0; })) out.push_back(v);
        int i = length - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == p - 1) {
            v[static_cast<std::size_t>(i)] = -(p - 1);
            --i;
        }
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
    }
    return out;
}

CdmReport check_cdm_fast(const ContractedDifferenceMatrix& m, std::int64_t cap) {
    const GroupSpec& g = m.group;
    if (g.order() > cap) throw CapacityError("contracted check exceeds cap");
    const int k = static_cast<int>(m.row_count());
    const int cols = static_cast<int>(m.col_count());
    if (cols != g.total_exponent() + static_cast<int>(m.s)) {
        throw StructuralError("contracted matrix: column count must be n+s");
    }
    const std::int64_t p = g.p();
    const auto a_vectors = signed_range_vectors(p, k);
    const auto pk = detail::build_packed(g, cap);
    // Per-column packed row combination and the step values for the
    // odometer walk over c (last column fastest).
    std::vector<std::vector<std::int32_t>> midx(static_cast<std::size_t>(k),
                                                std::vector<std::int32_t>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < cols; ++j) {
            midx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::int32_t>(
                g.index_of(m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
    }
    std::vector<std::int32_t> v_idx(static_cast<std::size_t>(cols));
    std::vector<std::int32_t> v_back(static_cast<std::size_t>(cols));  // -(p-1) * v_j
    auto load_combination = [&](const std::vector<Coord>& a) {
        for (int j = 0; j < cols; ++j) {
            std::int32_t acc = 0;
            for (int i = 0; i < k; ++i) {
                const Coord c = a[static_cast<std::size_t>(i)];
                if (c == 0) continue;
                acc = pk.add(acc, pk.scal_signed(c, midx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
            v_idx[static_cast<std::size_t>(j)] = acc;
            v_back[static_cast<std::size_t>(j)] = pk.neg(pk.scal(p - 1, acc));
        }
    };
    if (m.s == 0) {
        // a M b^T != 0 for all nonzero b in (-p, p)^n, for a fixed a, is
        // equivalent to c |-> (a.M) c^T being collision-free over Z_p^n:
        // a collision c1 != c2 yields the witness b = c1 - c2 and
        // conversely.  The scan is O(p^n) instead of O((2p-1)^n).
        GroupSpec zc(p, std::vector<int>(static_cast<std::size_t>(cols), 1));
        std::vector<std::int32_t> first_hit(static_cast<std::size_t>(g.order()));
        for (const auto& a : a_vectors) {
            load_combination(a);
            std::fill(first_hit.begin(), first_hit.end(), 0);
            std::vector<Coord> c(static_cast<std::size_t>(cols), 0);
            std::int32_t acc = 0;
            for (std::int64_t ci = 0;; ++ci) {
                auto& slot = first_hit[static_cast<std::size_t>(acc)];
                if (slot != 0) {
                    const Elem c1 = zc.element_at(slot - 1);
                    std::vector<Coord> b(static_cast<std::size_t>(cols));
                    for (int j = 0; j < cols; ++j) {
                        b[static_cast<std::size_t>(j)] = c1[static_cast<std::size_t>(j)] - c[static_cast<std::size_t>(j)];
                    }
                    return CdmReport{false, CdmWitness{a, b, std::nullopt, std::nullopt}};
                }
                slot = static_cast<std::int32_t>(ci + 1);
                if (ci + 1 == g.order()) break;
                int j = cols - 1;
                while (c[static_cast<std::size_t>(j)] == p - 1) {
                    acc = pk.add(acc, v_back[static_cast<std::size_t>(j)]);
                    c[static_cast<std::size_t>(j)] = 0;
                    --j;
                }
                ++c[static_cast<std::size_t>(j)];
                acc = pk.add(acc, v_idx[static_cast<std::size_t>(j)]);
            }
        }
        return CdmReport{true, std::nullopt};
    }
    // s > 0: each nonzero a-combination must cover G exactly p^s times
    // over all c in Z_p^{n+s}.
    const std::int64_t want = int_pow(p, static_cast<int>(m.s));
    const std::int64_t ncombos = int_pow(p, cols);
    if (ncombos > cap) throw CapacityError("contracted check exceeds cap");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.order()));
    for (const auto& a : a_vectors) {
        load_combination(a);
        std::fill(counts.begin(), counts.end(), 0);
        std::vector<Coord> c(static_cast<std::size_t>(cols), 0);
        std::int32_t acc = 0;
        for (std::int64_t it = 0;; ++it) {
            ++counts[static_cast<std::size_t>(acc)];
            if (it + 1 == ncombos) break;
            int j = cols - 1;
            while (c[static_cast<std::size_t>(j)] == p - 1) {
                acc = pk.add(acc, v_back[static_cast<std::size_t>(j)]);
                c[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            ++c[static_cast<std::size_t>(j)];
            acc = pk.add(acc, v_idx[static_cast<std::size_t>(j)]);
        }
        for (std::size_t e = 0; e < counts.size(); ++e) {
            if (counts[e] != want) {
                return CdmReport{false, CdmWitness{a, std::nullopt,
                                                   g.element_at(static_cast<std::int64_t>(e)), counts[e]}};
            }
        }
    }
    return CdmReport{true, std::nullopt};
}

CdmReport verify_cdm_fast(ContractedDifferenceMatrix& m, std::int64_t cap) {
    CdmReport r = check_cdm_fast(m, cap);
    if (r.ok) m.verified = true;
    return r;
}

DifferenceMatrix p_expand(const ContractedDifferenceMatrix& m, std::int64_t cap) {
    const GroupSpec& g = m.group;
    const std::int64_t p = g.p();
    const int k = static_cast<int>(m.row_count());
    const int cols = static_cast<int>(m.col_count());
    const std::int64_t prows = int_pow(p, k);
    const std::int64_t pcols = int_pow(p, cols);
    if (prows > cap || pcols > cap) throw CapacityError("expansion exceeds cap");

    GroupSpec zk(p, std::vector<int>(static_cast<std::size_t>(k), 1));
    GroupSpec zc(p, std::vector<int>(static_cast<std::size_t>(cols), 1));
    MatrixRows rows;
    rows.reserve(static_cast<std::size_t>(prows));
    for (std::int64_t ri = 0; ri < prows; ++ri) {
        const Elem r = zk.element_at(ri);
        // v = r . M.
        std::vector<Elem> v(static_cast<std::size_t>(cols), g.zero());
        for (int i = 0; i < k; ++i) {
            if (r[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < cols; ++j) {
                v[static_cast<std::size_t>(j)] =
                    g.add(v[static_cast<std::size_t>(j)],
                          g.scalar_mul(r[static_cast<std::size_t>(i)], m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
        }
        std::vector<Elem> row;
        row.reserve(static_cast<std::size_t>(pcols));
        for (std::int64_t ci = 0; ci < pcols; ++ci) {
            const Elem c = zc.element_at(ci);
            Elem acc = g.zero();
            for (int j = 0; j < cols; ++j) {
                if (c[static_cast<std::size_t>(j)] == 0) continue;
                acc = g.add(acc, g.scalar_mul(c[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j)]));
            }
            row.push_back(std::move(acc));
        }
        rows.push_back(std::move(row));
    }
    return make_dm(g, int_pow(p, static_cast<int>(m.s)), std::move(rows));
}

DmReport check_cdm_full(const ContractedDifferenceMatrix& m, std::int64_t cap) {
    DifferenceMatrix expanded = p_expand(m, cap);
    return check_dm(expanded, cap);
}

DmReport verify_cdm_full(ContractedDifferenceMatrix& m, std::int64_t cap) {
    DmReport r = check_cdm_full(m, cap);
    if (r.ok) m.verified = true;
    return r;
}

DifferenceMatrix normalize_dm(const DifferenceMatrix& a) {
    if (!a.verified) throw VerificationError("normalize_dm requires a verified matrix");
    const GroupSpec& g = a.group;
    MatrixRows rows = a.rows;
    const std::size_t cols = a.col_count();
    for (std::size_t j = 0; j < cols; ++j) {
        const Elem t = rows[0][j];
        for (auto& row : rows) row[j] = g.sub(row[j], t);
    }
    for (auto& row : rows) {
        const Elem t = row[0];
        for (Elem& e : row) e = g.sub(e, t);
    }
    DifferenceMatrix out = make_dm(g, a.lambda, std::move(rows));
    out.verified = true;  // translation preserves the difference property
    return out;
}

DifferenceMatrix trivial_dm(const GroupSpec& g, std::int64_t lambda, std::int64_t cap) {
    if (lambda < 1) throw StructuralError("trivial_dm: lambda must be positive");
    if (g.trivial()) throw StructuralError("trivial_dm: group must be nontrivial");
    const auto elems = enumerate_elements(g, cap);
    std::vector<Elem> row0(static_cast<std::size_t>(lambda) * elems.size(), g.zero());
    std::vector<Elem> row1;
    row1.reserve(row0.size());
    for (std::int64_t t = 0; t < lambda; ++t) {
        row1.insert(row1.end(), elems.begin(), elems.end());
    }
    return make_dm(g, lambda, MatrixRows{std::move(row0), std::move(row1)});
}

ContractedDifferenceMatrix trivial_cdm(const GroupSpec& g, std::int64_t s) {
    if (s < 0) throw StructuralError("trivial_cdm: s must be nonnegative");
    if (g.trivial()) throw StructuralError("trivial_cdm: group must be nontrivial");
    std::vector<Elem> row;
    for (int i = 0; i < g.rank(); ++i) {
        std::int64_t v = 1;
        for (int t = 0; t < g.exponents()[static_cast<std::size_t>(i)]; ++t) {
            Elem e = g.zero();
            e[static_cast<std::size_t>(i)] = v;
            row.push_back(std::move(e));
            v *= g.p();
        }
    }
    for (std::int64_t t = 0; t < s; ++t) row.push_back(g.zero());
    return make_cdm(g, s, MatrixRows{std::move(row)});
}

namespace {

MatrixRows keep_rows(const MatrixRows& rows, const std::vector<std::size_t>& drop) {
    MatrixRows out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(rows[i]);
    }
    if (out.empty()) throw StructuralError("delete_rows: at least one row must remain");
    return out;
}

}  // namespace

DifferenceMatrix delete_rows(const DifferenceMatrix& a, const std::vector<std::size_t>& indices) {
    DifferenceMatrix out = make_dm(a.group, a.lambda, keep_rows(a.rows, indices));
    out.verified = a.verified;  // subsets of rows keep the property
    return out;
}

ContractedDifferenceMatrix delete_rows(const ContractedDifferenceMatrix& m,
                                       const std::vector<std::size_t>& indices) {
    ContractedDifferenceMatrix out = make_cdm(m.group, m.s, keep_rows(m.rows, indices));
    out.verified = m.verified;
    return out;
}

std::int64_t max_rows_bound(const GroupSpec& g, std::int64_t lambda) {
    return lambda * g.order();
}

bool sylow2_obstruction(const GroupSpec& g, std::int64_t lambda) {
    if (lambda % 2 == 0) return false;
    return g.p() == 2 && g.rank() == 1 && !g.trivial();
}

bool elem_ab_dm_feasible(std::int64_t p, int n, std::int64_t s, std::int64_t m) {
    return m <= int_pow(p, n + static_cast<int>(s));
}

bool elem_ab_cdm_feasible(std::int64_t p, int n, std::int64_t s, std::int64_t k) {
    (void)p;
    return k <= n + s;
}

}  // namespace cdm
