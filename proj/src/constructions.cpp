#include "cdm/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace cdm {

DifferenceMatrix drake_dm(std::int64_t p, int n, std::int64_t cap) {
    FieldSpec f = find_primitive_poly(p, n, cap);
    const std::int64_t q = int_pow(p, n);
    if (q > cap) throw CapacityError("field table exceeds cap");
    // Elements in table order: 0, 1, x, x^2, ..., x^{q-2}.
    std::vector<FieldElem> elems;
    elems.reserve(static_cast<std::size_t>(q));
    elems.push_back(ff_zero(f));
    FieldElem cur = ff_one(f);
    for (std::int64_t t = 0; t + 1 < q; ++t) {
        elems.push_back(cur);
        cur = ff_mul(f, cur, ff_x(f));
    }
    GroupSpec g(p, std::vector<int>(static_cast<std::size_t>(n), 1));
    MatrixRows rows(static_cast<std::size_t>(q));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        rows[i].reserve(elems.size());
        for (std::size_t j = 0; j < elems.size(); ++j) {
            rows[i].push_back(additive_coords(f, ff_mul(f, elems[i], elems[j])));
        }
    }
    return make_dm(std::move(g), 1, std::move(rows));
}

ContractedDifferenceMatrix contracted_field_cdm(std::int64_t p, int n, std::int64_t cap) {
    FieldSpec f = find_primitive_poly(p, n, cap);
    GroupSpec g(p, std::vector<int>(static_cast<std::size_t>(n), 1));
    MatrixRows rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            rows[static_cast<std::size_t>(i)].push_back(
                additive_coords(f, ff_pow(f, ff_x(f), i + j)));
        }
    }
    return make_cdm(std::move(g), 0, std::move(rows));
}

DifferenceMatrix hom_image_dm(const DifferenceMatrix& a, const Homomorphism& phi) {
    if (!a.verified) throw VerificationError("hom_image_dm requires a verified matrix");
    if (phi.source() != a.group) throw StructuralError("hom_image_dm: source group mismatch");
    if (!phi.surjective()) throw StructuralError("hom_image_dm: homomorphism is not surjective");
    const std::int64_t lambda = a.lambda * phi.kernel_size();
    MatrixRows rows(a.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        rows[i].reserve(a.rows[i].size());
        for (const Elem& e : a.rows[i]) rows[i].push_back(phi.apply(e));
    }
    return make_dm(phi.target(), lambda, std::move(rows));
}

ContractedDifferenceMatrix hom_image_cdm(const ContractedDifferenceMatrix& m,
                                         const Homomorphism& phi) {
    if (!m.verified) throw VerificationError("hom_image_cdm requires a verified matrix");
    if (phi.source() != m.group) throw StructuralError("hom_image_cdm: source group mismatch");
    if (!phi.surjective()) throw StructuralError("hom_image_cdm: homomorphism is not surjective");
    std::int64_t ker = phi.kernel_size();
    int u = 0;
    while (ker > 1) {
        ker /= phi.source().p();
        ++u;
    }
    MatrixRows rows(m.rows.size());
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        rows[i].reserve(m.rows[i].size());
        for (const Elem& e : m.rows[i]) rows[i].push_back(phi.apply(e));
    }
    return make_cdm(phi.target(), m.s + u, std::move(rows));
}

DifferenceMatrix kronecker_compose_dm(const DiagonalSubgroup& sub,
                                      const DifferenceMatrix& a_over_sub,
                                      const DifferenceMatrix& b_over_quot) {
    if (!a_over_sub.verified || !b_over_quot.verified) {
        throw VerificationError("kronecker_compose_dm requires verified inputs");
    }
    if (a_over_sub.group != sub.subgroup() || b_over_quot.group != sub.quotient()) {
        throw StructuralError("kronecker_compose_dm: matrices must live on the subgroup and quotient");
    }
    if (a_over_sub.row_count() != b_over_quot.row_count()) {
        throw StructuralError("kronecker_compose_dm: row counts differ");
    }
    const GroupSpec& host = sub.host();
    MatrixRows rows(a_over_sub.row_count());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].reserve(a_over_sub.col_count() * b_over_quot.col_count());
        for (const Elem& ae : a_over_sub.rows[i]) {
            const Elem h = sub.embed(ae);
            for (const Elem& be : b_over_quot.rows[i]) {
                rows[i].push_back(host.add(h, sub.coset_rep(be)));
            }
        }
    }
    return make_dm(host, a_over_sub.lambda * b_over_quot.lambda, std::move(rows));
}

ContractedDifferenceMatrix concat_compose_cdm(const DiagonalSubgroup& sub,
                                              const ContractedDifferenceMatrix& l_over_sub,
                                              const ContractedDifferenceMatrix& m_over_quot) {
    if (!l_over_sub.verified || !m_over_quot.verified) {
        throw VerificationError("concat_compose_cdm requires verified inputs");
    }
    if (l_over_sub.group != sub.subgroup() || m_over_quot.group != sub.quotient()) {
        throw StructuralError("concat_compose_cdm: matrices must live on the subgroup and quotient");
    }
    if (l_over_sub.row_count() != m_over_quot.row_count()) {
        throw StructuralError("concat_compose_cdm: row counts differ");
    }
    MatrixRows rows(l_over_sub.row_count());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].reserve(l_over_sub.col_count() + m_over_quot.col_count());
        for (const Elem& e : l_over_sub.rows[i]) rows[i].push_back(sub.embed(e));
        for (const Elem& e : m_over_quot.rows[i]) rows[i].push_back(sub.coset_rep(e));
    }
    return make_cdm(sub.host(), l_over_sub.s + m_over_quot.s, std::move(rows));
}

DifferenceMatrix sum_compose_dm(const DifferenceMatrix& a, const DifferenceMatrix& b,
                                std::int64_t cap) {
    if (!a.verified || !b.verified) {
        throw VerificationError("sum_compose_dm requires verified inputs");
    }
    if (a.group != b.group) throw StructuralError("sum_compose_dm: group mismatch");
    if (a.row_count() != b.row_count()) throw StructuralError("sum_compose_dm: row counts differ");
    MatrixRows rows(a.row_count());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i] = a.rows[i];
        rows[i].insert(rows[i].end(), b.rows[i].begin(), b.rows[i].end());
    }
    DifferenceMatrix out = make_dm(a.group, a.lambda + b.lambda, std::move(rows));
    if (!verify_dm(out, cap)) {
        throw VerificationError("sum_compose_dm: output failed verification");
    }
    return out;
}

DifferenceMatrix product_compose_dm(const DifferenceMatrix& a, const DifferenceMatrix& b,
                                    std::int64_t cap) {
    if (!a.verified || !b.verified) {
        throw VerificationError("product_compose_dm requires verified inputs");
    }
    if (a.group != b.group) throw StructuralError("product_compose_dm: group mismatch");
    const GroupSpec& g = a.group;
    MatrixRows rows;
    rows.reserve(a.row_count() * b.row_count());
    for (std::size_t i = 0; i < a.row_count(); ++i) {
        for (std::size_t i2 = 0; i2 < b.row_count(); ++i2) {
            std::vector<Elem> row;
            row.reserve(a.col_count() * b.col_count());
            for (std::size_t j = 0; j < a.col_count(); ++j) {
                for (std::size_t j2 = 0; j2 < b.col_count(); ++j2) {
                    row.push_back(g.add(a.rows[i][j], b.rows[i2][j2]));
                }
            }
            rows.push_back(std::move(row));
        }
    }
    DifferenceMatrix out = make_dm(g, a.lambda * b.lambda * g.order(), std::move(rows));
    if (!verify_dm(out, cap)) {
        throw VerificationError("product_compose_dm: output failed verification");
    }
    return out;
}

ChainPlan buratti_chain(const GroupSpec& g) {
    if (g.trivial()) throw StructuralError("buratti_chain: group must be nontrivial");
    ChainPlan plan;
    plan.group = g;
    plan.k = g.total_exponent() / g.exponent();
    std::vector<int> remaining = g.exponents();
    std::vector<int> cof(remaining.size(), 0);
    auto elementary = [&] {
        return std::all_of(remaining.begin(), remaining.end(), [](int a) { return a <= 1; });
    };
    while (!elementary()) {
        // The floor(n/e) largest current factors, earliest position on ties.
        std::vector<int> pos(remaining.size());
        for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = static_cast<int>(i);
        std::stable_sort(pos.begin(), pos.end(), [&](int x, int y) {
            return remaining[static_cast<std::size_t>(x)] > remaining[static_cast<std::size_t>(y)];
        });
        std::vector<int> reduced(pos.begin(), pos.begin() + plan.k);
        std::sort(reduced.begin(), reduced.end());
        if (remaining[static_cast<std::size_t>(reduced.back())] < 1) {
            throw StructuralError("buratti_chain: ran out of factors");  // cannot happen
        }
        ChainStep step;
        step.cofactors_before = cof;
        step.reduced_positions = reduced;
        step.quotient = GroupSpec(g.p(), std::vector<int>(reduced.size(), 1));
        plan.steps.push_back(std::move(step));
        for (int i : reduced) {
            --remaining[static_cast<std::size_t>(i)];
            ++cof[static_cast<std::size_t>(i)];
        }
    }
    plan.terminal_cofactors = cof;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (remaining[i] == 1) plan.terminal_positions.push_back(static_cast<int>(i));
    }
    plan.terminal = GroupSpec(g.p(), std::vector<int>(plan.terminal_positions.size(), 1));
    return plan;
}

namespace {

std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Places the coordinates of an elementary-layer element at the given host
// positions, scaled by p^{cofactor}.
Elem place_at(const GroupSpec& host, const std::vector<int>& positions,
              const std::vector<int>& cof, const Elem& coords) {
    Elem h = host.zero();
    for (std::size_t j = 0; j < positions.size(); ++j) {
        int i = positions[j];
        h[static_cast<std::size_t>(i)] =
            coords[j] * pow_i64(host.p(), cof[static_cast<std::size_t>(i)]);
    }
    return host.reduce(std::move(h));
}

}  // namespace

ContractedDifferenceMatrix chain_cdm(const GroupSpec& g) {
    ChainPlan plan = buratti_chain(g);
    const int k = plan.k;
    const int ell = plan.terminal.total_exponent();

    // Terminal base case: first k rows of the ell x ell field table,
    // embedded through the accumulated cofactors.
    ContractedDifferenceMatrix base = contracted_field_cdm(g.p(), ell);
    MatrixRows rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (const Elem& e : base.rows[static_cast<std::size_t>(i)]) {
            rows[static_cast<std::size_t>(i)].push_back(
                place_at(g, plan.terminal_positions, plan.terminal_cofactors, e));
        }
    }
    // Quotient layers, innermost first.
    ContractedDifferenceMatrix layer = contracted_field_cdm(g.p(), k);
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
        for (int i = 0; i < k; ++i) {
            for (const Elem& e : layer.rows[static_cast<std::size_t>(i)]) {
                rows[static_cast<std::size_t>(i)].push_back(
                    place_at(g, it->reduced_positions, it->cofactors_before, e));
            }
        }
    }
    ContractedDifferenceMatrix out = make_cdm(g, 0, std::move(rows));
    if (!verify_cdm_fast(out)) {
        throw VerificationError("chain_cdm: output failed verification");
    }
    return out;
}

DifferenceMatrix chain_dm(const GroupSpec& g, std::int64_t cap) {
    return p_expand(chain_cdm(g), cap);
}

DifferenceMatrix pan_chang_dm(int e) {
    if (e < 1) throw StructuralError("pan_chang_dm: e must be positive");
    if (e == 1) return drake_dm(2, 2);  // Z_2 x Z_2; index sets degenerate at e = 1
    GroupSpec g(2, {e, 1});
    const std::int64_t half = std::int64_t{1} << (e - 1);      // 2^{e-1}
    const std::int64_t quarter = std::int64_t{1} << (e - 2);   // 2^{e-2}
    auto in_i1 = [&](std::int64_t i) { return i < quarter; };
    auto in_i1_star = [&](std::int64_t i) {
        return (i < quarter && i != quarter - 1) || i == half - 1;
    };
    MatrixRows rows(4);
    auto push_col = [&](std::int64_t u0, std::int64_t v0, std::int64_t u1, std::int64_t v1,
                        std::int64_t u2, std::int64_t v2, std::int64_t u3, std::int64_t v3) {
        rows[0].push_back(g.reduce({u0, v0}));
        rows[1].push_back(g.reduce({u1, v1}));
        rows[2].push_back(g.reduce({u2, v2}));
        rows[3].push_back(g.reduce({u3, v3}));
    };
    for (int r = 0; r < 4; ++r) {
        for (std::int64_t i = 0; i < half; ++i) {
            const bool first = (r == 3) ? in_i1_star(i) : in_i1(i);
            switch (r) {
                case 0:
                    if (first) push_col(0, 0, 2 * i, 0, 4 * i, 0, -2 * i, 0);
                    else       push_col(0, 0, 2 * i, 0, 4 * i, 1, -2 * i, 1);
                    break;
                case 1:
                    if (first) push_col(0, 0, 2 * i, 1, 4 * i + 1, 0, -2 * i - 1, 1);
                    else       push_col(0, 0, 2 * i, 1, 4 * i + 1, 1, -2 * i - 1, 0);
                    break;
                case 2:
                    if (first) push_col(0, 0, 2 * i + 1, 0, 4 * i + 2, 0, -2 * i - 1, 0);
                    else       push_col(0, 0, 2 * i + 1, 0, 4 * i + 2, 1, -2 * i - 1, 1);
                    break;
                default:
                    if (first) push_col(0, 0, 2 * i + 1, 1, 4 * i + 3, 0, -2 * i - 2, 1);
                    else       push_col(0, 0, 2 * i + 1, 1, 4 * i + 3, 1, -2 * i - 2, 0);
                    break;
            }
        }
    }
    return make_dm(std::move(g), 1, std::move(rows));
}

ContractedDifferenceMatrix pan_chang_cdm(int e) {
    if (e < 1) throw StructuralError("pan_chang_cdm: e must be positive");
    GroupSpec g(2, {e, 1});
    std::vector<Elem> row0, row1;
    row0.push_back({0, 1});
    for (int j = 0; j < e; ++j) row0.push_back({std::int64_t{1} << j, 0});
    row1.push_back(g.reduce({std::int64_t{1} << (e - 1), 1}));
    row1.push_back({0, 1});
    for (int j = 0; j + 1 < e; ++j) row1.push_back({std::int64_t{1} << j, 0});
    return make_cdm(std::move(g), 0, MatrixRows{std::move(row0), std::move(row1)});
}

ContractedDifferenceMatrix noncyclic2_cdm(const GroupSpec& g) {
    if (g.p() != 2 || g.rank() < 2) {
        throw StructuralError("noncyclic2_cdm: needs an abelian noncyclic 2-group");
    }
    if (g.elementary()) {
        ContractedDifferenceMatrix base = contracted_field_cdm(2, g.total_exponent());
        std::vector<std::size_t> drop;
        for (std::size_t i = 2; i < base.row_count(); ++i) drop.push_back(i);
        ContractedDifferenceMatrix out = drop.empty() ? std::move(base) : delete_rows(base, drop);
        if (!verify_cdm_fast(out)) throw VerificationError("noncyclic2_cdm: base failed verification");
        return out;
    }
    if (g.rank() == 2 && g.exponents()[1] == 1) {
        ContractedDifferenceMatrix out = pan_chang_cdm(g.exponents()[0]);
        if (!verify_cdm_fast(out)) throw VerificationError("noncyclic2_cdm: base failed verification");
        return out;
    }
    // Peel a Z_2^2 quotient off the two largest factors and recurse.
    std::vector<int> cof(static_cast<std::size_t>(g.rank()), 0);
    cof[0] = cof[1] = 1;
    DiagonalSubgroup sub(g, std::move(cof));
    ContractedDifferenceMatrix inner = noncyclic2_cdm(sub.subgroup());
    ContractedDifferenceMatrix quot = contracted_field_cdm(2, 2);
    verify_cdm_fast(quot);
    ContractedDifferenceMatrix out = concat_compose_cdm(sub, inner, quot);
    if (!verify_cdm_fast(out)) throw VerificationError("noncyclic2_cdm: output failed verification");
    return out;
}

const std::vector<ContractedDifferenceMatrix>& searched_three_row_cdms() {
    static const std::vector<ContractedDifferenceMatrix> matrices = [] {
        std::vector<ContractedDifferenceMatrix> v;
        v.push_back(make_cdm(GroupSpec(2, {2, 1, 1}), 0,
                             MatrixRows{{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {2, 0, 0}},
                                        {{0, 1, 0}, {2, 0, 1}, {0, 0, 1}, {1, 0, 0}},
                                        {{2, 1, 1}, {1, 0, 0}, {2, 0, 1}, {2, 1, 0}}}));
        v.push_back(make_cdm(GroupSpec(2, {2, 2, 1}), 0,
                             MatrixRows{{{0, 0, 1}, {0, 1, 0}, {0, 2, 0}, {1, 0, 0}, {2, 0, 0}},
                                        {{0, 2, 1}, {0, 0, 1}, {2, 1, 1}, {0, 1, 0}, {1, 0, 0}},
                                        {{2, 2, 0}, {1, 0, 1}, {2, 0, 0}, {2, 1, 0}, {3, 2, 0}}}));
        v.push_back(make_cdm(GroupSpec(2, {2, 1, 1, 1}), 0,
                             MatrixRows{{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}},
                                        {{0, 0, 1, 0}, {0, 1, 0, 0}, {2, 0, 0, 1}, {0, 0, 0, 1}, {1, 0, 0, 0}},
                                        {{1, 0, 0, 1}, {2, 1, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 1}}}));
        v.push_back(make_cdm(GroupSpec(2, {3, 1, 1, 1}), 0,
                             MatrixRows{{{4, 1, 0, 1}, {2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {7, 1, 1, 1}, {0, 1, 0, 1}},
                                        {{4, 0, 1, 0}, {0, 1, 1, 1}, {2, 0, 1, 1}, {4, 0, 0, 1}, {7, 0, 0, 1}, {0, 0, 0, 1}},
                                        {{4, 0, 0, 0}, {7, 1, 1, 0}, {5, 1, 0, 0}, {0, 0, 1, 1}, {5, 0, 1, 0}, {2, 0, 1, 1}}}));
        return v;
    }();
    return matrices;
}

namespace {

// Candidate cofactor vectors whose quotient is isomorphic to `quot`.
std::vector<std::vector<int>> quotient_cofactor_choices(const GroupSpec& host,
                                                        const GroupSpec& quot) {
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;
    const auto& qexp = quot.exponents();
    std::vector<int> b(static_cast<std::size_t>(host.rank()), 0);
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == qexp.size()) {
            if (seen.insert(b).second) out.push_back(b);
            return;
        }
        for (int i = 0; i < host.rank(); ++i) {
            if (b[static_cast<std::size_t>(i)] != 0) continue;
            if (host.exponents()[static_cast<std::size_t>(i)] < qexp[t]) continue;
            b[static_cast<std::size_t>(i)] = qexp[t];
            self(self, t + 1);
            b[static_cast<std::size_t>(i)] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

class BestKnownSearch {
public:
    explicit BestKnownSearch(std::int64_t p) : p_(p) {
        if (p == 2) {
            // Quotient base preference after the elementary tables:
            // the searched groups, largest order first.
            for (const auto& m : searched_three_row_cdms()) searched_.push_back(m.group);
            std::stable_sort(searched_.begin(), searched_.end(),
                             [](const GroupSpec& a, const GroupSpec& b) {
                                 if (a.order() != b.order()) return a.order() > b.order();
                                 return a.rank() < b.rank();
                             });
        }
    }

    std::optional<ContractedDifferenceMatrix> run(const GroupSpec& g, int k) {
        if (k < 1) throw StructuralError("best_known_cdm: k must be positive");
        if (g.trivial()) return std::nullopt;
        const std::string key = g.text() + "#" + std::to_string(k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        auto result = build(g, k);
        memo_.emplace(key, result);
        return result;
    }

private:
    std::optional<ContractedDifferenceMatrix> base_matrix(const GroupSpec& g, int k) {
        if (k > g.total_exponent()) return std::nullopt;
        if (k == 1) {
            ContractedDifferenceMatrix t = trivial_cdm(g, 0);
            verify_cdm_fast(t);
            return t;
        }
        if (g.elementary()) {
            ContractedDifferenceMatrix m = contracted_field_cdm(p_, g.total_exponent());
            std::vector<std::size_t> drop;
            for (std::size_t i = static_cast<std::size_t>(k); i < m.row_count(); ++i) drop.push_back(i);
            if (!drop.empty()) m = delete_rows(m, drop);
            verify_cdm_fast(m);
            return m;
        }
        if (p_ == 2 && k <= 3) {
            for (const auto& lit : searched_three_row_cdms()) {
                if (lit.group == g) {
                    ContractedDifferenceMatrix m = lit;
                    std::vector<std::size_t> drop;
                    for (std::size_t i = static_cast<std::size_t>(k); i < m.row_count(); ++i) drop.push_back(i);
                    if (!drop.empty()) m = delete_rows(m, drop);
                    verify_cdm_fast(m);
                    return m;
                }
            }
        }
        if (p_ == 2 && k == 2 && g.rank() >= 2) return noncyclic2_cdm(g);
        return std::nullopt;
    }

    std::optional<ContractedDifferenceMatrix> build(const GroupSpec& g, int k) {
        if (k > g.total_exponent()) return std::nullopt;
        if (auto direct = base_matrix(g, k)) return direct;
        if (!g.trivial() && k <= g.total_exponent() / g.exponent()) {
            ContractedDifferenceMatrix m = chain_cdm(g);
            std::vector<std::size_t> drop;
            for (std::size_t i = static_cast<std::size_t>(k); i < m.row_count(); ++i) drop.push_back(i);
            if (!drop.empty()) m = delete_rows(m, drop);
            return m;
        }
        // Peel a base-case quotient and recurse on the subgroup.
        std::vector<GroupSpec> candidates;
        for (int r = k; r <= g.rank(); ++r) {
            candidates.emplace_back(p_, std::vector<int>(static_cast<std::size_t>(r), 1));
        }
        if (p_ == 2 && k <= 3) {
            for (const auto& s : searched_)
                if (s.rank() <= g.rank()) candidates.push_back(s);
        }
        for (const GroupSpec& q : candidates) {
            if (q.total_exponent() >= g.total_exponent()) continue;
            for (auto& b : quotient_cofactor_choices(g, q)) {
                DiagonalSubgroup sub(g, b);
                if (sub.quotient() != q) continue;
                auto inner = run(sub.subgroup(), k);
                if (!inner) continue;
                auto quot_base = base_matrix(q, k);
                if (!quot_base) continue;
                ContractedDifferenceMatrix out = concat_compose_cdm(sub, *inner, *quot_base);
                if (!verify_cdm_fast(out)) {
                    throw VerificationError("best_known_cdm: composed output failed verification");
                }
                return out;
            }
        }
        return std::nullopt;
    }

    std::int64_t p_;
    std::vector<GroupSpec> searched_;
    std::map<std::string, std::optional<ContractedDifferenceMatrix>> memo_;
};

}  // namespace

std::optional<ContractedDifferenceMatrix> best_known_cdm(const GroupSpec& g, int k) {
    BestKnownSearch search(g.p());
    return search.run(g, k);
}

int best_known_max_k(const GroupSpec& g) {
    if (g.trivial()) return 0;
    BestKnownSearch search(g.p());
    for (int k = g.total_exponent(); k >= 1; --k) {
        if (search.run(g, k)) return k;
    }
    return 0;
}

}  // namespace cdm
