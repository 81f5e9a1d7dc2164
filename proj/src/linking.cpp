#include "cdm/linking.hpp"

#include <algorithm>
#include <map>

namespace cdm {

DsParams hadamard_params(int d) {
    if (d < 1) throw StructuralError("hadamard_params: d must be positive");
    const std::int64_t pd = std::int64_t{1} << d;
    return DsParams{4 * pd * pd, pd * (2 * pd - 1), pd * (pd - 1), pd * pd};
}

DifferenceSet make_difference_set(GroupSpec group, std::vector<Elem> elements, DsParams params) {
    for (const Elem& e : elements) group.check_element(e);
    std::sort(elements.begin(), elements.end(), [&](const Elem& a, const Elem& b) {
        return group.index_of(a) < group.index_of(b);
    });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (static_cast<std::int64_t>(elements.size()) != params.k) {
        throw StructuralError("difference set: element count mismatch with k");
    }
    if (group.order() != params.v) throw StructuralError("difference set: |G| mismatch with v");
    if (params.n != params.k - params.lambda) {
        throw StructuralError("difference set: n must equal k - lambda");
    }
    return DifferenceSet{std::move(group), std::move(elements), params, false};
}

namespace {

// Dense autocorrelation of a set: coefficient of g counts ordered pairs
// (d1, d2) with d1 - d2 = g.
std::vector<std::int64_t> autocorrelation(const GroupSpec& g, const std::vector<Elem>& elems) {
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(g.order()), 0);
    for (const Elem& a : elems) {
        for (const Elem& b : elems) {
            ++coeff[static_cast<std::size_t>(g.index_of(g.sub(a, b)))];
        }
    }
    return coeff;
}

}  // namespace

DsReport check_difference_set(const DifferenceSet& d, std::int64_t cap) {
    const GroupSpec& g = d.group;
    if (g.order() > cap) throw CapacityError("difference-set check exceeds cap");
    const auto coeff = autocorrelation(g, d.elements);
    if (coeff[0] != d.params.k) {
        return DsReport{false, g.zero(), coeff[0]};
    }
    for (std::int64_t i = 1; i < g.order(); ++i) {
        if (coeff[static_cast<std::size_t>(i)] != d.params.lambda) {
            return DsReport{false, g.element_at(i), coeff[static_cast<std::size_t>(i)]};
        }
    }
    return DsReport{true, std::nullopt, 0};
}

DsReport verify_difference_set(DifferenceSet& d, std::int64_t cap) {
    DsReport r = check_difference_set(d, cap);
    if (r.ok) d.verified = true;
    return r;
}

std::vector<std::vector<Elem>> hyperplane_subgroups(const DiagonalSubgroup& e) {
    const GroupSpec& sub = e.subgroup();
    if (sub.p() != 2 || !sub.elementary() || sub.trivial()) {
        throw StructuralError("hyperplane_subgroups: E must be elementary abelian of rank >= 1");
    }
    const int d1 = sub.rank();  // d + 1
    const GroupSpec& host = e.host();
    std::vector<std::vector<Elem>> out;
    const auto points = enumerate_elements(sub);
    for (std::int64_t f = 1; f < (std::int64_t{1} << d1); ++f) {
        const Elem phi = sub.element_at(f);  // functional coefficients, lexicographic order
        std::vector<Elem> kernel;
        for (const Elem& x : points) {
            std::int64_t dot = 0;
            for (int t = 0; t < d1; ++t) dot += phi[static_cast<std::size_t>(t)] * x[static_cast<std::size_t>(t)];
            if (dot % 2 == 0) kernel.push_back(e.embed(x));
        }
        std::sort(kernel.begin(), kernel.end(), [&](const Elem& a, const Elem& b) {
            return host.index_of(a) < host.index_of(b);
        });
        out.push_back(std::move(kernel));
    }
    return out;
}

LinkingSystem build_linking_system(const DiagonalSubgroup& e, const DifferenceMatrix& dm,
                                   const std::optional<std::vector<std::vector<Elem>>>& e_choices) {
    const GroupSpec& host = e.host();
    const GroupSpec& sub = e.subgroup();
    if (host.p() != 2) throw StructuralError("linking construction: host must be a 2-group");
    if (host.total_exponent() % 2 != 0) {
        throw StructuralError("linking construction: |G| must be 2^{2d+2}");
    }
    const int d = host.total_exponent() / 2 - 1;
    if (d < 1) throw StructuralError("linking construction: |G| must be at least 16");
    if (!sub.elementary() || sub.rank() != d + 1) {
        throw StructuralError("linking construction: E must be isomorphic to Z_2^{d+1}");
    }
    if (!dm.verified) throw VerificationError("linking construction requires a verified matrix");
    if (dm.group != e.quotient()) {
        throw StructuralError("linking construction: matrix must live on G/E");
    }
    if (dm.lambda != 1) throw StructuralError("linking construction: matrix must have lambda = 1");
    const std::size_t m = dm.row_count();
    if (m < 3) throw StructuralError("linking construction: need at least 3 rows");
    const std::size_t s = (std::size_t{1} << (d + 1)) - 1;
    if (dm.col_count() != s + 1) {
        throw StructuralError("linking construction: column count must be |G/E|");
    }

    // The construction quotes the normalized form; normalize if needed.
    DifferenceMatrix normalized = dm;
    bool is_normalized = true;
    for (std::size_t j = 0; j < dm.col_count() && is_normalized; ++j) {
        is_normalized = dm.group.is_zero(dm.rows[0][j]);
    }
    for (std::size_t i = 0; i < m && is_normalized; ++i) {
        is_normalized = dm.group.is_zero(dm.rows[i][0]);
    }
    if (!is_normalized) normalized = normalize_dm(dm);

    std::vector<std::vector<Elem>> shifts;
    if (e_choices) {
        shifts = *e_choices;
        if (shifts.size() != m - 1) {
            throw StructuralError("linking construction: shift matrix needs m-1 rows");
        }
        for (auto& row : shifts) {
            if (row.size() != s) {
                throw StructuralError("linking construction: shift matrix needs 2^{d+1}-1 columns");
            }
            for (Elem& el : row) {
                host.check_element(el);
                // Must lie in E.
                const auto [q, se] = e.decompose(el);
                if (!e.quotient().is_zero(q)) {
                    throw StructuralError("linking construction: shift entries must lie in E");
                }
                (void)se;
            }
        }
    } else {
        shifts.assign(m - 1, std::vector<Elem>(s, host.zero()));
    }

    const auto hyperplanes = hyperplane_subgroups(e);
    const DsParams params = hadamard_params(d);
    LinkingSystem sys;
    sys.group = host;
    sys.params = params;
    for (std::size_t i = 1; i < m; ++i) {
        std::vector<Elem> elems;
        elems.reserve(static_cast<std::size_t>(params.k));
        for (std::size_t j = 1; j <= s; ++j) {
            const Elem b = e.coset_rep(normalized.rows[i][j]);
            const Elem be = host.add(b, shifts[i - 1][j - 1]);
            for (const Elem& h : hyperplanes[j - 1]) {
                elems.push_back(host.add(be, h));
            }
        }
        sys.sets.push_back(make_difference_set(host, std::move(elems), params));
    }
    return sys;
}

namespace {

// Convolution coefficients of D_i . (-D_j).
std::vector<std::int64_t> cross_correlation(const GroupSpec& g, const std::vector<Elem>& di,
                                            const std::vector<Elem>& dj) {
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(g.order()), 0);
    for (const Elem& a : di) {
        for (const Elem& b : dj) {
            ++coeff[static_cast<std::size_t>(g.index_of(g.sub(a, b)))];
        }
    }
    return coeff;
}

}  // namespace

LinkingReport check_linking(const LinkingSystem& sys, std::int64_t cap) {
    LinkingReport report;
    const GroupSpec& g = sys.group;
    if (g.order() > cap) throw CapacityError("linking check exceeds cap");
    if (sys.sets.size() < 2) {
        report.error = "a linking system needs at least two member sets";
        return report;
    }
    for (const auto& d : sys.sets) {
        if (d.params != sys.sets.front().params) {
            report.error = "member sets have inconsistent parameters";
            return report;
        }
        if (!check_difference_set(d, cap)) {
            report.error = "a member set is not a difference set";
            return report;
        }
    }
    const DsParams params = sys.sets.front().params;
    bool have_mu_nu = false;
    bool all_ok = true;
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
        for (std::size_t j = 0; j < sys.sets.size(); ++j) {
            if (i == j) continue;
            LinkingPairReport pr;
            pr.i = i;
            pr.j = j;
            const auto coeff = cross_correlation(g, sys.sets[i].elements, sys.sets[j].elements);
            std::map<std::int64_t, std::int64_t> histogram;  // value -> count
            for (auto c : coeff) ++histogram[c];
            if (histogram.size() != 2) {
                pr.error = "product has " + std::to_string(histogram.size()) +
                           " distinct coefficient values, expected 2";
                all_ok = false;
                report.pairs.push_back(std::move(pr));
                continue;
            }
            const auto first = *histogram.begin();
            const auto second = *std::next(histogram.begin());
            std::int64_t mu, nu;
            if (first.second == params.k && second.second == params.k) {
                pr.error = "both coefficient level sets have size k; mu/nu ambiguous";
                all_ok = false;
                report.pairs.push_back(std::move(pr));
                continue;
            }
            if (first.second == params.k) {
                mu = first.first;
                nu = second.first;
            } else if (second.second == params.k) {
                mu = second.first;
                nu = first.first;
            } else {
                pr.error = "no coefficient value is attained on exactly k elements";
                all_ok = false;
                report.pairs.push_back(std::move(pr));
                continue;
            }
            pr.mu = mu;
            pr.nu = nu;
            std::vector<Elem> level;
            for (std::int64_t x = 0; x < g.order(); ++x) {
                if (coeff[static_cast<std::size_t>(x)] == mu) level.push_back(g.element_at(x));
            }
            DifferenceSet dij = make_difference_set(g, level, params);
            if (!check_difference_set(dij, cap)) {
                pr.error = "the mu level set is not a (v,k,lambda,n)-difference set";
                all_ok = false;
                report.pairs.push_back(std::move(pr));
                continue;
            }
            pr.linking_set = dij.elements;
            pr.ok = true;
            if (!have_mu_nu) {
                report.mu = mu;
                report.nu = nu;
                have_mu_nu = true;
            } else if (report.mu != mu || report.nu != nu) {
                pr.ok = false;
                pr.error = "(mu, nu) differs from earlier pairs";
                all_ok = false;
            }
            report.pairs.push_back(std::move(pr));
        }
    }
    report.ok = all_ok;
    if (!all_ok && report.error.empty()) report.error = "one or more pairs failed";
    return report;
}

LinkingReport verify_linking(LinkingSystem& sys, std::int64_t cap) {
    LinkingReport r = check_linking(sys, cap);
    if (r.ok) {
        sys.verified = true;
        sys.mu = r.mu;
        sys.nu = r.nu;
        for (auto& d : sys.sets) d.verified = true;
    }
    return r;
}

}  // namespace cdm
