#include "cdm/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

namespace cdm {

namespace {

std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (std::int64_t{1} << 62) / base) {
            throw CapacityError("group order exceeds 2^62");
        }
        r *= base;
    }
    return r;
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) return false;
    }
    return true;
}

GroupSpec::GroupSpec(std::int64_t p, std::vector<int> exponents) : p_(p) {
    if (!is_prime(p)) {
        throw StructuralError("GroupSpec: p = " + std::to_string(p) + " is not prime");
    }
    for (int a : exponents) {
        if (a < 0) throw StructuralError("GroupSpec: negative exponent");
    }
    std::erase(exponents, 0);
    std::sort(exponents.begin(), exponents.end(), std::greater<int>());
    exponents_ = std::move(exponents);
    n_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
    order_ = checked_pow(p_, n_);
    factor_orders_.reserve(exponents_.size());
    for (int a : exponents_) factor_orders_.push_back(checked_pow(p_, a));
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::vector<std::int64_t> orders;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'Z' && text[pos] != 'z') {
            throw StructuralError("group literal: expected 'Z' in '" + std::string(text) + "'");
        }
        ++pos;
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc() || v < 1) {
            throw StructuralError("group literal: bad factor order in '" + std::string(text) + "'");
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        orders.push_back(v);
        if (pos < text.size()) {
            if (text[pos] != 'x' && text[pos] != 'X') {
                throw StructuralError("group literal: expected 'x' in '" + std::string(text) + "'");
            }
            ++pos;
        }
    }
    if (orders.empty()) throw StructuralError("group literal: empty");
    // All factor orders must be powers of a single prime.
    std::int64_t p = 0;
    std::vector<int> exps;
    for (std::int64_t v : orders) {
        if (v == 1) {
            exps.push_back(0);
            continue;
        }
        std::int64_t q = 2;
        while (q * q <= v && v % q != 0) ++q;
        if (v % q != 0) q = v;
        int a = 0;
        std::int64_t w = v;
        while (w % q == 0) { w /= q; ++a; }
        if (w != 1) throw StructuralError("group literal: factor " + std::to_string(v) + " is not a prime power");
        if (p == 0) p = q;
        if (p != q) throw StructuralError("group literal: mixed primes are unsupported");
        exps.push_back(a);
    }
    if (p == 0) p = 2;  // "Z1"
    return GroupSpec(p, std::move(exps));
}

bool GroupSpec::elementary() const noexcept {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int a) { return a == 1; });
}

std::string GroupSpec::text() const {
    if (trivial()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < factor_orders_.size(); ++i) {
        if (i) s += 'x';
        s += 'Z';
        s += std::to_string(factor_orders_[i]);
    }
    return s;
}

bool GroupSpec::is_zero(const Elem& g) const {
    check_element(g);
    return std::all_of(g.begin(), g.end(), [](Coord c) { return c == 0; });
}

Elem GroupSpec::reduce(Elem g) const {
    if (g.size() != exponents_.size()) {
        throw StructuralError("element rank mismatch for group " + text());
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = mod_reduce(g[i], factor_orders_[i]);
    }
    return g;
}

Elem GroupSpec::add(const Elem& g, const Elem& h) const {
    check_element(g);
    check_element(h);
    Elem r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        r[i] = mod_reduce(g[i] + h[i], factor_orders_[i]);
    }
    return r;
}

Elem GroupSpec::sub(const Elem& g, const Elem& h) const {
    check_element(g);
    check_element(h);
    Elem r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        r[i] = mod_reduce(g[i] - h[i], factor_orders_[i]);
    }
    return r;
}

Elem GroupSpec::neg(const Elem& g) const {
    check_element(g);
    Elem r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        r[i] = mod_reduce(-g[i], factor_orders_[i]);
    }
    return r;
}

Elem GroupSpec::scalar_mul(std::int64_t c, const Elem& g) const {
    check_element(g);
    Elem r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        __int128 v = static_cast<__int128>(c) * g[i];
        std::int64_t m = factor_orders_[i];
        std::int64_t red = static_cast<std::int64_t>(v % m);
        if (red < 0) red += m;
        r[i] = red;
    }
    return r;
}

void GroupSpec::check_element(const Elem& g) const {
    if (g.size() != exponents_.size()) {
        throw StructuralError("element rank mismatch for group " + text());
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 0 || g[i] >= factor_orders_[i]) {
            throw StructuralError("element coordinate out of range for group " + text());
        }
    }
}

std::int64_t GroupSpec::index_of(const Elem& g) const {
    check_element(g);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        idx = idx * factor_orders_[i] + g[i];
    }
    return idx;
}

Elem GroupSpec::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) {
        throw StructuralError("element index out of range for group " + text());
    }
    Elem g(exponents_.size());
    for (std::size_t i = exponents_.size(); i-- > 0;) {
        g[i] = index % factor_orders_[i];
        index /= factor_orders_[i];
    }
    return g;
}

std::vector<Elem> enumerate_elements(const GroupSpec& g, std::int64_t cap) {
    if (g.order() > cap) {
        throw CapacityError("enumeration of " + g.text() + " exceeds cap");
    }
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (std::int64_t i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
    return out;
}

namespace {

// Positions of the nontrivial factors, ordered so the resulting spec is
// canonical (exponent nonincreasing, stable by host position).
std::vector<int> ordered_positions(const std::vector<int>& exps) {
    std::vector<int> pos;
    for (int i = 0; i < static_cast<int>(exps.size()); ++i) {
        if (exps[static_cast<std::size_t>(i)] > 0) pos.push_back(i);
    }
    std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) {
        return exps[static_cast<std::size_t>(a)] > exps[static_cast<std::size_t>(b)];
    });
    return pos;
}

std::vector<int> gathered(const std::vector<int>& exps, const std::vector<int>& pos) {
    std::vector<int> out;
    out.reserve(pos.size());
    for (int i : pos) out.push_back(exps[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace

DiagonalSubgroup::DiagonalSubgroup(GroupSpec host, std::vector<int> cofactors)
    : host_(std::move(host)), cofactors_(std::move(cofactors)) {
    if (static_cast<int>(cofactors_.size()) != host_.rank()) {
        throw StructuralError("cofactor count must equal host rank");
    }
    std::vector<int> sub_exps(cofactors_.size()), quot_exps(cofactors_.size());
    for (std::size_t i = 0; i < cofactors_.size(); ++i) {
        int a = host_.exponents()[i];
        int b = cofactors_[i];
        if (b < 0 || b > a) throw StructuralError("cofactor out of range");
        sub_exps[i] = a - b;
        quot_exps[i] = b;
    }
    sub_positions_ = ordered_positions(sub_exps);
    quot_positions_ = ordered_positions(quot_exps);
    subgroup_ = GroupSpec(host_.p(), gathered(sub_exps, sub_positions_));
    quotient_ = GroupSpec(host_.p(), gathered(quot_exps, quot_positions_));
}

Elem DiagonalSubgroup::embed(const Elem& sub_elem) const {
    subgroup_.check_element(sub_elem);
    Elem h = host_.zero();
    for (std::size_t j = 0; j < sub_positions_.size(); ++j) {
        int i = sub_positions_[j];
        std::int64_t mult = 1;
        for (int t = 0; t < cofactors_[static_cast<std::size_t>(i)]; ++t) mult *= host_.p();
        h[static_cast<std::size_t>(i)] = sub_elem[j] * mult;
    }
    return host_.reduce(std::move(h));
}

Elem DiagonalSubgroup::coset_rep(const Elem& quot_elem) const {
    quotient_.check_element(quot_elem);
    Elem h = host_.zero();
    for (std::size_t j = 0; j < quot_positions_.size(); ++j) {
        h[static_cast<std::size_t>(quot_positions_[j])] = quot_elem[j];
    }
    return h;
}

Elem DiagonalSubgroup::project(const Elem& host_elem) const {
    host_.check_element(host_elem);
    Elem q(quot_positions_.size());
    for (std::size_t j = 0; j < quot_positions_.size(); ++j) {
        int i = quot_positions_[j];
        q[j] = host_elem[static_cast<std::size_t>(i)] %
               quotient_.factor_order(static_cast<int>(j));
    }
    return q;
}

std::pair<Elem, Elem> DiagonalSubgroup::decompose(const Elem& host_elem) const {
    host_.check_element(host_elem);
    Elem q = project(host_elem);
    Elem s(sub_positions_.size());
    for (std::size_t j = 0; j < sub_positions_.size(); ++j) {
        int i = sub_positions_[j];
        std::int64_t mult = 1;
        for (int t = 0; t < cofactors_[static_cast<std::size_t>(i)]; ++t) mult *= host_.p();
        s[j] = host_elem[static_cast<std::size_t>(i)] / mult;
    }
    return {std::move(q), std::move(s)};
}

Homomorphism::Homomorphism(GroupSpec source, GroupSpec target,
                           std::vector<std::vector<Coord>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (static_cast<int>(matrix_.size()) != target_.rank()) {
        throw StructuralError("homomorphism matrix: row count must equal target rank");
    }
    for (const auto& row : matrix_) {
        if (static_cast<int>(row.size()) != source_.rank()) {
            throw StructuralError("homomorphism matrix: column count must equal source rank");
        }
    }
    // Well-definedness: T[j][i] must vanish mod p^{max(0, b_j - a_i)}.
    for (int j = 0; j < target_.rank(); ++j) {
        for (int i = 0; i < source_.rank(); ++i) {
            int need = target_.exponents()[static_cast<std::size_t>(j)] -
                       source_.exponents()[static_cast<std::size_t>(i)];
            if (need <= 0) continue;
            std::int64_t m = 1;
            for (int t = 0; t < need; ++t) m *= source_.p();
            if (mod_reduce(matrix_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], m) != 0) {
                throw StructuralError("homomorphism matrix is not well defined");
            }
        }
    }
    if (source_.p() != target_.p()) {
        throw StructuralError("homomorphism between groups of different primes");
    }
}

Homomorphism Homomorphism::projection(const GroupSpec& source, int keep) {
    if (keep < 0 || keep > source.rank()) {
        throw StructuralError("projection: kept coordinate count out of range");
    }
    std::vector<int> exps(source.exponents().begin(), source.exponents().begin() + keep);
    GroupSpec target(source.p(), std::move(exps));
    std::vector<std::vector<Coord>> m(static_cast<std::size_t>(keep),
                                      std::vector<Coord>(static_cast<std::size_t>(source.rank()), 0));
    for (int j = 0; j < keep; ++j) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
    return Homomorphism(source, target, std::move(m));
}

Homomorphism Homomorphism::identity(const GroupSpec& g) {
    return projection(g, g.rank());
}

Homomorphism Homomorphism::coordinate_reversal(const GroupSpec& g) {
    std::vector<int> rev(g.exponents().rbegin(), g.exponents().rend());
    if (rev != g.exponents()) {
        throw StructuralError("coordinate reversal needs a palindromic factor list");
    }
    int r = g.rank();
    std::vector<std::vector<Coord>> m(static_cast<std::size_t>(r),
                                      std::vector<Coord>(static_cast<std::size_t>(r), 0));
    for (int j = 0; j < r; ++j) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(r - 1 - j)] = 1;
    return Homomorphism(g, g, std::move(m));
}

Elem Homomorphism::apply(const Elem& g) const {
    source_.check_element(g);
    Elem out(static_cast<std::size_t>(target_.rank()));
    for (int j = 0; j < target_.rank(); ++j) {
        __int128 acc = 0;
        for (int i = 0; i < source_.rank(); ++i) {
            acc += static_cast<__int128>(matrix_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) *
                   g[static_cast<std::size_t>(i)];
        }
        std::int64_t m = target_.factor_order(j);
        std::int64_t red = static_cast<std::int64_t>(acc % m);
        if (red < 0) red += m;
        out[static_cast<std::size_t>(j)] = red;
    }
    return out;
}

std::int64_t Homomorphism::image_size(std::int64_t cap) const {
    if (target_.order() > cap) {
        throw CapacityError("image enumeration exceeds cap");
    }
    // Closure of the generator images under addition.
    std::unordered_set<std::int64_t> seen;
    std::vector<Elem> gens;
    for (int i = 0; i < source_.rank(); ++i) {
        Elem e = source_.zero();
        e[static_cast<std::size_t>(i)] = 1;
        gens.push_back(apply(e));
    }
    std::vector<Elem> frontier{target_.zero()};
    seen.insert(target_.index_of(target_.zero()));
    while (!frontier.empty()) {
        Elem cur = std::move(frontier.back());
        frontier.pop_back();
        for (const Elem& g : gens) {
            Elem nxt = target_.add(cur, g);
            if (seen.insert(target_.index_of(nxt)).second) frontier.push_back(nxt);
        }
    }
    return static_cast<std::int64_t>(seen.size());
}

bool Homomorphism::surjective(std::int64_t cap) const {
    return image_size(cap) == target_.order();
}

std::int64_t Homomorphism::kernel_size(std::int64_t cap) const {
    return source_.order() / image_size(cap);
}

}  // namespace cdm
