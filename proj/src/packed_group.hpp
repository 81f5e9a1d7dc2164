// Internal element-index arithmetic shared by the verifier scans and the
// search core.  Elements are their enumerate_elements indices; addition
// uses a flat table for small groups and mixed-radix arithmetic beyond.
#pragma once

#include <cstdint>
#include <vector>

#include "cdm/group.hpp"

namespace cdm::detail {

struct PackedGroup {
    std::int64_t order = 1;
    std::int64_t p = 2;
    int rank = 0;
    std::vector<std::int64_t> radix;
    std::vector<std::int32_t> add_tab;   // order x order, when order <= kAddTableLimit
    std::vector<std::int32_t> neg_tab;   // order
    std::vector<std::int32_t> scal_tab;  // p x order

    static constexpr std::int64_t kAddTableLimit = 2048;

    std::int32_t add(std::int32_t a, std::int32_t b) const {
        if (!add_tab.empty()) {
            return add_tab[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                           static_cast<std::size_t>(b)];
        }
        std::int64_t x = a, y = b, out = 0, mul = 1;
        for (int i = rank - 1; i >= 0; --i) {
            const std::int64_t m = radix[static_cast<std::size_t>(i)];
            out += ((x % m + y % m) % m) * mul;
            x /= m;
            y /= m;
            mul *= m;
        }
        return static_cast<std::int32_t>(out);
    }

    std::int32_t neg(std::int32_t a) const { return neg_tab[static_cast<std::size_t>(a)]; }

    /// c in [0, p).
    std::int32_t scal(std::int64_t c, std::int32_t a) const {
        return scal_tab[static_cast<std::size_t>(c) * static_cast<std::size_t>(order) +
                        static_cast<std::size_t>(a)];
    }

    /// Integer coefficient in (-p, p) acting by scalar multiplication.
    std::int32_t scal_signed(std::int64_t c, std::int32_t a) const {
        return c >= 0 ? scal(c, a) : neg(scal(-c, a));
    }
};

inline PackedGroup build_packed(const GroupSpec& g, std::int64_t cap = kDefaultEnumerationCap) {
    if (g.order() > cap) throw CapacityError("packed arithmetic exceeds cap");
    PackedGroup pk;
    pk.order = g.order();
    pk.p = g.p();
    pk.rank = g.rank();
    pk.radix = g.factor_orders();
    pk.neg_tab.resize(static_cast<std::size_t>(pk.order));
    for (std::int64_t i = 0; i < pk.order; ++i) {
        pk.neg_tab[static_cast<std::size_t>(i)] =
            static_cast<std::int32_t>(g.index_of(g.neg(g.element_at(i))));
    }
    pk.scal_tab.resize(static_cast<std::size_t>(pk.p * pk.order));
    for (std::int64_t c = 0; c < pk.p; ++c) {
        for (std::int64_t i = 0; i < pk.order; ++i) {
            pk.scal_tab[static_cast<std::size_t>(c * pk.order + i)] =
                static_cast<std::int32_t>(g.index_of(g.scalar_mul(c, g.element_at(i))));
        }
    }
    if (pk.order <= PackedGroup::kAddTableLimit) {
        // Allocation-free fill: walk j in enumeration order while keeping
        // the coordinate sum in a scratch buffer.
        pk.add_tab.resize(static_cast<std::size_t>(pk.order * pk.order));
        std::vector<Coord> ai(static_cast<std::size_t>(pk.rank));
        std::vector<Coord> sum(static_cast<std::size_t>(pk.rank));
        std::vector<Coord> bj(static_cast<std::size_t>(pk.rank));
        for (std::int64_t i = 0; i < pk.order; ++i) {
            std::int64_t rest = i;
            for (int t = pk.rank - 1; t >= 0; --t) {
                ai[static_cast<std::size_t>(t)] = rest % pk.radix[static_cast<std::size_t>(t)];
                rest /= pk.radix[static_cast<std::size_t>(t)];
            }
            std::fill(bj.begin(), bj.end(), 0);
            for (std::int64_t j = 0;; ++j) {
                std::int64_t out = 0;
                for (int t = 0; t < pk.rank; ++t) {
                    const std::int64_t m = pk.radix[static_cast<std::size_t>(t)];
                    Coord v = ai[static_cast<std::size_t>(t)] + bj[static_cast<std::size_t>(t)];
                    if (v >= m) v -= m;
                    sum[static_cast<std::size_t>(t)] = v;
                    out = out * m + v;
                }
                pk.add_tab[static_cast<std::size_t>(i * pk.order + j)] =
                    static_cast<std::int32_t>(out);
                if (j + 1 == pk.order) break;
                int t = pk.rank - 1;
                while (bj[static_cast<std::size_t>(t)] + 1 == pk.radix[static_cast<std::size_t>(t)]) {
                    bj[static_cast<std::size_t>(t)] = 0;
                    --t;
                }
                ++bj[static_cast<std::size_t>(t)];
            }
        }
    }
    return pk;
}

}  // namespace cdm::detail
