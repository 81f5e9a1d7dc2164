#include "cdm/search.hpp"

#include "packed_group.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <future>
#include <limits>
#include <random>

namespace cdm {

namespace {

constexpr std::int64_t kSearchOrderCap = std::int64_t{1} << 16;

using Packed = detail::PackedGroup;

Packed build_packed(const GroupSpec& g) {
    if (g.order() > kSearchOrderCap) throw CapacityError("search group exceeds cap");
    return detail::build_packed(g);
}

// Bitset over element indices.
struct SumSet {
    std::vector<std::uint64_t> words;
    void init(std::int64_t order) {
        words.assign(static_cast<std::size_t>((order + 63) / 64), 0);
    }
    bool contains(std::int32_t i) const {
        return (words[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
    }
    void insert(std::int32_t i) {
        words[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
};

// dst |= src translated by g.
void union_translated(SumSet& dst, const SumSet& src, std::int32_t gidx, const Packed& pk) {
    for (std::size_t w = 0; w < src.words.size(); ++w) {
        std::uint64_t bits = src.words[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            dst.insert(pk.add(static_cast<std::int32_t>(w * 64 + b), gidx));
        }
    }
}

// One coefficient context at row i: the combination alpha*row_i + u with u
// a fixed combination of the completed rows.  Negated coefficient vectors
// are equivalent (the condition is symmetric under global sign), so alpha
// only ranges over 1..p-1; this halving is an internal optimization of
// the search, not of the verify operations.
struct Context {
    std::int64_t alpha = 1;
    std::vector<std::int32_t> u;  // per column
};

class Searcher {
public:
    Searcher(const SearchConfig& cfg, const std::atomic<bool>* stop)
        : cfg_(cfg), g_(cfg.group), stop_(stop) {
        if (cfg_.k < 1) throw StructuralError("search: k must be positive");
        if (cfg_.s < 0) throw StructuralError("search: s must be nonnegative");
        if (cfg_.canonical_first_row && cfg_.s != 0) {
            throw StructuralError("search: first-row canonical form is defined for s = 0");
        }
        pk_ = build_packed(g_);
        cols_ = g_.total_exponent() + static_cast<int>(cfg_.s);
        want_ = int_pow(g_.p(), static_cast<int>(cfg_.s));
        s0_ = cfg_.s == 0;
        m_.assign(static_cast<std::size_t>(cfg_.k),
                  std::vector<std::int32_t>(static_cast<std::size_t>(cols_), 0));
    }

    SearchResult run() {
        SearchResult res;
        res.seed = cfg_.seed;
        if (cfg_.canonical_first_row) res.restrictions_applied.push_back("first-row-canonical");
        if (cfg_.mode == SearchConfig::Mode::exhaustive) {
            if (cfg_.reduce_columns && !cfg_.canonical_first_row)
                res.reductions_applied.push_back("column-order");
            if (cfg_.reduce_negation) res.reductions_applied.push_back("sign-negation");
            if (cfg_.reduce_row_order) res.reductions_applied.push_back("row-order");
        }
        if (cfg_.k > cols_) {  // k <= n+s is necessary
            res.outcome = SearchResult::Outcome::exhausted_none;
            return res;
        }
        start_row_ = 0;
        if (cfg_.canonical_first_row) {
            const auto row = lex_first_feasible_row(g_, cols_);
            enter_row_contexts(0);
            for (int j = 0; j < cols_; ++j) {
                const auto v = static_cast<std::int32_t>(g_.index_of(row[static_cast<std::size_t>(j)]));
                if (!apply_entry(0, j, v)) {
                    throw StructuralError("search: canonical first row failed its own check");
                }
                m_[0][static_cast<std::size_t>(j)] = v;
            }
            start_row_ = 1;
        }
        if (cfg_.mode == SearchConfig::Mode::exhaustive) {
            run_exhaustive(res);
        } else {
            run_random(res);
        }
        res.nodes_visited = nodes_;
        return res;
    }

private:
    // ---- state stacks -------------------------------------------------

    // States are indexed by absolute depth d = row*cols + col; state after
    // assigning that cell.  Depth -1 handled per row via row_base_.
    struct CtxState {
        std::vector<SumSet> sets;                  // s = 0
        std::vector<std::vector<std::int32_t>> counts;  // s > 0
    };

    void enter_row_contexts(int i) {
        // All combinations of the completed rows 0..i-1, including zero.
        std::vector<Context> ctxs;
        const std::int64_t p = pk_.p;
        std::vector<Coord> a(static_cast<std::size_t>(i), -(p - 1));
        for (;;) {
            std::vector<std::int32_t> u(static_cast<std::size_t>(cols_), 0);
            for (int t = 0; t < i; ++t) {
                const std::int64_t c = a[static_cast<std::size_t>(t)];
                if (c == 0) continue;
                for (int j = 0; j < cols_; ++j) {
                    // Coefficients act by integer scalar multiplication in G,
                    // so a negative c is the negation of |c|-fold addition.
                    std::int32_t scaled = pk_.scal(c >= 0 ? c : -c,
                                                   m_[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]);
                    if (c < 0) scaled = pk_.neg(scaled);
                    u[static_cast<std::size_t>(j)] =
                        pk_.add(u[static_cast<std::size_t>(j)], scaled);
                }
            }
            for (std::int64_t alpha = 1; alpha < p; ++alpha) {
                ctxs.push_back(Context{alpha, u});
            }
            int t = i - 1;
            while (t >= 0 && a[static_cast<std::size_t>(t)] == p - 1) {
                a[static_cast<std::size_t>(t)] = -(p - 1);
                --t;
            }
            if (t < 0) break;
            ++a[static_cast<std::size_t>(t)];
        }
        contexts_.resize(static_cast<std::size_t>(i + 1));
        contexts_[static_cast<std::size_t>(i)] = std::move(ctxs);
        // Base state: partial sum 0 with multiplicity 1 (the zero b / c).
        CtxState base;
        const std::size_t nctx = contexts_[static_cast<std::size_t>(i)].size();
        if (s0_) {
            base.sets.resize(nctx);
            for (auto& s : base.sets) {
                s.init(pk_.order);
                s.insert(0);
            }
        } else {
            base.counts.assign(nctx, std::vector<std::int32_t>(static_cast<std::size_t>(pk_.order), 0));
            for (auto& c : base.counts) c[0] = 1;
        }
        row_base_.resize(static_cast<std::size_t>(i + 1));
        row_base_[static_cast<std::size_t>(i)] = std::move(base);
        depth_states_.resize(static_cast<std::size_t>(cfg_.k * cols_));
    }

    const CtxState& state_before(int i, int j) const {
        if (j == 0) return row_base_[static_cast<std::size_t>(i)];
        return depth_states_[static_cast<std::size_t>(i * cols_ + j - 1)];
    }

    // Tests value v at cell (i, j) against every context; on success the
    // post-assignment state is stored at this depth.
    bool apply_entry(int i, int j, std::int32_t v) {
        const auto& ctxs = contexts_[static_cast<std::size_t>(i)];
        const CtxState& prev = state_before(i, j);
        CtxState& next = depth_states_[static_cast<std::size_t>(i * cols_ + j)];
        const std::int64_t p = pk_.p;
        if (s0_) {
            next.sets.resize(ctxs.size());
            for (std::size_t c = 0; c < ctxs.size(); ++c) {
                const std::int32_t w =
                    pk_.add(pk_.scal(ctxs[c].alpha, v), ctxs[c].u[static_cast<std::size_t>(j)]);
                const SumSet& s = prev.sets[c];
                for (std::int64_t beta = 1; beta < p; ++beta) {
                    const std::int32_t bw = pk_.scal(beta, w);
                    if (s.contains(bw) || s.contains(pk_.neg(bw))) return false;
                }
                SumSet& out = next.sets[c];
                out = s;
                for (std::int64_t beta = 1; beta < p; ++beta) {
                    const std::int32_t bw = pk_.scal(beta, w);
                    union_translated(out, s, bw, pk_);
                    union_translated(out, s, pk_.neg(bw), pk_);
                }
            }
            return true;
        }
        next.counts.resize(ctxs.size());
        for (std::size_t c = 0; c < ctxs.size(); ++c) {
            const std::int32_t w =
                pk_.add(pk_.scal(ctxs[c].alpha, v), ctxs[c].u[static_cast<std::size_t>(j)]);
            const auto& cnt = prev.counts[c];
            auto& out = next.counts[c];
            out.assign(static_cast<std::size_t>(pk_.order), 0);
            for (std::int64_t x = 0; x < pk_.order; ++x) {
                const std::int32_t base = cnt[static_cast<std::size_t>(x)];
                if (base == 0) continue;
                std::int32_t y = static_cast<std::int32_t>(x);
                for (std::int64_t beta = 0; beta < p; ++beta) {
                    out[static_cast<std::size_t>(y)] += base;
                    y = pk_.add(y, w);
                }
            }
            for (std::int64_t x = 0; x < pk_.order; ++x) {
                if (out[static_cast<std::size_t>(x)] > want_) return false;
            }
        }
        return true;
    }

    bool symmetry_ok(int i, int j, std::int32_t v, bool tied) const {
        if (cfg_.mode != SearchConfig::Mode::exhaustive) return true;
        if (i == 0 && !cfg_.canonical_first_row) {
            if (cfg_.reduce_negation && pk_.neg(v) < v) return false;
            if (cfg_.reduce_columns && j > 0) {
                const std::int32_t prevv = m_[0][static_cast<std::size_t>(j - 1)];
                if (s0_ ? v <= prevv : v < prevv) return false;
            }
        }
        if (i >= 1 && j == 0 && cfg_.reduce_negation && pk_.neg(v) < v) return false;
        if (i >= 2 && cfg_.reduce_row_order && tied &&
            v < m_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]) {
            return false;
        }
        return true;
    }

    std::pair<std::int64_t, std::int64_t> cell_range(int i, int j) const {
        if (i == start_row_ && j == 0) {
            const std::int64_t hi = cfg_.first_cell_hi < 0 ? pk_.order
                                                           : std::min(cfg_.first_cell_hi, pk_.order);
            return {std::min(cfg_.first_cell_lo, hi), hi};
        }
        return {0, pk_.order};
    }

    bool out_of_budget() {
        if (nodes_ >= cfg_.node_budget) return true;
        if ((nodes_ & 1023) == 0) {
            if (stop_ && stop_->load(std::memory_order_relaxed)) {
                stopped_ = true;
                return true;
            }
            if (cfg_.time_budget_s > 0 &&
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time_)
                        .count() > cfg_.time_budget_s) {
                return true;
            }
        }
        return false;
    }

    void record_solution(SearchResult& res) {
        MatrixRows rows(static_cast<std::size_t>(cfg_.k));
        for (int i = 0; i < cfg_.k; ++i) {
            for (int j = 0; j < cols_; ++j) {
                rows[static_cast<std::size_t>(i)].push_back(
                    g_.element_at(m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
        }
        ContractedDifferenceMatrix cand = make_cdm(g_, cfg_.s, std::move(rows));
        if (!verify_cdm_fast(cand)) {
            throw VerificationError("search: candidate failed verification");
        }
        ++res.solutions_count;
        if (!res.matrix) res.matrix = std::move(cand);
    }

    // Returns false when the search must stop (budget / early-exit / found).
    bool dfs(int i, int j, bool tied, SearchResult& res) {
        const auto [lo, hi] = cell_range(i, j);
        for (std::int64_t v64 = lo; v64 < hi; ++v64) {
            const auto v = static_cast<std::int32_t>(v64);
            if (out_of_budget()) return false;
            ++nodes_;
            if (!symmetry_ok(i, j, v, tied)) continue;
            if (!apply_entry(i, j, v)) continue;
            m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            const bool tied_next =
                tied && i >= 1 &&
                v == m_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            if (j + 1 < cols_) {
                if (!dfs(i, j + 1, tied_next, res)) return false;
            } else if (i + 1 < cfg_.k) {
                if (cfg_.reduce_row_order && cfg_.mode == SearchConfig::Mode::exhaustive &&
                    i >= 1 && tied_next) {
                    continue;  // identical adjacent rows can never verify
                }
                enter_row_contexts(i + 1);
                if (!dfs(i + 1, 0, true, res)) return false;
            } else {
                if (cfg_.reduce_row_order && cfg_.mode == SearchConfig::Mode::exhaustive &&
                    i >= 1 && tied_next) {
                    continue;
                }
                record_solution(res);
                if (!cfg_.count_all) return false;
            }
        }
        return true;
    }

    void run_exhaustive(SearchResult& res) {
        enter_row_contexts(start_row_);
        if (start_row_ >= cfg_.k) {  // k = 1 with a pinned first row
            record_solution(res);
            res.outcome = SearchResult::Outcome::found;
            return;
        }
        const bool completed = dfs(start_row_, 0, false, res);
        if (completed) {
            res.outcome = res.matrix ? SearchResult::Outcome::found
                                     : SearchResult::Outcome::exhausted_none;
        } else if (res.matrix && !cfg_.count_all) {
            res.outcome = SearchResult::Outcome::found;
        } else {
            // Budget or early-exit interrupted coverage.
            res.outcome = SearchResult::Outcome::budget_exceeded;
        }
    }

    void run_random(SearchResult& res) {
        std::mt19937_64 rng(cfg_.seed);
        std::vector<std::int32_t> candidates;
        while (!out_of_budget()) {
            bool dead = false;
            for (int i = start_row_; i < cfg_.k && !dead; ++i) {
                enter_row_contexts(i);
                for (int j = 0; j < cols_ && !dead; ++j) {
                    candidates.clear();
                    const auto [lo, hi] = cell_range(i, j);
                    for (std::int64_t v = lo; v < hi; ++v) {
                        if (out_of_budget()) {
                            res.outcome = SearchResult::Outcome::budget_exceeded;
                            return;
                        }
                        ++nodes_;
                        if (apply_entry(i, j, static_cast<std::int32_t>(v))) {
                            candidates.push_back(static_cast<std::int32_t>(v));
                        }
                    }
                    if (candidates.empty()) {
                        dead = true;
                        break;
                    }
                    const auto pick = candidates[std::uniform_int_distribution<std::size_t>(
                        0, candidates.size() - 1)(rng)];
                    apply_entry(i, j, pick);  // recompute state for the picked value
                    m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pick;
                }
            }
            if (!dead) {
                record_solution(res);
                res.outcome = SearchResult::Outcome::found;
                return;
            }
        }
        res.outcome = SearchResult::Outcome::budget_exceeded;
    }

    const SearchConfig& cfg_;
    const GroupSpec& g_;
    const std::atomic<bool>* stop_;
    Packed pk_;
    int cols_ = 0;
    int start_row_ = 0;
    std::int64_t want_ = 1;
    bool s0_ = true;
    bool stopped_ = false;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_time_ = std::chrono::steady_clock::now();
    std::vector<std::vector<std::int32_t>> m_;
    std::vector<std::vector<Context>> contexts_;
    std::vector<CtxState> row_base_;
    std::vector<CtxState> depth_states_;
};

}  // namespace

SearchResult search_cdm(const SearchConfig& config) {
    Searcher s(config, nullptr);
    return s.run();
}

std::vector<SearchConfig> partition_space(const SearchConfig& config, int parts) {
    if (parts < 1) throw StructuralError("partition_space: parts must be positive");
    const std::int64_t order = config.group.order();
    const std::int64_t lo = config.first_cell_lo;
    const std::int64_t hi = config.first_cell_hi < 0 ? order : config.first_cell_hi;
    const std::int64_t span = std::max<std::int64_t>(hi - lo, 0);
    std::vector<SearchConfig> out;
    out.reserve(static_cast<std::size_t>(parts));
    for (int t = 0; t < parts; ++t) {
        SearchConfig part = config;
        part.first_cell_lo = lo + span * t / parts;
        part.first_cell_hi = lo + span * (t + 1) / parts;
        out.push_back(std::move(part));
    }
    return out;
}

SearchResult merge_results(const std::vector<SearchResult>& parts) {
    SearchResult merged;
    merged.outcome = SearchResult::Outcome::exhausted_none;
    for (const auto& r : parts) {
        merged.nodes_visited += r.nodes_visited;
        merged.solutions_count += r.solutions_count;
        for (const auto& s : r.restrictions_applied) {
            if (std::find(merged.restrictions_applied.begin(), merged.restrictions_applied.end(),
                          s) == merged.restrictions_applied.end()) {
                merged.restrictions_applied.push_back(s);
            }
        }
        for (const auto& s : r.reductions_applied) {
            if (std::find(merged.reductions_applied.begin(), merged.reductions_applied.end(), s) ==
                merged.reductions_applied.end()) {
                merged.reductions_applied.push_back(s);
            }
        }
        if (r.matrix && !merged.matrix) merged.matrix = r.matrix;
        if (r.outcome == SearchResult::Outcome::found) {
            merged.outcome = SearchResult::Outcome::found;
        } else if (r.outcome == SearchResult::Outcome::budget_exceeded &&
                   merged.outcome == SearchResult::Outcome::exhausted_none) {
            merged.outcome = SearchResult::Outcome::budget_exceeded;
        }
    }
    return merged;
}

SearchResult search_cdm_partitioned(const SearchConfig& config, int parts) {
    auto configs = partition_space(config, parts);
    std::atomic<bool> stop{false};
    std::vector<std::future<SearchResult>> futures;
    futures.reserve(configs.size());
    for (const auto& part : configs) {
        futures.push_back(std::async(std::launch::async, [part, &stop] {
            Searcher s(part, &stop);
            SearchResult r = s.run();
            if (r.outcome == SearchResult::Outcome::found && !part.count_all) {
                stop.store(true, std::memory_order_relaxed);
            }
            return r;
        }));
    }
    std::vector<SearchResult> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());
    return merge_results(results);
}

std::vector<Elem> lex_first_feasible_row(const GroupSpec& g, int length) {
    SearchConfig cfg;
    cfg.group = g;
    cfg.k = 1;
    cfg.s = 0;
    cfg.mode = SearchConfig::Mode::exhaustive;
    cfg.reduce_columns = false;
    cfg.reduce_negation = false;
    cfg.reduce_row_order = false;
    cfg.node_budget = std::numeric_limits<std::uint64_t>::max();
    if (length != g.total_exponent()) {
        throw StructuralError("lex_first_feasible_row: length must be n for s = 0");
    }
    SearchResult r = search_cdm(cfg);
    if (r.outcome != SearchResult::Outcome::found || !r.matrix) {
        throw StructuralError("lex_first_feasible_row: no feasible row");
    }
    return r.matrix->rows.front();
}

}  // namespace cdm
