#include "ccg/local.hpp"

#include <algorithm>
#include <chrono>

namespace ccg {

namespace {

using Clock = std::chrono::steady_clock;

// 1 + delta * ((delta-1)^r - 1) / (delta - 2) capped at n; degenerate
// delta <= 1 gives 2 and delta == 2 gives 2r + 1.
u32 ball_size_bound(u32 delta, u32 r, u32 n) {
    if (delta <= 1) return std::min<u32>(2, std::max<u32>(n, 1));
    if (delta == 2) return std::min<u64>(2ull * r + 1, n);
    u64 pw = 1;
    for (u32 i = 0; i < r; ++i) {
        pw *= delta - 1;
        if (pw >= n) return n;   // ball cannot outgrow the graph
    }
    u64 m = 1 + static_cast<u64>(delta) * (pw - 1) / (delta - 2);
    return static_cast<u32>(std::min<u64>(m, n));
}

struct Candidate {
    u32 vertex;
    std::vector<u32> ball_vertices;
};

// Member-index order over (cell, digit) assignments: ball i paints its cells
// with digit i-1, all other cells stay 0.
struct SparseDigits {
    std::vector<std::pair<u32, u32>> entries;   // (cell, digit>0), cell descending

    static SparseDigits of(const std::vector<const Candidate*>& tuple,
                           const std::vector<u32>& cell_of_vertex) {
        SparseDigits s;
        for (u32 i = 1; i < tuple.size(); ++i)   // color 1 has digit 0
            for (u32 v : tuple[i]->ball_vertices) s.entries.push_back({cell_of_vertex[v], i});
        std::sort(s.entries.begin(), s.entries.end(),
                  [](auto& a, auto& b) { return a.first > b.first; });
        return s;
    }

    bool operator<(const SparseDigits& other) const {
        for (size_t i = 0; i < std::min(entries.size(), other.entries.size()); ++i) {
            if (entries[i].first != other.entries[i].first)
                return entries[i].first < other.entries[i].first;
            if (entries[i].second != other.entries[i].second)
                return entries[i].second < other.entries[i].second;
        }
        return entries.size() < other.entries.size();
    }
};

} // namespace

LocalResult scattered_balls(const Graph& g, u32 k, u32 r, const LocalPredicate& pred,
                            const RunOptions& opt) {
    if (g.directed()) throw domain_error("scattered balls require an undirected graph");
    if (k == 0) throw domain_error("center count must be positive");
    auto start = Clock::now();

    LocalResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";
    const u32 n = g.vertex_count();
    if (n == 0) return result;

    u32 delta = 0;
    for (u32 v = 1; v <= n; ++v) delta = std::max(delta, g.degree(v));
    result.ball_bound = ball_size_bound(delta, r, n);

    if (k > n) return result;   // k distinct centers cannot exist

    // Candidate centers: predicate evaluated once on each extracted ball.
    std::vector<Candidate> candidates;
    for (u32 v = 1; v <= n; ++v) {
        BallView view = ball(g, v, r);
        if (pred(view.graph, view.center)) candidates.push_back({v, view.to_host});
    }
    if (candidates.size() < k) {
        result.stats.millis =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return result;
    }

    const u32 subset = static_cast<u32>(
        std::min<u64>(static_cast<u64>(result.ball_bound) * k, n));
    FamilyParams params = family_params(n, subset, k + 1, opt.multiplier);
    result.family = params;
    result.stats.family_size = family_size_decimal(params);
    result.stats.family_size_fits = family_size_fits_u64(params);
    result.stats.family_size_u64 = result.stats.family_size_fits ? family_size(params) : 0;
    result.stats.family_blocks = block_count(params);

    // Per block: a coloring works iff k predicate balls occupy pairwise
    // disjoint cell sets (omega then paints ball i with color i and the rest
    // with the background color). Keep the smallest member index.
    auto eval = [&](u64 block_index) -> std::pair<std::optional<BallsWitness>, u64> {
        Block blk = block_at(params, block_index);
        std::vector<u32> cellv(n + 1, 0);
        for (u32 x = 1; x <= n; ++x) cellv[x] = cell_of(params, blk, x);
        std::vector<std::vector<u32>> cellsets(candidates.size());
        for (size_t i = 0; i < candidates.size(); ++i) {
            auto& cs = cellsets[i];
            for (u32 v : candidates[i].ball_vertices) cs.push_back(cellv[v]);
            std::sort(cs.begin(), cs.end());
            cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        }
        auto disjoint = [&](size_t i, size_t j) {
            const auto& a = cellsets[i];
            const auto& b = cellsets[j];
            size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] == b[y]) return false;
                a[x] < b[y] ? ++x : ++y;
            }
            return true;
        };
        // Ordered tuples (center per color); exact minimal member index.
        std::optional<BallsWitness> best;
        std::optional<SparseDigits> best_digits;
        std::vector<const Candidate*> tuple(k + 1, nullptr);
        std::vector<size_t> pick(k + 1, 0);
        std::vector<bool> used(candidates.size(), false);
        std::function<void(u32)> rec = [&](u32 color) {
            if (color > k) {
                SparseDigits digits = SparseDigits::of(tuple, cellv);
                if (!best_digits || digits < *best_digits) {
                    BallsWitness w;
                    w.radius = r;
                    for (u32 i = 1; i <= k; ++i) w.centers.push_back(tuple[i]->vertex);
                    best = std::move(w);
                    best_digits = std::move(digits);
                }
                return;
            }
            for (size_t i = 0; i < candidates.size(); ++i) {
                if (used[i]) continue;
                bool ok = true;
                for (u32 c = 1; c < color && ok; ++c) ok = disjoint(pick[c], i);
                if (!ok) continue;
                used[i] = true;
                pick[color] = i;
                tuple[color] = &candidates[i];
                rec(color + 1);
                used[i] = false;
            }
        };
        rec(1);
        return {std::move(best), 1};
    };
    auto outcome = run_first_success(block_count(params), opt, eval);
    result.stats.colorings_checked = outcome.work;
    if (outcome.hit) {
        result.found = true;
        result.witness = std::move(outcome.hit->second);
        if (auto err = check_balls(g, *result.witness, k, r, pred))
            throw std::logic_error("scattered-balls witness failed validation: " + *err);
    }
    result.stats.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
}

} // namespace ccg
