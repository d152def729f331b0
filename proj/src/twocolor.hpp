#pragma once

#include <omp.h>

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ccg/coloring.hpp"
#include "ccg/parallel.hpp"
#include "ccg/types.hpp"
#include "ccg/witness.hpp"

namespace ccg::detail {

// Block scan for blue/orange solvers. A family member's effect is determined
// by its vertex 2-coloring, encoded as an orange bitmask; blocks are scanned
// in canonical order and within a block the distinct colorings are
// enumerated as a little-endian counter over the occupied hash cells (digit 1
// = orange), which is exactly ascending member-index order.
struct TwoColorResult {
    std::optional<std::pair<u64, u64>> hit;   // (block index, orange mask)
    u64 colorings_checked = 0;
    u64 blocks = 0;
    FamilyParams params;
    bool ran = false;
};

// Accept must be a pure function of the orange mask.
template <typename Accept>
TwoColorResult two_color_search(u32 n, u64 subset_size, const RunOptions& opt, Accept&& accept) {
    if (n == 0 || subset_size == 0) throw domain_error("two-color search needs vertices");
    if (n > 64) throw guard_error("blue/orange solvers are guarded to 64 vertices");
    TwoColorResult result;
    result.params = family_params(n, static_cast<u32>(std::min<u64>(subset_size, n)), 2,
                                  opt.multiplier);
    result.blocks = block_count(result.params);
    result.ran = true;

    const int threads = resolve_threads(opt.threads);

    // Small universes: evaluate every coloring once up front; the block scan
    // then only resolves the first-success index.
    if (n <= 14) {
        const u64 tables = u64{1} << n;
        std::vector<u8> accepted(tables, 0);
        bool any = false;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 64) reduction(|| : any)
        for (i64 mask = 0; mask < static_cast<i64>(tables); ++mask) {
            bool a = accept(static_cast<u64>(mask));
            accepted[static_cast<u64>(mask)] = a ? 1 : 0;
            any = any || a;
        }
        if (!any) {
            // Canonical full-scan work: distinct colorings per block.
            u64 total = 0;
            std::vector<u32> occ;
            for (u64 b = 0; b < result.blocks; ++b) {
                Block blk = block_at(result.params, b);
                occ.clear();
                for (u32 x = 1; x <= n; ++x) occ.push_back(cell_of(result.params, blk, x));
                std::sort(occ.begin(), occ.end());
                occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
                total += u64{1} << occ.size();
            }
            result.colorings_checked = total;
            return result;
        }
        auto eval = [&](u64 block_index) -> std::pair<std::optional<u64>, u64> {
            Block blk = block_at(result.params, block_index);
            std::vector<u32> cellv(n + 1);
            std::vector<u32> occ;
            for (u32 x = 1; x <= n; ++x) {
                cellv[x] = cell_of(result.params, blk, x);
                occ.push_back(cellv[x]);
            }
            std::sort(occ.begin(), occ.end());
            occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
            const u32 m = static_cast<u32>(occ.size());
            std::vector<u32> cell_pos(n + 1);
            for (u32 x = 1; x <= n; ++x)
                cell_pos[x] = static_cast<u32>(
                    std::lower_bound(occ.begin(), occ.end(), cellv[x]) - occ.begin());
            const u64 restrictions = u64{1} << m;
            for (u64 w = 0; w < restrictions; ++w) {
                u64 mask = 0;
                for (u32 x = 1; x <= n; ++x)
                    if ((w >> cell_pos[x]) & 1) mask |= u64{1} << (x - 1);
                if (accepted[mask]) return {mask, w + 1};
            }
            return {std::nullopt, restrictions};
        };
        auto outcome = run_first_success(result.blocks, opt, eval);
        result.colorings_checked = outcome.work;
        if (outcome.hit) result.hit = {outcome.hit->first, outcome.hit->second};
        return result;
    }

    // Large universes: stream blocks with per-thread memoization.
    std::vector<std::unordered_map<u64, bool>> caches(
        static_cast<size_t>(std::max(threads, omp_get_max_threads())) + 1);
    auto eval = [&](u64 block_index) -> std::pair<std::optional<u64>, u64> {
        auto& cache = caches[static_cast<size_t>(omp_get_thread_num())];
        Block blk = block_at(result.params, block_index);
        std::vector<u32> cellv(n + 1);
        std::vector<u32> occ;
        for (u32 x = 1; x <= n; ++x) {
            cellv[x] = cell_of(result.params, blk, x);
            occ.push_back(cellv[x]);
        }
        std::sort(occ.begin(), occ.end());
        occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
        const u32 m = static_cast<u32>(occ.size());
        if (m >= 63) return {std::nullopt, 0};   // unreachable: m <= n <= 64
        std::vector<u32> cell_pos(n + 1);
        for (u32 x = 1; x <= n; ++x)
            cell_pos[x] = static_cast<u32>(std::lower_bound(occ.begin(), occ.end(), cellv[x]) -
                                           occ.begin());
        const u64 restrictions = u64{1} << m;
        for (u64 w = 0; w < restrictions; ++w) {
            u64 mask = 0;
            for (u32 x = 1; x <= n; ++x)
                if ((w >> cell_pos[x]) & 1) mask |= u64{1} << (x - 1);
            bool ok;
            auto it = cache.find(mask);
            if (it != cache.end()) {
                ok = it->second;
            } else {
                ok = accept(mask);
                if (cache.size() < (u64{1} << 22)) cache.emplace(mask, ok);
            }
            if (ok) return {mask, w + 1};
        }
        return {std::nullopt, restrictions};
    };
    auto outcome = run_first_success(result.blocks, opt, eval);
    result.colorings_checked = outcome.work;
    if (outcome.hit) result.hit = {outcome.hit->first, outcome.hit->second};
    return result;
}

inline void fill_stats(SearchStats& stats, const TwoColorResult& r) {
    stats.family_size = family_size_decimal(r.params);
    stats.family_size_fits = family_size_fits_u64(r.params);
    stats.family_size_u64 = stats.family_size_fits ? family_size(r.params) : 0;
    stats.family_blocks = r.blocks;
    stats.colorings_checked = r.colorings_checked;
}

} // namespace ccg::detail
