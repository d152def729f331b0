#pragma once

#include <omp.h>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ccg/types.hpp"

namespace ccg {

enum class Engine { colorcode, exhaustive, oracle };

struct RunOptions {
    Engine engine = Engine::colorcode;
    int threads = 0;        // 0 = all available
    u32 multiplier = 1;     // coloring-family prime-bound multiplier
    bool audit = false;     // re-verify DP table consistency (tests)
};

inline int resolve_threads(int requested) {
    return requested <= 0 ? omp_get_max_threads() : requested;
}

template <typename Hit>
struct SearchOutcome {
    std::optional<std::pair<u64, Hit>> hit;   // smallest successful index
    u64 work = 0;                             // sum of per-index work up to and including the hit
};

// Runs eval(i) over i in [0, count) and reports the smallest index yielding a
// hit, plus the canonical work sum: all work units of indices before the hit
// plus the hit index's own. eval returns (optional hit, work units) and must
// be a pure function of the index. Serial reference implementation.
template <typename Eval>
auto first_success_counted_serial(u64 count, Eval&& eval)
    -> SearchOutcome<typename decltype(eval(u64{}).first)::value_type> {
    SearchOutcome<typename decltype(eval(u64{}).first)::value_type> outcome;
    for (u64 i = 0; i < count; ++i) {
        auto [hit, work] = eval(i);
        outcome.work += work;
        if (hit) {
            outcome.hit = std::make_pair(i, std::move(*hit));
            return outcome;
        }
    }
    return outcome;
}

// OpenMP version over growing chunks. The result — hit index, payload and
// work sum — is identical to the serial runner for any thread count, because
// chunks are scanned in order and the work sum never includes indices past
// the first hit.
template <typename Eval>
auto first_success_counted(u64 count, int threads, Eval&& eval)
    -> SearchOutcome<typename decltype(eval(u64{}).first)::value_type> {
    using Hit = typename decltype(eval(u64{}).first)::value_type;
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) return first_success_counted_serial(count, eval);

    SearchOutcome<Hit> outcome;
    u64 chunk = static_cast<u64>(threads) * 4;
    const u64 chunk_cap = 8192;
    for (u64 base = 0; base < count; base += chunk, chunk = std::min(chunk * 2, chunk_cap)) {
        const u64 hi = std::min(count, base + chunk);
        std::vector<std::optional<Hit>> hits(hi - base);
        std::vector<u64> works(hi - base, 0);
        bool any = false;
#pragma omp parallel for num_threads(threads) schedule(dynamic) reduction(|| : any)
        for (i64 i = static_cast<i64>(base); i < static_cast<i64>(hi); ++i) {
            auto [hit, work] = eval(static_cast<u64>(i));
            works[static_cast<u64>(i) - base] = work;
            if (hit) {
                hits[static_cast<u64>(i) - base] = std::move(hit);
                any = true;
            }
        }
        if (any) {
            for (u64 j = 0; j < hits.size(); ++j) {
                outcome.work += works[j];
                if (hits[j]) {
                    outcome.hit = std::make_pair(base + j, std::move(*hits[j]));
                    return outcome;
                }
            }
        } else {
            for (u64 w : works) outcome.work += w;
        }
    }
    return outcome;
}

// Engine-aware dispatch: serial when one thread is requested.
template <typename Eval>
auto run_first_success(u64 count, const RunOptions& opt, Eval&& eval)
    -> decltype(first_success_counted(count, 0, eval)) {
    return first_success_counted(count, opt.threads, eval);
}

} // namespace ccg
