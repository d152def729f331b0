#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccg/types.hpp"

namespace ccg {

// Parameters of an (n,k,c)-universal coloring family: functions
// {1..n} -> {1..c} such that every map on every k-subset is realized.
// Members are composites omega((a*x mod p) mod k^2) over all p in 2..p_bound,
// a in 0..p-1 and all functions omega: {0..k^2-1} -> {1..c}; composite p adds
// redundant members but never breaks coverage. Never materialized: members
// are generated on demand from their index.
struct FamilyParams {
    u32 n = 0;
    u32 k = 0;
    u32 c = 0;
    u32 multiplier = 1;
    u64 p_bound = 2;

    u64 cells() const { return static_cast<u64>(k) * k; }
};

// Validates 1 <= k <= n, c >= 1, multiplier >= 1 and derives
// p_bound = max(2, multiplier * ceil(k^2 * log2(max(n,2)))).
FamilyParams family_params(u32 n, u32 k, u32 c, u32 multiplier = 1);

// Exact count of (p,a,omega) triples: sum_{p=2}^{P} p * c^(k^2).
bool family_size_fits_u64(const FamilyParams& params);
u64 family_size(const FamilyParams& params);            // throws guard_error on overflow
std::string family_size_decimal(const FamilyParams& params);  // exact at any size

// head * base^exponent as an exact decimal string.
std::string decimal_scaled_power(u64 head, u32 base, u64 exponent);

// (p,a) blocks in canonical order: p ascending, then a in 0..p-1. Every block
// contributes c^(k^2) consecutive member indices.
struct Block {
    u64 p = 2;
    u64 a = 0;
};
u64 block_count(const FamilyParams& params);
Block block_at(const FamilyParams& params, u64 block_index);
// Hash cell of position x (1-based) under a block: (a*x mod p) mod k^2.
u32 cell_of(const FamilyParams& params, const Block& block, u32 x);

// One member function table. Regenerating from (params, index) is
// deterministic across runs and thread counts.
struct Coloring {
    std::vector<u32> values;   // values[x-1] in 1..c
    u64 index = 0;
};
Coloring get_coloring(const FamilyParams& params, u64 index);

struct CoverageCounterexample {
    std::vector<u32> subset;   // k positions
    std::vector<u32> target;   // target[i] = color demanded for subset[i]
};
struct CoverageReport {
    bool covered = false;
    std::optional<CoverageCounterexample> counterexample;
};

// Exhaustive coverage check, guarded to n <= 16, k <= 3, c <= 4. Either
// reports covered or returns a (subset, target map) no member agrees with.
CoverageReport verify_family(const FamilyParams& params);

// True iff bits contains >= t ones, decided by searching the (|bits|,t,t)
// family for a coloring whose every color class holds a one.
bool threshold(const std::vector<bool>& bits, u32 t);

} // namespace ccg
