#include "ccg/coloring.hpp"

#include <algorithm>
#include <cmath>

namespace ccg {

namespace {

// ceil(log2(x)) for x >= 2 via exact integer arithmetic on n^(k^2):
// ceil(k^2 * log2(n)) = bit_length(n^(k^2) - 1).
u64 ceil_k2_log2(u64 n, u64 k2) {
    // n^(k2) as a bignum of 32-bit limbs.
    std::vector<u64> acc{1};
    auto mul = [&](u64 f) {
        u64 carry = 0;
        for (auto& limb : acc) {
            // limbs hold 32-bit payloads in u64 slots
            u64 prod = limb * f + carry;
            limb = prod & 0xffffffffu;
            carry = prod >> 32;
        }
        while (carry) {
            acc.push_back(carry & 0xffffffffu);
            carry >>= 32;
        }
    };
    for (u64 i = 0; i < k2; ++i) mul(n);
    // subtract one
    for (auto& limb : acc) {
        if (limb > 0) {
            --limb;
            break;
        }
        limb = 0xffffffffu;
    }
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    if (acc.size() == 1 && acc[0] == 0) return 0;
    u64 top = acc.back();
    u64 top_bits = 0;
    while (top) {
        ++top_bits;
        top >>= 1;
    }
    return (acc.size() - 1) * 32 + top_bits;
}

bool checked_mul(u64 a, u64 b, u64& out) { return !__builtin_mul_overflow(a, b, &out); }

// c^(k^2) with overflow detection.
bool members_per_block_u64(const FamilyParams& params, u64& out) {
    out = 1;
    for (u64 i = 0; i < params.cells(); ++i)
        if (!checked_mul(out, params.c, out)) return false;
    return true;
}

u64 sum_p(const FamilyParams& params) {
    // sum_{p=2}^{P} p = P(P+1)/2 - 1
    u64 pb = params.p_bound;
    return pb * (pb + 1) / 2 - 1;
}

std::string decimal_of(u64 head, u32 base, u64 exponent) {
    // head * base^exponent in base-1e9 digits.
    std::vector<u64> digits;
    u64 h = head;
    while (h) {
        digits.push_back(h % 1000000000ull);
        h /= 1000000000ull;
    }
    if (digits.empty()) digits.push_back(0);
    for (u64 i = 0; i < exponent; ++i) {
        u64 carry = 0;
        for (auto& d : digits) {
            u64 prod = d * base + carry;
            d = prod % 1000000000ull;
            carry = prod / 1000000000ull;
        }
        while (carry) {
            digits.push_back(carry % 1000000000ull);
            carry /= 1000000000ull;
        }
    }
    std::string out = std::to_string(digits.back());
    for (size_t i = digits.size() - 1; i-- > 0;) {
        std::string part = std::to_string(digits[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

} // namespace

FamilyParams family_params(u32 n, u32 k, u32 c, u32 multiplier) {
    if (k == 0 || n == 0 || c == 0 || multiplier == 0)
        throw domain_error("family parameters must be positive");
    if (k > n) throw domain_error("subset size k exceeds universe size n");
    if (k > 4096) throw domain_error("subset size too large");
    FamilyParams params;
    params.n = n;
    params.k = k;
    params.c = c;
    params.multiplier = multiplier;
    u64 base = ceil_k2_log2(std::max<u32>(n, 2), params.cells());
    params.p_bound = std::max<u64>(2, static_cast<u64>(multiplier) * base);
    return params;
}

bool family_size_fits_u64(const FamilyParams& params) {
    u64 members, total;
    return members_per_block_u64(params, members) && checked_mul(sum_p(params), members, total);
}

u64 family_size(const FamilyParams& params) {
    u64 members, total;
    if (!members_per_block_u64(params, members) || !checked_mul(sum_p(params), members, total))
        throw guard_error("family size exceeds 64-bit range; use family_size_decimal");
    return total;
}

std::string family_size_decimal(const FamilyParams& params) {
    return decimal_of(sum_p(params), params.c, params.cells());
}

std::string decimal_scaled_power(u64 head, u32 base, u64 exponent) {
    return decimal_of(head, base, exponent);
}

u64 block_count(const FamilyParams& params) { return sum_p(params); }

Block block_at(const FamilyParams& params, u64 block_index) {
    if (block_index >= block_count(params)) throw domain_error("block index out of range");
    // Invert cum(p) = p(p+1)/2 - 1 around sqrt(2*(index+1)).
    u64 target = block_index + 1;   // want smallest p with p(p+1)/2 > target
    u64 p = static_cast<u64>(std::sqrt(2.0 * static_cast<double>(target)));
    if (p < 2) p = 2;
    while (p * (p + 1) / 2 <= target) ++p;
    while (p > 2 && (p - 1) * p / 2 > target) --p;
    u64 before = p * (p - 1) / 2 - 1;   // blocks with smaller p
    return Block{p, block_index - before};
}

u32 cell_of(const FamilyParams& params, const Block& block, u32 x) {
    return static_cast<u32>((block.a * x % block.p) % params.cells());
}

Coloring get_coloring(const FamilyParams& params, u64 index) {
    u64 members;
    if (!members_per_block_u64(params, members) || !family_size_fits_u64(params))
        throw guard_error("family too large to index with 64 bits");
    if (index >= family_size(params)) throw domain_error("coloring index out of range");
    Block block = block_at(params, index / members);
    u64 w = index % members;
    Coloring coloring;
    coloring.index = index;
    coloring.values.resize(params.n);
    // digit j of w in base c is omega(j) - 1
    for (u32 x = 1; x <= params.n; ++x) {
        u32 cell = cell_of(params, block, x);
        u64 q = w;
        for (u32 j = 0; j < cell; ++j) q /= params.c;
        coloring.values[x - 1] = static_cast<u32>(q % params.c) + 1;
    }
    return coloring;
}

CoverageReport verify_family(const FamilyParams& params) {
    if (params.n > 16 || params.k > 3 || params.c > 4)
        throw guard_error("coverage verification guarded to n <= 16, k <= 3, c <= 4");
    CoverageReport report;
    if (params.c == 1) {
        // The single target map is realized by any member.
        report.covered = true;
        return report;
    }
    // A member agrees with (S, mu) iff mu is constant on the block's
    // cell-collision classes of S; omega supplies the rest.
    std::vector<u32> subset(params.k);
    const u64 blocks = block_count(params);
    auto check_subset = [&](const std::vector<u32>& s) -> std::optional<std::vector<u32>> {
        // Collect the distinct collision patterns the blocks induce on s.
        std::vector<std::vector<u32>> patterns;   // pattern[i] = class id of s[i]
        bool injective_seen = false;
        for (u64 b = 0; b < blocks && !injective_seen; ++b) {
            Block block = block_at(params, b);
            std::vector<u32> cells(s.size()), cls(s.size());
            for (size_t i = 0; i < s.size(); ++i) cells[i] = cell_of(params, block, s[i]);
            u32 next = 0;
            for (size_t i = 0; i < s.size(); ++i) {
                bool found = false;
                for (size_t j = 0; j < i && !found; ++j)
                    if (cells[j] == cells[i]) {
                        cls[i] = cls[j];
                        found = true;
                    }
                if (!found) cls[i] = next++;
            }
            if (next == s.size()) injective_seen = true;
            if (std::find(patterns.begin(), patterns.end(), cls) == patterns.end())
                patterns.push_back(cls);
        }
        if (injective_seen) return std::nullopt;   // every mu realizable
        // Try every target map against every achieved pattern.
        std::vector<u32> mu(s.size(), 1);
        while (true) {
            bool realizable = false;
            for (const auto& cls : patterns) {
                bool ok = true;
                for (size_t i = 0; i < s.size() && ok; ++i)
                    for (size_t j = i + 1; j < s.size() && ok; ++j)
                        if (cls[i] == cls[j] && mu[i] != mu[j]) ok = false;
                if (ok) {
                    realizable = true;
                    break;
                }
            }
            if (!realizable) return mu;
            size_t pos = 0;
            while (pos < mu.size() && mu[pos] == params.c) mu[pos++] = 1;
            if (pos == mu.size()) break;
            ++mu[pos];
        }
        return std::nullopt;
    };

    // Enumerate k-subsets of 1..n.
    for (u32 i = 0; i < params.k; ++i) subset[i] = i + 1;
    while (true) {
        if (auto bad_mu = check_subset(subset)) {
            report.covered = false;
            report.counterexample = CoverageCounterexample{subset, *bad_mu};
            return report;
        }
        int pos = static_cast<int>(params.k) - 1;
        while (pos >= 0 && subset[pos] == params.n - (params.k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (u32 i = static_cast<u32>(pos) + 1; i < params.k; ++i) subset[i] = subset[i - 1] + 1;
    }
    report.covered = true;
    return report;
}

bool threshold(const std::vector<bool>& bits, u32 t) {
    if (t == 0) throw domain_error("threshold must be positive");
    const u32 n = static_cast<u32>(bits.size());
    if (t > n) return false;
    FamilyParams params = family_params(n, t, t);
    // A coloring gives every color class a one iff t distinct hash cells
    // contain a one; omega then routes one such cell to each color.
    const u64 blocks = block_count(params);
    std::vector<u32> seen_cells;
    for (u64 b = 0; b < blocks; ++b) {
        Block block = block_at(params, b);
        seen_cells.clear();
        for (u32 x = 1; x <= n; ++x) {
            if (!bits[x - 1]) continue;
            u32 cell = cell_of(params, block, x);
            if (std::find(seen_cells.begin(), seen_cells.end(), cell) == seen_cells.end())
                seen_cells.push_back(cell);
            if (seen_cells.size() >= t) return true;
        }
    }
    return false;
}

} // namespace ccg
