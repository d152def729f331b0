#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccg {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Malformed input text (graph files, pattern expressions). CLI exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter outside its domain (k > n, zero counts, directed where undirected
// is required). CLI exit code 2.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact procedure refused to run because the instance exceeds its guard.
// Never a wrong answer. CLI exit code 3.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ccg
