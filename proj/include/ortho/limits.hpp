#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ortho {

// Library-wide error type. Parse errors carry an input position on top.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}

  std::size_t position;
};

// Resource guards. All enumeration-based operations check one of these
// before starting, so an oversized request fails fast instead of thrashing.
struct Limits {
  std::size_t ring_order_cap = 4096;     // carrier enumeration cap
  std::size_t table_cap = 4096;          // precompute Cayley tables up to this order
  std::uint64_t candidate_cap = 5'000'000; // matrix-space enumeration cap
  std::size_t export_cap = 5000;         // graph export vertex cap
  std::size_t adjacency_cache_cap = 20'000; // cache adjacency up to this many classes
  unsigned threads = 1;
};

} // namespace ortho
