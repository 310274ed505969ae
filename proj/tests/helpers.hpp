#pragma once

// Shared test fixtures: ring builders and the catalog of small rings the
// suites sweep over.

#include <string>
#include <vector>

#include "ortho/parse.hpp"
#include "ortho/ring.hpp"

namespace testutil {

inline ortho::Ring zmod(std::uint64_t m) {
  return ortho::Ring(ortho::RingSpec::modular_ring(m));
}

inline ortho::Ring quot(std::uint64_t m, std::vector<std::uint64_t> coeffs) {
  return ortho::Ring(ortho::RingSpec::quotient_ring(m, std::move(coeffs)));
}

inline ortho::Ring from_spec(const std::string& text) {
  return ortho::Ring(ortho::parse_ring_spec(text));
}

// Rings with zero-divisors used across the suites.
inline std::vector<std::string> catalog_specs() {
  return {"Z4",          "Z6",          "Z8",      "Z9",      "Z12",   "Z2[x]/(x^2)",
          "Z2[x]/(x^3)", "Z4[x]/(x^2)", "Z2 x Z2", "Z2 x Z4", "Z3 x Z3"};
}

inline ortho::Elem el(const ortho::Ring& R, const std::string& text) {
  return ortho::parse_element(text, R);
}

inline ortho::Matrix mat(const ortho::Ring& R, std::size_t n, const std::string& text) {
  return ortho::parse_matrix(text, R, n, n);
}

} // namespace testutil
