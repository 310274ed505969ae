#pragma once

// Text forms:
//   ring   := atom (" x " atom)*          product binds loosest
//   atom   := "Z" nat | "Z" nat "[x]/(" poly ")"
//   poly   := term ("+" term)*
//   term   := nat | nat "x" | nat "x^" nat | "x" | "x^" nat
// Element literals: integer residue for Z_m, polynomial string for
// quotients ("1+x"), parenthesized tuple for products ("(1,0)").
// Matrix literals: rows separated by ';', entries by ',' ("2,0;0,1").
// All parsers are whitespace-tolerant and report error positions.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ortho/matrix.hpp"
#include "ortho/ring.hpp"

namespace ortho {

namespace detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return pos < text.size() ? text[pos] : '\0'; }
  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!try_consume(c)) throw ParseError(std::string("expected '") + c + "' in " + what, pos);
  }
  std::uint64_t nat(const char* what) {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(std::string("expected number in ") + what, pos);
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) throw ParseError("number too large", pos);
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }
};

// poly := term ('+' term)*; returns accumulated coefficients c0..cd.
// When bounds are given (element parsing), each written term must have
// coefficient < coeff_bound and exponent <= max_degree; accumulated sums
// reduce mod coeff_bound, so "1+1" over Z_2 is the zero element.
inline std::vector<std::uint64_t> parse_poly(Cursor& cur, std::uint64_t coeff_bound = 0,
                                             std::uint64_t max_degree = 64) {
  std::vector<std::uint64_t> coeffs;
  auto put = [&](std::uint64_t coeff, std::uint64_t deg) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] += coeff;
    if (coeff_bound != 0) coeffs[deg] %= coeff_bound;
  };
  while (true) {
    cur.skip_ws();
    const std::size_t at = cur.pos;
    std::uint64_t coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.nat("polynomial term");
      have_coeff = true;
    }
    if (coeff_bound != 0 && coeff >= coeff_bound)
      throw ParseError("coefficient out of range", at);
    std::uint64_t deg = 0;
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == 'x') {
      ++cur.pos;
      deg = 1;
      if (cur.pos < cur.text.size() && cur.text[cur.pos] == '^') {
        ++cur.pos;
        deg = cur.nat("polynomial exponent");
      }
    } else if (!have_coeff) {
      throw ParseError("expected polynomial term", at);
    }
    if (deg > max_degree) throw ParseError("polynomial degree out of range", at);
    put(coeff, deg);
    if (!cur.try_consume('+')) break;
  }
  return coeffs;
}

inline RingSpec parse_ring_atom(Cursor& cur) {
  cur.skip_ws();
  if (cur.peek() != 'Z') throw ParseError("expected ring ('Z' followed by a modulus)", cur.pos);
  ++cur.pos;
  const std::size_t at = cur.pos;
  if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw ParseError("expected modulus after 'Z'", cur.pos);
  const std::uint64_t m = cur.nat("modulus");
  if (m < 2) throw ParseError("modulus must be >= 2", at);
  cur.skip_ws();
  if (cur.peek() != '[') return RingSpec::modular_ring(m);
  cur.expect('[', "quotient ring");
  cur.expect('x', "quotient ring");
  cur.expect(']', "quotient ring");
  cur.expect('/', "quotient ring");
  cur.expect('(', "quotient ring");
  const std::size_t poly_at = cur.pos;
  std::vector<std::uint64_t> coeffs = parse_poly(cur);
  cur.expect(')', "quotient ring");
  try {
    return RingSpec::quotient_ring(m, std::move(coeffs));
  } catch (const Error& e) {
    throw ParseError(e.what(), poly_at);
  }
}

} // namespace detail

inline RingSpec parse_ring_spec(std::string_view text) {
  detail::Cursor cur{text};
  std::vector<RingSpec> factors;
  factors.push_back(detail::parse_ring_atom(cur));
  while (true) {
    cur.skip_ws();
    if (cur.peek() != 'x') break;
    ++cur.pos;
    factors.push_back(detail::parse_ring_atom(cur));
  }
  if (!cur.done()) throw ParseError("unexpected trailing input", cur.pos);
  if (factors.size() == 1) return factors.front();
  return RingSpec::product_ring(std::move(factors));
}

namespace detail {

inline std::uint64_t parse_element_rec(Cursor& cur, const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::modular: {
      const std::size_t at = cur.pos;
      const std::uint64_t v = cur.nat("residue");
      if (v >= spec.modulus) throw ParseError("residue out of range", at);
      return v;
    }
    case RingSpec::Kind::quotient: {
      cur.skip_ws();
      const std::size_t d = spec.poly.size() - 1;
      std::vector<std::uint64_t> coeffs = parse_poly(cur, spec.modulus, d - 1);
      return quotient_encode(spec, coeffs);
    }
    case RingSpec::Kind::product: {
      cur.expect('(', "product element");
      std::uint64_t v = 0, stride = 1;
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) cur.expect(',', "product element");
        v += stride * parse_element_rec(cur, spec.factors[i]);
        stride *= spec_order(spec.factors[i]);
      }
      cur.expect(')', "product element");
      return v;
    }
  }
  throw Error("bad ring spec");
}

} // namespace detail

inline Elem parse_element(std::string_view text, const Ring& ring) {
  detail::Cursor cur{text};
  const std::uint64_t v = detail::parse_element_rec(cur, ring.spec());
  if (!cur.done()) throw ParseError("unexpected trailing input in element", cur.pos);
  return ring.element(v);
}

inline Matrix parse_matrix(std::string_view text, const Ring& ring, std::size_t rows,
                           std::size_t cols) {
  detail::Cursor cur{text};
  Matrix out(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (r) cur.expect(';', "matrix literal");
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) cur.expect(',', "matrix literal");
      out.set(r, c, Elem{static_cast<std::uint32_t>(detail::parse_element_rec(cur, ring.spec()))});
    }
  }
  if (!cur.done())
    throw ParseError("matrix literal has more entries than the expected " +
                         std::to_string(rows) + "x" + std::to_string(cols) + " shape",
                     cur.pos);
  return out;
}

} // namespace ortho
