#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "ortho/ring.hpp"

using namespace ortho;
using testutil::catalog_specs;
using testutil::el;
using testutil::from_spec;
using testutil::quot;
using testutil::zmod;

namespace {

std::vector<std::uint32_t> indices(const std::vector<Elem>& es) {
  std::vector<std::uint32_t> out;
  for (Elem e : es) out.push_back(e.index);
  return out;
}

// Independent ideal validator: explicit closure checks straight from the
// definition, no shortcuts through the library's own machinery.
void check_is_ideal(const Ideal& I) {
  const Ring& R = I.ring();
  REQUIRE(I.contains(R.zero()));
  for (Elem x : I.members()) {
    CHECK(I.contains(R.neg(x)));
    for (Elem y : I.members()) CHECK(I.contains(R.add(x, y)));
    for (std::size_t r = 0; r < R.order(); ++r)
      CHECK(I.contains(R.mul(R.element(r), x)));
  }
}

} // namespace

TEST_CASE("modular ring construction") {
  const Ring R = zmod(6);
  CHECK(R.order() == 6);
  CHECK(R.zero().index == 0);
  CHECK(R.one().index == 1);
  CHECK(R.format(R.element(4)) == "4");
  CHECK(R.add(R.element(4), R.element(5)).index == 3);
  CHECK(R.mul(R.element(4), R.element(5)).index == 2);
  CHECK(R.neg(R.element(2)).index == 4);
  CHECK(R.str() == "Z6");
}

TEST_CASE("quotient ring construction") {
  const Ring R = quot(2, {0, 0, 1});  // Z2[x]/(x^2)
  CHECK(R.order() == 4);
  CHECK(R.format(R.element(0)) == "0");
  CHECK(R.format(R.element(1)) == "1");
  CHECK(R.format(R.element(2)) == "x");
  CHECK(R.format(R.element(3)) == "1+x");
  const Elem x = R.element(2);
  CHECK(R.mul(x, x).index == 0);  // x^2 = 0
  CHECK(R.str() == "Z2[x]/(x^2)");

  const Ring F8 = quot(2, {1, 1, 0, 1});  // Z2[x]/(x^3+x+1), a field
  CHECK(F8.order() == 8);
  const Elem y = F8.element(2);
  // x * x^2 = x^3 = x + 1
  CHECK(F8.mul(y, F8.mul(y, y)).index == 3);
  CHECK(F8.str() == "Z2[x]/(x^3+x+1)");
}

TEST_CASE("product ring construction") {
  const Ring R = from_spec("Z2 x Z2");
  CHECK(R.order() == 4);
  CHECK(R.format(R.one()) == "(1,1)");
  // first factor is the least significant digit
  CHECK(R.format(R.element(1)) == "(1,0)");
  CHECK(R.format(R.element(2)) == "(0,1)");
  const Elem a = el(R, "(1,0)"), b = el(R, "(0,1)");
  CHECK(R.mul(a, b).index == 0);
  CHECK(R.add(a, b) == R.one());

  const Ring S = from_spec("Z2 x Z3 x Z2");
  CHECK(S.order() == 12);
  CHECK(S.format(S.one()) == "(1,1,1)");
}

TEST_CASE("carrier enumeration is deterministic") {
  const Ring a = quot(2, {0, 0, 0, 1});
  const Ring b = quot(2, {0, 0, 0, 1});
  REQUIRE(a.order() == b.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    CHECK(a.format(a.element(i)) == b.format(b.element(i)));
  CHECK(a.format(a.element(4)) == "x^2");  // little-endian coefficient digits
  CHECK(a.format(a.element(6)) == "x+x^2");
}

TEST_CASE("ring axioms hold on the catalog") {
  std::vector<std::string> specs = catalog_specs();
  specs.push_back("Z4[x]/(x^3+2x+3)");  // non-prime base, degree 3, mixed terms
  specs.push_back("Z6[x]/(x^2+x)");
  for (const auto& spec : specs) {
    CAPTURE(spec);
    const Ring R = from_spec(spec);
    const std::size_t q = R.order();
    for (std::size_t a = 0; a < q; ++a) {
      const auto ea = static_cast<std::uint32_t>(a);
      CHECK(R.add_idx(ea, 0) == ea);
      CHECK(R.mul_idx(ea, R.one().index) == ea);
      CHECK(R.add_idx(ea, R.neg_idx(ea)) == 0);
      for (std::size_t b = 0; b < q; ++b) {
        const auto eb = static_cast<std::uint32_t>(b);
        CHECK(R.add_idx(ea, eb) == R.add_idx(eb, ea));
        CHECK(R.mul_idx(ea, eb) == R.mul_idx(eb, ea));
      }
    }
    if (q <= 64) {
      for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
          for (std::size_t c = 0; c < q; ++c) {
            const auto ea = static_cast<std::uint32_t>(a);
            const auto eb = static_cast<std::uint32_t>(b);
            const auto ec = static_cast<std::uint32_t>(c);
            CHECK(R.add_idx(R.add_idx(ea, eb), ec) == R.add_idx(ea, R.add_idx(eb, ec)));
            CHECK(R.mul_idx(R.mul_idx(ea, eb), ec) == R.mul_idx(ea, R.mul_idx(eb, ec)));
            CHECK(R.mul_idx(ea, R.add_idx(eb, ec)) ==
                  R.add_idx(R.mul_idx(ea, eb), R.mul_idx(ea, ec)));
          }
    }
  }
}

TEST_CASE("ring axioms, sampled triples on a larger ring") {
  const Ring R = quot(2, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1});  // Z2[x]/(x^9+1), order 512
  REQUIRE(R.order() == 512);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::uint32_t> pick(0, 511);
  for (int i = 0; i < 10000; ++i) {
    const std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(R.add_idx(R.add_idx(a, b), c) == R.add_idx(a, R.add_idx(b, c)));
    CHECK(R.mul_idx(R.mul_idx(a, b), c) == R.mul_idx(a, R.mul_idx(b, c)));
    CHECK(R.mul_idx(a, R.add_idx(b, c)) == R.add_idx(R.mul_idx(a, b), R.mul_idx(a, c)));
  }
}

TEST_CASE("on-demand arithmetic agrees with the tabled path") {
  Limits no_tables;
  no_tables.table_cap = 0;
  for (const std::string& spec : {std::string("Z6"), std::string("Z4[x]/(x^2)"),
                                 std::string("Z2 x Z4")}) {
    const Ring tabled = from_spec(spec);
    const Ring lazy(parse_ring_spec(spec), no_tables);
    REQUIRE(tabled.order() == lazy.order());
    for (std::size_t a = 0; a < tabled.order(); ++a)
      for (std::size_t b = 0; b < tabled.order(); ++b) {
        const auto ea = static_cast<std::uint32_t>(a);
        const auto eb = static_cast<std::uint32_t>(b);
        CHECK(tabled.add_idx(ea, eb) == lazy.add_idx(ea, eb));
        CHECK(tabled.mul_idx(ea, eb) == lazy.mul_idx(ea, eb));
      }
  }
}

TEST_CASE("annihilator") {
  const Ring Z4 = zmod(4);
  CHECK(indices(annihilator(Z4, Z4.zero()).members()) == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(indices(annihilator(Z4, Z4.element(2)).members()) == std::vector<std::uint32_t>{0, 2});

  const Ring Z6 = zmod(6);
  CHECK(indices(annihilator(Z6, Z6.element(2)).members()) == std::vector<std::uint32_t>{0, 3});
  CHECK(indices(annihilator(Z6, Z6.element(3)).members()) == std::vector<std::uint32_t>{0, 2, 4});

  CHECK_THROWS_AS(annihilator(Z4, Z4.element(7)), Error);

  for (const auto& spec : catalog_specs()) {
    const Ring R = from_spec(spec);
    for (std::size_t a = 0; a < R.order(); ++a) check_is_ideal(annihilator(R, R.element(a)));
  }
}

TEST_CASE("annihilator is nonzero exactly on zero-divisors") {
  for (const auto& spec : catalog_specs()) {
    CAPTURE(spec);
    const Ring R = from_spec(spec);
    for (std::size_t a = 0; a < R.order(); ++a) {
      const Elem e = R.element(a);
      CHECK((annihilator(R, e).size() > 1) == R.is_zero_divisor(e));
    }
  }
}

TEST_CASE("zero_divisors") {
  CHECK(indices(zero_divisors(zmod(4))) == std::vector<std::uint32_t>{0, 2});
  CHECK(indices(zero_divisors(zmod(6))) == std::vector<std::uint32_t>{0, 2, 3, 4});
  CHECK(indices(zero_divisors(zmod(5))) == std::vector<std::uint32_t>{0});

  // independent pair-scan oracle
  for (const auto& spec : catalog_specs()) {
    CAPTURE(spec);
    const Ring R = from_spec(spec);
    std::set<std::uint32_t> oracle;
    for (std::size_t a = 0; a < R.order(); ++a)
      for (std::size_t x = 1; x < R.order(); ++x)
        if (R.mul_idx(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(x)) == 0)
          oracle.insert(static_cast<std::uint32_t>(a));
    const auto got = indices(zero_divisors(R));
    CHECK(std::vector<std::uint32_t>(oracle.begin(), oracle.end()) == got);
  }
}

TEST_CASE("ideal_closure") {
  const Ring Z6 = zmod(6);
  CHECK(indices(ideal_closure(Z6, {Z6.element(2)}).members()) ==
        std::vector<std::uint32_t>{0, 2, 4});
  CHECK(ideal_closure(Z6, {Z6.element(2), Z6.element(3)}).size() == 6);  // 2+3 is a unit

  const Ring Z4 = zmod(4);
  CHECK(indices(ideal_closure(Z4, {}).members()) == std::vector<std::uint32_t>{0});

  // closing the members of an ideal returns the same member set
  std::mt19937 rng(99);
  for (const auto& spec : catalog_specs()) {
    const Ring R = from_spec(spec);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(R.order() - 1));
    for (int trial = 0; trial < 10; ++trial) {
      const Ideal I = ideal_closure(R, {R.element(pick(rng)), R.element(pick(rng))});
      check_is_ideal(I);
      const Ideal again = ideal_closure(R, I.members());
      CHECK(indices(again.members()) == indices(I.members()));
    }
  }
}

TEST_CASE("ideal_has_zero_divisors") {
  const Ring Z4 = zmod(4);
  CHECK(ideal_has_zero_divisors(annihilator(Z4, Z4.element(2))));  // {0,2}, 2*2 = 0
  const Ring Z6 = zmod(6);
  CHECK_FALSE(ideal_has_zero_divisors(annihilator(Z6, Z6.element(2))));  // {0,3}, 3*3 = 3
  CHECK_FALSE(ideal_has_zero_divisors(ideal_closure(Z6, {})));           // {0}
}

TEST_CASE("nonzero ideals meet the zero-divisor set") {
  for (const auto& spec : catalog_specs()) {
    CAPTURE(spec);
    const Ring R = from_spec(spec);
    const auto& zd = R.zero_divisor_mask();
    auto meets = [&](const Ideal& I) {
      for (Elem e : I.members())
        if (e.index != 0 && zd[e.index]) return true;
      return false;
    };
    for (std::size_t a = 0; a < R.order(); ++a) {
      const Ideal ann = annihilator(R, R.element(a));
      if (!ann.is_zero()) CHECK(meets(ann));
      const Ideal gen = ideal_closure(R, {R.element(a)});
      if (!gen.is_zero()) CHECK(meets(gen));
    }
  }
}

TEST_CASE("ideal intersection") {
  const Ring Z12 = zmod(12);
  const Ideal I = intersect(annihilator(Z12, Z12.element(2)), annihilator(Z12, Z12.element(4)));
  // Ann(2) = {0,6}, Ann(4) = {0,3,6,9}
  CHECK(indices(I.members()) == std::vector<std::uint32_t>{0, 6});
  check_is_ideal(I);
}

TEST_CASE("proper ideals") {
  const Ring Z6 = zmod(6);
  CHECK(annihilator(Z6, Z6.element(2)).is_proper());
  CHECK_FALSE(ideal_closure(Z6, {Z6.one()}).is_proper());
}

TEST_CASE("malformed specs are rejected") {
  CHECK_THROWS_AS(RingSpec::modular_ring(1), Error);
  CHECK_THROWS_AS(RingSpec::modular_ring(0), Error);
  CHECK_THROWS_AS(RingSpec::quotient_ring(4, {3}), Error);         // degree 0
  CHECK_THROWS_AS(RingSpec::quotient_ring(4, {1, 0, 2}), Error);   // non-monic
  CHECK_THROWS_AS(RingSpec::quotient_ring(2, {1, 0, 2}), Error);   // leading term vanishes
  CHECK_THROWS_AS(RingSpec::product_ring({RingSpec::modular_ring(2)}), Error);
}

TEST_CASE("enumeration cap") {
  // order 8192 exceeds the default cap of 4096
  CHECK_THROWS_AS(quot(2, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), Error);
  Limits big;
  big.ring_order_cap = 10000;
  const Ring R(RingSpec::quotient_ring(2, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), big);
  CHECK(R.order() == 8192);
  // spot arithmetic on the on-demand path: x * x^12 = x^13 = 1 (mod x^13+1)
  CHECK(R.mul(R.element(2), R.element(1u << 12)) == R.one());
}

TEST_CASE("reduction by a modulus with lower-order terms") {
  const Ring R = from_spec("Z4[x]/(x^3+2x+3)");
  CHECK(R.order() == 64);
  // x * x^2 = x^3 = -(2x + 3) = 1 + 2x mod 4
  CHECK(R.format(R.mul(el(R, "x"), el(R, "x^2"))) == "1+2x");
  CHECK(R.format(R.mul(el(R, "x^2"), el(R, "x^2"))) == "x+2x^2");
}

TEST_CASE("product with a quotient factor") {
  const Ring R = from_spec("Z2[x]/(x^2) x Z3");
  CHECK(R.order() == 12);
  const Elem e = el(R, "(x,2)");
  CHECK(R.format(e) == "(x,2)");
  CHECK(R.format(R.mul(e, e)) == "(0,1)");
  CHECK(R.format(R.add(e, R.one())) == "(1+x,0)");
  CHECK(R.format(R.one()) == "(1,1)");
}
