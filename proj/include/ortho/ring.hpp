#pragma once

// Finite commutative rings with identity: Z_m, quotient rings Z_m[x]/(f)
// with a monic modulus f, and finite direct products. Elements are canonical
// indices into a deterministic carrier enumeration; arithmetic is exact.
//
// Carrier order (reproducible across runs):
//   modular  - residues 0..m-1
//   quotient - coefficient tuples in base-m little-endian order
//              (index = c0 + c1*m + c2*m^2 + ...)
//   product  - componentwise, first factor least significant
//              (index = e1 + e2*|R1| + e3*|R1||R2| + ...)

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ortho/limits.hpp"

namespace ortho {

/// Handle to one ring element: its position in the carrier enumeration.
/// Only meaningful relative to the Ring that produced it.
struct Elem {
  std::uint32_t index = 0;

  friend constexpr bool operator==(Elem a, Elem b) { return a.index == b.index; }
  friend constexpr auto operator<=>(Elem a, Elem b) { return a.index <=> b.index; }
};

/// Abstract syntax of a ring expression.
struct RingSpec {
  enum class Kind { modular, quotient, product };

  Kind kind = Kind::modular;
  std::uint64_t modulus = 0;            // modular m, or quotient base m
  std::vector<std::uint64_t> poly;      // quotient modulus c0..cd, monic, d >= 1
  std::vector<RingSpec> factors;        // product factors, >= 2

  static RingSpec modular_ring(std::uint64_t m) {
    RingSpec s;
    s.kind = Kind::modular;
    s.modulus = m;
    s.validate();
    return s;
  }

  // Coefficients are reduced mod m and trailing zeros stripped before the
  // monic check, so "x^2+2x^2" over Z_2 is accepted as x^2.
  static RingSpec quotient_ring(std::uint64_t m, std::vector<std::uint64_t> coeffs) {
    RingSpec s;
    s.kind = Kind::quotient;
    s.modulus = m;
    if (m >= 2)
      for (auto& c : coeffs) c %= m;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    s.poly = std::move(coeffs);
    s.validate();
    return s;
  }

  static RingSpec product_ring(std::vector<RingSpec> fs) {
    RingSpec s;
    s.kind = Kind::product;
    s.factors = std::move(fs);
    s.validate();
    return s;
  }

  void validate() const {
    switch (kind) {
      case Kind::modular:
        if (modulus < 2) throw Error("modular ring needs modulus >= 2");
        break;
      case Kind::quotient:
        if (modulus < 2) throw Error("quotient base needs modulus >= 2");
        if (poly.size() < 2) throw Error("quotient modulus must have degree >= 1");
        if (poly.back() != 1) throw Error("quotient modulus must be monic");
        break;
      case Kind::product:
        if (factors.size() < 2) throw Error("product needs at least 2 factors");
        for (const auto& f : factors) {
          if (f.kind == Kind::product)
            throw Error("nested products are not supported; flatten the factor list");
          f.validate();
        }
        break;
    }
  }

  std::string str() const;
};

namespace detail {

inline std::uint64_t mul_guard(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw Error("size computation overflows");
  return a * b;
}

inline std::uint64_t spec_order(const RingSpec& s) {
  switch (s.kind) {
    case RingSpec::Kind::modular:
      return s.modulus;
    case RingSpec::Kind::quotient: {
      std::uint64_t v = 1;
      for (std::size_t i = 0; i + 1 < s.poly.size(); ++i) v = mul_guard(v, s.modulus);
      return v;
    }
    case RingSpec::Kind::product: {
      std::uint64_t v = 1;
      for (const auto& f : s.factors) v = mul_guard(v, spec_order(f));
      return v;
    }
  }
  throw Error("bad ring spec");
}

inline void quotient_decode(const RingSpec& s, std::uint64_t v, std::vector<std::uint64_t>& out) {
  const std::size_t d = s.poly.size() - 1;
  out.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    out[i] = v % s.modulus;
    v /= s.modulus;
  }
}

inline std::uint64_t quotient_encode(const RingSpec& s, const std::vector<std::uint64_t>& coeffs) {
  const std::size_t d = s.poly.size() - 1;
  std::uint64_t v = 0;
  for (std::size_t i = d; i-- > 0;) v = v * s.modulus + (i < coeffs.size() ? coeffs[i] : 0);
  return v;
}

inline std::uint64_t raw_add(const RingSpec& s, std::uint64_t a, std::uint64_t b) {
  switch (s.kind) {
    case RingSpec::Kind::modular:
      return (a + b) % s.modulus;
    case RingSpec::Kind::quotient: {
      std::vector<std::uint64_t> ca, cb;
      quotient_decode(s, a, ca);
      quotient_decode(s, b, cb);
      for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % s.modulus;
      return quotient_encode(s, ca);
    }
    case RingSpec::Kind::product: {
      std::uint64_t v = 0, stride = 1;
      for (const auto& f : s.factors) {
        const std::uint64_t ord = spec_order(f);
        v += stride * raw_add(f, a % ord, b % ord);
        a /= ord;
        b /= ord;
        stride *= ord;
      }
      return v;
    }
  }
  throw Error("bad ring spec");
}

inline std::uint64_t raw_mul(const RingSpec& s, std::uint64_t a, std::uint64_t b) {
  switch (s.kind) {
    case RingSpec::Kind::modular:
      return (a * b) % s.modulus;
    case RingSpec::Kind::quotient: {
      const std::size_t d = s.poly.size() - 1;
      std::vector<std::uint64_t> ca, cb;
      quotient_decode(s, a, ca);
      quotient_decode(s, b, cb);
      std::vector<std::uint64_t> prod(2 * d - 1, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
          prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % s.modulus;
      }
      // reduce by the monic modulus: x^d == -(c_{d-1} x^{d-1} + ... + c_0)
      for (std::size_t i = prod.size(); i-- > d;) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < d; ++j) {
          const std::uint64_t sub = (c * s.poly[j]) % s.modulus;
          prod[i - d + j] = (prod[i - d + j] + s.modulus - sub) % s.modulus;
        }
      }
      prod.resize(d);
      return quotient_encode(s, prod);
    }
    case RingSpec::Kind::product: {
      std::uint64_t v = 0, stride = 1;
      for (const auto& f : s.factors) {
        const std::uint64_t ord = spec_order(f);
        v += stride * raw_mul(f, a % ord, b % ord);
        a /= ord;
        b /= ord;
        stride *= ord;
      }
      return v;
    }
  }
  throw Error("bad ring spec");
}

inline std::uint64_t raw_neg(const RingSpec& s, std::uint64_t a) {
  switch (s.kind) {
    case RingSpec::Kind::modular:
      return (s.modulus - a) % s.modulus;
    case RingSpec::Kind::quotient: {
      std::vector<std::uint64_t> ca;
      quotient_decode(s, a, ca);
      for (auto& c : ca) c = (s.modulus - c) % s.modulus;
      return quotient_encode(s, ca);
    }
    case RingSpec::Kind::product: {
      std::uint64_t v = 0, stride = 1;
      for (const auto& f : s.factors) {
        const std::uint64_t ord = spec_order(f);
        v += stride * raw_neg(f, a % ord);
        a /= ord;
        stride *= ord;
      }
      return v;
    }
  }
  throw Error("bad ring spec");
}

inline std::uint64_t raw_one(const RingSpec& s) {
  switch (s.kind) {
    case RingSpec::Kind::modular:
      return 1;
    case RingSpec::Kind::quotient:
      return 1;
    case RingSpec::Kind::product: {
      std::uint64_t v = 0, stride = 1;
      for (const auto& f : s.factors) {
        v += stride * raw_one(f);
        stride *= spec_order(f);
      }
      return v;
    }
  }
  throw Error("bad ring spec");
}

// Polynomial term rendering shared by element and modulus formatting.
inline std::string poly_term(std::uint64_t coeff, std::size_t deg) {
  if (deg == 0) return std::to_string(coeff);
  std::string t = coeff == 1 ? "" : std::to_string(coeff);
  t += "x";
  if (deg >= 2) t += "^" + std::to_string(deg);
  return t;
}

inline std::string raw_format(const RingSpec& s, std::uint64_t a) {
  switch (s.kind) {
    case RingSpec::Kind::modular:
      return std::to_string(a);
    case RingSpec::Kind::quotient: {
      std::vector<std::uint64_t> ca;
      quotient_decode(s, a, ca);
      std::string out;
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        if (!out.empty()) out += "+";
        out += poly_term(ca[i], i);
      }
      return out.empty() ? "0" : out;
    }
    case RingSpec::Kind::product: {
      std::string out = "(";
      std::uint64_t rest = a;
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        const std::uint64_t ord = spec_order(s.factors[i]);
        if (i) out += ",";
        out += raw_format(s.factors[i], rest % ord);
        rest /= ord;
      }
      return out + ")";
    }
  }
  throw Error("bad ring spec");
}

} // namespace detail

inline std::string RingSpec::str() const {
  switch (kind) {
    case Kind::modular:
      return "Z" + std::to_string(modulus);
    case Kind::quotient: {
      std::string p;
      for (std::size_t i = poly.size(); i-- > 0;) {
        if (poly[i] == 0) continue;
        if (!p.empty()) p += "+";
        p += detail::poly_term(poly[i], i);
      }
      return "Z" + std::to_string(modulus) + "[x]/(" + p + ")";
    }
    case Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].str();
      }
      return out;
    }
  }
  throw Error("bad ring spec");
}

/// A built finite commutative ring. Cheap to copy (shared immutable state);
/// safe to share read-only across threads.
class Ring {
public:
  Ring() = default;

  explicit Ring(const RingSpec& spec, const Limits& limits = {}) {
    spec.validate();
    const std::uint64_t ord = detail::spec_order(spec);
    if (ord > limits.ring_order_cap)
      throw Error("ring order " + std::to_string(ord) + " exceeds enumeration cap " +
                  std::to_string(limits.ring_order_cap));
    auto rep = std::make_shared<Rep>();
    rep->spec = spec;
    rep->order = static_cast<std::size_t>(ord);
    rep->one = static_cast<std::uint32_t>(detail::raw_one(spec));
    rep->neg_tab.resize(rep->order);
    for (std::size_t a = 0; a < rep->order; ++a)
      rep->neg_tab[a] = static_cast<std::uint32_t>(detail::raw_neg(spec, a));
    rep->tabled = rep->order <= std::min<std::size_t>(limits.table_cap, 65535);
    if (rep->tabled) {
      rep->add_tab.resize(rep->order * rep->order);
      rep->mul_tab.resize(rep->order * rep->order);
      for (std::size_t a = 0; a < rep->order; ++a)
        for (std::size_t b = a; b < rep->order; ++b) {
          const auto s = static_cast<std::uint16_t>(detail::raw_add(spec, a, b));
          const auto p = static_cast<std::uint16_t>(detail::raw_mul(spec, a, b));
          rep->add_tab[a * rep->order + b] = s;
          rep->add_tab[b * rep->order + a] = s;
          rep->mul_tab[a * rep->order + b] = p;
          rep->mul_tab[b * rep->order + a] = p;
        }
    }
    rep_ = std::move(rep);
  }

  bool valid() const { return rep_ != nullptr; }
  const RingSpec& spec() const { return rep_->spec; }
  std::size_t order() const { return rep_->order; }
  std::string str() const { return rep_->spec.str(); }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{rep_->one}; }

  Elem element(std::uint64_t index) const {
    if (index >= rep_->order) throw Error("element index out of range");
    return Elem{static_cast<std::uint32_t>(index)};
  }

  bool contains(Elem e) const { return e.index < rep_->order; }

  // Two rings are "the same" only if they share representation. Carrier
  // indices are not transferable between independently built rings even
  // for identical specs.
  bool same_ring(const Ring& other) const { return rep_.get() == other.rep_.get(); }

  Elem add(Elem a, Elem b) const { return Elem{add_idx(a.index, b.index)}; }
  Elem mul(Elem a, Elem b) const { return Elem{mul_idx(a.index, b.index)}; }
  Elem neg(Elem a) const { return Elem{neg_idx(a.index)}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  // Raw index arithmetic for hot paths; indices must be in range.
  std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const {
    const Rep& r = *rep_;
    if (r.tabled) return r.add_tab[static_cast<std::size_t>(a) * r.order + b];
    return static_cast<std::uint32_t>(detail::raw_add(r.spec, a, b));
  }
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const {
    const Rep& r = *rep_;
    if (r.tabled) return r.mul_tab[static_cast<std::size_t>(a) * r.order + b];
    return static_cast<std::uint32_t>(detail::raw_mul(r.spec, a, b));
  }
  std::uint32_t neg_idx(std::uint32_t a) const { return rep_->neg_tab[a]; }

  bool is_zero(Elem e) const { return e.index == 0; }
  bool is_one(Elem e) const { return e.index == rep_->one; }

  /// True iff some nonzero x has e*x = 0. In a finite commutative ring the
  /// complement of the zero-divisor set is exactly the unit group.
  bool is_zero_divisor(Elem e) const { return zero_divisor_mask()[e.index] != 0; }
  bool is_unit(Elem e) const { return !is_zero_divisor(e); }

  const std::vector<std::uint8_t>& zero_divisor_mask() const {
    const Rep& r = *rep_;
    std::call_once(r.zd_once, [&r, this] {
      r.zd_mask.assign(r.order, 0);
      for (std::size_t a = 0; a < r.order; ++a)
        for (std::size_t x = 1; x < r.order; ++x)
          if (mul_idx(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(x)) == 0) {
            r.zd_mask[a] = 1;
            break;
          }
    });
    return r.zd_mask;
  }

  std::string format(Elem e) const {
    if (!contains(e)) throw Error("element index out of range");
    return detail::raw_format(rep_->spec, e.index);
  }

private:
  struct Rep {
    RingSpec spec;
    std::size_t order = 0;
    std::uint32_t one = 0;
    bool tabled = false;
    std::vector<std::uint16_t> add_tab, mul_tab;
    std::vector<std::uint32_t> neg_tab;
    mutable std::once_flag zd_once;
    mutable std::vector<std::uint8_t> zd_mask;
  };

  std::shared_ptr<const Rep> rep_;
};

inline Ring build_ring(const RingSpec& spec, const Limits& limits = {}) {
  return Ring(spec, limits);
}

/// An ideal stored as an explicit element set (membership tests are the hot
/// path). Immutable after construction.
class Ideal {
public:
  Ideal() = default;

  /// The members must already form an ideal; no closure is performed here.
  static Ideal from_members(Ring ring, std::vector<Elem> members, std::vector<Elem> generators) {
    Ideal I;
    I.ring_ = std::move(ring);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    I.mask_.assign(I.ring_.order(), 0);
    for (Elem e : members) I.mask_[e.index] = 1;
    I.members_ = std::move(members);
    I.generators_ = std::move(generators);
    return I;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Elem>& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t size() const { return members_.size(); }

  bool contains(Elem e) const { return e.index < mask_.size() && mask_[e.index] != 0; }
  bool is_proper() const { return !contains(ring_.one()); }
  bool is_zero() const { return members_.size() == 1; }

private:
  Ring ring_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<std::uint8_t> mask_;
};

/// Ann(a) = {x : a*x = 0}.
inline Ideal annihilator(const Ring& ring, Elem a) {
  if (!ring.contains(a)) throw Error("annihilator: element not in ring");
  std::vector<Elem> members;
  for (std::size_t x = 0; x < ring.order(); ++x)
    if (ring.mul_idx(a.index, static_cast<std::uint32_t>(x)) == 0)
      members.push_back(Elem{static_cast<std::uint32_t>(x)});
  return Ideal::from_members(ring, std::move(members), {});
}

/// All zero-divisors, ascending, 0 included.
inline std::vector<Elem> zero_divisors(const Ring& ring) {
  const auto& mask = ring.zero_divisor_mask();
  std::vector<Elem> out;
  for (std::size_t a = 0; a < mask.size(); ++a)
    if (mask[a]) out.push_back(Elem{static_cast<std::uint32_t>(a)});
  return out;
}

/// Smallest ideal containing the generators: fixed-point saturation under
/// addition and multiplication by arbitrary ring elements (negation is
/// multiplication by -1).
inline Ideal ideal_closure(const Ring& ring, const std::vector<Elem>& generators) {
  std::vector<std::uint8_t> in(ring.order(), 0);
  std::vector<std::uint32_t> list;
  std::vector<std::uint32_t> work;
  auto push = [&](std::uint32_t v) {
    if (!in[v]) {
      in[v] = 1;
      list.push_back(v);
      work.push_back(v);
    }
  };
  push(0);
  for (Elem g : generators) {
    if (!ring.contains(g)) throw Error("ideal_closure: generator not in ring");
    push(g.index);
  }
  while (!work.empty()) {
    const std::uint32_t e = work.back();
    work.pop_back();
    for (std::size_t r = 0; r < ring.order(); ++r)
      push(ring.mul_idx(static_cast<std::uint32_t>(r), e));
    for (std::size_t i = 0; i < list.size(); ++i)
      push(ring.add_idx(list[i], e));
  }
  std::vector<Elem> members;
  members.reserve(list.size());
  for (std::size_t a = 0; a < ring.order(); ++a)
    if (in[a]) members.push_back(Elem{static_cast<std::uint32_t>(a)});
  return Ideal::from_members(ring, std::move(members), generators);
}

/// True iff some x, y in I\{0} (x = y allowed) have x*y = 0.
inline bool ideal_has_zero_divisors(const Ideal& I) {
  const auto& m = I.members();
  const Ring& R = I.ring();
  for (Elem x : m) {
    if (x.index == 0) continue;
    for (Elem y : m) {
      if (y.index == 0) continue;
      if (R.mul_idx(x.index, y.index) == 0) return true;
    }
  }
  return false;
}

/// Intersection of two ideals of the same ring (again an ideal).
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_ring(b.ring())) throw Error("intersect: ideals of different rings");
  std::vector<Elem> members;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(members));
  return Ideal::from_members(a.ring(), std::move(members), {});
}

} // namespace ortho
