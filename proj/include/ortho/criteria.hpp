#pragma once

// Decidable predicates on a finite commutative ring R with nonzero
// zero-divisors, and a prediction engine that states diameter/radius facts
// about O(M_n(R)) for n >= 2 before any graph is built:
//
//   crit: every a0 in Z_R admits nonzero a1, a2 (equality allowed) with
//         a0*a1 = a0*a2 = a1*a2 = 0.  Holds iff the diameter is 3 (else 4).
//   cond: some nonzero c has Ann(c) meeting Ann(a) nontrivially for every
//         a in Z_R.  Holds iff the radius is 2.
//   bad annihilator: a nonzero zero-divisor a whose ideal Ann(a) contains
//         no zero-divisor pair.  Exists iff crit fails.
//
// All witnesses are picked first-in-carrier-order, so results are
// deterministic across runs.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ortho/ring.hpp"

namespace ortho {

struct CritResult {
  bool holds = false;
  std::optional<Elem> failing;  // set when !holds
  std::vector<std::pair<Elem, std::pair<Elem, Elem>>> witnesses;  // per a0, ascending
};

struct CondResult {
  bool holds = false;
  std::optional<Elem> witness;
};

namespace detail {

inline void require_zero_divisors(const Ring& R, const char* op) {
  bool any = false;
  const auto& zd = R.zero_divisor_mask();
  for (std::size_t a = 1; a < zd.size(); ++a)
    if (zd[a]) {
      any = true;
      break;
    }
  if (!any) throw Error(std::string(op) + ": ring has no nonzero zero-divisors");
}

} // namespace detail

inline CritResult crit_holds(const Ring& R) {
  detail::require_zero_divisors(R, "crit_holds");
  CritResult out;
  for (const Elem a0 : zero_divisors(R)) {
    std::optional<std::pair<Elem, Elem>> found;
    for (std::size_t a1 = 1; a1 < R.order() && !found; ++a1) {
      if (R.mul_idx(a0.index, static_cast<std::uint32_t>(a1)) != 0) continue;
      for (std::size_t a2 = 1; a2 < R.order(); ++a2) {
        if (R.mul_idx(a0.index, static_cast<std::uint32_t>(a2)) != 0) continue;
        if (R.mul_idx(static_cast<std::uint32_t>(a1), static_cast<std::uint32_t>(a2)) != 0)
          continue;
        found = {Elem{static_cast<std::uint32_t>(a1)}, Elem{static_cast<std::uint32_t>(a2)}};
        break;
      }
    }
    if (!found) {
      out.holds = false;
      out.failing = a0;
      out.witnesses.clear();
      return out;
    }
    out.witnesses.emplace_back(a0, *found);
  }
  out.holds = true;
  return out;
}

inline CondResult cond_holds(const Ring& R) {
  detail::require_zero_divisors(R, "cond_holds");
  const std::vector<Elem> zd = zero_divisors(R);
  for (std::size_t c = 1; c < R.order(); ++c) {
    bool ok = true;
    for (const Elem a : zd) {
      bool meet = false;
      for (std::size_t x = 1; x < R.order(); ++x)
        if (R.mul_idx(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(x)) == 0 &&
            R.mul_idx(a.index, static_cast<std::uint32_t>(x)) == 0) {
          meet = true;
          break;
        }
      if (!meet) {
        ok = false;
        break;
      }
    }
    if (ok) return CondResult{true, Elem{static_cast<std::uint32_t>(c)}};
  }
  return CondResult{false, std::nullopt};
}

/// First nonzero zero-divisor a (carrier order) whose annihilator ideal has
/// no zero-divisors, or nothing. Zero never qualifies: Ann(0) = R contains
/// a vanishing product whenever Z_R is nontrivial.
inline std::optional<Elem> find_annihilator_without_zero_divisors(const Ring& R) {
  detail::require_zero_divisors(R, "find_annihilator_without_zero_divisors");
  for (const Elem a : zero_divisors(R)) {
    if (a.index == 0) continue;
    if (!ideal_has_zero_divisors(annihilator(R, a))) return a;
  }
  return std::nullopt;
}

struct PredictionReport {
  std::string ring;
  std::size_t n = 0;
  CritResult crit;
  CondResult cond;
  std::optional<Elem> bad_annihilator;
  int predicted_diameter = 0;            // 3 or 4; independent of n
  std::vector<int> predicted_radius;     // {2}, {3}, or {3, 4}
};

inline PredictionReport predict(const Ring& R, std::size_t n) {
  if (n < 2) throw Error("predict: n must be >= 2");
  PredictionReport rep;
  rep.ring = R.str();
  rep.n = n;
  rep.crit = crit_holds(R);
  rep.cond = cond_holds(R);
  rep.bad_annihilator = find_annihilator_without_zero_divisors(R);
  rep.predicted_diameter = rep.crit.holds ? 3 : 4;
  if (rep.cond.holds)
    rep.predicted_radius = {2};
  else if (rep.crit.holds)
    rep.predicted_radius = {3};
  else
    rep.predicted_radius = {3, 4};
  return rep;
}

} // namespace ortho
