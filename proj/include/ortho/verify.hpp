#pragma once

// Theorem-checking suites over a concrete ring and matrix size. Each suite
// verifies one statement exhaustively at the given scale and reports
// pass/fail with a short detail line. The CLI `verify` command and the
// acceptance tests are both built on these.
//
// The zero-divisor side of the equivalence suite is a deliberate brute
// force (scan all candidate B), independent of the determinant route it is
// checking.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ortho/criteria.hpp"
#include "ortho/graph.hpp"
#include "ortho/witness.hpp"

namespace ortho {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

// Enumerate every n x n matrix over R by code; fn gets the entry buffer.
template <class F>
void for_each_candidate(const Ring& R, std::size_t n, std::uint64_t candidates, F&& fn) {
  std::vector<std::uint32_t> ent(n * n);
  for (std::uint64_t code = 0; code < candidates; ++code) {
    std::uint64_t v = code;
    for (std::size_t p = ent.size(); p-- > 0;) {
      ent[p] = static_cast<std::uint32_t>(v % R.order());
      v /= R.order();
    }
    fn(ent);
  }
}

inline std::uint64_t candidate_count(const Ring& R, std::size_t n, const Limits& limits) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    c = mul_guard(c, R.order());
    if (c > limits.candidate_cap) throw Error("verify: candidate count exceeds cap");
  }
  return c;
}

inline Matrix matrix_from_entries(const Ring& R, std::size_t n,
                                  const std::vector<std::uint32_t>& ent) {
  Matrix m(R, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Elem{ent[i * n + j]});
  return m;
}

} // namespace detail

/// det(A) is a zero-divisor <=> some nonzero B has AB = BA = 0, checked for
/// every A by brute force over all candidate B.
inline CheckResult verify_equivalence(const Ring& R, std::size_t n, const Limits& limits = {}) {
  const std::uint64_t cand = detail::candidate_count(R, n, limits);
  const auto& zd = R.zero_divisor_mask();
  std::uint64_t mismatches = 0, checked = 0;
  std::vector<std::uint32_t> scratch;
  std::vector<std::uint32_t> b(n * n);
  detail::for_each_candidate(R, n, cand, [&](const std::vector<std::uint32_t>& a) {
    const bool det_zd = zd[detail::det_raw(R, a.data(), n, scratch)] != 0;
    bool found = false;
    for (std::uint64_t w = 1; w < cand && !found; ++w) {
      std::uint64_t v = w;
      for (std::size_t p = b.size(); p-- > 0;) {
        b[p] = static_cast<std::uint32_t>(v % R.order());
        v /= R.order();
      }
      bool ortho = true;
      for (std::size_t i = 0; i < n && ortho; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::uint32_t ab = 0, ba = 0;
          for (std::size_t k = 0; k < n; ++k) {
            ab = R.add_idx(ab, R.mul_idx(a[i * n + k], b[k * n + j]));
            ba = R.add_idx(ba, R.mul_idx(b[i * n + k], a[k * n + j]));
          }
          if (ab != 0 || ba != 0) {
            ortho = false;
            break;
          }
        }
      found = ortho;
    }
    if (det_zd != found) ++mismatches;
    ++checked;
  });
  return CheckResult{"equivalence", mismatches == 0,
                     "zero-divisor criterion vs brute force over " + std::to_string(checked) +
                         " matrices in M_" + std::to_string(n) + "(" + R.str() + "), " +
                         std::to_string(mismatches) + " mismatches"};
}

/// Annihilating-complement contract: for every A with det(A) a zero-divisor
/// and every ideal I = Ann(c) with c nonzero annihilating det(A), the
/// returned B satisfies B not in M_n(I), AB in M_n(I), BA in M_n(I).
inline CheckResult verify_complement_contract(const Ring& R, std::size_t n,
                                              const Limits& limits = {}) {
  const std::uint64_t cand = detail::candidate_count(R, n, limits);
  std::uint64_t cases = 0, failures = 0;
  std::vector<std::uint32_t> scratch;
  detail::for_each_candidate(R, n, cand, [&](const std::vector<std::uint32_t>& ent) {
    const Elem det{detail::det_raw(R, ent.data(), n, scratch)};
    if (!R.is_zero_divisor(det)) return;
    const Matrix A = detail::matrix_from_entries(R, n, ent);
    const Ideal ann_det = annihilator(R, det);
    for (const Elem c : ann_det.members()) {
      if (c.index == 0) continue;
      const Ideal I = annihilator(R, c);
      const Matrix B = annihilating_complement(A, I);
      ++cases;
      if (in_matrix_ideal(B, I) || !in_matrix_ideal(A * B, I) || !in_matrix_ideal(B * A, I))
        ++failures;
    }
  });
  return CheckResult{"complement", failures == 0,
                     std::to_string(cases) + " (matrix, ideal) cases in M_" + std::to_string(n) +
                         "(" + R.str() + "), " + std::to_string(failures) + " contract failures"};
}

/// Every vertex lies at distance <= 2 from some scalar vertex, and the
/// constructive path reaches one within that bound.
inline CheckResult verify_scalar_distance(const Graph& graph) {
  std::uint64_t failures = 0, count = 0;
  graph.for_each_vertex([&](const Matrix& A) {
    ++count;
    bool ok = graph.distance_to_scalars(A) <= 2;
    if (ok) {
      const OrthoPath path = path_to_scalar(A);
      const Matrix& last = path.vertices.back();
      ok = path.length() <= 2 && path.vertices.front() == A &&
           last == scalar_matrix(last.ring(), last.at(0, 0), last.rows());
    }
    if (!ok) ++failures;
  });
  return CheckResult{"scalar-distance", failures == 0,
                     std::to_string(count) + " vertices checked, " + std::to_string(failures) +
                         " beyond distance 2 from the scalar vertices"};
}

/// Measured diameter matches the prediction (3 or 4) and the graph is
/// connected.
inline CheckResult verify_diameter(const PredictionReport& pred, const GraphReport& measured) {
  const bool ok = measured.connected && measured.diameter &&
                  static_cast<int>(*measured.diameter) == pred.predicted_diameter;
  std::string detail = "predicted " + std::to_string(pred.predicted_diameter) + ", measured ";
  detail += measured.diameter ? std::to_string(*measured.diameter) : std::string("infinite");
  detail += measured.connected ? ", connected" : ", disconnected";
  return CheckResult{"diameter", ok, detail};
}

/// Radius facts: 2 <= r <= 4; r in the predicted set; r = 2 exactly when
/// cond holds; crit forces r in {2, 3}.
inline CheckResult verify_radius(const PredictionReport& pred, const GraphReport& measured) {
  bool ok = measured.radius.has_value();
  std::string detail;
  if (ok) {
    const auto r = static_cast<int>(*measured.radius);
    ok = r >= 2 && r <= 4;
    ok = ok && std::find(pred.predicted_radius.begin(), pred.predicted_radius.end(), r) !=
                   pred.predicted_radius.end();
    ok = ok && ((r == 2) == pred.cond.holds);
    if (pred.crit.holds) ok = ok && (r == 2 || r == 3);
    detail = "measured " + std::to_string(r) + ", predicted {";
    for (std::size_t i = 0; i < pred.predicted_radius.size(); ++i)
      detail += (i ? "," : "") + std::to_string(pred.predicted_radius[i]);
    detail += "}";
  } else {
    detail = "radius infinite";
  }
  return CheckResult{"radius", ok, detail};
}

/// rad <= diam <= 2*rad whenever both are finite.
inline CheckResult verify_radius_diameter_bound(const GraphReport& rep) {
  if (!rep.diameter || !rep.radius)
    return CheckResult{"radius-diameter-bound", true, "not applicable (infinite or empty)"};
  const std::size_t d = *rep.diameter, r = *rep.radius;
  const bool ok = r <= d && d <= 2 * r;
  return CheckResult{"radius-diameter-bound", ok,
                     "radius " + std::to_string(r) + ", diameter " + std::to_string(d)};
}

/// Runs the named suite ("equivalence", "complement", "scalar", "diameter",
/// "radius", "bound", or "all") for the given ring and size.
inline std::vector<CheckResult> run_suite(const Ring& R, std::size_t n, const std::string& suite,
                                          const Limits& limits = {}) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  std::optional<PredictionReport> pred;
  std::optional<GraphReport> measured;
  auto need_pred = [&]() -> const PredictionReport& {
    if (!pred) pred = predict(R, n);
    return *pred;
  };
  auto need_measured = [&]() -> const GraphReport& {
    if (!measured) measured = Graph(R, n, limits).analyze();
    return *measured;
  };
  bool known = false;
  if (all || suite == "equivalence") {
    out.push_back(verify_equivalence(R, n, limits));
    known = true;
  }
  if (all || suite == "complement") {
    out.push_back(verify_complement_contract(R, n, limits));
    known = true;
  }
  if (all || suite == "scalar") {
    out.push_back(verify_scalar_distance(Graph(R, n, limits)));
    known = true;
  }
  if (all || suite == "diameter") {
    out.push_back(verify_diameter(need_pred(), need_measured()));
    known = true;
  }
  if (all || suite == "radius") {
    out.push_back(verify_radius(need_pred(), need_measured()));
    known = true;
  }
  if (all || suite == "bound") {
    out.push_back(verify_radius_diameter_bound(need_measured()));
    known = true;
  }
  if (!known)
    throw Error("unknown suite '" + suite +
                "' (expected equivalence|complement|scalar|diameter|radius|bound|all)");
  return out;
}

} // namespace ortho
