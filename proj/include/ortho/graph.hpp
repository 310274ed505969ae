#pragma once

// Brute-force analytics of the orthogonality graph O(M_n(R)): vertices are
// the nonzero matrices whose determinant is a zero-divisor, edges join
// distinct A, B with AB = BA = 0. Handles n = 1 (the classical zero-divisor
// graph of R) uniformly.
//
// Vertices are ordered by the row-major base-|R| encoding of their entry
// indices; the public vertex id is the rank in that order.
//
// Unit scaling A -> uA is neighborhood-preserving (O(uA) = O(A) exactly),
// so vertices fall into twin classes with identical adjacency. Distances
// between different classes equal quotient-graph distances, and distances
// inside a class are 1 (when A^2 = 0) or 2 (through any neighbor). The
// all-sources sweep runs on the quotient, which keeps eccentricities exact
// while shrinking the work by roughly the unit-group order squared.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ortho/matrix.hpp"
#include "ortho/ring.hpp"

namespace ortho {

struct GraphReport {
  std::string ring;
  std::size_t n = 0;
  std::size_t vertex_count = 0;
  bool connected = true;
  std::optional<std::size_t> diameter;  // nullopt: infinite (or empty graph)
  std::optional<std::size_t> radius;
  std::optional<std::pair<std::string, std::string>> diameter_witness;
  std::optional<std::string> center_witness;
  // (eccentricity, vertex count), ascending; componentwise when disconnected
  std::vector<std::pair<std::size_t, std::size_t>> eccentricity_histogram;
  std::size_t component_count = 0;
  std::vector<std::size_t> component_diameters;  // ascending by smallest vertex
};

class Graph {
public:
  Graph(Ring ring, std::size_t n, Limits limits = {})
      : ring_(std::move(ring)), n_(n), limits_(limits) {
    if (n_ == 0) throw Error("graph: n must be >= 1");
    const std::uint64_t order = ring_.order();
    candidates_ = 1;
    for (std::size_t i = 0; i < n_ * n_; ++i) {
      candidates_ = detail::mul_guard(candidates_, order);
      if (candidates_ > limits_.candidate_cap)
        throw Error("graph: candidate matrix count exceeds cap " +
                    std::to_string(limits_.candidate_cap));
    }
    vec_space_ = 1;
    for (std::size_t i = 0; i < n_; ++i) vec_space_ *= order;

    const auto& zd = ring_.zero_divisor_mask();
    class_of_.assign(static_cast<std::size_t>(candidates_), -1);
    std::vector<std::uint32_t> ent(n_ * n_), scratch;
    for (std::uint64_t code = 1; code < candidates_; ++code) {
      decode(code, ent);
      if (zd[detail::det_raw(ring_, ent.data(), n_, scratch)]) vertex_codes_.push_back(code);
    }
    std::vector<std::uint32_t> units;
    for (std::size_t u = 0; u < ring_.order(); ++u)
      if (!zd[u]) units.push_back(static_cast<std::uint32_t>(u));
    std::vector<std::uint32_t> scaled(n_ * n_);
    for (const std::uint64_t code : vertex_codes_) {
      if (class_of_[static_cast<std::size_t>(code)] >= 0) continue;
      const auto cid = static_cast<std::int32_t>(classes_.size());
      decode(code, ent);
      std::uint32_t size = 0;
      for (const std::uint32_t u : units) {
        for (std::size_t i = 0; i < ent.size(); ++i) scaled[i] = ring_.mul_idx(u, ent[i]);
        auto& slot = class_of_[static_cast<std::size_t>(encode(scaled))];
        if (slot < 0) {
          slot = cid;
          ++size;
        }
      }
      classes_.push_back(ClassInfo{code, size, square_is_zero(ent)});
    }
  }

  const Ring& ring() const { return ring_; }
  std::size_t n() const { return n_; }
  std::uint64_t candidate_count() const { return candidates_; }
  std::size_t vertex_count() const { return vertex_codes_.size(); }

  bool is_vertex(const Matrix& A) const {
    return A.ring().same_ring(ring_) && A.rows() == n_ && A.cols() == n_ && !A.is_zero() &&
           is_zero_divisor_matrix(A);
  }

  /// Rank of the vertex in row-major encoding order.
  std::size_t vertex_id(const Matrix& A) const {
    const std::uint64_t code = code_of(A, "vertex_id");
    const auto it = std::lower_bound(vertex_codes_.begin(), vertex_codes_.end(), code);
    return static_cast<std::size_t>(it - vertex_codes_.begin());
  }

  Matrix vertex(std::size_t id) const {
    if (id >= vertex_codes_.size()) throw Error("vertex: id out of range");
    return matrix_of(vertex_codes_[id]);
  }

  template <class F>
  void for_each_vertex(F&& fn) const {
    for (const std::uint64_t code : vertex_codes_) fn(matrix_of(code));
  }

  /// All vertices orthogonal to A, ascending by vertex id. Any nonzero B
  /// orthogonal to a nonzero A is automatically a zero-divisor matrix.
  std::vector<Matrix> neighbors(const Matrix& A) const {
    const std::uint64_t code = code_of(A, "neighbors");
    std::vector<std::uint32_t> ent(n_ * n_);
    decode(code, ent);
    std::vector<Matrix> out;
    for (const std::uint64_t w : neighbor_codes(ent, code)) out.push_back(matrix_of(w));
    return out;
  }

  std::optional<std::size_t> distance(const Matrix& A, const Matrix& B) const {
    const std::uint64_t ca = code_of(A, "distance");
    const std::uint64_t cb = code_of(B, "distance");
    if (ca == cb) return std::size_t{0};
    const auto ka = static_cast<std::uint32_t>(class_of_[static_cast<std::size_t>(ca)]);
    const auto kb = static_cast<std::uint32_t>(class_of_[static_cast<std::size_t>(cb)]);
    if (ka == kb) return intra_class_distance(ka);
    return class_distance(ka, kb);
  }

  /// min over nonzero zero-divisors b of d(A, bE).
  std::size_t distance_to_scalars(const Matrix& A) const {
    const std::uint64_t code = code_of(A, "distance_to_scalars");
    std::vector<std::uint8_t> target(classes_.size(), 0);
    bool any = false;
    std::vector<std::uint32_t> ent(n_ * n_);
    for (std::size_t b = 1; b < ring_.order(); ++b) {
      if (!ring_.is_zero_divisor(Elem{static_cast<std::uint32_t>(b)})) continue;
      std::fill(ent.begin(), ent.end(), 0);
      for (std::size_t i = 0; i < n_; ++i) ent[i * n_ + i] = static_cast<std::uint32_t>(b);
      target[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(encode(ent))])] = 1;
      any = true;
    }
    if (!any) throw Error("distance_to_scalars: the graph has no scalar vertices");
    decode(code, ent);
    bool scalar = true;
    for (std::size_t i = 0; i < n_ && scalar; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (ent[i * n_ + j] != (i == j ? ent[0] : 0)) {
          scalar = false;
          break;
        }
    if (scalar) return 0;
    const auto src = static_cast<std::uint32_t>(class_of_[static_cast<std::size_t>(code)]);
    const auto d = bfs_to_target(src, target);
    if (!d) throw Error("distance_to_scalars: no scalar vertex reachable");
    return *d;
  }

  GraphReport analyze() const;

  std::string export_dot() const;
  std::string export_json() const;

private:
  struct ClassInfo {
    std::uint64_t rep;      // smallest member code
    std::uint32_t size;
    bool sq_zero;           // members are pairwise orthogonal iff true
  };

  Ring ring_;
  std::size_t n_;
  Limits limits_;
  std::uint64_t candidates_ = 0;
  std::uint64_t vec_space_ = 0;
  std::vector<std::uint64_t> vertex_codes_;      // ascending
  std::vector<std::int32_t> class_of_;           // code -> class id, -1 if not a vertex
  std::vector<ClassInfo> classes_;               // ascending by rep
  mutable std::once_flag adj_once_;
  mutable bool adj_cached_ = false;
  mutable std::vector<std::vector<std::uint32_t>> adj_;  // quotient adjacency, no self

  std::uint64_t encode(const std::vector<std::uint32_t>& ent) const {
    std::uint64_t v = 0;
    for (const std::uint32_t e : ent) v = v * ring_.order() + e;
    return v;
  }

  void decode(std::uint64_t code, std::vector<std::uint32_t>& ent) const {
    for (std::size_t p = ent.size(); p-- > 0;) {
      ent[p] = static_cast<std::uint32_t>(code % ring_.order());
      code /= ring_.order();
    }
  }

  Matrix matrix_of(std::uint64_t code) const {
    std::vector<std::uint32_t> ent(n_ * n_);
    decode(code, ent);
    Matrix m(ring_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.set(i, j, Elem{ent[i * n_ + j]});
    return m;
  }

  std::uint64_t code_of(const Matrix& A, const char* op) const {
    if (!is_vertex(A)) throw Error(std::string(op) + ": matrix is not a vertex of this graph");
    std::uint64_t v = 0;
    for (const Elem e : A.entries()) v = v * ring_.order() + e.index;
    return v;
  }

  bool square_is_zero(const std::vector<std::uint32_t>& a) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < n_; ++k)
          acc = ring_.add_idx(acc, ring_.mul_idx(a[i * n_ + k], a[k * n_ + j]));
        if (acc != 0) return false;
      }
    return true;
  }

  // All codes of nonzero B != A with AB = BA = 0. Columns of B must lie in
  // the right kernel of A and rows in the left kernel, so candidates are
  // generated from kernel vectors; a full candidate scan is the fallback
  // when the combination space would be larger than the candidate space.
  std::vector<std::uint64_t> neighbor_codes(const std::vector<std::uint32_t>& a,
                                            std::uint64_t a_code) const {
    std::vector<std::uint64_t> out;
    std::vector<std::uint32_t> x(n_);
    std::vector<std::vector<std::uint32_t>> rker;
    std::vector<std::uint8_t> lker(static_cast<std::size_t>(vec_space_), 0);
    for (std::uint64_t v = 0; v < vec_space_; ++v) {
      std::uint64_t t = v;
      for (std::size_t p = n_; p-- > 0;) {
        x[p] = static_cast<std::uint32_t>(t % ring_.order());
        t /= ring_.order();
      }
      bool right = true, left = true;
      for (std::size_t i = 0; i < n_ && (right || left); ++i) {
        std::uint32_t accR = 0, accL = 0;
        for (std::size_t k = 0; k < n_; ++k) {
          accR = ring_.add_idx(accR, ring_.mul_idx(a[i * n_ + k], x[k]));
          accL = ring_.add_idx(accL, ring_.mul_idx(x[k], a[k * n_ + i]));
        }
        if (accR != 0) right = false;
        if (accL != 0) left = false;
      }
      if (right) rker.push_back(x);
      if (left) lker[static_cast<std::size_t>(v)] = 1;
    }
    // |rker|^n column choices vs full candidate scan
    double combos = 1;
    for (std::size_t j = 0; j < n_; ++j) combos *= static_cast<double>(rker.size());
    if (combos > static_cast<double>(candidates_)) {
      std::vector<std::uint32_t> b(n_ * n_);
      for (std::uint64_t w = 1; w < candidates_; ++w) {
        if (w == a_code) continue;
        decode(w, b);
        if (raw_orthogonal(a, b)) out.push_back(w);
      }
      return out;
    }
    std::vector<std::size_t> idx(n_, 0);
    std::vector<std::uint32_t> b(n_ * n_);
    if (rker.empty()) return out;
    while (true) {
      bool nonzero = false;
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& col = rker[idx[j]];
        for (std::size_t i = 0; i < n_; ++i) {
          b[i * n_ + j] = col[i];
          if (col[i] != 0) nonzero = true;
        }
      }
      if (nonzero) {
        bool rows_ok = true;
        for (std::size_t i = 0; i < n_ && rows_ok; ++i) {
          std::uint64_t rc = 0;
          for (std::size_t j = 0; j < n_; ++j) rc = rc * ring_.order() + b[i * n_ + j];
          rows_ok = lker[static_cast<std::size_t>(rc)] != 0;
        }
        if (rows_ok) {
          const std::uint64_t w = encode(b);
          if (w != a_code) out.push_back(w);
        }
      }
      std::size_t p = n_;
      while (p-- > 0) {
        if (++idx[p] < rker.size()) break;
        idx[p] = 0;
        if (p == 0) {
          std::sort(out.begin(), out.end());
          return out;
        }
      }
    }
  }

  bool raw_orthogonal(const std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint32_t ab = 0, ba = 0;
        for (std::size_t k = 0; k < n_; ++k) {
          ab = ring_.add_idx(ab, ring_.mul_idx(a[i * n_ + k], b[k * n_ + j]));
          ba = ring_.add_idx(ba, ring_.mul_idx(b[i * n_ + k], a[k * n_ + j]));
        }
        if (ab != 0 || ba != 0) return false;
      }
    return true;
  }

  std::vector<std::uint32_t> class_neighbors_uncached(std::uint32_t cid) const {
    std::vector<std::uint32_t> ent(n_ * n_);
    decode(classes_[cid].rep, ent);
    std::vector<std::uint32_t> ids;
    for (const std::uint64_t w : neighbor_codes(ent, classes_[cid].rep)) {
      const auto k = static_cast<std::uint32_t>(class_of_[static_cast<std::size_t>(w)]);
      if (k != cid) ids.push_back(k);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  void ensure_adjacency() const {
    std::call_once(adj_once_, [this] {
      if (classes_.size() > limits_.adjacency_cache_cap) return;
      adj_.resize(classes_.size());
      for (std::uint32_t cid = 0; cid < classes_.size(); ++cid)
        adj_[cid] = class_neighbors_uncached(cid);
      adj_cached_ = true;
    });
  }

  const std::vector<std::uint32_t>& class_neighbors(std::uint32_t cid,
                                                    std::vector<std::uint32_t>& scratch) const {
    if (adj_cached_) return adj_[cid];
    scratch = class_neighbors_uncached(cid);
    return scratch;
  }

  bool class_has_neighbors(std::uint32_t cid) const {
    ensure_adjacency();
    std::vector<std::uint32_t> scratch;
    return !class_neighbors(cid, scratch).empty();
  }

  // Distance between distinct members of one class: 1 when A^2 = 0, else 2
  // through any neighbor (neighborhoods of twins coincide and exclude the
  // class itself unless A^2 = 0).
  std::optional<std::size_t> intra_class_distance(std::uint32_t cid) const {
    if (classes_[cid].sq_zero) return std::size_t{1};
    if (class_has_neighbors(cid)) return std::size_t{2};
    return std::nullopt;
  }

  std::optional<std::size_t> class_distance(std::uint32_t from, std::uint32_t to) const {
    ensure_adjacency();
    std::vector<std::int32_t> dist(classes_.size(), -1);
    std::deque<std::uint32_t> q;
    std::vector<std::uint32_t> scratch;
    dist[from] = 0;
    q.push_back(from);
    while (!q.empty()) {
      const std::uint32_t u = q.front();
      q.pop_front();
      if (u == to) return static_cast<std::size_t>(dist[u]);
      for (const std::uint32_t w : class_neighbors(u, scratch))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> bfs_to_target(std::uint32_t from,
                                           const std::vector<std::uint8_t>& target) const {
    ensure_adjacency();
    if (target[from]) return std::size_t{0};
    std::vector<std::int32_t> dist(classes_.size(), -1);
    std::deque<std::uint32_t> q;
    std::vector<std::uint32_t> scratch;
    dist[from] = 0;
    q.push_back(from);
    while (!q.empty()) {
      const std::uint32_t u = q.front();
      q.pop_front();
      for (const std::uint32_t w : class_neighbors(u, scratch)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[u] + 1;
        if (target[w]) return static_cast<std::size_t>(dist[w]);
        q.push_back(w);
      }
    }
    return std::nullopt;
  }

  std::vector<std::uint64_t> class_members(std::uint32_t cid) const {
    std::vector<std::uint32_t> ent(n_ * n_), scaled(n_ * n_);
    decode(classes_[cid].rep, ent);
    std::vector<std::uint64_t> members;
    for (std::size_t u = 0; u < ring_.order(); ++u) {
      if (ring_.is_zero_divisor(Elem{static_cast<std::uint32_t>(u)})) continue;
      for (std::size_t i = 0; i < ent.size(); ++i)
        scaled[i] = ring_.mul_idx(static_cast<std::uint32_t>(u), ent[i]);
      members.push_back(encode(scaled));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
  }
};

inline GraphReport Graph::analyze() const {
  GraphReport rep;
  rep.ring = ring_.str();
  rep.n = n_;
  rep.vertex_count = vertex_codes_.size();
  if (vertex_codes_.empty()) return rep;

  ensure_adjacency();
  const std::size_t C = classes_.size();

  // quotient components, discovered in ascending class-id order
  std::vector<std::int32_t> comp_of(C, -1);
  std::vector<std::vector<std::uint32_t>> comps;
  std::vector<std::uint32_t> nscratch;
  for (std::uint32_t c = 0; c < C; ++c) {
    if (comp_of[c] >= 0) continue;
    const auto id = static_cast<std::int32_t>(comps.size());
    std::vector<std::uint32_t> members;
    std::deque<std::uint32_t> q{c};
    comp_of[c] = id;
    while (!q.empty()) {
      const std::uint32_t u = q.front();
      q.pop_front();
      members.push_back(u);
      for (const std::uint32_t w : class_neighbors(u, nscratch))
        if (comp_of[w] < 0) {
          comp_of[w] = id;
          q.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }

  // all-sources eccentricities on the quotient
  std::vector<std::int64_t> ecc_q(C, 0);
  const unsigned T = std::max(1u, limits_.threads);
  auto sweep = [&](unsigned t) {
    std::vector<std::int32_t> dist(C, -1);
    std::deque<std::uint32_t> q;
    std::vector<std::uint32_t> scratch;
    for (std::uint32_t src = t; src < C; src += T) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[src] = 0;
      q.push_back(src);
      std::int64_t maxd = 0;
      while (!q.empty()) {
        const std::uint32_t u = q.front();
        q.pop_front();
        for (const std::uint32_t w : class_neighbors(u, scratch))
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            if (dist[w] > maxd) maxd = dist[w];
            q.push_back(w);
          }
      }
      ecc_q[src] = maxd;
    }
  };
  if (T == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T; ++t) pool.emplace_back(sweep, t);
    for (auto& th : pool) th.join();
  }

  // expand to vertex-level components and eccentricities
  std::vector<std::int64_t> ecc_class(C, -1);  // -1: class splits into isolated vertices
  std::size_t vertex_components = 0;
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      const std::uint32_t c = comp.front();
      const ClassInfo& K = classes_[c];
      if (K.size == 1) {
        vertex_components += 1;
        ecc_class[c] = 0;
        rep.component_diameters.push_back(0);
      } else if (K.sq_zero) {
        vertex_components += 1;  // clique on the class
        ecc_class[c] = 1;
        rep.component_diameters.push_back(1);
      } else {
        vertex_components += K.size;  // isolated twins
        for (std::uint32_t i = 0; i < K.size; ++i) rep.component_diameters.push_back(0);
      }
    } else {
      vertex_components += 1;
      std::int64_t diam = 0;
      for (const std::uint32_t c : comp) {
        std::int64_t e = ecc_q[c];
        if (classes_[c].size >= 2) {
          const std::int64_t intra = classes_[c].sq_zero ? 1 : 2;
          if (intra > e) e = intra;
        }
        ecc_class[c] = e;
        if (e > diam) diam = e;
      }
      rep.component_diameters.push_back(static_cast<std::size_t>(diam));
    }
  }
  rep.component_count = vertex_components;
  rep.connected = vertex_components == 1;

  std::vector<std::pair<std::size_t, std::size_t>> hist;
  auto bump = [&hist](std::size_t ecc, std::size_t count) {
    for (auto& [e, c] : hist)
      if (e == ecc) {
        c += count;
        return;
      }
    hist.emplace_back(ecc, count);
  };
  for (std::uint32_t c = 0; c < C; ++c) {
    if (ecc_class[c] < 0)
      bump(0, classes_[c].size);
    else
      bump(static_cast<std::size_t>(ecc_class[c]), classes_[c].size);
  }
  std::sort(hist.begin(), hist.end());
  rep.eccentricity_histogram = std::move(hist);

  if (rep.connected) {
    std::int64_t diam = 0, rad = INT64_MAX;
    for (std::uint32_t c = 0; c < C; ++c) {
      const std::int64_t e = ecc_class[c] < 0 ? 0 : ecc_class[c];
      if (e > diam) diam = e;
      if (e < rad) rad = e;
    }
    rep.diameter = static_cast<std::size_t>(diam);
    rep.radius = static_cast<std::size_t>(rad);
    // witnesses: smallest class attaining the bound, then the smallest
    // partner that realizes it
    std::uint32_t dc = 0, rc = 0;
    for (std::uint32_t c = 0; c < C; ++c)
      if ((ecc_class[c] < 0 ? 0 : ecc_class[c]) == diam) {
        dc = c;
        break;
      }
    for (std::uint32_t c = 0; c < C; ++c)
      if ((ecc_class[c] < 0 ? 0 : ecc_class[c]) == rad) {
        rc = c;
        break;
      }
    rep.center_witness = format_matrix(matrix_of(classes_[rc].rep));
    std::uint64_t far_code = classes_[dc].rep;
    if (diam == 0) {
      // single-vertex graph
    } else if (ecc_q[dc] == diam) {
      std::vector<std::int32_t> dist(C, -1);
      std::deque<std::uint32_t> q{dc};
      std::vector<std::uint32_t> scratch;
      dist[dc] = 0;
      while (!q.empty()) {
        const std::uint32_t u = q.front();
        q.pop_front();
        for (const std::uint32_t w : class_neighbors(u, scratch))
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            q.push_back(w);
          }
      }
      for (std::uint32_t c = 0; c < C; ++c)
        if (dist[c] == diam) {
          far_code = classes_[c].rep;
          break;
        }
    } else {
      far_code = class_members(dc)[1];  // intra-class pair realizes it
    }
    rep.diameter_witness = {format_matrix(matrix_of(classes_[dc].rep)),
                            format_matrix(matrix_of(far_code))};
  }
  return rep;
}

inline std::string Graph::export_dot() const {
  if (vertex_codes_.size() > limits_.export_cap)
    throw Error("export: vertex count exceeds cap " + std::to_string(limits_.export_cap));
  std::string out = "graph orthogonality {\n";
  std::vector<std::uint32_t> ent(n_ * n_);
  for (std::size_t id = 0; id < vertex_codes_.size(); ++id)
    out += "  v" + std::to_string(id) + " [label=\"" + format_matrix(matrix_of(vertex_codes_[id])) +
           "\"];\n";
  for (std::size_t id = 0; id < vertex_codes_.size(); ++id) {
    decode(vertex_codes_[id], ent);
    for (const std::uint64_t w : neighbor_codes(ent, vertex_codes_[id])) {
      const auto it = std::lower_bound(vertex_codes_.begin(), vertex_codes_.end(), w);
      const auto other = static_cast<std::size_t>(it - vertex_codes_.begin());
      if (other > id)
        out += "  v" + std::to_string(id) + " -- v" + std::to_string(other) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

inline std::string Graph::export_json() const {
  if (vertex_codes_.size() > limits_.export_cap)
    throw Error("export: vertex count exceeds cap " + std::to_string(limits_.export_cap));
  nlohmann::ordered_json doc;
  doc["ring"] = ring_.str();
  doc["n"] = n_;
  auto verts = nlohmann::ordered_json::array();
  for (const std::uint64_t code : vertex_codes_) verts.push_back(format_matrix(matrix_of(code)));
  doc["vertices"] = std::move(verts);
  auto edges = nlohmann::ordered_json::array();
  std::vector<std::uint32_t> ent(n_ * n_);
  for (std::size_t id = 0; id < vertex_codes_.size(); ++id) {
    decode(vertex_codes_[id], ent);
    for (const std::uint64_t w : neighbor_codes(ent, vertex_codes_[id])) {
      const auto it = std::lower_bound(vertex_codes_.begin(), vertex_codes_.end(), w);
      const auto other = static_cast<std::size_t>(it - vertex_codes_.begin());
      if (other > id) edges.push_back(nlohmann::ordered_json::array({id, other}));
    }
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

} // namespace ortho
