#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/errors.hpp"
#include "srlab/field.hpp"
#include "srlab/homology.hpp"

namespace srlab {

using Polynomial = std::vector<std::int64_t>;

namespace poly {

inline void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Polynomial add(Polynomial a, const Polynomial& b, std::int64_t scale = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  trim(a);
  return a;
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

/// t^shift * (1 - t)^power.
inline Polynomial shifted_one_minus_t(int shift, int power) {
  Polynomial out(static_cast<std::size_t>(shift + power + 1), 0);
  for (int k = 0; k <= power; ++k) out[static_cast<std::size_t>(shift + k)] = (k % 2 == 0 ? 1 : -1) * binomial(power, k);
  return out;
}

}  // namespace poly

/// N(t) / (1 - t)^denom_power; the canonical form uses the ground-set size as denominator power.
struct HilbertSeries {
  Polynomial numerator;
  int denom_power = 0;

  /// Cancels common factors (1 - t), giving the form whose denominator power is the Krull dimension.
  HilbertSeries reduced() const {
    HilbertSeries r = *this;
    while (r.denom_power > 0 && !r.numerator.empty()) {
      std::int64_t at_one = 0;
      for (auto c : r.numerator) at_one += c;
      if (at_one != 0) break;
      // N(t) = (1 - t) Q(t) with q_k = sum_{i <= k} n_i.
      Polynomial q(r.numerator.size() - 1, 0);
      std::int64_t acc = 0;
      for (std::size_t k = 0; k + 1 < r.numerator.size(); ++k) q[k] = acc += r.numerator[k];
      r.numerator = std::move(q);
      --r.denom_power;
    }
    return r;
  }

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Sum of f_i t^{i+1} / (1-t)^{i+1}, brought over (1-t)^n.
inline HilbertSeries hilbert_from_fvector(const FVector& f, int n) {
  if (f.top() + 1 > n) throw std::invalid_argument("f-vector has faces larger than the ground set");
  Polynomial num;
  for (int i = -1; i <= f.top(); ++i) {
    if (f.at(i) == 0) continue;
    num = poly::add(num, poly::shifted_one_minus_t(i + 1, n - i - 1), f.at(i));
  }
  return HilbertSeries{num, n};
}

/// Graded Betti numbers beta_{i,j} of k[Sigma] over S = k[x_1..x_n]; zero entries are not stored.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(Field field, int n) : field_(field), n_(n) {}

  const Field& field() const { return field_; }
  int n() const { return n_; }
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }

  std::int64_t get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  void add(int i, int j, std::int64_t value) {
    if (value == 0) return;
    auto& slot = entries_[{i, j}];
    slot += value;
    if (slot == 0) entries_.erase({i, j});
  }

  void merge(const BettiTable& other) {
    for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
  }

  int projective_dimension() const {
    int pd = 0;
    for (const auto& [key, v] : entries_) pd = std::max(pd, key.first);
    return pd;
  }

  /// Total Betti numbers beta_i = sum_j beta_{i,j}, i = 0..pd.
  std::vector<std::int64_t> totals() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(projective_dimension() + 1), 0);
    for (const auto& [key, v] : entries_) out[static_cast<std::size_t>(key.first)] += v;
    return out;
  }

  /// K(t) = sum (-1)^i beta_{i,j} t^j, the Hilbert series numerator over (1-t)^n.
  Polynomial numerator() const {
    Polynomial p;
    for (const auto& [key, v] : entries_) {
      const auto j = static_cast<std::size_t>(key.second);
      if (p.size() <= j) p.resize(j + 1, 0);
      p[j] += (key.first % 2 == 0 ? 1 : -1) * v;
    }
    poly::trim(p);
    return p;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Field field_ = Field::rationals();
  int n_ = 0;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

inline constexpr int kDefaultBettiGround = 22;

struct HochsterOptions {
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  int max_ground = kDefaultBettiGround;
  bool allow_large = false;
  /// Called after each subset cardinality j with the partial table.
  std::function<void(int, const BettiTable&)> on_cardinality;
};

namespace detail {

// True when some vertex of the face set is a cone point (then the set is acyclic).
inline bool has_cone_point(const FaceTable& table, const FaceBuckets& faces) {
  if (faces.by_size.size() < 2) return false;
  Mask candidates = 0;
  for (auto v : faces.by_size[1]) candidates |= v;
  for (const auto& bucket : faces.by_size) {
    for (auto f : bucket) {
      for (Mask rest = candidates & ~f; rest != 0; rest &= rest - 1) {
        const Mask v = rest & (~rest + 1);
        if (!table.contains(f | v)) candidates &= ~v;
      }
      if (candidates == 0) return false;
    }
  }
  return candidates != 0;
}

// Adds the Hochster contribution of the induced complex on W.
inline void hochster_term(const FaceTable& table, Mask w, const Field& field, BettiTable& out) {
  const int j = std::popcount(w);
  if (w != 0 && table.contains(w)) return;
  const auto faces = faces_within(table, w);
  if (has_cone_point(table, faces)) return;
  const auto dims = homology_of_buckets(faces, field);
  for (std::size_t s = 0; s < dims.size(); ++s) {
    // dim H~_{s-1}(Sigma_W) contributes to beta_{j-s, j}.
    if (dims[s] != 0) out.add(j - static_cast<int>(s), j, dims[s]);
  }
}

// Revolving-door Gray code: consecutive j-subsets differ by one exchange.
inline void revolving_door(int n, int j, std::vector<Mask>& out) {
  if (j == 0) {
    out.push_back(0);
    return;
  }
  if (j == n) {
    out.push_back((Mask{1} << n) - 1);
    return;
  }
  revolving_door(n - 1, j, out);
  const std::size_t start = out.size();
  revolving_door(n - 1, j - 1, out);
  std::reverse(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  for (std::size_t i = start; i < out.size(); ++i) out[i] |= Mask{1} << (n - 1);
}

inline std::vector<Mask> subsets_of_size(int n, int j) {
  std::vector<Mask> out;
  if (j < 0 || j > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, j)));
  revolving_door(n, j, out);
  return out;
}

}  // namespace detail

/**
 * Graded Betti numbers by Hochster's formula:
 * beta_{i,j} = sum over j-subsets W of dim H~_{j-i-1}(Sigma_W).
 *
 * Subsets that are faces or whose restriction is a cone are skipped (acyclic).
 * Work is split across threads per cardinality; integer sums make the result
 * independent of the split.
 */
inline BettiTable betti_hochster(const SimplicialComplex& c, const Field& field, const HochsterOptions& opts = {}) {
  if (c.is_void()) throw VoidComplexError("betti_hochster");
  const int n = c.ground();
  if (n > opts.max_ground && !opts.allow_large) {
    throw GuardError("Hochster enumeration over 2^" + std::to_string(n) + " subsets exceeds bound 2^" +
                         std::to_string(opts.max_ground),
                     "--allow-large");
  }
  FaceTable table(c, Limits{std::max(opts.max_ground, kDefaultFaceGround), opts.allow_large});
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  BettiTable total(field, n);
  for (int j = 0; j <= n; ++j) {
    const auto subsets = detail::subsets_of_size(n, j);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, subsets.size() / 8)));
    std::vector<BettiTable> partial(workers, BettiTable(field, n));
    auto run = [&](unsigned id) {
      for (std::size_t idx = id; idx < subsets.size(); idx += workers) {
        detail::hochster_term(table, subsets[idx], field, partial[id]);
      }
    };
    if (workers <= 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
      for (auto& t : pool) t.join();
    }
    for (const auto& p : partial) total.merge(p);
    if (opts.on_cardinality) opts.on_cardinality(j, total);
  }
  return total;
}

/**
 * Reads the Betti numbers of an s-linear resolution off a Hilbert numerator
 * 1 - b_1 t^s + b_2 t^{s+1} - ...; throws if the numerator has another shape.
 */
inline BettiTable betti_from_linear_hilbert(const HilbertSeries& h, int s, Field field = Field::rationals()) {
  if (s < 1) throw std::invalid_argument("linear degree s must be >= 1");
  const auto& num = h.numerator;
  if (num.empty() || num[0] != 1) throw std::invalid_argument("numerator must have constant term 1");
  BettiTable t(field, h.denom_power);
  t.add(0, 0, 1);
  bool ended = false;
  for (std::size_t d = 1; d < num.size(); ++d) {
    const auto c = num[d];
    if (c == 0) {
      if (static_cast<int>(d) >= s) ended = true;
      continue;
    }
    if (static_cast<int>(d) < s) {
      throw std::invalid_argument("numerator has a term t^" + std::to_string(d) + " below the linear degree " +
                                  std::to_string(s));
    }
    if (ended) throw std::invalid_argument("numerator support is not contiguous for an s-linear resolution");
    const int i = static_cast<int>(d) - s + 1;
    const std::int64_t beta = (i % 2 == 0) ? c : -c;
    if (beta <= 0) {
      throw std::invalid_argument("coefficient of t^" + std::to_string(d) + " has the wrong sign for an " +
                                  std::to_string(s) + "-linear resolution");
    }
    t.add(i, static_cast<int>(d), beta);
  }
  return t;
}

/**
 * The common generator degree s when every beta_{i,j} with i >= 1 sits at
 * j = s + i - 1. The zero ideal (no i >= 1 entries) has no generator degree
 * and yields nullopt.
 */
inline std::optional<int> has_linear_resolution(const BettiTable& t) {
  std::optional<int> s;
  for (const auto& [key, v] : t.entries()) {
    const auto [i, j] = key;
    if (i == 0) continue;
    const int shift = j - i + 1;
    if (!s) s = shift;
    if (*s != shift) return std::nullopt;
  }
  return s;
}

struct CmVerdict {
  bool cohen_macaulay = false;
  /// For a negative verdict: a face whose link has H~_degree != 0 below the link dimension.
  std::optional<VertexSet> face;
  int degree = 0;
};

/**
 * Reisner's criterion: k[Sigma] is Cohen-Macaulay iff every link (including
 * lk of the empty face, i.e. Sigma) has vanishing reduced homology below its
 * dimension. Links of dimension <= 0 impose no condition and are skipped.
 */
inline CmVerdict is_cm_reisner(const SimplicialComplex& c, const Field& field, const Limits& limits = {}) {
  if (c.is_void()) throw VoidComplexError("is_cm_reisner");
  FaceTable table(c, limits);
  const auto faces = faces_within(table, c.support().bits());
  for (const auto& bucket : faces.by_size) {
    for (auto sigma : bucket) {
      Mask span = 0;
      int top = -1;
      for (auto f : c.facets()) {
        if ((sigma & ~f.bits()) != 0) continue;
        span |= f.bits();
        top = std::max(top, f.size());
      }
      span &= ~sigma;
      const int link_dim = top - std::popcount(sigma) - 1;
      if (link_dim <= 0) continue;
      FaceBuckets lk;
      Mask tau = span;
      std::vector<Mask> members;
      while (true) {
        if (table.contains(tau | sigma)) members.push_back(tau);
        if (tau == 0) break;
        tau = (tau - 1) & span;
      }
      std::reverse(members.begin(), members.end());
      for (auto m : members) {
        const auto k = static_cast<std::size_t>(std::popcount(m));
        if (lk.by_size.size() <= k) lk.by_size.resize(k + 1);
        lk.by_size[k].push_back(m);
      }
      const auto dims = detail::homology_of_buckets(lk, field);
      for (int i = -1; i < link_dim; ++i) {
        if (dims[static_cast<std::size_t>(i + 1)] != 0) return CmVerdict{false, VertexSet{sigma}, i};
      }
    }
  }
  return CmVerdict{true, std::nullopt, 0};
}

/// Auslander-Buchsbaum route: CM iff pd = n - (dim + 1), with pd read from the Betti table.
inline bool is_cm_ab(const SimplicialComplex& c, const BettiTable& table) {
  if (c.is_void()) throw VoidComplexError("is_cm_ab");
  return table.projective_dimension() == c.ground() - (dimension(c) + 1);
}

inline bool is_cm_ab(const SimplicialComplex& c, const Field& field, const HochsterOptions& opts = {}) {
  return is_cm_ab(c, betti_hochster(c, field, opts));
}

/// Cohen-Macaulay of type 1: the last total Betti number is 1.
inline bool is_gorenstein(const SimplicialComplex& c, const BettiTable& table) {
  if (!is_cm_ab(c, table)) return false;
  return table.totals().back() == 1;
}

inline bool is_gorenstein(const SimplicialComplex& c, const Field& field, const HochsterOptions& opts = {}) {
  return is_gorenstein(c, betti_hochster(c, field, opts));
}

/// Betti table of a join: the product of the two-variable Betti polynomials.
inline BettiTable betti_join_product(const BettiTable& a, const BettiTable& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("betti_join_product: field mismatch");
  BettiTable out(a.field(), a.n() + b.n());
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries()) out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
  return out;
}

/// Simplices of dimensions d_1..d_k glued in order along simplices of dimensions r_2..r_k.
struct FatForestDecomposition {
  std::vector<int> simplex_dims;
  std::vector<int> overlap_dims;
  /// Facet indices (into the complex's facet list) in gluing order.
  std::vector<std::size_t> facet_order;

  friend bool operator==(const FatForestDecomposition&, const FatForestDecomposition&) = default;
};

/// sum 1/(1-t)^{d_i+1} - sum 1/(1-t)^{r_j+1}, brought over (1-t)^n.
inline HilbertSeries fat_forest_hilbert(const FatForestDecomposition& d, int n) {
  if (d.simplex_dims.empty() || d.overlap_dims.size() + 1 != d.simplex_dims.size()) {
    throw std::invalid_argument("fat forest decomposition needs k simplices and k-1 overlaps");
  }
  Polynomial num;
  for (int di : d.simplex_dims) {
    if (di + 1 > n || di < -1) throw std::invalid_argument("simplex dimension out of range");
    num = poly::add(num, poly::shifted_one_minus_t(0, n - di - 1));
  }
  for (int r : d.overlap_dims) {
    if (r + 1 > n || r < -1) throw std::invalid_argument("overlap dimension out of range");
    num = poly::add(num, poly::shifted_one_minus_t(0, n - r - 1), -1);
  }
  return HilbertSeries{num, n};
}

struct EagonReinerReport {
  std::optional<int> linear_degree;
  bool dual_cohen_macaulay = false;
  bool consistent = false;
};

/// Compares "k[c] has a linear resolution" with "k[c^dual] is Cohen-Macaulay".
inline EagonReinerReport eagon_reiner_check(const SimplicialComplex& c, const Field& field,
                                            const HochsterOptions& opts = {}) {
  if (c.is_void()) throw VoidComplexError("eagon_reiner_check");
  const auto dual = alexander_dual(c);
  if (dual.is_void()) throw VoidComplexError("eagon_reiner_check (dual of the full simplex)");
  EagonReinerReport r;
  r.linear_degree = has_linear_resolution(betti_hochster(c, field, opts));
  r.dual_cohen_macaulay = is_cm_reisner(dual, field).cohen_macaulay;
  r.consistent = r.linear_degree.has_value() == r.dual_cohen_macaulay;
  return r;
}

}  // namespace srlab
