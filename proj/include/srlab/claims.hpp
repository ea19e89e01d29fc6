#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "srlab/cache.hpp"
#include "srlab/homology.hpp"
#include "srlab/io.hpp"
#include "srlab/structure.hpp"

namespace srlab::claims {

using io::json;
using Entries = std::map<std::pair<int, int>, std::int64_t>;

enum class Kind { Lemma, Theorem, Proof, Example, Remark, Conjecture };
enum class Status { Confirmed, Refuted, Partial };

inline std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Lemma: return "lemma";
    case Kind::Theorem: return "theorem";
    case Kind::Proof: return "proof";
    case Kind::Example: return "example";
    case Kind::Remark: return "remark";
    case Kind::Conjecture: return "conjecture";
  }
  return "?";
}

inline std::string status_name(Status s) {
  switch (s) {
    case Status::Confirmed: return "CONFIRMED";
    case Status::Refuted: return "REFUTED";
    case Status::Partial: return "PARTIAL";
  }
  return "?";
}

inline constexpr int kDefaultClaimGround = 16;

/// Inclusive parameter ranges; a record reads only the parameters it names.
struct ParamRange {
  int nmin = 0, nmax = 0;
  int kmin = 0, kmax = 0;
  int mmin = 0, mmax = 0;
};

struct Params {
  std::optional<int> nmin, nmax, kmin, kmax, mmin, mmax;
};

inline ParamRange resolve(ParamRange r, const Params& p) {
  auto apply = [](int& lo, int& hi, const std::optional<int>& plo, const std::optional<int>& phi) {
    if (plo) lo = *plo;
    if (phi) hi = *phi;
    if (lo > hi) throw std::invalid_argument("empty parameter range " + std::to_string(lo) + ".." + std::to_string(hi));
  };
  apply(r.nmin, r.nmax, p.nmin, p.nmax);
  apply(r.kmin, r.kmax, p.kmin, p.kmax);
  apply(r.mmin, r.mmax, p.mmin, p.mmax);
  return r;
}

inline json range_to_json(const ParamRange& r, const std::string& uses) {
  json j = json::object();
  if (uses.find('n') != std::string::npos) j["n"] = {r.nmin, r.nmax};
  if (uses.find('k') != std::string::npos) j["k"] = {r.kmin, r.kmax};
  if (uses.find('m') != std::string::npos) j["m"] = {r.mmin, r.mmax};
  return j;
}

/// Memoized Betti tables and CM verdicts, optionally backed by a disk cache.
class Oracle {
 public:
  explicit Oracle(HochsterOptions opts = {}, std::optional<DiskCache> cache = std::nullopt)
      : opts_(std::move(opts)), cache_(std::move(cache)) {}

  const HochsterOptions& options() const { return opts_; }

  const BettiTable& betti(const SimplicialComplex& c, const Field& f) {
    const auto key = DiskCache::complex_key(c, f);
    auto it = betti_.find(key);
    if (it != betti_.end()) return it->second;
    if (cache_) {
      if (auto hit = cache_->get_betti(c, f)) return betti_.emplace(key, std::move(*hit)).first->second;
    }
    auto table = betti_hochster(c, f, opts_);
    if (cache_) cache_->put_betti(c, f, table);
    return betti_.emplace(key, std::move(table)).first->second;
  }

  bool cm(const SimplicialComplex& c, const Field& f) {
    const auto key = DiskCache::complex_key(c, f);
    auto it = cm_.find(key);
    if (it != cm_.end()) return it->second;
    const bool v = is_cm_reisner(c, f).cohen_macaulay;
    cm_.emplace(key, v);
    return v;
  }

 private:
  HochsterOptions opts_;
  std::optional<DiskCache> cache_;
  std::map<std::string, BettiTable> betti_;
  std::map<std::string, bool> cm_;
};

/// One stated-versus-computed comparison.
struct Check {
  std::string field;
  std::string instance;
  std::string quantity;
  std::string stated;
  std::string oracle;
  bool agrees = false;
};

// ---------- rendering helpers ----------

inline std::string entries_string(const Entries& e) {
  std::string s;
  for (const auto& [key, v] : e) {
    if (v == 0 || key == std::make_pair(0, 0)) continue;
    if (!s.empty()) s += " ";
    s += "b(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")=" + std::to_string(v);
  }
  return s.empty() ? "none" : s;
}

inline Entries entries_of(const BettiTable& t) { return Entries(t.entries().begin(), t.entries().end()); }

inline std::string poly_string(Polynomial p) {
  poly::trim(p);
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t d = 0; d < p.size(); ++d) {
    const auto c = p[d];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || d == 0) s += std::to_string(mag);
    if (d >= 1) s += "t";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

inline std::string series_string(const HilbertSeries& h) {
  return "(" + poly_string(h.numerator) + ")/(1-t)^" + std::to_string(h.denom_power);
}

inline bool same_series(const HilbertSeries& a, const HilbertSeries& b) {
  auto l = poly::multiply(a.numerator, poly::shifted_one_minus_t(0, b.denom_power));
  auto r = poly::multiply(b.numerator, poly::shifted_one_minus_t(0, a.denom_power));
  poly::trim(l);
  poly::trim(r);
  return l == r;
}

inline std::string facets_string(const SimplicialComplex& c) {
  if (c.is_void()) return "void";
  std::string s;
  for (auto f : c.facets()) s += (s.empty() ? "" : ",") + f.to_string();
  return s;
}

inline std::string sets_string(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end(), lex_less);
  std::string s;
  for (auto f : v) s += (s.empty() ? "" : ",") + f.to_string();
  return s.empty() ? "none" : s;
}

inline std::string degrees_string(const MonomialSet& m) {
  const auto counts = m.degree_counts();
  std::string s;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] == 0) continue;
    s += (s.empty() ? "" : ", ") + std::to_string(counts[d]) + " of degree " + std::to_string(d);
  }
  return s.empty() ? "none" : s;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------- graph and complex labels ----------

inline Graph family_graph(Family f, int n, int m = 0) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.m = m;
  return build_family(s);
}

inline std::string graph_label(Family f, int n, int m = 0) {
  const auto N = std::to_string(n);
  switch (f) {
    case Family::W: return "W_" + std::to_string(n + 1);
    case Family::C2: return "C2_" + N;
    case Family::L2: return "L2_" + N;
    case Family::Kmn: return "K_{" + std::to_string(m) + "," + N + "}";
    case Family::K2xKn: return "K2xK_" + N;
    case Family::Grid: return "G_{" + std::to_string(m) + "," + N + "}";
    default: return family_name(f) + "_" + N;
  }
}

inline std::string delta_label(int k, const std::string& g) { return "Delta^t_" + std::to_string(k) + "(" + g + ")"; }
inline std::string dual_label(int k, const std::string& g) { return "dual " + delta_label(k, g); }

/**
 * Evaluation context handed to a record: one field, the resolved ranges,
 * and helpers that append checks.
 */
class Context {
 public:
  Context(Oracle& oracle, Field field, ParamRange range, int guard, bool allow_large, std::vector<Check>& out)
      : oracle_(oracle), field_(field), range_(range), guard_(guard), allow_large_(allow_large), out_(out) {}

  const Field& field() const { return field_; }
  const ParamRange& range() const { return range_; }
  Oracle& oracle() { return oracle_; }

  void guard(const SimplicialComplex& c) const {
    if (c.ground() > guard_ && !allow_large_) {
      throw GuardError("claim instance on " + std::to_string(c.ground()) + " vertices exceeds the guard of " +
                           std::to_string(guard_),
                       "--allow-large");
    }
  }

  const BettiTable& betti(const SimplicialComplex& c) {
    guard(c);
    return oracle_.betti(c, field_);
  }
  bool is_cm(const SimplicialComplex& c) {
    guard(c);
    return oracle_.cm(c, field_);
  }
  std::optional<int> linear(const SimplicialComplex& c) { return has_linear_resolution(betti(c)); }

  void record(const std::string& instance, const std::string& quantity, std::string stated, std::string oracle,
              bool agrees) {
    out_.push_back(Check{field_.tag(), instance, quantity, std::move(stated), std::move(oracle), agrees});
  }
  void same(const std::string& instance, const std::string& quantity, const std::string& stated,
            const std::string& oracle) {
    record(instance, quantity, stated, oracle, stated == oracle);
  }
  void flag(const std::string& instance, const std::string& quantity, bool stated, bool oracle) {
    record(instance, quantity, yes_no(stated), yes_no(oracle), stated == oracle);
  }

  /// Every nonzero Betti number beyond b(0,0) against the stated table.
  void expect_table(const std::string& instance, const SimplicialComplex& c, const Entries& stated) {
    same(instance, "Betti table", entries_string(stated), entries_string(entries_of(betti(c))));
  }
  /// Only the listed entries.
  void expect_entries(const std::string& instance, const SimplicialComplex& c, const Entries& stated) {
    const auto& t = betti(c);
    for (const auto& [key, v] : stated) {
      const auto q = "b(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
      record(instance, q, std::to_string(v), std::to_string(t.get(key.first, key.second)),
             v == t.get(key.first, key.second));
    }
  }
  void expect_linear(const std::string& instance, const SimplicialComplex& c, bool stated,
                     std::optional<int> degree = std::nullopt) {
    const auto s = linear(c);
    auto show = [](std::optional<int> d, bool with_degree) {
      if (!d) return std::string("not linear");
      return with_degree ? std::to_string(*d) + "-linear" : std::string("linear");
    };
    const bool agrees = stated == s.has_value() && (!degree || !s || *degree == *s);
    record(instance, "linear resolution", stated ? show(degree ? degree : std::optional<int>(0), degree.has_value())
                                                 : "not linear",
           show(s, degree.has_value()), agrees);
  }
  void expect_cm(const std::string& instance, const SimplicialComplex& c, bool stated) {
    flag(instance, "Cohen-Macaulay", stated, is_cm(c));
  }
  void expect_gorenstein(const std::string& instance, const SimplicialComplex& c, bool stated) {
    flag(instance, "Gorenstein", stated, is_gorenstein(c, betti(c)));
  }
  void expect_series(const std::string& instance, const SimplicialComplex& c, const HilbertSeries& stated) {
    guard(c);
    const auto h = hilbert_from_fvector(f_vector(c), c.ground());
    record(instance, "Hilbert series", series_string(stated), series_string(h), same_series(stated, h));
  }
  void expect_complex(const std::string& instance, const std::string& quantity, const SimplicialComplex& stated,
                      const SimplicialComplex& actual) {
    same(instance, quantity, facets_string(stated), facets_string(actual));
  }
  void expect_ideal(const std::string& instance, const SimplicialComplex& c, std::vector<VertexSet> stated) {
    same(instance, "ideal generators", sets_string(std::move(stated)), sets_string(minimal_nonfaces(c).generators()));
  }

 private:
  Oracle& oracle_;
  Field field_;
  ParamRange range_;
  int guard_;
  bool allow_large_;
  std::vector<Check>& out_;
};

using Evaluator = std::function<void(Context&)>;

struct ClaimRecord {
  std::string id;
  Kind kind = Kind::Theorem;
  std::string family;
  /// Where the statement sits, described without quoting.
  std::string locator;
  std::string summary;
  std::string oracle;
  /// CONFIRMED or REFUTED; a REFUTED expectation documents a known discrepancy.
  Status expected = Status::Confirmed;
  std::vector<std::string> conflicts_with;
  ParamRange defaults;
  std::string uses;
  Evaluator evaluate;
};

// ---------- closed forms and builders shared by the catalog ----------

namespace detail {

using std::int64_t;

inline int64_t C(int n, int k) { return binomial(n, k); }

inline Entries linear_entries(int s, int imax, const std::function<int64_t(int)>& beta) {
  Entries e;
  for (int i = 1; i <= imax; ++i) e[{i, s + i - 1}] = beta(i);
  return e;
}

inline Entries drop_zeros(Entries e) {
  for (auto it = e.begin(); it != e.end();) it = it->second == 0 ? e.erase(it) : std::next(it);
  return e;
}

inline HilbertSeries series(Polynomial num, int power) { return HilbertSeries{std::move(num), power}; }

inline Polynomial monomial(int64_t c, int d) {
  Polynomial p(static_cast<std::size_t>(d) + 1, 0);
  p[static_cast<std::size_t>(d)] = c;
  return p;
}

inline VertexSet stride_set(int start, int step, int count) {
  std::vector<int> v;
  for (int i = 0; i < count; ++i) v.push_back(start + i * step);
  return VertexSet::of(v);
}

inline bool fat(const SimplicialComplex& c) { return is_fat_forest(c).verdict; }

// Random graphs with a fixed seed, so a claim run is reproducible.
inline std::vector<Graph> seeded_graphs(int n, int count, unsigned seed) {
  std::mt19937_64 rng(seed + static_cast<unsigned>(n) * 7919u);
  std::vector<Graph> out;
  for (int t = 0; t < count; ++t) {
    std::bernoulli_distribution edge(0.25 + 0.1 * (t % 5));
    Graph g(n);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (edge(rng)) g.add_edge(u, v);
    out.push_back(g);
  }
  return out;
}

struct SideVerdict {
  std::optional<int> linear;
  bool cm = false;
  bool holds() const { return linear.has_value() && cm; }
};

inline SideVerdict side(Context& cx, const SimplicialComplex& c) { return SideVerdict{cx.linear(c), cx.is_cm(c)}; }

inline std::string side_string(const SideVerdict& v) {
  return (v.linear ? std::to_string(*v.linear) + "-linear" : std::string("not linear")) +
         (v.cm ? ", CM" : ", not CM");
}

inline void both_cm_linear(Context& cx, const SimplicialComplex& d, const std::string& g, int k) {
  const auto dd = alexander_dual(d);
  cx.expect_cm(delta_label(k, g), d, true);
  cx.expect_linear(delta_label(k, g), d, true);
  cx.expect_cm(dual_label(k, g), dd, true);
  cx.expect_linear(dual_label(k, g), dd, true);
}

// Conjecture cell: both sides linear and CM.
inline void conjecture_cell(Context& cx, Family f, int k, int n) {
  const auto g = family_graph(f, n);
  const auto d = delta_kt(g, k);
  const auto label = graph_label(f, n);
  if (d.is_void()) return;
  const auto a = side(cx, d);
  const auto b = side(cx, alexander_dual(d));
  cx.record(delta_label(k, label) + " and dual", "linear and CM on both sides", "linear, CM | linear, CM",
            side_string(a) + " | " + side_string(b), a.holds() && b.holds());
}

// ---------- evaluators ----------

inline void skel_lemma(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const int N = n + 1;
    const auto simplex = SimplicialComplex::simplex(N);
    for (int i = -1; i <= n - 1; ++i) {
      const auto sk = skeleton(simplex, i);
      const auto name = "skeleton " + std::to_string(i) + " of the " + std::to_string(n) + "-simplex";
      cx.expect_complex(name, "Alexander dual", skeleton(simplex, n - i - 2), alexander_dual(sk));
      cx.expect_cm(name, sk, true);
      cx.expect_linear(name, sk, true);
      cx.same(name, "ideal generators",
              std::to_string(C(N, i + 2)) + " of degree " + std::to_string(i + 2),
              degrees_string(minimal_nonfaces(sk)));
    }
  }
}

inline void k1_theorem(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    for (auto f : {Family::P, Family::L, Family::S, Family::C}) {
      if (f == Family::C && n < 3) continue;
      const auto label = graph_label(f, n);
      const auto d = delta_kt(family_graph(f, n), 1);
      const auto dd = alexander_dual(d);
      cx.expect_table(delta_label(1, label), d, {{{1, n}, 1}});
      cx.expect_table(dual_label(1, label), dd, linear_entries(1, n, [n](int i) { return C(n, i); }));
      cx.expect_cm(delta_label(1, label), d, true);
      cx.expect_cm(dual_label(1, label), dd, true);
      cx.expect_linear(delta_label(1, label), d, true);
      cx.expect_linear(dual_label(1, label), dd, true);
    }
  }
}

inline void k2_lemma(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    std::vector<std::pair<std::string, Graph>> graphs;
    for (auto f : {Family::P, Family::S, Family::C}) {
      if (f == Family::C && n < 4) continue;
      graphs.emplace_back(graph_label(f, n), family_graph(f, n));
    }
    int idx = 0;
    for (const auto& t : nonisomorphic_trees(n)) graphs.emplace_back("tree " + std::to_string(n) + "#" + std::to_string(++idx), t);
    for (const auto& [label, g] : graphs) {
      const auto d = delta_kt(g, 2);
      cx.expect_complex(dual_label(2, label), "equals the graph as a complex", clique_complex(g), alexander_dual(d));
    }
  }
}

inline void froberg_theorem(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    std::vector<std::pair<std::string, Graph>> graphs;
    for (auto f : {Family::L, Family::S, Family::C, Family::C2, Family::L2}) {
      if ((f == Family::C || f == Family::C2) && n < 4) continue;
      graphs.emplace_back(graph_label(f, n), family_graph(f, n));
    }
    int idx = 0;
    for (const auto& g : seeded_graphs(n, 6, 1741)) graphs.emplace_back("random " + std::to_string(n) + "#" + std::to_string(++idx), g);
    for (const auto& [label, g] : graphs) {
      const auto c = clique_complex(g);
      if (c.facet_count() >= kDefaultFatForestFacets) continue;
      const auto s = cx.linear(c);
      const bool two = s ? *s == 2 : c.is_full_simplex();
      const bool ff = fat(c);
      const bool chordal = is_chordal(g).chordal;
      cx.record("clique(" + label + ")", "2-linear iff fat forest iff chordal", "all three agree",
                "2-linear " + yes_no(two) + ", fat forest " + yes_no(ff) + ", chordal " + yes_no(chordal),
                two == ff && ff == chordal);
    }
  }
}

inline void fat_theorem(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    std::vector<std::pair<std::string, Graph>> graphs;
    for (auto f : {Family::L, Family::S, Family::L2}) graphs.emplace_back(graph_label(f, n), family_graph(f, n));
    int idx = 0;
    for (const auto& t : nonisomorphic_trees(n)) graphs.emplace_back("tree " + std::to_string(n) + "#" + std::to_string(++idx), t);
    idx = 0;
    for (const auto& g : seeded_graphs(n, 10, 2027)) {
      ++idx;
      if (is_chordal(g).chordal) graphs.emplace_back("random " + std::to_string(n) + "#" + std::to_string(idx), g);
    }
    for (const auto& [label, g] : graphs) {
      const auto c = clique_complex(g);
      if (c.facet_count() >= kDefaultFatForestFacets) continue;
      const auto v = is_fat_forest(c);
      if (!v.verdict) {
        cx.record("clique(" + label + ")", "fat forest", "yes", "no", false);
        continue;
      }
      cx.expect_series("clique(" + label + ")", c, fat_forest_hilbert(*v.decomposition, c.ground()));
    }
  }
}

inline void pn_theorem(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n)
    for (int k = std::max(1, cx.range().kmin); k <= std::min(n, cx.range().kmax); ++k)
      both_cm_linear(cx, delta_kt(family_graph(Family::P, n), k), graph_label(Family::P, n), k);
}

inline void pn_example(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = graph_label(Family::P, n);
    const auto d = delta_kt(family_graph(Family::P, n), 2);
    const auto dd = alexander_dual(d);
    const auto simplex = SimplicialComplex::simplex(n);
    cx.expect_complex(delta_label(2, label), "equals the (n-3)-skeleton", skeleton(simplex, n - 3), d);
    cx.expect_complex(dual_label(2, label), "equals n points", skeleton(simplex, 0), dd);
    cx.expect_table(delta_label(2, label), d, {{{1, n - 1}, n}, {{2, n}, n - 1}});
    const auto dual_beta = [n](int i) { return n * C(n - 1, i) - C(n, i + 1); };
    cx.expect_table(dual_label(2, label), dd, drop_zeros(linear_entries(2, n - 1, dual_beta)));
    Polynomial num{1};
    for (int i = 1; i <= n - 1; ++i) num = poly::add(num, monomial((i % 2 ? -1 : 1) * dual_beta(i), i + 1));
    cx.expect_series(dual_label(2, label), dd, series(num, n));
  }
}

inline void pn_example_series(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto d = delta_kt(family_graph(Family::P, n), 2);
    auto num = poly::add(poly::add(Polynomial{1}, monomial(-n, n - 1)), monomial(n - 1, n - 1));
    cx.expect_series(delta_label(2, graph_label(Family::P, n)), d, series(num, n));
  }
}

template <class F>
void for_trees(Context& cx, F&& body) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    int idx = 0;
    for (const auto& t : nonisomorphic_trees(n)) body(n, "tree " + std::to_string(n) + "#" + std::to_string(++idx), t);
  }
}

inline void tree_theorem(Context& cx) {
  for_trees(cx, [&](int n, const std::string& label, const Graph& t) {
    const auto d = delta_kt(t, 2);
    const auto dd = alexander_dual(d);
    cx.expect_cm(delta_label(2, label), d, true);
    cx.expect_linear(delta_label(2, label), d, true);
    cx.expect_table(delta_label(2, label), d, {{{1, n - 2}, n - 1}, {{2, n - 1}, n - 2}});
    cx.expect_cm("k[" + label + "]", dd, true);
    cx.expect_linear("k[" + label + "]", dd, true, 2);
  });
}

inline void tree_dual_formula(Context& cx, const std::function<int64_t(int, int)>& beta) {
  for_trees(cx, [&](int n, const std::string& label, const Graph& t) {
    const auto dd = alexander_dual(delta_kt(t, 2));
    cx.expect_table("k[" + label + "]", dd, drop_zeros(linear_entries(2, n - 1, [&](int i) { return beta(n, i); })));
  });
}

inline void tree_theorem_dual(Context& cx) {
  tree_dual_formula(cx, [](int n, int i) { return (n - 2) * C(n - 2, i + 1) + C(n - 2, i + 1); });
}

inline void tree_proof_dual(Context& cx) {
  tree_dual_formula(cx, [](int n, int i) { return C(n, i + 1) - n * C(n - 1, i) + (n - 1) * C(n - 2, i - 1); });
}

inline void tree_proof_series(Context& cx) {
  for_trees(cx, [&](int n, const std::string& label, const Graph& t) {
    auto num = poly::add(poly::add(Polynomial{1}, monomial(-(n - 1), n - 2)), monomial(n - 2, n));
    cx.expect_series(delta_label(2, label), delta_kt(t, 2), series(num, n - 1));
  });
}

inline void tree_remark(Context& cx) {
  std::string differing = "none";
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto trees = nonisomorphic_trees(n);
    std::string first_ring, first_delta;
    std::set<std::string> delta3;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      const auto d = delta_kt(trees[i], 2);
      const auto ring = entries_string(entries_of(cx.betti(alexander_dual(d))));
      const auto delta = entries_string(entries_of(cx.betti(d)));
      if (i == 0) {
        first_ring = ring;
        first_delta = delta;
      }
      const auto name = "tree " + std::to_string(n) + "#" + std::to_string(i + 1);
      cx.same("k[" + name + "]", "Betti table shared by all trees on n vertices", first_ring, ring);
      cx.same(delta_label(2, name), "Betti table shared by all trees on n vertices", first_delta, delta);
      if (n >= 3) {
        const auto d3 = delta_kt(trees[i], 3);
        delta3.insert(d3.is_void() ? "void" : series_string(hilbert_from_fvector(f_vector(d3), n)));
      }
    }
    if (differing == "none" && delta3.size() > 1) differing = "n=" + std::to_string(n);
  }
  cx.same("Delta^t_3(tree)", "two trees with different Hilbert series", "some n in range",
          differing == "none" ? "none in range" : "some n in range");
}

inline void sn_theorem(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n)
    for (int k = std::max(1, cx.range().kmin); k <= std::min(n - 1, cx.range().kmax); ++k)
      both_cm_linear(cx, delta_kt(family_graph(Family::S, n), k), graph_label(Family::S, n), k);
}

inline const Entries kS6Table{{{1, 3}, 10}, {{2, 4}, 15}, {{3, 5}, 6}};

inline void s6_tables(Context& cx, int k) {
  const auto d = delta_kt(family_graph(Family::S, 6), k);
  cx.expect_table(delta_label(k, "S_6"), d, kS6Table);
  cx.expect_table(dual_label(k, "S_6"), alexander_dual(d), kS6Table);
}

inline void s6_example(Context& cx) {
  for (int k = cx.range().kmin; k <= cx.range().kmax; ++k) {
    s6_tables(cx, k);
    const auto d = delta_kt(family_graph(Family::S, 6), k);
    cx.expect_cm(delta_label(k, "S_6"), d, true);
    cx.expect_linear(delta_label(k, "S_6"), d, true);
  }
}

inline void s6_example_label(Context& cx) { s6_tables(cx, 2); }

inline void l6_example_primal(Context& cx) {
  cx.expect_table(delta_label(3, "L_6"), delta_kt(family_graph(Family::L, 6), 3),
                  {{{1, 2}, 9}, {{2, 3}, 18}, {{3, 4}, 15}, {{4, 5}, 6}, {{5, 6}, 1}});
}

inline void l6_example_dual(Context& cx) {
  cx.expect_table(dual_label(3, "L_6"), alexander_dual(delta_kt(family_graph(Family::L, 6), 3)),
                  {{{1, 3}, 2}, {{2, 6}, 1}});
}

inline void l6_example_verdict(Context& cx) {
  const auto d = delta_kt(family_graph(Family::L, 6), 3);
  cx.expect_linear(delta_label(3, "L_6"), d, true);
  cx.expect_cm(delta_label(3, "L_6"), d, false);
}

inline void k2kn_theorem(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = graph_label(Family::K2xKn, n);
    const auto d = delta_kt(family_graph(Family::K2xKn, n), 2);
    const auto dd = alexander_dual(d);
    if (n == 2) {
      cx.expect_table(delta_label(2, label), d, {{{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}});
      cx.expect_linear(delta_label(2, label), d, true);
      cx.expect_table(dual_label(2, label), dd, {{{1, 2}, 2}, {{2, 4}, 1}});
      cx.expect_cm(dual_label(2, label), dd, true);
      continue;
    }
    cx.expect_cm(delta_label(2, label), d, false);
    cx.expect_linear(delta_label(2, label), d, false);
    cx.expect_cm(dual_label(2, label), dd, false);
    cx.expect_linear(dual_label(2, label), dd, false);
  }
}

inline void k2kn_theorem_ideal(Context& cx) {
  const auto dd = alexander_dual(delta_kt(family_graph(Family::K2xKn, 2), 2));
  cx.same(dual_label(2, "K2xK_2"), "ideal generator degrees", "2 of degree 1, 1 of degree 2",
          degrees_string(minimal_nonfaces(dd)));
}

inline void k2kn_proof(Context& cx) {
  // x_i = i, y_i = n + i.
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = graph_label(Family::K2xKn, n);
    const auto d = delta_kt(family_graph(Family::K2xKn, n), 2);
    const auto dd = alexander_dual(d);
    if (n == 2) {
      cx.expect_complex(delta_label(2, label), "facets", SimplicialComplex::from_facets(4, {VertexSet::of({1, 4}), VertexSet::of({2, 3})}), d);
      cx.expect_ideal(delta_label(2, label), d, {VertexSet::of({1, 2}), VertexSet::of({1, 3}), VertexSet::of({2, 4}), VertexSet::of({3, 4})});
      cx.expect_complex(dual_label(2, label), "facets",
                        SimplicialComplex::from_facets(4, {VertexSet::of({1, 2}), VertexSet::of({2, 4}), VertexSet::of({3, 4}), VertexSet::of({1, 3})}), dd);
      cx.expect_ideal(dual_label(2, label), dd, {VertexSet::of({1, 4}), VertexSet::of({2, 3})});
      cx.flag(delta_label(2, label), "fat forest", true, fat(d));
      cx.flag(dual_label(2, label), "fat forest", false, fat(dd));
      continue;
    }
    std::vector<VertexSet> relations{stride_set(1, 1, n), stride_set(n + 1, 1, n)};
    std::vector<VertexSet> facets{stride_set(1, 1, n), stride_set(n + 1, 1, n)};
    for (int j = 1; j <= n; ++j) {
      relations.push_back(VertexSet::range(2 * n).without(j).without(n + j));
      facets.push_back(VertexSet::of({j, n + j}));
    }
    cx.expect_ideal(delta_label(2, label), d, relations);
    cx.expect_complex(dual_label(2, label), "facets", SimplicialComplex::from_facets(2 * n, facets), dd);
    cx.flag(dual_label(2, label), "fat forest", false, fat(dd));
  }
}

inline std::vector<SimplicialComplex> join_factors() {
  std::vector<SimplicialComplex> f;
  f.push_back(skeleton(SimplicialComplex::simplex(3), 0));
  f.push_back(skeleton(SimplicialComplex::simplex(3), 1));
  f.push_back(skeleton(SimplicialComplex::simplex(4), 1));
  f.push_back(clique_complex(family_graph(Family::C, 4)));
  f.push_back(clique_complex(family_graph(Family::L, 4)));
  f.push_back(SimplicialComplex::irrelevant(2));
  f.push_back(SimplicialComplex::from_facets(4, {VertexSet::of({1, 2}), VertexSet::of({3, 4})}));
  f.push_back(delta_kt(family_graph(Family::C, 5), 2));
  return f;
}

inline void join_lemma(Context& cx) {
  const auto factors = join_factors();
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = a; b < factors.size(); ++b) {
      const auto& A = factors[a];
      const auto& B = factors[b];
      const auto J = join(A, B);
      const auto name = "join of factors " + std::to_string(a + 1) + " and " + std::to_string(b + 1);
      cx.same(name, "Betti table is the product of the factors' tables",
              entries_string(entries_of(betti_join_product(cx.betti(A), cx.betti(B)))),
              entries_string(entries_of(cx.betti(J))));
      cx.flag(name, "CM iff both factors CM", cx.is_cm(A) && cx.is_cm(B), cx.is_cm(J));
      const auto sa = cx.linear(A);
      const auto sb = cx.linear(B);
      if (sa && sb && *sa == *sb && *sa > 1) cx.expect_linear(name, J, false);
    }
  }
}

template <class F>
void for_kmn(Context& cx, F&& body) {
  for (int m = cx.range().mmin; m <= cx.range().mmax; ++m)
    for (int n = std::max(m, cx.range().nmin); n <= cx.range().nmax; ++n) body(m, n);
}

inline void kmn_theorem_linear(Context& cx) {
  for_kmn(cx, [&](int m, int n) {
    for (int k = m; k <= n; ++k) {
      const auto dd = alexander_dual(delta_kt(family_graph(Family::Kmn, n, m), k));
      cx.expect_cm(dual_label(k, graph_label(Family::Kmn, n, m)), dd, true);
      cx.expect_linear(dual_label(k, graph_label(Family::Kmn, n, m)), dd, true);
    }
  });
}

inline void kmn_theorem_nonlinear(Context& cx) {
  for_kmn(cx, [&](int m, int n) {
    for (int k = 1; k < m; ++k) {
      const auto dd = alexander_dual(delta_kt(family_graph(Family::Kmn, n, m), k));
      cx.expect_cm(dual_label(k, graph_label(Family::Kmn, n, m)), dd, true);
      cx.expect_linear(dual_label(k, graph_label(Family::Kmn, n, m)), dd, false);
    }
  });
}

inline void k44_example(Context& cx) {
  const auto label = graph_label(Family::Kmn, 4, 4);
  const auto d = delta_kt(family_graph(Family::Kmn, 4, 4), 3);
  const auto dd = alexander_dual(d);
  cx.expect_table(delta_label(3, label), d, {{{1, 4}, 36}, {{2, 5}, 96}, {{3, 6}, 100}, {{4, 7}, 48}, {{5, 8}, 9}});
  cx.expect_linear(delta_label(3, label), d, true, 4);
  std::vector<VertexSet> facets;
  for (auto xs : k_subsets(4, 2))
    for (auto ys : k_subsets(4, 2)) facets.push_back(xs | shift(ys, 4));
  cx.expect_complex(dual_label(3, label), "facets", SimplicialComplex::from_facets(8, facets), dd);
  std::vector<VertexSet> gens;
  for (auto s : k_subsets(4, 3)) {
    gens.push_back(s);
    gens.push_back(shift(s, 4));
  }
  cx.expect_ideal(dual_label(3, label), dd, gens);
  const auto factor = skeleton(SimplicialComplex::simplex(4), 1);
  cx.same(dual_label(3, label), "Betti table is the tensor product of two factors",
          entries_string(entries_of(betti_join_product(cx.betti(factor), cx.betti(factor)))),
          entries_string(entries_of(cx.betti(dd))));
  cx.expect_linear(dual_label(3, label), dd, false);
}

inline void kmn_example(Context& cx) {
  for_kmn(cx, [&](int m, int n) {
    const auto label = graph_label(Family::Kmn, n, m);
    const auto d = delta_kt(family_graph(Family::Kmn, n, m), 2);
    const int s = m + n - 2;
    cx.expect_table(delta_label(2, label), d,
                    drop_zeros({{{1, s}, m * n}, {{2, s + 1}, 2 * m * n - m - n}, {{3, s + 2}, m * n - m - n + 1}}));
    cx.expect_linear(delta_label(2, label), d, true, s);
    cx.expect_cm(delta_label(2, label), d, false);
  });
}

inline void ln_theorem(Context& cx) {
  for (int k = cx.range().kmin; k <= cx.range().kmax; ++k) {
    const int n = 2 * k - 1;
    const auto label = graph_label(Family::L, n);
    const auto d = delta_kt(family_graph(Family::L, n), k);
    const auto dd = alexander_dual(d);
    cx.expect_linear(delta_label(k, label), d, true);
    cx.expect_cm(delta_label(k, label), d, true);
    cx.expect_ideal(dual_label(k, label), dd, {stride_set(1, 2, k)});
    cx.expect_cm(dual_label(k, label), dd, true);
    cx.expect_linear(dual_label(k, label), dd, true);
  }
}

inline void ln_conjecture(Context& cx) {
  for (int k = cx.range().kmin; k <= cx.range().kmax; ++k)
    for (int n = std::max(2 * k - 1, cx.range().nmin); n <= cx.range().nmax; ++n) conjecture_cell(cx, Family::L, k, n);
}

inline void l2n_conjecture(Context& cx) {
  for (int k = cx.range().kmin; k <= cx.range().kmax; ++k)
    for (int n = std::max(k, cx.range().nmin); n <= cx.range().nmax; ++n) conjecture_cell(cx, Family::L2, k, n);
}

inline void wn_remark(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    for (int k = cx.range().kmin; k <= std::min(n / 2, cx.range().kmax); ++k) {
      const auto dc = delta_kt(family_graph(Family::C, n), k);
      const auto dw = delta_kt(family_graph(Family::W, n), k);
      const auto lc = graph_label(Family::C, n);
      const auto lw = graph_label(Family::W, n);
      cx.same(delta_label(k, lw), "Betti numbers equal those of " + delta_label(k, lc),
              entries_string(entries_of(cx.betti(dc))), entries_string(entries_of(cx.betti(dw))));
      cx.same(dual_label(k, lw), "Betti numbers equal those of " + dual_label(k, lc),
              entries_string(entries_of(cx.betti(alexander_dual(dc)))),
              entries_string(entries_of(cx.betti(alexander_dual(dw)))));
    }
  }
}

inline int64_t cn_formula(int n, int i) { return C(n, i + 1) - n * C(n - 1, i) + n * C(n - 2, i - 1); }

inline void cn_theorem_stated(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = graph_label(Family::C, n);
    const auto d = delta_kt(family_graph(Family::C, n), 2);
    const auto ring = alexander_dual(d);
    cx.expect_linear(delta_label(2, label), d, true);
    Entries stated;
    for (int i = 1; i <= n - 1; ++i) stated[{i, n - 2 + i - 1}] = cn_formula(n, i);
    cx.expect_table(delta_label(2, label), d, drop_zeros(stated));
    cx.expect_gorenstein("k[" + label + "]", ring, true);
    cx.expect_table("k[" + label + "]", ring, {{{1, n - 2}, n}, {{2, n - 1}, n}, {{3, n}, 1}});
    cx.expect_linear("k[" + label + "]", ring, n == 3);
  }
}

inline void cn_theorem_proof(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = graph_label(Family::C, n);
    const auto d = delta_kt(family_graph(Family::C, n), 2);
    const auto ring = alexander_dual(d);
    cx.expect_complex("k[" + label + "]", "dual of Delta^t_2 is the cycle", clique_complex(family_graph(Family::C, n)), ring);
    cx.expect_gorenstein("k[" + label + "]", ring, true);
    std::set<std::pair<int, int>> shape;
    for (int i = 1; i <= n - 3; ++i) shape.insert({i, i + 1});
    shape.insert({n - 2, n});
    std::set<std::pair<int, int>> actual;
    for (const auto& [key, v] : cx.betti(ring).entries())
      if (key.first > 0 && v != 0) actual.insert(key);
    cx.flag("k[" + label + "]", "Betti support on (i,i+1) for i<=n-3 plus (n-2,n)", true, actual == shape);
    cx.expect_entries("k[" + label + "]", ring, {{{n - 2, n}, 1}});
    cx.expect_table(delta_label(2, label), d, {{{1, n - 2}, n}, {{2, n - 1}, n}, {{3, n}, 1}});
    auto num = poly::add(poly::add(poly::add(Polynomial{1}, monomial(-n, n - 2)), monomial(n, n - 1)), monomial(-1, n));
    cx.expect_series(delta_label(2, label), d, series(num, n));
  }
}

inline void cn_proof_formula(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = graph_label(Family::C, n);
    const auto ring = alexander_dual(delta_kt(family_graph(Family::C, n), 2));
    Entries stated;
    for (int i = 1; i <= n - 3; ++i) stated[{i, i + 1}] = cn_formula(n, i);
    cx.expect_entries("k[" + label + "]", ring, stated);
  }
}

inline void c2k_theorem(Context& cx, bool stated) {
  for (int k = cx.range().kmin; k <= cx.range().kmax; ++k) {
    for (auto f : {Family::C, Family::W}) {
      const int n = 2 * k;
      const auto label = graph_label(f, n);
      const auto d = delta_kt(family_graph(f, n), k);
      const auto dd = alexander_dual(d);
      if (stated) {
        cx.expect_linear(dual_label(k, label), dd, true);
        cx.expect_cm(dual_label(k, label), dd, false);
        continue;
      }
      cx.expect_ideal(dual_label(k, label), dd, {stride_set(1, 2, k), stride_set(2, 2, k)});
      cx.expect_cm(dual_label(k, label), dd, true);
      cx.expect_linear(dual_label(k, label), dd, false);
      cx.expect_linear(delta_label(k, label), d, true);
      cx.expect_cm(delta_label(k, label), d, false);
    }
  }
}

inline std::string fvector_string(const SimplicialComplex& c) {
  std::string s;
  const auto f = f_vector(c);
  for (auto v : f.coefficients()) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

inline void c2n_theorem(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = graph_label(Family::C2, n);
    const auto d = delta_kt(family_graph(Family::C2, n), 2);
    const auto cl = alexander_dual(d);
    const auto ring = "clique(" + label + ")";
    cx.expect_complex(ring, "dual of Delta^t_2 is the clique complex", clique_complex(family_graph(Family::C2, n)), cl);
    cx.expect_cm(delta_label(2, label), d, false);
    cx.flag(ring, "fat forest", false, fat(cl));
    if (n == 6) {
      cx.expect_table(delta_label(2, label), d, {{{1, 3}, 8}, {{2, 4}, 12}, {{3, 5}, 6}, {{4, 6}, 1}});
      cx.expect_linear(delta_label(2, label), d, true);
      cx.expect_ideal(ring, cl, {VertexSet::of({1, 4}), VertexSet::of({2, 5}), VertexSet::of({3, 6})});
      cx.expect_cm(ring, cl, true);
      cx.expect_linear(ring, cl, false);
      cx.same(ring, "f-vector", "1 6 12 8", fvector_string(cl));
      cx.same(delta_label(2, label), "f-vector", "1 6 15 12 3", fvector_string(d));
      cx.expect_series(delta_label(2, label), d,
                       series({1, 0, 0, -8, 12, -6, 1}, 6));
      continue;
    }
    cx.expect_linear(delta_label(2, label), d, false);
    cx.expect_cm(ring, cl, false);
    cx.flag(ring, "H~_1 nonzero", true, reduced_homology_dims(cl, cx.field()).at(1) != 0);
  }
}

inline void l2n_theorem_stated(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = graph_label(Family::L2, n);
    const auto g = family_graph(Family::L2, n);
    const auto d = delta_kt(g, 2);
    const auto cl = clique_complex(g);
    cx.expect_cm(delta_label(2, label), d, true);
    cx.expect_linear(delta_label(2, label), d, true);
    Entries stated;
    for (int i = 1; i <= n - 3; ++i) {
      const int64_t v = C(n, i + 1) - n * C(n - 1, i) + (2 * n - 3) * C(n - 2, i - 1) - (n - 2) * (i >= 2 ? C(n - 3, i - 2) : 0);
      stated[{i, i + 1}] = (i % 2 ? 1 : -1) * v;
    }
    cx.expect_table(delta_label(2, label), d, drop_zeros(stated));
    cx.expect_linear("clique(" + label + ")", cl, true);
    cx.expect_table("clique(" + label + ")", cl, {{{1, n - 2}, n - 2}, {{2, n - 1}, n - 3}});
    cx.expect_cm("clique(" + label + ")", cl, true);
  }
}

inline void l2n_proof_clique(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = "clique(" + graph_label(Family::L2, n) + ")";
    const auto cl = clique_complex(family_graph(Family::L2, n));
    cx.expect_cm(label, cl, true);
    cx.flag(label, "fat forest", true, fat(cl));
    cx.expect_linear(label, cl, true, 2);
    cx.expect_table(label, cl, drop_zeros(linear_entries(2, n - 3, [n](int i) { return (n - 3) * C(n - 3, i) - C(n - 3, i + 1); })));
    // (n-2)/(1-t)^3 - (n-3)/(1-t)^2 over (1-t)^3.
    cx.expect_series(label, cl, series({1, n - 3}, 3));
    cx.expect_series(label, cl, series(poly::multiply(poly::shifted_one_minus_t(0, n - 3), {1, n - 3}), n));
  }
}

inline void l2n_proof_delta(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto label = graph_label(Family::L2, n);
    const auto d = delta_kt(family_graph(Family::L2, n), 2);
    cx.expect_linear(delta_label(2, label), d, true, n - 2);
    cx.expect_table(delta_label(2, label), d, {{{1, n - 2}, n - 2}, {{2, n - 1}, n - 3}});
  }
}

inline void l2n_proof_series(Context& cx) {
  for (int n = cx.range().nmin; n <= cx.range().nmax; ++n) {
    const auto d = delta_kt(family_graph(Family::L2, n), 2);
    Polynomial num{1};
    num = poly::add(num, poly::multiply(poly::shifted_one_minus_t(n - 3, 3), {n - 2}), -1);
    num = poly::add(num, poly::multiply(poly::shifted_one_minus_t(n - 2, 2), {2 * n - 3}), -1);
    num = poly::add(num, poly::multiply(poly::shifted_one_minus_t(n - 1, 1), {n}), -1);
    num = poly::add(num, monomial(1, n), -1);
    cx.expect_series(delta_label(2, graph_label(Family::L2, n)), d, series(num, n));
  }
}

inline void l2n8_example(Context& cx) {
  const auto d = delta_kt(family_graph(Family::L2, 8), 3);
  cx.expect_table(delta_label(3, "L2_8"), d, {{{1, 2}, 6}, {{2, 3}, 8}, {{3, 4}, 3}});
  cx.expect_table(dual_label(3, "L2_8"), alexander_dual(d), {{{1, 3}, 4}, {{2, 4}, 3}});
}

inline void c2l2_theorem(Context& cx) {
  for (int k = cx.range().kmin; k <= cx.range().kmax; ++k) {
    const auto lc = graph_label(Family::C2, 3 * k);
    const auto ll = graph_label(Family::L2, 3 * k - 2);
    const auto dc = delta_kt(family_graph(Family::C2, 3 * k), k);
    const auto dl = delta_kt(family_graph(Family::L2, 3 * k - 2), k);
    cx.expect_linear(delta_label(k, lc), dc, true);
    cx.expect_cm(delta_label(k, lc), dc, false);
    cx.expect_linear(delta_label(k, ll), dl, true);
    cx.expect_cm(delta_label(k, ll), dl, true);
    const auto ddc = alexander_dual(dc);
    const auto ddl = alexander_dual(dl);
    cx.expect_ideal(dual_label(k, lc), ddc, {stride_set(1, 3, k), stride_set(2, 3, k), stride_set(3, 3, k)});
    cx.expect_ideal(dual_label(k, ll), ddl, {stride_set(1, 3, k)});
    cx.expect_cm(dual_label(k, lc), ddc, true);
    cx.expect_cm(dual_label(k, ll), ddl, true);
    cx.expect_linear(dual_label(k, lc), ddc, false);
    cx.expect_linear(dual_label(k, ll), ddl, true);
  }
}

inline void c8_example(Context& cx) {
  for (int k = cx.range().kmin; k <= cx.range().kmax; ++k) {
    cx.expect_table(delta_label(k, "C_8"), delta_kt(family_graph(Family::C, 8), k),
                    {{{1, 2}, 16}, {{2, 3}, 48}, {{3, 4}, 68}, {{4, 5}, 56}, {{5, 6}, 28}, {{6, 7}, 8}, {{7, 8}, 1}});
  }
}

inline void four_linear_forms(Context& cx, Family f, int n) {
  cx.expect_table(delta_label(4, graph_label(f, n)), delta_kt(family_graph(f, n), 4),
                  linear_entries(1, 4, [](int i) { return C(4, i); }));
}

inline void c2n9_example(Context& cx) {
  cx.expect_table(delta_label(3, "C2_9"), delta_kt(family_graph(Family::C2, 9), 3),
                  {{{1, 3}, 27}, {{2, 4}, 81}, {{3, 5}, 108}, {{4, 6}, 81}, {{5, 7}, 36}, {{6, 8}, 9}, {{7, 9}, 1}});
}

inline void grid_theorem(Context& cx) {
  for_kmn(cx, [&](int m, int n) {
    if (m * n > cx.range().nmax * cx.range().mmax) return;
    const auto label = graph_label(Family::Grid, n, m);
    const auto g = family_graph(Family::Grid, n, m);
    const auto d = delta_kt(g, 2);
    const int N = m * n;
    cx.expect_table(delta_label(2, label), d,
                    drop_zeros({{{1, N - 2}, 2 * N - m - n}, {{2, N - 1}, 3 * N - 2 * m - 2 * n}, {{3, N}, N - m - n - 1}}));
    cx.expect_linear(delta_label(2, label), d, true);
    cx.expect_cm(delta_label(2, label), d, false);
    const auto ring = alexander_dual(d);
    cx.expect_cm("k[" + label + "]", ring, true);
    cx.expect_linear("k[" + label + "]", ring, false);
  });
}

inline void grid_proof_series(Context& cx) {
  for_kmn(cx, [&](int m, int n) {
    const int N = m * n;
    const auto d = delta_kt(family_graph(Family::Grid, n, m), 2);
    Polynomial num{1};
    num = poly::add(num, monomial(-(2 * N - m - n), N - 2));
    num = poly::add(num, monomial(3 * N - 2 * m - 2 * n, N - 1));
    num = poly::add(num, monomial(N - m - n - 1, N));
    cx.expect_series(delta_label(2, graph_label(Family::Grid, n, m)), d, series(num, N));
  });
}

}  // namespace detail

// ---------- catalog ----------

inline std::vector<ClaimRecord> build_catalog() {
  using namespace detail;
  const std::string hochster = "betti_hochster, has_linear_resolution";
  const std::string full = "betti_hochster, has_linear_resolution, is_cm_reisner";
  std::vector<ClaimRecord> c;
  auto add = [&](ClaimRecord r) { c.push_back(std::move(r)); };
  auto R = [](int nmin, int nmax, int kmin = 0, int kmax = 0, int mmin = 0, int mmax = 0) {
    return ParamRange{nmin, nmax, kmin, kmax, mmin, mmax};
  };

  add({"skel.lemma", Kind::Lemma, "skeleta of a simplex", "k=1 section, opening lemma on skeleta of a simplex",
       "Skeleta of a simplex are dual to complementary skeleta, CM, linear, with ideal of all squarefree (i+2)-monomials.",
       "alexander_dual, minimal_nonfaces, " + full, Status::Confirmed, {}, R(1, 7), "n", skel_lemma});
  add({"k1.theorem", Kind::Theorem, "any graph, k=1", "k=1 section, theorem on Delta^t_1",
       "Delta^t_1 is one relation x_1...x_n and its dual is the irrelevant complex; both CM and linear.", full,
       Status::Confirmed, {"kmn.theorem.nonlinear"}, R(3, 8), "n", k1_theorem});
  add({"k2.lemma", Kind::Lemma, "triangle-free graphs", "k=2 section, lemma on triangle-free graphs",
       "For triangle-free G the dual of Delta^t_2(G) is G itself.", "alexander_dual, clique_complex",
       Status::Confirmed, {}, R(3, 8), "n", k2_lemma});
  add({"froberg.theorem", Kind::Theorem, "clique complexes", "k=2 section, cited characterization of 2-linear rings",
       "A Stanley-Reisner ring is 2-linear exactly when the complex is a fat forest.",
       "betti_hochster, is_fat_forest, is_chordal", Status::Confirmed, {}, R(3, 8), "n", froberg_theorem});
  add({"fat.theorem", Kind::Theorem, "fat forests", "k=2 section, cited Hilbert series of a fat forest",
       "The Hilbert series of a fat forest is a signed sum over its simplices and gluing simplices.",
       "is_fat_forest, fat_forest_hilbert, hilbert_from_fvector", Status::Confirmed, {}, R(3, 8), "n", fat_theorem});
  add({"pn.theorem", Kind::Theorem, "P_n", "0-dimensional graphs subsection, theorem",
       "Delta^t_k(P_n) and its dual are CM with linear resolutions.", full, Status::Confirmed, {}, R(3, 8, 1, 8),
       "nk", pn_theorem});
  add({"pn.example", Kind::Example, "P_n, k=2", "0-dimensional graphs subsection, example (skeleta and Betti lists)",
       "Delta^t_2(P_n) is the (n-3)-skeleton with b(1,n-1)=n, b(2,n)=n-1; its dual is n points.", hochster,
       Status::Confirmed, {"pn.example.series"}, R(4, 9), "n", pn_example});
  add({"pn.example.series", Kind::Example, "P_n, k=2", "0-dimensional graphs subsection, example, final Hilbert numerator",
       "Displayed numerator 1 - n t^(n-1) + (n-1) t^(n-1) over (1-t)^n.", "hilbert_from_fvector", Status::Refuted,
       {"pn.example"}, R(4, 9), "n", pn_example_series});
  add({"tree.theorem", Kind::Theorem, "trees", "trees subsection, theorem (CM, linearity, primal Betti numbers)",
       "Delta^t_2(T) and k[T] are CM and linear; b(1,n-2)=n-1 and b(2,n-1)=n-2 for Delta^t_2(T).", full,
       Status::Confirmed, {"tree.proof.series"}, R(4, 8), "n", tree_theorem});
  add({"tree.theorem.dual", Kind::Theorem, "trees", "trees subsection, theorem, displayed Betti formula for k[T]",
       "b(i,i+1)(k[T]) = (n-2)C(n-2,i+1) + C(n-2,i+1).", hochster, Status::Refuted, {"tree.proof.dual"}, R(4, 8), "n",
       tree_theorem_dual});
  add({"tree.proof.dual", Kind::Proof, "trees", "trees subsection, proof, Betti formula for k[T]",
       "b(i,i+1)(k[T]) = C(n,i+1) - nC(n-1,i) + (n-1)C(n-2,i-1).", hochster, Status::Refuted, {"tree.theorem.dual"},
       R(4, 8), "n", tree_proof_dual});
  add({"tree.proof.series", Kind::Proof, "trees", "trees subsection, proof, Hilbert series of Delta^t_2(T)",
       "Displayed series (1 - (n-1)t^(n-2) + (n-2)t^n)/(1-t)^(n-1).", "hilbert_from_fvector", Status::Refuted,
       {"tree.theorem"}, R(4, 8), "n", tree_proof_series});
  add({"tree.remark", Kind::Remark, "trees", "trees subsection, remark after the proof",
       "All trees on n vertices share Betti tables for k[T] and Delta^t_2(T); Delta^t_3 can separate them.",
       "betti_hochster, hilbert_from_fvector", Status::Confirmed, {}, R(4, 8), "n", tree_remark});
  add({"sn.theorem", Kind::Theorem, "S_n", "S_n subsection, theorem", "Delta^t_k(S_n) and its dual are CM and linear.",
       full, Status::Confirmed, {}, R(3, 8, 1, 7), "nk", sn_theorem});
  add({"s6.example", Kind::Example, "S_6", "S_n subsection, example, S_6 tables and closing verdict",
       "With k=3, Delta^t_k(S_6) and its dual both have b(1,3)=10, b(2,4)=15, b(3,5)=6, CM and linear.", full,
       Status::Confirmed, {"s6.example.label"}, R(6, 6, 3, 3), "k", s6_example});
  add({"s6.example.label", Kind::Example, "S_6", "S_n subsection, example, the k=2 header on the S_6 tables",
       "The same tables attributed to Delta^t_2(S_6).", hochster, Status::Refuted, {"s6.example"}, R(6, 6, 2, 2), "",
       s6_example_label});
  add({"l6.example.primal", Kind::Example, "L_6", "S_n subsection, example, Betti list for Delta^t_3(L_6)",
       "Betti numbers 9, 18, 15, 6, 1 in degrees 2..6.", hochster, Status::Refuted, {}, R(6, 6, 3, 3), "",
       l6_example_primal});
  add({"l6.example.dual", Kind::Example, "L_6", "S_n subsection, example, Betti list for the dual of Delta^t_3(L_6)",
       "b(1,3)=2 and b(2,6)=1.", hochster, Status::Refuted, {}, R(6, 6, 3, 3), "", l6_example_dual});
  add({"l6.example.verdict", Kind::Example, "L_6", "S_n subsection, example, closing verdict for L_6",
       "Delta^t_3(L_6) is linear but not CM.", full, Status::Refuted, {"ln.conjecture"}, R(6, 6, 3, 3), "",
       l6_example_verdict});
  add({"k2kn.theorem", Kind::Theorem, "K_2 x K_n", "K_2 x K_n subsection, theorem (tables and n>2 verdicts)",
       "For n=2: tables 4,4,1 and dual 2,1 with CM dual; for n>2 neither side is CM or linear.", full,
       Status::Confirmed, {}, R(2, 4), "n", k2kn_theorem});
  add({"k2kn.theorem.ideal", Kind::Theorem, "K_2 x K_2", "K_2 x K_n subsection, theorem, displayed ideal of the dual",
       "The dual is a quotient by one quadric and two variables.", "minimal_nonfaces", Status::Refuted,
       {"k2kn.proof"}, R(2, 2), "", k2kn_theorem_ideal});
  add({"k2kn.proof", Kind::Proof, "K_2 x K_n", "K_2 x K_n subsection, proof (facets, ideals, fat forests)",
       "Facets and ideals of both sides for n=2; minimal relations and dual facets for n>2.",
       "alexander_dual, minimal_nonfaces, is_fat_forest", Status::Confirmed, {"k2kn.theorem.ideal"}, R(2, 4), "n",
       k2kn_proof});
  add({"join.lemma", Kind::Lemma, "joins", "K_{m,n} subsection, lemma on joins",
       "Betti tables multiply under joins; CM iff both factors are; two a-linear factors, a>1, give a nonlinear join.",
       "betti_hochster, betti_join_product, is_cm_reisner", Status::Confirmed, {"kmn.theorem.linear"}, R(0, 0), "",
       join_lemma});
  add({"kmn.theorem.linear", Kind::Theorem, "K_{m,n}", "K_{m,n} subsection, theorem, first case m <= k <= n",
       "The dual of Delta^t_k(K_{m,n}) is CM and linear.", full, Status::Refuted, {"join.lemma"}, R(2, 5, 0, 0, 2, 4),
       "nm", kmn_theorem_linear});
  add({"kmn.theorem.nonlinear", Kind::Theorem, "K_{m,n}", "K_{m,n} subsection, theorem, second case k < m <= n",
       "The dual of Delta^t_k(K_{m,n}) is CM but not linear.", full, Status::Refuted, {"k1.theorem"},
       R(2, 5, 0, 0, 2, 4), "nm", kmn_theorem_nonlinear});
  add({"k44.example", Kind::Example, "K_{4,4}, k=3", "K_{m,n} subsection, first example",
       "Delta^t_3(K_{4,4}) is 4-linear with Betti 36, 96, 100, 48, 9; the dual is a tensor product and not linear.",
       "betti_hochster, betti_join_product, minimal_nonfaces", Status::Confirmed, {}, R(4, 4, 3, 3, 4, 4), "",
       k44_example});
  add({"kmn.example", Kind::Example, "K_{m,n}, k=2", "K_{m,n} subsection, second example with 2 < m <= n",
       "Delta^t_2(K_{m,n}) is (m+n-2)-linear with mn, 2mn-m-n, mn-m-n+1 and not CM.", full, Status::Confirmed, {},
       R(3, 5, 0, 0, 3, 4), "nm", kmn_example});
  add({"ln.theorem", Kind::Theorem, "L_{2k-1}", "L_n subsection, theorem",
       "Delta^t_k(L_{2k-1}) is linear and CM; its dual has the single relation x_1 x_3 ... x_{2k-1}.", full,
       Status::Confirmed, {}, R(0, 0, 2, 6), "k", ln_theorem});
  add({"ln.conjecture", Kind::Conjecture, "L_n", "L_n subsection, conjecture for all n >= 2k-1",
       "Delta^t_k(L_n) and its dual are linear and CM.", full, Status::Confirmed, {"l6.example.verdict"},
       R(1, 12, 1, 4), "nk", ln_conjecture});
  add({"wn.remark", Kind::Remark, "C_n and W_{n+1}", "C_n, W_{n+1} subsection, opening remark on wheels",
       "Delta^t_k(W_{n+1}) and Delta^t_k(C_n) have equal Betti numbers, and so do their duals (k >= 2).", hochster,
       Status::Confirmed, {}, R(4, 8, 2, 4), "nk", wn_remark});
  add({"cn.theorem.stated", Kind::Theorem, "C_n", "C_n, W_{n+1} subsection, first theorem as stated",
       "Binomial Betti formula attached to Delta^t_2(C_n); k[C_n] Gorenstein with n, n, 1; not linear unless n=3.",
       full, Status::Refuted, {"cn.theorem.proof", "cn.proof.formula"}, R(4, 8), "n", cn_theorem_stated});
  add({"cn.theorem.proof", Kind::Proof, "C_n", "C_n, W_{n+1} subsection, first theorem, proof",
       "k[C_n] is Gorenstein with the symmetric 2-linear shape; Delta^t_2(C_n) has b(1,n-2)=n, b(2,n-1)=n, b(3,n)=1.",
       full, Status::Confirmed, {"cn.theorem.stated", "grid.theorem"}, R(4, 8), "n", cn_theorem_proof});
  add({"cn.proof.formula", Kind::Proof, "C_n", "C_n, W_{n+1} subsection, first theorem, proof, binomial Betti formula",
       "b(i,i+1)(k[C_n]) = C(n,i+1) - nC(n-1,i) + nC(n-2,i-1) for 1 <= i <= n-3.", hochster, Status::Refuted,
       {"cn.theorem.stated"}, R(4, 8), "n", cn_proof_formula});
  add({"c2k.theorem.stated", Kind::Theorem, "C_{2k}, W_{2k+1}", "C_n, W_{n+1} subsection, second theorem as stated",
       "The dual of Delta^t_k(C_{2k}) (and of W_{2k+1}) is linear but not CM.", full, Status::Refuted,
       {"c2k.theorem.proof"}, R(0, 0, 2, 4), "k", [](Context& cx) { c2k_theorem(cx, true); }});
  add({"c2k.theorem.proof", Kind::Proof, "C_{2k}, W_{2k+1}", "C_n, W_{n+1} subsection, second theorem, proof",
       "The dual is a complete intersection of two monomials: CM and not linear; Delta^t_k itself is linear, not CM.",
       full, Status::Confirmed, {"c2k.theorem.stated"}, R(0, 0, 2, 4), "k", [](Context& cx) { c2k_theorem(cx, false); }});
  add({"c2n.theorem", Kind::Theorem, "C2_n", "C^2_n subsection, theorem and proof",
       "n=6: linear with 8, 12, 6, 1 and not CM; n>6: neither linear nor CM.", full, Status::Confirmed, {}, R(6, 9),
       "n", c2n_theorem});
  add({"l2n.theorem.stated", Kind::Theorem, "L2_n", "L^2_n subsection, first theorem as stated",
       "Signed binomial Betti formula for Delta^t_2(L2_n); clique complex linear with n-2, n-3 in degrees n-2, n-1.",
       full, Status::Refuted, {"l2n.proof.clique", "l2n.proof.delta"}, R(5, 9), "n", l2n_theorem_stated});
  add({"l2n.proof.clique", Kind::Proof, "L2_n", "L^2_n subsection, first theorem, proof, clique complex",
       "Clique complex is a CM fat tree, 2-linear with (n-3)C(n-3,i) - C(n-3,i+1), and series (n-2)/(1-t)^3 - (n-3)/(1-t)^2.",
       full + ", is_fat_forest", Status::Confirmed, {"l2n.theorem.stated"}, R(5, 9), "n", l2n_proof_clique});
  add({"l2n.proof.series", Kind::Proof, "L2_n", "L^2_n subsection, first theorem, proof, Hilbert series of Delta^t_2",
       "Series of Delta^t_2(L2_n) from the dual f-vector.", "hilbert_from_fvector", Status::Confirmed, {}, R(5, 9),
       "n", l2n_proof_series});
  add({"l2n.proof.delta", Kind::Proof, "L2_n", "L^2_n subsection, first theorem, proof, closing sentence",
       "Delta^t_2(L2_n) is (n-2)-linear with b(1,n-2)=n-2 and b(2,n-1)=n-3.", hochster, Status::Refuted,
       {"l2n.theorem.stated"}, R(5, 9), "n", l2n_proof_delta});
  add({"l2n.conjecture", Kind::Conjecture, "L2_n", "L^2_n subsection, conjecture",
       "Delta^t_k(L2_n) and its dual are linear and CM.", full, Status::Confirmed, {}, R(1, 10, 1, 3), "nk",
       l2n_conjecture});
  add({"l2n8.example", Kind::Example, "L2_8, k=3", "L^2_n subsection, first example",
       "Delta^t_3(L2_8) has 6, 8, 3 and its dual 4, 3.", hochster, Status::Confirmed, {}, R(8, 8, 3, 3), "",
       l2n8_example});
  add({"c2l2.theorem", Kind::Theorem, "C2_{3k}, L2_{3k-2}", "L^2_n subsection, second theorem and proof",
       "Both Delta^t_k are linear; the C2 one is not CM, the L2 one is; duals are CM with the listed monomial ideals.",
       full, Status::Confirmed, {}, R(0, 0, 2, 4), "k", c2l2_theorem});
  add({"c8.example", Kind::Example, "C_8, k=4", "L^2_n subsection, closing examples, C_8 table",
       "Delta^t_4(C_8) has 16, 48, 68, 56, 28, 8, 1 at (i,i+1).", hochster, Status::Confirmed, {}, R(8, 8, 4, 4), "k",
       c8_example});
  add({"l2n10.example", Kind::Example, "L2_10, k=4", "L^2_n subsection, closing examples, L^2_10 table",
       "Delta^t_4(L2_10) has b(i,i)=C(4,i).", hochster, Status::Confirmed, {}, R(10, 10, 4, 4), "",
       [](Context& cx) { four_linear_forms(cx, Family::L2, 10); }});
  add({"l7.example", Kind::Example, "L_7, k=4", "L^2_n subsection, closing examples, L_7 table (read as Delta^t_4)",
       "Delta^t_4(L_7) has b(i,i)=C(4,i).", hochster, Status::Confirmed, {}, R(7, 7, 4, 4), "",
       [](Context& cx) { four_linear_forms(cx, Family::L, 7); }});
  add({"c2n9.example", Kind::Example, "C2_9, k=3", "L^2_n subsection, closing examples, C^2_9 table",
       "Delta^t_3(C2_9) has 27, 81, 108, 81, 36, 9, 1 at (i,i+2).", hochster, Status::Confirmed, {}, R(9, 9, 3, 3), "",
       c2n9_example});
  add({"grid.theorem", Kind::Theorem, "G_{m,n}", "G_{m,n} subsection, theorem",
       "Delta^t_2(G_{m,n}) is linear with 2mn-m-n, 3mn-2m-2n, mn-m-n-1 and not CM; k[G_{m,n}] is CM and not linear.",
       full, Status::Refuted, {"cn.theorem.proof"}, R(2, 4, 0, 0, 2, 3), "nm", grid_theorem});
  add({"grid.proof.series", Kind::Proof, "G_{m,n}", "G_{m,n} subsection, proof, final Hilbert numerator",
       "Numerator 1 - (2mn-m-n)t^(mn-2) + (3mn-2m-2n)t^(mn-1) + (mn-m-n-1)t^(mn).", "hilbert_from_fvector",
       Status::Refuted, {}, R(2, 4, 0, 0, 2, 3), "nm", grid_proof_series});
  std::sort(c.begin(), c.end(), [](const ClaimRecord& a, const ClaimRecord& b) { return a.id < b.id; });
  return c;
}

inline const std::vector<ClaimRecord>& catalog() {
  static const std::vector<ClaimRecord> c = build_catalog();
  return c;
}

inline const ClaimRecord& find_claim(const std::string& id) {
  for (const auto& r : catalog())
    if (r.id == id) return r;
  throw std::invalid_argument("unknown claim id: " + id);
}

// ---------- verification ----------

struct VerifyOptions {
  std::vector<Field> fields{Field::rationals(), Field::prime(2)};
  int guard = kDefaultClaimGround;
  bool allow_large = false;
};

struct ClaimReport {
  std::string id;
  Kind kind = Kind::Theorem;
  std::string locator;
  std::string oracle;
  Status expected = Status::Confirmed;
  std::vector<std::string> conflicts_with;
  std::string uses;
  ParamRange range;
  std::vector<std::string> fields;
  Status status = Status::Confirmed;
  std::string detail;
  std::vector<Check> checks;
  double runtime_ms = 0;

  std::vector<Check> mismatches() const {
    std::vector<Check> out;
    for (const auto& c : checks)
      if (!c.agrees) out.push_back(c);
    return out;
  }
  /// A claim expected to hold came out refuted. Conjectures are evidence only.
  bool unexpected() const {
    return kind != Kind::Conjecture && expected == Status::Confirmed && status == Status::Refuted;
  }
};

inline ClaimReport verify_claim(const ClaimRecord& rec, const Params& params, Oracle& oracle,
                                const VerifyOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  ClaimReport r;
  r.id = rec.id;
  r.kind = rec.kind;
  r.locator = rec.locator;
  r.oracle = rec.oracle;
  r.expected = rec.expected;
  r.conflicts_with = rec.conflicts_with;
  r.uses = rec.uses;
  r.range = resolve(rec.defaults, params);
  std::vector<std::string> good, bad;
  for (const auto& f : opts.fields) {
    r.fields.push_back(f.tag());
    std::vector<Check> checks;
    Context cx(oracle, f, r.range, opts.guard, opts.allow_large, checks);
    rec.evaluate(cx);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.agrees; });
    (ok ? good : bad).push_back(f.tag());
    r.checks.insert(r.checks.end(), checks.begin(), checks.end());
  }
  auto join_tags = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& t : v) s += (s.empty() ? "" : ", ") + t;
    return s;
  };
  const auto failed = r.mismatches().size();
  if (bad.empty()) {
    r.status = Status::Confirmed;
    r.detail = std::to_string(r.checks.size()) + " checks agree over " + join_tags(good);
  } else if (good.empty()) {
    r.status = Status::Refuted;
    r.detail = std::to_string(failed) + " of " + std::to_string(r.checks.size()) + " checks disagree over " +
               join_tags(bad);
  } else {
    r.status = Status::Partial;
    r.detail = "agrees over " + join_tags(good) + "; disagrees over " + join_tags(bad);
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline ClaimReport verify_claim(const std::string& id, const Params& params, Oracle& oracle,
                                const VerifyOptions& opts = {}) {
  return verify_claim(find_claim(id), params, oracle, opts);
}

inline ClaimReport verify_claim(const std::string& id, const Params& params = {}, const VerifyOptions& opts = {}) {
  Oracle oracle;
  return verify_claim(id, params, oracle, opts);
}

/// Every record with its default ranges, ordered by id.
inline std::vector<ClaimReport> verify_all(Oracle& oracle, const VerifyOptions& opts = {}) {
  std::vector<ClaimReport> out;
  for (const auto& rec : catalog()) out.push_back(verify_claim(rec, {}, oracle, opts));
  return out;
}

/// 4 iff some claim expected to hold is refuted, else 0.
inline int exit_code(const std::vector<ClaimReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.unexpected(); }) ? 4 : 0;
}

inline json check_to_json(const Check& c) {
  return {{"field", c.field}, {"instance", c.instance}, {"quantity", c.quantity},
          {"stated", c.stated}, {"oracle", c.oracle}, {"agrees", c.agrees}};
}

inline json report_to_json(const ClaimReport& r, bool with_checks = false, bool with_timing = false) {
  json mism = json::array();
  for (const auto& c : r.mismatches()) mism.push_back(check_to_json(c));
  json j{{"id", r.id},
         {"kind", kind_name(r.kind)},
         {"locator", r.locator},
         {"oracle", r.oracle},
         {"expected", status_name(r.expected)},
         {"status", status_name(r.status)},
         {"detail", r.detail},
         {"fields", r.fields},
         {"range", range_to_json(r.range, r.uses)},
         {"conflictsWith", r.conflicts_with},
         {"checkCount", r.checks.size()},
         {"mismatches", mism}};
  if (with_checks) {
    json all = json::array();
    for (const auto& c : r.checks) all.push_back(check_to_json(c));
    j["checks"] = all;
  }
  if (with_timing) j["runtimeMs"] = r.runtime_ms;
  return j;
}

/// Every locus where the oracle differs from the stated value, in a stable order.
inline json discrepancy_report(const std::vector<ClaimReport>& reports) {
  std::vector<std::pair<const ClaimReport*, Check>> rows;
  for (const auto& r : reports)
    for (const auto& c : r.mismatches()) rows.emplace_back(&r, c);
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first->id, a.second.instance, a.second.quantity, a.second.field) <
           std::tie(b.first->id, b.second.instance, b.second.quantity, b.second.field);
  });
  json out = json::array();
  for (const auto& [r, c] : rows) {
    out.push_back({{"claim", r->id},
                   {"locator", r->locator},
                   {"conflictsWith", r->conflicts_with},
                   {"field", c.field},
                   {"instance", c.instance},
                   {"quantity", c.quantity},
                   {"stated", c.stated},
                   {"oracle", c.oracle}});
  }
  return out;
}

inline json suite_to_json(const std::vector<ClaimReport>& reports, bool with_checks = false, bool with_timing = false) {
  json claims = json::array();
  int counts[3] = {0, 0, 0};
  json unexpected = json::array();
  for (const auto& r : reports) {
    claims.push_back(report_to_json(r, with_checks, with_timing));
    ++counts[static_cast<int>(r.status)];
    if (r.unexpected()) unexpected.push_back(r.id);
  }
  return {{"claims", claims},
          {"summary",
           {{"confirmed", counts[0]}, {"refuted", counts[1]}, {"partial", counts[2]}, {"unexpectedRefutations", unexpected}}},
          {"discrepancies", discrepancy_report(reports)}};
}

inline std::string suite_to_text(const std::vector<ClaimReport>& reports) {
  std::ostringstream os;
  std::size_t w = 5;
  for (const auto& r : reports) w = std::max(w, r.id.size());
  os << std::left;
  os.width(static_cast<std::streamsize>(w + 2));
  os << "claim" << "status     expected   detail\n";
  for (const auto& r : reports) {
    os.width(static_cast<std::streamsize>(w + 2));
    os << r.id;
    os.width(11);
    os << status_name(r.status);
    os.width(11);
    os << status_name(r.expected);
    os << r.detail << (r.unexpected() ? "  <-- unexpected" : "") << "\n";
    for (const auto& c : r.mismatches()) {
      os << "    [" << c.field << "] " << c.instance << ", " << c.quantity << ": stated " << c.stated << " | oracle "
         << c.oracle << "\n";
    }
  }
  return os.str();
}

inline std::string suite_to_tsv(const std::vector<ClaimReport>& reports) {
  std::ostringstream os;
  os << "claim\tfield\tinstance\tquantity\tstated\toracle\tagrees\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      os << r.id << '\t' << c.field << '\t' << c.instance << '\t' << c.quantity << '\t' << c.stated << '\t' << c.oracle
         << '\t' << (c.agrees ? "yes" : "no") << '\n';
  return os.str();
}

// ---------- conjecture scans ----------

struct ScanCell {
  int k = 0;
  int n = 0;
  std::string field;
  bool void_complex = false;
  detail::SideVerdict primal;
  detail::SideVerdict dual;
  bool holds() const { return !void_complex && primal.holds() && dual.holds(); }
};

struct ScanReport {
  std::string conjecture;
  int kmin = 0, kmax = 0, nmax = 0;
  std::vector<std::string> fields;
  std::vector<ScanCell> cells;
  std::optional<ScanCell> first_counterexample;
  std::vector<std::string> notes;
  bool holds_on_range() const { return !first_counterexample.has_value(); }
};

inline constexpr int kDefaultScanGround = 16;

struct ScanOptions {
  std::vector<Field> fields{Field::rationals(), Field::prime(2)};
  int guard = kDefaultScanGround;
  bool allow_large = false;
};

/// Cells (k, n) with n from `nmin_of(k)` to nmax, for every field.
inline ScanReport scan_conjecture(const std::string& name, Family f, int kmin, int kmax, int nmax,
                                  const std::function<int(int)>& nmin_of, Oracle& oracle, const ScanOptions& opts) {
  if (kmin < 1 || kmin > kmax) throw std::invalid_argument("scan needs 1 <= kmin <= kmax");
  if (nmax > opts.guard && !opts.allow_large) {
    throw GuardError("scan up to n=" + std::to_string(nmax) + " exceeds the guard of " + std::to_string(opts.guard),
                     "--allow-large");
  }
  ScanReport r;
  r.conjecture = name;
  r.kmin = kmin;
  r.kmax = kmax;
  r.nmax = nmax;
  for (const auto& field : opts.fields) {
    r.fields.push_back(field.tag());
    for (int k = kmin; k <= kmax; ++k) {
      for (int n = nmin_of(k); n <= nmax; ++n) {
        ScanCell cell;
        cell.k = k;
        cell.n = n;
        cell.field = field.tag();
        const auto d = delta_kt(family_graph(f, n), k);
        cell.void_complex = d.is_void();
        if (!cell.void_complex) {
          const auto dd = alexander_dual(d);
          cell.primal = {has_linear_resolution(oracle.betti(d, field)), oracle.cm(d, field)};
          cell.dual = {has_linear_resolution(oracle.betti(dd, field)), oracle.cm(dd, field)};
          if (!cell.holds() && !r.first_counterexample) r.first_counterexample = cell;
        }
        r.cells.push_back(cell);
      }
    }
  }
  return r;
}

inline ScanReport scan_conjecture_Ln(int kmin, int kmax, int nmax, Oracle& oracle, const ScanOptions& opts = {}) {
  auto r = scan_conjecture("Ln", Family::L, kmin, kmax, nmax, [](int k) { return 2 * k - 1; }, oracle, opts);
  for (const auto& c : r.cells) {
    if (c.k != 3 || c.n != 6) continue;
    r.notes.push_back("[" + c.field + "] cell k=3, n=6: Delta^t_3(L_6) is " + detail::side_string(c.primal) +
                      ", dual " + detail::side_string(c.dual) + (c.primal.cm ? "; the L_6 example's non-CM verdict is rejected"
                                                                              : "; the conjecture fails at L_6") +
                      " (records l6.example.verdict, ln.conjecture)");
  }
  return r;
}

inline ScanReport scan_conjecture_L2n(int kmin, int kmax, int nmax, Oracle& oracle, const ScanOptions& opts = {}) {
  return scan_conjecture("L2n", Family::L2, kmin, kmax, nmax, [](int k) { return k; }, oracle, opts);
}

inline json side_to_json(const detail::SideVerdict& v) {
  return {{"linear", v.linear ? json(*v.linear) : json(nullptr)}, {"cm", v.cm}};
}

inline json scan_to_json(const ScanReport& r) {
  json cells = json::array();
  auto cell_json = [](const ScanCell& c) {
    json j{{"k", c.k}, {"n", c.n}, {"field", c.field}, {"void", c.void_complex}};
    if (!c.void_complex) {
      j["primal"] = side_to_json(c.primal);
      j["dual"] = side_to_json(c.dual);
      j["holds"] = c.holds();
    }
    return j;
  };
  for (const auto& c : r.cells) cells.push_back(cell_json(c));
  return {{"conjecture", r.conjecture},
          {"range", {{"k", {r.kmin, r.kmax}}, {"nmax", r.nmax}}},
          {"fields", r.fields},
          {"cells", cells},
          {"holdsOnRange", r.holds_on_range()},
          {"firstCounterexample", r.first_counterexample ? cell_json(*r.first_counterexample) : json(nullptr)},
          {"notes", r.notes}};
}

inline std::string scan_to_tsv(const ScanReport& r) {
  std::ostringstream os;
  os << "k\tn\tfield\tprimal_linear\tprimal_cm\tdual_linear\tdual_cm\tholds\n";
  auto lin = [](const detail::SideVerdict& v) { return v.linear ? std::to_string(*v.linear) : std::string("no"); };
  for (const auto& c : r.cells) {
    os << c.k << '\t' << c.n << '\t' << c.field << '\t';
    if (c.void_complex) {
      os << "void\tvoid\tvoid\tvoid\tvoid\n";
      continue;
    }
    os << lin(c.primal) << '\t' << yes_no(c.primal.cm) << '\t' << lin(c.dual) << '\t' << yes_no(c.dual.cm) << '\t'
       << yes_no(c.holds()) << '\n';
  }
  return os.str();
}

/// Grid of k rows by n columns: Y holds, N fails, . void or outside the range.
inline std::string scan_to_text(const ScanReport& r) {
  std::ostringstream os;
  os << "conjecture " << r.conjecture << ", k " << r.kmin << ".." << r.kmax << ", n <= " << r.nmax << "\n";
  for (const auto& field : r.fields) {
    os << "field " << field << "\n   n:";
    for (int n = 1; n <= r.nmax; ++n) os << (n < 10 ? "  " : " ") << n;
    os << "\n";
    for (int k = r.kmin; k <= r.kmax; ++k) {
      os << "k=" << k << ": ";
      std::map<int, char> row;
      for (const auto& c : r.cells)
        if (c.field == field && c.k == k) row[c.n] = c.void_complex ? '.' : (c.holds() ? 'Y' : 'N');
      for (int n = 1; n <= r.nmax; ++n) os << "  " << (row.count(n) ? row[n] : ' ');
      os << "\n";
    }
  }
  os << (r.holds_on_range() ? "holds on the whole range\n" : "counterexample found\n");
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    os << "first counterexample: k=" << c.k << " n=" << c.n << " [" << c.field << "] primal "
       << detail::side_string(c.primal) << ", dual " << detail::side_string(c.dual) << "\n";
  }
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace srlab::claims
