#pragma once

#include <optional>
#include <string>

#include "srlab/cache.hpp"
#include "srlab/homology.hpp"
#include "srlab/io.hpp"
#include "srlab/structure.hpp"

namespace srlab {

struct InvariantOptions {
  unsigned threads = 0;
  bool allow_large = false;
};

namespace detail {

inline io::json skipped(const GuardError& e) {
  return {{"skipped", true}, {"reason", e.what()}, {"flag", e.flag()}};
}

inline io::json shedding_to_json(const SheddingTree& t) {
  io::json nodes = io::json::array();
  for (const auto& n : t.nodes) nodes.push_back({{"vertex", n.vertex}, {"link", n.link}, {"deletion", n.deletion}});
  return nodes;
}

template <class F>
io::json guarded(F&& f) {
  try {
    return f();
  } catch (const GuardError& e) {
    return skipped(e);
  }
}

}  // namespace detail

/**
 * Every invariant of k[c] in one JSON object. Structural searches that exceed
 * their guard are reported as skipped along with the flag that lifts the guard.
 */
inline io::json invariants_report(const SimplicialComplex& c, const Field& field, const InvariantOptions& opts = {}) {
  if (c.is_void()) throw VoidComplexError("invariants");
  HochsterOptions h;
  h.threads = opts.threads;
  h.allow_large = opts.allow_large;
  const Limits limits{kDefaultFaceGround, opts.allow_large};
  StructureLimits slimits;
  slimits.allow_large = opts.allow_large;

  const auto betti = betti_hochster(c, field, h);
  const auto hilbert = hilbert_from_fvector(f_vector(c), c.ground());
  const auto linear = has_linear_resolution(betti);
  const auto reisner = is_cm_reisner(c, field, limits);

  io::json cm{{"reisner", reisner.cohen_macaulay}, {"auslanderBuchsbaum", is_cm_ab(c, betti)}};
  if (reisner.face) cm["witness"] = {{"face", io::vertex_list(*reisner.face)}, {"degree", reisner.degree}};
  cm["agree"] = cm["reisner"] == cm["auslanderBuchsbaum"];

  io::json out;
  out["complex"] = io::complex_to_json(c);
  out["field"] = field.tag();
  out["fVector"] = io::fvector_to_json(f_vector(c));
  out["hilbert"] = io::hilbert_to_json(hilbert);
  out["hilbertReduced"] = io::hilbert_to_json(hilbert.reduced());
  out["betti"] = io::betti_to_json(betti);
  out["bettiTotals"] = betti.totals();
  out["projectiveDimension"] = betti.projective_dimension();
  out["linear"] = {{"linear", linear.has_value()}, {"degree", linear ? io::json(*linear) : io::json(nullptr)}};
  out["cohenMacaulay"] = cm;
  out["gorenstein"] = is_gorenstein(c, betti);
  out["fatForest"] = detail::guarded([&] {
    const auto v = is_fat_forest(c, slimits);
    io::json j{{"verdict", v.verdict}};
    if (v.decomposition) j["decomposition"] = io::decomposition_to_json(*v.decomposition);
    return j;
  });
  out["vertexDecomposable"] = detail::guarded([&] {
    const auto v = is_vertex_decomposable(c, slimits);
    io::json j{{"verdict", v.verdict}, {"standardVerdict", v.standard_verdict ? io::json(*v.standard_verdict) : io::json(nullptr)}};
    if (!v.note.empty()) j["note"] = v.note;
    if (v.shedding) j["sheddingTree"] = detail::shedding_to_json(*v.shedding);
    return j;
  });
  out["shellable"] = detail::guarded([&] {
    const auto v = is_pure_shellable(c, slimits);
    io::json j{{"verdict", v.verdict}};
    if (v.verdict) j["shellingOrder"] = v.shelling_order;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
  });
  return out;
}

/// As above, read from or stored into `cache` keyed by complex, field and guard setting.
inline io::json invariants_report(const SimplicialComplex& c, const Field& field, const InvariantOptions& opts,
                                  const std::optional<DiskCache>& cache) {
  if (!cache) return invariants_report(c, field, opts);
  const auto key = DiskCache::complex_key(c, field) + (opts.allow_large ? "|large" : "|guarded");
  if (auto hit = cache->get("invariants", key)) return *hit;
  auto report = invariants_report(c, field, opts);
  cache->put("invariants", key, report);
  return report;
}

}  // namespace srlab
