#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "srlab/complex.hpp"
#include "srlab/graph.hpp"
#include "srlab/resolution.hpp"

namespace srlab::io {

using json = nlohmann::json;

inline json vertex_list(VertexSet s) { return json(s.vertices()); }

inline VertexSet vertex_set_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a vertex list");
  std::vector<int> v;
  for (const auto& x : j) v.push_back(x.get<int>());
  return VertexSet::of(v);
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

/// Accepts {"n", "edges"} or {"family", "n"[, "m"][, "edges"]}.
inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("graph JSON needs an \"n\" field");
  FamilySpec spec;
  spec.n = j.at("n").get<int>();
  spec.m = j.value("m", 0);
  spec.family = j.contains("family") ? parse_family(j.at("family").get<std::string>()) : Family::ExplicitEdges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair [u, v]");
      spec.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return build_family(spec);
}

inline json complex_to_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (auto f : c.facets()) facets.push_back(vertex_list(f));
  return {{"n", c.ground()}, {"facets", facets}, {"void", c.is_void()}};
}

inline SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("facets")) {
    throw std::invalid_argument("complex JSON needs \"n\" and \"facets\"");
  }
  const int n = j.at("n").get<int>();
  std::vector<VertexSet> facets;
  for (const auto& f : j.at("facets")) facets.push_back(vertex_set_from(f));
  if (j.value("void", false)) {
    if (!facets.empty()) throw std::invalid_argument("a void complex has no facets");
    return SimplicialComplex::void_complex(n);
  }
  if (facets.empty()) throw std::invalid_argument("non-void complex needs at least one facet (use [[]] for {{}})");
  return SimplicialComplex::from_facets(n, std::move(facets));
}

/// Canonical serialization; equal complexes give equal strings.
inline std::string canonical(const SimplicialComplex& c) { return complex_to_json(c).dump(); }

inline json fvector_to_json(const FVector& f) { return json(f.coefficients()); }

inline json betti_to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [key, v] : t.entries()) entries.push_back({key.first, key.second, v});
  return {{"field", t.field().tag()}, {"n", t.n()}, {"entries", entries}};
}

inline BettiTable betti_from_json(const json& j) {
  BettiTable t(Field::parse(j.at("field").get<std::string>()), j.at("n").get<int>());
  for (const auto& e : j.at("entries")) t.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>());
  return t;
}

inline json hilbert_to_json(const HilbertSeries& h) {
  return {{"numerator", h.numerator}, {"denomPower", h.denom_power}};
}

inline HilbertSeries hilbert_from_json(const json& j) {
  return HilbertSeries{j.at("numerator").get<Polynomial>(), j.at("denomPower").get<int>()};
}

inline json decomposition_to_json(const FatForestDecomposition& d) {
  return {{"simplexDims", d.simplex_dims}, {"overlapDims", d.overlap_dims}, {"facetOrder", d.facet_order}};
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace srlab::io
