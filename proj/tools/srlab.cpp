#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "srlab/cache.hpp"
#include "srlab/claims.hpp"
#include "srlab/io.hpp"
#include "srlab/report.hpp"

using namespace srlab;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitVoid = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "json";
  unsigned threads = 0;
  bool allow_large = false;
  std::string cache_dir;

  std::optional<DiskCache> cache() const {
    if (!cache_dir.empty()) return DiskCache(cache_dir);
    return DiskCache::from_env();
  }
};

struct Source {
  std::string family;
  std::optional<int> n, m, k;
  bool dual = false;
  bool clique = false;
  std::string input;
};

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("--family", s.family, "Graph family: P L S C W C2 L2 Kmn K2xKn Grid");
  cmd->add_option("--n", s.n, "Family size parameter");
  cmd->add_option("--m", s.m, "Second parameter for Kmn and Grid");
  cmd->add_option("--k", s.k, "Independence size for Delta^t_k");
  cmd->add_flag("--dual", s.dual, "Take the Alexander dual");
  cmd->add_flag("--clique", s.clique, "Clique complex of the graph instead of Delta^t_k");
  cmd->add_option("--input", s.input, "Graph or complex JSON file");
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  cmd->add_flag("--allow-large", c.allow_large, "Lift the desk-scale size guards");
  cmd->add_option("--cache-dir", c.cache_dir, "Cache directory (default $SRLAB_CACHE_DIR)");
}

SimplicialComplex resolve(const Source& s) {
  if (s.family.empty() == s.input.empty()) throw UsageError("give exactly one of --family or --input");
  std::optional<Graph> graph;
  std::optional<SimplicialComplex> complex;
  if (!s.input.empty()) {
    const auto j = io::read_json_file(s.input);
    if (j.contains("facets")) {
      complex = io::complex_from_json(j);
    } else {
      graph = io::graph_from_json(j);
    }
  } else {
    if (!s.n) throw UsageError("--family needs --n");
    FamilySpec spec;
    spec.family = parse_family(s.family);
    spec.n = *s.n;
    spec.m = s.m.value_or(0);
    graph = build_family(spec);
  }
  if (complex) {
    if (s.k || s.clique) throw UsageError("--k and --clique apply to graph input only");
  } else if (s.clique) {
    if (s.k) throw UsageError("--clique and --k are exclusive");
    complex = clique_complex(*graph);
  } else {
    if (!s.k) throw UsageError("graph input needs --k or --clique");
    complex = delta_kt(*graph, *s.k);
  }
  if (s.dual) complex = alexander_dual(*complex);
  return *complex;
}

void emit(const json& j, const std::string& format) { std::cout << (format == "pretty" ? j.dump(2) : j.dump()) << "\n"; }

std::vector<Field> parse_fields(const std::vector<std::string>& specs) {
  std::vector<Field> out;
  for (const auto& s : specs) out.push_back(Field::parse(s));
  return out;
}

int run_build(const Source& s, const Common& c) {
  const auto complex = resolve(s);
  emit(io::complex_to_json(complex), c.format);
  return complex.is_void() ? kExitVoid : kExitOk;
}

int run_invariants(const Source& s, const Common& c, const std::string& field) {
  const auto complex = resolve(s);
  if (complex.is_void()) {
    emit(io::complex_to_json(complex), c.format);
    return kExitVoid;
  }
  InvariantOptions opts{c.threads, c.allow_large};
  emit(invariants_report(complex, Field::parse(field), opts, c.cache()), c.format);
  return kExitOk;
}

struct VerifyArgs {
  std::string claim;
  bool all = false;
  std::vector<std::string> fields;
  std::optional<int> n, k, m, nmin, nmax, kmin, kmax, mmin, mmax;
  bool checks = false;
  bool timing = false;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  if (a.all == !a.claim.empty()) throw UsageError("give exactly one of --claim or --all");
  claims::Params p;
  p.nmin = a.n ? a.n : a.nmin;
  p.nmax = a.n ? a.n : a.nmax;
  p.kmin = a.k ? a.k : a.kmin;
  p.kmax = a.k ? a.k : a.kmax;
  p.mmin = a.m ? a.m : a.mmin;
  p.mmax = a.m ? a.m : a.mmax;
  claims::VerifyOptions opts;
  if (!a.fields.empty()) opts.fields = parse_fields(a.fields);
  opts.allow_large = c.allow_large;
  HochsterOptions h;
  h.threads = c.threads;
  h.allow_large = c.allow_large;
  claims::Oracle oracle(h, c.cache());
  std::vector<claims::ClaimReport> reports;
  if (a.all) {
    for (const auto& rec : claims::catalog()) reports.push_back(claims::verify_claim(rec, p, oracle, opts));
  } else {
    reports.push_back(claims::verify_claim(claims::find_claim(a.claim), p, oracle, opts));
  }
  if (c.format == "pretty") {
    std::cout << claims::suite_to_text(reports);
  } else if (c.format == "tsv") {
    std::cout << claims::suite_to_tsv(reports);
  } else {
    emit(claims::suite_to_json(reports, a.checks, a.timing), c.format);
  }
  return claims::exit_code(reports);
}

struct ScanArgs {
  std::string conjecture;
  int kmin = 1;
  std::optional<int> kmax, nmax;
  std::vector<std::string> fields;
};

int run_scan(const ScanArgs& a, const Common& c) {
  claims::ScanOptions opts;
  if (!a.fields.empty()) opts.fields = parse_fields(a.fields);
  opts.allow_large = c.allow_large;
  HochsterOptions h;
  h.threads = c.threads;
  h.allow_large = c.allow_large;
  claims::Oracle oracle(h, c.cache());
  claims::ScanReport r;
  if (a.conjecture == "Ln") {
    r = claims::scan_conjecture_Ln(a.kmin, a.kmax.value_or(4), a.nmax.value_or(12), oracle, opts);
  } else {
    r = claims::scan_conjecture_L2n(a.kmin, a.kmax.value_or(3), a.nmax.value_or(10), oracle, opts);
  }
  if (c.format == "pretty") {
    std::cout << claims::scan_to_text(r);
  } else if (c.format == "tsv") {
    std::cout << claims::scan_to_tsv(r);
  } else {
    emit(claims::scan_to_json(r), c.format);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"srlab: Stanley-Reisner rings of independence complexes"};
  app.require_subcommand(1);
  Common common;
  Source source;

  auto* build = app.add_subcommand("build", "Write the canonical JSON of a complex");
  add_source(build, source);
  add_common(build, common);

  std::string field = "Q";
  auto* inv = app.add_subcommand("invariants", "Report every invariant of a complex");
  add_source(inv, source);
  add_common(inv, common);
  inv->add_option("--field", field, "Q or GF(p)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check catalogued claims against the oracles");
  verify->add_option("--claim", va.claim, "Claim id");
  verify->add_flag("--all", va.all, "Every claim with default ranges");
  verify->add_option("--field", va.fields, "Field(s); default Q and GF(2)");
  verify->add_option("--n", va.n);
  verify->add_option("--k", va.k);
  verify->add_option("--m", va.m);
  verify->add_option("--nmin", va.nmin);
  verify->add_option("--nmax", va.nmax);
  verify->add_option("--kmin", va.kmin);
  verify->add_option("--kmax", va.kmax);
  verify->add_option("--mmin", va.mmin);
  verify->add_option("--mmax", va.mmax);
  verify->add_flag("--checks", va.checks, "Include every check, not only mismatches");
  verify->add_flag("--timing", va.timing, "Include per-claim runtimes");
  add_common(verify, common);

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Finite-range evidence for a conjecture");
  scan->add_option("--conjecture", sa.conjecture)->required()->check(CLI::IsMember({"Ln", "L2n"}));
  scan->add_option("--kmin", sa.kmin);
  scan->add_option("--kmax", sa.kmax);
  scan->add_option("--nmax", sa.nmax);
  scan->add_option("--field", sa.fields, "Field(s); default Q and GF(2)");
  add_common(scan, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return run_build(source, common);
    if (*inv) return run_invariants(source, common, field);
    if (*verify) return run_verify(va, common);
    return run_scan(sa, common);
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const VoidComplexError& e) {
    std::cerr << "void: " << e.what() << "\n";
    return kExitVoid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
