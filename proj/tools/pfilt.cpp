// pfilt: command-line front end.
//
// Exit codes: 0 ok, 1 usage or input error, 2 invariant failure (including a
// FAILED certificate or a worked-example mismatch), 3 UNKNOWN with --strict.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pfilt/cache.hpp"
#include "pfilt/pfilt.hpp"
#include "pfilt/scan.hpp"
#include "pfilt/worked_examples.hpp"

namespace {

using namespace pfilt;

constexpr int kOk = 0, kUsage = 1, kInvariant = 2, kUnknown = 3;

struct Options {
  std::string type;
  Int p = 0;
  int n = 1;
  std::string lambda;
  std::string box;
  std::string format = "pretty";
  bool strict = false;
  std::vector<std::string> tables;
  std::string cache_dir;
  unsigned jobs = 0;
  std::string output;
  std::string cache_action = "list";
};

Weight parse_weight(const std::string& s, const RootSystem& rs) {
  std::vector<Int> c;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::size_t used = 0;
    try {
      c.push_back(std::stoll(tok, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw Error("bad weight coordinate '" + tok + "'");
  }
  if (c.size() != rs.rank())
    throw Error("weight " + s + " has " + std::to_string(c.size()) + " coordinates, " + rs.name() +
                " has rank " + std::to_string(rs.rank()));
  return Weight(std::move(c));
}

std::pair<Int, Int> parse_box(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw Error("--box expects lo..hi");
  try {
    std::size_t a = 0, b = 0;
    const std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
    Int l = std::stoll(lo, &a), h = std::stoll(hi, &b);
    if (a != lo.size() || b != hi.size()) throw Error("");
    return {l, h};
  } catch (const std::exception&) {
    throw Error("--box expects integers lo..hi, got '" + s + "'");
  }
}

std::string cache_dir(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  const char* env = std::getenv("PFILT_CACHE");
  return env ? env : "";
}

/// Bundled table for (system, p), if one ships. PFILT_DATA overrides the
/// built-in data directory.
std::string bundled_table(const SystemPtr& sys, Int p) {
  const char* env = std::getenv("PFILT_DATA");
#ifdef PFILT_DATA_DIR
  const std::string dir = env ? env : PFILT_DATA_DIR;
#else
  const std::string dir = env ? env : "";
#endif
  if (dir.empty()) return "";
  const std::string path = dir + "/" + sys->name() + "_p" + std::to_string(p) + ".table.json";
  return std::ifstream(path) ? path : "";
}

/// Solved table for every restricted weight: from --table files, bundled
/// data, the cache, or the solver, in that order of precedence.
DecompTable restricted_table(const Options& o, const SystemPtr& sys, bool use_bundled = true) {
  SimpleCharacters sc(sys, o.p);
  if (const std::string path = use_bundled ? bundled_table(sys, o.p) : ""; !path.empty()) {
    DecompTable t = ingest_table(path, sys);
    for (auto& path : o.tables) t.merge(ingest_table(path, sys));
    return t;
  }
  for (auto& path : o.tables) {
    std::vector<std::string> conflicts;
    sc.ingest(ingest_table(path, sys), &conflicts);
    for (auto& c : conflicts) std::cerr << "note: " << c << '\n';
  }
  const Int bound = o.p - 1;
  const std::string dir = cache_dir(o);
  if (!dir.empty() && o.tables.empty()) {
    TableCache cache(dir);
    if (auto t = cache.load(sys, o.p, bound)) return *t;
    DecompTable t = sc.jantzen_solver(bound);
    cache.store(t, bound);
    return t;
  }
  DecompTable t = sc.jantzen_solver(bound);
  t.merge(sc.table());
  return t;
}

SimpleCharacters make_simples(const Options& o, const SystemPtr& sys) {
  SimpleCharacters sc(sys, o.p);
  if (!o.tables.empty() || !cache_dir(o).empty() || !bundled_table(sys, o.p).empty())
    sc.ingest(restricted_table(o, sys));
  return sc;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int status_exit(const Certificate& c, bool strict) {
  if (c.status == CertStatus::Failed) return kInvariant;
  if (strict && c.status == CertStatus::Unknown) return kUnknown;
  return kOk;
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// -- commands -----------------------------------------------------------------

int cmd_info(const Options& o) {
  auto rs = RootSystem::build(o.type);
  // reducible systems: h is the maximum over components, a0 is per component
  Int h = 0;
  for (auto& c : rs->components()) h = std::max(h, c.coxeter);
  if (o.format == "json") {
    json simple = json::array();
    for (std::size_t i = 0; i < rs->rank(); ++i) simple.push_back(json(rs->simple_root(i).weight.coords()));
    json comps = json::array();
    for (std::size_t c = 0; c < rs->components().size(); ++c)
      comps.push_back({{"h", rs->components()[c].coxeter},
                       {"highest_short_root", json(rs->highest_short_root(static_cast<int>(c)).weight.coords())}});
    print_json({{"system", rs->name()},
                {"rank", rs->rank()},
                {"h", h},
                {"num_positive_roots", rs->num_positive_roots()},
                {"highest_short_root", rs->irreducible() ? json(rs->highest_short_root().weight.coords()) : json()},
                {"rho", json(rs->rho().coords())},
                {"simple_roots", simple},
                {"components", comps}});
    return kOk;
  }
  std::cout << "system  " << rs->name() << "\nrank    " << rs->rank() << "\nh=" << h
            << "\n|R+|=" << rs->num_positive_roots() << "\n";
  for (std::size_t c = 0; c < rs->components().size(); ++c)
    std::cout << "alpha0  " << rs->highest_short_root(static_cast<int>(c)).weight.str() << "  (h="
              << rs->components()[c].coxeter << ")\n";
  std::cout << "rho     " << rs->rho().str() << "\nsimple roots (fundamental weight coordinates):\n";
  for (std::size_t i = 0; i < rs->rank(); ++i) std::cout << "  a" << i + 1 << " = " << rs->simple_root(i).weight.str() << '\n';
  return kOk;
}

int cmd_criteria(const Options& o) {
  auto rs = RootSystem::build(o.type);
  const Weight l = parse_weight(o.lambda, *rs);
  SimpleCharacters sc = make_simples(o, rs);
  std::optional<G1BFactorList> factors;
  try {
    factors = decompose(l, sc);
  } catch (const SimpleCharUnavailable& e) {
    std::cerr << "note: " << e.what() << "; main_bound not evaluated\n";
  }
  const CriteriaReport r = criteria(*rs, l, o.p, factors ? &*factors : nullptr);
  const bool gap = !r.small && !r.large;
  if (o.format == "json") {
    json j = to_json(r);
    j["region_gap"] = gap;
    print_json(j);
  } else {
    auto yn = [](bool b) { return b ? "true" : "false"; };
    std::cout << "lambda=" << l.str() << " p=" << o.p << " h=" << r.h << '\n'
              << "small=" << yn(r.small) << "\nlarge=" << yn(r.large) << "\none_wall=" << yn(r.one_wall)
              << "\nmain_bound=" << yn(r.main_bound) << "\nglobal_bound=" << yn(r.global_bound) << '\n';
    if (r.factors_available) std::cout << "I_lambda=" << join(r.I) << " h_lambda=" << r.h_lambda << '\n';
    if (gap)
      std::cout << "region gap: lambda lies outside both the small and the large region"
                << (r.best() == Flag::None ? "; no criterion applies" : "") << '\n';
  }
  if (o.strict && !r.factors_available) return kUnknown;
  return kOk;
}

void print_certificate(const Certificate& c, const std::string& format) {
  if (format == "json") {
    print_json(to_json(c));
    return;
  }
  if (format == "tsv") {
    std::cout << "mu0\tmu1\tmult\n";
    for (auto& l : c.lines) std::cout << l.mu0.str() << '\t' << l.mu1.str() << '\t' << l.mult << '\n';
    return;
  }
  std::cout << "lambda=" << c.lambda.str() << " p=" << c.p << " n=" << c.n << "\nstatus=" << c.status_string()
            << '\n';
  if (!c.note.empty()) std::cout << "note: " << c.note << '\n';
  for (auto& l : c.lines)
    std::cout << "  " << l.mult << " x L" << l.mu0.str() << " (x) nabla" << l.mu1.str() << "^[" << c.n << "]\n";
}

int cmd_certify(const Options& o) {
  auto rs = RootSystem::build(o.type);
  const Weight l = parse_weight(o.lambda, *rs);
  SimpleCharacters sc = make_simples(o, rs);
  const Certificate c = certify_at(l, o.n, sc);
  print_certificate(c, o.format);
  if (c.status != CertStatus::Unknown && c.status != CertStatus::Failed && !euler_identity(c, sc)) {
    std::cerr << "error: certificate does not satisfy the Euler identity\n";
    return kInvariant;
  }
  return status_exit(c, o.strict);
}

int cmd_decompose(const Options& o) {
  auto rs = RootSystem::build(o.type);
  const Weight l = parse_weight(o.lambda, *rs);
  SimpleCharacters sc = make_simples(o, rs);
  G1BFactorList list;
  try {
    list = decompose(l, sc);
  } catch (const SimpleCharUnavailable& e) {
    std::cerr << "unknown: " << e.what() << '\n';
    return o.strict ? kUnknown : kOk;
  }
  if (o.format == "json") {
    print_json(to_json(list));
  } else {
    if (o.format == "tsv") std::cout << "weight\tmu0\tmu1\tmult\n";
    for (auto& f : list.factors)
      std::cout << f.weight.str() << '\t' << f.mu0.str() << '\t' << f.mu1.str() << '\t' << f.mult << '\n';
    if (o.format == "pretty")
      std::cout << list.factors.size() << " distinct factors, I_lambda=" << join(I_lambda(list)) << '\n';
  }
  return kOk;
}

int cmd_simple(const Options& o) {
  auto rs = RootSystem::build(o.type);
  const Weight l = parse_weight(o.lambda, *rs);
  SimpleCharacters sc = make_simples(o, rs);
  const SimpleCharResult r = sc.simple_character(l);
  if (r.status != SimpleStatus::Exact) {
    std::cerr << "unknown: ch L" << l.str() << " " << r.notes << '\n';
    return o.strict ? kUnknown : kOk;
  }
  if (o.format == "json") {
    print_json(to_json(r.character));
  } else {
    std::cout << "dim L" << l.str() << " = " << r.character.dimension() << '\n';
    for (auto& [w, m] : r.character.dominant_part().sorted()) std::cout << w.str() << '\t' << m << '\n';
  }
  return kOk;
}

int cmd_scan(const Options& o) {
  auto rs = RootSystem::build(o.type);
  auto [lo, hi] = parse_box(o.box);
  ScanJob job{rs, o.p, o.n, lo, hi, o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency())};
  job.validate();
  SimpleCharacters probe(rs, o.p);  // validates p before the table is built
  const DecompTable seed = restricted_table(o, rs);
  const ScanResult res = run_scan(job, &seed);

  json counts = json::object();
  for (auto& [k, v] : res.counts) counts[k] = v;
  if (o.format == "json") {
    json rows = json::array();
    for (auto& r : res.rows)
      rows.push_back({{"lambda", json(r.lambda.coords())},
                      {"status", r.cert.status_string()},
                      {"flag", to_string(r.cert.flag)},
                      {"n_lines", r.cert.lines.size()},
                      {"dim_check", r.dim_check}});
    print_json({{"system", rs->name()}, {"p", o.p}, {"n", o.n}, {"rows", rows}, {"summary", counts}});
  } else {
    std::cout << "lambda\tstatus\tflag\tn_lines\tdim_check\n";
    for (auto& r : res.rows)
      std::cout << r.lambda.str() << '\t' << r.cert.status_string() << '\t' << to_string(r.cert.flag) << '\t'
                << r.cert.lines.size() << '\t' << r.dim_check << '\n';
    std::ostream& sum = o.format == "tsv" ? std::cerr : std::cout;
    sum << "# " << res.rows.size() << " rows";
    for (auto& [k, v] : res.counts) sum << ", " << k << "=" << v;
    sum << '\n';
  }
  int code = kOk;
  for (auto& r : res.rows) {
    if (r.dim_check == "fail" || r.cert.status == CertStatus::Failed) return kInvariant;
    if (status_exit(r.cert, o.strict) == kUnknown) code = kUnknown;
  }
  return code;
}

int cmd_verify(const Options& o) {
  bool ok = true;
  json out = json::array();
  for (auto& c : examples::verify_all()) {
    ok &= c.pass;
    if (o.format == "json")
      out.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    else
      std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                << '\n';
  }
  if (o.format == "json") print_json(out);
  return ok ? kOk : kInvariant;
}

int cmd_table(const Options& o) {
  auto rs = RootSystem::build(o.type);
  DecompTable t = restricted_table(o, rs, false);
  for (auto& w : t.ambiguous()) std::cerr << "note: row " << w.str() << " undetermined\n";
  SimpleCharacters sc(rs, o.p);
  const auto problems = dimension_cross_check(t, sc);
  for (auto& m : problems) std::cerr << "dimension check: " << m << '\n';
  if (!problems.empty()) return kInvariant;
  DecompTable derived(rs, o.p);
  for (auto [lambda, row] : t.rows()) {
    if (row.provenance == Provenance::Computed) row.provenance = Provenance::Derived;
    derived.insert(std::move(row));
  }
  for (auto& w : t.ambiguous()) derived.mark_ambiguous(w);
  t = std::move(derived);
  if (o.output.empty())
    std::cout << to_json(t).dump() << '\n';
  else
    export_table(t, o.output);
  return o.strict && !t.ambiguous().empty() ? kUnknown : kOk;
}

int cmd_cache(const Options& o) {
  const std::string dir = cache_dir(o);
  if (dir.empty()) throw Error("no cache directory: pass --cache-dir or set PFILT_CACHE");
  TableCache cache(dir);
  if (o.cache_action == "clear") {
    std::cout << "removed " << cache.clear() << " entries\n";
  } else if (o.cache_action == "list") {
    if (std::filesystem::exists(dir))
      for (auto& e : std::filesystem::directory_iterator(dir)) std::cout << e.path().filename().string() << '\n';
  } else {
    throw Error("cache action must be list or clear");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-filtration criteria and character certificates for dual Weyl modules"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool need_p, bool need_lambda) {
    sub->add_option("--type,type", o.type, "Cartan type, e.g. A2, B2, A1xA1")->required();
    if (need_p) sub->add_option("--p", o.p, "prime")->required();
    if (need_lambda) sub->add_option("--lambda", o.lambda, "weight a,b,...")->required();
    sub->add_option("--format", o.format, "json | tsv | pretty")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}));
    sub->add_flag("--strict", o.strict, "exit 3 when a result is UNKNOWN");
    sub->add_option("--table", o.tables, "ingest decomposition data (JSON)");
    sub->add_option("--cache-dir", o.cache_dir, "table cache directory (default $PFILT_CACHE)");
  };

  auto* info = app.add_subcommand("info", "root system data");
  info->add_option("type,--type", o.type, "Cartan type")->required();
  info->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv", "pretty"}));
  auto* crit = app.add_subcommand("criteria", "evaluate the filtration criteria");
  common(crit, true, true);
  auto* cert = app.add_subcommand("certify", "character certificate for one weight");
  common(cert, true, true);
  cert->add_option("--n", o.n, "filtration level n >= 0")->check(CLI::NonNegativeNumber);
  auto* dec = app.add_subcommand("decompose", "composition factors of Z^_1(lambda)");
  common(dec, true, true);
  auto* simple = app.add_subcommand("simple", "character of L(lambda)");
  common(simple, true, true);
  auto* scan = app.add_subcommand("scan", "certificates for every weight in a box");
  common(scan, true, false);
  scan->add_option("--box", o.box, "lo..hi")->required();
  scan->add_option("--n", o.n, "filtration level n >= 0")->check(CLI::NonNegativeNumber);
  scan->add_option("--jobs", o.jobs, "worker threads (default: hardware)");
  auto* verify = app.add_subcommand("verify-paper", "recompute the bundled worked examples");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv", "pretty"}));
  auto* table = app.add_subcommand("table", "solve and export the restricted decomposition table");
  common(table, true, false);
  table->add_option("-o,--output", o.output, "output file (default stdout)");
  auto* cache = app.add_subcommand("cache", "inspect or clear the table cache");
  cache->add_option("action", o.cache_action, "list | clear");
  cache->add_option("--cache-dir", o.cache_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_info(o);
    if (*crit) return cmd_criteria(o);
    if (*cert) return cmd_certify(o);
    if (*dec) return cmd_decompose(o);
    if (*simple) return cmd_simple(o);
    if (*scan) return cmd_scan(o);
    if (*verify) return cmd_verify(o);
    if (*table) return cmd_table(o);
    if (*cache) return cmd_cache(o);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kInvariant;
  } catch (const NegativeRemainder& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
