// grrcensus: censuses, verification suites, scenarios and bound tables.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "grr/autgraph.hpp"
#include "grr/corpus.hpp"
#include "grr/report.hpp"

namespace {

using namespace grr;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Writes to the named file, or stdout when the name is empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw Error("cannot write " + path);
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Mask parse_set(const GroupTable& g, std::string text) {
  for (char& c : text)
    if (c == ',' || c == '{' || c == '}') c = ' ';
  std::istringstream in(text);
  Mask m = 0;
  for (std::string tok; in >> tok;) {
    int x = -1;
    try {
      std::size_t used = 0;
      x = std::stoi(tok, &used);
      if (used != tok.size()) x = -1;
    } catch (const std::exception&) {
    }
    if (x < 0 || x >= g.order()) throw Error("'" + tok + "' is not an element of " + g.name());
    m |= bit(x);
  }
  return m;
}

/// The record must satisfy the census invariants.
bool census_consistent(const CensusRecord& r) {
  const BigInt sum = BigInt(r.counts.regular) + r.counts.non_regular;
  if (sum != r.total) return false;
  if (r.counts.regular > r.counts.normal) return false;
  return BigInt(r.counts.normal) <= r.total;
}

struct CensusArgs {
  std::string group, mode = "graph", method = "exhaustive", out;
  std::uint64_t samples = 100000, seed = 1, offset = 0;
  int jobs = 1;
  bool csv = false;
};

int run_census(const CensusArgs& a) {
  const GroupTable g = load_group(a.group);
  const Mode mode = parse_mode(a.mode);
  CensusRecord r;
  if (a.method == "exhaustive")
    r = exhaustive_census(g, mode, a.jobs);
  else if (a.method == "sample")
    r = monte_carlo_census(g, mode, a.samples, a.seed, a.jobs, a.offset);
  else
    throw Error("unknown method '" + a.method + "'");
  Sink sink(a.out);
  if (a.csv)
    sink.out() << csv_header_census() << "\n" << to_csv(r) << "\n";
  else
    sink.out() << to_json(r).dump(2) << "\n";
  if (!census_consistent(r)) {
    std::cerr << "census counts violate the partition invariants\n";
    return kExitFail;
  }
  return 0;
}

struct VerifyArgs {
  std::string suite, corpus, out;
  int max_order = 16;
  bool csv = false;
};

int run_verify(const VerifyArgs& a) {
  const std::vector<std::string> corpus = a.corpus.empty() ? default_corpus() : load_corpus(a.corpus);
  std::vector<std::string> suites;
  if (a.suite == "all")
    suites = suite_ids();
  else
    suites.push_back(a.suite);
  Sink sink(a.out);
  if (a.csv) sink.out() << csv_header_suite() << "\n";
  int failures = 0;
  for (const auto& id : suites) {
    const VerificationReport rep = verify_suite(id, a.max_order, corpus);
    for (const auto& rec : rep.records) {
      if (a.csv)
        sink.out() << to_csv(rec, id) << "\n";
      else
        sink.out() << to_json(rec, id).dump() << "\n";
    }
    failures += rep.failures();
    std::cerr << id << ": " << rep.records.size() << " records, " << rep.failures() << " failures\n";
  }
  return failures ? kExitFail : 0;
}

int run_scenarios(const std::string& group, const std::string& strategy, const std::string& out, bool csv) {
  const GroupTable g = load_group(group);
  const auto list = build_scenarios(g, parse_strategy(strategy));
  Sink sink(out);
  if (csv) sink.out() << csv_header_scenario() << "\n";
  for (const auto& s : list) sink.out() << (csv ? to_csv(s) : to_json(s).dump()) << "\n";
  return 0;
}

int run_bounds(const std::string& r, const std::string& c, bool csv) {
  const long double rv = parse_order(r);
  long double cv = rv;
  if (!c.empty()) {
    std::size_t used = 0;
    cv = std::stold(c, &used);
    if (used != c.size() || cv < 0) throw Error("--c must be a nonnegative number");
  }
  const BoundTable b = bound_evaluator(rv, cv);
  if (csv)
    std::cout << csv_header_bounds() << "\n" << to_csv(b) << "\n";
  else
    std::cout << to_json(b).dump(2) << "\n";
  return 0;
}

int run_cayley(const std::string& group, const std::string& set, const std::string& out) {
  const GroupTable g = load_group(group);
  const CayleyDigraph c = build_cayley(g, parse_set(g, set));
  Sink sink(out);
  sink.out() << export_adjacency(c.graph);
  return 0;
}

int run_unlabeled(const std::string& group) {
  const GroupTable g = load_group(group);
  std::cout << to_json(unlabeled_census(g), g.name()).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Censuses of Cayley (di)graphs and checks of the counting bounds"};
  app.require_subcommand(1);

  CensusArgs ca;
  auto* census = app.add_subcommand("census", "Exhaustive or sampled census of connection sets");
  census->add_option("--group", ca.group, "Group descriptor or .gtab path")->required();
  census->add_option("--mode", ca.mode, "graph or digraph")->check(CLI::IsMember({"graph", "digraph"}));
  census->add_option("--method", ca.method, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  census->add_option("--samples", ca.samples, "Sample count")->check(CLI::Range(std::uint64_t{1}, ~std::uint64_t{0}));
  census->add_option("--seed", ca.seed, "Sampling seed");
  census->add_option("--offset", ca.offset, "First sample index");
  census->add_option("--jobs", ca.jobs, "Worker threads")->check(CLI::Range(1, 256));
  census->add_option("--out", ca.out, "Output file (default stdout)");
  census->add_flag("--csv", ca.csv, "Flat CSV summary instead of JSON");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; one JSON record per line");
  verify->add_option("--suite", va.suite, "Suite id, or 'all'")->required();
  verify->add_option("--max-order", va.max_order, "Largest group order checked");
  verify->add_option("--corpus", va.corpus, "Corpus manifest (default: built-in corpus)");
  verify->add_option("--out", va.out, "Output file (default stdout)");
  verify->add_flag("--csv", va.csv, "CSV instead of JSON lines");

  std::string sg, strategy = "full", sout;
  bool scsv = false;
  auto* scen = app.add_subcommand("scenarios", "Transitive overgroups of the regular representation");
  scen->add_option("--group", sg, "Group descriptor or .gtab path")->required();
  scen->add_option("--strategy", strategy, "full, aut or graph-aut")
      ->check(CLI::IsMember({"full", "aut", "graph-aut"}));
  scen->add_option("--out", sout, "Output file (default stdout)");
  scen->add_flag("--csv", scsv, "CSV instead of JSON lines");

  std::string br, bc;
  bool bcsv = false;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the asymptotic bound exponents");
  bounds->add_option("--r", br, "Group order, N or 2^K")->required();
  bounds->add_option("--c", bc, "c(R); defaults to r");
  bounds->add_flag("--csv", bcsv, "CSV instead of JSON");

  std::string cg, cs, cout_path;
  auto* cayley = app.add_subcommand("cayley", "Export the adjacency list of Cay(R, S)");
  cayley->add_option("--group", cg, "Group descriptor or .gtab path")->required();
  cayley->add_option("--set", cs, "Connection set, e.g. \"1,2\"")->required();
  cayley->add_option("--out", cout_path, "Output file (default stdout)");

  std::string ug;
  auto* unlabeled = app.add_subcommand("unlabeled", "Isomorphism-class census of Cayley graphs, r <= 10");
  unlabeled->add_option("--group", ug, "Group descriptor or .gtab path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*census) return run_census(ca);
    if (*verify) return run_verify(va);
    if (*scen) return run_scenarios(sg, strategy, sout, scsv);
    if (*bounds) return run_bounds(br, bc, bcsv);
    if (*cayley) return run_cayley(cg, cs, cout_path);
    if (*unlabeled) return run_unlabeled(ug);
  } catch (const ProofViolation& e) {
    std::cerr << "proof violation: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
