// Command-line front end. All domain logic lives in deltaknot::core; this
// file only parses flags, moves bytes, and maps errors to exit codes:
//   0 success, 1 I/O or usage error, 2 parse/validation error,
//   3 resource-budget error, 4 verification mismatch.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "deltaknot/enumerate.hpp"
#include "deltaknot/errors.hpp"
#include "deltaknot/expand.hpp"
#include "deltaknot/fingerprint.hpp"
#include "deltaknot/identify.hpp"
#include "deltaknot/resolve.hpp"
#include "deltaknot/tabulate.hpp"
#include "deltaknot/tangles.hpp"

namespace fs = std::filesystem;
using namespace dk;

namespace {

enum ExitCode { kOk = 0, kIo = 1, kParse = 2, kBudget = 3, kMismatch = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::ios_base::failure("cannot open " + out_path);
  out << text;
}

std::string default_data_dir() {
  const char* env = std::getenv("DELTAKNOT_DATA");
  return env ? env : "data";
}

std::string kind_of(const std::string& path, const std::string& forced) {
  if (!forced.empty()) return forced;
  auto ext = fs::path(path).extension().string();
  if (ext == ".spd" || ext == ".dpd" || ext == ".tpd" || ext == ".pd")
    return ext.substr(1);
  throw CLI::ValidationError("--kind", "cannot infer codec from " + path);
}

Fingerprint fingerprint_of(const std::string& path, const std::string& kind,
                           HomflyEngine* engine) {
  std::string text = read_file(path);
  if (kind == "pd") return fingerprint(ClassicalDiagram::parse(text), engine);
  if (kind == "dpd")
    return fingerprint(delta_to_classical(DeltaDiagram::parse(text)), engine);
  throw CLI::ValidationError("--kind", "expected pd or dpd, got " + kind);
}

std::vector<ShadowProjection> load_projections(const std::string& path) {
  if (fs::is_directory(path)) {
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(path)) {
      if (e.path().extension() == ".spd") files.push_back(e.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<ShadowProjection> all;
    for (const auto& f : files) {
      auto part = load_spd_file(f);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  return load_spd_file(path);
}

// ------------------------------------------------------------ subcommands

int cmd_parse(const std::string& path, const std::string& forced_kind) {
  std::string kind = kind_of(path, forced_kind);
  std::string text = read_file(path);
  if (kind == "spd")
    std::cout << ShadowProjection::parse(text).emit() << "\n";
  else if (kind == "dpd")
    std::cout << DeltaDiagram::parse(text).emit() << "\n";
  else if (kind == "tpd")
    std::cout << TripleDiagram::parse(text).emit() << "\n";
  else
    std::cout << ClassicalDiagram::parse(text).emit() << "\n";
  return kOk;
}

int cmd_resolve(const std::string& path, const std::string& from,
                const std::string& to, bool optimized,
                const std::string& out_path) {
  std::string text = read_file(path);
  std::string result;
  if (from == "dpd") {
    auto d = DeltaDiagram::parse(text);
    if (to == "tpd")
      result = delta_to_triples(d).emit();
    else if (to == "pd")
      result = delta_to_classical(d).emit();
    else
      throw CLI::ValidationError("--to", "dpd resolves to tpd or pd");
  } else {
    auto t = TripleDiagram::parse(text);
    DeltaDiagram d;
    if (optimized) {
      auto [dd, report] = triple_to_deltas_optimized(t);
      d = std::move(dd);
      std::cerr << report.input_kind << " " << report.input_crossings
                << " -> " << report.output_kind << " "
                << report.output_crossings << " (bound "
                << delta_upper_bound(t) << ", free loops "
                << report.free_loops << ")\n";
      for (const auto& r : report.rules) std::cerr << "  rule " << r << "\n";
    } else {
      d = triple_to_deltas_naive(t);
    }
    if (to == "dpd")
      result = d.emit();
    else if (to == "pd")
      result = delta_to_classical(d).emit();
    else
      throw CLI::ValidationError("--to", "tpd resolves to dpd or pd");
  }
  write_output(out_path, result + "\n");
  return kOk;
}

int cmd_detect(const std::string& path, const std::string& patterns_csv,
               const std::string& format) {
  auto shadow = ShadowProjection::parse(read_file(path));
  auto map = shadow.planar_map();
  std::set<std::string> wanted;
  std::stringstream ss(patterns_csv);
  for (std::string id; std::getline(ss, id, ',');) wanted.insert(id);
  for (const auto& spec : default_patterns()) {
    if (!wanted.count(spec.id)) continue;
    auto hits = detect_pattern(map, spec);
    if (format == "tsv") {
      std::cout << spec.id << "\t" << hits.size() << "\n";
    } else {
      std::cout << spec.id << ": " << hits.size() << " embeddings\n";
    }
    for (const auto& h : hits) {
      std::cout << (format == "tsv" ? "\t" : "  vertices");
      for (int v : h.vertices) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  auto counts = max_disjoint_counts(map);
  if (format == "tsv")
    std::cout << "disjoint\t" << counts.t1 << "\t" << counts.t2 << "\t"
              << counts.t3 << "\t" << counts.t4 << "\n";
  else
    std::cout << "max disjoint: T1=" << counts.t1 << " T2=" << counts.t2
              << " T3=" << counts.t3 << " T4=" << counts.t4 << "\n";
  return kOk;
}

int cmd_invariant(const std::string& path, const std::string& which,
                  const std::string& forced_kind, int budget) {
  HomflyEngine engine(budget);
  auto f = fingerprint_of(path, kind_of(path, forced_kind), &engine);
  if (which == "homfly" || which == "all")
    std::cout << "homfly: " << f.homfly.str("v", "z") << "\n";
  if (which == "jones" || which == "all")
    std::cout << "jones: " << f.jones.str("t") << "\n";
  if (which == "alexander" || which == "all")
    std::cout << "alexander: " << f.alexander.str("t") << "\n";
  return kOk;
}

int cmd_identify(const std::string& path, const std::string& ref_path,
                 const std::string& forced_kind, int budget) {
  ReferenceTable table;
  table.load(ref_path);
  HomflyEngine engine(budget);
  auto f = fingerprint_of(path, kind_of(path, forced_kind), &engine);
  auto m = identify(f, table);
  const char* status = m.status == MatchStatus::Unique      ? "unique"
                       : m.status == MatchStatus::Ambiguous ? "ambiguous"
                                                            : "unknown";
  std::cout << "status: " << status << "\n";
  for (const auto& n : m.names) std::cout << "name: " << n << "\n";
  std::cout << "mirrored: " << (m.mirrored ? "yes" : "no") << "\n";
  return m.status == MatchStatus::Unknown ? kMismatch : kOk;
}

int cmd_tabulate(const std::string& tb_dir, int max_n,
                 const std::string& ref_path, const std::string& cache_path,
                 const std::string& out_dir, int budget) {
  ReferenceTable table;
  table.load(ref_path);
  HomflyEngine engine(budget);
  TabulationOptions opts;
  for (int n = 1; n <= max_n; ++n) {
    auto path = tb_dir + "/tb" + std::to_string(n) + ".spd";
    opts.tb_sets.emplace_back(n, load_spd_file(path));
  }
  opts.reference = &table;
  opts.cache_path = cache_path;
  opts.engine = &engine;
  auto report = run_pipeline(opts);
  fs::create_directories(out_dir);
  write_output(out_dir + "/table1.txt", emit_table1(report));
  write_output(out_dir + "/table2.txt", emit_table2(report));
  std::ostringstream stats;
  for (const auto& s : report.stats) {
    stats << "n=" << s.n << " projections=" << s.projections
          << " knot_projections=" << s.knot_projections
          << " diagrams=" << s.diagrams << " after_dedup=" << s.after_dedup
          << "\n";
  }
  stats << "total_diagrams=" << report.total_diagrams
        << " unknot_diagrams=" << report.unknot_diagrams << "\n";
  write_output(out_dir + "/stats.txt", stats.str());
  std::cerr << "tables written to " << out_dir << "\n";
  return kOk;
}

int cmd_verify(const std::string& theorem2_path,
               const std::vector<std::string>& table1,
               const std::vector<std::string>& table2) {
  int failures = 0;
  if (!theorem2_path.empty()) {
    auto projections = load_projections(theorem2_path);
    int ok = 0;
    for (const auto& p : projections) {
      auto m = p.planar_map();
      auto ex = verify_existence(m);
      auto id = face_identity_report(m);
      if (ex.ok && id.residual == 0) {
        ++ok;
      } else {
        ++failures;
        std::cout << "FAIL " << p.emit() << " existence="
                  << (ex.ok ? "ok" : ex.detail) << " residual="
                  << id.residual << "\n";
      }
    }
    std::cout << "theorem2: " << ok << "/" << projections.size()
              << " projections pass\n";
  }
  auto compare = [&](const char* label, const std::vector<std::string>& pair) {
    if (pair.empty()) return;
    std::string got = read_file(pair[0]);
    std::string expect = read_file(pair[1]);
    if (got == expect) {
      std::cout << label << ": match\n";
    } else {
      ++failures;
      std::cout << label << ": MISMATCH (" << pair[0] << " vs " << pair[1]
                << ")\n";
    }
  };
  compare("table1", table1);
  compare("table2", table2);
  return failures ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delta-crossing and triple-crossing diagram toolkit"};
  app.require_subcommand(1);
  int budget = 28;
  app.add_option("--budget", budget, "skein crossing budget")
      ->check(CLI::PositiveNumber);

  std::string path, kind, out_path, format = "text";

  auto* parse = app.add_subcommand("parse", "parse and reprint canonically");
  parse->add_option("file", path)->required();
  parse->add_option("--kind", kind)
      ->check(CLI::IsMember({"spd", "dpd", "tpd", "pd"}));

  std::string from = "dpd", to = "tpd";
  bool optimized = false;
  auto* resolve = app.add_subcommand("resolve", "rewrite between calculi");
  resolve->add_option("file", path)->required();
  resolve->add_option("--from", from)->check(CLI::IsMember({"dpd", "tpd"}));
  resolve->add_option("--to", to)->check(CLI::IsMember({"tpd", "dpd", "pd"}));
  resolve->add_flag("--optimized", optimized, "tangle-aware resolution");
  resolve->add_option("--out", out_path);

  std::string patterns = "T1,T2,T3,T4";
  auto* detect = app.add_subcommand("detect", "find tangle embeddings");
  detect->add_option("file", path)->required();
  detect->add_option("--patterns", patterns);
  detect->add_option("--format", format)
      ->check(CLI::IsMember({"text", "tsv"}));

  std::string which = "all";
  auto* invariant = app.add_subcommand("invariant", "compute polynomials");
  invariant->add_option("file", path)->required();
  invariant->add_option("--which", which)
      ->check(CLI::IsMember({"homfly", "jones", "alexander", "all"}));
  invariant->add_option("--kind", kind)->check(CLI::IsMember({"pd", "dpd"}));

  std::string ref_path = default_data_dir() + "/reference.csv";
  auto* identify_cmd = app.add_subcommand("identify", "name a diagram");
  identify_cmd->add_option("file", path)->required();
  identify_cmd->add_option("--reference", ref_path);
  identify_cmd->add_option("--kind", kind)
      ->check(CLI::IsMember({"pd", "dpd"}));

  std::string tb_dir = default_data_dir(), cache_path, out_dir = "out";
  int max_n = 3;
  auto* tabulate = app.add_subcommand("tabulate", "run the table pipeline");
  tabulate->add_option("--tb-dir", tb_dir);
  tabulate->add_option("--max-n", max_n)->check(CLI::Range(1, 4));
  tabulate->add_option("--reference", ref_path);
  tabulate->add_option("--cache", cache_path);
  tabulate->add_option("--out", out_dir);

  std::string theorem2_path;
  std::vector<std::string> table1_pair, table2_pair;
  auto* verify = app.add_subcommand("verify", "check theorems and tables");
  verify->add_option("--theorem2", theorem2_path,
                     "spd file or directory of projections");
  verify->add_option("--table1", table1_pair, "generated and expected file")
      ->expected(2);
  verify->add_option("--table2", table2_pair, "generated and expected file")
      ->expected(2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed()) return cmd_parse(path, kind);
    if (resolve->parsed())
      return cmd_resolve(path, from, to, optimized, out_path);
    if (detect->parsed()) return cmd_detect(path, patterns, format);
    if (invariant->parsed()) return cmd_invariant(path, which, kind, budget);
    if (identify_cmd->parsed())
      return cmd_identify(path, ref_path, kind, budget);
    if (tabulate->parsed())
      return cmd_tabulate(tb_dir, max_n, ref_path, cache_path, out_dir,
                          budget);
    if (verify->parsed())
      return cmd_verify(theorem2_path, table1_pair, table2_pair);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kIo;
}
