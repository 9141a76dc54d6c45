#include "deltaknot/tabulate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <tuple>
#include <set>
#include <sstream>

#include "deltaknot/errors.hpp"
#include "deltaknot/expand.hpp"

namespace dk {

namespace {

constexpr char kTypeLetters[] = "STUW";

// "9a13" -> (9, 'a', 13): numeric-aware ordering for knot names
std::tuple<int, char, int> name_key(const std::string& name) {
  size_t i = 0;
  int c = 0;
  while (i < name.size() && isdigit(static_cast<unsigned char>(name[i])))
    c = 10 * c + (name[i++] - '0');
  char fam = i < name.size() ? name[i++] : ' ';
  int idx = 0;
  while (i < name.size() && isdigit(static_cast<unsigned char>(name[i])))
    idx = 10 * idx + (name[i++] - '0');
  return {c, fam, idx};
}

struct FingerprintCache {
  std::map<std::string, Fingerprint> entries;
  std::ofstream append;

  void open(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string key, comp, h, j, a;
      if (!std::getline(ls, key, '\t') || !std::getline(ls, comp, '\t') ||
          !std::getline(ls, h, '\t') || !std::getline(ls, j, '\t') ||
          !std::getline(ls, a, '\t')) {
        continue;  // short or corrupted record: recompute that diagram
      }
      try {
        Fingerprint f;
        f.components = std::stoi(comp);
        f.homfly = Laurent::parse(h, "v", "z");
        f.jones = Laurent::parse(j, "t");
        f.alexander = Laurent::parse(a, "t");
        if (jones_from_homfly(f.homfly) != f.jones) continue;
        entries[key] = std::move(f);
      } catch (const std::exception&) {
        continue;
      }
    }
    append.open(path, std::ios::app);
  }

  void put(const std::string& key, const Fingerprint& f) {
    entries[key] = f;
    if (append.is_open()) {
      append << key << '\t' << f.components << '\t' << f.homfly.str("v", "z")
             << '\t' << f.jones.str("t") << '\t' << f.alexander.str("t")
             << '\n';
      append.flush();
    }
  }
};

}  // namespace

std::string KnotEntry::class_name() const {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += '|';
    out += names[i];
  }
  return out;
}

std::vector<DeltaDiagram> enumerate_assignments(const ShadowProjection& p) {
  const int n = p.size();
  std::vector<DeltaDiagram> out;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  out.reserve(total);
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<char> letters(n);
    for (int i = 0; i < n; ++i) letters[i] = kTypeLetters[idx[i]];
    out.emplace_back(std::move(letters), p.verts());
    int i = n - 1;
    while (i >= 0 && ++idx[i] == 4) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<DeltaDiagram> dedupe_mirrors(const std::vector<DeltaDiagram>& in) {
  std::vector<DeltaDiagram> out;
  std::set<std::string> seen;
  for (const auto& d : in) {
    std::string k = d.canonical_key();
    if (seen.count(k)) continue;
    seen.insert(k);
    seen.insert(d.mirror().canonical_key());
    out.push_back(d);
  }
  return out;
}

std::vector<ShadowProjection> load_spd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open sPD file: " + path);
  std::vector<ShadowProjection> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r\n");
    out.push_back(ShadowProjection::parse(line.substr(b, e - b + 1)));
  }
  return out;
}

TabulationReport run_pipeline(const TabulationOptions& opts) {
  if (!opts.reference) throw ValidationError("reference table required");
  HomflyEngine local_engine;
  HomflyEngine* engine = opts.engine ? opts.engine : &local_engine;
  FingerprintCache cache;
  if (!opts.cache_path.empty()) cache.open(opts.cache_path);

  TabulationReport report;
  // aggregation key -> entry; key is the class name, or the fingerprint
  // text for unknowns so equal unknowns coalesce
  std::map<std::string, KnotEntry> agg;

  for (const auto& [n, projections] : opts.tb_sets) {
    TabulationStats st;
    st.n = n;
    st.projections = static_cast<int>(projections.size());
    for (const auto& p : projections) {
      if (p.strand_components() != 1) continue;
      ++st.knot_projections;
      auto all = enumerate_assignments(p);
      st.diagrams += static_cast<long long>(all.size());
      auto kept = dedupe_mirrors(all);
      st.after_dedup += static_cast<long long>(kept.size());
      for (const auto& d : kept) {
        std::string key = d.canonical_key();
        auto it = cache.entries.find(key);
        Fingerprint f;
        if (it != cache.entries.end()) {
          f = it->second;
        } else {
          f = fingerprint(delta_to_classical(d), engine);
          cache.put(key, f);
        }
        auto match = identify(f, *opts.reference);
        if (match.status == MatchStatus::Unique &&
            match.names[0] == kUnknotName) {
          ++report.unknot_diagrams;
          continue;
        }
        KnotEntry cand;
        cand.status = match.status;
        cand.delta_number = n;
        cand.witness = d.emit();
        cand.mirrored = match.mirrored;
        std::string agg_key;
        if (match.status == MatchStatus::Unknown) {
          cand.names = {};
          agg_key = "?" + f.str();
        } else {
          cand.names = match.names;
          agg_key = cand.class_name();
        }
        auto [slot, fresh] = agg.try_emplace(agg_key, cand);
        if (!fresh) {
          KnotEntry& e = slot->second;
          if (cand.delta_number < e.delta_number ||
              (cand.delta_number == e.delta_number &&
               cand.witness < e.witness)) {
            e.delta_number = cand.delta_number;
            e.witness = cand.witness;
            e.mirrored = cand.mirrored;
          }
        }
      }
    }
    report.total_diagrams += st.diagrams;
    report.stats.push_back(st);
  }

  for (auto& [key, e] : agg) {
    (e.status == MatchStatus::Unknown ? report.unknowns : report.knots)
        .push_back(e);
  }
  auto order = [](const KnotEntry& a, const KnotEntry& b) {
    if (a.delta_number != b.delta_number)
      return a.delta_number < b.delta_number;
    if (a.names != b.names && !a.names.empty() && !b.names.empty())
      return name_key(a.names[0]) < name_key(b.names[0]);
    return a.witness < b.witness;
  };
  std::sort(report.knots.begin(), report.knots.end(), order);
  std::sort(report.unknowns.begin(), report.unknowns.end(), order);
  return report;
}

std::string emit_table1(const TabulationReport& report) {
  std::map<int, std::vector<std::string>> rows;
  for (const auto& st : report.stats) rows[st.n];  // show empty rows too
  for (const auto& e : report.knots)
    rows[e.delta_number].push_back(e.class_name());
  std::ostringstream os;
  for (const auto& [n, names] : rows) {
    os << n << " " << names.size();
    for (const auto& name : names) os << " " << name;
    os << "\n";
  }
  return os.str();
}

std::string emit_table2(const TabulationReport& report) {
  std::ostringstream os;
  for (const auto& e : report.knots) {
    os << e.class_name() << " " << e.witness << "\n";
  }
  if (!report.unknowns.empty()) {
    os << "# unidentified fingerprint classes\n";
    for (const auto& e : report.unknowns) {
      os << "# ? " << e.delta_number << " " << e.witness << "\n";
    }
  }
  return os.str();
}

}  // namespace dk
