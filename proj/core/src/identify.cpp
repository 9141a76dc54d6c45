#include "deltaknot/identify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "deltaknot/errors.hpp"

namespace dk {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Laurent mirror_homfly(const Laurent& p) {
  Laurent m;
  for (const auto& [k, c] : p.terms())
    m += Laurent::monomial(k.first % 4 == 0 ? c : -c, -k.first, k.second);
  return m;
}

}  // namespace

ReferenceTable ReferenceTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open reference table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_csv(buf.str());
}

ReferenceTable ReferenceTable::from_csv(const std::string& text) {
  ReferenceTable table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 5) {
      throw ValidationError("reference line " + std::to_string(lineno) +
                            ": expected 5 comma-separated fields");
    }
    KnotRecord rec;
    rec.name = fields[0];
    if (rec.name == "name") continue;  // header row
    rec.crossings = std::stoi(fields[1]);
    rec.homfly = Laurent::parse(fields[2], "v", "z");
    rec.jones = Laurent::parse(fields[3], "t");
    rec.alexander = Laurent::parse(fields[4], "t");

    auto consistent = [&](const KnotRecord& r) {
      return jones_from_homfly(r.homfly) == r.jones &&
             alexander_from_homfly(r.homfly) == r.alexander;
    };
    if (!consistent(rec)) {
      // foreign chirality convention: mirror every polynomial and retry
      KnotRecord flipped = rec;
      flipped.homfly = mirror_homfly(rec.homfly);
      flipped.jones = rec.jones.map_exponents(-1, 0);
      if (!consistent(flipped)) {
        throw ValidationError(
            "reference row '" + rec.name +
            "': polynomials fail the specialization identities in either "
            "chirality convention");
      }
      rec = std::move(flipped);
      ++table.normalized_;
    }
    for (const auto& r : table.records_) {
      if (r.name == rec.name)
        throw ValidationError("duplicate reference name: " + rec.name);
    }
    table.records_.push_back(std::move(rec));
  }
  return table;
}

const KnotRecord* ReferenceTable::find(const std::string& name) const {
  for (const auto& r : records_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

int ReferenceTable::max_crossings() const {
  int m = 0;
  for (const auto& r : records_) m = std::max(m, r.crossings);
  return m;
}

MatchResult identify(const Fingerprint& f, const ReferenceTable& table) {
  MatchResult res;
  if (f.homfly == Laurent::one() && f.jones == Laurent::one() &&
      f.alexander == Laurent::one()) {
    res.status = MatchStatus::Unique;
    res.names = {kUnknotName};
    return res;
  }
  Fingerprint m = mirror_fingerprint(f);
  bool any_direct = false;
  for (const auto& r : table.records()) {
    bool direct = r.homfly == f.homfly && r.jones == f.jones &&
                  r.alexander == f.alexander;
    bool flipped = r.homfly == m.homfly && r.jones == m.jones &&
                   r.alexander == m.alexander;
    if (direct || flipped) {
      res.names.push_back(r.name);
      any_direct = any_direct || direct;
    }
  }
  std::sort(res.names.begin(), res.names.end());
  res.names.erase(std::unique(res.names.begin(), res.names.end()),
                  res.names.end());
  if (res.names.empty()) return res;
  res.status =
      res.names.size() == 1 ? MatchStatus::Unique : MatchStatus::Ambiguous;
  res.mirrored = !any_direct;
  return res;
}

}  // namespace dk
