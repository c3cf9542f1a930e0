#include "orbitquant/catalog.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace orbitquant {

using nlohmann::json;

namespace {

constexpr const char* kCatalogVersion = "orbit-quant/1";

// Orbits whose component data does not follow a parametric rule.
constexpr const char* kBuiltinCatalog = R"json({
  "version": "orbit-quant/1",
  "entries": [
    {
      "orbit": [4, 4, 3, 3, 2, 2, 1, 1],
      "abar_rank": 2,
      "specs": { "00": "C4xD3xC2xD1" },
      "note": "rank-10 orbit; only the identity component is on record"
    }
  ]
})json";

unsigned parse_bits(const std::string& key, int abar_rank) {
  if (static_cast<int>(key.size()) != abar_rank)
    fail(Errc::ParseError, "spec key \"" + key + "\" does not have " + std::to_string(abar_rank) + " bits");
  unsigned mask = 0;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] == '1')
      mask |= 1u << i;
    else if (key[i] != '0')
      fail(Errc::ParseError, "spec key \"" + key + "\" is not a bit vector");
  }
  return mask;
}

SubgroupSpec parse_spec_value(const json& v) {
  if (v.is_string()) return SubgroupSpec::parse(v.get<std::string>());
  if (v.is_array()) {
    // [["C",4],["D",3]] form
    std::vector<SubgroupFactor> factors;
    for (const json& f : v) {
      if (!f.is_array() || f.size() != 2 || !f[0].is_string() || !f[1].is_number_integer())
        fail(Errc::ParseError, "spec factor must be a [kind, size] pair");
      std::string k = f[0].get<std::string>();
      FactorKind kind;
      if (k == "A")
        kind = FactorKind::A;
      else if (k == "C")
        kind = FactorKind::C;
      else if (k == "D")
        kind = FactorKind::D;
      else
        fail(Errc::ParseError, "unknown factor kind \"" + k + "\"");
      factors.push_back({kind, f[1].get<int>()});
    }
    if (factors.empty()) fail(Errc::ParseError, "empty spec factor list");
    return SubgroupSpec(std::move(factors));
  }
  fail(Errc::ParseError, "spec value must be a string or a [kind, size] list");
}

CellCatalogEntry parse_entry(const json& e) {
  if (!e.contains("orbit") || !e.contains("abar_rank") || !e.contains("specs"))
    fail(Errc::ParseError, "catalog entry needs orbit, abar_rank and specs");
  CellCatalogEntry entry{
      Partition::make(e.at("orbit").get<std::vector<int>>(), PartitionKind::C),
      e.at("abar_rank").get<int>(),
      {},
      e.value("note", std::string{})};
  if (entry.abar_rank < 0 || entry.abar_rank > 16) fail(Errc::ParseError, "abar_rank out of range");
  for (const auto& [key, value] : e.at("specs").items())
    entry.specs.emplace(parse_bits(key, entry.abar_rank), parse_spec_value(value));
  if (entry.specs.empty()) fail(Errc::ParseError, "catalog entry has no specs");
  return entry;
}

// Family rule for (2^{2p} 1^{2q}).
CellCatalogEntry family_entry(const Partition& orbit, int p, int q) {
  CellCatalogEntry entry{orbit, 1, {}, "two-row family rule"};
  entry.specs.emplace(0u, SubgroupSpec({{FactorKind::D, p}, {FactorKind::C, p + q}}));
  entry.specs.emplace(1u, SubgroupSpec({{FactorKind::D, p + q + 1}, {FactorKind::C, p - 1}}));
  return entry;
}

std::multiset<int> coordinate_multiset(const Weight& w) {
  return std::multiset<int>(w.doubled().begin(), w.doubled().end());
}

// Arrangement invariant: each stored spec must arrange exactly the
// coordinates of the orbit's lambda.
void check_entry(const CellCatalogEntry& entry) {
  OrbitDescriptor od = orbit_descriptor(entry.orbit);
  std::multiset<int> lambda = coordinate_multiset(od.lambda);
  for (const auto& [element, spec] : entry.specs) {
    if (spec.ambient_rank() != od.rank)
      fail(Errc::CatalogMismatch, "spec " + spec.to_string() + " for orbit " + entry.orbit.to_string() +
                                      " has rank " + std::to_string(spec.ambient_rank()) + ", orbit rank is " +
                                      std::to_string(od.rank));
    if (coordinate_multiset(spec.arrangement()) != lambda)
      fail(Errc::CatalogMismatch, "spec " + spec.to_string() + " for orbit " + entry.orbit.to_string() +
                                      " does not arrange the lambda coordinates " + od.lambda.to_string());
  }
}

}  // namespace

const SubgroupSpec& CellCatalogEntry::spec_for(unsigned element) const {
  auto it = specs.find(element);
  if (it == specs.end()) {
    fail(Errc::MissingSpec, "orbit " + orbit.to_string() + " has no subgroup spec for component element " +
                                std::to_string(element));
  }
  return it->second;
}

Catalog Catalog::from_json_text(const std::string& text, const std::string& origin) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::ParseError, origin + ": not valid JSON");
  if (!doc.is_object() || doc.value("version", std::string{}) != kCatalogVersion)
    fail(Errc::ParseError, origin + ": expected a catalog document with version \"" + kCatalogVersion + "\"");
  Catalog cat;
  for (const json& e : doc.value("entries", json::array())) {
    CellCatalogEntry entry = parse_entry(e);
    std::vector<int> key = entry.orbit.parts();
    cat.entries_.insert_or_assign(std::move(key), std::move(entry));
  }
  return cat;
}

Catalog Catalog::builtin() { return from_json_text(kBuiltinCatalog, "builtin catalog"); }

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open catalog file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), path);
}

void Catalog::merge(const Catalog& overlay) {
  for (const auto& [key, entry] : overlay.entries_) entries_.insert_or_assign(key, entry);
}

CellCatalogEntry Catalog::lookup(const Partition& p) const {
  if (p.kind() != PartitionKind::C) fail(Errc::KindMismatch, "catalog holds type-C orbits");
  if (auto it = entries_.find(p.parts()); it != entries_.end()) {
    check_entry(it->second);
    return it->second;
  }
  if (auto family = two_one_family(p)) {
    CellCatalogEntry entry = family_entry(p, family->first, family->second);
    check_entry(entry);
    return entry;
  }
  fail(Errc::NotInCatalog, "orbit " + p.to_string() +
                               " has no catalog entry; supply one (abar_rank and subgroup specs) via --catalog");
}

}  // namespace orbitquant
