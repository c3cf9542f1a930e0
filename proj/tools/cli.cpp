#include "cli.hpp"

#include "orbitquant/catalog.hpp"
#include "orbitquant/characters.hpp"
#include "orbitquant/dominance.hpp"
#include "orbitquant/errors.hpp"
#include "orbitquant/freudenthal.hpp"
#include "orbitquant/gamma.hpp"
#include "orbitquant/partition.hpp"
#include "orbitquant/subgroup.hpp"
#include "orbitquant/virtual_character.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace orbitquant {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "orbit-quant/1";

struct RunConfig {
  std::vector<int> partition;
  std::string tag = "plus";
  std::string suite;
  std::string format;  // resolved per command when empty
  std::string cache_dir;
  std::string catalog_path;
  int bound = 6;
  int threads = 1;
  std::optional<int> p, q, r;
};

json weight_json(const Weight& w) { return json(w.coord_strings()); }

json weights_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(weight_json(w));
  return a;
}

json partition_json(const Partition& p) { return json(p.parts()); }

json terms_json(const VirtualCharacter& chi) {
  json a = json::array();
  for (const auto& [w, c] : chi.sorted_terms())
    a.push_back(json{{"weight", weight_json(w)}, {"coeff", to_string(c)}});
  return a;
}

json cert_json(const GammaCertificate& c) {
  return json{{"orbit", partition_json(c.orbit)},
              {"tag", tag_name(c.tag)},
              {"support_size", c.support_size},
              {"maxima", weights_json(c.maxima)},
              {"gamma", c.gamma ? weight_json(*c.gamma) : json(nullptr)},
              {"expected", weight_json(c.expected)},
              {"verdict", c.pass ? "pass" : "fail"},
              {"norm_check", c.norm_check}};
}

json cover_json(const CoverCertificate& c) {
  json j = cert_json(c.cert);
  j["coefficient"] = to_string(c.coefficient);
  j["longest_det"] = c.longest_det;
  j["witness"] = c.witness;
  j["verdict"] = c.pass() ? "pass" : "fail";
  return j;
}

Catalog load_catalog(const RunConfig& cfg) {
  Catalog cat = Catalog::builtin();
  if (!cfg.catalog_path.empty()) cat.merge(Catalog::load_file(cfg.catalog_path));
  return cat;
}

VirtualCharacter build_character(const Partition& p, const std::string& tag, const Catalog& cat,
                                 int threads) {
  if (tag == "mcgovern") return mcgovern_character(p);
  const CellCatalogEntry entry = cat.lookup(p);
  if (tag == "plus") return x_pi(entry, 0, threads);
  if (tag == "minus") return x_pi(entry, 1, threads);
  unsigned element = tag == "Re" ? 0 : 1;
  const SubgroupSpec& spec = entry.spec_for(element);
  return r_x(spec.arrangement(), spec, threads);
}

bool two_one_shape(const Partition& p) {
  int ones = 0;
  for (int v : p.parts()) {
    if (v > 2) return false;
    if (v == 1) ++ones;
  }
  return ones % 2 == 0;
}

// closed-form column flags per tag: {plain, cover-extra}
std::optional<std::pair<bool, bool>> closed_variants(const std::string& tag) {
  if (tag == "plus" || tag == "mcgovern") return std::pair{true, false};
  if (tag == "minus") return std::pair{false, true};
  if (tag == "Re") return std::pair{true, true};
  return std::nullopt;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_dual(const RunConfig& cfg, std::ostream& out) {
  Partition p = Partition::make(cfg.partition, PartitionKind::C);
  OrbitDescriptor od = orbit_descriptor(p);
  if (cfg.format == "json") {
    emit(out, json{{"version", kSchemaVersion},
                   {"command", "dual"},
                   {"orbit", partition_json(od.partition)},
                   {"rank", od.rank},
                   {"dual", partition_json(od.dual)},
                   {"h_self", weight_json(od.h_self)},
                   {"h_dual", weight_json(od.h_dual)},
                   {"lambda", weight_json(od.lambda)}});
  } else {
    out << od.dual.to_string() << '\n';
  }
  return 0;
}

int cmd_character(const RunConfig& cfg, std::ostream& out) {
  Partition p = Partition::make(cfg.partition, PartitionKind::C);
  Catalog cat = load_catalog(cfg);
  VirtualCharacter chi = build_character(p, cfg.tag, cat, cfg.threads);
  if (cfg.format == "json") {
    emit(out, json{{"version", kSchemaVersion},
                   {"command", "character"},
                   {"orbit", partition_json(p)},
                   {"tag", cfg.tag},
                   {"rank", chi.rank()},
                   {"term_count", chi.term_count()},
                   {"terms", terms_json(chi)}});
  } else {
    for (const auto& [w, c] : chi.sorted_terms()) out << w.to_string() << "  " << to_string(c) << '\n';
  }
  return 0;
}

int cmd_ktypes(const RunConfig& cfg, std::ostream& out) {
  Partition p = Partition::make(cfg.partition, PartitionKind::C);
  Catalog cat = load_catalog(cfg);
  VirtualCharacter chi = build_character(p, cfg.tag, cat, cfg.threads);
  MultiplicityCache cache(cfg.cache_dir);
  KTypeDecomposition dec = decompose(chi, cfg.bound, cache, cfg.threads);

  auto variants = closed_variants(cfg.tag);
  bool compare = variants && two_one_shape(p);
  bool all_match = true;
  json entries = json::array();
  std::vector<std::string> lines;
  for (const auto& [mu, m] : dec.mults) {
    json row{{"weight", weight_json(mu)}, {"mult", m.str()}};
    std::ostringstream line;
    line << mu.to_string() << "  " << m.str();
    if (compare) {
      Integer closed = 0;
      if (variants->first) closed += closed_form_multiplicity(p, mu, PatternVariant::Plain);
      if (variants->second) closed += closed_form_multiplicity(p, mu, PatternVariant::CoverExtra);
      bool match = m == closed;
      all_match = all_match && match;
      row["closed"] = closed.str();
      row["match"] = match;
      line << "  " << closed.str() << "  " << (match ? "ok" : "MISMATCH");
    }
    entries.push_back(std::move(row));
    lines.push_back(line.str());
  }

  if (cfg.format == "json") {
    json doc{{"version", kSchemaVersion}, {"command", "ktypes"},
             {"orbit", partition_json(p)},  {"tag", cfg.tag},
             {"rank", dec.rank},            {"bound", dec.bound},
             {"entries", entries}};
    doc["all_match"] = compare ? json(all_match) : json(nullptr);
    emit(out, doc);
  } else {
    out << (compare ? "# weight  mult  closed  match\n" : "# weight  mult\n");
    for (const auto& l : lines) out << l << '\n';
    if (compare && !all_match) out << "# MISMATCH against closed form\n";
  }
  return 0;
}

// ---- verify suites ----

struct SuiteResult {
  bool pass = true;
  json certificates = json::array();
  std::vector<std::string> lines;

  void add(bool ok, json cert, std::string line) {
    pass = pass && ok;
    certificates.push_back(std::move(cert));
    lines.push_back(std::move(line) + (ok ? "  pass" : "  FAIL"));
  }
};

std::vector<std::pair<int, int>> filter_pairs(std::vector<std::pair<int, int>> base,
                                              const std::optional<int>& p,
                                              const std::optional<int>& q) {
  if (p && q) return {{*p, *q}};
  std::erase_if(base, [&](const std::pair<int, int>& pr) {
    return (p && pr.first != *p) || (q && pr.second != *q);
  });
  return base;
}

std::vector<std::pair<int, int>> desk_pairs() { return {{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}; }

std::vector<std::pair<int, int>> pairs_up_to(int max2pq) {
  std::vector<std::pair<int, int>> ps;
  for (int p = 1; 2 * p <= max2pq; ++p)
    for (int q = 0; 2 * p + q <= max2pq; ++q) ps.emplace_back(p, q);
  return ps;
}

std::string pq_label(int p, int q) {
  return "p=" + std::to_string(p) + " q=" + std::to_string(q);
}

// pointwise comparison of a decomposition window against the pattern
// closed forms; reports the first few mismatching weights
std::pair<bool, json> check_window(const KTypeDecomposition& dec, const Partition& fam, bool plain,
                                   bool cover) {
  bool ok = true;
  json miss = json::array();
  for (const auto& [mu, m] : dec.mults) {
    Integer want = 0;
    if (plain) want += closed_form_multiplicity(fam, mu, PatternVariant::Plain);
    if (cover) want += closed_form_multiplicity(fam, mu, PatternVariant::CoverExtra);
    if (m != want) {
      ok = false;
      if (miss.size() < 8)
        miss.push_back(json{{"weight", weight_json(mu)}, {"mult", m.str()}, {"closed", want.str()}});
    }
  }
  return {ok, miss};
}

SuiteResult suite_theoremB(const RunConfig& cfg, const Catalog& cat) {
  SuiteResult res;
  MultiplicityCache cache(cfg.cache_dir);
  for (auto [p, q] : filter_pairs(desk_pairs(), cfg.p, cfg.q)) {
    Partition fam = family_partition(p, q);
    auto [xplus, xminus] = unipotent_pair(fam, cat, cfg.threads);
    auto [ok_plus, miss_plus] =
        check_window(decompose(xplus, cfg.bound, cache, cfg.threads), fam, true, false);
    auto [ok_sum, miss_sum] =
        check_window(decompose(xplus + xminus, cfg.bound, cache, cfg.threads), fam, true, true);
    auto [ok_mcg, miss_mcg] =
        check_window(decompose(mcgovern_character(fam), cfg.bound, cache, cfg.threads), fam, true, false);
    bool ok = ok_plus && ok_sum && ok_mcg;
    res.add(ok,
            json{{"instance", pq_label(p, q)},
                 {"orbit", partition_json(fam)},
                 {"bound", cfg.bound},
                 {"plus_is_plain", ok_plus},
                 {"pair_sum_is_plain_plus_cover", ok_sum},
                 {"mcgovern_is_plain", ok_mcg},
                 {"mismatches", json{{"plus", miss_plus}, {"sum", miss_sum}, {"mcgovern", miss_mcg}}},
                 {"verdict", ok ? "pass" : "fail"}},
            pq_label(p, q) + " bound=" + std::to_string(cfg.bound));
  }
  return res;
}

SuiteResult suite_theoremC(const RunConfig& cfg, const Catalog& cat) {
  SuiteResult res;
  for (auto [p, q] : filter_pairs(pairs_up_to(5), cfg.p, cfg.q)) {
    Partition fam = family_partition(p, q);
    GammaCertificate cert = gamma_certificate(fam, CharacterTag::Plus, cat, cfg.threads);
    VirtualCharacter xplus = x_pi(cat.lookup(fam), 0, cfg.threads);
    Weight two_lambda = orbit_descriptor(fam).lambda.scaled(2);
    bool present = xplus.coeff(two_lambda) != 0;
    bool parity_ok = present == (q % 2 == 1);
    bool ok = cert.pass && parity_ok;
    json j = cert_json(cert);
    j["two_lambda_present"] = present;
    j["two_lambda_expected_present"] = q % 2 == 1;
    j["verdict"] = ok ? "pass" : "fail";
    std::string g = cert.gamma ? cert.gamma->to_string() : "incomparable";
    res.add(ok, std::move(j), pq_label(p, q) + " gamma=" + g);
  }
  return res;
}

SuiteResult suite_theoremD(const RunConfig& cfg, const Catalog& cat) {
  SuiteResult res;
  for (auto [p, q] : filter_pairs(pairs_up_to(5), cfg.p, cfg.q)) {
    Partition fam = family_partition(p, q);
    CoverCertificate cc = verify_achar_sommers(fam, cat, std::nullopt, cfg.threads);
    json j = cover_json(cc);
    j["group_order"] = cat.lookup(fam).spec_for(0).order().str();
    std::string mx = cc.cert.maxima.size() == 1 ? cc.cert.maxima.front().to_string() : "not-unique";
    res.add(cc.pass(), std::move(j), pq_label(p, q) + " max=" + mx);
  }
  return res;
}

SuiteResult suite_lemma44(const RunConfig& cfg, const Catalog& cat) {
  SuiteResult res;
  std::vector<int> ps = cfg.p ? std::vector<int>{*cfg.p} : std::vector<int>{1, 2};
  for (int p : ps) {
    Partition fam = family_partition(p, 0);
    VirtualCharacter xplus = unipotent_pair(fam, cat, cfg.threads).first;
    SubgroupSpec aspec({{FactorKind::A, 2 * p}});
    VirtualCharacter asum = r_x(aspec.arrangement(), aspec, cfg.threads);
    bool ok = xplus == asum;
    res.add(ok,
            json{{"instance", "p=" + std::to_string(p)},
                 {"orbit", partition_json(fam)},
                 {"a_spec", aspec.to_string()},
                 {"term_count", xplus.term_count()},
                 {"verdict", ok ? "pass" : "fail"}},
            "p=" + std::to_string(p) + " " + aspec.to_string());
  }
  return res;
}

SuiteResult suite_prop33(const RunConfig& cfg, const Catalog& cat) {
  SuiteResult res;
  for (auto [p, q] : filter_pairs(desk_pairs(), cfg.p, cfg.q)) {
    Partition fam = family_partition(p, q);
    int n = 2 * p + q;
    auto [xplus, xminus] = unipotent_pair(fam, cat, cfg.threads);
    auto ones_weight = [n](int i) {
      std::vector<int> c(n, 0);
      std::fill(c.begin(), c.begin() + 2 * i, 1);
      return Weight::integral(c);
    };
    Rational minus_at_ones = xminus.coeff(ones_weight(p));
    Rational plus_at_zero = xplus.coeff(Weight::zero(n));
    bool lower_vanish = true;
    for (int i = 0; i < p; ++i) lower_vanish = lower_vanish && xminus.coeff(ones_weight(i)) == 0;
    bool ok = minus_at_ones == 1 && plus_at_zero == 1 && lower_vanish;
    res.add(ok,
            json{{"instance", pq_label(p, q)},
                 {"orbit", partition_json(fam)},
                 {"minus_coeff_at_ones", to_string(minus_at_ones)},
                 {"plus_coeff_at_zero", to_string(plus_at_zero)},
                 {"lower_ones_vanish", lower_vanish},
                 {"verdict", ok ? "pass" : "fail"}},
            pq_label(p, q));
  }
  return res;
}

SuiteResult suite_prop42(const RunConfig& cfg) {
  SuiteResult res;
  std::vector<std::pair<int, int>> grid;
  for (int p = 1; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) grid.emplace_back(p, q);
  for (auto [p, q] : filter_pairs(grid, cfg.p, cfg.q)) {
    bool split = parity_split_check(p, q);
    bool ok = split == (q % 2 == 1);
    res.add(ok,
            json{{"instance", pq_label(p, q)},
                 {"signs_agree", split},
                 {"q_odd", q % 2 == 1},
                 {"verdict", ok ? "pass" : "fail"}},
            pq_label(p, q) + " agree=" + (split ? "yes" : "no"));
  }
  return res;
}

SuiteResult suite_example52(const RunConfig& cfg, const Catalog& cat) {
  SuiteResult res;
  Partition orbit = Partition::make({4, 4, 3, 3, 2, 2, 1, 1}, PartitionKind::C);
  Integer order = cat.lookup(orbit).spec_for(0).order();
  CoverCertificate cc = verify_achar_sommers(orbit, cat, std::nullopt, cfg.threads);
  bool ok = cc.pass() && order == 73728;
  json j = cover_json(cc);
  j["group_order"] = order.str();
  j["expected_order"] = 73728;
  j["verdict"] = ok ? "pass" : "fail";
  std::string mx = cc.cert.maxima.size() == 1 ? cc.cert.maxima.front().to_string() : "not-unique";
  res.add(ok, std::move(j), orbit.to_string() + " |W'|=" + order.str() + " max=" + mx);
  return res;
}

SuiteResult suite_denominator(const RunConfig& cfg) {
  SuiteResult res;
  int max_rank = cfg.r.value_or(3);
  for (int n = 1; n <= max_rank; ++n) {
    Partition ones = Partition::make(std::vector<int>(2 * n, 1), PartitionKind::C);
    VirtualCharacter mcg = mcgovern_character(ones);
    SubgroupSpec cn({{FactorKind::C, n}});
    VirtualCharacter den = r_x(cn.arrangement(), cn, cfg.threads);
    bool ok = mcg == den;
    res.add(ok,
            json{{"instance", "n=" + std::to_string(n)},
                 {"orbit", partition_json(ones)},
                 {"term_count", mcg.term_count()},
                 {"verdict", ok ? "pass" : "fail"}},
            "n=" + std::to_string(n) + " terms=" + std::to_string(mcg.term_count()));
  }
  return res;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Catalog cat = load_catalog(cfg);
  SuiteResult res;
  if (cfg.suite == "theoremB") res = suite_theoremB(cfg, cat);
  else if (cfg.suite == "theoremC") res = suite_theoremC(cfg, cat);
  else if (cfg.suite == "theoremD") res = suite_theoremD(cfg, cat);
  else if (cfg.suite == "lemma44") res = suite_lemma44(cfg, cat);
  else if (cfg.suite == "prop33") res = suite_prop33(cfg, cat);
  else if (cfg.suite == "prop42") res = suite_prop42(cfg);
  else if (cfg.suite == "example52") res = suite_example52(cfg, cat);
  else if (cfg.suite == "denominator") res = suite_denominator(cfg);
  else fail(Errc::ParseError, "unknown suite: " + cfg.suite);

  if (res.certificates.empty()) fail(Errc::ParseError, "no instances selected for suite " + cfg.suite);

  if (cfg.format == "table") {
    for (const auto& l : res.lines) out << cfg.suite << " " << l << '\n';
    out << cfg.suite << ": " << (res.pass ? "PASS" : "FAIL") << '\n';
  } else {
    emit(out, json{{"version", kSchemaVersion},
                   {"command", "verify"},
                   {"suite", cfg.suite},
                   {"pass", res.pass},
                   {"certificates", res.certificates}});
  }
  return res.pass ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"exact duality and character data for nilpotent orbits of Sp(2n)", "orbitquant"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_partition) {
    if (with_partition)
      sub->add_option("--partition", cfg.partition, "orbit partition, comma separated")
          ->delimiter(',')
          ->required();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--threads", cfg.threads, "worker thread count")->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", cfg.cache_dir, "multiplicity table cache directory");
    sub->add_option("--catalog", cfg.catalog_path, "extra cell-catalog JSON file");
  };

  CLI::App* dual = app.add_subcommand("dual", "Spaltenstein-dual partition and attached weights");
  add_common(dual, true);

  CLI::App* character =
      app.add_subcommand("character", "virtual character attached to an orbit");
  add_common(character, true);
  character->add_option("--tag", cfg.tag, "which character")
      ->check(CLI::IsMember({"plus", "minus", "Re", "Rs", "mcgovern"}))
      ->required();

  CLI::App* ktypes = app.add_subcommand("ktypes", "multiplicity scan of a virtual character");
  add_common(ktypes, true);
  ktypes->add_option("--tag", cfg.tag, "which character")
      ->check(CLI::IsMember({"plus", "minus", "Re", "Rs", "mcgovern"}));
  ktypes->add_option("--bound", cfg.bound, "max first coordinate scanned")
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify = app.add_subcommand("verify", "named verification suites with certificates");
  add_common(verify, false);
  verify->add_option("--suite", cfg.suite, "suite name")
      ->check(CLI::IsMember({"theoremB", "theoremC", "theoremD", "lemma44", "prop33", "prop42",
                             "example52", "denominator"}))
      ->required();
  verify->add_option("--p", cfg.p, "restrict to this p");
  verify->add_option("--q", cfg.q, "restrict to this q");
  verify->add_option("--r", cfg.r, "max rank for rank-indexed suites");
  verify->add_option("--bound", cfg.bound, "max first coordinate scanned")
      ->check(CLI::NonNegativeNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  if (cfg.format.empty()) cfg.format = verify->parsed() ? "json" : "table";

  try {
    if (dual->parsed()) return cmd_dual(cfg, out);
    if (character->parsed()) return cmd_character(cfg, out);
    if (ktypes->parsed()) return cmd_ktypes(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::NotInCatalog || e.code() == Errc::MissingSpec ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace orbitquant
