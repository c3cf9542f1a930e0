#include "orbitquant/freudenthal.hpp"

#include "orbitquant/roots.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace orbitquant {

using nlohmann::json;

namespace {

constexpr const char* kTableVersion = "orbit-quant/1";

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

std::vector<int> rho_c(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n - i;
  return r;
}

std::vector<int> dominant_sort(std::vector<int> v) {
  for (int& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

// mu dominates nu in the root order: all prefix sums of mu - nu are
// nonnegative and the total is even (both vectors dominant integral)
bool dominates(const std::vector<int>& mu, const std::vector<int>& nu) {
  long long s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    s += mu[i] - nu[i];
    if (s < 0) return false;
  }
  return s % 2 == 0;
}

// all dominant vectors nu <= mu in the root order, mu included
std::vector<std::vector<int>> dominated_weights(const std::vector<int>& mu) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(mu.size());
  std::vector<long long> mu_prefix(mu.size());
  std::partial_sum(mu.begin(), mu.end(), mu_prefix.begin());

  auto rec = [&](auto&& self, std::size_t i, int prev, long long sum) -> void {
    if (i == mu.size()) {
      if ((mu_prefix.back() - sum) % 2 == 0) out.push_back(cur);
      return;
    }
    for (int v = std::min(prev, static_cast<int>(mu_prefix[i] - sum)); v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, v, sum + v);
    }
  };
  if (!mu.empty()) rec(rec, 0, mu[0], 0);
  return out;
}

}  // namespace

MultiplicityTable::MultiplicityTable(std::vector<int> mu) : mu_(std::move(mu)) {
  int n = static_cast<int>(mu_.size());
  std::vector<int> rho = rho_c(n);
  std::vector<std::vector<int>> roots = positive_roots_c(n);

  std::vector<int> mu_rho(mu_.size());
  for (std::size_t i = 0; i < mu_.size(); ++i) mu_rho[i] = mu_[i] + rho[i];
  const long long top = dot(mu_rho, mu_rho);
  const long long mu_norm = dot(mu_, mu_);

  std::vector<std::vector<int>> nus = dominated_weights(mu_);
  std::sort(nus.begin(), nus.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    long long na = dot(a, a), nb = dot(b, b);
    if (na != nb) return na > nb;
    return a > b;
  });

  std::vector<int> shifted(mu_.size());
  for (const std::vector<int>& nu : nus) {
    if (nu == mu_) {
      table_.emplace(nu, 1);
      continue;
    }
    long long numerator = 0;
    for (const std::vector<int>& alpha : roots) {
      for (int k = 1;; ++k) {
        long long norm = 0;
        for (std::size_t i = 0; i < nu.size(); ++i) {
          shifted[i] = nu[i] + k * alpha[i];
          norm += static_cast<long long>(shifted[i]) * shifted[i];
        }
        if (norm > mu_norm) break;  // beyond the weight polytope
        auto it = table_.find(dominant_sort(shifted));
        if (it != table_.end() && it->second != 0) numerator += 2 * it->second * dot(shifted, alpha);
      }
    }
    if (numerator == 0) continue;  // not a weight of the module
    std::vector<int> nu_rho(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) nu_rho[i] = nu[i] + rho[i];
    long long denominator = top - dot(nu_rho, nu_rho);
    if (denominator <= 0 || numerator % denominator != 0)
      throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    table_.emplace(nu, numerator / denominator);
  }
}

long long MultiplicityTable::at(const std::vector<int>& nu) const {
  auto it = table_.find(nu);
  return it == table_.end() ? 0 : it->second;
}

std::string MultiplicityTable::to_json() const {
  json doc;
  doc["version"] = kTableVersion;
  doc["mu"] = mu_;
  json rows = json::array();
  std::vector<std::vector<int>> keys;
  keys.reserve(table_.size());
  for (const auto& [nu, m] : table_) keys.push_back(nu);
  std::sort(keys.begin(), keys.end());
  for (const std::vector<int>& nu : keys) rows.push_back(json::array({nu, table_.at(nu)}));
  doc["mults"] = std::move(rows);
  return doc.dump();
}

MultiplicityTable MultiplicityTable::from_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || doc.value("version", std::string{}) != kTableVersion)
    fail(Errc::ParseError, "not a multiplicity table document");
  MultiplicityTable t;
  t.mu_ = doc.at("mu").get<std::vector<int>>();
  for (const json& row : doc.at("mults"))
    t.table_.emplace(row.at(0).get<std::vector<int>>(), row.at(1).get<long long>());
  return t;
}

MultiplicityCache::MultiplicityCache(std::string cache_dir) : dir_(std::move(cache_dir)) {}

namespace {

std::string cache_file_name(const std::vector<int>& mu) {
  std::ostringstream name;
  name << "mults_c" << mu.size();
  for (int v : mu) name << '_' << v;
  name << ".json";
  return name.str();
}

}  // namespace

std::shared_ptr<const MultiplicityTable> MultiplicityCache::table(const Weight& mu) {
  if (!mu.is_dominant()) fail(Errc::NotDominant, "highest weight " + mu.to_string() + " is not dominant");
  std::vector<int> key = mu.as_ints();
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  }

  std::shared_ptr<const MultiplicityTable> computed;
  if (!dir_.empty()) {
    std::ifstream in(std::filesystem::path(dir_) / cache_file_name(key));
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        auto loaded = std::make_shared<MultiplicityTable>(MultiplicityTable::from_json(buf.str()));
        if (loaded->highest_weight() == key) computed = std::move(loaded);
      } catch (const Error&) {
        // stale or foreign file: recompute
      }
    }
  }
  if (!computed) {
    computed = std::make_shared<MultiplicityTable>(key);
    if (!dir_.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(dir_, ec);
      std::ofstream out(std::filesystem::path(dir_) / cache_file_name(key));
      if (out) out << computed->to_json();
    }
  }

  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = tables_.emplace(std::move(key), std::move(computed));
  return it->second;  // single assignment: a lost race keeps the first fill
}

long long weight_multiplicity(const Weight& mu, const Weight& nu, MultiplicityCache& cache) {
  if (mu.rank() != nu.rank()) fail(Errc::RankMismatch, "weight ranks differ");
  if (!mu.is_integral() || !nu.is_integral())
    fail(Errc::HalfIntegralSupport, "weight multiplicities need integral weights");
  return cache.table(mu)->at(dominant_rep(nu).as_ints());
}

long long weight_multiplicity(const Weight& mu, const Weight& nu) {
  MultiplicityCache cache;
  return weight_multiplicity(mu, nu, cache);
}

Integer weyl_dimension(const Weight& mu) {
  if (!mu.is_dominant()) fail(Errc::NotDominant, "weight " + mu.to_string() + " is not dominant");
  std::vector<int> m = mu.as_ints();
  int n = mu.rank();
  std::vector<int> rho = rho_c(n);
  Integer num = 1, den = 1;
  for (const std::vector<int>& alpha : positive_roots_c(n)) {
    long long a = 0, b = 0;
    for (int i = 0; i < n; ++i) {
      a += static_cast<long long>(m[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)]) *
           alpha[static_cast<std::size_t>(i)];
      b += static_cast<long long>(rho[static_cast<std::size_t>(i)]) * alpha[static_cast<std::size_t>(i)];
    }
    num *= a;
    den *= b;
  }
  return num / den;
}

std::vector<Weight> dominant_weights_up_to(int rank, int bound) {
  std::vector<Weight> out;
  std::vector<int> cur(static_cast<std::size_t>(rank));
  auto rec = [&](auto&& self, std::size_t i, int prev) -> void {
    if (i == cur.size()) {
      out.push_back(Weight::integral(cur));
      return;
    }
    for (int v = prev; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, bound);
  return out;
}

KTypeDecomposition decompose(const VirtualCharacter& chi, int bound, MultiplicityCache& cache, int threads) {
  if (!chi.has_integral_support())
    fail(Errc::HalfIntegralSupport, "character has half-integral support; cannot scan K-types");

  std::vector<std::pair<Weight, Rational>> terms(chi.terms().begin(), chi.terms().end());
  std::vector<Weight> mus = dominant_weights_up_to(chi.rank(), bound);
  std::vector<Integer> vals(mus.size());
  std::vector<std::string> errors(mus.size());

  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::shared_ptr<const MultiplicityTable> table = cache.table(mus[i]);
      Rational total = 0;
      for (const auto& [nu, c] : terms) total += c * Rational(table->at(dominant_rep(nu).as_ints()));
      if (!is_integer(total)) {
        errors[i] = "multiplicity of " + mus[i].to_string() + " is " + to_string(total);
        continue;
      }
      vals[i] = numerator(total);
    }
  };

  if (threads <= 1 || mus.size() < 2) {
    run(0, mus.size());
  } else {
    std::size_t nchunks = std::min<std::size_t>(static_cast<std::size_t>(threads), mus.size());
    std::vector<std::thread> workers;
    for (std::size_t c = 0; c < nchunks; ++c) {
      std::size_t begin = mus.size() * c / nchunks;
      std::size_t end = mus.size() * (c + 1) / nchunks;
      workers.emplace_back([&, begin, end] { run(begin, end); });
    }
    for (std::thread& t : workers) t.join();
  }
  for (const std::string& e : errors)
    if (!e.empty()) fail(Errc::NonIntegralMultiplicity, e);

  KTypeDecomposition out;
  out.rank = chi.rank();
  out.bound = bound;
  for (std::size_t i = 0; i < mus.size(); ++i) out.mults.emplace(mus[i], vals[i]);
  return out;
}

int closed_form_multiplicity(const Partition& p, const Weight& mu, PatternVariant variant) {
  int twos = 0, ones = 0;
  for (int v : p.parts()) {
    if (v == 2)
      ++twos;
    else if (v == 1)
      ++ones;
    else
      fail(Errc::WrongFamily, "closed form needs a partition of the form (2^l 1^{2q})");
  }
  if (ones % 2 != 0) fail(Errc::WrongFamily, "closed form needs a partition of the form (2^l 1^{2q})");
  int n = twos + ones / 2;
  if (mu.rank() != n) fail(Errc::RankMismatch, "weight rank does not match the orbit's group rank");
  if (!mu.is_dominant()) fail(Errc::NotDominant, "weight " + mu.to_string() + " is not dominant");
  if (!mu.is_integral()) fail(Errc::HalfIntegralSupport, "closed form needs an integral weight");

  std::vector<int> m = mu.as_ints();
  if (variant == PatternVariant::Plain) {
    for (int i = 0; i < n; ++i) {
      if (m[static_cast<std::size_t>(i)] % 2 != 0) return 0;
      if (i >= twos && m[static_cast<std::size_t>(i)] != 0) return 0;
    }
    return 1;
  }
  for (int i = 0; i < n; ++i) {
    if (i < twos && m[static_cast<std::size_t>(i)] % 2 != 1) return 0;
    if (i >= twos && m[static_cast<std::size_t>(i)] != 0) return 0;
  }
  return 1;
}

}  // namespace orbitquant
