#include "orbitquant/characters.hpp"

#include "orbitquant/roots.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <thread>

namespace orbitquant {

std::vector<std::vector<int>> positive_roots_c(int n) {
  std::vector<std::vector<int>> roots;
  roots.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> minus(static_cast<std::size_t>(n), 0), plus(static_cast<std::size_t>(n), 0);
      minus[static_cast<std::size_t>(i)] = 1;
      minus[static_cast<std::size_t>(j)] = -1;
      plus[static_cast<std::size_t>(i)] = 1;
      plus[static_cast<std::size_t>(j)] = 1;
      roots.push_back(std::move(minus));
      roots.push_back(std::move(plus));
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> twice(static_cast<std::size_t>(n), 0);
    twice[static_cast<std::size_t>(i)] = 2;
    roots.push_back(std::move(twice));
  }
  return roots;
}

namespace {

using TermMap = std::map<Weight, long long>;

void accumulate_range(const Weight& lambda, const SubgroupSpec& spec, unsigned long long begin,
                      unsigned long long end, TermMap& acc) {
  for_each_element_range(spec, begin, end, [&](const SignedPermutation& w) {
    Weight key = dominant_rep(lambda - w.act(lambda));
    acc[key] += w.det_sign();
  });
}

}  // namespace

VirtualCharacter r_x(const Weight& lambda, const SubgroupSpec& spec, int threads) {
  if (lambda.rank() != spec.ambient_rank())
    fail(Errc::RankMismatch, "weight rank " + std::to_string(lambda.rank()) + " does not match spec " +
                                 spec.to_string());
  Integer order = spec.order();
  if (order > (Integer(1) << 40))
    fail(Errc::ParseError, "subgroup of order " + order.str() + " is too large to enumerate");
  unsigned long long total = order.convert_to<unsigned long long>();

  TermMap acc;
  if (threads <= 1 || total < 1024) {
    accumulate_range(lambda, spec, 0, total, acc);
  } else {
    unsigned long long nchunks = static_cast<unsigned long long>(threads);
    std::vector<TermMap> partial(nchunks);
    std::vector<std::thread> workers;
    for (unsigned long long c = 0; c < nchunks; ++c) {
      unsigned long long begin = total * c / nchunks;
      unsigned long long end = total * (c + 1) / nchunks;
      workers.emplace_back(
          [&, begin, end, c] { accumulate_range(lambda, spec, begin, end, partial[c]); });
    }
    for (std::thread& t : workers) t.join();
    for (const TermMap& part : partial)
      for (const auto& [w, c] : part) acc[w] += c;
  }

  VirtualCharacter out(lambda.rank());
  for (const auto& [w, c] : acc)
    if (c != 0) out.add_term(w, Rational(c));
  return out;
}

VirtualCharacter x_pi(const CellCatalogEntry& entry, unsigned pi, int threads) {
  int r = entry.abar_rank;
  if (pi >= (1u << r)) fail(Errc::ParseError, "component character index out of range");
  VirtualCharacter sum(entry.orbit.total() / 2);
  for (unsigned x = 0; x < (1u << r); ++x) {
    const SubgroupSpec& spec = entry.spec_for(x);
    VirtualCharacter part = r_x(spec.arrangement(), spec, threads);
    if (std::popcount(pi & x) % 2 != 0)
      sum += part.scaled(-1);
    else
      sum += part;
  }
  return sum.scaled(Rational(Integer(1), Integer(1) << r));
}

std::pair<VirtualCharacter, VirtualCharacter> unipotent_pair(const Partition& p, const Catalog& catalog,
                                                             int threads) {
  if (!two_one_family(p))
    fail(Errc::WrongFamily, "orbit " + p.to_string() + " is not of the form (2^{2p} 1^{2q})");
  CellCatalogEntry entry = catalog.lookup(p);
  return {x_pi(entry, 0u, threads), x_pi(entry, 1u, threads)};
}

VirtualCharacter mcgovern_character(const Partition& p) {
  if (p.kind() != PartitionKind::C) fail(Errc::KindMismatch, "mcgovern_character expects a type-C partition");
  int n = p.total() / 2;
  std::vector<int> h = jm_weights(p, n).as_ints();

  // the product runs over positive roots pairing with h to 0 or 1
  std::vector<Weight> factors;
  for (const std::vector<int>& alpha : positive_roots_c(n)) {
    long long pairing = 0;
    for (int i = 0; i < n; ++i)
      pairing += static_cast<long long>(alpha[static_cast<std::size_t>(i)]) * h[static_cast<std::size_t>(i)];
    if (pairing == 0 || pairing == 1) factors.push_back(Weight::integral(alpha));
  }

  // expand in the raw weight lattice; no W-identification until the end
  std::map<Weight, long long> poly;
  poly.emplace(Weight::zero(n), 1);
  for (const Weight& alpha : factors) {
    std::map<Weight, long long> next = poly;
    for (const auto& [nu, c] : poly) {
      auto [it, inserted] = next.try_emplace(nu + alpha, 0);
      it->second -= c;
      if (it->second == 0) next.erase(it);
    }
    poly = std::move(next);
  }

  VirtualCharacter out(n);
  for (const auto& [nu, c] : poly) out.add_term(dominant_rep(nu), Rational(c));
  return out;
}

}  // namespace orbitquant
