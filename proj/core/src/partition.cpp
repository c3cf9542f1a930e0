#include "orbitquant/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbitquant {

namespace {

// true when the multiplicity rule for `kind` holds at part value v:
// odd parts of C-partitions and even parts of B-partitions must come in
// pairs.
bool parity_constrained(int v, PartitionKind kind) {
  if (kind == PartitionKind::C) return v % 2 == 1;
  if (kind == PartitionKind::B) return v % 2 == 0;
  return false;
}

void check_parity_rule(const std::vector<int>& parts, PartitionKind kind) {
  std::map<int, int> mult;
  for (int v : parts) ++mult[v];
  for (auto [v, m] : mult) {
    if (parity_constrained(v, kind) && m % 2 != 0) {
      fail(Errc::ParityViolation,
           "part " + std::to_string(v) + " has odd multiplicity " + std::to_string(m));
    }
  }
}

}  // namespace

Partition Partition::make(std::vector<int> parts, PartitionKind kind) {
  int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) fail(Errc::NotDecreasing, "part " + std::to_string(parts[i]) + " is not positive");
    if (i > 0 && parts[i] > parts[i - 1]) {
      fail(Errc::NotDecreasing, "parts " + std::to_string(parts[i - 1]) + "," + std::to_string(parts[i]) +
                                    " are not weakly decreasing");
    }
    total += parts[i];
  }
  if (kind == PartitionKind::C && total % 2 != 0)
    fail(Errc::WrongTotalParity, "total " + std::to_string(total) + " is odd; kind C needs an even total");
  if (kind == PartitionKind::B && total % 2 != 1)
    fail(Errc::WrongTotalParity, "total " + std::to_string(total) + " is even; kind B needs an odd total");
  check_parity_rule(parts, kind);
  return Partition(std::move(parts), kind, total);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

Partition transpose(const Partition& p) {
  std::vector<int> cols;
  if (!p.parts().empty()) {
    cols.resize(static_cast<std::size_t>(p.parts()[0]));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      int count = 0;
      for (int v : p.parts())
        if (v > static_cast<int>(k)) ++count;
      cols[k] = count;
    }
  }
  return Partition::make(std::move(cols), PartitionKind::Unrestricted);
}

Partition collapse(const Partition& p, PartitionKind kind) {
  if (kind == PartitionKind::Unrestricted) return Partition::make(p.parts(), kind);
  if (kind == PartitionKind::C && p.total() % 2 != 0)
    fail(Errc::TotalParityMismatch, "total " + std::to_string(p.total()) + " cannot collapse to kind C");
  if (kind == PartitionKind::B && p.total() % 2 != 1)
    fail(Errc::TotalParityMismatch, "total " + std::to_string(p.total()) + " cannot collapse to kind B");

  std::vector<int> parts = p.parts();
  for (;;) {
    // last occurrence of the largest part violating the parity rule
    int bad = -1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!parity_constrained(parts[i], kind)) continue;
      std::size_t lo = i;
      while (lo + 1 < parts.size() && parts[lo + 1] == parts[i]) ++lo;
      if ((lo - i + 1) % 2 != 0) {
        bad = static_cast<int>(lo);
        break;  // parts are sorted, so the first violating run is the largest
      }
      i = lo;
    }
    if (bad < 0) break;

    // move one box down: decrement the violator, bump the first slot that
    // can take it without breaking monotonicity
    int v = parts[static_cast<std::size_t>(bad)]--;
    std::size_t j = static_cast<std::size_t>(bad) + 1;
    while (j < parts.size() && parts[j] > v - 2) ++j;
    if (j == parts.size())
      parts.push_back(1);
    else
      ++parts[j];
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition::make(std::move(parts), kind);
}

Partition ls_dual(const Partition& p) {
  if (p.kind() != PartitionKind::C) fail(Errc::KindMismatch, "ls_dual expects a type-C partition");
  std::vector<int> padded = p.parts();
  padded.push_back(1);
  Partition t = transpose(Partition::make(std::move(padded), PartitionKind::Unrestricted));
  return collapse(t, PartitionKind::B);
}

Weight jm_weights(const Partition& p, int rank) {
  if (p.total() != 2 * rank && p.total() != 2 * rank + 1) {
    fail(Errc::RankMismatch, "partition total " + std::to_string(p.total()) + " does not match rank " +
                                 std::to_string(rank));
  }
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(p.total()));
  for (int v : p.parts())
    for (int w = v - 1; w >= 1 - v; w -= 2) entries.push_back(w);
  std::sort(entries.begin(), entries.end(), std::greater<int>());
  entries.resize(static_cast<std::size_t>(rank));
  return Weight::integral(std::move(entries));
}

OrbitDescriptor orbit_descriptor(const Partition& p) {
  if (p.kind() != PartitionKind::C) fail(Errc::KindMismatch, "orbit_descriptor expects a type-C partition");
  int rank = p.total() / 2;
  Partition dual = ls_dual(p);
  Weight h_self = jm_weights(p, rank);
  Weight h_dual = jm_weights(dual, rank);
  Weight lambda = Weight::halves(h_dual.as_ints());
  return OrbitDescriptor{p, rank, std::move(dual), std::move(h_self), std::move(h_dual), std::move(lambda)};
}

std::optional<std::pair<int, int>> two_one_family(const Partition& p) {
  int twos = 0, ones = 0;
  for (int v : p.parts()) {
    if (v == 2)
      ++twos;
    else if (v == 1)
      ++ones;
    else
      return std::nullopt;
  }
  if (twos < 2 || twos % 2 != 0 || ones % 2 != 0) return std::nullopt;
  return std::make_pair(twos / 2, ones / 2);
}

Partition family_partition(int p, int q) {
  if (p < 1 || q < 0) fail(Errc::WrongFamily, "family needs p >= 1, q >= 0");
  std::vector<int> parts(static_cast<std::size_t>(2 * p), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(2 * q), 1);
  return Partition::make(std::move(parts), PartitionKind::C);
}

}  // namespace orbitquant
