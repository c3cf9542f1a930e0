#include "orbitquant/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

namespace orbitquant {

SubgroupSpec::SubgroupSpec(std::vector<SubgroupFactor> factors) : factors_(std::move(factors)) {
  for (const SubgroupFactor& f : factors_) {
    if (f.size < 0) fail(Errc::ParseError, "negative factor size");
    ambient_ += f.size;
  }
}

SubgroupSpec SubgroupSpec::parse(const std::string& text) {
  std::vector<SubgroupFactor> factors;
  std::size_t i = 0;
  while (i < text.size()) {
    char k = text[i++];
    FactorKind kind;
    switch (k) {
      case 'A': kind = FactorKind::A; break;
      case 'C': kind = FactorKind::C; break;
      case 'D': kind = FactorKind::D; break;
      default: fail(Errc::ParseError, "unknown factor kind '" + std::string(1, k) + "' in \"" + text + "\"");
    }
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail(Errc::ParseError, "missing factor size in \"" + text + "\"");
    factors.push_back({kind, std::stoi(text.substr(start, i - start))});
    if (i < text.size()) {
      if (text[i] != 'x') fail(Errc::ParseError, "expected 'x' between factors in \"" + text + "\"");
      ++i;
      if (i == text.size()) fail(Errc::ParseError, "trailing 'x' in \"" + text + "\"");
    }
  }
  if (factors.empty()) fail(Errc::ParseError, "empty subgroup spec");
  return SubgroupSpec(std::move(factors));
}

std::string SubgroupSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << 'x';
    switch (factors_[i].kind) {
      case FactorKind::A: out << 'A'; break;
      case FactorKind::C: out << 'C'; break;
      case FactorKind::D: out << 'D'; break;
    }
    out << factors_[i].size;
  }
  return out.str();
}

namespace {

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Integer factor_order(const SubgroupFactor& f) {
  if (f.size == 0) return 1;
  Integer ord = factorial(f.size);
  if (f.kind == FactorKind::C) ord <<= f.size;
  if (f.kind == FactorKind::D && f.size >= 1) ord <<= (f.size - 1);
  return ord;
}

}  // namespace

Integer SubgroupSpec::order() const {
  Integer ord = 1;
  for (const SubgroupFactor& f : factors_) ord *= factor_order(f);
  return ord;
}

Weight SubgroupSpec::arrangement() const {
  std::vector<int> doubled;
  doubled.reserve(static_cast<std::size_t>(ambient_));
  for (const SubgroupFactor& f : factors_) {
    switch (f.kind) {
      case FactorKind::D:
        for (int v = f.size - 1; v >= 0; --v) doubled.push_back(2 * v);
        break;
      case FactorKind::C:
        for (int v = f.size; v >= 1; --v) doubled.push_back(2 * v);
        break;
      case FactorKind::A:
        for (int i = 0; i < f.size; ++i) doubled.push_back(f.size - 1 - 2 * i);
        break;
    }
  }
  return Weight::halves(std::move(doubled));
}

SignedPermutation SubgroupSpec::longest_element() const {
  std::vector<int> images(static_cast<std::size_t>(ambient_));
  int o = 0;
  for (const SubgroupFactor& f : factors_) {
    switch (f.kind) {
      case FactorKind::C:
        for (int i = 0; i < f.size; ++i) images[static_cast<std::size_t>(o + i)] = -(o + i + 1);
        break;
      case FactorKind::D:
        // -1 when the block size is even; otherwise -1 on all but the
        // last block coordinate (even number of sign changes either way)
        for (int i = 0; i < f.size; ++i) {
          bool keep = (f.size % 2 == 1) && (i == f.size - 1);
          images[static_cast<std::size_t>(o + i)] = keep ? (o + i + 1) : -(o + i + 1);
        }
        break;
      case FactorKind::A:
        for (int i = 0; i < f.size; ++i) images[static_cast<std::size_t>(o + i)] = o + f.size - i;
        break;
    }
    o += f.size;
  }
  return SignedPermutation(std::move(images));
}

namespace {

/* Element lists are materialized per factor as block-local windows
 * (signed, 1-based within the block); a product element is assembled by
 * mixed-radix decoding of its enumeration index.
 */
struct FactorElements {
  int offset = 0;
  int size = 0;
  std::vector<std::vector<int>> windows;
};

std::vector<std::vector<int>> block_windows(const SubgroupFactor& f) {
  std::vector<std::vector<int>> out;
  if (f.size == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> perm(static_cast<std::size_t>(f.size));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (f.kind == FactorKind::A) {
      out.push_back(perm);
      continue;
    }
    unsigned mask_end = 1u << f.size;
    for (unsigned mask = 0; mask < mask_end; ++mask) {
      if (f.kind == FactorKind::D && std::popcount(mask) % 2 != 0) continue;
      std::vector<int> w = perm;
      for (int i = 0; i < f.size; ++i)
        if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct Enumerator {
  std::vector<FactorElements> factors;
  int ambient = 0;
  unsigned long long total = 1;

  explicit Enumerator(const SubgroupSpec& spec) {
    ambient = spec.ambient_rank();
    Integer ord = spec.order();
    if (ord > Integer(1) << 40) fail(Errc::ParseError, "subgroup of order " + ord.str() + " is too large to enumerate");
    int o = 0;
    for (const SubgroupFactor& f : spec.factors()) {
      FactorElements fe;
      fe.offset = o;
      fe.size = f.size;
      fe.windows = block_windows(f);
      total *= fe.windows.size();
      factors.push_back(std::move(fe));
      o += f.size;
    }
  }

  void visit(unsigned long long begin, unsigned long long end, const ElementVisitor& fn) const {
    std::vector<int> images(static_cast<std::size_t>(ambient));
    std::iota(images.begin(), images.end(), 1);
    for (unsigned long long idx = begin; idx < end; ++idx) {
      unsigned long long rest = idx;
      for (std::size_t fi = factors.size(); fi-- > 0;) {
        const FactorElements& fe = factors[fi];
        std::size_t digit = static_cast<std::size_t>(rest % fe.windows.size());
        rest /= fe.windows.size();
        const std::vector<int>& w = fe.windows[digit];
        for (int i = 0; i < fe.size; ++i) {
          int v = w[static_cast<std::size_t>(i)];
          images[static_cast<std::size_t>(fe.offset + i)] = v < 0 ? -(fe.offset - v) : (fe.offset + v);
        }
      }
      fn(SignedPermutation(images));
    }
  }
};

}  // namespace

void for_each_element(const SubgroupSpec& spec, const ElementVisitor& fn) {
  Enumerator e(spec);
  e.visit(0, e.total, fn);
}

void for_each_element_range(const SubgroupSpec& spec, unsigned long long begin, unsigned long long end,
                            const ElementVisitor& fn) {
  Enumerator e(spec);
  if (end > e.total) end = e.total;
  if (begin < end) e.visit(begin, end, fn);
}

}  // namespace orbitquant
