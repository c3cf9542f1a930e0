#pragma once

#include "orbitquant/partition.hpp"
#include "orbitquant/rational.hpp"
#include "orbitquant/virtual_character.hpp"
#include "orbitquant/weight.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbitquant {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<std::size_t>(static_cast<unsigned>(x) + 0x9e3779b9u);
    return h;
  }
};

/* All dominant weight multiplicities of the irreducible sp(2n) module
 * with highest weight mu, computed by the Freudenthal recursion
 *   (||mu+rho||^2 - ||nu+rho||^2) m(nu) =
 *       2 sum_{alpha>0} sum_{k>=1} m(nu + k alpha) <nu + k alpha, alpha>
 * evaluated in order of decreasing norm, so every referenced value is
 * already present.  Multiplicities of non-dominant weights follow by
 * W-invariance.
 */
class MultiplicityTable {
public:
  explicit MultiplicityTable(std::vector<int> mu);

  const std::vector<int>& highest_weight() const { return mu_; }
  // nu must be the dominant representative; absent weights have
  // multiplicity zero
  long long at(const std::vector<int>& nu) const;
  const std::unordered_map<std::vector<int>, long long, VecHash>& entries() const { return table_; }

  // serialization for the on-disk cache
  std::string to_json() const;
  static MultiplicityTable from_json(const std::string& text);

private:
  MultiplicityTable() = default;

  std::vector<int> mu_;
  std::unordered_map<std::vector<int>, long long, VecHash> table_;
};

/* Shared store of multiplicity tables keyed by (rank, mu).  Fills behave
 * as single assignment: concurrent computations of the same table are
 * both correct and the first insert wins.  With a cache directory set,
 * tables are read from and written to one versioned JSON file per mu;
 * a missing or stale file only costs recomputation.
 */
class MultiplicityCache {
public:
  explicit MultiplicityCache(std::string cache_dir = "");

  std::shared_ptr<const MultiplicityTable> table(const Weight& mu);

private:
  std::mutex mutex_;
  std::map<std::vector<int>, std::shared_ptr<const MultiplicityTable>> tables_;
  std::string dir_;
};

// dim of the nu weight space of the irreducible with highest weight mu;
// both integral, equal rank
long long weight_multiplicity(const Weight& mu, const Weight& nu, MultiplicityCache& cache);
long long weight_multiplicity(const Weight& mu, const Weight& nu);

// Weyl dimension formula for sp(2n), exact
Integer weyl_dimension(const Weight& mu);

struct KTypeDecomposition {
  int rank = 0;
  int bound = 0;
  // every dominant integral mu with mu_1 <= bound, including zeros
  std::map<Weight, Integer> mults;
};

/* mult(mu) = sum_nu chi[nu] * dim V_mu[nu] for every dominant integral
 * mu with mu_1 <= bound.  chi must have integral support
 * (HalfIntegralSupport) and every mult must come out an integer
 * (NonIntegralMultiplicity).  The scan over mu is independent per mu and
 * runs on `threads` workers.
 */
KTypeDecomposition decompose(const VirtualCharacter& chi, int bound, MultiplicityCache& cache,
                             int threads = 1);

// All dominant integral weights of the given rank with first entry <= bound.
std::vector<Weight> dominant_weights_up_to(int rank, int bound);

enum class PatternVariant { Plain, CoverExtra };

/* Predicted multiplicity (0 or 1) for orbits (2^l 1^{2q}), n = l + q:
 *   Plain      - 1 iff mu = (2m_1, ..., 2m_l, 0^{n-l})
 *   CoverExtra - 1 iff mu = (2m_1+1, ..., 2m_l+1, 0^{n-l})
 * with m_1 >= ... >= m_l >= 0.
 */
int closed_form_multiplicity(const Partition& p, const Weight& mu, PatternVariant variant);

}  // namespace orbitquant
