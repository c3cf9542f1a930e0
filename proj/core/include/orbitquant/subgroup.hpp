#pragma once

#include "orbitquant/rational.hpp"
#include "orbitquant/signed_perm.hpp"
#include "orbitquant/weight.hpp"

#include <functional>
#include <string>
#include <vector>

namespace orbitquant {

/* A reflection subgroup of W(C_n) given as an ordered product of block
 * factors acting on consecutive coordinates:
 *   C_k - all signed permutations of its k coordinates (order 2^k k!)
 *   D_k - signed permutations with an even number of sign changes
 *         (order 2^{k-1} k!)
 *   A_k - plain permutations of k coordinates (order k!)
 * Block sizes sum to the ambient rank.  Textual form "D3xC2", "A4".
 */
enum class FactorKind { A, C, D };

struct SubgroupFactor {
  FactorKind kind;
  int size;
  bool operator==(const SubgroupFactor&) const = default;
};

class SubgroupSpec {
public:
  explicit SubgroupSpec(std::vector<SubgroupFactor> factors);

  static SubgroupSpec parse(const std::string& text);
  std::string to_string() const;

  const std::vector<SubgroupFactor>& factors() const { return factors_; }
  int ambient_rank() const { return ambient_; }
  Integer order() const;

  /* Coordinates each factor contributes to the standard attached weight:
   *   D_k -> k-1, ..., 1, 0
   *   C_k -> k, ..., 1
   *   A_k -> (k-1)/2, (k-3)/2, ..., -(k-1)/2
   * Concatenated in factor order; A-blocks give half-integers for even k.
   */
  Weight arrangement() const;

  // product of the factors' longest elements; acts as -1 on every block
  // whose arrangement ends in 0 or is a C-block
  SignedPermutation longest_element() const;

  bool operator==(const SubgroupSpec& o) const { return factors_ == o.factors_; }

private:
  std::vector<SubgroupFactor> factors_;
  int ambient_ = 0;
};

using ElementVisitor = std::function<void(const SignedPermutation&)>;

// Visits every element exactly once, embedded in the ambient rank
// (identity outside the blocks).  Enumeration order is fixed but
// unspecified; visit count equals order().
void for_each_element(const SubgroupSpec& spec, const ElementVisitor& fn);

// Visits the elements with enumeration index in [begin, end); the index
// space is [0, order()).  Used to split a sum into disjoint chunks.
void for_each_element_range(const SubgroupSpec& spec, unsigned long long begin, unsigned long long end,
                            const ElementVisitor& fn);

}  // namespace orbitquant
