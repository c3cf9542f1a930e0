#pragma once

#include "orbitquant/partition.hpp"
#include "orbitquant/subgroup.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbitquant {

/* Component-group data for an orbit: the rank r of the 2-group attached
 * to the orbit and, per group element (addressed as a bit vector, all
 * zeros = identity), the reflection subgroup whose alternating sum
 * realizes that element's character contribution.  Entries may omit
 * elements; sums that need a missing element raise MissingSpec.
 */
struct CellCatalogEntry {
  Partition orbit;
  int abar_rank = 0;
  // key: bit vector packed little-endian, bit i is the (i+1)-th generator
  std::map<unsigned, SubgroupSpec> specs;
  std::string note;

  const SubgroupSpec& spec_for(unsigned element) const;  // MissingSpec if absent
};

/* Lookup order: user-loaded entries, builtin entries, then the built-in
 * rule for the family (2^{2p} 1^{2q}) (p >= 1, q >= 0):
 *   r = 1, spec(e) = Dp x C{p+q}, spec(s) = D{p+q+1} x C{p-1}.
 * Every entry served is checked against the arrangement invariant: the
 * multiset of arrangement coordinates of each stored spec must equal the
 * multiset of lambda coordinates of the orbit.
 */
class Catalog {
public:
  // entries embedded in the library
  static Catalog builtin();
  // versioned JSON file; merged over the builtin entries
  static Catalog load_file(const std::string& path);

  // overlay's entries take precedence
  void merge(const Catalog& overlay);

  CellCatalogEntry lookup(const Partition& p) const;

  std::size_t entry_count() const { return entries_.size(); }

private:
  static Catalog from_json_text(const std::string& text, const std::string& origin);

  std::map<std::vector<int>, CellCatalogEntry> entries_;
};

}  // namespace orbitquant
