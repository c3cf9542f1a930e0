#pragma once

#include "orbitquant/errors.hpp"
#include "orbitquant/weight.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbitquant {

/* Partition kinds mirror the nilpotent-orbit parametrizations:
 *   C            - partitions of 2n with every odd part of even multiplicity
 *                  (orbits of Sp(2n))
 *   B            - partitions of 2n+1 with every even part of even
 *                  multiplicity (orbits of SO(2n+1))
 *   Unrestricted - weakly decreasing positive parts, no parity rule
 */
enum class PartitionKind { C, B, Unrestricted };

class Partition {
public:
  // Validates on construction: weakly decreasing positive parts and the
  // kind's parity rules.  Throws Error(NotDecreasing / ParityViolation /
  // WrongTotalParity) naming the offending part.
  static Partition make(std::vector<int> parts, PartitionKind kind);

  const std::vector<int>& parts() const { return parts_; }
  PartitionKind kind() const { return kind_; }
  int total() const { return total_; }
  std::size_t size() const { return parts_.size(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  std::string to_string() const;  // "(5,1,1)"

private:
  Partition(std::vector<int> parts, PartitionKind kind, int total)
      : parts_(std::move(parts)), kind_(kind), total_(total) {}

  std::vector<int> parts_;
  PartitionKind kind_;
  int total_ = 0;
};

// Conjugate partition (column lengths).  Result carries no parity rule.
Partition transpose(const Partition& p);

/* X-collapse: the dominance-greatest partition of the same total that is
 * valid for `kind` and dominated by p.  Implemented as the usual sweep:
 * while some part violates the parity rule, take the largest violator,
 * decrement its last occurrence, and increment the first later slot that
 * is at least two smaller (appending a slot if necessary).
 */
Partition collapse(const Partition& p, PartitionKind kind);

// Lusztig-Spaltenstein dual of a type-C partition: B-collapse of the
// transpose of p with an extra part 1 appended.
Partition ls_dual(const Partition& p);

/* Weights of the semisimple element h of a Jacobson-Morozov triple for
 * the orbit, as a dominant rank-n weight: each part k contributes the
 * string k-1, k-3, ..., 1-k; the union is sorted descending and the
 * first n entries are kept.  Requires total(p) == 2n or 2n+1.
 */
Weight jm_weights(const Partition& p, int rank);

struct OrbitDescriptor {
  Partition partition;  // type C, total 2n
  int rank;             // n
  Partition dual;       // type B, total 2n+1
  Weight h_self;        // jm_weights(partition, n)
  Weight h_dual;        // jm_weights(dual, n)
  Weight lambda;        // h_dual / 2
};

// Duality data for an Sp(2n) orbit; lambda is half the dual orbit's
// Jacobson-Morozov weight.
OrbitDescriptor orbit_descriptor(const Partition& p);

// (p, q) when the partition is (2^{2p} 1^{2q}) with p >= 1, else nullopt.
std::optional<std::pair<int, int>> two_one_family(const Partition& p);

// The partition (2^{2p} 1^{2q}).
Partition family_partition(int p, int q);

}  // namespace orbitquant
