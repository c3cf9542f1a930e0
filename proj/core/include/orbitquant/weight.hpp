#pragma once

#include "orbitquant/errors.hpp"

#include <compare>
#include <string>
#include <vector>

namespace orbitquant {

/* A weight of sp(2n) in coordinates: a length-n vector whose entries are
 * integers or half-integers.  Entries are stored doubled, so every
 * coordinate is exact and all entries share denominator 1 or 2.
 */
class Weight {
public:
  Weight() = default;

  // coords are integer coordinate values
  static Weight integral(std::vector<int> coords);
  // doubled are twice the coordinate values (half-integers allowed)
  static Weight halves(std::vector<int> doubled);
  static Weight zero(int rank);

  int rank() const { return static_cast<int>(twice_.size()); }
  const std::vector<int>& doubled() const { return twice_; }
  int doubled_at(int i) const { return twice_[static_cast<std::size_t>(i)]; }

  // true when every coordinate is an integer
  bool is_integral() const;
  // weakly decreasing with nonnegative last entry
  bool is_dominant() const;

  // integer coordinates; requires is_integral()
  std::vector<int> as_ints() const;

  // 4 * ||v||^2, exact
  long long norm4() const;
  // 2 * sum of coordinates, exact
  long long sum2() const;

  Weight scaled(int k) const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);

  bool operator==(const Weight& o) const { return twice_ == o.twice_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  // lexicographic on (rank, doubled coordinates); used for map keys
  bool operator<(const Weight& o) const;

  // "(2,1,0)", half-integers as "3/2"
  std::string to_string() const;
  // one exact string per coordinate: "3", "-1/2"
  std::vector<std::string> coord_strings() const;

private:
  explicit Weight(std::vector<int> twice) : twice_(std::move(twice)) {}

  std::vector<int> twice_;
};

// W-orbit representative in the dominant chamber: absolute values sorted
// descending.  For the hyperoctahedral group this is the full invariant.
Weight dominant_rep(const Weight& v);

}  // namespace orbitquant
