#pragma once

#include "orbitquant/rational.hpp"
#include "orbitquant/weight.hpp"

#include <map>
#include <vector>

namespace orbitquant {

/* A finite rational combination of full induced characters Ind(mu), one
 * per dominant weight mu.  Zero coefficients are never stored, so
 * support() and equality are exact.
 */
class VirtualCharacter {
public:
  explicit VirtualCharacter(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  const std::map<Weight, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // mu must be dominant of matching rank; a zero sum erases the term
  void add_term(const Weight& mu, const Rational& coeff);

  Rational coeff(const Weight& mu) const;
  std::vector<Weight> support() const;
  bool has_integral_support() const;
  // true when every coefficient is an integer
  bool has_integer_coefficients() const;

  VirtualCharacter& operator+=(const VirtualCharacter& o);
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  VirtualCharacter scaled(const Rational& c) const;
  friend VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) {
    VirtualCharacter r = a;
    r += b.scaled(-1);
    return r;
  }

  bool operator==(const VirtualCharacter& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
  bool operator!=(const VirtualCharacter& o) const { return !(*this == o); }

  // terms ordered by descending Euclidean norm, then ascending
  // lexicographic on coordinates; the serialization order
  std::vector<std::pair<Weight, Rational>> sorted_terms() const;

private:
  int rank_;
  std::map<Weight, Rational> terms_;
};

}  // namespace orbitquant
