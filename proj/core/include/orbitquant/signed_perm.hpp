#pragma once

#include "orbitquant/errors.hpp"
#include "orbitquant/weight.hpp"

#include <string>
#include <vector>

namespace orbitquant {

/* An element of the hyperoctahedral group W(C_n) in window notation:
 * images[i] = +-j (1-based) means coordinate i of the output is
 * sign(images[i]) * v[j].  As a matrix this is a signed permutation
 * matrix with exactly one +-1 per row and column.
 */
class SignedPermutation {
public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> images);

  static SignedPermutation identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<std::size_t>(i)]; }  // signed, 1-based
  const std::vector<int>& images() const { return images_; }

  Weight act(const Weight& v) const;

  // determinant of the signed permutation matrix: sgn of the underlying
  // permutation times (-1)^{number of sign changes}; equals (-1)^length
  int det_sign() const;

  bool operator==(const SignedPermutation& o) const { return images_ == o.images_; }
  bool operator<(const SignedPermutation& o) const { return images_ < o.images_; }

  std::string to_string() const;  // "[2,-1,3]"

private:
  std::vector<int> images_;
};

// (u * w)(v) = u(w(v))
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& w);

// Coxeter length: the number of positive roots sent to negative roots.
// length_c counts against the C_n system {e_i +- e_j, 2e_i}, length_d
// against the D_n system {e_i +- e_j}.  Convention-free, O(n^2).
int length_c(const SignedPermutation& w);
int length_d(const SignedPermutation& w);

}  // namespace orbitquant
