#pragma once

#include "orbitquant/catalog.hpp"
#include "orbitquant/dominance.hpp"
#include "orbitquant/partition.hpp"
#include "orbitquant/virtual_character.hpp"

#include <optional>
#include <vector>

namespace orbitquant {

enum class CharacterTag { Plus, Minus, Cover };

const char* tag_name(CharacterTag tag);  // "plus", "minus", "cover"

/* Verification record for one maximal-term computation: the support
 * maxima of the chosen character against the predicted maximum.
 * verdict passes iff the maxima form a singleton equal to expected;
 * norm_check reports whether that singleton is also the unique support
 * element of maximal Euclidean norm.
 */
struct GammaCertificate {
  Partition orbit;
  CharacterTag tag;
  std::size_t support_size = 0;
  std::vector<Weight> maxima;
  std::optional<Weight> gamma;  // set iff maxima is a singleton
  Weight expected;
  bool pass = false;
  bool norm_check = false;
};

/* Predicted root-order maximum of X^+ for the orbit (2^{2p} 1^{2q}):
 * twice the attached lambda when q is odd, and the reduced string
 *   (2p+2q, 2p+2q-2, ..., 2p+2, (2p-1)^2, (2p-3)^2, ..., 1^2)
 * when q is even.
 */
Weight gamma_closed_form(int p, int q);

// Predicted maximum of X^-: the two q-parities swap roles.
Weight gamma_minus_closed_form(int p, int q);

// Builds X^+, X^- or R_e for the orbit and certifies its support maxima
// against the closed-form prediction (Cover expects 2 lambda).
GammaCertificate gamma_certificate(const Partition& p, CharacterTag tag, const Catalog& catalog,
                                   int threads = 1);

/* Cover-character certificate plus the identity witness: the
 * coefficient of Ind(2 lambda) in R_e must equal the det_sign of the
 * spec's longest element (the only group element contributing there).
 */
struct CoverCertificate {
  GammaCertificate cert;
  Rational coefficient;  // of Ind(2 lambda) in R_e
  int longest_det = 0;
  bool witness = false;  // coefficient == longest_det

  bool pass() const { return cert.pass && witness; }
};

// spec_override substitutes for the catalog's identity-component spec,
// for orbits without catalog data; it is checked against the
// arrangement invariant.
CoverCertificate verify_achar_sommers(const Partition& p, const Catalog& catalog,
                                      const std::optional<SubgroupSpec>& spec_override = std::nullopt,
                                      int threads = 1);

/* det_sign comparison of the longest elements of D_p x C_{p+q} and
 * D_{p+q+1} x C_{p-1}: returns true when the signs agree, i.e. when the
 * 2 lambda term survives in X^+.  Equals (q odd).
 */
bool parity_split_check(int p, int q);

}  // namespace orbitquant
