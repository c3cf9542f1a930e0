#pragma once

#include "orbitquant/catalog.hpp"
#include "orbitquant/partition.hpp"
#include "orbitquant/subgroup.hpp"
#include "orbitquant/virtual_character.hpp"

#include <utility>

namespace orbitquant {

/* Alternating sum over a reflection subgroup W' <= W(C_n):
 *   sum_{w in W'} det_sign(w) Ind(dominant_rep(lambda - w lambda)).
 * lambda must have the ambient rank of the spec.  With threads > 1 the
 * enumeration index space is split into disjoint chunks whose partial
 * maps are merged; coefficients are integers either way and the result
 * is independent of the thread count.
 */
VirtualCharacter r_x(const Weight& lambda, const SubgroupSpec& spec, int threads = 1);

/* Character-weighted average over the component 2-group:
 *   (1/2^r) sum_x (-1)^{pi . x} R_x,
 * pi given as a bit mask of the generators it negates.  Needs a spec for
 * all 2^r elements (MissingSpec otherwise).
 */
VirtualCharacter x_pi(const CellCatalogEntry& entry, unsigned pi, int threads = 1);

// (X^+, X^-) for an orbit (2^{2p} 1^{2q}): the trivial- and sign-
// character averages of the catalog entry.  WrongFamily otherwise.
std::pair<VirtualCharacter, VirtualCharacter> unipotent_pair(const Partition& p, const Catalog& catalog,
                                                             int threads = 1);

/* Product character for a type-C orbit: expand
 *   prod_{alpha in S} (1 - e^alpha),  S = {alpha > 0 : <alpha, h> in {0, 1}},
 * h the orbit's Jacobson-Morozov weight, in the raw weight lattice, and
 * only then push each monomial e^nu to Ind(dominant_rep(nu)).  Weights
 * must not be W-identified during the expansion.
 */
VirtualCharacter mcgovern_character(const Partition& p);

}  // namespace orbitquant
