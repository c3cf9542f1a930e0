#pragma once

#include "orbitquant/virtual_character.hpp"
#include "orbitquant/weight.hpp"

#include <vector>

namespace orbitquant {

/* Root order on dominant integral weights of sp(2n): mu <= lambda iff
 * lambda - mu is a nonnegative integer combination of positive roots,
 * i.e. all prefix sums of lambda - mu are nonnegative and the total is
 * even.  A partial order; incomparable pairs are common.
 */
bool root_order_leq(const Weight& mu, const Weight& lambda);

// Maximal support elements under the root order, as a sorted antichain.
// The support must be integral (the keys are dominant by construction).
std::vector<Weight> support_maxima(const VirtualCharacter& chi);

}  // namespace orbitquant
