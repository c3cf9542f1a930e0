#include "orbitquant/dominance.hpp"

#include <algorithm>

namespace orbitquant {

bool root_order_leq(const Weight& mu, const Weight& lambda) {
  if (mu.rank() != lambda.rank()) fail(Errc::RankMismatch, "weight ranks differ");
  if (!mu.is_dominant() || !lambda.is_dominant()) fail(Errc::NotDominant, "root order needs dominant weights");
  if (!mu.is_integral() || !lambda.is_integral())
    fail(Errc::HalfIntegralSupport, "root order needs integral weights");
  long long s = 0;
  for (int i = 0; i < mu.rank(); ++i) {
    s += lambda.doubled_at(i) - mu.doubled_at(i);
    if (s < 0) return false;
  }
  return s % 4 == 0;  // doubled coordinates: total difference must be even
}

std::vector<Weight> support_maxima(const VirtualCharacter& chi) {
  if (!chi.has_integral_support()) fail(Errc::HalfIntegralSupport, "support maxima need integral support");
  std::vector<Weight> weights = chi.support();

  /* Any weight above w has strictly larger coordinate sum, or equal sum
   * and strictly larger norm (prefix-sum majorization).  Scanning in
   * decreasing (sum, norm) order therefore sees every weight after all
   * of its dominators, and it suffices to test against the maxima found
   * so far.
   */
  std::sort(weights.begin(), weights.end(), [](const Weight& a, const Weight& b) {
    if (a.sum2() != b.sum2()) return a.sum2() > b.sum2();
    if (a.norm4() != b.norm4()) return a.norm4() > b.norm4();
    return a < b;
  });

  std::vector<Weight> maxima;
  for (const Weight& w : weights) {
    bool dominated = false;
    for (const Weight& m : maxima) {
      if (root_order_leq(w, m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maxima.push_back(w);
  }
  std::sort(maxima.begin(), maxima.end());
  return maxima;
}

}  // namespace orbitquant
