#include "orbitquant/virtual_character.hpp"

#include <algorithm>

namespace orbitquant {

void VirtualCharacter::add_term(const Weight& mu, const Rational& coeff) {
  if (mu.rank() != rank_) fail(Errc::RankMismatch, "term rank does not match character rank");
  if (!mu.is_dominant()) fail(Errc::NotDominant, "term weight " + mu.to_string() + " is not dominant");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational VirtualCharacter::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Weight> VirtualCharacter::support() const {
  std::vector<Weight> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back(w);
  return out;
}

bool VirtualCharacter::has_integral_support() const {
  for (const auto& [w, c] : terms_)
    if (!w.is_integral()) return false;
  return true;
}

bool VirtualCharacter::has_integer_coefficients() const {
  for (const auto& [w, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  if (o.rank_ != rank_) fail(Errc::RankMismatch, "character ranks differ");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

VirtualCharacter VirtualCharacter::scaled(const Rational& c) const {
  VirtualCharacter out(rank_);
  if (c == 0) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
  return out;
}

std::vector<std::pair<Weight, Rational>> VirtualCharacter::sorted_terms() const {
  std::vector<std::pair<Weight, Rational>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long long na = a.first.norm4(), nb = b.first.norm4();
    if (na != nb) return na > nb;
    return a.first < b.first;
  });
  return out;
}

}  // namespace orbitquant
