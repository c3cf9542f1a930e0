#include "orbitquant/weight.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace orbitquant {

Weight Weight::integral(std::vector<int> coords) {
  for (int& c : coords) c *= 2;
  return Weight(std::move(coords));
}

Weight Weight::halves(std::vector<int> doubled) { return Weight(std::move(doubled)); }

Weight Weight::zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

bool Weight::is_integral() const {
  for (int t : twice_)
    if (t % 2 != 0) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (std::size_t i = 1; i < twice_.size(); ++i)
    if (twice_[i - 1] < twice_[i]) return false;
  return twice_.empty() || twice_.back() >= 0;
}

std::vector<int> Weight::as_ints() const {
  if (!is_integral()) fail(Errc::HalfIntegralSupport, "weight " + to_string() + " is not integral");
  std::vector<int> out(twice_.size());
  for (std::size_t i = 0; i < twice_.size(); ++i) out[i] = twice_[i] / 2;
  return out;
}

long long Weight::norm4() const {
  long long s = 0;
  for (int t : twice_) s += static_cast<long long>(t) * t;
  return s;
}

long long Weight::sum2() const {
  long long s = 0;
  for (int t : twice_) s += t;
  return s;
}

Weight Weight::scaled(int k) const {
  std::vector<int> t = twice_;
  for (int& x : t) x *= k;
  return Weight(std::move(t));
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) fail(Errc::RankMismatch, "weight ranks differ");
  std::vector<int> t = a.twice_;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += b.twice_[i];
  return Weight(std::move(t));
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) fail(Errc::RankMismatch, "weight ranks differ");
  std::vector<int> t = a.twice_;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] -= b.twice_[i];
  return Weight(std::move(t));
}

bool Weight::operator<(const Weight& o) const {
  if (twice_.size() != o.twice_.size()) return twice_.size() < o.twice_.size();
  return std::lexicographical_compare(twice_.begin(), twice_.end(), o.twice_.begin(), o.twice_.end());
}

static std::string coord_string(int t) {
  if (t % 2 == 0) return std::to_string(t / 2);
  return std::to_string(t) + "/2";
}

std::string Weight::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < twice_.size(); ++i) {
    if (i) out << ',';
    out << coord_string(twice_[i]);
  }
  out << ')';
  return out.str();
}

std::vector<std::string> Weight::coord_strings() const {
  std::vector<std::string> out;
  out.reserve(twice_.size());
  for (int t : twice_) out.push_back(coord_string(t));
  return out;
}

Weight dominant_rep(const Weight& v) {
  std::vector<int> t = v.doubled();
  for (int& x : t) x = std::abs(x);
  std::sort(t.begin(), t.end(), std::greater<int>());
  return Weight::halves(std::move(t));
}

}  // namespace orbitquant
