#include "orbitquant/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace orbitquant {

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int im : images_) {
    int j = std::abs(im);
    if (j < 1 || j > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(j - 1)])
      fail(Errc::ParseError, "invalid signed permutation window");
    seen[static_cast<std::size_t>(j - 1)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int rank) {
  std::vector<int> im(static_cast<std::size_t>(rank));
  std::iota(im.begin(), im.end(), 1);
  return SignedPermutation(std::move(im));
}

Weight SignedPermutation::act(const Weight& v) const {
  if (v.rank() != rank()) fail(Errc::RankMismatch, "weight rank does not match group rank");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    int im = images_[i];
    int val = v.doubled_at(std::abs(im) - 1);
    out[i] = im < 0 ? -val : val;
  }
  return Weight::halves(std::move(out));
}

int SignedPermutation::det_sign() const {
  // permutation sign from cycle structure, times one -1 per negative image
  int sign = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(std::abs(images_[j]) - 1);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  for (int im : images_)
    if (im < 0) sign = -sign;
  return sign;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << images_[i];
  }
  out << ']';
  return out.str();
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& w) {
  if (u.rank() != w.rank()) fail(Errc::RankMismatch, "ranks differ in composition");
  std::vector<int> im(static_cast<std::size_t>(u.rank()));
  for (int i = 0; i < u.rank(); ++i) {
    int ui = u.image(i);
    int inner = w.image(std::abs(ui) - 1);
    im[static_cast<std::size_t>(i)] = ui < 0 ? -inner : inner;
  }
  return SignedPermutation(std::move(im));
}

namespace {

// w(e_j) = sign[j] * e_{pos[j]}
struct BasisImage {
  std::vector<int> pos;
  std::vector<int> sign;
};

BasisImage basis_image(const SignedPermutation& w) {
  BasisImage b;
  b.pos.resize(static_cast<std::size_t>(w.rank()));
  b.sign.resize(static_cast<std::size_t>(w.rank()));
  for (int i = 0; i < w.rank(); ++i) {
    int im = w.image(i);
    std::size_t j = static_cast<std::size_t>(std::abs(im) - 1);
    b.pos[j] = i;
    b.sign[j] = im < 0 ? -1 : 1;
  }
  return b;
}

// counts positive roots e_i +- e_j (i < j) made negative by w
int inversions_pairs(const BasisImage& b) {
  int n = static_cast<int>(b.pos.size());
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // image of e_i - e_j: leading coefficient decides positivity
      int lead = b.pos[static_cast<std::size_t>(i)] < b.pos[static_cast<std::size_t>(j)]
                     ? b.sign[static_cast<std::size_t>(i)]
                     : -b.sign[static_cast<std::size_t>(j)];
      if (lead < 0) ++count;
      // image of e_i + e_j
      lead = b.pos[static_cast<std::size_t>(i)] < b.pos[static_cast<std::size_t>(j)]
                 ? b.sign[static_cast<std::size_t>(i)]
                 : b.sign[static_cast<std::size_t>(j)];
      if (lead < 0) ++count;
    }
  }
  return count;
}

}  // namespace

int length_c(const SignedPermutation& w) {
  BasisImage b = basis_image(w);
  int count = inversions_pairs(b);
  for (int s : b.sign)
    if (s < 0) ++count;  // roots 2e_i
  return count;
}

int length_d(const SignedPermutation& w) { return inversions_pairs(basis_image(w)); }

}  // namespace orbitquant
