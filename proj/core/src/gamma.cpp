#include "orbitquant/gamma.hpp"

#include "orbitquant/characters.hpp"
#include "orbitquant/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace orbitquant {

const char* tag_name(CharacterTag tag) {
  switch (tag) {
    case CharacterTag::Plus: return "plus";
    case CharacterTag::Minus: return "minus";
    case CharacterTag::Cover: return "cover";
  }
  return "?";
}

namespace {

// q entries 2p+2q, 2p+2q-2, ..., 2p+2 followed by the odd pairs
// (2p-1)^2, ..., 1^2.  Rank p+p+q.
Weight reduced_string(int p, int q) {
  std::vector<int> coords;
  coords.reserve(2 * p + q);
  for (int v = 2 * p + 2 * q; v >= 2 * p + 2; v -= 2) coords.push_back(v);
  for (int v = 2 * p - 1; v >= 1; v -= 2) {
    coords.push_back(v);
    coords.push_back(v);
  }
  return Weight::integral(coords);
}

GammaCertificate certify(const Partition& orbit, CharacterTag tag, const VirtualCharacter& chi,
                         Weight expected) {
  GammaCertificate cert{orbit, tag, chi.support().size(), support_maxima(chi),
                        std::nullopt, std::move(expected), false, false};
  if (cert.maxima.size() == 1) cert.gamma = cert.maxima.front();
  cert.pass = cert.maxima.size() == 1 && cert.maxima.front() == cert.expected;

  // Unique norm maximum in the support, and it is the root-order maximum.
  long long best = -1;
  int attained = 0;
  std::optional<Weight> top;
  for (const auto& [nu, c] : chi.sorted_terms()) {
    long long n4 = nu.norm4();
    if (n4 > best) {
      best = n4;
      attained = 1;
      top = nu;
    } else if (n4 == best) {
      ++attained;
    }
  }
  cert.norm_check = cert.gamma && attained == 1 && top && *top == *cert.gamma;
  return cert;
}

}  // namespace

Weight gamma_closed_form(int p, int q) {
  if (p < 1 || q < 0) fail(Errc::ParseError, "closed form needs p >= 1, q >= 0");
  if (q % 2 == 1) {
    OrbitDescriptor od = orbit_descriptor(family_partition(p, q));
    return od.lambda.scaled(2);
  }
  return reduced_string(p, q);
}

Weight gamma_minus_closed_form(int p, int q) {
  if (p < 1 || q < 0) fail(Errc::ParseError, "closed form needs p >= 1, q >= 0");
  if (q % 2 == 0) {
    OrbitDescriptor od = orbit_descriptor(family_partition(p, q));
    return od.lambda.scaled(2);
  }
  return reduced_string(p, q);
}

GammaCertificate gamma_certificate(const Partition& p, CharacterTag tag, const Catalog& catalog,
                                   int threads) {
  OrbitDescriptor od = orbit_descriptor(p);
  const CellCatalogEntry& entry = catalog.lookup(p);

  if (tag == CharacterTag::Cover) {
    const SubgroupSpec& spec = entry.spec_for(0);
    VirtualCharacter chi = r_x(spec.arrangement(), spec, threads);
    return certify(p, tag, chi, od.lambda.scaled(2));
  }

  VirtualCharacter chi = x_pi(entry, tag == CharacterTag::Plus ? 0u : 1u, threads);
  auto fam = two_one_family(p);
  if (!fam) fail(Errc::WrongFamily, "no closed-form prediction outside the (2^2p 1^2q) family");
  auto [fp, fq] = *fam;
  Weight expected =
      tag == CharacterTag::Plus ? gamma_closed_form(fp, fq) : gamma_minus_closed_form(fp, fq);
  return certify(p, tag, chi, std::move(expected));
}

CoverCertificate verify_achar_sommers(const Partition& p, const Catalog& catalog,
                                      const std::optional<SubgroupSpec>& spec_override,
                                      int threads) {
  OrbitDescriptor od = orbit_descriptor(p);
  SubgroupSpec spec = [&] {
    if (!spec_override) return catalog.lookup(p).spec_for(0);
    if (spec_override->ambient_rank() != od.rank)
      fail(Errc::CatalogMismatch, "override spec has ambient rank " +
                                      std::to_string(spec_override->ambient_rank()) +
                                      ", orbit needs " + std::to_string(od.rank));
    Weight arranged = spec_override->arrangement();
    std::multiset<int> arr(arranged.doubled().begin(), arranged.doubled().end());
    std::multiset<int> lam(od.lambda.doubled().begin(), od.lambda.doubled().end());
    if (arr != lam)
      fail(Errc::CatalogMismatch, "override spec arrangement does not match the orbit's lambda");
    return *spec_override;
  }();

  VirtualCharacter chi = r_x(spec.arrangement(), spec, threads);
  Weight two_lambda = od.lambda.scaled(2);

  Rational coefficient = chi.coeff(two_lambda);
  int longest_det = spec.longest_element().det_sign();
  return CoverCertificate{certify(p, CharacterTag::Cover, chi, two_lambda), coefficient,
                          longest_det, coefficient == Rational(longest_det)};
}

bool parity_split_check(int p, int q) {
  if (p < 1 || q < 0) fail(Errc::ParseError, "parity split needs p >= 1, q >= 0");
  SubgroupSpec even({{FactorKind::D, p}, {FactorKind::C, p + q}});
  SubgroupSpec odd({{FactorKind::D, p + q + 1}, {FactorKind::C, p - 1}});
  return even.longest_element().det_sign() == odd.longest_element().det_sign();
}

}  // namespace orbitquant
