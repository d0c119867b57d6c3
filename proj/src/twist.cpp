#include "isocompat/twist.hpp"

#include "isocompat/errors.hpp"
#include "isocompat/rng.hpp"

namespace isocompat {

TwistedElement operator*(const TwistedElement& a, const TwistedElement& b) {
  return {compose(a.iso, b.iso), a.odd != b.odd};
}

std::vector<TwistedElement> sample_twisted(const GroupSpec& spec, std::size_t count, std::uint64_t seed) {
  if (!spec.twist) throw UnsupportedError("spec has no twist");
  const auto hs = sample_group(spec.base(), count, seed);
  std::vector<TwistedElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CounterRng coin(seed, 0x7457697374ULL, i);
    const bool odd = coin.coin();
    out.push_back({odd ? compose(hs[i], spec.twist->tau) : hs[i], odd});
  }
  return out;
}

TwistReport verify_twist(const GroupSpec& spec, std::uint64_t seed, std::size_t samples) {
  if (!spec.twist) throw UnsupportedError("verify_twist requires a twist");
  const GroupSpec base = spec.base();
  const EuclideanIsometry& tau = spec.twist->tau;
  const EuclideanIsometry tau_inv = tau.inverse();
  const int n = spec.dimension;

  TwistReport report;
  report.involution_defect = compose(tau, tau).max_abs_difference(EuclideanIsometry::identity(n));
  report.tau_involutive = report.involution_defect <= kOrthoTol;
  report.tau_outside = !is_member(base, tau);

  std::vector<EuclideanIsometry> probes = generators(base);
  const auto drawn = sample_group(base, samples, seed);
  probes.insert(probes.end(), drawn.begin(), drawn.end());
  for (const auto& h : probes) {
    ++report.normalizer_checks;
    if (!is_member(base, compose(compose(tau, h), tau_inv))) ++report.normalizer_failures;
  }
  report.normalizes = report.normalizer_failures == 0;

  const auto left = sample_twisted(spec, samples, seed ^ 0x5bd1e995ULL);
  const auto right = sample_twisted(spec, samples, seed ^ 0x1b873593ULL);
  for (std::size_t i = 0; i < samples; ++i) {
    ++report.homomorphism_checks;
    const TwistedElement prod = left[i] * right[i];
    bool ok = character(prod) == character(left[i]) * character(right[i]);
    // The tracked bit must agree with the matrix: prod in H iff even.
    const EuclideanIsometry reduced = prod.odd ? compose(prod.iso, tau_inv) : prod.iso;
    ok = ok && is_member(base, reduced);
    if (!ok) ++report.homomorphism_failures;
  }
  report.character_homomorphism = report.homomorphism_failures == 0;
  return report;
}

}  // namespace isocompat
