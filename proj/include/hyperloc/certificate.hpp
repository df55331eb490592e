#ifndef HYPERLOC_CERTIFICATE_HPP
#define HYPERLOC_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperloc/json_io.hpp"
#include "hyperloc/os_algebra.hpp"

namespace hyperloc {

/// One derivation step. `verified` means the step's computational content
/// was checked exactly; axiom steps are never verified and carry a citation.
struct CertificateStep {
  int id = 0;
  std::string rule;
  std::vector<int> depends_on;
  json inputs;
  std::string claim;
  bool verified = false;
  bool axiom = false;
  std::optional<std::string> citation;
};

/// Machine form of the argument that C_q is an essential component of
/// Sigma_1(D_r) translated by a character of finite order.
struct NonvanishingCertificate {
  int r = 0;
  int q = 0;
  int degree = 1;
  int lower_bound = 1;
  bool oracle = false;
  /// "fox-oracle" when the membership C_q in Sigma_1(D_r) was confirmed by
  /// the presentation oracle, "axiom" when it rests on the literature.
  std::string membership_basis;
  long long translation_order = 0;
  /// Exact dim H^1 at the generic point, when the oracle ran.
  std::optional<std::size_t> fox_h1;
  std::vector<CertificateStep> steps;
};

struct CertifyOptions {
  bool oracle = false;
  NeighborlyOptions search;
};

/// Builds the certificate for (r, q), 1 <= q <= r - 1. The oracle applies
/// only where decone(D_r) is real, i.e. r = 2. If the partition search hits
/// its size bound the exclusion step is left unverified.
NonvanishingCertificate certify_sigma1(int r, int q, const CertifyOptions& opts = {});

json to_json(const NonvanishingCertificate& c);

struct RecheckReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Replays every step of a serialized certificate from its stored inputs.
RecheckReport recheck_certificate(const json& certificate);

}  // namespace hyperloc

#endif  // HYPERLOC_CERTIFICATE_HPP
