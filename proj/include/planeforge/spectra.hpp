#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planeforge/plane.hpp"
#include "planeforge/rational.hpp"

namespace planeforge::spectra {

struct CertificateFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptySubset : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TooLargeForExhaustive : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using IntMatrix = std::vector<std::vector<long long>>;

/// Point x line 0/1 incidence matrix M.
IntMatrix incidence_matrix(const plane::Plane& pl);

/// M M^T, exact integer arithmetic.
IntMatrix gram(const plane::Plane& pl);

/// Asserts the entrywise identity M M^T = q I + J and deduces the spectrum
/// {(q+1)^2 once, q with multiplicity n-1} from the spectrum {n, 0} of J.
/// No floating-point eigensolver is involved.
struct SpectralCertificate {
  int q = 0;
  int n = 0;
  long long lambda1 = 0;  // (q+1)^2
  long long lambda2 = 0;  // q, multiplicity n-1
};

SpectralCertificate gram_certificate(const plane::Plane& pl);
SpectralCertificate certify_gram(int q, const IntMatrix& g);

/// Tanner's neighborhood bound with lambda2 = q substituted:
/// (q+1)^2 a / (((q+1)^2 - q) a / n + q), as an exact rational.
Rational tanner_lower_bound(int q, int n, int a);

struct ExpansionReport {
  int subset_size = 0;
  int missed = 0;        // lines disjoint from A
  int neighborhood = 0;  // |N(A)| = n - missed
  bool bound_holds = false;   // missed^2 |A|^2 <= n^3
  bool tanner_holds = false;  // |N(A)| >= tanner_lower_bound
  Rational tanner_bound;
};

ExpansionReport missed_lines(const plane::Plane& pl, const std::vector<int>& A);

struct Violation {
  std::vector<int> subset;
  int missed = 0;
};

struct AuditSummary {
  int q = 0;
  int n = 0;
  std::string mode;  // "exhaustive" or "sampled"
  std::optional<std::uint64_t> seed;
  std::uint64_t subsets_checked = 0;
  std::vector<Violation> violations;
  BigInt worst_slack;  // min over checked A of n^3 - missed^2 |A|^2
};

/// All 2^n - 1 nonempty subsets; allowed only while 2^n <= 2^24.
AuditSummary expansion_audit_exhaustive(const plane::Plane& pl);

/// `count` uniform nonempty subsets from a seeded splitmix64 stream.
AuditSummary expansion_audit_sampled(const plane::Plane& pl, std::uint64_t count,
                                     std::uint64_t seed);

/// {q, n, mode, seed?, subsets_checked, violations, worst_slack_numerator}
/// rendered with a fixed key order so equal summaries serialize identically.
std::string audit_summary_json(const AuditSummary& s);

}  // namespace planeforge::spectra
