#include "planeforge/spectra.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "planeforge/rng.hpp"

namespace planeforge::spectra {

namespace {

// Lines as bitmasks over point ids, one 64-bit word per block of points.
std::vector<std::vector<std::uint64_t>> line_masks(const plane::Plane& pl) {
  const std::size_t words = (pl.n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(pl.n,
                                                std::vector<std::uint64_t>(words, 0));
  for (const auto& l : pl.lines)
    for (int p : l.members) masks[l.id][p / 64] |= 1ULL << (p % 64);
  return masks;
}

int count_missed(const std::vector<std::vector<std::uint64_t>>& masks,
                 const std::vector<std::uint64_t>& subset) {
  int missed = 0;
  for (const auto& lm : masks) {
    bool hit = false;
    for (std::size_t w = 0; w < lm.size(); ++w)
      if (lm[w] & subset[w]) {
        hit = true;
        break;
      }
    if (!hit) ++missed;
  }
  return missed;
}

std::vector<int> subset_to_ids(const std::vector<std::uint64_t>& subset, int n) {
  std::vector<int> ids;
  for (int p = 0; p < n; ++p)
    if (subset[p / 64] >> (p % 64) & 1) ids.push_back(p);
  return ids;
}

void record(AuditSummary& s, const std::vector<std::vector<std::uint64_t>>& masks,
            const std::vector<std::uint64_t>& subset, int size, const BigInt& n3) {
  const int missed = count_missed(masks, subset);
  const BigInt slack = n3 - BigInt(missed) * missed * size * size;
  if (s.subsets_checked == 0 || slack < s.worst_slack) s.worst_slack = slack;
  ++s.subsets_checked;
  if (slack < 0) s.violations.push_back({subset_to_ids(subset, s.n), missed});
}

}  // namespace

IntMatrix incidence_matrix(const plane::Plane& pl) {
  IntMatrix m(pl.n, std::vector<long long>(pl.n, 0));
  for (const auto& l : pl.lines)
    for (int p : l.members) m[p][l.id] = 1;
  return m;
}

IntMatrix gram(const plane::Plane& pl) {
  // (M M^T)_{pp'} counts lines through both p and p'.
  IntMatrix g(pl.n, std::vector<long long>(pl.n, 0));
  for (const auto& l : pl.lines)
    for (int a : l.members)
      for (int b : l.members) ++g[a][b];
  return g;
}

SpectralCertificate certify_gram(int q, const IntMatrix& g) {
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const long long expected = (i == j) ? q + 1 : 1;
      if (g[i][j] != expected)
        throw CertificateFailed("gram identity fails at entry (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                "): got " + std::to_string(g[i][j]) +
                                ", expected " + std::to_string(expected));
    }
  // g = q I + J, so the spectrum is q + {n, 0} = {(q+1)^2, q, ..., q}
  // using n = q^2 + q + 1.
  SpectralCertificate cert;
  cert.q = q;
  cert.n = n;
  cert.lambda1 = static_cast<long long>(q + 1) * (q + 1);
  cert.lambda2 = q;
  return cert;
}

SpectralCertificate gram_certificate(const plane::Plane& pl) {
  return certify_gram(pl.q, gram(pl));
}

Rational tanner_lower_bound(int q, int n, int a) {
  const long long deg2 = static_cast<long long>(q + 1) * (q + 1);
  // deg2 * a / ((deg2 - q) * a / n + q), cleared of the inner denominator.
  return Rational(BigInt(deg2) * a * n, BigInt(deg2 - q) * a + BigInt(q) * n);
}

ExpansionReport missed_lines(const plane::Plane& pl, const std::vector<int>& A) {
  if (A.empty()) throw EmptySubset("missed_lines requires a nonempty subset");
  const std::size_t words = (pl.n + 63) / 64;
  std::vector<std::uint64_t> subset(words, 0);
  for (int p : A) subset[p / 64] |= 1ULL << (p % 64);

  ExpansionReport rep;
  rep.subset_size = static_cast<int>(A.size());
  rep.missed = count_missed(line_masks(pl), subset);
  rep.neighborhood = pl.n - rep.missed;
  const BigInt n3 = BigInt(pl.n) * pl.n * pl.n;
  rep.bound_holds =
      BigInt(rep.missed) * rep.missed * rep.subset_size * rep.subset_size <= n3;
  rep.tanner_bound = tanner_lower_bound(pl.q, pl.n, rep.subset_size);
  rep.tanner_holds = Rational(rep.neighborhood) >= rep.tanner_bound;
  return rep;
}

AuditSummary expansion_audit_exhaustive(const plane::Plane& pl) {
  if (pl.n > 24)
    throw TooLargeForExhaustive("2^n exceeds 2^24 for n = " + std::to_string(pl.n));
  AuditSummary s;
  s.q = pl.q;
  s.n = pl.n;
  s.mode = "exhaustive";
  const auto masks = line_masks(pl);
  const BigInt n3 = BigInt(pl.n) * pl.n * pl.n;
  for (std::uint64_t bits = 1; bits < (1ULL << pl.n); ++bits)
    record(s, masks, {bits}, __builtin_popcountll(bits), n3);
  return s;
}

AuditSummary expansion_audit_sampled(const plane::Plane& pl, std::uint64_t count,
                                     std::uint64_t seed) {
  AuditSummary s;
  s.q = pl.q;
  s.n = pl.n;
  s.mode = "sampled";
  s.seed = seed;
  const auto masks = line_masks(pl);
  const BigInt n3 = BigInt(pl.n) * pl.n * pl.n;
  const std::size_t words = (pl.n + 63) / 64;
  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<std::uint64_t> subset(words, 0);
    int size = 0;
    do {
      for (std::size_t w = 0; w < words; ++w) {
        subset[w] = rng.next();
        if ((w + 1) * 64 > static_cast<std::size_t>(pl.n))
          subset[w] &= (1ULL << (pl.n % 64)) - 1;
      }
      size = 0;
      for (auto w : subset) size += __builtin_popcountll(w);
    } while (size == 0);
    record(s, masks, subset, size, n3);
  }
  return s;
}

std::string audit_summary_json(const AuditSummary& s) {
  nlohmann::ordered_json j;
  j["q"] = s.q;
  j["n"] = s.n;
  j["mode"] = s.mode;
  if (s.seed) j["seed"] = *s.seed;
  j["subsets_checked"] = s.subsets_checked;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : s.violations)
    j["violations"].push_back({{"subset", v.subset}, {"missed", v.missed}});
  j["worst_slack_numerator"] = s.worst_slack.str();
  return j.dump(2);
}

}  // namespace planeforge::spectra
