#ifndef BORSUK_CERTIFICATE_HPP
#define BORSUK_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "borsuk/bignat.hpp"
#include "borsuk/hypercube.hpp"

namespace borsuk {

enum class ClaimKind {
  kOrthoFreeSubset,      // subset of M with no orthogonal pair
  kMaxOrthoFree,         // largest ortho-free subset found by search
  kPartCountLowerBound,  // ceil(2^(n-2) / alpha(n)) parts are necessary
};

std::string claim_name(ClaimKind claim);
ClaimKind claim_from_name(const std::string& name);

/// A serialized, independently re-checkable witness of a verified claim.
/// The checksum binds the certificate to the vertex enumeration it refers
/// to (FNV-1a over the dimension and the ascending member masks of M).
struct Certificate {
  ClaimKind claim;
  int n = 0;
  int p = 0;  // n/4 when prime, 0 otherwise
  std::vector<VertexMask> subset;  // neg_masks, ascending
  BigNat value;
  bool exhaustive = false;
  std::string checksum;  // 16 hex digits

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

std::string vertex_list_checksum(const VertexSetM& m);

/// JSON with stable field order: claim, n, p, subset, value, exhaustive,
/// checksum. BigNat serialized as a decimal string, masks as integers.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Re-verifies the claim from scratch: rebuilds M(n), matches the
/// checksum, and re-runs the claim-specific checks (pairwise
/// non-orthogonality and size for subset claims, the exact counting
/// inequality for part-count claims, the alpha(n) cap for exhaustive
/// maximum claims). Throws CertificateError with a reason on failure.
void recheck_certificate(const Certificate& cert);

}  // namespace borsuk

#endif  // BORSUK_CERTIFICATE_HPP
