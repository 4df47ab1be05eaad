#include "borsuk/certificate.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>

#include "borsuk/fw_poly.hpp"

namespace borsuk {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a_byte(std::uint64_t h, unsigned char b) {
  return (h ^ b) * 0x100000001b3ULL;
}

std::uint64_t fnv1a_u128(std::uint64_t h, VertexMask v) {
  for (int k = 0; k < 16; ++k) {
    h = fnv1a_byte(h, static_cast<unsigned char>(v & 0xff));
    v >>= 8;
  }
  return h;
}

}  // namespace

std::string claim_name(ClaimKind claim) {
  switch (claim) {
    case ClaimKind::kOrthoFreeSubset: return "ORTHO_FREE_SUBSET";
    case ClaimKind::kMaxOrthoFree: return "MAX_ORTHO_FREE";
    case ClaimKind::kPartCountLowerBound: return "PART_COUNT_LOWER_BOUND";
  }
  throw std::invalid_argument("claim_name: unknown claim");
}

ClaimKind claim_from_name(const std::string& name) {
  if (name == "ORTHO_FREE_SUBSET") return ClaimKind::kOrthoFreeSubset;
  if (name == "MAX_ORTHO_FREE") return ClaimKind::kMaxOrthoFree;
  if (name == "PART_COUNT_LOWER_BOUND") return ClaimKind::kPartCountLowerBound;
  throw std::invalid_argument("unknown claim tag: " + name);
}

std::string vertex_list_checksum(const VertexSetM& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a_u128(h, VertexMask(static_cast<unsigned>(m.dim())));
  for (VertexMask v : m.members()) h = fnv1a_u128(h, v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["claim"] = claim_name(cert.claim);
  j["n"] = cert.n;
  j["p"] = cert.p;
  json subset = json::array();
  for (VertexMask m : cert.subset) {
    if ((m >> 63) != 0) {
      throw std::invalid_argument("certificate_to_json: mask exceeds the JSON integer range");
    }
    subset.push_back(static_cast<std::uint64_t>(m));
  }
  j["subset"] = std::move(subset);
  j["value"] = cert.value.str();
  j["exhaustive"] = cert.exhaustive;
  j["checksum"] = cert.checksum;
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  Certificate cert;
  cert.claim = claim_from_name(j.at("claim").get<std::string>());
  cert.n = j.at("n").get<int>();
  cert.p = j.at("p").get<int>();
  for (const auto& item : j.at("subset")) {
    cert.subset.push_back(VertexMask(item.get<std::uint64_t>()));
  }
  cert.value = BigNat(j.at("value").get<std::string>());
  cert.exhaustive = j.at("exhaustive").get<bool>();
  cert.checksum = j.at("checksum").get<std::string>();
  return cert;
}

void recheck_certificate(const Certificate& cert) {
  VertexSetM m = build_M(cert.n);
  if (vertex_list_checksum(m) != cert.checksum) {
    throw CertificateError("checksum does not match the vertex enumeration for n = " +
                           std::to_string(cert.n));
  }
  if (cert.p != 0 && cert.p * 4 != cert.n) {
    throw CertificateError("parameter p does not match n/4");
  }

  switch (cert.claim) {
    case ClaimKind::kOrthoFreeSubset:
    case ClaimKind::kMaxOrthoFree: {
      for (std::size_t i = 0; i < cert.subset.size(); ++i) {
        if (m.index_of(cert.subset[i]) == VertexSetM::npos) {
          throw CertificateError("subset mask " + mask_to_string(cert.subset[i]) +
                                 " is not a member of M");
        }
        for (std::size_t j = i + 1; j < cert.subset.size(); ++j) {
          if (cert.subset[i] == cert.subset[j]) {
            throw CertificateError("subset contains a duplicate mask");
          }
          SignVertex a(cert.n, cert.subset[i]), b(cert.n, cert.subset[j]);
          if (dot(a, b) == 0) {
            throw CertificateError("subset contains an orthogonal pair: " +
                                   mask_to_string(cert.subset[i]) + ", " +
                                   mask_to_string(cert.subset[j]));
          }
        }
      }
      if (cert.value != BigNat(cert.subset.size())) {
        throw CertificateError("declared value does not equal the subset size");
      }
      if (cert.claim == ClaimKind::kMaxOrthoFree && cert.exhaustive && cert.p != 0) {
        if (cert.value > alpha(cert.n)) {
          throw CertificateError("exhaustive maximum exceeds alpha(n)");
        }
      }
      break;
    }
    case ClaimKind::kPartCountLowerBound: {
      if (cert.p == 0 || !is_prime(static_cast<std::uint64_t>(cert.p))) {
        throw CertificateError("part-count claims require n = 4p with p prime");
      }
      if (!cert.subset.empty()) {
        throw CertificateError("part-count claims carry no subset");
      }
      BigNat expected = ceil_div(pow2(static_cast<unsigned>(cert.n - 2)), alpha(cert.n));
      if (cert.value != expected) {
        throw CertificateError("declared part count " + cert.value.str() +
                               " does not equal ceil(2^(n-2)/alpha(n)) = " + expected.str());
      }
      break;
    }
  }
}

}  // namespace borsuk
