#include <string>

#include "isat/saturation.hpp"

namespace isat {

using nlohmann::json;

json certificate_to_json(const SaturationCertificate& cert) {
  json entries = json::array();
  for (const auto& entry : cert.entries) {
    json item = {{"pair", {entry.pair.u, entry.pair.v}}, {"was_edge", entry.was_edge}, {"path", entry.path}};
    if (cert.orbit_reduced) item["orbit_size"] = entry.orbit_size;
    entries.push_back(std::move(item));
  }
  json doc = {{"graph", cert.graph},
              {"n", cert.n},
              {"orbit_reduced", cert.orbit_reduced},
              {"verified_pairs", cert.verified_pairs},
              {"warnings", cert.warnings},
              {"entries", std::move(entries)}};
  if (cert.orbit_reduced) doc["generators"] = cert.generators;
  return doc;
}

SaturationCertificate certificate_from_json(const json& doc) {
  try {
    SaturationCertificate cert;
    cert.graph = doc.at("graph").get<std::string>();
    cert.n = doc.at("n").get<int>();
    cert.orbit_reduced = doc.at("orbit_reduced").get<bool>();
    cert.verified_pairs = doc.value("verified_pairs", std::size_t{0});
    cert.warnings = doc.value("warnings", std::vector<std::string>{});
    if (cert.orbit_reduced) cert.generators = doc.at("generators").get<std::vector<Permutation>>();
    for (const auto& item : doc.at("entries")) {
      const auto pair = item.at("pair").get<std::vector<int>>();
      if (pair.size() != 2) throw CertificateFormatError("certificate pair must have two vertices");
      CertificateEntry entry;
      entry.pair = VertexPair{pair[0], pair[1]};
      entry.was_edge = item.at("was_edge").get<bool>();
      entry.path = item.at("path").get<std::vector<int>>();
      entry.orbit_size = item.value("orbit_size", std::size_t{1});
      cert.entries.push_back(std::move(entry));
    }
    return cert;
  } catch (const json::exception& e) {
    throw CertificateFormatError(std::string("malformed certificate: ") + e.what());
  }
}

json verdict_to_json(const VerificationResult& result) {
  const auto& verdict = result.verdict;
  json doc = {{"status", std::string(to_string(verdict.status))},
              {"additions_checked", result.stats.additions_checked},
              {"removals_checked", result.stats.removals_checked}};
  if (verdict.offending_pair) doc["offending_pair"] = {verdict.offending_pair->u, verdict.offending_pair->v};
  if (verdict.offending_witness) doc["offending_witness"] = verdict.offending_witness->vertices;
  return doc;
}

}  // namespace isat
