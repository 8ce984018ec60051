#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isat/graph.hpp"
#include "isat/symmetry.hpp"

namespace isat {

enum class SaturationStatus { saturated, contains_induced_path, removal_fails, addition_fails };

/// "SATURATED", "CONTAINS_INDUCED_PATH", "REMOVAL_FAILS", "ADDITION_FAILS".
std::string_view to_string(SaturationStatus status);

struct SaturationVerdict {
  SaturationStatus status = SaturationStatus::saturated;
  /// Set for contains_induced_path.
  std::optional<PathWitness> offending_witness;
  /// Set for removal_fails / addition_fails: the least failing pair.
  std::optional<VertexPair> offending_pair;
};

struct PathFreeness {
  bool free = true;
  std::optional<PathWitness> witness;
};

/// One pair of the witness function: the full n-vertex path in the graph
/// with `pair` toggled. The path minus the pair is f(pair).
struct CertificateEntry {
  VertexPair pair;
  bool was_edge = false;
  std::vector<int> path;
  /// Pairs covered by this entry; 1 unless the certificate is orbit reduced.
  std::size_t orbit_size = 1;
};

struct SaturationCertificate {
  int n = 0;
  std::string graph;  // graph6
  bool orbit_reduced = false;
  /// Sorted by pair. Covers every vertex pair unless orbit_reduced, in which
  /// case it holds one representative per orbit of `generators`.
  std::vector<CertificateEntry> entries;
  std::vector<Permutation> generators;
  std::size_t verified_pairs = 0;
  std::vector<std::string> warnings;
};

struct VerificationStats {
  std::size_t additions_checked = 0;
  std::size_t removals_checked = 0;
};

struct VerificationResult {
  SaturationVerdict verdict;
  /// Present iff the verdict is saturated.
  std::optional<SaturationCertificate> certificate;
  VerificationStats stats;
};

struct VerifyOptions {
  /// When set, only one representative per pair orbit is searched.
  std::optional<std::vector<Permutation>> generators;
  /// 1 runs the serial reference loop; more runs pair checks under OpenMP.
  int jobs = 1;
};

class WitnessError : public std::runtime_error {
 public:
  WitnessError(const std::string& what, std::optional<VertexPair> pair)
      : std::runtime_error(what), pair_(pair) {}
  std::optional<VertexPair> pair() const { return pair_; }

 private:
  std::optional<VertexPair> pair_;
};

/// Raised when a certificate is checked against a graph it was not issued for.
class CertificateMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PathFreeness is_path_free(const Graph& g, int n);

/// An induced P_n in g with e toggled that contains both ends of e. When g
/// is P_n-free every induced P_n of the toggled graph has this form.
std::optional<PathWitness> toggled_pair_witness(const Graph& g, VertexPair e, int n);

/// Checks freeness, then every addition, then every removal.
VerificationResult verify_induced_saturated(const Graph& g, int n, const VerifyOptions& options = {});

/// The witness function over all vertex pairs of a P_n-free graph. Throws
/// WitnessError if g contains an induced P_n (no pair) or if some pair has
/// no witness (that pair).
std::map<VertexPair, PathWitness> witness_function(const Graph& g, int n);

/// Re-validates every stored path and re-runs the freeness check without
/// going through the verifier's search. Throws CertificateMismatch when the
/// certificate names a different graph.
bool check_certificate(const SaturationCertificate& cert, const Graph& g);

nlohmann::json certificate_to_json(const SaturationCertificate& cert);
/// Throws CertificateFormatError on malformed documents.
SaturationCertificate certificate_from_json(const nlohmann::json& doc);
nlohmann::json verdict_to_json(const VerificationResult& result);

}  // namespace isat
