#pragma once

#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isat/graph.hpp"
#include "isat/saturation.hpp"
#include "isat/symmetry.hpp"

namespace isat {

enum class Family { cayley_z2k, circulant, all_graphs };

std::string_view to_string(Family family);
/// Accepts "cayley", "circulant", "all". Throws std::invalid_argument.
Family parse_family(std::string_view name);

struct SearchLimits {
  /// Examine only the first N candidates.
  std::optional<std::uint64_t> max_candidates;
  /// Checked between candidates only.
  std::optional<double> time_budget_seconds;
  /// Examine N distinct candidates drawn with `seed` instead of a prefix.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 20260;
  /// ALL_GRAPHS on 8 vertices (2^28 candidates) is refused without this.
  bool allow_large = false;
};

struct SearchSpace {
  Family family = Family::all_graphs;
  int field_bits = 0;           // cayley_z2k
  std::uint32_t modulus = 0;    // cayley_z2k
  int vertices = 0;             // circulant, all_graphs
  int n = 0;                    // target path length
  SearchLimits limits;

  static SearchSpace cayley(int k, std::uint32_t modulus, int n);
  static SearchSpace circulant(int m, int n);
  static SearchSpace all_graphs(int m, int n);
};

/// Deterministic indexed view of a candidate family.
///
/// Cayley: bit i of the index selects field element i + 1 for the connection
/// set. Circulant: bit s - 1 selects the residue class {s, m - s}. All graphs:
/// bit j selects the j-th pair in lexicographic order.
class CandidateStream {
 public:
  /// Throws std::invalid_argument if the space exceeds the family limits.
  explicit CandidateStream(const SearchSpace& space);

  std::uint64_t size() const { return size_; }
  int vertex_count() const { return vertex_count_; }

  Graph at(std::uint64_t index) const;
  /// Connection set masks/residues for Cayley and circulant candidates.
  std::vector<std::uint32_t> connection(std::uint64_t index) const;
  /// Translation or rotation generators; empty for all_graphs.
  const std::vector<Permutation>& generators() const { return generators_; }

  auto graphs() const {
    return std::views::iota(std::uint64_t{0}, size_) |
           std::views::transform([this](std::uint64_t i) { return at(i); });
  }

 private:
  SearchSpace space_;
  std::optional<BinaryField> field_;
  std::uint64_t size_ = 0;
  int vertex_count_ = 0;
  std::vector<VertexPair> pairs_;
  std::vector<Permutation> generators_;
};

CandidateStream enumerate_candidates(const SearchSpace& space);

struct SearchHit {
  std::uint64_t index = 0;
  std::string graph6;
  std::vector<std::uint32_t> connection;
  SaturationCertificate certificate;
};

struct SearchReport {
  SearchSpace space;
  std::uint64_t candidates_total = 0;
  std::uint64_t candidates_examined = 0;
  /// Ordered by candidate index.
  std::vector<SearchHit> hits;
  bool exhausted = false;
};

/// jobs == 1 runs the serial reference loop; jobs > 1 splits candidates
/// across OpenMP threads. Both produce the same report without a time budget.
SearchReport run_search(const SearchSpace& space, int jobs = 1);

nlohmann::json report_json(const SearchReport& report);
/// One graph6 string per line.
std::string hits_graph6(const SearchReport& report);

}  // namespace isat
