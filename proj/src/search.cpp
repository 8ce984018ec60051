#include "isat/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "isat/graph_io.hpp"

namespace isat {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t pow2(int bits) {
  if (bits > 63) throw std::invalid_argument("candidate family too large to index");
  return std::uint64_t{1} << bits;
}

std::vector<std::uint64_t> selected_indices(const SearchLimits& limits, std::uint64_t total) {
  std::vector<std::uint64_t> out;
  if (limits.sample && *limits.sample < total) {
    std::mt19937_64 rng(limits.seed);
    std::set<std::uint64_t> picked;
    while (picked.size() < *limits.sample) picked.insert(rng() % total);
    out.assign(picked.begin(), picked.end());
  } else {
    const std::uint64_t count = std::min(total, limits.max_candidates.value_or(total));
    out.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) out[i] = i;
  }
  if (limits.sample && limits.max_candidates && out.size() > *limits.max_candidates) {
    out.resize(*limits.max_candidates);
  }
  return out;
}

std::optional<SearchHit> evaluate(const CandidateStream& stream, std::uint64_t index, int n) {
  Graph g = stream.at(index);
  VerifyOptions options;
  if (!stream.generators().empty()) options.generators = stream.generators();
  auto result = verify_induced_saturated(g, n, options);
  if (result.verdict.status != SaturationStatus::saturated) return std::nullopt;
  return SearchHit{index, encode_graph6(g), stream.connection(index), std::move(*result.certificate)};
}

class Budget {
 public:
  explicit Budget(std::optional<double> seconds) : start_(Clock::now()), seconds_(seconds) {}
  bool expired() const {
    return seconds_ && std::chrono::duration<double>(Clock::now() - start_).count() > *seconds_;
  }

 private:
  Clock::time_point start_;
  std::optional<double> seconds_;
};

void search_serial(const CandidateStream& stream, const std::vector<std::uint64_t>& indices,
                   const SearchSpace& space, SearchReport& report) {
  const Budget budget(space.limits.time_budget_seconds);
  for (std::uint64_t index : indices) {
    if (budget.expired()) break;
    ++report.candidates_examined;
    if (auto hit = evaluate(stream, index, space.n)) report.hits.push_back(std::move(*hit));
  }
}

void search_parallel(const CandidateStream& stream, const std::vector<std::uint64_t>& indices,
                     const SearchSpace& space, int jobs, SearchReport& report) {
  const Budget budget(space.limits.time_budget_seconds);
  std::vector<std::vector<SearchHit>> per_thread(static_cast<std::size_t>(jobs));
  std::uint64_t examined = 0;
  const auto count = static_cast<std::int64_t>(indices.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 64) reduction(+ : examined)
  for (std::int64_t i = 0; i < count; ++i) {
    if (budget.expired()) continue;
    ++examined;
    if (auto hit = evaluate(stream, indices[static_cast<std::size_t>(i)], space.n)) {
      per_thread[static_cast<std::size_t>(omp_get_thread_num())].push_back(std::move(*hit));
    }
  }
  report.candidates_examined = examined;
  for (auto& hits : per_thread) {
    std::ranges::move(hits, std::back_inserter(report.hits));
  }
  std::ranges::sort(report.hits, {}, &SearchHit::index);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::cayley_z2k:
      return "CAYLEY_Z2K";
    case Family::circulant:
      return "CIRCULANT";
    case Family::all_graphs:
      return "ALL_GRAPHS";
  }
  return "UNKNOWN";
}

Family parse_family(std::string_view name) {
  if (name == "cayley" || name == "CAYLEY_Z2K") return Family::cayley_z2k;
  if (name == "circulant" || name == "CIRCULANT") return Family::circulant;
  if (name == "all" || name == "ALL_GRAPHS") return Family::all_graphs;
  throw std::invalid_argument("unknown search family '" + std::string(name) + "'");
}

SearchSpace SearchSpace::cayley(int k, std::uint32_t modulus, int n) {
  SearchSpace s;
  s.family = Family::cayley_z2k;
  s.field_bits = k;
  s.modulus = modulus;
  s.n = n;
  return s;
}

SearchSpace SearchSpace::circulant(int m, int n) {
  SearchSpace s;
  s.family = Family::circulant;
  s.vertices = m;
  s.n = n;
  return s;
}

SearchSpace SearchSpace::all_graphs(int m, int n) {
  SearchSpace s;
  s.family = Family::all_graphs;
  s.vertices = m;
  s.n = n;
  return s;
}

CandidateStream::CandidateStream(const SearchSpace& space) : space_(space) {
  if (space.n < 2) throw std::invalid_argument("path length must be at least 2");
  switch (space.family) {
    case Family::cayley_z2k:
      if (space.field_bits < 1 || space.field_bits > 6) {
        throw std::invalid_argument("CAYLEY_Z2K needs field bits in [1, 6]");
      }
      field_.emplace(space.field_bits, space.modulus);
      vertex_count_ = static_cast<int>(field_->order());
      size_ = pow2(vertex_count_ - 1);
      generators_ = translation_generators(space.field_bits);
      break;
    case Family::circulant:
      if (space.vertices < 1 || space.vertices > kMaxVertices) {
        throw std::invalid_argument("CIRCULANT needs m in [1, 64]");
      }
      vertex_count_ = space.vertices;
      size_ = pow2(vertex_count_ / 2);
      generators_ = rotation_generators(vertex_count_);
      break;
    case Family::all_graphs:
      if (space.vertices < 1 || space.vertices > 8) throw std::invalid_argument("ALL_GRAPHS needs m in [1, 8]");
      if (space.vertices == 8 && !space.limits.allow_large) {
        throw std::invalid_argument("ALL_GRAPHS on 8 vertices requires allow_large");
      }
      vertex_count_ = space.vertices;
      pairs_ = all_pairs(vertex_count_);
      size_ = pow2(static_cast<int>(pairs_.size()));
      break;
  }
}

std::vector<std::uint32_t> CandidateStream::connection(std::uint64_t index) const {
  std::vector<std::uint32_t> out;
  switch (space_.family) {
    case Family::cayley_z2k:
      for (int i = 0; i + 1 < vertex_count_; ++i) {
        if ((index >> i) & 1u) out.push_back(static_cast<std::uint32_t>(i + 1));
      }
      break;
    case Family::circulant:
      for (int s = 1; s <= vertex_count_ / 2; ++s) {
        if ((index >> (s - 1)) & 1u) {
          out.push_back(static_cast<std::uint32_t>(s));
          if (s != vertex_count_ - s) out.push_back(static_cast<std::uint32_t>(vertex_count_ - s));
        }
      }
      std::ranges::sort(out);
      break;
    case Family::all_graphs:
      break;
  }
  return out;
}

Graph CandidateStream::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("candidate index out of range");
  switch (space_.family) {
    case Family::cayley_z2k: {
      std::vector<FieldElement> conn;
      for (std::uint32_t mask : connection(index)) conn.push_back({mask});
      return cayley_graph(*field_, conn);
    }
    case Family::circulant: {
      const auto residues = connection(index);
      const std::vector<int> conn(residues.begin(), residues.end());
      return circulant_graph(vertex_count_, conn);
    }
    case Family::all_graphs: {
      Graph g(vertex_count_);
      for (std::size_t j = 0; j < pairs_.size(); ++j) {
        if ((index >> j) & 1u) g.add_edge(pairs_[j].u, pairs_[j].v);
      }
      return g;
    }
  }
  return Graph();
}

CandidateStream enumerate_candidates(const SearchSpace& space) { return CandidateStream(space); }

SearchReport run_search(const SearchSpace& space, int jobs) {
  const CandidateStream stream(space);
  SearchReport report;
  report.space = space;
  report.candidates_total = stream.size();
  const auto indices = selected_indices(space.limits, stream.size());
  if (jobs <= 1) {
    search_serial(stream, indices, space, report);
  } else {
    search_parallel(stream, indices, space, jobs, report);
  }
  report.exhausted = report.candidates_examined == report.candidates_total;
  return report;
}

nlohmann::json report_json(const SearchReport& report) {
  using nlohmann::json;
  const auto& s = report.space;
  json space = {{"family", std::string(to_string(s.family))}, {"n", s.n}};
  if (s.family == Family::cayley_z2k) {
    space["field_bits"] = s.field_bits;
    space["modulus"] = s.modulus;
  } else {
    space["vertices"] = s.vertices;
  }
  if (s.limits.max_candidates) space["max_candidates"] = *s.limits.max_candidates;
  if (s.limits.time_budget_seconds) space["time_budget_seconds"] = *s.limits.time_budget_seconds;
  if (s.limits.sample) {
    space["sample"] = *s.limits.sample;
    space["seed"] = s.limits.seed;
  }
  json hits = json::array();
  for (const auto& hit : report.hits) {
    hits.push_back({{"index", hit.index},
                    {"graph6", hit.graph6},
                    {"connection", hit.connection},
                    {"certificate", certificate_to_json(hit.certificate)}});
  }
  return {{"space", std::move(space)},
          {"candidates_total", report.candidates_total},
          {"candidates_examined", report.candidates_examined},
          {"exhausted", report.exhausted},
          {"hits", std::move(hits)}};
}

std::string hits_graph6(const SearchReport& report) {
  std::string out;
  for (const auto& hit : report.hits) {
    out += hit.graph6;
    out += '\n';
  }
  return out;
}

}  // namespace isat
