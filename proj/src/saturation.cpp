#include "isat/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>

#include <omp.h>

#include "isat/graph_io.hpp"

namespace isat {
namespace {

constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();

struct PairBatch {
  std::vector<VertexPair> pairs;
  std::vector<std::size_t> orbit_sizes;
};

// Pairs to search: all of them, or one representative per orbit.
PairBatch batch_for(const Graph& g, std::vector<VertexPair> pairs, const VerifyOptions& options) {
  PairBatch batch;
  if (!options.generators) {
    batch.orbit_sizes.assign(pairs.size(), 1);
    batch.pairs = std::move(pairs);
    return batch;
  }
  for (const auto& orbit : pair_orbits(g, *options.generators, pairs)) {
    batch.pairs.push_back(orbit.representative);
    batch.orbit_sizes.push_back(orbit.members.size());
  }
  return batch;
}

struct BatchOutcome {
  std::vector<std::optional<PathWitness>> witnesses;
  std::size_t first_failure = kNoFailure;
};

BatchOutcome check_batch_serial(const Graph& g, const std::vector<VertexPair>& pairs, int n) {
  BatchOutcome out;
  out.witnesses.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.witnesses[i] = toggled_pair_witness(g, pairs[i], n);
    if (!out.witnesses[i]) {
      out.first_failure = i;
      break;
    }
  }
  return out;
}

// Pairs above the least known failure are skipped; pairs below it always
// run, so the reported failure is the same as in the serial loop.
BatchOutcome check_batch_parallel(const Graph& g, const std::vector<VertexPair>& pairs, int n, int jobs) {
  BatchOutcome out;
  out.witnesses.resize(pairs.size());
  std::atomic<std::size_t> first_failure{kNoFailure};
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx > first_failure.load(std::memory_order_relaxed)) continue;
    out.witnesses[idx] = toggled_pair_witness(g, pairs[idx], n);
    if (!out.witnesses[idx]) {
      std::size_t seen = first_failure.load();
      while (idx < seen && !first_failure.compare_exchange_weak(seen, idx)) {
      }
    }
  }
  out.first_failure = first_failure.load();
  return out;
}

BatchOutcome check_batch(const Graph& g, const std::vector<VertexPair>& pairs, int n, int jobs) {
  return jobs <= 1 ? check_batch_serial(g, pairs, n) : check_batch_parallel(g, pairs, n, jobs);
}

// Plain extension of distinct-vertex sequences, checking every new vertex
// against the whole prefix. Kept apart from the bitset search on purpose.
bool has_induced_path_plain(const Graph& g, std::vector<int>& seq, int n) {
  if (static_cast<int>(seq.size()) == n) return true;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (std::ranges::find(seq, w) != seq.end()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < seq.size() && ok; ++i) {
      ok = g.has_edge(seq[i], w) == (i + 1 == seq.size());
    }
    if (!ok) continue;
    seq.push_back(w);
    if (has_induced_path_plain(g, seq, n)) return true;
    seq.pop_back();
  }
  return false;
}

bool entry_is_valid(const Graph& g, int n, VertexPair pair, std::span<const int> path) {
  if (static_cast<int>(path.size()) != n) return false;
  if (std::ranges::find(path, pair.u) == path.end() || std::ranges::find(path, pair.v) == path.end()) {
    return false;
  }
  return is_induced_path(toggle_edge(g, pair), path);
}

}  // namespace

std::string_view to_string(SaturationStatus status) {
  switch (status) {
    case SaturationStatus::saturated:
      return "SATURATED";
    case SaturationStatus::contains_induced_path:
      return "CONTAINS_INDUCED_PATH";
    case SaturationStatus::removal_fails:
      return "REMOVAL_FAILS";
    case SaturationStatus::addition_fails:
      return "ADDITION_FAILS";
  }
  return "UNKNOWN";
}

PathFreeness is_path_free(const Graph& g, int n) {
  auto witness = find_induced_path(g, n);
  return {!witness.has_value(), std::move(witness)};
}

std::optional<PathWitness> toggled_pair_witness(const Graph& g, VertexPair e, int n) {
  const Graph toggled = toggle_edge(g, e);
  if (toggled.has_edge(e)) return find_induced_path_through(toggled, e, n);
  return find_induced_path_covering(toggled, e, n);
}

VerificationResult verify_induced_saturated(const Graph& g, int n, const VerifyOptions& options) {
  if (n < 2) throw std::invalid_argument("path length must be at least 2");
  if (options.generators) {
    for (const auto& gen : *options.generators) {
      if (!is_automorphism(g, gen)) throw std::invalid_argument("generator is not an automorphism of the graph");
    }
  }

  VerificationResult result;
  if (auto freeness = is_path_free(g, n); !freeness.free) {
    result.verdict = {SaturationStatus::contains_induced_path, std::move(freeness.witness), std::nullopt};
    return result;
  }

  const PairBatch additions = batch_for(g, g.non_edges(), options);
  const BatchOutcome added = check_batch(g, additions.pairs, n, options.jobs);
  if (added.first_failure != kNoFailure) {
    result.stats.additions_checked = added.first_failure + 1;
    result.verdict = {SaturationStatus::addition_fails, std::nullopt, additions.pairs[added.first_failure]};
    return result;
  }
  result.stats.additions_checked = additions.pairs.size();

  const PairBatch removals = batch_for(g, g.edges(), options);
  const BatchOutcome removed = check_batch(g, removals.pairs, n, options.jobs);
  if (removed.first_failure != kNoFailure) {
    result.stats.removals_checked = removed.first_failure + 1;
    result.verdict = {SaturationStatus::removal_fails, std::nullopt, removals.pairs[removed.first_failure]};
    return result;
  }
  result.stats.removals_checked = removals.pairs.size();

  SaturationCertificate cert;
  cert.n = n;
  cert.graph = encode_graph6(g);
  cert.orbit_reduced = options.generators.has_value();
  if (cert.orbit_reduced) cert.generators = *options.generators;
  cert.verified_pairs = additions.pairs.size() + removals.pairs.size();
  if (n > g.vertex_count()) {
    cert.warnings.push_back("path length " + std::to_string(n) + " exceeds vertex count " +
                            std::to_string(g.vertex_count()) + "; conditions hold only vacuously");
  }
  auto collect = [&](const PairBatch& batch, const BatchOutcome& outcome, bool was_edge) {
    for (std::size_t i = 0; i < batch.pairs.size(); ++i) {
      cert.entries.push_back({batch.pairs[i], was_edge, outcome.witnesses[i]->vertices, batch.orbit_sizes[i]});
    }
  };
  collect(additions, added, false);
  collect(removals, removed, true);
  std::ranges::sort(cert.entries, {}, &CertificateEntry::pair);

  result.verdict.status = SaturationStatus::saturated;
  result.certificate = std::move(cert);
  return result;
}

std::map<VertexPair, PathWitness> witness_function(const Graph& g, int n) {
  if (!is_path_free(g, n).free) {
    throw WitnessError("graph contains an induced P" + std::to_string(n), std::nullopt);
  }
  std::map<VertexPair, PathWitness> f;
  for (const VertexPair& e : all_pairs(g.vertex_count())) {
    auto witness = toggled_pair_witness(g, e, n);
    if (!witness) {
      throw WitnessError("no witness for pair {" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}", e);
    }
    f.emplace(e, std::move(*witness));
  }
  return f;
}

bool check_certificate(const SaturationCertificate& cert, const Graph& g) {
  if (cert.graph != encode_graph6(g)) throw CertificateMismatch("certificate was issued for a different graph");
  if (cert.n < 2) return false;

  std::vector<int> seq;
  if (has_induced_path_plain(g, seq, cert.n)) return false;

  if (cert.orbit_reduced) {
    for (const auto& gen : cert.generators) {
      try {
        if (!is_automorphism(g, gen)) return false;
      } catch (const std::invalid_argument&) {
        return false;
      }
    }
  }

  std::set<VertexPair> covered;
  for (const auto& entry : cert.entries) {
    const VertexPair e = entry.pair;
    if (e.u < 0 || e.u >= e.v || e.v >= g.vertex_count()) return false;
    if (entry.was_edge != g.has_edge(e)) return false;
    if (!entry_is_valid(g, cert.n, e, entry.path)) return false;

    if (!cert.orbit_reduced) {
      if (entry.orbit_size != 1 || !covered.insert(e).second) return false;
      continue;
    }
    // An automorphism carries a witness for e to a witness for its image, so
    // every pair reached from a representative gets a concrete path to check.
    std::vector<std::pair<VertexPair, std::vector<int>>> frontier{{e, entry.path}};
    std::set<VertexPair> reached{e};
    while (!frontier.empty()) {
      auto [pair, path] = std::move(frontier.back());
      frontier.pop_back();
      for (const auto& gen : cert.generators) {
        const VertexPair next = image(gen, pair);
        if (!reached.insert(next).second) continue;
        std::vector<int> mapped(path.size());
        std::ranges::transform(path, mapped.begin(), [&](int v) { return gen[static_cast<std::size_t>(v)]; });
        if (!entry_is_valid(g, cert.n, next, mapped)) return false;
        frontier.emplace_back(next, std::move(mapped));
      }
    }
    if (reached.size() != entry.orbit_size) return false;
    for (const auto& pair : reached) {
      if (!covered.insert(pair).second) return false;
    }
  }
  return covered.size() == all_pairs(g.vertex_count()).size();
}

}  // namespace isat
