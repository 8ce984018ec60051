#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "isat/graph_io.hpp"
#include "isat/saturation.hpp"
#include "oracles.hpp"

using isat::Graph;
using isat::SaturationStatus;
using isat::VertexPair;
using isat::VerifyOptions;

namespace {

VerifyOptions affine_options() {
  const auto& f = fixtures::gf16();
  VerifyOptions options;
  options.generators = isat::affine_group(f, f.nonzero_cubes());
  return options;
}

}  // namespace

TEST_CASE("freeness") {
  const Graph g = fixtures::clebsch();
  CHECK(isat::is_path_free(g, 6).free);
  const auto p5 = isat::is_path_free(g, 5);
  CHECK_FALSE(p5.free);
  REQUIRE(p5.witness.has_value());
  CHECK(isat::is_induced_path(g, p5.witness->vertices));
  CHECK(isat::is_path_free(Graph::complete(5), 3).free);
  CHECK_THROWS_AS(isat::is_path_free(g, 1), std::invalid_argument);
}

TEST_CASE("the Cayley graph is P6-induced-saturated") {
  const Graph g = fixtures::clebsch();
  const auto full = isat::verify_induced_saturated(g, 6);
  CHECK(full.verdict.status == SaturationStatus::saturated);
  CHECK(full.stats.additions_checked == 80);
  CHECK(full.stats.removals_checked == 40);
  REQUIRE(full.certificate.has_value());
  const auto& cert = *full.certificate;
  CHECK(cert.entries.size() == 120);
  CHECK_FALSE(cert.orbit_reduced);
  CHECK(cert.verified_pairs == 120);
  CHECK(cert.graph == fixtures::kClebschGraph6);
  CHECK(cert.warnings.empty());
  CHECK(std::ranges::is_sorted(cert.entries, {}, &isat::CertificateEntry::pair));
  for (const auto& entry : cert.entries) {
    // The pair plus f(pair) is the whole path; f(pair) misses the pair.
    std::set<int> rest(entry.path.begin(), entry.path.end());
    CHECK(rest.size() == 6);
    CHECK(rest.erase(entry.pair.u) == 1);
    CHECK(rest.erase(entry.pair.v) == 1);
    CHECK(rest.size() == 4);
    CHECK(isat::is_induced_path(isat::toggle_edge(g, entry.pair), entry.path));
    CHECK(entry.was_edge == g.has_edge(entry.pair));
  }
  CHECK(isat::check_certificate(cert, g));

  const auto reduced = isat::verify_induced_saturated(g, 6, affine_options());
  CHECK(reduced.verdict.status == SaturationStatus::saturated);
  REQUIRE(reduced.certificate.has_value());
  CHECK(reduced.certificate->orbit_reduced);
  CHECK(reduced.certificate->entries.size() == 3);
  CHECK(reduced.certificate->verified_pairs == 3);
  std::size_t covered = 0;
  for (const auto& e : reduced.certificate->entries) covered += e.orbit_size;
  CHECK(covered == 120);
  CHECK(isat::check_certificate(*reduced.certificate, g));
}

TEST_CASE("trivial saturated graphs") {
  for (int m = 2; m <= 6; ++m) {
    const auto empty = isat::verify_induced_saturated(Graph::empty(m), 2);
    CHECK(empty.verdict.status == SaturationStatus::saturated);
    CHECK(empty.stats.removals_checked == 0);
    CHECK(isat::check_certificate(*empty.certificate, Graph::empty(m)));
  }
  for (int m = 3; m <= 6; ++m) {
    const auto complete = isat::verify_induced_saturated(Graph::complete(m), 3);
    CHECK(complete.verdict.status == SaturationStatus::saturated);
    CHECK(complete.stats.additions_checked == 0);
    CHECK(isat::check_certificate(*complete.certificate, Graph::complete(m)));
  }
}

TEST_CASE("failure verdicts") {
  const auto p6 = isat::verify_induced_saturated(Graph::path(6), 6);
  CHECK(p6.verdict.status == SaturationStatus::contains_induced_path);
  REQUIRE(p6.verdict.offending_witness.has_value());
  CHECK_FALSE(p6.verdict.offending_pair.has_value());
  CHECK_FALSE(p6.certificate.has_value());

  // C6 has no induced P6 and no chord creates one; {0, 2} is the least
  // non-edge.
  const auto c6 = isat::verify_induced_saturated(Graph::cycle(6), 6);
  CHECK(c6.verdict.status == SaturationStatus::addition_fails);
  REQUIRE(c6.verdict.offending_pair.has_value());
  CHECK(*c6.verdict.offending_pair == VertexPair{0, 2});
  CHECK_FALSE(c6.verdict.offending_witness.has_value());
  CHECK(c6.stats.additions_checked == 1);

  // K4 for P4: no additions to make, and removing an edge leaves K4 - e.
  const auto k4 = isat::verify_induced_saturated(Graph::complete(4), 4);
  CHECK(k4.verdict.status == SaturationStatus::removal_fails);
  CHECK(*k4.verdict.offending_pair == VertexPair{0, 1});

  CHECK_THROWS_AS(isat::verify_induced_saturated(Graph::path(3), 1), std::invalid_argument);
  VerifyOptions bad;
  bad.generators = std::vector<isat::Permutation>{{1, 2, 0}};
  CHECK_THROWS_AS(isat::verify_induced_saturated(Graph::path(3), 3, bad), std::invalid_argument);
}

TEST_CASE("path length larger than the graph") {
  const auto single = isat::verify_induced_saturated(Graph::empty(1), 6);
  CHECK(single.verdict.status == SaturationStatus::saturated);
  REQUIRE(single.certificate.has_value());
  CHECK(single.certificate->warnings.size() == 1);
  CHECK(single.certificate->entries.empty());

  CHECK(isat::verify_induced_saturated(Graph::complete(3), 6).verdict.status ==
        SaturationStatus::removal_fails);
}

TEST_CASE("witness function") {
  const Graph g = fixtures::clebsch();
  const auto f = isat::witness_function(g, 6);
  CHECK(f.size() == 120);
  for (const auto& [pair, path] : f) {
    CHECK(isat::is_induced_path(isat::toggle_edge(g, pair), path.vertices));
  }
  // The fixed witnesses exhibited for {0,1} and {0,7} are valid choices for
  // f too, even if the search picks others.
  CHECK(isat::is_induced_path(isat::toggle_edge(g, {0, 1}), std::vector<int>{14, 1, 9, 8, 0, 12}));
  CHECK(isat::is_induced_path(isat::toggle_edge(g, {0, 7}), std::vector<int>{7, 0, 10, 2, 14, 4}));

  CHECK_THROWS_AS(isat::witness_function(Graph::path(6), 6), isat::WitnessError);
  try {
    isat::witness_function(Graph::cycle(6), 6);
    FAIL("expected WitnessError");
  } catch (const isat::WitnessError& e) {
    REQUIRE(e.pair().has_value());
    CHECK(*e.pair() == VertexPair{0, 2});
  }
}

TEST_CASE("certificate checking") {
  const Graph g = fixtures::clebsch();
  const auto cert = *isat::verify_induced_saturated(g, 6).certificate;
  CHECK(isat::check_certificate(cert, g));

  auto corrupted = cert;
  corrupted.entries[5].path[2] = (corrupted.entries[5].path[2] + 1) % 16;
  CHECK_FALSE(isat::check_certificate(corrupted, g));

  auto missing = cert;
  missing.entries.pop_back();
  CHECK_FALSE(isat::check_certificate(missing, g));

  auto wrong_n = cert;
  wrong_n.n = 5;
  CHECK_FALSE(isat::check_certificate(wrong_n, g));

  CHECK_THROWS_AS(isat::check_certificate(cert, Graph::cycle(6)), isat::CertificateMismatch);

  auto reduced = *isat::verify_induced_saturated(g, 6, affine_options()).certificate;
  auto bad_size = reduced;
  bad_size.entries[0].orbit_size = 39;
  CHECK_FALSE(isat::check_certificate(bad_size, g));
  auto bad_gen = reduced;
  std::swap(bad_gen.generators[3][0], bad_gen.generators[3][1]);
  CHECK_FALSE(isat::check_certificate(bad_gen, g));
  auto bad_path = reduced;
  bad_path.entries[1].path[0] = bad_path.entries[1].path[5];
  CHECK_FALSE(isat::check_certificate(bad_path, g));
}

TEST_CASE("certificate json round trip") {
  const Graph g = fixtures::clebsch();
  for (const auto& options : {VerifyOptions{}, affine_options()}) {
    const auto cert = *isat::verify_induced_saturated(g, 6, options).certificate;
    const auto doc = isat::certificate_to_json(cert);
    CHECK(doc.contains("entries"));
    CHECK(doc["entries"][0].contains("was_edge"));
    const auto back = isat::certificate_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(isat::certificate_to_json(back) == doc);
    CHECK(isat::check_certificate(back, g));
  }
  CHECK_THROWS_AS(isat::certificate_from_json(nlohmann::json::object()), isat::CertificateFormatError);
  CHECK_THROWS_AS(isat::certificate_from_json(nlohmann::json::parse(R"({"graph":"A?","n":2,"orbit_reduced":false,"entries":[{"pair":[0],"was_edge":false,"path":[0,1]}]})")),
                  isat::CertificateFormatError);
}

TEST_CASE("orbit-reduced and full verification agree") {
  const Graph g = fixtures::clebsch();
  for (int n = 4; n <= 7; ++n) {
    const auto full = isat::verify_induced_saturated(g, n);
    const auto reduced = isat::verify_induced_saturated(g, n, affine_options());
    CHECK(full.verdict.status == reduced.verdict.status);
    CHECK(full.verdict.offending_pair == reduced.verdict.offending_pair);
  }

  std::mt19937_64 rng(oracle::test_seed());
  std::uniform_int_distribution<int> size(3, 20);
  for (int sample = 0; sample < 50; ++sample) {
    const int m = size(rng);
    std::vector<int> conn;
    for (int s = 1; s <= m / 2; ++s) {
      if (rng() & 1) {
        conn.push_back(s);
        if (s != m - s) conn.push_back(m - s);
      }
    }
    const Graph c = isat::circulant_graph(m, conn);
    VerifyOptions rotations;
    rotations.generators = isat::rotation_generators(m);
    for (int n = 3; n <= 6; ++n) {
      const auto full = isat::verify_induced_saturated(c, n);
      const auto reduced = isat::verify_induced_saturated(c, n, rotations);
      REQUIRE(full.verdict.status == reduced.verdict.status);
      REQUIRE(full.verdict.offending_pair == reduced.verdict.offending_pair);
      if (reduced.certificate) REQUIRE(isat::check_certificate(*reduced.certificate, c));
    }
  }
}

TEST_CASE("orbit reduction extends to every member of a non-edge orbit") {
  const Graph g = fixtures::clebsch();
  const auto& f = fixtures::gf16();
  const auto group = isat::affine_group(f, f.nonzero_cubes());
  const auto non_edges = g.non_edges();
  for (const auto& orbit : isat::pair_orbits(g, group, non_edges)) {
    for (const auto& member : orbit.members) {
      CHECK(isat::toggled_pair_witness(g, member, 6).has_value());
    }
  }
}

TEST_CASE("parallel and serial verification produce identical results") {
  std::mt19937_64 rng(oracle::test_seed());
  const std::vector<Graph> graphs{fixtures::clebsch(), Graph::cycle(6), Graph::path(6),
                                  oracle::random_graph(rng, 12, 0.3), oracle::random_graph(rng, 14, 0.5)};
  for (const auto& g : graphs) {
    for (int n = 3; n <= 6; ++n) {
      VerifyOptions parallel;
      parallel.jobs = 4;
      const auto a = isat::verify_induced_saturated(g, n);
      const auto b = isat::verify_induced_saturated(g, n, parallel);
      CHECK(a.verdict.status == b.verdict.status);
      CHECK(a.verdict.offending_pair == b.verdict.offending_pair);
      CHECK(a.stats.additions_checked == b.stats.additions_checked);
      CHECK(a.stats.removals_checked == b.stats.removals_checked);
      CHECK(a.certificate.has_value() == b.certificate.has_value());
      if (a.certificate) {
        CHECK(isat::certificate_to_json(*a.certificate) == isat::certificate_to_json(*b.certificate));
      }
    }
  }
}

TEST_CASE("sub-paths of induced paths are induced") {
  std::mt19937_64 rng(oracle::test_seed());
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 10, 0.3);
    for (int n = 2; n <= 7; ++n) {
      if (isat::is_path_free(g, n).free) continue;
      for (int shorter = 2; shorter <= n; ++shorter) REQUIRE_FALSE(isat::is_path_free(g, shorter).free);
    }
  }
}
