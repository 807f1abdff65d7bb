#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sixv/lattice.hpp"
#include "sixv/weights.hpp"
#include "test_support.hpp"

using namespace sixv;
using namespace sixv::testing;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("enumeration counts are the ASM numbers") {
  const long want[] = {1, 2, 7, 42, 429};
  for (int n = 1; n <= 5; ++n) {
    auto configs = enumerate_dwbc(n);
    CHECK(configs.size() == static_cast<size_t>(want[n - 1]));
    for (const Config& c : configs) CHECK(c.valid());
    // exactly once: all distinct
    for (size_t i = 0; i + 1 < configs.size(); ++i) CHECK(!(configs[i] == configs[i + 1]));
  }
  CHECK_THROWS_AS(enumerate_dwbc(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_dwbc(7), std::out_of_range);
}

TEST_CASE("n=1: the single forced type-5 vertex") {
  auto cs = enumerate_dwbc(1);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].vertex_type(0, 0) == 5);
  VertexCounts vc = vertex_counts(cs[0]);
  CHECK(vc.n5 == 1);
  CHECK(vc.total() == 1);
  ASMatrix m = asm_from_config(cs[0]);
  CHECK(m.at(0, 0) == 1);
}

TEST_CASE("ground state structure and weights") {
  Config g2 = ground_state(2);
  VertexCounts vc = vertex_counts(g2);
  CHECK(vc.n3 == 1);
  CHECK(vc.n4 == 1);
  CHECK(vc.n5 == 2);
  CHECK(vc.n1 + vc.n2 + vc.n6 == 0);
  ASMatrix m = asm_from_config(g2);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(0, 1) == 0);

  FerroParams ref = FerroParams::ref();
  ABCWeights w = ferro_weights(ref);
  check_wp_exact(config_weight(g2, w.a, w.b, w.c), ratio(441, 512), "gs weight n=2");
  // w(gs) = b^{n^2} (c/b)^n
  for (int n = 1; n <= 5; ++n) {
    ExtReal want = pow(w.b, static_cast<long>(n) * n) * pow(w.c / w.b, n);
    CHECK(rel_diff(config_weight(ground_state(n), w.a, w.b, w.c), want) < er("1e-50"));
  }
}

TEST_CASE("n=2 partition anchors") {
  FerroParams ref = FerroParams::ref();
  ABCWeights w = ferro_weights(ref);
  auto cs = enumerate_dwbc(2);
  REQUIRE(cs.size() == 2);
  std::multiset<std::string> weights;
  for (const Config& c : cs) weights.insert(config_weight(c, w.a, w.b, w.c).to_string(20));
  CHECK(weights.count(ratio(441, 512).to_string(20)) == 1);  // ground state b^2 c^2
  CHECK(weights.count(ratio(36, 512).to_string(20)) == 1);   // anti-diagonal a^2 c^2
  check_wp_exact(brute_force_partition(2, w.a, w.b, w.c), ratio(477, 512), "Z_2");
  check_wp_exact(brute_force_partition(1, w.a, w.b, w.c), ratio(3, 4), "Z_1");
  check_wp_exact(brute_force_partition(3, er("1"), er("1"), er("1")), er("7"), "unit-weight count");
  check_wp_exact(gibbs_probability(ground_state(2), w.a, w.b, w.c), ratio(441, 477), "gs Gibbs weight");
}

TEST_CASE("n=3 vertex-count multiset") {
  auto cs = enumerate_dwbc(3);
  std::multiset<std::array<long, 6>> got;
  for (const Config& c : cs) {
    VertexCounts v = vertex_counts(c);
    got.insert({v.n1, v.n2, v.n3, v.n4, v.n5, v.n6});
  }
  std::multiset<std::array<long, 6>> want{{3, 3, 0, 0, 3, 0}, {2, 2, 1, 1, 3, 0}, {2, 2, 1, 1, 3, 0},
                                          {1, 1, 1, 1, 4, 1}, {1, 1, 2, 2, 3, 0}, {1, 1, 2, 2, 3, 0},
                                          {0, 0, 3, 3, 3, 0}};
  CHECK(got == want);
}

TEST_CASE("conservation laws for every configuration, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Config& c : enumerate_dwbc(n)) {
      VertexCounts vc = vertex_counts(c);
      CHECK(vc.n1 == vc.n2);
      CHECK(vc.n3 == vc.n4);
      CHECK(vc.n5 - vc.n6 == n);
      CHECK(vc.total() == static_cast<long>(n) * n);
      ConservationReport r = check_conservation(c);
      INFO(r.detail);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("height function properties, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    auto cs = enumerate_dwbc(n);
    HeightGrid first = height_function(cs[0]);
    for (const Config& c : cs) {
      HeightGrid g = height_function(c);
      // neighbors differ by exactly 1
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          if (j < n) CHECK(std::abs(g.at(i, j + 1) - g.at(i, j)) == 1);
          if (i < n) CHECK(std::abs(g.at(i + 1, j) - g.at(i, j)) == 1);
        }
      // boundary profile is configuration-independent
      int bmin = g.at(0, 0), bmax = g.at(0, 0);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          if (i == 0 || j == 0 || i == n || j == n) {
            CHECK(g.at(i, j) == first.at(i, j));
            bmin = std::min(bmin, g.at(i, j));
            bmax = std::max(bmax, g.at(i, j));
          }
        }
      CHECK(bmax - bmin == n);
    }
  }
}

TEST_CASE("ASM images: invariants and the 7 distinct 3x3 matrices") {
  for (int n = 1; n <= 4; ++n) {
    for (const Config& c : enumerate_dwbc(n)) {
      ASMatrix m = asm_from_config(c);  // throws if the two constructions disagree
      for (int i = 0; i < n; ++i) {
        int rs = 0, cs = 0, rprev = 0, cprev = 0;
        for (int j = 0; j < n; ++j) {
          rs += m.at(i, j);
          cs += m.at(j, i);
          if (m.at(i, j) != 0) {
            CHECK(m.at(i, j) != rprev);  // alternation along the row
            rprev = m.at(i, j);
          }
          if (m.at(j, i) != 0) {
            CHECK(m.at(j, i) != cprev);
            cprev = m.at(j, i);
          }
        }
        CHECK(rs == 1);
        CHECK(cs == 1);
      }
    }
  }
  std::set<std::string> images;
  for (const Config& c : enumerate_dwbc(3)) images.insert(asm_to_json(asm_from_config(c)));
  CHECK(images.size() == 7);
  CHECK(images.count("[[0,1,0],[1,-1,1],[0,1,0]]") == 1);
  CHECK(images.count("[[1,0,0],[0,1,0],[0,0,1]]") == 1);
}

TEST_CASE("gibbs probabilities normalize") {
  FerroParams ref = FerroParams::ref();
  ABCWeights w = ferro_weights(ref);
  ExtReal total = ExtReal::from_long(0);
  for (const Config& c : enumerate_dwbc(3)) total += gibbs_probability(c, w.a, w.b, w.c);
  CHECK(abs(total - 1) < er("1e-50"));
  check_wp_exact(gibbs_probability(enumerate_dwbc(1)[0], w.a, w.b, w.c), er("1"), "n=1 unique");
}

TEST_CASE("config JSON round trip") {
  for (const Config& c : enumerate_dwbc(3)) {
    Config back = config_from_json(config_to_json(c));
    CHECK(back == c);
  }
  // invalid payloads are rejected
  CHECK_THROWS(config_from_json("{\"n\":2,\"h_edges\":[[true]],\"v_edges\":[]}"));
  Config g = ground_state(2);
  std::string tampered = config_to_json(g);
  tampered.replace(tampered.find("true"), 4, "false");  // breaks DWBC/ice
  CHECK_THROWS_AS(config_from_json(tampered), std::domain_error);
}

TEST_SUITE_END();
