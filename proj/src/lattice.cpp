#include "sixv/lattice.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace sixv {

using nlohmann::json;

Config::Config(int n) : n_(n) {
  if (n < 1) throw std::out_of_range("Config: n must be >= 1");
  h_.assign(static_cast<size_t>(n + 1) * n, 0);
  v_.assign(static_cast<size_t>(n) * (n + 1), 0);
}

int Config::vertex_type(int i, int j) const {
  const bool w = west_east(i, j), e = east_east(i, j);
  const bool s = south_north(i, j), nn = north_north(i, j);
  if (w && e && s && nn) return 1;
  if (!w && !e && !s && !nn) return 2;
  if (w && e && !s && !nn) return 3;
  if (!w && !e && s && nn) return 4;
  if (!w && e && s && !nn) return 5;
  if (w && !e && !s && nn) return 6;
  throw std::logic_error("Config: ice rule violated at vertex (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

bool Config::valid() const {
  for (int i = 0; i < n_; ++i) {
    if (h_east(0, i) || !h_east(n_, i)) return false;
  }
  for (int j = 0; j < n_; ++j) {
    if (v_north(j, 0) || !v_north(j, n_)) return false;
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const int in = (west_east(i, j) ? 1 : 0) + (south_north(i, j) ? 1 : 0) + (east_east(i, j) ? 0 : 1) +
                     (north_north(i, j) ? 0 : 1);
      if (in != 2) return false;
    }
  return true;
}

std::vector<Config> enumerate_dwbc(int n) {
  if (n < 1 || n > 6) throw std::out_of_range("enumerate_dwbc: n must lie in 1..6");
  std::vector<Config> out;
  Config work(n);
  for (int i = 0; i < n; ++i) {
    work.set_h(0, i, false);
    work.set_h(n, i, true);
  }
  for (int j = 0; j < n; ++j) {
    work.set_v(j, 0, false);
    work.set_v(j, n, true);
  }

  // Row-major scan. At vertex (i,j) the west edge and north edge are already
  // fixed; the ice rule leaves e - s = w - nn for the east/south pair, so the
  // only branch points are w == nn vertices ((F,F) tried before (T,T)).
  auto place = [&](auto&& self, int i, int j) -> void {
    if (j == n) {
      if (i + 1 == n) {
        out.push_back(work);
      } else {
        self(self, i + 1, 0);
      }
      return;
    }
    const bool w = work.west_east(i, j);
    const bool nn = work.north_north(i, j);
    const bool east_forced = (j == n - 1);   // right stub: east
    const bool south_forced = (i == n - 1);  // bottom stub: north
    auto try_pair = [&](bool e, bool s) {
      if (east_forced && !e) return;
      if (south_forced && !s) return;
      if (j < n - 1) work.set_h(j + 1, i, e);
      work.set_v(j, i + 1, s);
      self(self, i, j + 1);
    };
    if (w && !nn) {
      try_pair(true, false);
    } else if (!w && nn) {
      try_pair(false, true);
    } else {
      try_pair(false, false);
      try_pair(true, true);
    }
  };
  place(place, 0, 0);
  return out;
}

VertexCounts vertex_counts(const Config& c) {
  VertexCounts vc;
  for (int i = 0; i < c.n(); ++i)
    for (int j = 0; j < c.n(); ++j) {
      switch (c.vertex_type(i, j)) {
        case 1: ++vc.n1; break;
        case 2: ++vc.n2; break;
        case 3: ++vc.n3; break;
        case 4: ++vc.n4; break;
        case 5: ++vc.n5; break;
        case 6: ++vc.n6; break;
      }
    }
  return vc;
}

ExtReal config_weight(const Config& c, const ExtReal& a, const ExtReal& b, const ExtReal& cc) {
  if (a.sign() <= 0 || b.sign() <= 0 || cc.sign() <= 0)
    throw std::domain_error("config_weight: weights must be strictly positive");
  VertexCounts vc = vertex_counts(c);
  return pow(a, vc.n1 + vc.n2) * pow(b, vc.n3 + vc.n4) * pow(cc, vc.n5 + vc.n6);
}

ExtReal brute_force_partition(int n, const ExtReal& a, const ExtReal& b, const ExtReal& cc) {
  ExtReal z = ExtReal::from_long(0, a.precision());
  for (const Config& c : enumerate_dwbc(n)) z += config_weight(c, a, b, cc);
  return z;
}

ExtReal gibbs_probability(const Config& c, const ExtReal& a, const ExtReal& b, const ExtReal& cc) {
  return config_weight(c, a, b, cc) / brute_force_partition(c.n(), a, b, cc);
}

HeightGrid height_function(const Config& c) {
  const int n = c.n();
  HeightGrid g;
  g.n = n;
  g.h.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
  // anchor: bottom-left dual corner = 0; bottom row via bottom stubs
  for (int j = 0; j < n; ++j) g.at(n, j + 1) = g.at(n, j) + (c.v_north(j, n) ? -1 : 1);
  // climb: moving north across the horizontal edge at (x=j, row i) gives +1
  // for an east arrow, -1 for west
  for (int i = n; i-- > 0;)
    for (int j = 0; j <= n; ++j) g.at(i, j) = g.at(i + 1, j) + (c.h_east(j, i) ? 1 : -1);
  // path independence: east-west increments must match the vertical edges
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int inc = c.v_north(j, i) ? -1 : 1;
      if (g.at(i, j + 1) - g.at(i, j) != inc)
        throw std::logic_error("height_function: inconsistent increments (invalid configuration?)");
    }
  return g;
}

ASMatrix asm_from_config(const Config& c) {
  const int n = c.n();
  ASMatrix by_type;
  by_type.n = n;
  by_type.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int t = c.vertex_type(i, j);
      by_type.at(i, j) = (t == 5) ? 1 : (t == 6 ? -1 : 0);
    }
  HeightGrid g = height_function(c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // quarter sum, counterclockwise from the first quadrant: NE, NW, SW, SE
      const int q = g.at(i, j + 1) - g.at(i, j) + g.at(i + 1, j) - g.at(i + 1, j + 1);
      if (q % 2 != 0 || by_type.at(i, j) != q / 2)
        throw std::logic_error("asm_from_config: type map and height map disagree (convention error)");
    }
  return by_type;
}

ConservationReport check_conservation(const Config& c) {
  const int n = c.n();
  auto fail = [](std::string why) {
    ConservationReport r;
    r.ok = false;
    r.detail = std::move(why);
    return r;
  };
  VertexCounts vc = vertex_counts(c);
  if (vc.n1 != vc.n2) return fail("global N1 != N2");
  if (vc.n3 != vc.n4) return fail("global N3 != N4");
  if (vc.n5 - vc.n6 != n) return fail("global N5 - N6 != n");

  // per-line versions
  std::vector<long> d13(2 * n - 1, 0), d14(2 * n - 1, 0);  // lines i+j = const: N3 - N4
  std::vector<long> e11(2 * n - 1, 0), e12(2 * n - 1, 0);  // lines i-j = const: N1 - N2
  std::vector<long> row56(n, 0), col56(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int t = c.vertex_type(i, j);
      if (t == 3) ++d13[i + j];
      if (t == 4) ++d14[i + j];
      if (t == 1) ++e11[i - j + n - 1];
      if (t == 2) ++e12[i - j + n - 1];
      if (t == 5) { ++row56[i]; ++col56[j]; }
      if (t == 6) { --row56[i]; --col56[j]; }
    }
  for (int d = 0; d < 2 * n - 1; ++d) {
    if (d13[d] != d14[d]) return fail("per-line N3 != N4 on i+j = " + std::to_string(d));
    if (e11[d] != e12[d]) return fail("per-line N1 != N2 on i-j = " + std::to_string(d - n + 1));
  }
  for (int i = 0; i < n; ++i) {
    if (row56[i] != 1) return fail("per-row N5 - N6 != 1 in row " + std::to_string(i));
    if (col56[i] != 1) return fail("per-column N5 - N6 != 1 in column " + std::to_string(i));
  }
  return {};
}

Config ground_state(int n) {
  Config c(n);
  for (int x = 0; x <= n; ++x)
    for (int i = 0; i < n; ++i) c.set_h(x, i, x > i);
  for (int j = 0; j < n; ++j)
    for (int y = 0; y <= n; ++y) c.set_v(j, y, y > j);
  if (!c.valid()) throw std::logic_error("ground_state: construction violates ice rule/DWBC");
  return c;
}

std::string config_to_json(const Config& c) {
  const int n = c.n();
  json h = json::array(), v = json::array();
  for (int x = 0; x <= n; ++x) {
    json row = json::array();
    for (int i = 0; i < n; ++i) row.push_back(c.h_east(x, i));
    h.push_back(std::move(row));
  }
  for (int j = 0; j < n; ++j) {
    json col = json::array();
    for (int y = 0; y <= n; ++y) col.push_back(c.v_north(j, y));
    v.push_back(std::move(col));
  }
  json out{{"n", n}, {"h_edges", std::move(h)}, {"v_edges", std::move(v)}};
  return out.dump();
}

Config config_from_json(const std::string& text) {
  json in = json::parse(text);
  const int n = in.at("n").get<int>();
  Config c(n);
  const auto& h = in.at("h_edges");
  const auto& v = in.at("v_edges");
  if (h.size() != static_cast<size_t>(n + 1) || v.size() != static_cast<size_t>(n))
    throw std::domain_error("config_from_json: bad edge array shape");
  for (int x = 0; x <= n; ++x) {
    if (h[x].size() != static_cast<size_t>(n)) throw std::domain_error("config_from_json: bad h_edges row");
    for (int i = 0; i < n; ++i) c.set_h(x, i, h[x][i].get<bool>());
  }
  for (int j = 0; j < n; ++j) {
    if (v[j].size() != static_cast<size_t>(n + 1)) throw std::domain_error("config_from_json: bad v_edges row");
    for (int y = 0; y <= n; ++y) c.set_v(j, y, v[j][y].get<bool>());
  }
  if (!c.valid()) throw std::domain_error("config_from_json: configuration violates ice rule or DWBC");
  return c;
}

std::string asm_to_json(const ASMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

}  // namespace sixv
