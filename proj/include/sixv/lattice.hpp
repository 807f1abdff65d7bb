#ifndef SIXV_LATTICE_HPP
#define SIXV_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sixv/extreal.hpp"

namespace sixv {

/// An n x n six-vertex arrow configuration with domain wall boundary
/// conditions.
///
/// Grid conventions (fixed across the library):
///  - vertex (i,j): row i = 0..n-1 top to bottom, column j = 0..n-1 left to
///    right; "north" points toward row 0.
///  - h_edges, shape (n+1) x n: h_edges[x][i] is the horizontal edge at
///    horizontal position x (0 = left boundary stub, n = right boundary stub)
///    in vertex row i; true = arrow points east.
///  - v_edges, shape n x (n+1): v_edges[j][y] is the vertical edge in vertex
///    column j at vertical position y (0 = top boundary stub, n = bottom);
///    true = arrow points north.
///
/// DWBC: top/bottom vertical stubs point into the square (v[j][0] = false,
/// v[j][n] = true); left/right horizontal stubs point out (h[0][i] = false,
/// h[n][i] = true).
///
/// Vertex types by (west-east?, east-east?, south-north?, north-north?):
///   1:(T,T,T,T) 2:(F,F,F,F) weight a;  3:(T,T,F,F) 4:(F,F,T,T) weight b;
///   5:(F,T,T,F) 6:(T,F,F,T) weight c.
class Config {
 public:
  explicit Config(int n);

  int n() const { return n_; }

  bool h_east(int x, int i) const { return h_[static_cast<size_t>(x) * n_ + i] != 0; }
  bool v_north(int j, int y) const { return v_[static_cast<size_t>(j) * (n_ + 1) + y] != 0; }
  void set_h(int x, int i, bool east) { h_[static_cast<size_t>(x) * n_ + i] = east ? 1 : 0; }
  void set_v(int j, int y, bool north) { v_[static_cast<size_t>(j) * (n_ + 1) + y] = north ? 1 : 0; }

  // per-vertex edge views
  bool west_east(int i, int j) const { return h_east(j, i); }
  bool east_east(int i, int j) const { return h_east(j + 1, i); }
  bool north_north(int i, int j) const { return v_north(j, i); }
  bool south_north(int i, int j) const { return v_north(j, i + 1); }

  /// Vertex type 1..6 under the convention above; throws if the local edge
  /// pattern violates the ice rule.
  int vertex_type(int i, int j) const;

  /// Ice rule at every vertex plus DWBC on all boundary stubs.
  bool valid() const;

  bool operator==(const Config& o) const { return n_ == o.n_ && h_ == o.h_ && v_ == o.v_; }

 private:
  int n_;
  std::vector<uint8_t> h_, v_;
};

struct VertexCounts {
  long n1 = 0, n2 = 0, n3 = 0, n4 = 0, n5 = 0, n6 = 0;
  long total() const { return n1 + n2 + n3 + n4 + n5 + n6; }
};

/// Integer heights on the (n+1) x (n+1) dual grid. at(i,j): i = 0..n top to
/// bottom, j = 0..n left to right; anchored to 0 at the bottom-left corner.
struct HeightGrid {
  int n = 0;
  std::vector<int> h;
  int at(int i, int j) const { return h[static_cast<size_t>(i) * (n + 1) + j]; }
  int& at(int i, int j) { return h[static_cast<size_t>(i) * (n + 1) + j]; }
};

struct ASMatrix {
  int n = 0;
  std::vector<int> a;  // row-major, entries in {-1,0,1}
  int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  bool operator==(const ASMatrix& o) const { return n == o.n && a == o.a; }
};

struct ConservationReport {
  bool ok = true;
  std::string detail;  // names the first failing law when !ok
};

/// All DWBC ice configurations of size n (1 <= n <= 6), each exactly once,
/// in a deterministic order (row-major vertex scan, (east,south)=(F,F)
/// branch before (T,T)).
std::vector<Config> enumerate_dwbc(int n);

VertexCounts vertex_counts(const Config& c);

/// a^{N1+N2} b^{N3+N4} c^{N5+N6}; weights must be strictly positive.
ExtReal config_weight(const Config& c, const ExtReal& a, const ExtReal& b, const ExtReal& cc);

/// Sum of config_weight over enumerate_dwbc(n). Requires n <= 6.
ExtReal brute_force_partition(int n, const ExtReal& a, const ExtReal& b, const ExtReal& cc);

ExtReal gibbs_probability(const Config& c, const ExtReal& a, const ExtReal& b, const ExtReal& cc);

/// Height function of the configuration; consistency of all increment rules
/// is asserted (violations are impossible for a valid Config).
HeightGrid height_function(const Config& c);

/// ASM image. Built both from the type map (5 -> 1, 6 -> -1) and from the
/// height-function quarter sums; throws std::logic_error on disagreement.
ASMatrix asm_from_config(const Config& c);

/// Verifies N1=N2, N3=N4, N5-N6=n, and the per-line versions: N1=N2 on every
/// line i-j = const, N3=N4 on every line i+j = const, N5-N6 = 1 on every row
/// and every column.
ConservationReport check_conservation(const Config& c);

/// Ferroelectric ground state: type 5 on the main diagonal, type 3 above,
/// type 4 below.
Config ground_state(int n);

// JSON serialization (documented external interface).
std::string config_to_json(const Config& c);
Config config_from_json(const std::string& text);
std::string asm_to_json(const ASMatrix& m);

}  // namespace sixv

#endif
