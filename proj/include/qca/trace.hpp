#pragma once
// Dual networks of n-triangulated faces, path enumeration, path-sum quantum
// traces of corner arcs, and the cluster-mutation formulas they must equal.
//
// Local coordinates of a face relative to a chosen corner r: (A,B,C) =
// (c_r, c_{r+1}, c_{r+2}); the corner itself is (n,0,0).  Row t (1..n) is the
// strip between the lines A = n-t+1 and A = n-t.  Paths enter on the side
// {B = 0} (sources 1..n, by row) and leave on {C = 0} (sinks 1..n, by row).
// A mirrored network uses (A,B,C) = (c_r, c_{r+2}, c_{r+1}) instead, so it
// turns around the same corner in the opposite direction.

#include "qca/mutation.hpp"
#include "qca/surface.hpp"
#include "qca/torus.hpp"

#include <array>
#include <utility>
#include <vector>

namespace qca {

using Local = std::array<int, 3>;

struct Network {
  struct Edge {
    int to;
    std::pair<Local, Local> crossed;  // lattice edge crossed, local coordinates
  };
  int n = 2, face = 0, corner = 0;
  bool mirrored = false;
  int num_nodes = 0;
  std::vector<std::vector<Edge>> out;
  std::vector<int> source, sink;  // index t-1 -> node id
  std::vector<std::pair<Local, Local>> source_edge, sink_edge;
  int source_slot() const { return (corner + (mirrored ? 2 : 1)) % 3; }
  int sink_slot() const { return (corner + (mirrored ? 1 : 2)) % 3; }

  Point to_face(const Local& l) const;
  // local points on the corner's side of the path (the path's left)
  std::vector<Local> left_of(const std::vector<int>& node_path) const;
  bool acyclic() const;
};

Network build_network(int n, int face, int corner, bool mirrored = false);
// convenience: the network of P3 around v1
Network build_network_p3(int n);

struct LatticePath {
  std::vector<std::pair<int, int>> nodes;  // (part, node)
  Exponent left;                           // corner-side indicator, summed over parts
  Exponent z;                              // exponent of the path's Z-monomial
};

struct ArcPart {
  int face, corner;
  bool mirrored = false;
};

// An arc crossing consecutive faces; each part turns around one corner of its
// face.  Sinks of part p are glued to the sources of part p+1 by matching the
// crossed lattice edges through the surface gluing.
//
// State i at the start is the source row of a forward first part, and n+1-row
// for a mirrored one; likewise at the end.  A path contributes Z^z with
// z = eps (n k^gamma - c) on each part's face, eps = +1 forward / -1 mirrored
// and c the coordinate of the part's corner.  The values agree on shared edges.
class ArcNetwork {
 public:
  ArcNetwork(const Triangulation& T, std::vector<ArcPart> parts);
  const Triangulation& surface() const { return *T_; }
  const std::vector<Network>& parts() const { return parts_; }
  std::vector<LatticePath> paths(int i, int j) const;
  TorusElement trace_Z(int i, int j) const;
  TorusElement trace_A(int i, int j) const;

 private:
  void finish(LatticePath& p) const;
  const Triangulation* T_;
  std::vector<Network> parts_;
  std::vector<std::vector<int>> glue_;  // glue_[p][sink t-1] = source index in part p+1
};

// Single triangle P3 around v1
std::vector<LatticePath> enumerate_paths(const Triangulation& P3, int i, int j);
TorusElement trace_corner_Z(const Triangulation& P3, int i, int j);
TorusElement trace_corner_A(const Triangulation& P3, int i, int j);
// reversed arc: sum over gamma in P(n+1-j, n+1-i) of Z^{k_1 - n sigma(k^gamma)}, sigma(a,b,c) = (a,c,b)
TorusElement trace_corner_Z_reversed(const Triangulation& P3, int i, int j);
TorusElement trace_corner_A_reversed(const Triangulation& P3, int i, int j);
// per-path A-monomials A_p = phi(Z^{n k^p - k_1}) (exponents only)
std::vector<Exponent> path_monomials_A(const Triangulation& P3, int i, int j);

// Arcs in the quadrilateral (face 0 = v-triangle, face 1 = vbar-triangle):
//   'a' around face 0 corner 0 through both faces, 'b' around face 1 corner 0,
//   'c' around face 0 corner 2, 'd' around face 1 corner 2,
//   'x' entering face 0 opposite corner 2, crossing the diagonal and leaving
//   face 1 opposite its corner 2 (the arc whose trace matrix is D).
ArcNetwork p4_arc_network(const Triangulation& P4, char x);
TorusElement trace_p4_arc(const Triangulation& P4, char x, int i, int j);

// ---- cluster formulas --------------------------------------------------------

// v_ij = (n-i, j, i-j) and vbar_ab = (a, n-b, b-a) on the given face
Point vpoint(int n, int i, int j, int face = 0);
Point vbarpoint(int n, int a, int b, int face);
// Weyl-ordered A-monomial; factors at triangle corners are 1 and are dropped.
TorusElement a_mono(const Triangulation& T, const std::vector<std::pair<Point, int>>& factors);
Exponent a_exponent(const Triangulation& T, const std::vector<std::pair<Point, int>>& factors);

TorusElement cluster_formula_C(const Triangulation& P3, int i, int j);     // 1 <= j <= i <= n
TorusElement cluster_formula_barC(const Triangulation& P3, int i, int j);  // all base cases included
TorusElement cluster_formula_D(const Triangulation& P4, int i, int j);

}  // namespace qca
