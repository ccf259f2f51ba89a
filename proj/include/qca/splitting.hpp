#pragma once
// Cutting a triangulated surface along an interior edge: the Z-torus cut map,
// the A-torus splitting with its fan multisets, the hypotheses that make the
// splitting a homomorphism of upper cluster algebras, and tensor bookkeeping
// for cut surfaces with several components.
//
// Fan rule.  Let e be the cut edge, seen from side X (one of its two face
// slots), and p_X the corner where X's slot starts.  Walk the fan of p_X
// starting in X's face, away from e, until a boundary edge is reached.  A
// vertex of a fan triangle whose p_X-coordinate is t is multiplied by the
// copy, on the other side of e, of the edge vertex with p_X-coordinate t.
// A vertex counts once per pass of the fan; the edge vertices themselves are
// never multiplied.

#include "qca/matrix.hpp"
#include "qca/surface.hpp"
#include "qca/torus.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qca {

enum class FanCopy { Opposite, Same };  // Same is the wrong convention, kept as a negative control

struct CutData {
  const Triangulation* surface = nullptr;
  std::shared_ptr<const Triangulation> split;  // the cut surface, same faces
  CutResult cut;
  // V'_u, V''_u for each edge vertex (index t-1 along cut.first): vertices of
  // the original surface multiplied by A_{u'} resp. A_{u''}, with repetition
  std::vector<std::vector<int>> V1, V2;
  IntMatrix X;   // A-exponent image: rows original vertices, columns cut-surface vertices
  IntMatrix SZ;  // Z-exponent image: e_s -> e_{s'} + e_{s''}

  bool is_edge_vertex(int v) const;
  int copy1(int t) const { return cut.copy_first[t]; }
  int copy2(int t) const { return cut.copy_second[t]; }
};

CutData build_cut_data(const Triangulation& T, Slot e, FanCopy rule = FanCopy::Opposite);

TorusElement split_A(const CutData& c, const TorusElement& x);
TorusElement split_Z(const CutData& c, const TorusElement& x);

struct SplitReport {
  bool a = true, b = true, c = true, d = true;
  bool q_splitting = true;
  bool psi_compatible = true;
  std::vector<std::string> failures;
  bool ok() const { return a && b && c && d && q_splitting && psi_compatible; }
};
SplitReport check_split_conditions(const CutData& c);

// x in the torus of a disconnected surface, written as sum of coeff * (left ⊗ right)
// with left supported on `component` and right on the rest.
struct TensorTerm {
  OmegaScalar coeff;
  Exponent left, right;
};
std::vector<TensorTerm> tensor_project(const Triangulation& T, const TorusElement& x, int component);

// Carry an A-monomial element of a one-face surface S (vertices named by
// points on face 0) onto face `face` of T by identical coordinates.
TorusElement embed_face(const Triangulation& S, const TorusElement& x, const Triangulation& T, int face);

}  // namespace qca
