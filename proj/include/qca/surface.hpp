#pragma once
// Triangulated pb surfaces, their n-triangulation vertices and the matrix
// bundle (Q, H, K, P, Pi).
//
// Face conventions: corners 0,1,2 listed counterclockwise; a point of a face is
// its barycentric triple (c0,c1,c2), c0+c1+c2 = n.  Slot s is the side opposite
// corner s ({c_s = 0}); it runs from corner s+1 to corner s+2 (mod 3), with
// parameter t = c_{s+2}.  Gluing two slots identifies t with n-t.

#include "qca/matrix.hpp"
#include "qca/torus.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qca {

struct Slot {
  int face = 0, slot = 0;
  auto operator<=>(const Slot&) const = default;
};

struct Point {
  int face = 0;
  std::array<int, 3> c{};
  auto operator<=>(const Point&) const = default;
};

struct SurfaceSpec {
  std::string name;
  int n = 2;
  int faces = 1;
  std::vector<std::pair<Slot, Slot>> gluings;
  // extra vertex names; the first name given to a vertex becomes its primary label
  std::vector<std::pair<std::string, Point>> labels;

  std::optional<Slot> partner(Slot s) const;
};

SurfaceSpec builtin_surface(const std::string& name, int n);
std::vector<std::string> builtin_surface_names();

// point on slot s at parameter t (t = coordinate of the slot's end corner)
Point slot_point(int face, int slot, int t, int n);

class Triangulation {
 public:
  explicit Triangulation(SurfaceSpec spec);

  const SurfaceSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  int size() const { return static_cast<int>(reps_.size()); }

  const Point& rep(int v) const { return reps_[v]; }
  // vertex of a non-corner point; -1 for corners
  int vertex_of(const Point& p) const;
  int vertex(const std::string& label) const;  // throws on unknown label
  std::optional<int> find_vertex(const std::string& label) const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Point>& points_of(int v) const { return points_[v]; }
  bool is_mutable(int v) const { return mutable_[v]; }
  std::vector<int> mutable_vertices() const;
  // id of the unglued slot carrying v (if any), as an index into boundary_slots()
  std::optional<int> boundary_slot_of(int v) const;
  const std::vector<Slot>& boundary_slots() const { return boundary_slots_; }
  int component_of_face(int f) const { return face_component_[f]; }
  int component_of(int v) const { return face_component_[reps_[v].face]; }
  int components() const { return components_; }

  // doubled quiver form D = 2Q
  const IntMatrix& D() const { return D_; }
  const IntMatrix& H() const { return H_; }
  const IntMatrix& K() const { return K_; }
  const IntMatrix& P() const { return P_; }
  const IntMatrix& Pi() const { return Pi_; }

  FormPtr z_form() const { return z_form_; }  // Z-torus, doubled form 2Q
  FormPtr a_form() const { return a_form_; }  // A-torus, doubled form P

  // psi: A^k -> Z^{kK};  phi: Z^k -> A^{kH/n}
  MonomialMap psi() const { return MonomialMap(a_form_, z_form_, K_); }
  MonomialMap phi() const { return MonomialMap(z_form_, a_form_, H_, n()); }

  // K(v,v') = jk' + ki' + i'j on one face, for pairs with i' <= i and j' >= j
  // after some cyclic rotation (used as an oracle for K = nH^{-1}).
  static std::optional<std::int64_t> triangle_K(const Point& v, const Point& w);

 private:
  void enumerate();
  void build_matrices();

  SurfaceSpec spec_;
  std::vector<Point> reps_;
  std::vector<std::vector<Point>> points_;
  std::map<Point, int> index_;
  std::vector<bool> mutable_;
  std::vector<std::string> labels_;
  std::map<std::string, int> label_index_;
  std::vector<Slot> boundary_slots_;
  std::vector<std::optional<int>> vertex_boundary_slot_;
  std::vector<int> face_component_;
  int components_ = 0;
  IntMatrix D_, H_, K_, P_, Pi_;
  FormPtr z_form_, a_form_;
};

// Invariants of the matrix bundle; empty vector means all pass.
std::vector<std::string> check_bundle(const Triangulation& T);

// ---- flips ----------------------------------------------------------------

struct FlipResult {
  SurfaceSpec spec;                // flipped triangulation
  std::vector<int> old_of_new;     // vertex correspondence (new id -> old id)
};
// The two faces adjacent to the glued slot `s` are replaced by the other
// diagonal of their quadrilateral.
FlipResult flip(const Triangulation& T, Slot s);

// Mutation sequence realising the flip at the glued slot s; length (n^3-n)/6.
std::vector<int> flip_sequence(const Triangulation& T, Slot s);
// The layers V^{(0)}, ..., V^{(n-2)} of that sequence.
std::vector<std::vector<int>> flip_layers(const Triangulation& T, Slot s);

// ---- cutting --------------------------------------------------------------

struct CutResult {
  SurfaceSpec spec;
  std::vector<int> new_of_old;     // for vertices off the cut edge
  // for each edge vertex s_t (t = 1..n-1 along the first slot): the copies
  // on the first slot's face and on the partner's face
  std::vector<int> edge_vertices;  // old ids, index t-1
  std::vector<int> copy_first, copy_second;
  Slot first, second;
};
CutResult cut(const Triangulation& T, Slot s);

}  // namespace qca
