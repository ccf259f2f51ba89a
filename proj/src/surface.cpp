#include "qca/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qca {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

bool is_corner(const Point& p, int n) {
  return p.c[0] == n || p.c[1] == n || p.c[2] == n;
}

std::string num_label(int n, int i, int j) {
  return n < 10 ? std::to_string(i) + std::to_string(j) : std::to_string(i) + "_" + std::to_string(j);
}

// arrow steps around upward small triangles
constexpr std::array<std::array<int, 3>, 3> kSteps{{{-1, 1, 0}, {0, -1, 1}, {1, 0, -1}}};

}  // namespace

std::optional<Slot> SurfaceSpec::partner(Slot s) const {
  for (auto& [a, b] : gluings) {
    if (a == s) return b;
    if (b == s) return a;
  }
  return std::nullopt;
}

Point slot_point(int face, int slot, int t, int n) {
  Point p{face, {0, 0, 0}};
  p.c[(slot + 2) % 3] = t;
  p.c[(slot + 1) % 3] = n - t;
  return p;
}

std::vector<std::string> builtin_surface_names() { return {"P3", "P4", "P4-flipped", "P5", "annulus", "hexagon"}; }

SurfaceSpec builtin_surface(const std::string& name, int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  SurfaceSpec s;
  s.name = name;
  s.n = n;
  auto tri1_labels = [&](SurfaceSpec& sp) {
    // v_ij = (n-i, j, i-j), 0 <= j <= i <= n
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= i; ++j) {
        Point p{0, {n - i, j, i - j}};
        if (!is_corner(p, n)) sp.labels.push_back({"v" + num_label(n, i, j), p});
      }
  };
  auto vbar_labels = [&](SurfaceSpec& sp, int face) {
    // vbar_ab = (a, n-b, b-a), 0 <= a <= b <= n
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        Point p{face, {a, n - b, b - a}};
        if (!is_corner(p, n)) sp.labels.push_back({"vbar" + num_label(n, a, b), p});
      }
  };
  if (name == "P3") {
    s.faces = 1;
    tri1_labels(s);
    vbar_labels(s, 0);
  } else if (name == "P4" || name == "annulus" || name == "hexagon") {
    // tri1 = (v1, v2, v3), tri2 = (v2, v1, vbar3); the diagonal c5 is slot 2 of both
    s.faces = 2;
    s.gluings.push_back({{0, 2}, {1, 2}});
    if (name == "annulus") s.gluings.push_back({{0, 0}, {1, 0}});
    if (name == "hexagon") {
      // one more triangle on each of the sides opposite v1 and vbar1
      s.faces = 4;
      s.gluings.push_back({{0, 0}, {2, 0}});
      s.gluings.push_back({{1, 0}, {3, 0}});
    }
    tri1_labels(s);
    vbar_labels(s, 1);
  } else if (name == "P4-flipped") {
    s.faces = 2;
    s.gluings.push_back({{0, 0}, {1, 1}});
  } else if (name == "P5") {
    s.faces = 3;
    s.gluings.push_back({{0, 1}, {1, 2}});
    s.gluings.push_back({{1, 1}, {2, 2}});
  } else {
    throw std::invalid_argument("unknown surface '" + name + "'");
  }
  // square coordinates for the two quadrilateral triangulations
  if (name == "P4" || name == "P4-flipped") {
    for (int f = 0; f < 2; ++f)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
          Point p{f, {a, b, n - a - b}};
          if (is_corner(p, n)) continue;
          int x, y;
          if (name == "P4") {
            x = f == 0 ? b : a + p.c[2];
            y = f == 0 ? b + p.c[2] : a;
          } else {
            x = f == 0 ? b : a + b;
            y = f == 0 ? p.c[2] : b + p.c[2];
          }
          s.labels.push_back({"sq" + std::to_string(x) + "_" + std::to_string(y), p});
        }
  }
  return s;
}

Triangulation::Triangulation(SurfaceSpec spec) : spec_(std::move(spec)) {
  enumerate();
  build_matrices();
}

void Triangulation::enumerate() {
  const int n = spec_.n, F = spec_.faces;
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (F < 1) throw std::invalid_argument("need at least one face");
  std::set<Slot> used;
  for (auto& [a, b] : spec_.gluings) {
    for (auto s : {a, b}) {
      if (s.face < 0 || s.face >= F || s.slot < 0 || s.slot > 2)
        throw std::invalid_argument("invalid gluing: slot out of range");
      if (!used.insert(s).second) throw std::invalid_argument("invalid gluing: slot glued twice");
    }
    if (a.face == b.face) throw std::invalid_argument("invalid gluing: self-folded face");
  }

  // punctures: corners up to gluing; each must touch a boundary slot
  {
    UnionFind uf(3 * F);
    for (auto& [a, b] : spec_.gluings) {
      uf.unite(3 * a.face + (a.slot + 1) % 3, 3 * b.face + (b.slot + 2) % 3);
      uf.unite(3 * a.face + (a.slot + 2) % 3, 3 * b.face + (b.slot + 1) % 3);
    }
    std::set<int> boundary;
    for (int f = 0; f < F; ++f)
      for (int s = 0; s < 3; ++s)
        if (!used.count({f, s})) {
          boundary.insert(uf.find(3 * f + (s + 1) % 3));
          boundary.insert(uf.find(3 * f + (s + 2) % 3));
        }
    for (int x = 0; x < 3 * F; ++x)
      if (!boundary.count(uf.find(x))) throw std::invalid_argument("surface has an interior puncture");
  }

  {
    UnionFind uf(F);
    for (auto& [a, b] : spec_.gluings) uf.unite(a.face, b.face);
    std::map<int, int> comp;
    face_component_.resize(F);
    for (int f = 0; f < F; ++f) {
      auto [it, fresh] = comp.try_emplace(uf.find(f), int(comp.size()));
      face_component_[f] = it->second;
    }
    components_ = int(comp.size());
  }

  std::vector<Point> pts;
  std::map<Point, int> pidx;
  for (int f = 0; f < F; ++f)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        Point p{f, {a, b, n - a - b}};
        if (is_corner(p, n)) continue;
        pidx[p] = int(pts.size());
        pts.push_back(p);
      }
  UnionFind uf(int(pts.size()));
  for (auto& [a, b] : spec_.gluings)
    for (int t = 1; t < n; ++t)
      uf.unite(pidx.at(slot_point(a.face, a.slot, t, n)), pidx.at(slot_point(b.face, b.slot, n - t, n)));
  std::map<int, std::vector<Point>> classes;
  for (size_t i = 0; i < pts.size(); ++i) classes[uf.find(int(i))].push_back(pts[i]);
  std::vector<std::vector<Point>> cls;
  for (auto& [r, v] : classes) {
    std::sort(v.begin(), v.end());
    cls.push_back(v);
  }
  std::sort(cls.begin(), cls.end(), [](auto& x, auto& y) { return x.front() < y.front(); });
  for (auto& v : cls) {
    int id = int(reps_.size());
    reps_.push_back(v.front());
    points_.push_back(v);
    for (auto& p : v) index_[p] = id;
  }

  for (int f = 0; f < F; ++f)
    for (int s = 0; s < 3; ++s)
      if (!used.count({f, s})) boundary_slots_.push_back({f, s});
  vertex_boundary_slot_.assign(size(), std::nullopt);
  mutable_.assign(size(), true);
  for (size_t b = 0; b < boundary_slots_.size(); ++b)
    for (int t = 1; t < n; ++t) {
      int v = index_.at(slot_point(boundary_slots_[b].face, boundary_slots_[b].slot, t, n));
      vertex_boundary_slot_[v] = int(b);
      mutable_[v] = false;
    }

  labels_.assign(size(), "");
  for (auto& [name, p] : spec_.labels) {
    int v = vertex_of(p);
    if (v < 0) throw std::invalid_argument("label '" + name + "' names a corner");
    if (label_index_.count(name)) continue;
    label_index_[name] = v;
    if (labels_[v].empty()) labels_[v] = name;
  }
  for (int v = 0; v < size(); ++v) {
    const Point& p = reps_[v];
    std::string def = "f" + std::to_string(p.face) + "_" + std::to_string(p.c[0]) + "_" +
                      std::to_string(p.c[1]) + "_" + std::to_string(p.c[2]);
    if (!label_index_.count(def)) label_index_[def] = v;
    if (labels_[v].empty()) labels_[v] = def;
  }
}

int Triangulation::vertex_of(const Point& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::optional<int> Triangulation::find_vertex(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

int Triangulation::vertex(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw std::invalid_argument("unknown vertex label '" + label + "'");
  return *v;
}

std::vector<int> Triangulation::mutable_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (mutable_[v]) out.push_back(v);
  return out;
}

std::optional<int> Triangulation::boundary_slot_of(int v) const { return vertex_boundary_slot_[v]; }

void Triangulation::build_matrices() {
  const int N = size(), n = spec_.n;
  D_ = IntMatrix(N, N);
  for (int f = 0; f < spec_.faces; ++f)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        Point p{f, {a, b, n - a - b}};
        if (is_corner(p, n)) continue;
        for (auto& d : kSteps) {
          Point q = p;
          bool ok = true;
          for (int i = 0; i < 3; ++i) ok = ok && (q.c[i] += d[i]) >= 0;
          if (!ok || is_corner(q, n)) continue;
          bool same_side = false;
          for (int s = 0; s < 3; ++s) same_side = same_side || (p.c[s] == 0 && q.c[s] == 0);
          int w = same_side ? 1 : 2;
          int u = index_.at(p), v = index_.at(q);
          D_(u, v) += w;
          D_(v, u) -= w;
        }
      }

  H_ = IntMatrix(N, N);
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      auto bu = vertex_boundary_slot_[u], bv = vertex_boundary_slot_[v];
      if (bu && bv && *bu == *bv) {
        if (u == v) H_(u, v) = 1;
        else if (D_(u, v) == -1) H_(u, v) = -1;
        else if (D_(u, v) == 1 || D_(u, v) == 0) H_(u, v) = 0;
        else throw std::logic_error("unexpected weight on a boundary edge");
      } else {
        if (D_(u, v) % 2) throw std::logic_error("half-integer H entry off the boundary");
        H_(u, v) = D_(u, v) / 2;
      }
    }

  auto K = scaled_inverse(H_, n);
  if (!K) throw std::domain_error("n*H^{-1} is not an integer matrix (or H is singular)");
  K_ = *K;
  P_ = K_ * D_ * K_.transpose();
  if (!P_.all_divisible_by(n)) throw std::domain_error("P has an entry outside nZ");
  Pi_ = P_.divided_by(n);
  z_form_ = make_form(labels_, D_);
  a_form_ = make_form(labels_, P_);
}

std::optional<std::int64_t> Triangulation::triangle_K(const Point& v, const Point& w) {
  if (v.face != w.face) return std::nullopt;
  for (int r = 0; r < 3; ++r) {
    std::int64_t i = v.c[r], j = v.c[(r + 1) % 3], k = v.c[(r + 2) % 3];
    std::int64_t i2 = w.c[r], j2 = w.c[(r + 1) % 3], k2 = w.c[(r + 2) % 3];
    if (i2 <= i && j2 >= j) return j * k2 + k * i2 + i2 * j;
  }
  return std::nullopt;
}

std::vector<std::string> check_bundle(const Triangulation& T) {
  std::vector<std::string> bad;
  const int N = T.size(), n = T.n();
  if (!T.D().is_antisymmetric()) bad.push_back("Q not antisymmetric");
  if (T.H() * T.K() != IntMatrix::identity(N, n)) bad.push_back("HK != nI");
  if (T.K() * T.H() != IntMatrix::identity(N, n)) bad.push_back("KH != nI");
  if (!T.P().is_antisymmetric()) bad.push_back("P not antisymmetric");
  if (!T.P().all_divisible_by(n)) bad.push_back("P not in nZ");
  if (!T.Pi().is_antisymmetric()) bad.push_back("Pi not antisymmetric");
  // sum_k Q(k,u) Pi(k,v) = 2n delta for mutable u   (doubled: 4n)
  IntMatrix QtPi = T.D().transpose() * T.Pi();
  for (int u : T.mutable_vertices())
    for (int v = 0; v < N; ++v)
      if (QtPi(u, v) != (u == v ? 4 * n : 0)) {
        bad.push_back("Q^T Pi != 2n on mutable row " + T.labels()[u]);
        break;
      }
  return bad;
}

// ---- flips ----------------------------------------------------------------

namespace {

struct Quad {
  Slot s1, s2;
  int P, Q, R1;     // corner indices in face s1.face
  int P2, Q2, R2;   // corner indices in face s2.face
  int n;
  // square coordinates of a point in one of the two faces
  std::pair<int, int> xy(const Point& p) const {
    if (p.face == s1.face) return {p.c[Q], p.c[Q] + p.c[R1]};
    return {p.c[Q2] + p.c[R2], p.c[Q2]};
  }
  Point from_xy(int x, int y) const {
    Point p;
    if (y >= x) {
      p.face = s1.face;
      p.c[Q] = x, p.c[R1] = y - x, p.c[P] = n - y;
    } else {
      p.face = s2.face;
      p.c[Q2] = y, p.c[R2] = x - y, p.c[P2] = n - x;
    }
    return p;
  }
};

Quad make_quad(const SurfaceSpec& spec, Slot s) {
  auto o = spec.partner(s);
  if (!o) throw std::invalid_argument("edge is on the boundary");
  Quad q;
  q.s1 = s, q.s2 = *o, q.n = spec.n;
  q.P = (s.slot + 1) % 3, q.Q = (s.slot + 2) % 3, q.R1 = s.slot;
  q.Q2 = (o->slot + 1) % 3, q.P2 = (o->slot + 2) % 3, q.R2 = o->slot;
  return q;
}

}  // namespace

FlipResult flip(const Triangulation& T, Slot s) {
  const SurfaceSpec& old = T.spec();
  Quad q = make_quad(old, s);
  const int f1 = q.s1.face, f2 = q.s2.face, n = old.n;
  // new faces: g1 = (P, R2, R1) at index f1, g2 = (R2, Q, R1) at index f2
  auto map_slot = [&](Slot x) -> Slot {
    if (x.face == f1 && x.slot == q.P) return {f2, 0};
    if (x.face == f1 && x.slot == q.Q) return {f1, 1};
    if (x.face == f2 && x.slot == q.Q2) return {f1, 2};
    if (x.face == f2 && x.slot == q.P2) return {f2, 2};
    return x;
  };
  SurfaceSpec sp;
  sp.name = old.name + "-flip";
  sp.n = n;
  sp.faces = old.faces;
  for (auto& [a, b] : old.gluings) {
    if ((a == q.s1 && b == q.s2) || (a == q.s2 && b == q.s1)) continue;
    sp.gluings.push_back({map_slot(a), map_slot(b)});
  }
  sp.gluings.push_back({{f1, 0}, {f2, 1}});
  auto new_point = [&](int x, int y) {
    Point p;
    if (x + y <= n) p = Point{f1, {n - x - y, x, y}};
    else p = Point{f2, {n - y, x + y - n, n - x}};
    return p;
  };
  for (auto& [name, p] : old.labels) {
    if (p.face != f1 && p.face != f2) {
      sp.labels.push_back({name, p});
    } else {
      auto [x, y] = q.xy(p);
      sp.labels.push_back({name, new_point(x, y)});
    }
  }
  Triangulation nt(sp);
  FlipResult r{sp, std::vector<int>(nt.size(), -1)};
  for (int v = 0; v < nt.size(); ++v) {
    Point p = nt.rep(v);
    Point o = p;
    if (p.face == f1 || p.face == f2) {
      int x, y;
      if (p.face == f1) x = p.c[1], y = p.c[2];
      else x = p.c[0] + p.c[1], y = p.c[1] + p.c[2];
      o = q.from_xy(x, y);
    }
    r.old_of_new[v] = T.vertex_of(o);
  }
  return r;
}

std::vector<std::vector<int>> flip_layers(const Triangulation& T, Slot s) {
  Quad q = make_quad(T.spec(), s);
  const int n = T.n();
  std::vector<std::vector<int>> layers(n - 1);
  for (int i = 0; i <= n - 2; ++i) {
    const int h = n - 2 - i;
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        int dv = std::abs(x - y), dh = std::abs(x + y - n);
        if (dv <= i && (i - dv) % 2 == 0 && dh <= h && (h - dh) % 2 == 0)
          layers[i].push_back(T.vertex_of(q.from_xy(x, y)));
      }
  }
  return layers;
}

std::vector<int> flip_sequence(const Triangulation& T, Slot s) {
  std::vector<int> seq;
  for (auto& l : flip_layers(T, s)) seq.insert(seq.end(), l.begin(), l.end());
  return seq;
}

// ---- cutting --------------------------------------------------------------

CutResult cut(const Triangulation& T, Slot s) {
  const SurfaceSpec& old = T.spec();
  auto o = old.partner(s);
  if (!o) throw std::invalid_argument("edge is on the boundary");
  const int n = old.n;
  CutResult r;
  r.first = s, r.second = *o;
  r.spec = old;
  r.spec.name = old.name + "-cut";
  r.spec.gluings.clear();
  for (auto& [a, b] : old.gluings)
    if (!((a == s && b == *o) || (a == *o && b == s))) r.spec.gluings.push_back({a, b});
  r.spec.labels.clear();
  for (auto& [name, p] : old.labels) {
    bool on1 = p.face == s.face && p.c[s.slot] == 0;
    bool on2 = p.face == o->face && p.c[o->slot] == 0;
    if (on1 && on2) continue;
    // labels of edge vertices are attached to both copies with primes
    if (on1 || on2) {
      int v = T.vertex_of(p);
      for (int t = 1; t < n; ++t) {
        if (T.vertex_of(slot_point(s.face, s.slot, t, n)) != v) continue;
        r.spec.labels.push_back({name + "'", slot_point(s.face, s.slot, t, n)});
        r.spec.labels.push_back({name + "''", slot_point(o->face, o->slot, n - t, n)});
      }
      continue;
    }
    r.spec.labels.push_back({name, p});
  }
  Triangulation nt(r.spec);
  r.new_of_old.assign(T.size(), -1);
  for (int v = 0; v < T.size(); ++v) r.new_of_old[v] = nt.vertex_of(T.rep(v));
  for (int t = 1; t < n; ++t) {
    Point a = slot_point(s.face, s.slot, t, n), b = slot_point(o->face, o->slot, n - t, n);
    int v = T.vertex_of(a);
    r.edge_vertices.push_back(v);
    r.copy_first.push_back(nt.vertex_of(a));
    r.copy_second.push_back(nt.vertex_of(b));
    r.new_of_old[v] = -1;
  }
  return r;
}

}  // namespace qca
