#include "qca/splitting.hpp"

#include <map>
#include <stdexcept>

namespace qca {

bool CutData::is_edge_vertex(int v) const {
  for (int u : cut.edge_vertices)
    if (u == v) return true;
  return false;
}

namespace {

// The fan around the start corner of slot s: list of (face, corner, entry slot).
std::vector<std::array<int, 3>> fan(const SurfaceSpec& sp, Slot s) {
  std::vector<std::array<int, 3>> out;
  int f = s.face, c = (s.slot + 1) % 3, entry = s.slot;
  for (int guard = 0; guard <= 3 * sp.faces; ++guard) {
    out.push_back({f, c, entry});
    int other = (c + 1) % 3 == entry ? (c + 2) % 3 : (c + 1) % 3;
    auto p = sp.partner(Slot{f, other});
    if (!p) return out;
    // corner (other+1) <-> partner corner (p+2) and (other+2) <-> (p+1)
    c = c == (other + 1) % 3 ? (p->slot + 2) % 3 : (p->slot + 1) % 3;
    f = p->face, entry = p->slot;
  }
  throw std::invalid_argument("fan closes up: interior puncture");
}

// vertices of the fan at corner-coordinate t (1..n-1), with multiplicity
std::vector<int> fan_level(const Triangulation& T, const std::vector<std::array<int, 3>>& F, int t) {
  const int n = T.n();
  std::vector<int> out;
  for (size_t k = 0; k < F.size(); ++k) {
    auto [f, c, entry] = F[k];
    for (int a = 0; a <= n - t; ++a) {
      Point p{f, {0, 0, 0}};
      p.c[c] = t;
      p.c[(c + 1) % 3] = a;
      p.c[(c + 2) % 3] = n - t - a;
      if (p.c[entry] == 0) continue;  // on the cut edge, or shared with the previous triangle
      int v = T.vertex_of(p);
      if (v >= 0) out.push_back(v);
    }
  }
  return out;
}

}  // namespace

CutData build_cut_data(const Triangulation& T, Slot e, FanCopy rule) {
  const int n = T.n();
  CutData d;
  d.surface = &T;
  d.cut = cut(T, e);
  d.split = std::make_shared<const Triangulation>(d.cut.spec);
  const int V = T.size(), W = d.split->size();
  d.V1.assign(n - 1, {});
  d.V2.assign(n - 1, {});
  // Side first: start corner (s+1); the edge vertex t has that coordinate n-t.
  auto F1 = fan(T.spec(), d.cut.first), F2 = fan(T.spec(), d.cut.second);
  for (int m = 1; m < n; ++m) {
    auto from_first = fan_level(T, F1, m);   // pairs with edge vertex t = n-m
    auto from_second = fan_level(T, F2, m);  // pairs with edge vertex t = m
    auto& opp1 = rule == FanCopy::Opposite ? d.V2 : d.V1;
    auto& opp2 = rule == FanCopy::Opposite ? d.V1 : d.V2;
    for (int v : from_first) opp1[n - m - 1].push_back(v);
    for (int v : from_second) opp2[m - 1].push_back(v);
  }
  for (int t = 0; t < n - 1; ++t) {
    // the edge vertices themselves are never multiplied
    for (auto* S : {&d.V1[t], &d.V2[t]})
      std::erase_if(*S, [&](int v) { return d.is_edge_vertex(v); });
  }
  d.X = IntMatrix(V, W);
  d.SZ = IntMatrix(V, W);
  for (int v = 0; v < V; ++v)
    if (d.cut.new_of_old[v] >= 0) d.X(v, d.cut.new_of_old[v]) = d.SZ(v, d.cut.new_of_old[v]) = 1;
  for (int t = 0; t < n - 1; ++t) {
    int s = d.cut.edge_vertices[t];
    d.X(s, d.copy1(t)) = d.X(s, d.copy2(t)) = 1;
    d.SZ(s, d.copy1(t)) = d.SZ(s, d.copy2(t)) = 1;
    for (int v : d.V1[t]) d.X(v, d.copy1(t)) += 1;
    for (int v : d.V2[t]) d.X(v, d.copy2(t)) += 1;
  }
  return d;
}

TorusElement split_A(const CutData& c, const TorusElement& x) {
  return exponent_linear_map(x, c.X, c.split->a_form());
}

TorusElement split_Z(const CutData& c, const TorusElement& x) {
  return exponent_linear_map(x, c.SZ, c.split->z_form());
}

SplitReport check_split_conditions(const CutData& c) {
  const Triangulation& T = *c.surface;
  const Triangulation& S = *c.split;
  const int V = T.size();
  SplitReport r;
  auto fail = [&](bool& flag, std::string what) {
    flag = false;
    if (r.failures.size() < 50) r.failures.push_back(std::move(what));
  };
  const auto& lab = T.labels();
  // (a)-(c): Lambda is preserved, i.e. P = X P' X^T on the three kinds of pairs
  IntMatrix img = c.X * S.P() * c.X.transpose();
  for (int u = 0; u < V; ++u)
    for (int v = 0; v < V; ++v) {
      if (img(u, v) == T.P()(u, v)) continue;
      bool eu = c.is_edge_vertex(u), ev = c.is_edge_vertex(v);
      bool& flag = !eu && !ev ? r.a : (eu && ev ? r.c : r.b);
      fail(flag, "Lambda(" + lab[u] + "," + lab[v] + ") not preserved");
    }
  // Q_split is a splitting of Q
  const IntMatrix &D = T.D(), &Ds = S.D();
  for (int u = 0; u < V; ++u) {
    if (c.is_edge_vertex(u)) continue;
    int u1 = c.cut.new_of_old[u];
    for (int v = 0; v < V; ++v) {
      if (!c.is_edge_vertex(v)) {
        if (Ds(u1, c.cut.new_of_old[v]) != D(u, v)) fail(r.q_splitting, "Q(" + lab[u] + "," + lab[v] + ") changed");
        continue;
      }
      int t = 0;
      while (c.cut.edge_vertices[t] != v) ++t;
      std::int64_t a = Ds(u1, c.copy1(t)), b = Ds(u1, c.copy2(t));
      if (a + b != D(u, v) || a * b < 0) fail(r.q_splitting, "Q(" + lab[u] + "," + lab[v] + ") not split");
    }
  }
  // (d)
  auto pos = [](std::int64_t x) { return x > 0 ? x : 0; };
  for (int v = 0; v < V; ++v) {
    if (!T.is_mutable(v) || c.is_edge_vertex(v)) continue;
    int v1 = c.cut.new_of_old[v];
    for (int t = 0; t < int(c.cut.edge_vertices.size()); ++t) {
      for (int side = 0; side < 2; ++side) {
        // V'_u pairs with u'', V''_u with u'
        const auto& M = side == 0 ? c.V1[t] : c.V2[t];
        int other = side == 0 ? c.copy2(t) : c.copy1(t);
        std::int64_t lhs = pos(Ds(other, v1)), rhs = pos(Ds(v1, other));
        for (int w : M) {
          if (D(w, v) > 0) lhs += D(w, v);
          if (D(v, w) > 0) rhs += D(v, w);
        }
        if (lhs != rhs)
          fail(r.d, "(d) fails at v=" + lab[v] + ", u=" + lab[c.cut.edge_vertices[t]] + (side ? " (V'')" : " (V')"));
      }
    }
  }
  // psi-compatibility: split_Z o psi = psi' o split_A, i.e. K S_Z = X K'
  if (T.K() * c.SZ != c.X * S.K()) fail(r.psi_compatible, "split_Z psi != psi' split_A");
  return r;
}

std::vector<TensorTerm> tensor_project(const Triangulation& T, const TorusElement& x, int component) {
  std::vector<TensorTerm> out;
  for (auto& [k, coeff] : x.terms()) {
    TensorTerm t{coeff, Exponent(k.size(), 0), Exponent(k.size(), 0)};
    for (size_t v = 0; v < k.size(); ++v) (T.component_of(int(v)) == component ? t.left : t.right)[v] = k[v];
    out.push_back(std::move(t));
  }
  return out;
}

TorusElement embed_face(const Triangulation& S, const TorusElement& x, const Triangulation& T, int face) {
  IntMatrix L(S.size(), T.size());
  for (int v = 0; v < S.size(); ++v) {
    Point p = S.rep(v);
    if (p.face != 0 || S.spec().faces != 1) throw std::invalid_argument("embed_face expects a single triangle");
    p.face = face;
    int w = T.vertex_of(p);
    if (w < 0) throw std::invalid_argument("point has no vertex in the target");
    L(v, w) = 1;
  }
  return exponent_linear_map(x, L, T.a_form());
}

}  // namespace qca
