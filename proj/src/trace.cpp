#include "qca/trace.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace qca {

Point Network::to_face(const Local& l) const {
  Point p{face, {0, 0, 0}};
  p.c[corner] = l[0];
  p.c[(corner + (mirrored ? 2 : 1)) % 3] = l[1];
  p.c[(corner + (mirrored ? 1 : 2)) % 3] = l[2];
  return p;
}

bool Network::acyclic() const {
  std::vector<int> state(num_nodes, 0);
  std::function<bool(int)> dfs = [&](int u) {
    state[u] = 1;
    for (auto& e : out[u]) {
      if (state[e.to] == 1) return false;
      if (state[e.to] == 0 && !dfs(e.to)) return false;
    }
    state[u] = 2;
    return true;
  };
  for (int u = 0; u < num_nodes; ++u)
    if (state[u] == 0 && !dfs(u)) return false;
  return true;
}

std::vector<Local> Network::left_of(const std::vector<int>& node_path) const {
  std::set<std::pair<Local, Local>> blocked;
  for (size_t t = 0; t + 1 < node_path.size(); ++t)
    for (auto& e : out[node_path[t]])
      if (e.to == node_path[t + 1]) {
        blocked.insert(e.crossed);
        blocked.insert({e.crossed.second, e.crossed.first});
      }
  static constexpr int steps[6][3] = {{-1, 1, 0}, {0, -1, 1}, {1, 0, -1}, {1, -1, 0}, {0, 1, -1}, {-1, 0, 1}};
  std::set<Local> seen{{n, 0, 0}};
  std::vector<Local> stack{{n, 0, 0}}, out_pts;
  while (!stack.empty()) {
    Local p = stack.back();
    stack.pop_back();
    out_pts.push_back(p);
    for (auto& d : steps) {
      Local q{p[0] + d[0], p[1] + d[1], p[2] + d[2]};
      if (q[0] < 0 || q[1] < 0 || q[2] < 0) continue;
      if (seen.count(q) || blocked.count({p, q})) continue;
      seen.insert(q);
      stack.push_back(q);
    }
  }
  return out_pts;
}

Network build_network(int n, int face, int corner, bool mirrored) {
  Network N;
  N.n = n, N.face = face, N.corner = corner, N.mirrored = mirrored;
  std::map<std::array<int, 3>, int> id;  // (kind, row, s): kind 0 up, 1 down, 2 source, 3 sink, 4 far side
  auto node = [&](int kind, int r, int s) {
    auto [it, fresh] = id.try_emplace({kind, r, s}, N.num_nodes);
    if (fresh) ++N.num_nodes;
    return it->second;
  };
  auto L = [n](int A, int B) { return Local{A, B, n - A - B}; };
  std::vector<std::tuple<int, int, std::pair<Local, Local>>> edges;
  for (int r = 1; r <= n; ++r) {
    edges.push_back({node(2, r, 0), node(0, r, 1), {L(n - r + 1, 0), L(n - r, 0)}});
    for (int s = 1; s <= r; ++s) {
      int up = node(0, r, s);
      if (s < r) {
        int dn = node(1, r, s);
        edges.push_back({up, dn, {L(n - r + 1, s - 1), L(n - r, s)}});
        edges.push_back({dn, node(0, r, s + 1), {L(n - r + 1, s), L(n - r, s)}});
        edges.push_back({dn, node(0, r - 1, s), {L(n - r + 1, s - 1), L(n - r + 1, s)}});
      }
    }
    edges.push_back({node(0, r, r), node(3, r, 0), {L(n - r + 1, r - 1), L(n - r, r)}});
  }
  for (int s = 1; s <= n; ++s) edges.push_back({node(4, 0, s), node(0, n, s), {L(0, s - 1), L(0, s)}});
  N.out.assign(N.num_nodes, {});
  for (auto& [a, b, c] : edges) N.out[a].push_back({b, c});
  for (int t = 1; t <= n; ++t) {
    N.source.push_back(id.at({2, t, 0}));
    N.sink.push_back(id.at({3, t, 0}));
    N.source_edge.push_back({L(n - t + 1, 0), L(n - t, 0)});
    N.sink_edge.push_back({L(n - t + 1, t - 1), L(n - t, t)});
  }
  return N;
}

Network build_network_p3(int n) { return build_network(n, 0, 0); }

// ---- arc networks -----------------------------------------------------------

namespace {
std::set<Point> edge_points(const Network& N, const std::pair<Local, Local>& e) {
  return {N.to_face(e.first), N.to_face(e.second)};
}
}  // namespace

ArcNetwork::ArcNetwork(const Triangulation& T, std::vector<ArcPart> parts) : T_(&T) {
  const int n = T.n();
  if (parts.empty()) throw std::invalid_argument("arc network needs at least one part");
  for (auto& a : parts) {
    if (a.face < 0 || a.face >= T.spec().faces || a.corner < 0 || a.corner > 2)
      throw std::invalid_argument("arc part out of range");
    parts_.push_back(build_network(n, a.face, a.corner, a.mirrored));
  }
  for (size_t p = 0; p + 1 < parts_.size(); ++p) {
    const Network &a = parts_[p], &b = parts_[p + 1];
    Slot sa{a.face, a.sink_slot()};
    auto partner = T.spec().partner(sa);
    if (!partner || !(*partner == Slot{b.face, b.source_slot()}))
      throw std::invalid_argument("arc network parts are not adjacent");
    std::vector<int> g(n, -1);
    for (int t = 0; t < n; ++t) {
      std::set<Point> across;
      for (const Point& q : edge_points(a, a.sink_edge[t]))
        across.insert(slot_point(partner->face, partner->slot, n - q.c[(sa.slot + 2) % 3], n));
      for (int u = 0; u < n; ++u)
        if (edge_points(b, b.source_edge[u]) == across) g[t] = u;
      if (g[t] < 0) throw std::logic_error("sink edge has no matching source edge");
    }
    glue_.push_back(g);
  }
}

std::vector<LatticePath> ArcNetwork::paths(int i, int j) const {
  const int n = T_->n();
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("state out of range");
  const int src = parts_.front().mirrored ? n - i : i - 1;
  const int snk = parts_.back().mirrored ? n - j : j - 1;
  std::vector<LatticePath> out;
  std::vector<std::pair<int, int>> cur;
  std::function<void(int, int)> go = [&](int part, int u) {
    cur.push_back({part, u});
    const Network& N = parts_[part];
    if (part + 1 == int(parts_.size())) {
      if (u == N.sink[snk]) {
        LatticePath lp{cur, {}, {}};
        finish(lp);
        out.push_back(std::move(lp));
      }
    } else {
      for (int t = 0; t < n; ++t)
        if (u == N.sink[t]) go(part + 1, parts_[part + 1].source[glue_[part][t]]);
    }
    for (auto& e : N.out[u]) go(part, e.to);
    cur.pop_back();
  };
  go(0, parts_[0].source[src]);
  return out;
}

void ArcNetwork::finish(LatticePath& p) const {
  const int n = T_->n(), V = T_->size();
  p.left.assign(V, 0);
  p.z.assign(V, 0);
  std::vector<char> set(V, 0);
  for (size_t part = 0; part < parts_.size(); ++part) {
    const Network& N = parts_[part];
    const int eps = N.mirrored ? -1 : 1;
    std::vector<int> nodes;
    for (auto& [q, u] : p.nodes)
      if (q == int(part)) nodes.push_back(u);
    std::set<Local> side;
    for (auto& l : N.left_of(nodes)) side.insert(l);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        Local l{a, b, n - a - b};
        int v = T_->vertex_of(N.to_face(l));
        if (v < 0) continue;
        int in = side.count(l) ? 1 : 0;
        int z = eps * (n * in - a);
        if (set[v] && p.z[v] != z) throw std::logic_error("arc parts disagree on a shared vertex");
        set[v] = 1;
        p.z[v] = z;
        p.left[v] += in;
      }
  }
}

TorusElement ArcNetwork::trace_Z(int i, int j) const {
  TorusElement t(T_->z_form());
  for (auto& p : paths(i, j)) t.add_term(p.z, 1);
  return t;
}

TorusElement ArcNetwork::trace_A(int i, int j) const { return T_->phi()(trace_Z(i, j)); }

// ---- triangle -----------------------------------------------------------------

std::vector<LatticePath> enumerate_paths(const Triangulation& P3, int i, int j) {
  return ArcNetwork(P3, {{0, 0}}).paths(i, j);
}

TorusElement trace_corner_Z(const Triangulation& P3, int i, int j) { return ArcNetwork(P3, {{0, 0}}).trace_Z(i, j); }

TorusElement trace_corner_A(const Triangulation& P3, int i, int j) { return P3.phi()(trace_corner_Z(P3, i, j)); }

// the opposite orientation: states are read from the far end
TorusElement trace_corner_Z_reversed(const Triangulation& P3, int i, int j) {
  return ArcNetwork(P3, {{0, 0, true}}).trace_Z(j, i);
}

TorusElement trace_corner_A_reversed(const Triangulation& P3, int i, int j) {
  return P3.phi()(trace_corner_Z_reversed(P3, i, j));
}

std::vector<Exponent> path_monomials_A(const Triangulation& P3, int i, int j) {
  auto phi = P3.phi();
  std::vector<Exponent> out;
  for (auto& p : enumerate_paths(P3, i, j)) out.push_back(phi.apply(p.z));
  return out;
}

ArcNetwork p4_arc_network(const Triangulation& P4, char x) {
  switch (x) {
    case 'a': return ArcNetwork(P4, {{0, 0}, {1, 1}});
    case 'b': return ArcNetwork(P4, {{1, 0}, {0, 1}});
    case 'x': return ArcNetwork(P4, {{0, 0}, {1, 0, true}});
    case 'c': return ArcNetwork(P4, {{0, 2}});
    case 'd': return ArcNetwork(P4, {{1, 2}});
  }
  throw std::invalid_argument("unknown arc (expected a, b, c, d or x)");
}

TorusElement trace_p4_arc(const Triangulation& P4, char x, int i, int j) {
  return p4_arc_network(P4, x).trace_Z(i, j);
}

// ---- cluster formulas -----------------------------------------------------------

Point vpoint(int n, int i, int j, int face) { return Point{face, {n - i, j, i - j}}; }
Point vbarpoint(int n, int a, int b, int face) { return Point{face, {a, n - b, b - a}}; }

Exponent a_exponent(const Triangulation& T, const std::vector<std::pair<Point, int>>& factors) {
  Exponent k(T.size(), 0);
  for (auto& [p, e] : factors) {
    for (int c : p.c)
      if (c < 0 || c > T.n()) throw std::invalid_argument("point outside the face");
    int v = T.vertex_of(p);
    if (v >= 0) k[v] += e;
  }
  return k;
}

TorusElement a_mono(const Triangulation& T, const std::vector<std::pair<Point, int>>& factors) {
  return TorusElement::mono(T.a_form(), a_exponent(T, factors));
}

namespace {
TorusElement run_and_bracket(const Triangulation& T, const std::vector<std::string>& seq, int target,
                             const std::vector<std::pair<Point, int>>& frozen) {
  QuantumSeed s = QuantumSeed::initial(T).mutate(resolve(T, seq));
  return weyl_bracket({s.var(target), a_mono(T, frozen)});
}
}  // namespace

TorusElement cluster_formula_C(const Triangulation& T, int i, int j) {
  const int n = T.n();
  if (!(1 <= j && j <= i && i <= n)) throw std::invalid_argument("need 1 <= j <= i <= n");
  auto v = [n](int a, int b) { return vpoint(n, a, b); };
  if (j == i) return a_mono(T, {{v(i, 0), -1}, {v(i - 1, 0), 1}});
  if (j == 1) return a_mono(T, {{v(i, 1), 1}, {v(i, 0), -1}, {v(1, 1), -1}});
  std::vector<std::string> seq;
  for (int k = i - 1; k >= j; --k)
    for (auto& l : mu_kj(k, j - 1, n)) seq.push_back(l);
  return run_and_bracket(T, seq, T.vertex_of(v(j, j - 1)), {{v(i, 0), -1}, {v(j, j), -1}});
}

TorusElement cluster_formula_barC(const Triangulation& T, int i, int j) {
  const int n = T.n();
  if (!(1 <= j && j <= i && i <= n)) throw std::invalid_argument("need 1 <= j <= i <= n");
  auto vb = [n](int a, int b) { return vbarpoint(n, a, b, 0); };
  if (i == n) return a_mono(T, {{vb(j, j), -1}, {vb(j - 1, j), 1}});
  if (i == j) return a_mono(T, {{vb(i, n), -1}, {vb(i - 1, n), 1}});
  std::vector<std::string> seq;
  for (int k = i - 1; k >= j; --k)
    for (auto& l : mubar_kt(k, n - i, n)) seq.push_back(l);
  return run_and_bracket(T, seq, T.vertex_of(vb(j, j + 1)), {{vb(j, j), -1}, {vb(i, n), -1}});
}

TorusElement cluster_formula_D(const Triangulation& T, int i, int j) {
  const int n = T.n();
  if (!(1 <= i && i <= n && 1 <= j && j <= n)) throw std::invalid_argument("need 1 <= i, j <= n");
  auto v = [n](int a, int b) { return vpoint(n, a, b, 0); };
  auto vb = [n](int a, int b) { return vbarpoint(n, a, b, 1); };
  if (j == 1) return a_mono(T, {{v(i, 1), 1}, {v(i, 0), -1}, {vb(1, n), -1}});
  std::vector<std::string> seq;
  int target;
  if (i == 1) {
    seq = mubar_diamond(j, n);
    target = T.vertex_of(vb(1, 2));
  } else {
    const int m = std::min(i, j) - 1;  // j-1 if i >= j, else i-1
    seq = mu_diamond(i, m, n);
    for (auto& l : mubar_diamond(j, n)) seq.push_back(l);
    for (int k = 1; k <= m; ++k) seq.push_back(vlabel(k, k, n));
    target = T.vertex_of(v(m, m));
  }
  return run_and_bracket(T, seq, target, {{v(i, 0), -1}, {vb(j, n), -1}});
}

}  // namespace qca
