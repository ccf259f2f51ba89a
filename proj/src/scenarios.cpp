#include "qca/scenarios.hpp"

#include "qca/mutation.hpp"
#include "qca/splitting.hpp"
#include "qca/surface.hpp"
#include "qca/trace.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace qca {

void ScenarioResult::check(bool ok, const std::string& what, const std::string& lhs, const std::string& rhs) {
  ++checks;
  if (ok) return;
  pass = false;
  if (failures.size() < 40) failures.push_back({what, lhs, rhs});
}

namespace {

using Range = std::pair<int, int>;

Range n_range(const ScenarioParams& p, int lo, int hi, int cap) {
  if (p.max_n) hi = std::max(lo, p.max_n), cap = std::max(cap, p.max_n);
  if (p.n) {
    if (p.n < lo || p.n > cap) throw std::invalid_argument("n out of range for this scenario");
    return {p.n, p.n};
  }
  return {lo, hi};
}

std::string nstr(Range r) { return r.first == r.second ? "n=" + std::to_string(r.first) : "n=" + std::to_string(r.first) + ".." + std::to_string(r.second); }

long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::string ij(const std::string& s, int i, int j) { return s + "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

FormPtr zform_of(const Triangulation& T, const MatrixSeed& m) { return make_form(T.labels(), m.D); }
FormPtr aform_of(const Triangulation& T, const MatrixSeed& m) { return make_form(T.labels(), m.Pi.scaled(m.n)); }

// ---- bundle ------------------------------------------------------------------

ScenarioResult bundle(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "HK = nI, P in nZ, Q/P/Pi antisymmetric, sum_k Q(k,u) Pi(k,v) = 2n delta(u,v) for mutable u";
  Range nr = n_range(p, 2, 6, 10);
  std::vector<std::string> names = p.surface.empty() ? builtin_surface_names() : std::vector<std::string>{p.surface};
  for (auto& name : names)
    for (int n = nr.first; n <= nr.second; ++n) {
      Triangulation T(builtin_surface(name, n));
      auto bad = check_bundle(T);
      std::string joined;
      for (auto& b : bad) joined += b + "; ";
      r.check(bad.empty(), name + " n=" + std::to_string(n), joined, "");
      r.notes.push_back(name + " n=" + std::to_string(n) + ": " + std::to_string(T.size()) + " vertices");
    }
  r.params = nstr(nr);
  return r;
}

// ---- flip --------------------------------------------------------------------

ScenarioResult flip_scenario(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "the (n^3-n)/6 mutations of the flip sequence turn Q and H of P4 into those of the flipped triangulation";
  Range nr = n_range(p, 2, 5, 7);
  for (int n = nr.first; n <= nr.second; ++n) {
    Triangulation T(builtin_surface("P4", n));
    Slot diag{0, 2};
    auto seq = flip_sequence(T, diag);
    r.check(int(seq.size()) == (n * n * n - n) / 6, "sequence length n=" + std::to_string(n),
            std::to_string(seq.size()), std::to_string((n * n * n - n) / 6));
    r.notes.push_back("n=" + std::to_string(n) + ": sequence length " + std::to_string(seq.size()));
    auto fr = flip(T, diag);
    Triangulation T2(fr.spec);
    MatrixSeed m = MatrixSeed::from(T);
    m.mutate(seq);
    bool q = true, h = true;
    for (int a = 0; a < T2.size(); ++a)
      for (int b = 0; b < T2.size(); ++b) {
        int oa = fr.old_of_new[a], ob = fr.old_of_new[b];
        q = q && m.D(oa, ob) == T2.D()(a, b);
        h = h && m.H(oa, ob) == T2.H()(a, b);
      }
    r.check(q, "Q after flip sequence, n=" + std::to_string(n));
    r.check(h, "H after flip sequence, n=" + std::to_string(n));
  }
  r.params = nstr(nr);
  return r;
}

// ---- mutation algebra -----------------------------------------------------------

ScenarioResult involution(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "mu_k is an involution on quantum seeds; mutated variables quasi-commute with exponents n Pi'; "
                "E/F matrix identities and H Pi H^T = 2nQ along every prefix of the flip sequence";
  Range nr = n_range(p, 2, 4, 5);
  for (int n = nr.first; n <= nr.second; ++n) {
    Triangulation T(builtin_surface("P4", n));
    auto seq = flip_sequence(T, Slot{0, 2});
    const IntMatrix QPi0 = T.D() * T.Pi();
    QuantumSeed s = QuantumSeed::initial(T);
    const int N = T.size();
    const IntMatrix I = IntMatrix::identity(N);
    for (size_t step = 0; step < seq.size(); ++step) {
      const int k = seq[step];
      const std::string at = "n=" + std::to_string(n) + " step " + std::to_string(step) + " k=" + T.labels()[k];
      const MatrixSeed& mv = s.matrices();
      MatrixSeed mu = mv;
      mu.mutate(k);
      for (int eps : {1, -1}) {
        EF ef = ef_matrices(mv.D, k, eps);
        const std::string e = at + (eps > 0 ? " eps=+" : " eps=-");
        r.check(mu.D == ef.E * mv.D * ef.F, "Q^u = E Q^v F, " + e);
        r.check(mu.Pi == ef.F * mv.Pi * ef.E, "Pi^u = E^T Pi^v E, " + e);
        r.check(mu.H == ef.E * mv.H * ef.F, "H^u = E H^v F, " + e);
        r.check(ef.E * ef.E == I && ef.F * ef.F == I, "E^2 = F^2 = I, " + e);
      }
      EF em = ef_matrices(mv.D, k, -1), ep = ef_matrices(mv.D, k, 1);
      IntMatrix EE = em.E * ep.E;
      r.check(EE.transpose() * mv.Pi * EE == mv.Pi, "(E- E+)^T Pi (E- E+) = Pi, " + at);
      {
        // rows of the exchange part only: frozen rows of Q are not tracked by mutation
        IntMatrix QPi = mv.D * mv.Pi;
        bool same = true;
        for (int u : T.mutable_vertices())
          for (int v = 0; v < N; ++v) same = same && QPi(u, v) == QPi0(u, v);
        r.check(same, "Q^v Pi^v = Q Pi on mutable rows, " + at);
      }
      r.check(scaled_inverse(mv.H, n).has_value(), "K^v = n (H^v)^{-1} integral, " + at);
      r.check(mv.H * mv.Pi * mv.H.transpose() == mv.D.scaled(n), "H Pi H^T = 2nQ, " + at);
      // quantum seed: involution and quasi-commutation of the new cluster
      QuantumSeed s1 = s.mutate(k);
      QuantumSeed s2 = s1.mutate(k);
      bool same = s2.matrices().D == mv.D && s2.matrices().Pi == mv.Pi && s2.matrices().H == mv.H;
      for (int v = 0; v < N && same; ++v) same = s2.var(v) == s.var(v);
      r.check(same, "mu_k mu_k = id, " + at);
      for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
          if (a != k && b != k) continue;  // other pairs are unchanged
          auto m = commutation_exponent(s1.var(a), s1.var(b));
          std::int64_t want = n * s1.matrices().Pi(a, b);
          r.check(m && *m == want, "Lambda(A'_" + T.labels()[a] + ", A'_" + T.labels()[b] + "), " + at,
                  m ? std::to_string(*m) : "not quasi-commuting", std::to_string(want));
        }
      s = s1;
    }
  }
  r.params = nstr(nr);
  return r;
}

// ---- traces ---------------------------------------------------------------------

ScenarioResult cij(const ScenarioParams& p, bool reversed) {
  ScenarioResult r;
  r.certifies = reversed ? "reversed corner arcs: path-sum trace equals the mutation formula for Cbar_ij"
                         : "corner arcs: path-sum trace equals the mutation formula for C_ij";
  Range nr = n_range(p, 2, 5, 7);
  for (int n = nr.first; n <= nr.second; ++n) {
    Triangulation T(builtin_surface("P3", n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j) {
        const std::string name = ij(reversed ? "Cbar" : "C", i, j) + " n=" + std::to_string(n);
        TorusElement z = reversed ? trace_corner_Z_reversed(T, i, j) : trace_corner_Z(T, i, j);
        bool bal = true;
        for (auto& [k, c] : z.terms()) bal = bal && is_balanced(k, T.H(), n);
        r.check(bal, "balanced summands " + name);
        long want = reversed ? binom(n - j, n - i) : binom(i - 1, j - 1);
        r.check(long(z.terms().size()) == want, "summand count " + name, std::to_string(z.terms().size()),
                std::to_string(want));
        try {
          TorusElement a = T.phi()(z);
          TorusElement f = reversed ? cluster_formula_barC(T, i, j) : cluster_formula_C(T, i, j);
          r.check(a == f, name, a.to_string(), f.to_string());
        } catch (const std::exception& e) {
          r.check(false, name, std::string("exception: ") + e.what(), "");
        }
      }
    const int nontrivial = (n - 1) * (n - 2) / 2;
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(nontrivial) + " pairs with 1<j<i, " +
                      std::to_string(n * (n + 1) / 2 - nontrivial) + " base cases");
  }
  r.params = nstr(nr);
  return r;
}

TorusElement sum_c_cbar(const Triangulation& P3, const Triangulation& cutP4, int i, int j) {
  TorusElement rhs(cutP4.a_form());
  for (int k = 1; k <= std::min(i, j); ++k)
    rhs += embed_face(P3, cluster_formula_C(P3, i, k), cutP4, 0) *
           embed_face(P3, cluster_formula_barC(P3, j, k), cutP4, 1);
  return rhs;
}

ScenarioResult dij(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "quadrilateral: the diagonal splitting of the mutation formula for D_ij equals sum_k C_ik (x) Cbar_jk";
  Range nr = n_range(p, 2, 4, 5);
  for (int n = nr.first; n <= nr.second; ++n) {
    Triangulation T(builtin_surface("P4", n)), P3(builtin_surface("P3", n));
    CutData cd = build_cut_data(T, Slot{0, 2});
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const std::string name = ij("D", i, j) + " n=" + std::to_string(n);
        TorusElement rhs = sum_c_cbar(P3, *cd.split, i, j);
        TorusElement lhs = split_A(cd, cluster_formula_D(T, i, j));
        r.check(lhs == rhs, name, lhs.to_string(), rhs.to_string());
        // the path sum over the crossing arc gives the same split image
        TorusElement tr = split_A(cd, T.phi()(trace_p4_arc(T, 'x', i, j)));
        r.check(tr == rhs, "path sum of the crossing arc, " + name, tr.to_string(), rhs.to_string());
        if (i == 1 && j == n && !(lhs == rhs)) {
          TorusElement alt = split_A(cd, a_mono(T, {{vbarpoint(n, 0, 1, 1), 1}, {vpoint(n, 1, 0, 0), -1}}));
          if (alt == rhs)
            r.notes.push_back(name + ": split image equals that of [Abar_01 A_10^-1], not the stated "
                                     "[Abar_12 A_10^-1] (mubar^diamond_n is empty)");
        }
      }
  }
  r.params = nstr(nr);
  return r;
}

// ---- splitting ------------------------------------------------------------------

ScenarioResult split_conditions(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "splitting hypotheses (a)-(d), Q_split is a splitting of Q, and split_Z psi = psi' split_A";
  Range nr = n_range(p, 2, 5, 7);
  std::vector<std::string> names =
      p.surface.empty() ? std::vector<std::string>{"P4", "P4-flipped", "P5", "annulus", "hexagon"}
                        : std::vector<std::string>{p.surface};
  for (auto& name : names)
    for (int n = nr.first; n <= nr.second; ++n) {
      Triangulation T(builtin_surface(name, n));
      for (auto& g : T.spec().gluings) {
        const std::string at = name + " n=" + std::to_string(n) + " cut (" + std::to_string(g.first.face) + "," +
                               std::to_string(g.first.slot) + ")";
        auto rep = check_split_conditions(build_cut_data(T, g.first));
        std::string why;
        for (auto& f : rep.failures) why += f + "; ";
        r.check(rep.ok(), at, why, "");
        // the copy on the same side must be rejected
        auto neg = check_split_conditions(build_cut_data(T, g.first, FanCopy::Same));
        r.check(!neg.psi_compatible, "same-side control rejected, " + at);
      }
    }
  r.params = nstr(nr);
  return r;
}

Point across(const SurfaceSpec& sp, Slot s, const Point& p, int n) {
  auto o = *sp.partner(s);
  return slot_point(o.face, o.slot, n - p.c[(s.slot + 2) % 3], n);
}

bool is_corner_pt(const Point& p, int n) { return p.c[0] == n || p.c[1] == n || p.c[2] == n; }

ScenarioResult split_images(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "cutting a triangle off along e2: A_ij -> [A_ij (x) A''_nj]; cutting P4 along c3 and c1: "
                "A_ij -> [A_ij (x) A''_nj Abar''_0i], Abar_ij -> [Abar_ij (x) A''_ni Abar''_0j]";
  Range nr = n_range(p, 2, 5, 7);
  struct Cfg {
    const char* surface;
    int face, corner;
  };
  const Cfg cfgs[] = {{"P4", 0, 2},         {"P4-flipped", 0, 0}, {"P4-flipped", 1, 1}, {"P5", 0, 1}, {"P5", 1, 2},
                      {"P5", 1, 1},         {"P5", 2, 2},         {"hexagon", 0, 0},    {"hexagon", 2, 0}};
  for (int n = nr.first; n <= nr.second; ++n) {
    for (auto& cfg : cfgs) {
      Triangulation T(builtin_surface(cfg.surface, n));
      Slot e{cfg.face, cfg.corner};
      CutData cd = build_cut_data(T, e);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j) {
          // v_ij around corner r: (c_r, c_{r+1}, c_{r+2}) = (n-i, j, i-j); e2 is slot r
          Point v{cfg.face, {0, 0, 0}}, en{cfg.face, {0, 0, 0}};
          v.c[cfg.corner] = n - i, v.c[(cfg.corner + 1) % 3] = j, v.c[(cfg.corner + 2) % 3] = i - j;
          en.c[cfg.corner] = 0, en.c[(cfg.corner + 1) % 3] = j, en.c[(cfg.corner + 2) % 3] = n - j;
          if (is_corner_pt(v, n)) continue;
          std::vector<std::pair<Point, int>> want{{v, 1}};
          if (!is_corner_pt(en, n)) want.push_back({across(T.spec(), e, en, n), 1});
          TorusElement lhs = split_A(cd, a_mono(T, {{v, 1}})), rhs = a_mono(*cd.split, want);
          r.check(lhs == rhs,
                  std::string("e2 cut ") + cfg.surface + " face " + std::to_string(cfg.face) + " " + ij("A", i, j) +
                      " n=" + std::to_string(n),
                  lhs.to_string(), rhs.to_string());
        }
    }
    for (const char* name : {"hexagon", "annulus"}) {
      Triangulation T(builtin_surface(name, n));
      Slot c3{0, 0}, c1{1, 0};
      CutData cd1 = build_cut_data(T, c3);
      std::optional<CutData> cd2;
      if (std::string(name) == "hexagon") cd2 = build_cut_data(*cd1.split, c1);
      const Triangulation& S = cd2 ? *cd2->split : *cd1.split;
      auto image = [&](const TorusElement& x) { return cd2 ? split_A(*cd2, split_A(cd1, x)) : split_A(cd1, x); };
      auto one = [&](const Point& v, const Point& en, const Point& eb, const std::string& what) {
        std::vector<std::pair<Point, int>> want{{v, 1}};
        if (!is_corner_pt(en, n)) want.push_back({across(T.spec(), c3, en, n), 1});
        if (!is_corner_pt(eb, n)) want.push_back({across(T.spec(), c1, eb, n), 1});
        TorusElement lhs = image(a_mono(T, {{v, 1}})), rhs = a_mono(S, want);
        r.check(lhs == rhs, std::string(name) + " " + what + " n=" + std::to_string(n), lhs.to_string(),
                rhs.to_string());
      };
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j) {
          Point v = vpoint(n, i, j, 0);
          if (!is_corner_pt(v, n)) one(v, vpoint(n, n, j, 0), vbarpoint(n, 0, i, 1), ij("A", i, j));
        }
      for (int a = 0; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
          Point v = vbarpoint(n, a, b, 1);
          if (!is_corner_pt(v, n)) one(v, vpoint(n, n, a, 0), vbarpoint(n, 0, b, 1), ij("Abar", a, b));
        }
    }
  }
  r.params = nstr(nr);
  return r;
}

// ---- compatibility of A- and Z-mutation ----------------------------------------------

template <class F>
void along_flip(int n, F&& body) {
  Triangulation T(builtin_surface("P4", n));
  auto seq = flip_sequence(T, Slot{0, 2});
  MatrixSeed m = MatrixSeed::from(T);
  for (size_t step = 0; step <= seq.size(); ++step) {
    for (int k : T.mutable_vertices()) body(T, m, k, step);
    if (step < seq.size()) m.mutate(seq[step]);
  }
}

ScenarioResult compat_step1(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "phi^v nu'_k = mu'_k phi^u on the balanced Z-lattice (basis: rows of K^u)";
  Range nr = n_range(p, 2, 4, 5);
  for (int n = nr.first; n <= nr.second; ++n)
    along_flip(n, [&](const Triangulation& T, const MatrixSeed& mv, int k, size_t step) {
      const std::string at = "n=" + std::to_string(n) + " seed " + std::to_string(step) + " k=" + T.labels()[k];
      MatrixSeed mu = mv;
      mu.mutate(k);
      try {
        MonomialMap nu_p(zform_of(T, mu), zform_of(T, mv), nu_prime_matrix(mv.D, k));
        MonomialMap mu_p(aform_of(T, mu), aform_of(T, mv), mu_prime_matrix(mv.D, k));
        MonomialMap phi_u(zform_of(T, mu), aform_of(T, mu), mu.H, n);
        MonomialMap phi_v(zform_of(T, mv), aform_of(T, mv), mv.H, n);
        IntMatrix Ku = mu.K();
        for (int row = 0; row < Ku.rows(); ++row) {
          Exponent t(Ku.cols());
          for (int c = 0; c < Ku.cols(); ++c) t[c] = int(Ku(row, c));
          TorusElement z = TorusElement::mono(phi_u.source(), t);
          TorusElement lhs = phi_v(nu_p(z)), rhs = mu_p(phi_u(z));
          r.check(lhs == rhs, at + " basis row " + T.labels()[row], lhs.to_string(), rhs.to_string());
        }
      } catch (const std::exception& e) {
        r.check(false, at, std::string("exception: ") + e.what(), "");
      }
    });
  r.params = nstr(nr);
  return r;
}

ScenarioResult compat_step2(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "phi^v nu#_k = mu#_k phi^v on balanced monomials (fractions compared after clearing denominators)";
  Range nr = n_range(p, 2, 4, 5);
  long pos = 0, neg = 0;
  for (int n = nr.first; n <= nr.second; ++n)
    along_flip(n, [&](const Triangulation& T, const MatrixSeed& mv, int k, size_t step) {
      const std::string at = "n=" + std::to_string(n) + " seed " + std::to_string(step) + " k=" + T.labels()[k];
      try {
        FormPtr zf = zform_of(T, mv), af = aform_of(T, mv);
        MonomialMap phi(zf, af, mv.H, n);
        IntMatrix K = mv.K();
        for (int row = 0; row < K.rows(); ++row) {
          Exponent f(K.cols());
          for (int c = 0; c < K.cols(); ++c) f[c] = int(K(row, c));
          BinomialFraction z = nu_sharp_on_balanced(zf, mv.D, k, f, n);
          BinomialFraction lhs{phi(z.num), phi.apply(z.base), z.shifts};
          Exponent s = phi.apply(f);
          BinomialFraction rhs = mu_sharp_on_monomial(af, mv.D, k, s, n);
          (s[k] <= 0 ? pos : neg) += 1;  // s_k = -m
          r.check(lhs == rhs, at + " basis row " + T.labels()[row], lhs.num.to_string(), rhs.num.to_string());
        }
      } catch (const std::exception& e) {
        r.check(false, at, std::string("exception: ") + e.what(), "");
      }
    });
  r.notes.push_back("monomials with m >= 0: " + std::to_string(pos) + ", with m < 0: " + std::to_string(neg));
  r.params = nstr(nr);
  return r;
}

// ---- quiver shapes ------------------------------------------------------------------

ScenarioResult appendix_quivers(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "adjacency of v21, v_{j,j-1} and the v_kk chain after the mutation subsequences used for C_ij and D_ij";
  Range nr = n_range(p, 2, 6, 7);
  // compare row `at` of Q' (undoubled, via D/2) with the expected nonzero entries
  struct RowDiff {
    bool ok = true;
    std::string got, exp;
  };
  auto row_match = [](const Triangulation& T, const MatrixSeed& m, const std::string& at,
                      const std::map<std::string, int>& want, const std::vector<std::string>& skip) {
    const int a = T.vertex(at);
    std::vector<int> expect(T.size(), 0);
    std::vector<bool> skipped(T.size(), false);
    // at the top of the range some named neighbours (e.g. vbar_{n-1,n+1}) do not exist
    for (auto& [l, w] : want)
      if (auto id = T.find_vertex(l)) expect[*id] = w;
    for (auto& l : skip) skipped[T.vertex(l)] = true;
    RowDiff d;
    for (int v = 0; v < T.size(); ++v) {
      if (skipped[v]) continue;
      const std::int64_t q2 = m.D(a, v);
      if (q2 != 2 * expect[v]) d.ok = false;
      if (q2) d.got += T.labels()[v] + ":" + (q2 % 2 ? std::to_string(q2) + "/2" : std::to_string(q2 / 2)) + " ";
      if (expect[v]) d.exp += T.labels()[v] + ":" + std::to_string(expect[v]) + " ";
    }
    return d;
  };
  auto row_check = [&](const Triangulation& T, const MatrixSeed& m, const std::string& at,
                       const std::map<std::string, int>& want, const std::vector<std::string>& skip,
                       const std::string& name) {
    RowDiff d = row_match(T, m, at, want, skip);
    r.check(d.ok, name, d.got, d.exp);
  };
  long literal_misses = 0, explained = 0;
  for (int n = nr.first; n <= nr.second; ++n) {
    Triangulation T(builtin_surface("P3", n));
    auto v = [n](int i, int j) { return vlabel(i, j, n); };
    auto seeded = [&](const std::vector<std::string>& seq) {
      MatrixSeed m = MatrixSeed::from(T);
      m.mutate(resolve(T, seq));
      return m;
    };
    const std::string ns = " n=" + std::to_string(n);
    for (int i = 4; i <= n; ++i) {
      std::vector<std::string> seq;
      for (int k = i - 1; k >= 3; --k) seq.push_back(v(k, 1));
      row_check(T, seeded(seq), v(2, 1), {{v(1, 0), -1}, {v(2, 2), -1}, {v(i, 1), -1}, {v(1, 1), 1}, {v(3, 1), 1}},
                {}, "v21 row after mu_31..mu_{i-1,1}, i=" + std::to_string(i) + ns);
    }
    for (int j = 3; j + 1 <= n; ++j)
      row_check(T, seeded(mu_kj(j, j - 1, n)), v(j, j - 1),
                {{v(j, j), 1}, {v(j, j - 2), 1}, {v(j, 0), -1}, {v(j - 1, j - 1), -1}, {v(j + 1, j), -1}}, {},
                "v_{j,j-1} row after mu_(j;j-1), j=" + std::to_string(j) + ns);
    for (int j = 3; j + 2 <= n; ++j)
      for (int i = j + 2; i <= n; ++i) {
        std::vector<std::string> seq;
        for (int k = i - 1; k >= j; --k)
          for (auto& l : mu_kj(k, j - 1, n)) seq.push_back(l);
        row_check(T, seeded(seq), v(j, j - 1),
                  {{v(j + 1, j - 1), -1}, {v(j - 1, j - 1), -1}, {v(j, j - 2), 1}, {v(j, j), 1}}, {},
                  "v_{j,j-1} row after mu_(j;j-1)..mu_(i-1;j-1), i=" + std::to_string(i) + " j=" + std::to_string(j) +
                      ns);
      }
    // quadrilateral.  The literal row statements are checked as written; each
    // mismatch is then compared with the pattern the two triangle halves give:
    //   v_{j-1,j-1}: -1 at vbar_{j-1,j} (not vbar_{j-1,j+1}); for i = j the v-side
    //                neighbour is v_{j-1,0} and v_jj joins with +1 (j < n);
    //   j = n:       mubar^diamond_n is empty, so the vbar side keeps its initial arrows.
    Triangulation Q4(builtin_surface("P4", n));
    auto vb = [n](int a, int b) { return vbarlabel(a, b, n); };
    for (int j = 2; j <= n; ++j)
      for (int i = j; i <= n; ++i) {
        auto seq = mu_diamond(i, j - 1, n);
        for (auto& l : mubar_diamond(j, n)) seq.push_back(l);
        MatrixSeed m = MatrixSeed::from(Q4);
        m.mutate(resolve(Q4, seq));
        const std::string at = " i=" + std::to_string(i) + " j=" + std::to_string(j) + ns;
        std::vector<std::string> chain;
        for (int k = 1; k <= j - 1; ++k) chain.push_back(v(k, k));
        bool lin = true;
        std::int64_t dir = 0;
        for (int a = 0; a < int(chain.size()); ++a)
          for (int b = a + 1; b < int(chain.size()); ++b) {
            std::int64_t q2 = m.D(Q4.vertex(chain[a]), Q4.vertex(chain[b]));
            if (b == a + 1) {
              if (std::abs(q2) != 2 || (dir && q2 != dir)) lin = false;
              dir = q2;
            } else if (q2) {
              lin = false;
            }
          }
        r.check(lin, "v_kk chain is linear type A" + at);
        if (j == 2) {
          // v11 is both the first and the last chain vertex; the two row statements conflict
          std::string got;
          for (int w = 0; w < Q4.size(); ++w)
            if (std::int64_t q2 = m.D(Q4.vertex(v(1, 1)), w)) got += Q4.labels()[w] + ":" + std::to_string(q2 / 2) + " ";
          r.notes.push_back("Q'(v11,-) at" + at + ": " + got);
          continue;
        }
        auto both = [&](int k, const std::map<std::string, int>& literal, const std::string& name) {
          std::map<std::string, int> obs;
          // v side
          if (k == 1) obs[v(2, 1)] += 1, obs[v(i, 1)] -= 1;
          else if (k < j - 1) obs[v(k + 1, k)] += 1, obs[v(k, k - 1)] -= 1;
          if (k == j - 1) {
            obs[v(k, k - 1)] -= 1;
            obs[i > j ? v(j, j - 1) : v(j - 1, 0)] += 1;
            if (i == j && j < n) obs[v(j, j)] += 1;
          }
          // vbar side
          if (j < n) {
            if (k == j - 1) obs[vb(k, n)] += 1, obs[vb(k, k + 1)] -= 1;
            else obs[vb(k + 1, k + 2)] += 1, obs[vb(k, k + 1)] -= 1;
          } else {
            obs[vb(k, k + 1)] += 1, obs[vb(k - 1, k)] -= 1;
          }
          std::erase_if(obs, [](auto& e) { return e.second == 0; });
          RowDiff d = row_match(Q4, m, v(k, k), literal, chain);
          r.check(d.ok, name + at, d.got, d.exp);
          if (!d.ok) {
            ++literal_misses;
            RowDiff c = row_match(Q4, m, v(k, k), obs, chain);
            if (c.ok) ++explained;
            else r.notes.push_back("unexplained: " + name + at + " got " + c.got + " pattern " + c.exp);
          }
        };
        both(1, {{v(2, 1), 1}, {vb(2, 3), 1}, {v(i, 1), -1}, {vb(1, 2), -1}}, "Q'(v11,-)");
        for (int k = 2; k < j - 1; ++k)
          both(k, {{v(k + 1, k), 1}, {vb(k + 1, k + 2), 1}, {v(k, k - 1), -1}, {vb(k, k + 1), -1}},
               "Q'(v_kk,-) k=" + std::to_string(k));
        // written as a list so a coinciding pair (j = n-1) keeps both signs visible
        std::map<std::string, int> last{{v(j, j - 1), 1}, {v(j - 1, j - 2), -1}};
        last[vb(j - 1, n)] += 1;
        last[vb(j - 1, j + 1)] -= 1;
        std::erase_if(last, [](auto& e) { return e.second == 0; });
        both(j - 1, last, "Q'(v_{j-1,j-1},-)");
      }
  }
  r.notes.push_back("quadrilateral rows: " + std::to_string(literal_misses) +
                    " literal mismatches, " + std::to_string(explained) + " match the observed triangle-half pattern");
  r.params = nstr(nr);
  return r;
}

// ---- path combinatorics -----------------------------------------------------------------

ScenarioResult path_counts(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "|P(i,j)| = C(i-1,j-1) by enumeration, and the n-1 -> n path recurrence with its monomial shifts";
  Range nr = n_range(p, 2, 8, 9);
  std::map<int, std::unique_ptr<Triangulation>> tri;
  auto P3 = [&](int n) -> const Triangulation& {
    auto& t = tri[n];
    if (!t) t = std::make_unique<Triangulation>(builtin_surface("P3", n));
    return *t;
  };
  for (int n = nr.first; n <= nr.second; ++n) {
    const Triangulation& T = P3(n);
    Network N = build_network_p3(n);
    r.check(N.acyclic(), "network acyclic n=" + std::to_string(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        long got = long(enumerate_paths(T, i, j).size()), want = j <= i ? binom(i - 1, j - 1) : 0;
        r.check(got == want, "|P" + ij("", i, j) + "| n=" + std::to_string(n), std::to_string(got),
                std::to_string(want));
      }
    if (n < 3) continue;
    const Triangulation& S = P3(n - 1);
    // iota: (a,b,c) at n-1 -> (a,b,c+1) at n
    auto iota = [&](const Exponent& k) {
      Exponent out(T.size(), 0);
      for (int v = 0; v < S.size(); ++v) {
        if (!k[v]) continue;
        Point q = S.rep(v);
        q.c[2] += 1;
        out[T.vertex_of(q)] += k[v];
      }
      return out;
    };
    auto e = [&](int i, int j) {
      Exponent x(T.size(), 0);
      int w = T.vertex_of(vpoint(n, i, j));
      if (w >= 0) x[w] = 1;
      return x;
    };
    for (int i = 3; i <= n; ++i)
      for (int j = 2; j < i; ++j) {
        std::vector<Exponent> want;
        for (auto& k : path_monomials_A(S, i - 1, j - 1)) want.push_back(j == 2 ? iota(k) + e(1, 0) : iota(k));
        for (auto& k : path_monomials_A(S, i - 1, j))
          want.push_back(iota(k) + e(j + 1, j) - e(j, j) - e(j, j - 1) + e(j - 1, j - 1));
        auto got = path_monomials_A(T, i, j);
        r.check(binom(i - 1, j - 1) == binom(i - 2, j - 2) + binom(i - 2, j - 1),
                "count recurrence " + ij("", i, j) + " n=" + std::to_string(n));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        r.check(got == want, "monomial recurrence " + ij("", i, j) + " n=" + std::to_string(n));
      }
  }
  r.params = nstr(nr);
  return r;
}

}  // namespace

ScenarioResult run_properties(const ScenarioParams& p);  // properties.cpp

std::vector<std::string> scenario_names() {
  return {"bundle",      "flip",         "involution",   "cij",          "barcij",           "dij",         "split-conditions",
          "split-images", "compat-step1", "compat-step2", "appendix-quivers", "path-counts", "properties"};
}

ScenarioResult run_scenario(const std::string& name, const ScenarioParams& p) {
  static const std::map<std::string, std::function<ScenarioResult(const ScenarioParams&)>> table{
      {"bundle", bundle},
      {"flip", flip_scenario},
      {"involution", involution},
      {"cij", [](const ScenarioParams& q) { return cij(q, false); }},
      {"barcij", [](const ScenarioParams& q) { return cij(q, true); }},
      {"dij", dij},
      {"split-conditions", split_conditions},
      {"split-images", split_images},
      {"compat-step1", compat_step1},
      {"compat-step2", compat_step2},
      {"appendix-quivers", appendix_quivers},
      {"path-counts", path_counts},
      {"properties", run_properties},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown scenario '" + name + "'");
  auto t0 = std::chrono::steady_clock::now();
  ScenarioResult r = it->second(p);
  r.id = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace qca
