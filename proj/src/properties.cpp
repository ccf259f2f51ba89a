// Randomized algebraic properties; every case is reproducible from the seed.

#include "qca/scenarios.hpp"
#include "qca/splitting.hpp"
#include "qca/surface.hpp"
#include "qca/torus.hpp"

#include <algorithm>
#include <random>

namespace qca {

namespace {

struct Gen {
  std::mt19937_64 rng;
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  OmegaScalar scalar() {
    OmegaScalar s;
    for (int t = uniform(1, 2); t > 0; --t) s += OmegaScalar::omega_pow(uniform(-4, 4), uniform(-3, 3));
    return s.is_zero() ? OmegaScalar(1) : s;
  }
  Exponent exponent(int size, int spread = 2) {
    Exponent k(size);
    for (auto& x : k) x = uniform(-spread, spread);
    return k;
  }
  TorusElement element(const FormPtr& f, int max_terms = 3) {
    TorusElement x(f);
    for (int t = uniform(1, max_terms); t > 0; --t) x.add_term(exponent(f->size()), scalar());
    return x.is_zero() ? TorusElement::unit(f) : x;
  }
  TorusElement monomial(const FormPtr& f) {
    return TorusElement::mono(f, exponent(f->size()), OmegaScalar::omega_pow(uniform(-3, 3)));
  }
};

}  // namespace

ScenarioResult run_properties(const ScenarioParams& p) {
  ScenarioResult r;
  r.certifies = "ring axioms, Weyl-bracket order invariance, exact division round trips, balanced closure, "
                "reflection is an involutive anti-automorphism commuting with splitting";
  const int n = p.n ? p.n : 3;
  r.params = "n=" + std::to_string(n) + " seed=" + std::to_string(p.seed) + " cases=" + std::to_string(p.cases);
  Gen g{std::mt19937_64(p.seed)};
  Triangulation P3(builtin_surface("P3", n)), P4(builtin_surface("P4", n)), P5(builtin_surface("P5", n));
  CutData c4 = build_cut_data(P4, Slot{0, 2});
  CutData c5 = build_cut_data(P5, P5.spec().gluings.front().first);
  const FormPtr fz = P3.z_form(), fa = P3.a_form();

  for (int c = 0; c < p.cases; ++c) {
    const std::string at = "case " + std::to_string(c);
    // scalars
    OmegaScalar s = g.scalar(), t = g.scalar(), u = g.scalar();
    r.check((s * t) * u == s * (t * u) && s * (t + u) == s * t + s * u && s * t == t * s, "scalar ring axioms " + at);
    r.check((s * t).divided_by(t) == s, "scalar division " + at, (s * t).divided_by(t).to_string(), s.to_string());
    r.check(s.reflected().reflected() == s && (s * t).reflected() == s.reflected() * t.reflected(),
            "scalar reflection " + at);

    // torus
    const FormPtr& f = c % 2 ? fz : fa;
    TorusElement x = g.element(f), y = g.element(f), z = g.element(f);
    r.check((x * y) * z == x * (y * z), "associativity " + at);
    r.check(x * (y + z) == x * y + x * z && (x + y) * z == x * z + y * z, "distributivity " + at);
    r.check(x + y == y + x && (x - x).is_zero(), "additive group " + at);
    r.check(x * TorusElement::unit(f) == x, "unit " + at);
    r.check(exact_right_divide(x * y, y) == x, "right division round trip " + at,
            exact_right_divide(x * y, y).to_string(), x.to_string());
    r.check(x.reflect().reflect() == x, "reflection involution " + at);
    r.check((x * y).reflect() == y.reflect() * x.reflect(), "reflection anti-multiplicative " + at);

    // Weyl bracket of monomials is independent of the order
    std::vector<TorusElement> ms{g.monomial(f), g.monomial(f), g.monomial(f)};
    TorusElement w0 = weyl_bracket(ms);
    std::shuffle(ms.begin(), ms.end(), g.rng);
    r.check(weyl_bracket(ms) == w0, "Weyl bracket order invariance " + at);
    std::vector<TorusElement> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(TorusElement::generator(f, g.uniform(0, f->size() - 1), g.uniform(-2, 2)));
    r.check(weyl_bracket(gens).reflect() == weyl_bracket(gens), "Weyl-ordered monomials are reflection invariant " + at);

    // balanced exponents form a subgroup, and phi sends them to integral A-exponents
    Exponent k1 = g.exponent(P3.size()), k2 = g.exponent(P3.size());
    Exponent b1(P3.size(), 0), b2(P3.size(), 0);
    for (int v = 0; v < P3.size(); ++v)
      for (int w = 0; w < P3.size(); ++w) b1[w] += k1[v] * int(P3.K()(v, w)), b2[w] += k2[v] * int(P3.K()(v, w));
    r.check(is_balanced(b1, P3.H(), n) && is_balanced(b1 + b2, P3.H(), n) && is_balanced(-b2, P3.H(), n),
            "balanced closure " + at);
    r.check(P3.phi().apply(b1) == k1, "phi psi = id on exponents " + at);

    // reflection commutes with splitting
    TorusElement x4 = g.element(P4.a_form(), 2), x5 = g.element(P5.a_form(), 2);
    r.check(split_A(c4, x4.reflect()) == split_A(c4, x4).reflect(), "reflect/split on P4 " + at);
    r.check(split_A(c5, x5.reflect()) == split_A(c5, x5).reflect(), "reflect/split on P5 " + at);
  }
  return r;
}

}  // namespace qca
