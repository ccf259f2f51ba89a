// Unit tests.  Expected values are worked out by hand or taken from explicit
// formulas, never from the code under test.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qca/mutation.hpp"
#include "qca/splitting.hpp"
#include "qca/surface.hpp"
#include "qca/torus.hpp"
#include "qca/trace.hpp"

using namespace qca;

namespace {

FormPtr plane(int q2) {  // two generators with D(0,1) = q2
  IntMatrix D(2, 2);
  D(0, 1) = q2;
  D(1, 0) = -q2;
  return make_form({"x", "y"}, D);
}

TorusElement mono(const Triangulation& T, std::vector<std::pair<std::string, int>> f, OmegaScalar c = 1) {
  Exponent k(T.size(), 0);
  for (auto& [l, e] : f) k[T.vertex(l)] += e;
  return TorusElement::mono(T.a_form(), k, c);
}

}  // namespace

TEST_CASE("ring Z[w^{1/2}]") {
  OmegaScalar h = OmegaScalar::omega_pow(1);  // w^{1/2}
  OmegaScalar a = OmegaScalar(1) + h;
  CHECK((a * a).to_string() == "1*w^{0/2} + 2*w^{1/2} + 1*w^{2/2}");
  CHECK((a * a).divided_by(a) == a);
  CHECK_THROWS_AS(OmegaScalar(3).divided_by(OmegaScalar(2)), std::domain_error);
  CHECK(h.reflected() == OmegaScalar::omega_pow(-1));
  CHECK(OmegaScalar::xi_pow(3, 1) == OmegaScalar::omega_pow(6));
  CHECK(OmegaScalar::q_pow(2, 1) == OmegaScalar::omega_pow(8));
  CHECK(OmegaScalar::parse("2*w^{3/2} + -1*w^{0/2}") == OmegaScalar::omega_pow(3, 2) - OmegaScalar(1));
}

TEST_CASE("quantum torus twist") {
  auto f = plane(2);  // Q(x,y) = 1
  auto x = TorusElement::generator(f, 0), y = TorusElement::generator(f, 1);
  // x y = w^{Q(x,y)} Z^{(1,1)},  y x = w^{-Q(x,y)} Z^{(1,1)}
  CHECK(x * y == TorusElement::mono(f, {1, 1}, OmegaScalar::omega_pow(2)));
  CHECK(y * x == TorusElement::mono(f, {1, 1}, OmegaScalar::omega_pow(-2)));
  CHECK(*commutation_exponent(x, y) == 2);
  CHECK(weyl_bracket({x, y}) == TorusElement::mono(f, {1, 1}));
  CHECK(weyl_bracket({y, x}) == weyl_bracket({x, y}));
  // (x + y)^2 = x^2 + (w + w^{-1}) Z^{(1,1)} + y^2
  auto s = (x + y) * (x + y);
  CHECK(s.size() == 3);
  CHECK(s.terms().at({1, 1}) == OmegaScalar::omega_pow(2) + OmegaScalar::omega_pow(-2));
  CHECK(exact_right_divide(s, x + y) == x + y);
  CHECK((x * y).reflect() == y.reflect() * x.reflect());
}

TEST_CASE("monomial map checks the morphism condition") {
  auto f = plane(2), g = plane(4);
  IntMatrix I = IntMatrix::identity(2);
  CHECK_THROWS_AS(MonomialMap(f, g, I), std::domain_error);
  IntMatrix L(2, 2);
  L(0, 0) = 2, L(1, 1) = 1;  // (2x)D(y) = 2 * 2 = 4
  CHECK_NOTHROW(MonomialMap(g, f, L));
}

TEST_CASE("triangle n=2 by hand") {
  Triangulation T(builtin_surface("P3", 2));
  REQUIRE(T.size() == 3);
  CHECK(T.mutable_vertices().empty());
  // the three midpoints form one small interior triangle: full arrows
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) CHECK(std::abs(T.D()(a, b)) == 2);
  CHECK(T.H() * T.K() == IntMatrix::identity(3, 2));
}

TEST_CASE("K from the triangle formula is n H^{-1}") {
  for (int n = 2; n <= 8; ++n) {
    Triangulation T(builtin_surface("P3", n));
    auto K = scaled_inverse(T.H(), n);
    REQUIRE(K);
    for (int v = 0; v < T.size(); ++v)
      for (int w = 0; w < T.size(); ++w) {
        auto k = Triangulation::triangle_K(T.rep(v), T.rep(w));
        if (k) CHECK((*K)(v, w) == *k);
      }
  }
}

TEST_CASE("P_lambda has entries in nZ and Pi = P/n") {
  for (int n = 2; n <= 4; ++n) {
    Triangulation T(builtin_surface("P4", n));
    CHECK(T.P().all_divisible_by(n));
    CHECK(T.P().divided_by(n) == T.Pi());
  }
}

TEST_CASE("flip sequence lengths (n^3-n)/6") {
  const int expect[] = {0, 0, 1, 4, 10, 20, 35};
  for (int n = 2; n <= 6; ++n) {
    Triangulation T(builtin_surface("P4", n));
    CHECK(flip_sequence(T, Slot{0, 2}).size() == size_t(expect[n]));
  }
}

TEST_CASE("mutation at v21 of the triangle, n=4") {
  Triangulation T(builtin_surface("P3", 4));
  auto s = QuantumSeed::initial(T).mutate(T.vertex("v21"));
  // mu_21(A_21) = [A10 A22 A31 A21^-1] + [A11 A20 A32 A21^-1]
  auto want = mono(T, {{"v10", 1}, {"v22", 1}, {"v31", 1}, {"v21", -1}}) +
              mono(T, {{"v11", 1}, {"v20", 1}, {"v32", 1}, {"v21", -1}});
  CHECK(s.var(T.vertex("v21")) == want);
  CHECK(s.mutate(T.vertex("v21")).var(T.vertex("v21")) == QuantumSeed::initial(T).var(T.vertex("v21")));
}

TEST_CASE("C_32 for n=4") {
  Triangulation T(builtin_surface("P3", 4));
  auto want = mono(T, {{"v10", 1}, {"v31", 1}, {"v30", -1}, {"v21", -1}}) +
              mono(T, {{"v32", 1}, {"v22", -1}, {"v21", -1}, {"v11", 1}, {"v30", -1}, {"v20", 1}});
  CHECK(cluster_formula_C(T, 3, 2) == want);
  CHECK(T.phi()(trace_corner_Z(T, 3, 2)) == want);
  // C_32 = [mu_21(A_21) A30^-1 A22^-1]
  auto s = QuantumSeed::initial(T).mutate(T.vertex("v21"));
  CHECK(weyl_bracket({s.var(T.vertex("v21")), mono(T, {{"v30", -1}, {"v22", -1}})}) == want);
}

TEST_CASE("corner arc base cases") {
  Triangulation T(builtin_surface("P3", 3));
  // a single path, hence a single monomial
  auto c11 = T.phi()(trace_corner_Z(T, 1, 1));
  CHECK(c11.size() == 1);
  CHECK(c11 == cluster_formula_C(T, 1, 1));
  // |P(i,j)| = C(i-1, j-1)
  for (int i = 1; i <= 3; ++i) CHECK(enumerate_paths(T, i, 1).size() == 1);
  CHECK(enumerate_paths(T, 3, 2).size() == 2);
  CHECK(enumerate_paths(T, 2, 3).empty());
}

TEST_CASE("splitting the quadrilateral along the diagonal, n=2") {
  Triangulation T(builtin_surface("P4", 2));
  CutData c = build_cut_data(T, Slot{0, 2});
  CHECK(c.split->components() == 2);
  CHECK(check_split_conditions(c).ok());
  // the diagonal midpoint v11 splits into its two copies
  auto img = split_A(c, mono(T, {{"v11", 1}}));
  CHECK(img.size() == 1);
  const auto& k = img.terms().begin()->first;
  CHECK(k[c.copy1(0)] == 1);
  CHECK(k[c.copy2(0)] == 1);
  CHECK(!check_split_conditions(build_cut_data(T, Slot{0, 2}, FanCopy::Same)).psi_compatible);
}
