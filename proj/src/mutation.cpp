#include "qca/mutation.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qca {

namespace {
std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }
}  // namespace

IntMatrix matrix_mutate(const IntMatrix& M, int k, int scale) {
  IntMatrix R = M;
  const int N = M.rows();
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      if (u == k || v == k) {
        R(u, v) = -M(u, v);
        continue;
      }
      std::int64_t a = M(u, k), b = M(k, v);
      std::int64_t t = a * std::abs(b) + std::abs(a) * b;
      if (!t) continue;
      if (t % (2 * scale)) throw std::domain_error("matrix mutation leaves the lattice");
      R(u, v) += t / (2 * scale);
    }
  return R;
}

EF ef_matrices(const IntMatrix& D, int k, int eps) {
  const int N = D.rows();
  IntMatrix E = IntMatrix::identity(N);
  E(k, k) = -1;
  for (int i = 0; i < N; ++i) {
    if (i == k) continue;
    if (D(i, k) % 2) throw std::domain_error("half-integer Q entry at a mutable vertex");
    E(i, k) = pos(-eps * D(i, k) / 2);
  }
  return {E, E.transpose()};
}

IntMatrix pi_mutate(const IntMatrix& Pi, const IntMatrix& D, int k) {
  const int N = Pi.rows();
  IntMatrix R = Pi;
  for (int j = 0; j < N; ++j) {
    if (j == k) continue;
    std::int64_t s = -Pi(k, j);
    for (int v = 0; v < N; ++v) s += pos(D(v, k) / 2) * Pi(v, j);
    R(k, j) = s;
    R(j, k) = -s;
  }
  R(k, k) = 0;
  return R;
}

MatrixSeed MatrixSeed::from(const Triangulation& T) {
  MatrixSeed m;
  m.n = T.n();
  m.D = T.D();
  m.H = T.H();
  m.Pi = T.Pi();
  m.mut.resize(T.size());
  for (int v = 0; v < T.size(); ++v) m.mut[v] = T.is_mutable(v);
  return m;
}

void MatrixSeed::mutate(int k) {
  if (k < 0 || k >= int(mut.size()) || !mut[k]) throw std::invalid_argument("mutation at a frozen vertex");
  IntMatrix Pi2 = pi_mutate(Pi, D, k);
  D = matrix_mutate(D, k, 2);
  H = matrix_mutate(H, k, 1);
  Pi = std::move(Pi2);
}

IntMatrix MatrixSeed::K() const {
  auto K = scaled_inverse(H, n);
  if (!K) throw std::domain_error("n*H^{-1} not integral");
  return *K;
}

int MatrixSeed::q(int u, int v) const {
  if (D(u, v) % 2) throw std::domain_error("half-integer Q entry");
  return int(D(u, v) / 2);
}

QuantumSeed QuantumSeed::initial(const Triangulation& T) {
  QuantumSeed s;
  s.m_ = MatrixSeed::from(T);
  s.form_ = T.a_form();
  for (int v = 0; v < T.size(); ++v) s.vars_.push_back(TorusElement::generator(s.form_, v));
  return s;
}

TorusElement QuantumSeed::monomial(const Exponent& b) const {
  const int N = int(vars_.size());
  // xi^{-1/2 sum_{i<j} b_i b_j Pi(i,j)}  ->  doubled w-exponent -n * sum
  std::int64_t tw = 0;
  for (int i = 0; i < N; ++i)
    if (b[i])
      for (int j = i + 1; j < N; ++j)
        if (b[j]) tw += std::int64_t(b[i]) * b[j] * m_.Pi(i, j);
  TorusElement r = TorusElement::unit(form_) * OmegaScalar::omega_pow(-m_.n * tw);
  for (int i = 0; i < N; ++i) {
    if (!b[i]) continue;
    if (b[i] < 0) throw std::invalid_argument("negative exponent on a cluster variable");
    for (int e = 0; e < b[i]; ++e) r = r * vars_[i];
  }
  return r;
}

QuantumSeed QuantumSeed::mutate(int k) const {
  if (k < 0 || k >= int(vars_.size()) || !m_.mut[k]) throw std::invalid_argument("mutation at a frozen vertex");
  const int N = int(vars_.size());
  Exponent bp(N, 0), bm(N, 0);
  for (int j = 0; j < N; ++j) {
    int qjk = m_.q(j, k);
    bp[j] = int(pos(qjk));
    bm[j] = int(pos(-qjk));
  }
  // A'_k = (xi^{1/2 b+ Pi e_k} M(b+) + xi^{1/2 b- Pi e_k} M(b-)) A_k^{-1}
  auto shift = [&](const Exponent& b) {
    std::int64_t s = 0;
    for (int j = 0; j < N; ++j) s += std::int64_t(b[j]) * m_.Pi(j, k);
    return m_.n * s;
  };
  TorusElement num = monomial(bp) * OmegaScalar::omega_pow(shift(bp)) +
                     monomial(bm) * OmegaScalar::omega_pow(shift(bm));
  QuantumSeed r = *this;
  try {
    r.vars_[k] = exact_right_divide(num, vars_[k]);
  } catch (const std::domain_error&) {
    throw std::domain_error("exchange relation is not Laurent (not divisible)");
  }
  r.m_.mutate(k);
  r.history_.push_back(k);
  return r;
}

QuantumSeed QuantumSeed::mutate(const std::vector<int>& seq) const {
  QuantumSeed s = *this;
  for (int k : seq) s = s.mutate(k);
  return s;
}

// ---- fractions --------------------------------------------------------------

TorusElement BinomialFraction::factor(std::int64_t shift) const {
  return TorusElement::unit(num.form()) + TorusElement::mono(num.form(), base, OmegaScalar::omega_pow(shift));
}

TorusElement BinomialFraction::denominator() const {
  TorusElement d = TorusElement::unit(num.form());
  for (auto s : shifts) d = d * factor(s);
  return d;
}

bool operator==(const BinomialFraction& a, const BinomialFraction& b) {
  if (a.shifts.empty() && b.shifts.empty()) return a.num == b.num;
  if (!a.shifts.empty() && !b.shifts.empty() && a.base != b.base)
    throw std::invalid_argument("comparing fractions over different bases");
  // N1 D1^{-1} = N2 D2^{-1}  <=>  N1 D2 = N2 D1   (D1, D2 commute)
  return a.num * b.denominator() == b.num * a.denominator();
}

BinomialFraction fq(const FormPtr& form, const Exponent& base, int m, int n) {
  BinomialFraction f{TorusElement::unit(form), base, {}};
  const std::int64_t q2 = 2LL * n * n;  // doubled exponent of q
  for (int r = 1; r <= std::abs(m); ++r) {
    std::int64_t sh = (m > 0 ? 1 : -1) * (2 * r - 1) * q2;
    if (m > 0) f.num = f.num * f.factor(sh);
    else f.shifts.push_back(sh);
  }
  return f;
}

BinomialFraction times(const BinomialFraction& f, const TorusElement& t) {
  BinomialFraction r = f;
  r.num = f.num * t;
  if (f.shifts.empty() || t.is_zero()) return r;
  TorusElement X = TorusElement::mono(f.num.form(), f.base);
  auto lam = commutation_exponent(X, t);  // X t = w^lam t X
  if (!lam) throw std::domain_error("factor does not q-commute with the fraction base");
  // (1 + cX)^{-1} t = t (1 + c w^lam X)^{-1}
  for (auto& s : r.shifts) s += 2 * *lam;
  return r;
}

// ---- single steps -----------------------------------------------------------

IntMatrix mu_prime_matrix(const IntMatrix& D, int k) { return ef_matrices(D, k, -1).F; }
IntMatrix nu_prime_matrix(const IntMatrix& D, int k) { return ef_matrices(D, k, -1).E; }

BinomialFraction mu_sharp_on_monomial(const FormPtr& aform, const IntMatrix& D, int k,
                                      const Exponent& t, int n) {
  const int N = aform->size();
  Exponent X(N), tp = t, ek(N, 0);
  for (int v = 0; v < N; ++v) {
    if (D(k, v) % 2) throw std::domain_error("half-integer Q entry at a mutable vertex");
    X[v] = int(D(k, v) / 2);
  }
  tp[k] = 0;
  ek[k] = 1;
  const int tk = t[k];
  // A^t = w^{-1/2 t' P tk e_k} A^{t'} A_k^{tk}
  const std::int64_t sh = -aform->pair(tp, scaled(ek, tk));
  BinomialFraction f{TorusElement::mono(aform, tp, OmegaScalar::omega_pow(sh)), X, {}};
  const std::int64_t qinv = -2LL * n * n;
  TorusElement Ak = TorusElement::generator(aform, k);
  if (tk >= 0) {
    // (A_k (1 + q^{-1} X)^{-1})^{tk}
    for (int e = 0; e < tk; ++e) {
      f = times(f, Ak);
      f.shifts.push_back(qinv);
    }
  } else {
    // ((1 + q^{-1} X) A_k^{-1})^{|tk|}
    TorusElement step = f.factor(qinv) * TorusElement::generator(aform, k, -1);
    for (int e = 0; e < -tk; ++e) f.num = f.num * step;
  }
  return f;
}

BinomialFraction nu_sharp_on_balanced(const FormPtr& zform, const IntMatrix& D, int k,
                                      const Exponent& f, int n) {
  std::int64_t s = 0;  // sum_v 2Q(k,v) f_v
  for (int v = 0; v < zform->size(); ++v) s += D(k, v) * f[v];
  if (s % (2 * n)) throw std::domain_error("exponent is not balanced at the mutated vertex");
  int m = int(s / (2 * n));
  Exponent base(zform->size(), 0);
  base[k] = n;
  BinomialFraction F = fq(zform, base, m, n);
  BinomialFraction r{TorusElement::mono(zform, f), base, F.shifts};
  r.num = r.num * F.num;
  return r;
}

// ---- labels -------------------------------------------------------------------

std::string vlabel(int i, int j, int n) {
  return "v" + (n < 10 ? std::to_string(i) + std::to_string(j) : std::to_string(i) + "_" + std::to_string(j));
}
std::string vbarlabel(int a, int b, int n) {
  return "vbar" + (n < 10 ? std::to_string(a) + std::to_string(b) : std::to_string(a) + "_" + std::to_string(b));
}

std::vector<std::string> mu_kj(int k, int j, int n) {
  std::vector<std::string> s;
  for (int l = 1; l <= j; ++l) s.push_back(vlabel(k, l, n));
  return s;
}

std::vector<std::string> mubar_kt(int k, int t, int n) {
  std::vector<std::string> s;
  for (int l = t; l >= 1; --l) s.push_back(vbarlabel(k, k + l, n));
  return s;
}

std::vector<std::string> mu_diamond(int i, int jm1, int n) {
  const int j = jm1 + 1;
  std::vector<std::string> s;
  for (int k = i - 1; k >= j; --k)
    for (auto& x : mu_kj(k, j - 1, n)) s.push_back(x);
  for (int k = j - 1; k >= 2; --k)
    for (auto& x : mu_kj(k, k - 1, n)) s.push_back(x);
  return s;
}

std::vector<std::string> mubar_diamond(int j, int n) {
  std::vector<std::string> s;
  for (int k = j - 1; k >= 1; --k)
    for (auto& x : mubar_kt(k, n - j, n)) s.push_back(x);
  return s;
}

std::vector<int> resolve(const Triangulation& T, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (auto& l : labels) out.push_back(T.vertex(l));
  return out;
}

}  // namespace qca
