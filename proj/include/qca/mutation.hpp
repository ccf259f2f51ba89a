#pragma once
// Matrix mutation, quantum A-seeds with Laurent-tracked variables, and the
// two-step decompositions mu = mu# o mu' (A side) and nu = nu' o nu# (Z side).

#include "qca/surface.hpp"
#include "qca/torus.hpp"

#include <string>
#include <vector>

namespace qca {

// M'(u,v) = -M(u,v) if k in {u,v}, else M(u,v) + (M(u,k)|M(k,v)| + |M(u,k)|M(k,v)) / (2*scale).
// `scale` is the storage factor (2 for doubled Q, 1 for H).
IntMatrix matrix_mutate(const IntMatrix& M, int k, int scale = 1);

// E_{k,eps} and F_{k,eps} = E^T, built from the doubled exchange matrix D = 2Q.
struct EF {
  IntMatrix E, F;
};
EF ef_matrices(const IntMatrix& D, int k, int eps);

// Pi'(k,j) = -Pi(k,j) + sum_v [Q(v,k)]_+ Pi(v,j), symmetrically in the second slot.
IntMatrix pi_mutate(const IntMatrix& Pi, const IntMatrix& D, int k);

// Exchange data without variables; cheap enough for long flip sequences.
struct MatrixSeed {
  int n = 2;
  IntMatrix D, H, Pi;
  std::vector<bool> mut;

  static MatrixSeed from(const Triangulation& T);
  void mutate(int k);
  void mutate(const std::vector<int>& seq) {
    for (int k : seq) mutate(k);
  }
  IntMatrix K() const;  // n H^{-1}
  int q(int u, int v) const;  // Q(u,v) for pairs with an integral entry
};

class QuantumSeed {
 public:
  static QuantumSeed initial(const Triangulation& T);

  const MatrixSeed& matrices() const { return m_; }
  const FormPtr& form() const { return form_; }
  const std::vector<TorusElement>& vars() const { return vars_; }
  const TorusElement& var(int v) const { return vars_[v]; }
  const std::vector<int>& history() const { return history_; }

  // Weyl-ordered product M(b) of the current variables
  TorusElement monomial(const Exponent& b) const;
  QuantumSeed mutate(int k) const;
  QuantumSeed mutate(const std::vector<int>& seq) const;

 private:
  MatrixSeed m_;
  FormPtr form_;
  std::vector<TorusElement> vars_;
  std::vector<int> history_;
};

// ---- fractions --------------------------------------------------------------

// num * prod_i (1 + w^{shift_i/2} X)^{-1} with X = monomial of exponent `base`.
// All denominator factors are polynomials in one monomial, so they commute.
struct BinomialFraction {
  TorusElement num;
  Exponent base;
  std::vector<std::int64_t> shifts;  // doubled w-exponents

  TorusElement factor(std::int64_t shift) const;  // 1 + w^{shift/2} X
  TorusElement denominator() const;
  bool is_polynomial() const { return shifts.empty(); }
};
bool operator==(const BinomialFraction& a, const BinomialFraction& b);

// F^q(X, m) = prod_{r=1}^{|m|} (1 + q^{(2r-1)sgn m} X)^{sgn m}
BinomialFraction fq(const FormPtr& form, const Exponent& base, int m, int n);

// Right multiplication of a fraction by a torus element t that q-commutes with X.
BinomialFraction times(const BinomialFraction& f, const TorusElement& t);

// ---- single-step decompositions --------------------------------------------

// mu': exponent matrix F_{k,-} of the monomial change A'^b -> A^{bF} (Q = pre-mutation)
IntMatrix mu_prime_matrix(const IntMatrix& D, int k);
// nu': exponent matrix E_{k,-} of Z'^t -> Z^{tE}
IntMatrix nu_prime_matrix(const IntMatrix& D, int k);

// mu#(A^t) = A^t F^q(A^{Q(k,*)}, -t_k) evaluated factor by factor
BinomialFraction mu_sharp_on_monomial(const FormPtr& aform, const IntMatrix& D, int k,
                                      const Exponent& t, int n);
// nu#(Z^f) = Z^f F^q(Z^{n e_k}, m), m = (1/n) sum_v Q(k,v) f_v
BinomialFraction nu_sharp_on_balanced(const FormPtr& zform, const IntMatrix& D, int k,
                                      const Exponent& f, int n);

// ---- named subsequences (vertex labels of the quadrilateral / triangle) -----

// mu_(k;j) = mu_{kj} ... mu_{k1}: applied order v_{k1}, ..., v_{kj}
std::vector<std::string> mu_kj(int k, int j, int n);
// mubar_(k;t) = mubar_{k,k+1} ... mubar_{k,k+t}: applied order vbar_{k,k+t}, ..., vbar_{k,k+1}
std::vector<std::string> mubar_kt(int k, int t, int n);
// mu^diamond_(i;j-1)
std::vector<std::string> mu_diamond(int i, int jm1, int n);
// mubar^diamond_j
std::vector<std::string> mubar_diamond(int j, int n);
std::string vlabel(int i, int j, int n);
std::string vbarlabel(int a, int b, int n);

std::vector<int> resolve(const Triangulation& T, const std::vector<std::string>& labels);

}  // namespace qca
