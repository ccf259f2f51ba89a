#pragma once
// Quantum tori over a half-integer skew form Q, stored doubled (D = 2Q):
//   Z^a Z^b = w^{aQb^T} Z^{a+b}   i.e. the doubled w-exponent of the twist is a D b^T.

#include "qca/matrix.hpp"
#include "qca/omega.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qca {

using Exponent = std::vector<int>;

struct SkewForm {
  std::vector<std::string> labels;
  IntMatrix D;  // doubled: D(u,v) = 2 Q(u,v)

  SkewForm(std::vector<std::string> l, IntMatrix d);
  int size() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;  // -1 if absent
  // a D b^T
  std::int64_t pair(const Exponent& a, const Exponent& b) const;
};
using FormPtr = std::shared_ptr<const SkewForm>;

FormPtr make_form(std::vector<std::string> labels, IntMatrix doubled);

class TorusElement {
 public:
  using Terms = std::map<Exponent, OmegaScalar>;

  TorusElement() = default;
  explicit TorusElement(FormPtr f) : form_(std::move(f)) {}
  static TorusElement mono(FormPtr f, Exponent k, OmegaScalar c = 1);
  static TorusElement unit(FormPtr f) { return mono(f, Exponent(f->size(), 0)); }
  static TorusElement generator(FormPtr f, int v, int power = 1);

  const FormPtr& form() const { return form_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator-() const;
  TorusElement operator*(const TorusElement& o) const;
  TorusElement operator*(const OmegaScalar& c) const;
  TorusElement& operator+=(const TorusElement& o);
  bool operator==(const TorusElement& o) const;
  bool operator!=(const TorusElement& o) const { return !(*this == o); }

  // lex-maximal exponent in vertex-index order
  const Exponent& leading_exponent() const;
  const OmegaScalar& leading_coeff() const;

  TorusElement reflect() const;
  std::string to_string() const;

  void add_term(const Exponent& k, const OmegaScalar& c);

 private:
  void check_same(const TorusElement& o) const;
  FormPtr form_;
  Terms terms_;
};

// w-exponent m (ordinary, not doubled) with x y = w^m y x; nullopt if x, y do not quasi-commute.
std::optional<std::int64_t> commutation_exponent(const TorusElement& x, const TorusElement& y);

// [x1 ... xr] = w^{-1/2 sum_{i<j} m_ij} x1 ... xr; throws on a non-quasi-commuting pair.
TorusElement weyl_bracket(const std::vector<TorusElement>& xs);

// P with P * d == N; throws std::domain_error("not divisible") otherwise.
TorusElement exact_right_divide(const TorusElement& N, const TorusElement& d);

bool is_balanced(const Exponent& k, const IntMatrix& H, int n);

// Monomial-wise map Z^k -> W^{kL/den}.  The morphism condition
// den^2 D_src = L D_tgt L^T is verified at construction.
class MonomialMap {
 public:
  MonomialMap(FormPtr src, FormPtr tgt, IntMatrix L, std::int64_t den = 1);
  Exponent apply(const Exponent& k) const;  // throws on non-integral image
  TorusElement operator()(const TorusElement& x) const;
  const FormPtr& source() const { return src_; }
  const FormPtr& target() const { return tgt_; }
  const IntMatrix& matrix() const { return L_; }
  std::int64_t denominator() const { return den_; }

 private:
  FormPtr src_, tgt_;
  IntMatrix L_;
  std::int64_t den_;
};

TorusElement exponent_linear_map(const TorusElement& x, const IntMatrix& L, const FormPtr& target,
                                 std::int64_t den = 1);

Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a);
Exponent scaled(const Exponent& a, int s);

}  // namespace qca
