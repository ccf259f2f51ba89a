#include "qca/torus.hpp"

#include <stdexcept>

namespace qca {

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
Exponent operator-(const Exponent& a) { return scaled(a, -1); }
Exponent scaled(const Exponent& a, int s) {
  Exponent r(a);
  for (auto& x : r) x *= s;
  return r;
}

SkewForm::SkewForm(std::vector<std::string> l, IntMatrix d) : labels(std::move(l)), D(std::move(d)) {
  if (D.rows() != size() || D.cols() != size()) throw std::invalid_argument("form size mismatch");
  if (!D.is_antisymmetric()) throw std::invalid_argument("form is not antisymmetric");
}

int SkewForm::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

std::int64_t SkewForm::pair(const Exponent& a, const Exponent& b) const {
  std::int64_t s = 0;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (!a[i]) continue;
    std::int64_t t = 0;
    for (int j = 0; j < n; ++j)
      if (b[j]) t += D(i, j) * b[j];
    s += a[i] * t;
  }
  return s;
}

FormPtr make_form(std::vector<std::string> labels, IntMatrix doubled) {
  return std::make_shared<const SkewForm>(std::move(labels), std::move(doubled));
}

TorusElement TorusElement::mono(FormPtr f, Exponent k, OmegaScalar c) {
  if (int(k.size()) != f->size()) throw std::invalid_argument("exponent length mismatch");
  TorusElement x(std::move(f));
  if (!c.is_zero()) x.terms_.emplace(std::move(k), std::move(c));
  return x;
}

TorusElement TorusElement::generator(FormPtr f, int v, int power) {
  Exponent k(f->size(), 0);
  k.at(v) = power;
  return mono(std::move(f), std::move(k));
}

void TorusElement::check_same(const TorusElement& o) const {
  if (form_ != o.form_ && !(form_ && o.form_ && form_->labels == o.form_->labels && form_->D == o.form_->D))
    throw std::invalid_argument("torus form mismatch");
}

void TorusElement::add_term(const Exponent& k, const OmegaScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  if (!form_) form_ = o.form_;
  check_same(o);
  for (auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  TorusElement r = *this;
  return r += o;
}

TorusElement TorusElement::operator-() const {
  TorusElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::operator*(const OmegaScalar& c) const {
  TorusElement r(form_);
  if (c.is_zero()) return r;
  for (auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
  check_same(o);
  TorusElement r(form_);
  const int n = form_->size();
  for (auto& [a, ca] : terms_) {
    // row a*D once per left term
    std::vector<std::int64_t> aD(n, 0);
    for (int i = 0; i < n; ++i)
      if (a[i])
        for (int j = 0; j < n; ++j) aD[j] += a[i] * form_->D(i, j);
    for (auto& [b, cb] : o.terms_) {
      std::int64_t tw = 0;
      for (int j = 0; j < n; ++j) tw += aD[j] * b[j];
      r.add_term(a + b, (ca * cb).shifted(tw));
    }
  }
  return r;
}

bool TorusElement::operator==(const TorusElement& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  check_same(o);
  return terms_ == o.terms_;
}

const Exponent& TorusElement::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("leading exponent of zero");
  return terms_.rbegin()->first;
}

const OmegaScalar& TorusElement::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero");
  return terms_.rbegin()->second;
}

TorusElement TorusElement::reflect() const {
  TorusElement r(form_);
  for (auto& [k, c] : terms_) r.terms_.emplace(k, c.reflected());
  return r;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ")";
    std::string m;
    for (size_t i = 0; i < k.size(); ++i)
      if (k[i]) m += (m.empty() ? "" : " ") + form_->labels[i] + "^" + std::to_string(k[i]);
    s += m.empty() ? "" : " [" + m + "]";
  }
  return s;
}

std::optional<std::int64_t> commutation_exponent(const TorusElement& x, const TorusElement& y) {
  if (x.is_zero() || y.is_zero()) throw std::domain_error("commutation exponent of zero");
  const auto& F = *x.form();
  // fast path: constant pairing over all term pairs
  std::optional<std::int64_t> m;
  bool constant = true;
  for (auto& [a, ca] : x.terms()) {
    for (auto& [b, cb] : y.terms()) {
      std::int64_t v = F.pair(a, b);
      if (!m) m = v;
      else if (*m != v) { constant = false; break; }
    }
    if (!constant) break;
  }
  if (constant) return m;
  TorusElement xy = x * y, yx = y * x;
  auto& [kx, cx] = *xy.terms().rbegin();
  auto& [ky, cy] = *yx.terms().rbegin();
  if (kx != ky || !cx.is_monomial() || !cy.is_monomial()) return std::nullopt;
  std::int64_t d = cx.terms()[0].first - cy.terms()[0].first;
  if (d % 2) return std::nullopt;
  if (xy != yx * OmegaScalar::omega_pow(d)) return std::nullopt;
  return d / 2;
}

TorusElement weyl_bracket(const std::vector<TorusElement>& xs) {
  if (xs.empty()) throw std::invalid_argument("empty Weyl bracket");
  std::int64_t shift = 0;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) {
      auto m = commutation_exponent(xs[i], xs[j]);
      if (!m) throw std::domain_error("Weyl bracket of non-quasi-commuting factors");
      shift -= *m;
    }
  TorusElement p = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) p = p * xs[i];
  return p * OmegaScalar::omega_pow(shift);
}

TorusElement exact_right_divide(const TorusElement& N, const TorusElement& d) {
  if (d.is_zero()) throw std::domain_error("division by zero");
  TorusElement q(d.form());
  if (N.is_zero()) return q;
  const auto& F = *d.form();
  const int n = F.size();
  // any quotient exponent u satisfies min_i(N) - min_i(d) <= u_i <= max_i(N) - max_i(d)
  auto bounds = [n](const TorusElement& x, Exponent& lo, Exponent& hi) {
    lo = hi = x.terms().begin()->first;
    for (auto& [k, c] : x.terms())
      for (int i = 0; i < n; ++i) lo[i] = std::min(lo[i], k[i]), hi[i] = std::max(hi[i], k[i]);
  };
  Exponent nlo, nhi, dlo, dhi;
  bounds(N, nlo, nhi);
  bounds(d, dlo, dhi);
  const Exponent& ld = d.leading_exponent();
  const OmegaScalar& lc = d.leading_coeff();
  TorusElement rem = N;
  while (!rem.is_zero()) {
    Exponent u = rem.leading_exponent() - ld;
    for (int i = 0; i < n; ++i)
      if (u[i] < nlo[i] - dlo[i] || u[i] > nhi[i] - dhi[i]) throw std::domain_error("not divisible");
    OmegaScalar c = rem.leading_coeff().shifted(-F.pair(u, ld));
    try {
      c = c.divided_by(lc);
    } catch (const std::domain_error&) {
      throw std::domain_error("not divisible");
    }
    TorusElement t = TorusElement::mono(d.form(), u, c);
    q += t;
    rem = rem - t * d;
  }
  return q;
}

bool is_balanced(const Exponent& k, const IntMatrix& H, int n) {
  std::vector<std::int64_t> v(k.begin(), k.end());
  for (auto x : H.left_apply(v))
    if (x % n) return false;
  return true;
}

MonomialMap::MonomialMap(FormPtr src, FormPtr tgt, IntMatrix L, std::int64_t den)
    : src_(std::move(src)), tgt_(std::move(tgt)), L_(std::move(L)), den_(den) {
  if (L_.rows() != src_->size() || L_.cols() != tgt_->size())
    throw std::invalid_argument("monomial map shape mismatch");
  if (L_ * tgt_->D * L_.transpose() != src_->D.scaled(den_ * den_))
    throw std::domain_error("morphism condition violated");
}

Exponent MonomialMap::apply(const Exponent& k) const {
  std::vector<std::int64_t> v(k.begin(), k.end());
  auto img = L_.left_apply(v);
  Exponent out(img.size());
  for (size_t i = 0; i < img.size(); ++i) {
    if (img[i] % den_) throw std::domain_error("non-integral image exponent");
    out[i] = static_cast<int>(img[i] / den_);
  }
  return out;
}

TorusElement MonomialMap::operator()(const TorusElement& x) const {
  TorusElement r(tgt_);
  for (auto& [k, c] : x.terms()) r.add_term(apply(k), c);
  return r;
}

TorusElement exponent_linear_map(const TorusElement& x, const IntMatrix& L, const FormPtr& target,
                                 std::int64_t den) {
  return MonomialMap(x.form(), target, L, den)(x);
}

}  // namespace qca
