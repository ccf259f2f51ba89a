#include "qca/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>

namespace qca {

IntMatrix IntMatrix::identity(int n, std::int64_t scale) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = scale;
  return m;
}

std::vector<std::int64_t> IntMatrix::row(int i) const {
  return {a_.begin() + size_t(i) * c_, a_.begin() + size_t(i + 1) * c_};
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      std::int64_t x = (*this)(i, k);
      if (!x) continue;
      for (int j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
    }
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in sum");
  IntMatrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + o.scaled(-1); }

IntMatrix IntMatrix::scaled(std::int64_t s) const {
  IntMatrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool IntMatrix::is_antisymmetric() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j <= i; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool IntMatrix::all_divisible_by(std::int64_t d) const {
  for (auto x : a_)
    if (x % d) return false;
  return true;
}

IntMatrix IntMatrix::divided_by(std::int64_t d) const {
  if (!all_divisible_by(d)) throw std::domain_error("matrix entry not divisible");
  IntMatrix m = *this;
  for (auto& x : m.a_) x /= d;
  return m;
}

std::vector<std::int64_t> IntMatrix::left_apply(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> out(c_, 0);
  for (int i = 0; i < r_; ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < c_; ++j) out[j] += v[i] * (*this)(i, j);
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "\n";
  }
  return os.str();
}

std::optional<IntMatrix> scaled_inverse(const IntMatrix& m, std::int64_t s) {
  using Q = boost::multiprecision::cpp_rational;
  const int n = m.rows();
  if (m.cols() != n) return std::nullopt;
  std::vector<std::vector<Q>> a(n, std::vector<Q>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = s;
  }
  // Gauss-Jordan
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    Q inv = 1 / a[c][c];
    for (int j = c; j < 2 * n; ++j) a[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Q f = a[i][c];
      for (int j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Q& x = a[i][n + j];
      if (denominator(x) != 1) return std::nullopt;
      out(i, j) = static_cast<std::int64_t>(numerator(x));
    }
  return out;
}

}  // namespace qca
