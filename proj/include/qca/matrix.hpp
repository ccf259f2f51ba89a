#pragma once
// Dense integer matrices.  Small sizes (a few hundred rows at most), so no
// attempt at blocking; exact rational elimination goes through cpp_rational.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qca {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, 0) {}
  static IntMatrix identity(int n, std::int64_t scale = 1);

  int rows() const { return r_; }
  int cols() const { return c_; }
  std::int64_t& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  std::vector<std::int64_t> row(int i) const;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix scaled(std::int64_t s) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const = default;

  bool is_antisymmetric() const;
  bool all_divisible_by(std::int64_t d) const;
  // entrywise exact division; throws if some entry is not divisible
  IntMatrix divided_by(std::int64_t d) const;

  // v * M for a row vector v
  std::vector<std::int64_t> left_apply(const std::vector<std::int64_t>& v) const;

  std::string to_string() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<std::int64_t> a_;
};

// s * M^{-1} if it is integral; nullopt if M is singular or the result is not integral.
std::optional<IntMatrix> scaled_inverse(const IntMatrix& m, std::int64_t s);

}  // namespace qca
