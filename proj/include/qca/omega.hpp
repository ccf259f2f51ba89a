#pragma once
// Ground ring R = Z[w^{+-1/2}].  Exponents are stored doubled: w^{k/2} <-> k.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qca {

using BigInt = boost::multiprecision::cpp_int;

class OmegaScalar {
 public:
  using Term = std::pair<std::int64_t, BigInt>;  // (doubled exponent, coefficient)

  OmegaScalar() = default;
  OmegaScalar(long long c);  // NOLINT: integers embed as c*w^0
  static OmegaScalar omega_pow(std::int64_t doubled, BigInt coeff = 1);

  // xi = w^n, q = w^{n^2}; arguments are ordinary exponents
  static OmegaScalar xi_pow(int n, std::int64_t k) { return omega_pow(2 * n * k); }
  static OmegaScalar q_pow(int n, std::int64_t k) { return omega_pow(2LL * n * n * k); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::int64_t min_exp() const { return terms_.front().first; }
  std::int64_t max_exp() const { return terms_.back().first; }

  OmegaScalar operator+(const OmegaScalar& o) const;
  OmegaScalar operator-(const OmegaScalar& o) const;
  OmegaScalar operator-() const;
  OmegaScalar operator*(const OmegaScalar& o) const;
  OmegaScalar& operator+=(const OmegaScalar& o) { return *this = *this + o; }
  OmegaScalar& operator-=(const OmegaScalar& o) { return *this = *this - o; }
  OmegaScalar& operator*=(const OmegaScalar& o) { return *this = *this * o; }

  // multiply by w^{doubled/2}
  OmegaScalar shifted(std::int64_t doubled) const;
  // w^{1/2} -> w^{-1/2}
  OmegaScalar reflected() const;
  // exact quotient in R; throws std::domain_error if o does not divide *this
  OmegaScalar divided_by(const OmegaScalar& o) const;

  bool operator==(const OmegaScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const OmegaScalar& o) const { return !(*this == o); }
  bool operator<(const OmegaScalar& o) const { return terms_ < o.terms_; }

  // "c*w^{p/2}" terms joined by " + ", ascending exponent; "0" for zero
  std::string to_string() const;
  static OmegaScalar parse(const std::string& s);

 private:
  explicit OmegaScalar(std::vector<Term> t) : terms_(std::move(t)) {}
  static OmegaScalar from_unsorted(std::vector<Term> t);
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

}  // namespace qca
