#include "qca/omega.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace qca {

OmegaScalar::OmegaScalar(long long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

OmegaScalar OmegaScalar::omega_pow(std::int64_t doubled, BigInt coeff) {
  if (coeff == 0) return {};
  return OmegaScalar(std::vector<Term>{{doubled, std::move(coeff)}});
}

bool OmegaScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

OmegaScalar OmegaScalar::from_unsorted(std::vector<Term> t) {
  std::sort(t.begin(), t.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (auto& [e, c] : t) {
    if (!out.empty() && out.back().first == e)
      out.back().second += c;
    else
      out.emplace_back(e, std::move(c));
    if (out.back().second == 0) out.pop_back();
  }
  return OmegaScalar(std::move(out));
}

OmegaScalar OmegaScalar::operator+(const OmegaScalar& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      BigInt c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a, ++b;
    }
  }
  return OmegaScalar(std::move(out));
}

OmegaScalar OmegaScalar::operator-() const {
  auto t = terms_;
  for (auto& [e, c] : t) c = -c;
  return OmegaScalar(std::move(t));
}

OmegaScalar OmegaScalar::operator-(const OmegaScalar& o) const { return *this + (-o); }

OmegaScalar OmegaScalar::operator*(const OmegaScalar& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) {
    auto t = terms_;
    for (auto& [e, c] : t) e += o.terms_[0].first, c *= o.terms_[0].second;
    return OmegaScalar(std::move(t));
  }
  std::vector<Term> t;
  t.reserve(terms_.size() * o.terms_.size());
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) t.emplace_back(e1 + e2, c1 * c2);
  return from_unsorted(std::move(t));
}

OmegaScalar OmegaScalar::shifted(std::int64_t doubled) const {
  auto t = terms_;
  for (auto& [e, c] : t) e += doubled;
  return OmegaScalar(std::move(t));
}

OmegaScalar OmegaScalar::reflected() const {
  std::vector<Term> t(terms_.rbegin(), terms_.rend());
  for (auto& [e, c] : t) e = -e;
  return OmegaScalar(std::move(t));
}

OmegaScalar OmegaScalar::divided_by(const OmegaScalar& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero scalar");
  if (is_zero()) return {};
  if (d.terms_.size() == 1) {
    auto t = terms_;
    for (auto& [e, c] : t) {
      if (c % d.terms_[0].second != 0) throw std::domain_error("scalar not divisible");
      e -= d.terms_[0].first;
      c /= d.terms_[0].second;
    }
    return OmegaScalar(std::move(t));
  }
  // Laurent long division from the top; quotient exponents are confined to
  // [min(N)-min(d), max(N)-max(d)].
  const std::int64_t lo = min_exp() - d.min_exp();
  OmegaScalar rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.terms_.back();
    const auto& [de, dc] = d.terms_.back();
    std::int64_t e = re - de;
    if (e < lo || rc % dc != 0) throw std::domain_error("scalar not divisible");
    OmegaScalar qt = omega_pow(e, rc / dc);
    quot.push_back(qt.terms_[0]);
    rem -= qt * d;
  }
  return from_unsorted(std::move(quot));
}

std::string OmegaScalar::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    s += terms_[i].second.str() + "*w^{" + std::to_string(terms_[i].first) + "/2}";
  }
  return s;
}

OmegaScalar OmegaScalar::parse(const std::string& s) {
  static const std::regex term(R"(\s*(-?\d+)\*w\^\{(-?\d+)/2\}\s*)");
  std::string t = s;
  if (std::regex_match(t, std::regex(R"(\s*0\s*)"))) return {};
  std::vector<Term> out;
  size_t pos = 0;
  while (true) {
    size_t next = t.find(" + ", pos);
    std::string piece = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::smatch m;
    if (!std::regex_match(piece, m, term))
      throw std::invalid_argument("bad scalar term: '" + piece + "'");
    out.emplace_back(std::stoll(m[2]), BigInt(m[1].str()));
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return from_unsorted(std::move(out));
}

}  // namespace qca
