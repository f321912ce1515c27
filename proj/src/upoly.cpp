#include "qwhitney/upoly.hpp"

#include <stdexcept>

#include "qwhitney/errors.hpp"
#include "qwhitney/qalg.hpp"

namespace qwhitney {

namespace {

const LaurentPoly& zero_poly() {
  static const LaurentPoly zero;
  return zero;
}

void check_m(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("factorial step m must be >= 1");
}

}  // namespace

UPoly::UPoly(LaurentPoly constant) : coeffs_{std::move(constant)} { trim(); }

UPoly::UPoly(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::u_power(std::size_t power) {
  std::vector<LaurentPoly> c(power + 1);
  c[power] = LaurentPoly(1L);
  return UPoly(std::move(c));
}

const LaurentPoly& UPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_poly();
}

LaurentPoly UPoly::evaluate(const LaurentPoly& value) const {
  LaurentPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(const LaurentPoly& s, const UPoly& p) {
  std::vector<LaurentPoly> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(s * c);
  return UPoly(std::move(out));
}

TruncSeries::TruncSeries(std::size_t order) : order_(order), coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, const UPoly& p) : TruncSeries(order) {
  for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) coeffs_[i] = p.coeffs()[i];
}

const LaurentPoly& TruncSeries::coeff(std::size_t i) const {
  return i <= order_ ? coeffs_[i] : zero_poly();
}

void TruncSeries::set_coeff(std::size_t i, LaurentPoly value) {
  if (i > order_) throw std::out_of_range("TruncSeries::set_coeff beyond order");
  coeffs_[i] = std::move(value);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("TruncSeries orders differ");
  TruncSeries out(a.order_);
  for (std::size_t i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

UPoly bracket_linear(std::int64_t c) {
  return UPoly(std::vector<LaurentPoly>{q_bracket(c), LaurentPoly::q_power(c)});
}

UPoly falling_factorial_u(std::int64_t m, std::int64_t s, std::int64_t n) {
  check_m(m);
  UPoly out(LaurentPoly(1L));
  for (std::int64_t i = 0; i < n; ++i) out = out * bracket_linear(-s - checked_mul(i, m));
  return out;
}

UPoly rising_factorial_u(std::int64_t m, std::int64_t s, std::int64_t n) {
  check_m(m);
  UPoly out(LaurentPoly(1L));
  for (std::int64_t i = 0; i < n; ++i) out = out * bracket_linear(s + checked_mul(i, m));
  return out;
}

TruncSeries useries_inverse(const TruncSeries& s) {
  const LaurentPoly& c0 = s.coeff(0);
  if (!c0.is_unit()) throw NonUnitConstantTerm("series constant term is not +-q^e");
  const auto& t0 = c0.terms()[0];
  // (+-q^e)^{-1} = +-q^{-e}
  const LaurentPoly c0_inv = LaurentPoly::monomial(t0.coeff, -t0.exponent);

  TruncSeries out(s.order());
  out.set_coeff(0, c0_inv);
  for (std::size_t n = 1; n <= s.order(); ++n) {
    LaurentPoly acc;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!s.coeff(i).is_zero()) acc += s.coeff(i) * out.coeff(n - i);
    }
    out.set_coeff(n, -(c0_inv * acc));
  }
  return out;
}

const LaurentPoly& upoly_coeff(const UPoly& p, std::size_t i) { return p.coeff(i); }

const LaurentPoly& upoly_coeff(const TruncSeries& s, std::size_t i) { return s.coeff(i); }

std::string to_string(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p.coeffs()[i]) + ")*u^" + std::to_string(i);
  }
  return out;
}

}  // namespace qwhitney
