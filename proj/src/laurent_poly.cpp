#include "qwhitney/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "qwhitney/errors.hpp"

namespace qwhitney {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ExponentOverflow("exponent overflow in addition");
  }
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ExponentOverflow("exponent overflow in multiplication");
  }
  return out;
}

LaurentPoly::LaurentPoly(long value) {
  if (value != 0) terms_.push_back({0, BigCoeff(value)});
}

LaurentPoly::LaurentPoly(const BigCoeff& value) {
  if (value != 0) terms_.push_back({0, value});
}

LaurentPoly LaurentPoly::monomial(const BigCoeff& coeff, Exponent exponent) {
  if (coeff == 0) return {};
  return LaurentPoly(std::vector<Term>{{exponent, coeff}});
}

LaurentPoly LaurentPoly::q_power(Exponent exponent) { return monomial(BigCoeff(1), exponent); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return LaurentPoly(std::move(out));
}

BigCoeff LaurentPoly::coeff(Exponent exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, Exponent e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of the zero polynomial");
  return terms_.front().exponent;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of the zero polynomial");
  return terms_.back().exponent;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  if (shift == 0 || is_zero()) return *this;
  checked_add(min_exponent(), shift);
  checked_add(max_exponent(), shift);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exponent += shift;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::with_base_power(Exponent factor) const {
  if (factor < 1) throw std::invalid_argument("base power must be >= 1");
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exponent = checked_mul(t.exponent, factor);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return LaurentPoly(std::move(out));
}

namespace {

// Merge of two canonical term lists; sign selects addition or subtraction.
std::vector<LaurentPoly::Term> merge_terms(std::span<const LaurentPoly::Term> a,
                                           std::span<const LaurentPoly::Term> b, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, subtract ? BigCoeff(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      BigCoeff c = subtract ? BigCoeff(a[i].coeff - b[j].coeff) : BigCoeff(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  using Term = LaurentPoly::Term;
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() > b.size()) return b * a;

  const Exponent lo = checked_add(a.min_exponent(), b.min_exponent());
  const Exponent hi = checked_add(a.max_exponent(), b.max_exponent());

  if (a.size() == 1) {
    const Term& t = a.terms_[0];
    std::vector<Term> out = b.terms_;
    for (auto& u : out) {
      u.exponent += t.exponent;
      u.coeff *= t.coeff;
    }
    return LaurentPoly(std::move(out));
  }

  const auto products = static_cast<unsigned long long>(a.size()) * b.size();
  const auto span = static_cast<unsigned long long>(hi - lo) + 1;
  if (span <= 8 * products + 64) {
    std::vector<BigCoeff> acc(span);
    for (const Term& s : a.terms_) {
      for (const Term& t : b.terms_) {
        mpz_addmul(acc[s.exponent + t.exponent - lo].get_mpz_t(), s.coeff.get_mpz_t(),
                   t.coeff.get_mpz_t());
      }
    }
    std::vector<Term> out;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] != 0) out.push_back({lo + static_cast<Exponent>(i), std::move(acc[i])});
    }
    return LaurentPoly(std::move(out));
  }

  std::vector<Term> raw;
  raw.reserve(products);
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) raw.push_back({s.exponent + t.exponent, s.coeff * t.coeff});
  }
  return LaurentPoly::from_terms(std::move(raw));
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};

  const auto bt = b.terms();
  if (b.is_monomial()) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), bt[0].coeff.get_mpz_t())) {
        throw NonDivisible("coefficient not divisible by monomial divisor");
      }
      out.push_back({checked_add(t.exponent, -bt[0].exponent), BigCoeff(t.coeff / bt[0].coeff)});
    }
    return LaurentPoly::from_terms(std::move(out));
  }

  // Shift both operands to ordinary polynomials with nonzero constant term;
  // Laurent divisibility then coincides with divisibility in Z[q].
  const Exponent a_lo = a.min_exponent();
  const Exponent b_lo = b.min_exponent();
  const Exponent a_span = a.max_exponent() - a_lo;
  const Exponent b_span = b.max_exponent() - b_lo;
  if (a_span < b_span) throw NonDivisible("dividend degree span below divisor span");

  std::vector<BigCoeff> rem(static_cast<std::size_t>(a_span) + 1);
  for (const auto& t : a.terms()) rem[t.exponent - a_lo] = t.coeff;
  std::vector<std::pair<std::size_t, const BigCoeff*>> divisor;
  for (const auto& t : bt) divisor.emplace_back(static_cast<std::size_t>(t.exponent - b_lo), &t.coeff);
  const BigCoeff& lead = bt.back().coeff;

  const auto q_len = static_cast<std::size_t>(a_span - b_span) + 1;
  std::vector<BigCoeff> quot(q_len);
  BigCoeff step;
  for (std::size_t j = q_len; j-- > 0;) {
    BigCoeff& top = rem[j + static_cast<std::size_t>(b_span)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NonDivisible("leading coefficient does not divide remainder");
    }
    mpz_divexact(step.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (const auto& [offset, c] : divisor) {
      mpz_submul(rem[j + offset].get_mpz_t(), step.get_mpz_t(), c->get_mpz_t());
    }
    quot[j] = step;
  }
  for (const auto& r : rem) {
    if (r != 0) throw NonDivisible("nonzero remainder");
  }

  const Exponent q_lo = checked_add(a_lo, -b_lo);
  std::vector<LaurentPoly::Term> out;
  for (std::size_t j = 0; j < q_len; ++j) {
    if (quot[j] != 0) out.push_back({q_lo + static_cast<Exponent>(j), std::move(quot[j])});
  }
  return LaurentPoly::from_terms(std::move(out));
}

RationalValue lp_eval(const LaurentPoly& p, const RationalValue& at) {
  if (p.is_zero()) return 0;
  if (at == 0) {
    if (p.min_exponent() < 0) throw EvalAtZero("evaluation at q = 0 with negative exponents");
    return RationalValue(p.coeff(0));
  }
  auto power_of = [&](Exponent e) {
    // at^e for any sign of e.
    RationalValue x = e < 0 ? RationalValue(1 / at) : at;
    const auto n = static_cast<unsigned long>(e < 0 ? -e : e);
    RationalValue out;
    mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), n);
    out.canonicalize();
    return out;
  };
  RationalValue sum = 0;
  for (const auto& t : p.terms()) sum += RationalValue(t.coeff) * power_of(t.exponent);
  sum.canonicalize();
  return sum;
}

RationalValue lp_eval(const LaurentPoly& p, QToOne) {
  BigCoeff sum = 0;
  for (const auto& t : p.terms()) sum += t.coeff;
  return RationalValue(sum);
}

namespace {

std::string exponent_suffix(Exponent e, bool latex) {
  if (e == 1) return "q";
  if (latex) return "q^{" + std::to_string(e) + "}";
  return "q^" + std::to_string(e);
}

std::string render(const LaurentPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    BigCoeff mag = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.exponent == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + (latex ? "" : "*");
      out += exponent_suffix(t.exponent, latex);
    }
  }
  return out;
}

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    std::vector<LaurentPoly::Term> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-'));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  LaurentPoly::Term term(bool negative) {
    skip_ws();
    BigCoeff coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigCoeff(digits());
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
      }
    }
    Exponent e = 0;
    if (!at_end() && peek() == 'q') {
      get();
      e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        get();
        skip_ws();
        const bool braced = !at_end() && peek() == '{';
        if (braced) get();
        skip_ws();
        bool neg = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) neg = get() == '-';
        const std::string d = digits();
        try {
          e = std::stoll(d);
        } catch (const std::exception&) {
          fail("exponent out of range");
        }
        if (neg) e = -e;
        if (braced) {
          skip_ws();
          if (at_end() || get() != '}') fail("expected '}'");
        }
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or q");
    }
    if (negative) coeff = -coeff;
    return {e, coeff};
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse Laurent polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const LaurentPoly& p) { return render(p, false); }

std::string to_latex(const LaurentPoly& p) { return render(p, true); }

LaurentPoly parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"e", t.exponent}, {"c", t.coeff.get_str()}});
  }
  return {{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw ParseError("Laurent polynomial JSON must be an object with a 'terms' array");
  }
  std::vector<LaurentPoly::Term> terms;
  std::optional<Exponent> previous;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("e") || !t.contains("c") || !t.at("e").is_number_integer() ||
        !t.at("c").is_string()) {
      throw ParseError("malformed term in Laurent polynomial JSON");
    }
    const auto e = t.at("e").get<Exponent>();
    BigCoeff c;
    if (c.set_str(t.at("c").get<std::string>(), 10) != 0) {
      throw ParseError("malformed coefficient in Laurent polynomial JSON");
    }
    if (c == 0) throw ParseError("zero coefficient in Laurent polynomial JSON");
    if (previous && *previous >= e) throw ParseError("exponents not strictly ascending");
    previous = e;
    terms.push_back({e, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

std::string to_string(const RationalValue& v) {
  RationalValue c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace qwhitney
