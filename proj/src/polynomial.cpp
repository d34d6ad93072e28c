#include "projrefl/polynomial.hpp"

#include <utility>

namespace projrefl {

Polynomial::Polynomial(const AlgNumber& constant) : c_{constant} { trim(); }

Polynomial::Polynomial(std::vector<AlgNumber> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AlgNumber Polynomial::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : AlgNumber();
}

AlgNumber Polynomial::evaluate(const AlgNumber& t) const {
  AlgNumber v;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const AlgNumber inv = leading().inverse();
  std::vector<AlgNumber> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c * inv);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<AlgNumber> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(-c);
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<AlgNumber> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<AlgNumber> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<AlgNumber> quotient(
      static_cast<std::size_t>(std::max(0, dividend.degree() - divisor.degree() + 1)));
  Polynomial rem = dividend;
  const AlgNumber lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const AlgNumber f = rem.leading() * lead_inv;
    quotient[static_cast<std::size_t>(shift)] = f;
    std::vector<AlgNumber> sub(static_cast<std::size_t>(rem.degree() + 1));
    for (int k = 0; k <= divisor.degree(); ++k) sub[static_cast<std::size_t>(k + shift)] = f * divisor.c_[k];
    std::vector<AlgNumber> next = rem.c_;
    for (std::size_t k = 0; k < next.size(); ++k) next[k] -= sub[k];
    next.pop_back();  // leading term cancels exactly
    rem = Polynomial(std::move(next));
  }
  return {Polynomial(std::move(quotient)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

bool needs_parens(const AlgNumber& c) {
  const std::string s = c.to_string();
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-' || s[i] == '/') return true;
  return false;
}

std::string power_of(const std::string& variable, int k) {
  std::string out = variable;
  for (int i = 1; i < k; ++i) out += "*" + variable;
  return out;
}

}  // namespace

std::string Polynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const AlgNumber& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = c.to_string();
    } else if (c == AlgNumber(1L)) {
      term = power_of(variable, k);
    } else if (c == AlgNumber(-1L)) {
      term = "-" + power_of(variable, k);
    } else {
      const std::string cs = c.to_string();
      term = (needs_parens(c) ? "(" + cs + ")" : cs) + "*" + power_of(variable, k);
    }
    if (!first && term.front() != '-') out += "+";
    out += term;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (numerator.is_zero()) {
    den_ = Polynomial(AlgNumber(1L));
    return;
  }
  const Polynomial g = Polynomial::gcd(numerator, denominator);
  num_ = Polynomial::divmod(numerator, g).first;
  den_ = Polynomial::divmod(denominator, g).first;
  const AlgNumber lead = den_.leading();
  if (lead != AlgNumber(1L)) {
    const Polynomial scale(lead.inverse());
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

AlgNumber RationalFunction::constant_value() const {
  if (!is_constant()) throw PreconditionError("rational function " + to_string() + " is not constant");
  return num_.coefficient(0);
}

std::optional<RationalFunction::Monomial> RationalFunction::as_monomial() const {
  const auto single_term = [](const Polynomial& p, int k) {
    if (p.degree() != k) return false;
    for (int i = 0; i < k; ++i)
      if (!p.coefficient(i).is_zero()) return false;
    return true;
  };
  if (den_.degree() == 0 && single_term(num_, 1)) return Monomial{num_.coefficient(1), 1};
  if (num_.degree() == 0 && single_term(den_, 1)) return Monomial{num_.coefficient(0), -1};
  return std::nullopt;
}

AlgNumber RationalFunction::evaluate(const AlgNumber& t) const {
  const AlgNumber d = den_.evaluate(t);
  if (d.is_zero()) throw DivisionByZero("pole of " + to_string() + " at t = " + t.to_string());
  return num_.evaluate(t) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunction::to_string(const std::string& variable) const {
  const std::string n = num_.to_string(variable);
  if (den_.degree() == 0) return n;
  const bool simple_num = num_.degree() <= 0 && !needs_parens(num_.coefficient(0));
  const std::string d = den_.to_string(variable);
  const bool simple_den = d.find_first_of("+-*") == std::string::npos;
  return (simple_num ? n : "(" + n + ")") + "/" + (simple_den ? d : "(" + d + ")");
}

}  // namespace projrefl
