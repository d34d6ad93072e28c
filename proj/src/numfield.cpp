#include "projrefl/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace projrefl {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % (k * k) == 0) return false;
  return true;
}

std::pair<std::int64_t, std::int64_t> squarefree_decomposition(std::int64_t n) {
  if (n < 1) throw PreconditionError("squarefree decomposition needs a positive integer");
  std::int64_t k = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      k *= p;
    }
  }
  return {k, n};
}

namespace {

void check_radicand(std::int64_t d) {
  if (d <= 1 || !is_squarefree(d))
    throw PreconditionError("radicand " + std::to_string(d) + " must be a squarefree integer > 1");
}

// Squarefree part c of ab and the factor g with ab = g²c.
std::pair<std::int64_t, std::int64_t> product_radicand(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  return {(a / g) * (b / g), g};
}

}  // namespace

FieldSpec FieldSpec::quadratic(std::int64_t d) {
  check_radicand(d);
  FieldSpec f;
  f.r_ = {d, 0};
  f.count_ = 1;
  return f;
}

FieldSpec FieldSpec::biquadratic(std::int64_t a, std::int64_t b) {
  check_radicand(a);
  check_radicand(b);
  if (a == b) throw PreconditionError("biquadratic field needs two distinct radicands");
  std::array<std::int64_t, 3> all{a, b, product_radicand(a, b).first};
  std::sort(all.begin(), all.end());
  FieldSpec f;
  f.r_ = {all[0], all[1]};
  f.count_ = 2;
  return f;
}

FieldSpec FieldSpec::from_radicands(std::span<const std::int64_t> radicands) {
  switch (radicands.size()) {
    case 0:
      return rationals();
    case 1:
      return quadratic(radicands[0]);
    case 2:
      return biquadratic(radicands[0], radicands[1]);
    default:
      throw PreconditionError("at most two radicands are supported");
  }
}

std::array<std::int64_t, 3> FieldSpec::quadratic_subfields() const {
  if (count_ == 0) return {0, 0, 0};
  if (count_ == 1) return {r_[0], 0, 0};
  return {r_[0], r_[1], product_radicand(r_[0], r_[1]).first};
}

bool FieldSpec::contains(const FieldSpec& other) const {
  if (other.count_ == 0) return true;
  if (other.count_ == 2) return *this == other;
  const auto subs = quadratic_subfields();
  return std::find(subs.begin(), subs.end(), other.r_[0]) != subs.end();
}

FieldSpec FieldSpec::join(const FieldSpec& x, const FieldSpec& y) {
  if (x.contains(y)) return x;
  if (y.contains(x)) return y;
  if (x.count_ == 1 && y.count_ == 1) return biquadratic(x.r_[0], y.r_[0]);
  throw FieldMismatch("fields " + x.to_string() + " and " + y.to_string() +
                      " do not lie in a common biquadratic field");
}

std::string FieldSpec::to_string() const {
  if (count_ == 0) return "Q";
  if (count_ == 1) return "Q(sqrt(" + std::to_string(r_[0]) + "))";
  return "Q(sqrt(" + std::to_string(r_[0]) + "),sqrt(" + std::to_string(r_[1]) + "))";
}

QuadraticRing::QuadraticRing(std::int64_t d) : d_(d) { check_radicand(d); }

// ---------------------------------------------------------------------------

AlgNumber AlgNumber::sqrt_of(std::int64_t n) {
  if (n <= 0) throw PreconditionError("sqrt of a non-positive integer");
  const auto [k, d] = squarefree_decomposition(n);
  if (d == 1) return AlgNumber(static_cast<long>(k));
  return from_coords(FieldSpec::quadratic(d), {Rational(0), Rational(static_cast<long>(k)), 0, 0});
}

AlgNumber AlgNumber::from_coords(const FieldSpec& field, const Coords& coords) {
  AlgNumber x;
  x.field_ = field;
  x.c_ = coords;
  for (auto& c : x.c_) c.canonicalize();
  if (field.radicand_count() < 2) x.c_[2] = x.c_[3] = 0;
  if (field.radicand_count() < 1) x.c_[1] = 0;
  x.normalize();
  return x;
}

AlgNumber::Coords AlgNumber::coords_in(const FieldSpec& ambient) const {
  if (!ambient.contains(field_))
    throw FieldMismatch(to_string() + " does not lie in " + ambient.to_string());
  const Rational& p = c_[0];
  switch (field_.radicand_count()) {
    case 0:
      return {p, 0, 0, 0};
    case 1: {
      const std::int64_t d = field_.radicand(0);
      const Rational& q = c_[1];
      if (ambient.radicand_count() == 1 || d == ambient.radicand(0)) return {p, q, 0, 0};
      if (d == ambient.radicand(1)) return {p, 0, q, 0};
      // d is the product radicand: √d = √a√b / g.
      const auto g = product_radicand(ambient.radicand(0), ambient.radicand(1)).second;
      return {p, 0, 0, q / Rational(static_cast<long>(g))};
    }
    default:
      return c_;
  }
}

void AlgNumber::normalize() {
  if (field_.radicand_count() == 1) {
    if (c_[1] == 0) field_ = FieldSpec::rationals();
    return;
  }
  if (field_.radicand_count() != 2) return;
  const bool q = c_[1] != 0, r = c_[2] != 0, s = c_[3] != 0;
  const int nonzero = int(q) + int(r) + int(s);
  if (nonzero >= 2) return;
  const std::int64_t a = field_.radicand(0), b = field_.radicand(1);
  if (nonzero == 0) {
    field_ = FieldSpec::rationals();
  } else if (q) {
    field_ = FieldSpec::quadratic(a);
  } else if (r) {
    field_ = FieldSpec::quadratic(b);
    c_[1] = c_[2];
  } else {
    const auto [c, g] = product_radicand(a, b);
    field_ = FieldSpec::quadratic(c);
    c_[1] = c_[3] * Rational(static_cast<long>(g));
  }
  c_[2] = c_[3] = 0;
}

const Rational& AlgNumber::rational_value() const {
  if (!is_rational()) throw PreconditionError(to_string() + " is not rational");
  return c_[0];
}

AlgNumber AlgNumber::operator-() const {
  AlgNumber x = *this;
  for (auto& c : x.c_) c = -c;
  return x;
}

AlgNumber& AlgNumber::operator+=(const AlgNumber& y) {
  const FieldSpec j = FieldSpec::join(field_, y.field_);
  Coords xs = coords_in(j);
  const Coords ys = y.coords_in(j);
  for (int i = 0; i < 4; ++i) xs[i] += ys[i];
  field_ = j;
  c_ = std::move(xs);
  normalize();
  return *this;
}

AlgNumber& AlgNumber::operator-=(const AlgNumber& y) { return *this += -y; }

AlgNumber& AlgNumber::operator*=(const AlgNumber& y) {
  const FieldSpec j = FieldSpec::join(field_, y.field_);
  const Coords x = coords_in(j);
  const Coords z = y.coords_in(j);
  const Rational a(static_cast<long>(j.radicand_count() > 0 ? j.radicand(0) : 0));
  const Rational b(static_cast<long>(j.radicand_count() > 1 ? j.radicand(1) : 0));
  // Basis 1, √a, √b, √a√b.
  Coords out;
  out[0] = x[0] * z[0] + a * x[1] * z[1] + b * x[2] * z[2] + a * b * x[3] * z[3];
  out[1] = x[0] * z[1] + x[1] * z[0] + b * (x[2] * z[3] + x[3] * z[2]);
  out[2] = x[0] * z[2] + x[2] * z[0] + a * (x[1] * z[3] + x[3] * z[1]);
  out[3] = x[0] * z[3] + x[3] * z[0] + x[1] * z[2] + x[2] * z[1];
  field_ = j;
  c_ = std::move(out);
  normalize();
  return *this;
}

AlgNumber& AlgNumber::operator/=(const AlgNumber& y) { return *this *= y.inverse(); }

AlgNumber AlgNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  switch (field_.radicand_count()) {
    case 0:
      return AlgNumber(Rational(1) / c_[0]);
    case 1: {
      const Rational n = norm();
      return from_coords(field_, {c_[0] / n, -c_[1] / n, 0, 0});
    }
    default: {
      // x = X + Y√b with X, Y in Q(√a); x⁻¹ = (X − Y√b) / (X² − bY²).
      const AlgNumber conj = from_coords(field_, {c_[0], c_[1], -c_[2], -c_[3]});
      return conj * (*this * conj).inverse();
    }
  }
}

Rational AlgNumber::norm() const {
  switch (field_.radicand_count()) {
    case 0:
      return c_[0];
    case 1:
      return c_[0] * c_[0] - Rational(static_cast<long>(field_.radicand(0))) * c_[1] * c_[1];
    default: {
      const AlgNumber conj = from_coords(field_, {c_[0], c_[1], -c_[2], -c_[3]});
      return (*this * conj).norm();
    }
  }
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval sqrt_interval(std::int64_t d, unsigned bits) {
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Integer radicand = Integer(static_cast<long>(d)) * scale * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return {make_rational(root, scale), make_rational(root + 1, scale)};
}

void add_term(Interval& acc, const Rational& c, const Interval& v) {
  if (c >= 0) {
    acc.lo += c * v.lo;
    acc.hi += c * v.hi;
  } else {
    acc.lo += c * v.hi;
    acc.hi += c * v.lo;
  }
}

}  // namespace

Sign AlgNumber::sign() const {
  if (is_zero()) return Sign::zero;
  if (is_rational()) return c_[0] > 0 ? Sign::positive : Sign::negative;
  // Nonzero, so refining the radicals eventually separates the value from 0.
  for (unsigned bits = 32;; bits *= 2) {
    Interval acc{c_[0], c_[0]};
    const Interval ra = sqrt_interval(field_.radicand(0), bits);
    add_term(acc, c_[1], ra);
    if (field_.radicand_count() == 2) {
      const Interval rb = sqrt_interval(field_.radicand(1), bits);
      add_term(acc, c_[2], rb);
      add_term(acc, c_[3], Interval{ra.lo * rb.lo, ra.hi * rb.hi});
    }
    if (acc.lo > 0) return Sign::positive;
    if (acc.hi < 0) return Sign::negative;
  }
}

double AlgNumber::to_double() const {
  double v = c_[0].get_d();
  if (field_.radicand_count() >= 1) v += c_[1].get_d() * std::sqrt(double(field_.radicand(0)));
  if (field_.radicand_count() == 2) {
    const double sb = std::sqrt(double(field_.radicand(1)));
    v += c_[2].get_d() * sb + c_[3].get_d() * std::sqrt(double(field_.radicand(0))) * sb;
  }
  return v;
}

std::string AlgNumber::to_string() const {
  Integer den = 1;
  for (const auto& c : c_)
    if (c != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());

  std::vector<std::string> radical{"", "", "", ""};
  if (field_.radicand_count() >= 1) radical[1] = "sqrt(" + std::to_string(field_.radicand(0)) + ")";
  if (field_.radicand_count() == 2) {
    radical[2] = "sqrt(" + std::to_string(field_.radicand(1)) + ")";
    radical[3] = "sqrt(" + std::to_string(field_.radicand(0) * field_.radicand(1)) + ")";
  }

  std::string out;
  int terms = 0;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    const Integer n = c_[i].get_num() * (den / c_[i].get_den());
    std::string t;
    if (i == 0) {
      t = n.get_str();
    } else if (n == 1) {
      t = radical[i];
    } else if (n == -1) {
      t = "-" + radical[i];
    } else {
      t = n.get_str() + "*" + radical[i];
    }
    if (terms > 0 && t.front() != '-') out += "+";
    out += t;
    ++terms;
  }
  if (terms == 0) return "0";
  if (den == 1) return out;
  if (terms == 1) return out + "/" + den.get_str();
  return "(" + out + ")/" + den.get_str();
}

int AlgNumber::structural_compare(const AlgNumber& x, const AlgNumber& y) {
  if (auto c = x.field_ <=> y.field_; c != 0) return c < 0 ? -1 : 1;
  for (int i = 0; i < 4; ++i) {
    const int c = cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const AlgNumber& x) { return os << x.to_string(); }

AlgNumber multiply(const AlgNumber& x, const AlgNumber& y) { return x * y; }

AlgNumber invert(const AlgNumber& x) { return x.inverse(); }

AlgNumber pow(const AlgNumber& x, int exponent) {
  AlgNumber base = exponent < 0 ? x.inverse() : x;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  AlgNumber result(1L);
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

AlgNumber cos2_value(int m) {
  switch (m) {
    case 2:
      return AlgNumber(0L);
    case 3:
      return AlgNumber(1L);
    case 4:
      return AlgNumber(2L);
    case 6:
      return AlgNumber(3L);
    case 5:
      return AlgNumber::from_coords(FieldSpec::quadratic(5), {Rational(3, 2), Rational(1, 2), 0, 0});
    default:
      throw PreconditionError("unsupported edge order " + std::to_string(m) +
                              "; supported orders are 2, 3, 4, 5, 6");
  }
}

bool is_integer(const AlgNumber& x) { return x.is_rational() && is_integer(x.rational_value()); }

bool is_algebraic_integer(const AlgNumber& x, const QuadraticRing& ring) {
  const FieldSpec qf = FieldSpec::quadratic(ring.d());
  if (!qf.contains(x.field()))
    throw PreconditionError(x.to_string() + " does not lie in " + qf.to_string());
  const auto c = x.coords_in(qf);
  const Rational trace = 2 * c[0];
  const Rational nrm = c[0] * c[0] - Rational(static_cast<long>(ring.d())) * c[1] * c[1];
  return is_integer(trace) && is_integer(nrm);
}

bool is_unit(const AlgNumber& x, const QuadraticRing& ring) {
  if (!is_algebraic_integer(x, ring)) return false;
  const Rational n = x.norm();
  return n == 1 || n == -1;
}

}  // namespace projrefl
