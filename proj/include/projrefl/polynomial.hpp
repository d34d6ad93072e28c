#pragma once

// Univariate polynomials and rational functions in one parameter t with
// AlgNumber coefficients. Used for one-parameter families of Cartan matrices.

#include <optional>
#include <string>
#include <vector>

#include "projrefl/numfield.hpp"

namespace projrefl {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const AlgNumber& constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<AlgNumber> coefficients);

  static Polynomial variable() { return Polynomial(std::vector<AlgNumber>{AlgNumber(0L), AlgNumber(1L)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<AlgNumber>& coefficients() const { return c_; }
  AlgNumber coefficient(int k) const;
  AlgNumber leading() const { return c_.empty() ? AlgNumber() : c_.back(); }

  AlgNumber evaluate(const AlgNumber& t) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; `divisor` nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);
  /// Monic gcd (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string(const std::string& variable = "t") const;

 private:
  void trim();
  std::vector<AlgNumber> c_;
};

/// Reduced quotient num/den: gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(AlgNumber(1L)) {}
  RationalFunction(long constant) : RationalFunction(AlgNumber(constant)) {}  // NOLINT
  RationalFunction(const AlgNumber& constant) : num_(constant), den_(AlgNumber(1L)) {}  // NOLINT
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction variable() { return {Polynomial::variable(), Polynomial(AlgNumber(1L))}; }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Requires is_constant().
  AlgNumber constant_value() const;

  /// α·t^k with k = ±1, when the function has exactly that form.
  struct Monomial {
    AlgNumber coefficient;
    int exponent;
  };
  std::optional<Monomial> as_monomial() const;

  /// Throws DivisionByZero at a pole.
  AlgNumber evaluate(const AlgNumber& t) const;

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& variable = "t") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace projrefl
