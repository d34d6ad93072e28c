#pragma once

// Exact arithmetic in Q and in real quadratic / biquadratic fields Q(√a, √b).
//
// Every AlgNumber is stored in the smallest supported field that contains it,
// so equal numbers always have identical representations. Binary operations
// work in the compositum of the operand fields; if that compositum has degree
// greater than 4 a FieldMismatch is thrown.

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include <gmpxx.h>

#include "projrefl/error.hpp"

namespace projrefl {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);
bool is_integer(const Rational& x);
std::string to_string(const Rational& x);

bool is_squarefree(std::int64_t n);
/// Writes n = k²·d with d squarefree. Requires n > 0.
std::pair<std::int64_t, std::int64_t> squarefree_decomposition(std::int64_t n);

/// A field Q, Q(√d) or Q(√a, √b), with radicands squarefree and > 1.
///
/// Biquadratic fields have three quadratic subfields Q(√a), Q(√b), Q(√c) with
/// c the squarefree part of ab; the canonical labeling uses the two smallest
/// of {a, b, c}, so Q(√2,√3) and Q(√2,√6) compare equal.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return {}; }
  static FieldSpec quadratic(std::int64_t d);
  static FieldSpec biquadratic(std::int64_t a, std::int64_t b);
  /// Zero, one or two radicands.
  static FieldSpec from_radicands(std::span<const std::int64_t> radicands);

  /// Smallest supported field containing both; throws FieldMismatch otherwise.
  static FieldSpec join(const FieldSpec& x, const FieldSpec& y);

  int degree() const { return 1 << count_; }
  int radicand_count() const { return count_; }
  std::span<const std::int64_t> radicands() const { return {r_.data(), static_cast<std::size_t>(count_)}; }
  std::int64_t radicand(int i) const { return r_.at(static_cast<std::size_t>(i)); }

  /// Radicands d with √d (up to a rational factor) in the field, i.e. the
  /// quadratic subfields. Empty for Q.
  std::array<std::int64_t, 3> quadratic_subfields() const;
  bool contains(const FieldSpec& other) const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::array<std::int64_t, 2> r_{0, 0};
  int count_ = 0;
};

/// Ring of integers of Q(√d), d squarefree > 1.
class QuadraticRing {
 public:
  explicit QuadraticRing(std::int64_t d);
  std::int64_t d() const { return d_; }

 private:
  std::int64_t d_;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign operator*(Sign x, Sign y) {
  return static_cast<Sign>(static_cast<int>(x) * static_cast<int>(y));
}

class AlgNumber {
 public:
  using Coords = std::array<Rational, 4>;

  AlgNumber() = default;
  AlgNumber(long value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  AlgNumber(const Rational& value) : c_{value, 0, 0, 0} { c_[0].canonicalize(); }  // NOLINT
  AlgNumber(const Integer& value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT

  /// √n for a positive integer n (square factors are pulled out).
  static AlgNumber sqrt_of(std::int64_t n);
  /// Value p + q√a + r√b + s√a√b in the given field's basis.
  static AlgNumber from_coords(const FieldSpec& field, const Coords& coords);

  const FieldSpec& field() const { return field_; }
  /// Coordinates w.r.t. {1, √a, √b, √a√b} of `ambient`; throws FieldMismatch
  /// when the number does not lie in `ambient`.
  Coords coords_in(const FieldSpec& ambient) const;
  /// Raw coordinates in the number's own (minimal) field.
  const Coords& coords() const { return c_; }

  bool is_zero() const { return field_.degree() == 1 && c_[0] == 0; }
  bool is_rational() const { return field_.degree() == 1; }
  /// Throws PreconditionError for irrational numbers.
  const Rational& rational_value() const;

  Sign sign() const;
  double to_double() const;
  AlgNumber inverse() const;
  /// Product of all Galois conjugates over Q (rational).
  Rational norm() const;

  AlgNumber operator-() const;
  AlgNumber& operator+=(const AlgNumber& y);
  AlgNumber& operator-=(const AlgNumber& y);
  AlgNumber& operator*=(const AlgNumber& y);
  AlgNumber& operator/=(const AlgNumber& y);

  friend AlgNumber operator+(AlgNumber x, const AlgNumber& y) { return x += y; }
  friend AlgNumber operator-(AlgNumber x, const AlgNumber& y) { return x -= y; }
  friend AlgNumber operator*(AlgNumber x, const AlgNumber& y) { return x *= y; }
  friend AlgNumber operator/(AlgNumber x, const AlgNumber& y) { return x /= y; }

  friend bool operator==(const AlgNumber& x, const AlgNumber& y) {
    return x.field_ == y.field_ && x.c_ == y.c_;
  }

  /// Real-embedding order (√d > 0), decided exactly.
  friend bool operator<(const AlgNumber& x, const AlgNumber& y) { return (x - y).sign() == Sign::negative; }
  friend bool operator>(const AlgNumber& x, const AlgNumber& y) { return y < x; }
  friend bool operator<=(const AlgNumber& x, const AlgNumber& y) { return !(y < x); }
  friend bool operator>=(const AlgNumber& x, const AlgNumber& y) { return !(x < y); }

  /// Text in the scalar expression grammar, e.g. "(3+sqrt(5))/2".
  std::string to_string() const;

  /// Total order on representations; cheap, not the real order.
  static int structural_compare(const AlgNumber& x, const AlgNumber& y);

 private:
  void normalize();

  FieldSpec field_;
  Coords c_{0, 0, 0, 0};
};

struct StructuralLess {
  bool operator()(const AlgNumber& x, const AlgNumber& y) const {
    return AlgNumber::structural_compare(x, y) < 0;
  }
};

std::ostream& operator<<(std::ostream& os, const AlgNumber& x);

inline Sign sign(const AlgNumber& x) { return x.sign(); }
AlgNumber multiply(const AlgNumber& x, const AlgNumber& y);
AlgNumber invert(const AlgNumber& x);
AlgNumber pow(const AlgNumber& x, int exponent);

/// 4cos²(π/m) for m ∈ {2,3,4,5,6}.
AlgNumber cos2_value(int m);

/// True iff x is a rational integer.
bool is_integer(const AlgNumber& x);
/// Membership in O_{Q(√d)}; x must lie in Q(√d).
bool is_algebraic_integer(const AlgNumber& x, const QuadraticRing& ring);
/// Algebraic integer of Q(√d) with norm ±1.
bool is_unit(const AlgNumber& x, const QuadraticRing& ring);

}  // namespace projrefl
