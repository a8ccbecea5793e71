#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "oddfact/error.hpp"

namespace oddfact {

/// Raw element code: the polynomial-basis coefficients c_0 + c_1 p + ... read
/// as a base-p integer. Code 0 is zero, code 1 is one.
using Elt = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^f) for an odd prime p with exact table arithmetic.
///
/// The modulus is the lexicographically least monic irreducible polynomial of
/// degree f, where polynomials are compared by their base-p code (c_{f-1} most
/// significant). For f = 1 the modulus is x itself, so the field is Z/p.
class Field {
 public:
  static FieldPtr make(int p, int f = 1);
  /// Builds a field from an explicit modulus (low-to-high, monic, degree f).
  static FieldPtr from_modulus(int p, const std::vector<int>& modulus);

  int p() const noexcept { return p_; }
  int degree() const noexcept { return f_; }
  int order() const noexcept { return q_; }
  bool is_prime() const noexcept { return f_ == 1; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Elt add(Elt a, Elt b) const noexcept { return add_[a * q_ + b]; }
  Elt sub(Elt a, Elt b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elt neg(Elt a) const noexcept { return neg_[a]; }
  Elt mul(Elt a, Elt b) const noexcept { return mul_[a * q_ + b]; }
  /// Throws DivisionByZero for a == 0.
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const noexcept;
  Elt from_int(long long v) const noexcept;

  std::vector<int> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<int>& c) const;

  /// a^((q-1)/2) == 1; throws ZeroArgument for a == 0.
  bool is_square(Elt a) const;
  /// Least nonsquare in code order.
  Elt nonsquare() const;
  /// Least element of multiplicative order q-1 in code order.
  Elt primitive() const;
  /// Some square root of a square, or throws BadParams.
  Elt sqrt(Elt a) const;

  /// "GF p f c0 c1 ... cf"
  std::string serialize() const;
  static FieldPtr parse(const std::string& line);

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_;
  }

  std::string element_to_string(Elt a) const;

 private:
  Field(int p, int f, std::vector<int> modulus);

  int p_;
  int f_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Elt> add_;
  std::vector<Elt> mul_;
  std::vector<Elt> neg_;
  std::vector<Elt> inv_;
};

/// Value-like field element that carries its owning field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elt code);
  static FieldElement from_int(FieldPtr field, long long v);

  const FieldPtr& field() const noexcept { return field_; }
  Elt code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Elt code_;
};

enum class ArithOp { Add, Sub, Mul, Div };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

bool is_square(const FieldElement& a);
FieldElement nonsquare(const FieldPtr& field);

bool is_prime(long long n);

}  // namespace oddfact
