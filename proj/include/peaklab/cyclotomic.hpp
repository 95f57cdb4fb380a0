#pragma once

// Exact arithmetic in cyclotomic fields Q(epsilon), epsilon a primitive n-th
// root of unity.  Values are represented as polynomials in epsilon reduced
// modulo the n-th cyclotomic polynomial Phi_n (computed exactly by dividing
// x^n - 1 by the Phi_d for proper divisors d).  A Cyclo with no attached
// field is a plain rational; mixing values from fields of different orders
// throws, mixing with rationals promotes.

#include "peaklab/scalar.hpp"

#include <string>
#include <vector>

namespace peaklab {

class CycloField {
 public:
  // Cached per order; references stay valid for the program's lifetime.
  static const CycloField& get(int order);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }

  // Monic modulus Phi_order, coefficients low to high.
  const std::vector<Rational>& modulus() const { return phi_; }

 private:
  explicit CycloField(int order);
  int order_;
  std::vector<Rational> phi_;
};

class Cyclo {
 public:
  Cyclo() : coeffs_(1, Rational(0)) {}
  Cyclo(int v) : coeffs_(1, Rational(v)) {}
  Cyclo(const Rational& v) : coeffs_(1, v) {}

  // epsilon^power in Q(epsilon), epsilon = primitive order-th root of unity.
  static Cyclo root_of_unity(const CycloField& field, long long power = 1);

  const CycloField* field() const { return field_; }

  // Coefficients of the reduced representative (length = field degree, or 1
  // for a plain rational).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;          // lies in Q (even if a field is attached)
  Rational rational_value() const;   // throws when !is_rational()

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend Cyclo operator-(const Cyclo& a) { return Cyclo(0) - a; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo inverse() const;  // throws on zero

  // "3/2" for rationals, otherwise "(c0) + (c1) e + ..." with e = epsilon.
  std::string to_string() const;

 private:
  // Aligns the representations of a and b (promotes rationals into the other
  // operand's field); throws when both carry fields of different orders.
  static void match(Cyclo& a, Cyclo& b);
  void reduce();  // reduce coeffs_ modulo the field's modulus

  const CycloField* field_ = nullptr;
  std::vector<Rational> coeffs_;
};

}  // namespace peaklab
