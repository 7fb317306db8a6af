// Fraction field of Poly with a canonical representation:
//   - the denominator is free of radical variables (rationalized),
//   - gcd(num, den) is a unit,
//   - the denominator is monic.
// A Frac is zero iff its numerator is the zero polynomial.
#pragma once

#include <map>
#include <string>

#include "hexforms/poly.hpp"

namespace hexforms {

class Frac {
 public:
  Frac() = default;
  Frac(Poly num, Poly den);
  explicit Frac(Poly num);
  static Frac zero(const RingPtr& ring) { return Frac(Poly::zero(ring)); }
  static Frac constant(const RingPtr& ring, const GaussRational& c) {
    return Frac(Poly::constant(ring, c));
  }
  static Frac variable(const RingPtr& ring, const std::string& name) {
    return Frac(Poly::variable(ring, name));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  GaussRational constant_value() const;

  Frac operator-() const;
  friend Frac operator+(const Frac& a, const Frac& b);
  friend Frac operator-(const Frac& a, const Frac& b);
  friend Frac operator*(const Frac& a, const Frac& b);
  friend Frac operator/(const Frac& a, const Frac& b);
  Frac& operator+=(const Frac& o) { *this = *this + o; return *this; }
  Frac& operator-=(const Frac& o) { *this = *this - o; return *this; }
  Frac& operator*=(const Frac& o) { *this = *this * o; return *this; }
  Frac& operator/=(const Frac& o) { *this = *this / o; return *this; }
  friend bool operator==(const Frac& a, const Frac& b);
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  Frac scaled(const GaussRational& c) const;
  Frac inv() const;
  Frac pow(int e) const;  // negative exponents allowed for nonzero fractions
  Frac conj() const;

  Frac substitute(const std::map<std::string, Frac>& bindings) const;
  GaussRational evaluate(const std::map<std::string, GaussRational>& bindings) const;

  std::string str() const;

 private:
  void canonicalize();
  Poly num_, den_;
};

// Rewrites f over a ring whose variables are a superset of f's.
Frac lift_frac(const Frac& f, const RingPtr& target);
// Like lift_frac but only occurring variables must exist in the target.
Frac project_frac(const Frac& f, const RingPtr& target);

}  // namespace hexforms
