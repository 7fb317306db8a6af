// Sparse multivariate polynomials over Q(i) with canonical graded-lex term
// order and radical-relation rewriting. Equal polynomials always have
// identical representations, so equality and zero tests are structural.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hexforms/rational.hpp"
#include "hexforms/ring.hpp"

namespace hexforms {

using Mono = std::vector<std::uint8_t>;

// Graded lexicographic: total degree first, then the earlier-declared
// variable dominates.
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

int mono_degree(const Mono& m);

class Frac;

class Poly {
 public:
  using TermMap = std::map<Mono, GaussRational, MonoLess>;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const GaussRational& c);

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const GaussRational& c) { return Poly(std::move(ring), c); }
  static Poly variable(RingPtr ring, int idx);
  static Poly variable(RingPtr ring, const std::string& name);
  // Builds from raw terms, then normalizes (radical reduction, zero removal).
  static Poly from_terms(RingPtr ring, TermMap terms);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  GaussRational constant_value() const;  // requires is_constant()
  int nterms() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  bool contains_var(int var) const;

  const Mono& leading_mono() const;
  const GaussRational& leading_coeff() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const GaussRational& c) const;
  Poly pow(int e) const;
  Poly conj() const;  // conjugates coefficients; variables are real symbols

  // Exact division; fails with NotDivisible if rem != 0.
  Poly exact_div(const Poly& d) const;
  bool divides(const Poly& dividend) const;

  // Monic (leading coefficient 1) multivariate gcd in the free ring;
  // gcd(0,0) = 0, gcd with a unit is 1.
  static Poly gcd(const Poly& a, const Poly& b);

  // Substitution of Frac values for variables (by name); unbound variables
  // persist. Bindings of radical variables are checked against the rewritten
  // relation. Returns a fraction over the reduced ring.
  Frac substitute(const std::map<std::string, Frac>& bindings) const;

  // Full numeric evaluation; every variable must be bound. Radical variables
  // must be bound explicitly or have a square that evaluates to the square
  // of a rational.
  GaussRational evaluate(const std::map<std::string, GaussRational>& bindings) const;

  std::string str() const;

  // Normalization used by from_terms and arithmetic: applies radical
  // rewriting until all radical exponents are < 2 and strips zeros.
  void normalize();

 private:
  friend class Frac;
  static Poly mul_raw(const Poly& a, const Poly& b);
  static void add_term(TermMap& terms, const Mono& m, const GaussRational& c);

  RingPtr ring_;
  TermMap terms_;
};

// Merge two rings by variable name (left order first, new right variables
// appended); relations must agree on shared names.
RingPtr merge_rings(const RingPtr& a, const RingPtr& b);
// Rewrites p into target ring (a superset of p's variables by name).
Poly lift_to_ring(const Poly& p, const RingPtr& target);
// Like lift_to_ring but only the variables actually occurring in p need to
// exist in the target.
Poly project_to_ring(const Poly& p, const RingPtr& target);

}  // namespace hexforms
