// Six-dimensional Lie algebras described through the exterior derivative of
// the dual frame: de^k = sum_{i<j} c^k_ij e^ij. The differential extends to
// all degrees as the unique anti-derivation; the bracket is its dual.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hexforms/kform.hpp"
#include "hexforms/parse.hpp"

namespace hexforms {

// Inequality annotation. `check` is an optional machine-checkable predicate
// "lhs OP rhs" over the parameter ring.
struct Assumption {
  std::string text;
  bool checkable = false;
  Frac lhs, rhs;
  std::string op;  // one of < > <= >= != ==

  static Assumption note(std::string text);
  static Assumption predicate(const RingPtr& ring, const std::string& text);
  bool holds(const std::map<std::string, GaussRational>& bindings) const;
};

struct JacobiReport {
  bool ok = true;
  // offending basis index (1-based) and the nonzero 3-form d(de^k)
  std::vector<std::pair<int, KForm>> failures;
};

struct UnimodularReport {
  bool ok = true;
  std::vector<std::pair<int, Frac>> failures;  // failing i with the trace value
};

class LieAlgebra {
 public:
  LieAlgebra() = default;

  // check = true verifies d.d = 0 and throws JacobiError with a witness.
  static LieAlgebra from_differentials(std::string name, RingPtr ring,
                                       std::array<KForm, kFrameDim> d_basis, bool check = true);
  static LieAlgebra parse(std::string name, const std::string& tuple_text, const RingPtr& ring,
                          bool check = true);

  const std::string& name() const { return name_; }
  const RingPtr& ring() const { return ring_; }
  const KForm& d_basis(int k) const { return d_[k - 1]; }  // de^k, 1-based

  // Structure constant c^k_ij (antisymmetric in i,j).
  Frac c(int k, int i, int j) const;

  KForm differential(const KForm& w) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  JacobiReport check_jacobi() const;
  UnimodularReport check_unimodular() const;

  LieAlgebra substitute(const std::string& new_name,
                        const std::map<std::string, Frac>& bindings, bool check = true) const;

  std::vector<std::string> tags;
  std::vector<Assumption> assumptions;

  std::string tuple_str() const;          // parseable: (e23,-e13,-e12,0,0,0)
  std::string display_tuple_str() const;  // compact: (23,-13,-12,0,0,0)

 private:
  std::string name_;
  RingPtr ring_;
  std::array<KForm, kFrameDim> d_;
};

}  // namespace hexforms
