// Square matrices of Fracs acting on the frame (vectors) or the coframe
// (one-forms). Column j holds the image of the j-th basis element.
#pragma once

#include <string>
#include <vector>

#include "hexforms/kform.hpp"

namespace hexforms {

enum class ActsOn { Vectors, OneForms };

class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(const RingPtr& ring, int dim, ActsOn acts_on);
  static Endomorphism identity(const RingPtr& ring, int dim, ActsOn acts_on);

  int dim() const { return dim_; }
  ActsOn acts_on() const { return acts_on_; }
  const RingPtr& ring() const { return ring_; }

  const Frac& at(int i, int j) const { return m_[i][j]; }  // 0-based
  void set(int i, int j, const Frac& v) { m_[i][j] = v; }

  Endomorphism operator-() const;
  friend Endomorphism operator+(const Endomorphism& a, const Endomorphism& b);
  friend Endomorphism operator-(const Endomorphism& a, const Endomorphism& b);
  friend Endomorphism operator*(const Endomorphism& a, const Endomorphism& b);
  friend bool operator==(const Endomorphism& a, const Endomorphism& b);
  friend bool operator!=(const Endomorphism& a, const Endomorphism& b) { return !(a == b); }

  Endomorphism scaled(const Frac& c) const;
  Endomorphism transpose_dual() const;  // same matrix transposed, other side
  Frac trace() const;
  bool is_zero() const;

  Vector apply(const Vector& v) const;        // requires ActsOn::Vectors, dim 6
  KForm apply_one_form(const KForm& w) const;  // requires ActsOn::OneForms, dim 6
  // Derivation-style extension to k-forms: sum over slots of the one-form action.
  KForm apply_slotwise(const KForm& w) const;

  // pi_block . M . i_block for a split starting at `offset` with size `size`.
  Endomorphism induced_block(int offset, int size) const;

  Endomorphism substitute(const std::map<std::string, Frac>& bindings) const;
  std::string str() const;

 private:
  RingPtr ring_;
  int dim_ = 0;
  ActsOn acts_on_ = ActsOn::Vectors;
  std::vector<std::vector<Frac>> m_;
};

}  // namespace hexforms
