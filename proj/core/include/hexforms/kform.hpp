// Exterior algebra of a fixed 6-dimensional frame e^1..e^6 with Frac
// coefficients. Index subsets are bitmasks (bit k-1 stands for e^k);
// the wedge/evaluation convention is the determinant convention with no
// 1/k! factors: (a^b)(X,Y) = a(X)b(Y) - a(Y)b(X).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hexforms/frac.hpp"

namespace hexforms {

constexpr int kFrameDim = 6;

using IndexMask = std::uint8_t;

int mask_degree(IndexMask m);
std::string mask_str(IndexMask m);                 // {1,3,4} -> "134"
IndexMask mask_from_indices(const std::vector<int>& idx);  // 1-based, strictly increasing
// Sign of e^A ^ e^B as a reordering of the concatenation; 0 if A and B meet.
int wedge_sign(IndexMask a, IndexMask b);

class Vector {
 public:
  explicit Vector(const RingPtr& ring);
  static Vector basis(const RingPtr& ring, int k);  // e_k, 1-based
  const Frac& operator[](int k) const { return comps_[k - 1]; }  // 1-based
  Frac& operator[](int k) { return comps_[k - 1]; }
  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  Vector scaled(const Frac& c) const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend bool operator==(const Vector& a, const Vector& b);
  std::string str() const;

 private:
  RingPtr ring_;
  std::array<Frac, kFrameDim> comps_;
};

class KForm {
 public:
  KForm() : degree_(0) {}
  KForm(const RingPtr& ring, int degree);
  static KForm zero(const RingPtr& ring, int degree) { return KForm(ring, degree); }
  static KForm basis(const RingPtr& ring, IndexMask mask);
  static KForm scalar(const RingPtr& ring, const Frac& c);  // degree 0

  int degree() const { return degree_; }
  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexMask, Frac>& terms() const { return terms_; }
  Frac coeff(IndexMask mask) const;
  void set_coeff(IndexMask mask, const Frac& c);
  void add_coeff(IndexMask mask, const Frac& c);

  KForm operator-() const;
  friend KForm operator+(const KForm& a, const KForm& b);
  friend KForm operator-(const KForm& a, const KForm& b);
  KForm& operator+=(const KForm& o) { *this = *this + o; return *this; }
  KForm& operator-=(const KForm& o) { *this = *this - o; return *this; }
  friend bool operator==(const KForm& a, const KForm& b);
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  KForm scaled(const Frac& c) const;
  KForm substitute(const std::map<std::string, Frac>& bindings) const;
  KForm conj() const;

  std::string str() const;  // e.g. "e123 - e156" or "2/t*e15"

 private:
  int degree_;
  RingPtr ring_;
  std::map<IndexMask, Frac> terms_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm contract(const Vector& v, const KForm& w);
Frac evaluate(const KForm& w, const std::vector<Vector>& args);
// The unique c with top = c * nu; nu must be a nonzero single-term 6-form.
Frac volume_quotient(const KForm& top, const KForm& nu);

}  // namespace hexforms
