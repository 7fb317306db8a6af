// Complex frames: forms over the basis (t^1,t^2,t^3,conj t^1,conj t^2,
// conj t^3) of (1,0)- and (0,1)-covectors, structure equations d t^k,
// bidegree splitting, d = del + delbar, holomorphic basis changes, and the
// passage to a real adapted frame e^{2k-1} + i e^{2k} = t^k.
#pragma once

#include <array>

#include "hexforms/liealg.hpp"

namespace hexforms {

// Index convention inside complex-frame KForms: 1,2,3 are holomorphic,
// 4,5,6 their conjugates.
std::pair<int, int> bidegree_of_mask(IndexMask m);

// Conjugation: swaps k <-> k+3 (with the reordering sign) and conjugates
// coefficients.
KForm conj_complex_form(const KForm& w);

// Applies a degree-1 substitution e^a -> images[a] multiplicatively.
KForm transform_covectors(const KForm& w, const std::array<KForm, kFrameDim>& images);

class ComplexFrame {
 public:
  // dtau[k] = d t^{k+1}, a complex 2-form; d of the conjugates is implied.
  ComplexFrame(RingPtr ring, std::array<KForm, 3> dtau);

  // Complex structure equations of the canonical frame w^k = e^{2k-1} + i e^{2k}
  // of an adapted real algebra.
  static ComplexFrame from_adapted(const LieAlgebra& g);

  const RingPtr& ring() const { return ring_; }
  const KForm& dtau(int k) const { return dtau_[k - 1]; }  // 1-based

  KForm d(const KForm& w) const;
  KForm del(const KForm& w) const;     // (p+1, q) part of d
  KForm delbar(const KForm& w) const;  // (p, q+1) part of d

  std::map<std::pair<int, int>, KForm> split(const KForm& w) const;

  // d t^k must have no (0,2) component for an integrable frame.
  bool integrable() const;

  // New frame s^k = sum_j A[k][j] t^j (holomorphic change, A invertible).
  ComplexFrame change_basis(const std::vector<std::vector<Frac>>& A) const;

  // Real algebra of the frame e^{2k-1} = Re t^k, e^{2k} = Im t^k. Fails if
  // the resulting structure constants are not real.
  LieAlgebra realify(const std::string& name, bool check = true) const;

  // F written in this frame; (i/2)(t^{1 bar1}+t^{2 bar2}+t^{3 bar3}) is the
  // unit-diagonal form required by realify-based constructions.
  KForm unit_diagonal_metric() const;

 private:
  RingPtr ring_;
  std::array<KForm, 3> dtau_;
};

// Complexification of real forms on an adapted frame (w^k = e^{2k-1}+i e^{2k}):
// both directions, as covector substitutions.
KForm real_to_complex(const KForm& w);
KForm complex_to_real(const KForm& w);

}  // namespace hexforms
