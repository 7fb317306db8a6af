// Adapted Hermitian structures J e^1 = -e^2, J e^3 = -e^4, J e^5 = -e^6,
// F = e^12 + e^34 + e^56, the two-parameter family of metric connections
//   sigma^i_j(e_k) = 1/2 (c^i_jk - c^k_ij + c^j_ki)
//                    - eps JdF(e_i,e_j,e_k) - rho dF(J e_k, e_i, e_j),
// curvature, instanton quantities Theta/Upsilon, Pontryagin traces, and the
// anomaly-cancellation residual.
#pragma once

#include <array>
#include <optional>

#include "hexforms/complexframe.hpp"
#include "hexforms/endo.hpp"
#include "hexforms/liealg.hpp"
#include "hexforms/stable.hpp"

namespace hexforms {

struct AdaptedStructure {
  LieAlgebra algebra;

  const RingPtr& ring() const { return algebra.ring(); }
  KForm fundamental_form() const;  // e12 + e34 + e56
  Endomorphism j_vectors() const { return adapted_j_vectors(ring()); }
  Endomorphism j_one_forms() const { return adapted_j_one_forms(ring()); }
};

AdaptedStructure make_adapted(const LieAlgebra& g);

// (J beta)(X_1..X_k) = beta(J X_1, .., J X_k)
KForm j_on_form(const AdaptedStructure& s, const KForm& w);

struct TorsionForms {
  KForm dF;
  KForm T;  // T = J dF, the Bismut torsion 3-form
};
TorsionForms torsion_forms(const AdaptedStructure& s);
// Chern torsion C(X,Y,Z) = dF(JX,Y,Z) on basis triples (not a form; it only
// enters the connection formula).
Frac chern_torsion(const AdaptedStructure& s, int x, int y, int z);

struct BalancedReport {
  bool balanced = false;
  KForm d_f_wedge_f;  // d(F^2)/2 = dF ^ F
};
BalancedReport balanced_check(const AdaptedStructure& s);

class ConnectionSheet {
 public:
  static ConnectionSheet levi_civita(const AdaptedStructure& s);
  // eps, rho may be symbolic variables or constants over any ring that merges
  // with the structure's.
  static ConnectionSheet family(const AdaptedStructure& s, const Frac& eps, const Frac& rho);
  // User-supplied connection 1-forms; must be antisymmetric in (i,j).
  static ConnectionSheet custom(const AdaptedStructure& s,
                                const std::array<std::array<KForm, kFrameDim>, kFrameDim>& sigma);

  const AdaptedStructure& structure() const { return s_; }
  const RingPtr& ring() const { return ring_; }
  const KForm& sigma(int i, int j) const { return sigma_[i - 1][j - 1]; }  // 1-based
  const KForm& omega(int i, int j) const { return omega_[i - 1][j - 1]; }
  const std::optional<Frac>& eps() const { return eps_; }
  const std::optional<Frac>& rho() const { return rho_; }

  Frac theta(int i, int j) const;
  Frac upsilon(int i, int j, int k, int l) const;
  bool is_instanton() const;  // all Theta and Upsilon vanish
  bool is_flat() const;       // all curvature 2-forms vanish

  // Matrix sigma(e_k) for commutator tests with J.
  Endomorphism sigma_matrix(int k) const;

  // Paper-normalized trace: sum_{i<j} Omega^i_j ^ Omega^i_j
  // (= -1/2 sum_{i,j} Omega^i_j ^ Omega^j_i). d of it must vanish.
  KForm trace_omega_wedge_omega() const;

 private:
  ConnectionSheet() = default;
  void compute_curvature();
  AdaptedStructure s_;
  RingPtr ring_;
  std::optional<Frac> eps_, rho_;
  std::array<std::array<KForm, kFrameDim>, kFrameDim> sigma_;
  std::array<std::array<KForm, kFrameDim>, kFrameDim> omega_;
};

// Compatibility of a custom connection with the U(3)-structure: metric
// antisymmetry plus [sigma(e_k), J] = 0, reported through the six pairing
// conditions sigma^1_3 = sigma^2_4, sigma^1_4 = -sigma^2_3, ...
struct CompatibilityReport {
  bool metric = true;
  bool hermitian = true;
  std::vector<std::string> failed_pairings;
};
CompatibilityReport connection_compatibility(const ConnectionSheet& sheet);

// Omega^i_j ^ F^2 = 2 Theta(i,j) nu and Upsilon <-> (2,0)+(0,2) parts; both
// verified as exact identities per (i,j) against the bidegree oracle.
struct HymEquivalenceReport {
  bool ok = true;
  std::string first_mismatch;
};
HymEquivalenceReport hym_equivalence_check(const ConnectionSheet& sheet);

// dT - alpha'/4 (tr Omega^nabla - tr Omega^A) as an exact 4-form.
KForm anomaly_residual(const AdaptedStructure& s, const ConnectionSheet& nabla,
                       const ConnectionSheet& instanton, const Frac& alpha_prime);

}  // namespace hexforms
