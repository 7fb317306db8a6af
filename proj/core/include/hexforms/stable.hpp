// Stable three-forms: the endomorphism J~_rho defined by
// ((J~_rho a)(X)) nu = a ^ i_X rho ^ rho, the invariant lambda~ =
// (1/6) tr(J~^2), torsion tensors of endomorphisms, induced summand
// endomorphisms, and generic closed three-forms.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hexforms/endo.hpp"
#include "hexforms/liealg.hpp"

namespace hexforms {

enum class Stability { NegativeType, PositiveType, Unstable, Parametric };

const char* stability_str(Stability s);

struct StableAnalysis {
  KForm rho;
  Endomorphism jtilde;   // on one-forms; the dual of K_rho
  Frac lambda_tilde;
  Stability stability = Stability::Unstable;
  KForm j_rho_rho;       // slot-wise action of J~ on rho
  KForm d_j_rho_rho;
};

// nu must be a single-term volume form (default e^123456 when empty).
StableAnalysis analyze_stable(const LieAlgebra& g, const KForm& rho, const KForm& nu);
StableAnalysis analyze_stable(const LieAlgebra& g, const KForm& rho);

// K_rho on vectors through the canonical isomorphism kappa; equals the
// transpose of J~_rho. Kept as an independent route for cross-checks.
Endomorphism k_rho_on_vectors(const KForm& rho, const KForm& nu);

// Scaled Nijenhuis tensor N~(X,Y) = [JX,JY] - J[X,JY] - J[JX,Y] + lt [X,Y]
// for an endomorphism J with J^2 = lt * Id; N~ = -lt * N_{J/sqrt(-lt)}.
struct TensorReport {
  // values on basis pairs (i<j), keyed by (i,j)
  std::map<std::pair<int, int>, Vector> values;
  bool vanishes = true;
  std::vector<std::pair<int, int>> nonzero_pairs() const;
};

TensorReport scaled_nijenhuis(const LieAlgebra& g, const Endomorphism& j_vectors,
                              const Frac& lambda_tilde);

// N_F(X,Y) = [FX,FY] - F[X,FY] - F[FX,Y] - [X,Y]
TensorReport endo_torsion(const LieAlgebra& g, const Endomorphism& f_vectors);

enum class Summand { First, Second };

// pi_j . J . i_j for a declared split (3+3 or 5+1).
Endomorphism induced_endomorphism(const LieAlgebra& g, const Endomorphism& j_vectors,
                                  Summand summand, int first_size = 3);

struct GenericThreeForm {
  KForm rho;                    // sum a_i * beta_i over the merged ring
  std::vector<KForm> basis;     // closed basis three-forms (over g's ring)
  RingPtr ring;                 // g's parameters plus a1..am
  std::vector<std::string> parameters;
};

GenericThreeForm generic_closed_threeform(const LieAlgebra& g);

// The canonical adapted J on vectors / one-forms: Je1=e2, Je2=-e1, ...
Endomorphism adapted_j_vectors(const RingPtr& ring);
Endomorphism adapted_j_one_forms(const RingPtr& ring);

}  // namespace hexforms
