#include "hexforms/stable.hpp"

#include "hexforms/linalg.hpp"

namespace hexforms {

const char* stability_str(Stability s) {
  switch (s) {
    case Stability::NegativeType: return "NegativeType";
    case Stability::PositiveType: return "PositiveType";
    case Stability::Unstable: return "Unstable";
    case Stability::Parametric: return "Parametric";
  }
  return "?";
}

StableAnalysis analyze_stable(const LieAlgebra& g, const KForm& rho, const KForm& nu) {
  if (rho.degree() != 3 && !rho.is_zero())
    fail(ErrorKind::Internal, "analyze_stable expects a 3-form");
  const RingPtr ring = rho.ring() ? rho.ring() : g.ring();
  StableAnalysis out;
  out.rho = rho;
  out.jtilde = Endomorphism(ring, kFrameDim, ActsOn::OneForms);
  for (int j = 1; j <= kFrameDim; ++j) {
    KForm ej = KForm::basis(ring, static_cast<IndexMask>(1u << (j - 1)));
    for (int k = 1; k <= kFrameDim; ++k) {
      KForm top = wedge(ej, wedge(contract(Vector::basis(ring, k), rho), rho));
      out.jtilde.set(k - 1, j - 1, volume_quotient(top, nu));
    }
  }
  Endomorphism j2 = out.jtilde * out.jtilde;
  out.lambda_tilde = j2.trace() * Frac::constant(ring, GaussRational::from_pair(1, 6));
  if (out.lambda_tilde.is_constant()) {
    GaussRational v = out.lambda_tilde.constant_value();
    if (v.is_zero()) out.stability = Stability::Unstable;
    else if (v.re() < 0) out.stability = Stability::NegativeType;
    else out.stability = Stability::PositiveType;
  } else {
    out.stability = Stability::Parametric;
  }
  out.j_rho_rho = out.jtilde.apply_slotwise(rho);
  out.d_j_rho_rho = g.differential(out.j_rho_rho);
  return out;
}

StableAnalysis analyze_stable(const LieAlgebra& g, const KForm& rho) {
  const RingPtr ring = rho.ring() ? rho.ring() : g.ring();
  return analyze_stable(g, rho, KForm::basis(ring, 0x3f));
}

Endomorphism k_rho_on_vectors(const KForm& rho, const KForm& nu) {
  const RingPtr& ring = rho.ring();
  if (nu.degree() != kFrameDim || nu.terms().size() != 1)
    fail(ErrorKind::BadVolume, "volume form must be a single term");
  Frac nu_coeff = nu.terms().begin()->second;
  Endomorphism k(ring, kFrameDim, ActsOn::Vectors);
  for (int v = 1; v <= kFrameDim; ++v) {
    // K(e_v) = kappa(i_{e_v} rho ^ rho): solve i_X nu = xi for X.
    KForm xi = wedge(contract(Vector::basis(ring, v), rho), rho);
    for (int comp = 1; comp <= kFrameDim; ++comp) {
      IndexMask rest = static_cast<IndexMask>(0x3f & ~(1u << (comp - 1)));
      Frac c = xi.coeff(rest) / nu_coeff;
      if ((comp - 1) % 2 == 1) c = -c;
      k.set(comp - 1, v - 1, c);
    }
  }
  return k;
}

std::vector<std::pair<int, int>> TensorReport::nonzero_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [key, val] : values)
    if (!val.is_zero()) out.push_back(key);
  return out;
}

TensorReport scaled_nijenhuis(const LieAlgebra& g, const Endomorphism& j_vectors,
                              const Frac& lambda_tilde) {
  if (lambda_tilde.is_zero()) fail(ErrorKind::ZeroLambda, "lambda~ must be nonzero");
  const RingPtr& ring = j_vectors.ring();
  TensorReport rep;
  for (int i = 1; i <= kFrameDim; ++i) {
    for (int j = i + 1; j <= kFrameDim; ++j) {
      Vector ei = Vector::basis(ring, i), ej = Vector::basis(ring, j);
      Vector jei = j_vectors.apply(ei), jej = j_vectors.apply(ej);
      Vector n = g.bracket(jei, jej) - j_vectors.apply(g.bracket(ei, jej)) -
                 j_vectors.apply(g.bracket(jei, ej)) + g.bracket(ei, ej).scaled(lambda_tilde);
      if (!n.is_zero()) rep.vanishes = false;
      rep.values.emplace(std::make_pair(i, j), std::move(n));
    }
  }
  return rep;
}

TensorReport endo_torsion(const LieAlgebra& g, const Endomorphism& f_vectors) {
  const RingPtr& ring = f_vectors.ring();
  TensorReport rep;
  for (int i = 1; i <= kFrameDim; ++i) {
    for (int j = i + 1; j <= kFrameDim; ++j) {
      Vector ei = Vector::basis(ring, i), ej = Vector::basis(ring, j);
      Vector fei = f_vectors.apply(ei), fej = f_vectors.apply(ej);
      Vector n = g.bracket(fei, fej) - f_vectors.apply(g.bracket(ei, fej)) -
                 f_vectors.apply(g.bracket(fei, ej)) - g.bracket(ei, ej);
      if (!n.is_zero()) rep.vanishes = false;
      rep.values.emplace(std::make_pair(i, j), std::move(n));
    }
  }
  return rep;
}

Endomorphism induced_endomorphism(const LieAlgebra& g, const Endomorphism& j_vectors,
                                  Summand summand, int first_size) {
  bool decomposable = false;
  for (const auto& t : g.tags)
    if (t == "decomposable") decomposable = true;
  if (!decomposable)
    fail(ErrorKind::NotDecomposable, g.name() + " carries no declared summand split");
  int offset = summand == Summand::First ? 0 : first_size;
  int size = summand == Summand::First ? first_size : kFrameDim - first_size;
  return j_vectors.induced_block(offset, size);
}

GenericThreeForm generic_closed_threeform(const LieAlgebra& g) {
  const RingPtr& ring = g.ring();
  // Basis of Lambda^3 and Lambda^4 in canonical mask order.
  std::vector<IndexMask> basis3, basis4;
  for (int m = 0; m < 64; ++m) {
    if (mask_degree(static_cast<IndexMask>(m)) == 3) basis3.push_back(static_cast<IndexMask>(m));
    if (mask_degree(static_cast<IndexMask>(m)) == 4) basis4.push_back(static_cast<IndexMask>(m));
  }
  FracMatrix mat(basis4.size(), std::vector<Frac>(basis3.size(), Frac::zero(ring)));
  for (size_t col = 0; col < basis3.size(); ++col) {
    KForm d = g.differential(KForm::basis(ring, basis3[col]));
    for (size_t row = 0; row < basis4.size(); ++row) mat[row][col] = d.coeff(basis4[row]);
  }
  auto kernel = kernel_basis(mat, ring);

  GenericThreeForm out;
  for (const auto& vec : kernel) {
    KForm beta(ring, 3);
    for (size_t col = 0; col < basis3.size(); ++col) beta.add_coeff(basis3[col], vec[col]);
    out.basis.push_back(std::move(beta));
  }
  for (size_t k = 1; k <= kernel.size(); ++k) out.parameters.push_back("a" + std::to_string(k));
  RingPtr merged = merge_rings(ring, Ring::make(out.parameters));
  out.ring = merged;
  KForm rho(merged, 3);
  for (size_t k = 0; k < out.basis.size(); ++k) {
    Frac ak = Frac::variable(merged, out.parameters[k]);
    for (const auto& [m, c] : out.basis[k].terms()) rho.add_coeff(m, lift_frac(c, merged) * ak);
  }
  out.rho = std::move(rho);
  return out;
}

// The canonical J acts by the same coordinate matrix on the frame and on the
// coframe: J e_1 = -e_2, J e_2 = e_1, and J e^1 = -e^2, J e^2 = e^1. On
// k-forms the action is (J beta)(X_1..X_k) = (-1)^k beta(J X_1, .., J X_k),
// realized as the covector substitution e^a -> J e^a. The orientation is
// pinned by the torsion/instanton calibration values, not chosen freely.
Endomorphism adapted_j_vectors(const RingPtr& ring) {
  Endomorphism j(ring, kFrameDim, ActsOn::Vectors);
  Frac one = Frac::constant(ring, GaussRational(1));
  for (int k = 0; k < 3; ++k) {
    j.set(2 * k + 1, 2 * k, -one);  // J e_{2k+1} = -e_{2k+2}
    j.set(2 * k, 2 * k + 1, one);   // J e_{2k+2} = e_{2k+1}
  }
  return j;
}

Endomorphism adapted_j_one_forms(const RingPtr& ring) {
  Endomorphism j = adapted_j_vectors(ring);
  Endomorphism out(ring, kFrameDim, ActsOn::OneForms);
  for (int i = 0; i < kFrameDim; ++i)
    for (int k = 0; k < kFrameDim; ++k) out.set(i, k, j.at(i, k));
  return out;
}

}  // namespace hexforms
