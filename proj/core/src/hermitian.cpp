#include "hexforms/hermitian.hpp"

namespace hexforms {

AdaptedStructure make_adapted(const LieAlgebra& g) { return AdaptedStructure{g}; }

KForm AdaptedStructure::fundamental_form() const {
  return parse_form("e12+e34+e56", ring(), 2);
}

KForm j_on_form(const AdaptedStructure& s, const KForm& w) {
  // (J beta)(X1..Xk) = beta(JX1..JXk). On basis covectors this is the k-fold
  // multiplicative extension of the dual action J e^1 = -e^2 etc.
  Endomorphism jd = s.j_one_forms();
  std::array<KForm, kFrameDim> images;
  for (int a = 1; a <= kFrameDim; ++a)
    images[a - 1] = jd.apply_one_form(KForm::basis(w.ring(), static_cast<IndexMask>(1u << (a - 1))));
  return transform_covectors(w, images);
}

TorsionForms torsion_forms(const AdaptedStructure& s) {
  TorsionForms t;
  t.dF = s.algebra.differential(s.fundamental_form());
  t.T = j_on_form(s, t.dF);
  return t;
}

Frac chern_torsion(const AdaptedStructure& s, int x, int y, int z) {
  KForm dF = s.algebra.differential(s.fundamental_form());
  Vector jx = s.j_vectors().apply(Vector::basis(s.ring(), x));
  return evaluate(dF, {jx, Vector::basis(s.ring(), y), Vector::basis(s.ring(), z)});
}

BalancedReport balanced_check(const AdaptedStructure& s) {
  BalancedReport rep;
  KForm F = s.fundamental_form();
  rep.d_f_wedge_f = wedge(s.algebra.differential(F), F);
  rep.balanced = rep.d_f_wedge_f.is_zero();
  return rep;
}

namespace {

LieAlgebra lift_algebra(const LieAlgebra& g, const RingPtr& target) {
  if (g.ring() == target) return g;
  std::array<KForm, kFrameDim> d;
  for (int k = 1; k <= kFrameDim; ++k) {
    KForm src = g.d_basis(k);
    KForm dst(target, 2);
    for (const auto& [m, c] : src.terms()) dst.add_coeff(m, lift_frac(c, target));
    d[k - 1] = dst;
  }
  LieAlgebra out = LieAlgebra::from_differentials(g.name(), target, d, false);
  out.tags = g.tags;
  out.assumptions = g.assumptions;
  return out;
}

}  // namespace

ConnectionSheet ConnectionSheet::levi_civita(const AdaptedStructure& s) {
  return family(s, Frac::zero(s.ring()), Frac::zero(s.ring()));
}

ConnectionSheet ConnectionSheet::family(const AdaptedStructure& s, const Frac& eps,
                                        const Frac& rho) {
  RingPtr ring = merge_rings(merge_rings(s.ring(), eps.ring()), rho.ring());
  ConnectionSheet sheet;
  sheet.s_ = AdaptedStructure{lift_algebra(s.algebra, ring)};
  sheet.ring_ = ring;
  sheet.eps_ = lift_frac(eps, ring);
  sheet.rho_ = lift_frac(rho, ring);

  const LieAlgebra& g = sheet.s_.algebra;
  TorsionForms tor = torsion_forms(sheet.s_);
  Endomorphism jv = sheet.s_.j_vectors();
  std::array<Vector, kFrameDim> basis_v = {
      Vector::basis(ring, 1), Vector::basis(ring, 2), Vector::basis(ring, 3),
      Vector::basis(ring, 4), Vector::basis(ring, 5), Vector::basis(ring, 6)};
  Frac half = Frac::constant(ring, GaussRational::from_pair(1, 2));

  for (int i = 1; i <= kFrameDim; ++i) {
    for (int j = 1; j <= kFrameDim; ++j) {
      KForm w(ring, 1);
      for (int k = 1; k <= kFrameDim; ++k) {
        Frac lc = half * (g.c(i, j, k) - g.c(k, i, j) + g.c(j, k, i));
        Frac t_term = evaluate(tor.T, {basis_v[i - 1], basis_v[j - 1], basis_v[k - 1]});
        Frac c_term = evaluate(tor.dF, {jv.apply(basis_v[k - 1]), basis_v[i - 1], basis_v[j - 1]});
        Frac val = lc - *sheet.eps_ * t_term - *sheet.rho_ * c_term;
        if (!val.is_zero()) w.add_coeff(static_cast<IndexMask>(1u << (k - 1)), val);
      }
      sheet.sigma_[i - 1][j - 1] = w;
    }
  }
  sheet.compute_curvature();
  return sheet;
}

ConnectionSheet ConnectionSheet::custom(
    const AdaptedStructure& s, const std::array<std::array<KForm, kFrameDim>, kFrameDim>& sigma) {
  ConnectionSheet sheet;
  sheet.s_ = s;
  sheet.ring_ = s.ring();
  sheet.sigma_ = sigma;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j)
      if (!(sigma[i][j] == -sigma[j][i]))
        fail(ErrorKind::NotMetric, "connection 1-forms are not antisymmetric in (i,j)");
  sheet.compute_curvature();
  return sheet;
}

void ConnectionSheet::compute_curvature() {
  const LieAlgebra& g = s_.algebra;
  for (int i = 0; i < kFrameDim; ++i) {
    for (int j = 0; j < kFrameDim; ++j) {
      KForm om = g.differential(sigma_[i][j]);
      for (int k = 0; k < kFrameDim; ++k) om = om + wedge(sigma_[i][k], sigma_[k][j]);
      omega_[i][j] = om;
    }
  }
}

Frac ConnectionSheet::theta(int i, int j) const {
  const KForm& om = omega(i, j);
  Frac acc = Frac::zero(ring_);
  for (int k = 0; k < 3; ++k) {
    acc += evaluate(om, {Vector::basis(ring_, 2 * k + 1), Vector::basis(ring_, 2 * k + 2)});
  }
  return acc;
}

Frac ConnectionSheet::upsilon(int i, int j, int k, int l) const {
  const KForm& om = omega(i, j);
  Endomorphism jv = s_.j_vectors();
  Vector ek = Vector::basis(ring_, k), el = Vector::basis(ring_, l);
  return evaluate(om, {jv.apply(ek), jv.apply(el)}) - evaluate(om, {ek, el});
}

bool ConnectionSheet::is_instanton() const {
  for (int i = 1; i <= kFrameDim; ++i)
    for (int j = i + 1; j <= kFrameDim; ++j) {
      if (!theta(i, j).is_zero()) return false;
      for (int k = 1; k <= kFrameDim; ++k)
        for (int l = k + 1; l <= kFrameDim; ++l)
          if (!upsilon(i, j, k, l).is_zero()) return false;
    }
  return true;
}

bool ConnectionSheet::is_flat() const {
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j)
      if (!omega_[i][j].is_zero()) return false;
  return true;
}

Endomorphism ConnectionSheet::sigma_matrix(int k) const {
  Endomorphism m(ring_, kFrameDim, ActsOn::Vectors);
  for (int i = 1; i <= kFrameDim; ++i)
    for (int j = 1; j <= kFrameDim; ++j)
      m.set(i - 1, j - 1, evaluate(sigma(i, j), {Vector::basis(ring_, k)}));
  return m;
}

KForm ConnectionSheet::trace_omega_wedge_omega() const {
  KForm acc(ring_, 4);
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j)
      acc = acc + wedge(omega_[i][j], omega_[i][j]);
  return acc;
}

CompatibilityReport connection_compatibility(const ConnectionSheet& sheet) {
  CompatibilityReport rep;
  for (int i = 1; i <= kFrameDim; ++i)
    for (int j = i; j <= kFrameDim; ++j)
      if (!(sheet.sigma(i, j) == -sheet.sigma(j, i))) rep.metric = false;
  struct Pairing {
    int a, b, c, d;
    int sign;
    const char* label;
  };
  static const Pairing pairings[] = {
      {1, 3, 2, 4, +1, "sigma^1_3 = sigma^2_4"},   {1, 4, 2, 3, -1, "sigma^1_4 = -sigma^2_3"},
      {1, 5, 2, 6, +1, "sigma^1_5 = sigma^2_6"},   {1, 6, 2, 5, -1, "sigma^1_6 = -sigma^2_5"},
      {3, 5, 4, 6, +1, "sigma^3_5 = sigma^4_6"},   {3, 6, 4, 5, -1, "sigma^3_6 = -sigma^4_5"}};
  for (const auto& p : pairings) {
    KForm rhs = sheet.sigma(p.c, p.d);
    if (p.sign < 0) rhs = -rhs;
    if (!(sheet.sigma(p.a, p.b) == rhs)) {
      rep.hermitian = false;
      rep.failed_pairings.push_back(p.label);
    }
  }
  return rep;
}

HymEquivalenceReport hym_equivalence_check(const ConnectionSheet& sheet) {
  HymEquivalenceReport rep;
  const RingPtr& ring = sheet.ring();
  const AdaptedStructure& s = sheet.structure();
  KForm F = s.fundamental_form();
  KForm F2 = wedge(F, F);
  KForm nu = KForm::basis(ring, 0x3f);
  Frac two = Frac::constant(ring, GaussRational(2));
  ComplexFrame frame = ComplexFrame::from_adapted(s.algebra);
  for (int i = 1; i <= kFrameDim && rep.ok; ++i) {
    for (int j = i + 1; j <= kFrameDim && rep.ok; ++j) {
      const KForm& om = sheet.omega(i, j);
      // Route 1: Omega ^ F^2 = 2 Theta nu.
      KForm lhs = wedge(om, F2);
      Frac c = volume_quotient(lhs, nu);
      if (c != two * sheet.theta(i, j)) {
        rep.ok = false;
        rep.first_mismatch = "Omega^" + std::to_string(i) + "_" + std::to_string(j) +
                             " ^ F^2 != 2 Theta nu";
        break;
      }
      // Route 2: Upsilon(i,j,k,l) = -2 ((2,0)+(0,2) part)(e_k, e_l).
      KForm cform = real_to_complex(om);
      KForm mixed(cform.ring(), 2);
      for (const auto& [m, coeff] : cform.terms()) {
        auto [p, q] = bidegree_of_mask(m);
        if ((p == 2 && q == 0) || (p == 0 && q == 2)) mixed.add_coeff(m, coeff);
      }
      KForm mixed_real = complex_to_real(mixed);
      for (int k = 1; k <= kFrameDim; ++k) {
        for (int l = k + 1; l <= kFrameDim; ++l) {
          Frac oracle = evaluate(mixed_real, {Vector::basis(ring, k), Vector::basis(ring, l)})
                            .scaled(GaussRational(-2));
          if (oracle != sheet.upsilon(i, j, k, l)) {
            rep.ok = false;
            rep.first_mismatch = "Upsilon(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + "," + std::to_string(l) +
                                 ") differs from the bidegree oracle";
            break;
          }
        }
        if (!rep.ok) break;
      }
    }
  }
  return rep;
}

KForm anomaly_residual(const AdaptedStructure& s, const ConnectionSheet& nabla,
                       const ConnectionSheet& instanton, const Frac& alpha_prime) {
  TorsionForms tor = torsion_forms(s);
  KForm dT = s.algebra.differential(tor.T);
  KForm tr_n = nabla.trace_omega_wedge_omega();
  KForm tr_a = instanton.trace_omega_wedge_omega();
  RingPtr ring = merge_rings(merge_rings(dT.ring(), alpha_prime.ring()),
                             merge_rings(tr_n.ring(), tr_a.ring()));
  auto lift = [&](const KForm& w) {
    KForm out(ring, w.degree());
    for (const auto& [m, c] : w.terms()) out.add_coeff(m, lift_frac(c, ring));
    return out;
  };
  Frac quarter = lift_frac(alpha_prime, ring) * Frac::constant(ring, GaussRational::from_pair(1, 4));
  return lift(dT) - (lift(tr_n) - lift(tr_a)).scaled(quarter);
}

}  // namespace hexforms
