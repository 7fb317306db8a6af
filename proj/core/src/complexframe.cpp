#include "hexforms/complexframe.hpp"

#include "hexforms/linalg.hpp"

namespace hexforms {

std::pair<int, int> bidegree_of_mask(IndexMask m) {
  int p = 0, q = 0;
  for (int k = 1; k <= 3; ++k)
    if (m & (1u << (k - 1))) ++p;
  for (int k = 4; k <= 6; ++k)
    if (m & (1u << (k - 1))) ++q;
  return {p, q};
}

KForm conj_complex_form(const KForm& w) {
  KForm out(w.ring(), w.degree());
  for (const auto& [m, c] : w.terms()) {
    // permute indices k <-> k+3 and count the reordering sign
    std::vector<int> idx;
    for (int k = 1; k <= kFrameDim; ++k)
      if (m & (1u << (k - 1))) idx.push_back(k <= 3 ? k + 3 : k - 3);
    int inv = 0;
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = a + 1; b < idx.size(); ++b)
        if (idx[a] > idx[b]) ++inv;
    IndexMask pm = 0;
    for (int k : idx) pm |= static_cast<IndexMask>(1u << (k - 1));
    Frac c2 = c.conj();
    if (inv % 2 == 1) c2 = -c2;
    out.add_coeff(pm, c2);
  }
  return out;
}

KForm transform_covectors(const KForm& w, const std::array<KForm, kFrameDim>& images) {
  const RingPtr& ring = images[0].ring();
  if (w.degree() == 0) {
    KForm out(ring, 0);
    for (const auto& [m, c] : w.terms()) out.add_coeff(0, lift_frac(c, ring));
    return out;
  }
  KForm out(ring, w.degree());
  for (const auto& [m, c] : w.terms()) {
    KForm prod = KForm::scalar(ring, Frac::constant(ring, GaussRational(1)));
    for (int k = 1; k <= kFrameDim; ++k)
      if (m & (1u << (k - 1))) prod = wedge(prod, images[k - 1]);
    out = out + prod.scaled(lift_frac(c, ring));
  }
  return out;
}

ComplexFrame::ComplexFrame(RingPtr ring, std::array<KForm, 3> dtau)
    : ring_(std::move(ring)), dtau_(std::move(dtau)) {
  for (const auto& w : dtau_)
    if (!w.is_zero() && w.degree() != 2)
      fail(ErrorKind::Internal, "complex structure equations must be 2-forms");
}

ComplexFrame ComplexFrame::from_adapted(const LieAlgebra& g) {
  std::array<KForm, 3> dtau;
  for (int k = 1; k <= 3; ++k) {
    KForm d_re = g.d_basis(2 * k - 1);
    KForm d_im = g.d_basis(2 * k);
    KForm dw = real_to_complex(d_re) + real_to_complex(d_im).scaled(
                                           Frac::constant(d_re.ring(), GaussRational::i()));
    dtau[k - 1] = dw;
  }
  return ComplexFrame(g.ring(), dtau);
}

KForm ComplexFrame::d(const KForm& w) const {
  if (w.is_zero() || w.degree() == 0)
    return KForm::zero(ring_, std::min(w.degree() + 1, kFrameDim));
  KForm out(w.ring(), std::min(w.degree() + 1, kFrameDim));
  if (w.degree() == kFrameDim) return out;
  for (const auto& [mask, c] : w.terms()) {
    int pos = 0;
    for (int k = 1; k <= kFrameDim; ++k) {
      IndexMask bit = static_cast<IndexMask>(1u << (k - 1));
      if (!(mask & bit)) continue;
      KForm dk = k <= 3 ? dtau_[k - 1] : conj_complex_form(dtau_[k - 4]);
      if (!dk.is_zero()) {
        IndexMask rest = static_cast<IndexMask>(mask & ~bit);
        for (const auto& [dm, dc] : dk.terms()) {
          int s = wedge_sign(dm, rest);
          if (s == 0) continue;
          Frac coeff = c * dc;
          if ((pos % 2 == 1) != (s < 0)) coeff = -coeff;
          out.add_coeff(static_cast<IndexMask>(dm | rest), coeff);
        }
      }
      ++pos;
    }
  }
  return out;
}

KForm ComplexFrame::del(const KForm& w) const {
  std::map<std::pair<int, int>, KForm> parts = split(w);
  KForm out(ring_, std::min(w.degree() + 1, kFrameDim));
  for (const auto& [pq, part] : parts) {
    KForm dd = d(part);
    for (const auto& [m, c] : dd.terms()) {
      auto [p, q] = bidegree_of_mask(m);
      if (p == pq.first + 1 && q == pq.second) out.add_coeff(m, c);
    }
  }
  return out;
}

KForm ComplexFrame::delbar(const KForm& w) const {
  std::map<std::pair<int, int>, KForm> parts = split(w);
  KForm out(ring_, std::min(w.degree() + 1, kFrameDim));
  for (const auto& [pq, part] : parts) {
    KForm dd = d(part);
    for (const auto& [m, c] : dd.terms()) {
      auto [p, q] = bidegree_of_mask(m);
      if (p == pq.first && q == pq.second + 1) out.add_coeff(m, c);
    }
  }
  return out;
}

std::map<std::pair<int, int>, KForm> ComplexFrame::split(const KForm& w) const {
  std::map<std::pair<int, int>, KForm> parts;
  for (const auto& [m, c] : w.terms()) {
    auto pq = bidegree_of_mask(m);
    auto it = parts.find(pq);
    if (it == parts.end()) it = parts.emplace(pq, KForm(w.ring(), w.degree())).first;
    it->second.add_coeff(m, c);
  }
  return parts;
}

bool ComplexFrame::integrable() const {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& [m, c] : dtau_[k - 1].terms()) {
      auto [p, q] = bidegree_of_mask(m);
      if (p == 0 && q == 2) return false;
    }
  }
  return true;
}

ComplexFrame ComplexFrame::change_basis(const std::vector<std::vector<Frac>>& A) const {
  FracMatrix inv = invert(A, ring_);
  // Images for rewriting old covectors in the new frame: t^j = sum_k inv[j][k] s^k.
  std::array<KForm, kFrameDim> old_in_new;
  for (int j = 0; j < 3; ++j) {
    KForm w(ring_, 1), wbar(ring_, 1);
    for (int k = 0; k < 3; ++k) {
      w.add_coeff(static_cast<IndexMask>(1u << k), inv[j][k]);
      wbar.add_coeff(static_cast<IndexMask>(1u << (k + 3)), inv[j][k].conj());
    }
    old_in_new[j] = w;
    old_in_new[j + 3] = wbar;
  }
  std::array<KForm, 3> dnew;
  for (int k = 0; k < 3; ++k) {
    // d s^k = sum_j A[k][j] d t^j, rewritten in the new frame.
    KForm acc(ring_, 2);
    for (int j = 0; j < 3; ++j) {
      if (A[k][j].is_zero()) continue;
      acc = acc + transform_covectors(dtau_[j], old_in_new).scaled(A[k][j]);
    }
    dnew[k] = acc;
  }
  return ComplexFrame(ring_, dnew);
}

LieAlgebra ComplexFrame::realify(const std::string& name, bool check) const {
  // e^{2k-1} = (t^k + conj t^k)/2, e^{2k} = -i/2 (t^k - conj t^k);
  // conversely t^k = e^{2k-1} + i e^{2k}.
  std::array<KForm, kFrameDim> complex_in_real;
  Frac one = Frac::constant(ring_, GaussRational(1));
  Frac iu = Frac::constant(ring_, GaussRational::i());
  for (int k = 0; k < 3; ++k) {
    KForm t(ring_, 1), tbar(ring_, 1);
    t.add_coeff(static_cast<IndexMask>(1u << (2 * k)), one);
    t.add_coeff(static_cast<IndexMask>(1u << (2 * k + 1)), iu);
    tbar.add_coeff(static_cast<IndexMask>(1u << (2 * k)), one);
    tbar.add_coeff(static_cast<IndexMask>(1u << (2 * k + 1)), -iu);
    complex_in_real[k] = t;
    complex_in_real[k + 3] = tbar;
  }
  std::array<KForm, kFrameDim> d_real;
  Frac half = Frac::constant(ring_, GaussRational::from_pair(1, 2));
  Frac mhalf_i = Frac::constant(ring_, GaussRational::from_pair(0, 1, -1, 2));
  for (int k = 0; k < 3; ++k) {
    KForm dt = dtau_[k];
    KForm dtbar = conj_complex_form(dt);
    KForm d_odd = transform_covectors(dt + dtbar, complex_in_real).scaled(half);
    KForm d_even = transform_covectors(dt - dtbar, complex_in_real).scaled(mhalf_i);
    for (const KForm* w : {&d_odd, &d_even}) {
      for (const auto& [m, c] : w->terms()) {
        if (!(c == c.conj()))
          fail(ErrorKind::NotDiagonalized,
               "realified structure constants are not real; coefficient " + c.str());
      }
    }
    d_real[2 * k] = d_odd;
    d_real[2 * k + 1] = d_even;
  }
  return LieAlgebra::from_differentials(name, ring_, d_real, check);
}

KForm ComplexFrame::unit_diagonal_metric() const {
  KForm f(ring_, 2);
  Frac half_i = Frac::constant(ring_, GaussRational::from_pair(0, 1, 1, 2));
  for (int k = 0; k < 3; ++k)
    f.add_coeff(static_cast<IndexMask>((1u << k) | (1u << (k + 3))), half_i);
  return f;
}

namespace {

std::array<KForm, kFrameDim> real_to_complex_images(const RingPtr& ring) {
  // e^{2k-1} = (w^k + conj w^k)/2, e^{2k} = -i/2 (w^k - conj w^k)
  std::array<KForm, kFrameDim> img;
  Frac half = Frac::constant(ring, GaussRational::from_pair(1, 2));
  Frac mhalf_i = Frac::constant(ring, GaussRational::from_pair(0, 1, -1, 2));
  for (int k = 0; k < 3; ++k) {
    KForm odd(ring, 1), even(ring, 1);
    odd.add_coeff(static_cast<IndexMask>(1u << k), half);
    odd.add_coeff(static_cast<IndexMask>(1u << (k + 3)), half);
    even.add_coeff(static_cast<IndexMask>(1u << k), mhalf_i);
    even.add_coeff(static_cast<IndexMask>(1u << (k + 3)), -mhalf_i);
    img[2 * k] = odd;
    img[2 * k + 1] = even;
  }
  return img;
}

std::array<KForm, kFrameDim> complex_to_real_images(const RingPtr& ring) {
  std::array<KForm, kFrameDim> img;
  Frac one = Frac::constant(ring, GaussRational(1));
  Frac iu = Frac::constant(ring, GaussRational::i());
  for (int k = 0; k < 3; ++k) {
    KForm t(ring, 1), tbar(ring, 1);
    t.add_coeff(static_cast<IndexMask>(1u << (2 * k)), one);
    t.add_coeff(static_cast<IndexMask>(1u << (2 * k + 1)), iu);
    tbar.add_coeff(static_cast<IndexMask>(1u << (2 * k)), one);
    tbar.add_coeff(static_cast<IndexMask>(1u << (2 * k + 1)), -iu);
    img[k] = t;
    img[k + 3] = tbar;
  }
  return img;
}

}  // namespace

KForm real_to_complex(const KForm& w) {
  return transform_covectors(w, real_to_complex_images(w.ring()));
}

KForm complex_to_real(const KForm& w) {
  return transform_covectors(w, complex_to_real_images(w.ring()));
}

}  // namespace hexforms
