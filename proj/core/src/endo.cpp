#include "hexforms/endo.hpp"

#include <sstream>

namespace hexforms {

Endomorphism::Endomorphism(const RingPtr& ring, int dim, ActsOn acts_on)
    : ring_(ring), dim_(dim), acts_on_(acts_on) {
  m_.assign(dim, std::vector<Frac>(dim, Frac::zero(ring)));
}

Endomorphism Endomorphism::identity(const RingPtr& ring, int dim, ActsOn acts_on) {
  Endomorphism e(ring, dim, acts_on);
  for (int k = 0; k < dim; ++k) e.m_[k][k] = Frac::constant(ring, GaussRational(1));
  return e;
}

Endomorphism Endomorphism::operator-() const {
  Endomorphism r = *this;
  for (auto& row : r.m_)
    for (auto& v : row) v = -v;
  return r;
}

Endomorphism operator+(const Endomorphism& a, const Endomorphism& b) {
  Endomorphism r = a;
  for (int i = 0; i < a.dim_; ++i)
    for (int j = 0; j < a.dim_; ++j) r.m_[i][j] = a.m_[i][j] + b.m_[i][j];
  return r;
}

Endomorphism operator-(const Endomorphism& a, const Endomorphism& b) { return a + (-b); }

Endomorphism operator*(const Endomorphism& a, const Endomorphism& b) {
  Endomorphism r(a.ring_, a.dim_, a.acts_on_);
  for (int i = 0; i < a.dim_; ++i) {
    for (int j = 0; j < a.dim_; ++j) {
      Frac acc = Frac::zero(a.ring_);
      for (int k = 0; k < a.dim_; ++k) acc += a.m_[i][k] * b.m_[k][j];
      r.m_[i][j] = acc;
    }
  }
  return r;
}

bool operator==(const Endomorphism& a, const Endomorphism& b) {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i)
    for (int j = 0; j < a.dim_; ++j)
      if (!(a.m_[i][j] == b.m_[i][j])) return false;
  return true;
}

Endomorphism Endomorphism::scaled(const Frac& c) const {
  Endomorphism r = *this;
  for (auto& row : r.m_)
    for (auto& v : row) v = v * c;
  return r;
}

Endomorphism Endomorphism::transpose_dual() const {
  Endomorphism r(ring_, dim_, acts_on_ == ActsOn::Vectors ? ActsOn::OneForms : ActsOn::Vectors);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.m_[i][j] = m_[j][i];
  return r;
}

Frac Endomorphism::trace() const {
  Frac acc = Frac::zero(ring_);
  for (int k = 0; k < dim_; ++k) acc += m_[k][k];
  return acc;
}

bool Endomorphism::is_zero() const {
  for (const auto& row : m_)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

Vector Endomorphism::apply(const Vector& v) const {
  if (acts_on_ != ActsOn::Vectors || dim_ != kFrameDim)
    fail(ErrorKind::Internal, "endomorphism does not act on frame vectors");
  Vector r(ring_);
  for (int i = 1; i <= kFrameDim; ++i) {
    Frac acc = Frac::zero(ring_);
    for (int j = 1; j <= kFrameDim; ++j) acc += m_[i - 1][j - 1] * v[j];
    r[i] = acc;
  }
  return r;
}

KForm Endomorphism::apply_one_form(const KForm& w) const {
  if (acts_on_ != ActsOn::OneForms || dim_ != kFrameDim)
    fail(ErrorKind::Internal, "endomorphism does not act on one-forms");
  if (w.degree() != 1) fail(ErrorKind::Internal, "apply_one_form needs a 1-form");
  KForm r(w.ring(), 1);
  for (const auto& [m, c] : w.terms()) {
    int j = 0;
    for (int k = 1; k <= kFrameDim; ++k)
      if (m & (1u << (k - 1))) j = k;
    for (int i = 1; i <= kFrameDim; ++i) {
      const Frac& mij = m_[i - 1][j - 1];
      if (!mij.is_zero()) r.add_coeff(static_cast<IndexMask>(1u << (i - 1)), c * mij);
    }
  }
  return r;
}

KForm Endomorphism::apply_slotwise(const KForm& w) const {
  if (acts_on_ != ActsOn::OneForms) fail(ErrorKind::Internal, "slotwise action needs OneForms");
  KForm r(w.ring(), w.degree());
  for (const auto& [m, c] : w.terms()) {
    for (int k = 1; k <= kFrameDim; ++k) {
      IndexMask bit = static_cast<IndexMask>(1u << (k - 1));
      if (!(m & bit)) continue;
      IndexMask rest = static_cast<IndexMask>(m & ~bit);
      // sign moving e^k to the front of the tuple
      int pos = 0;
      for (int t = 1; t < k; ++t)
        if (m & (1u << (t - 1))) ++pos;
      int front_sign = pos % 2 == 0 ? 1 : -1;
      KForm image = apply_one_form(KForm::basis(w.ring(), bit));
      for (const auto& [im, ic] : image.terms()) {
        int s = wedge_sign(im, rest);
        if (s == 0) continue;
        Frac coeff = c * ic;
        if (front_sign * s < 0) coeff = -coeff;
        r.add_coeff(static_cast<IndexMask>(im | rest), coeff);
      }
    }
  }
  return r;
}

Endomorphism Endomorphism::induced_block(int offset, int size) const {
  if (offset + size > dim_) fail(ErrorKind::Internal, "block out of range");
  Endomorphism r(ring_, size, acts_on_);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) r.m_[i][j] = m_[offset + i][offset + j];
  return r;
}

Endomorphism Endomorphism::substitute(const std::map<std::string, Frac>& bindings) const {
  Frac probe = Frac::zero(ring_).substitute(bindings);
  Endomorphism r(probe.ring(), dim_, acts_on_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.m_[i][j] = m_[i][j].substitute(bindings);
  return r;
}

std::string Endomorphism::str() const {
  std::ostringstream out;
  for (int i = 0; i < dim_; ++i) {
    out << (i == 0 ? "[" : " ");
    out << "[";
    for (int j = 0; j < dim_; ++j) {
      if (j) out << ", ";
      out << m_[i][j].str();
    }
    out << "]";
    if (i + 1 < dim_) out << "\n";
  }
  out << "]";
  return out.str();
}

}  // namespace hexforms
