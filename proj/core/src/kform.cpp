#include "hexforms/kform.hpp"

#include <bit>
#include <sstream>

namespace hexforms {

int mask_degree(IndexMask m) { return std::popcount(m); }

std::string mask_str(IndexMask m) {
  std::string s;
  for (int k = 1; k <= kFrameDim; ++k)
    if (m & (1u << (k - 1))) s += static_cast<char>('0' + k);
  return s;
}

IndexMask mask_from_indices(const std::vector<int>& idx) {
  IndexMask m = 0;
  int prev = 0;
  for (int k : idx) {
    if (k <= prev || k > kFrameDim)
      fail(ErrorKind::ParseError, "form indices must be strictly increasing in 1..6");
    m |= static_cast<IndexMask>(1u << (k - 1));
    prev = k;
  }
  return m;
}

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  // Count inversions: pairs (x in a, y in b) with x > y.
  int inv = 0;
  for (int y = 1; y <= kFrameDim; ++y) {
    if (!(b & (1u << (y - 1)))) continue;
    for (int x = y + 1; x <= kFrameDim; ++x)
      if (a & (1u << (x - 1))) ++inv;
  }
  return (inv % 2 == 0) ? 1 : -1;
}

Vector::Vector(const RingPtr& ring) : ring_(ring) {
  for (auto& c : comps_) c = Frac::zero(ring);
}

Vector Vector::basis(const RingPtr& ring, int k) {
  Vector v(ring);
  v[k] = Frac::constant(ring, GaussRational(1));
  return v;
}

bool Vector::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

Vector Vector::scaled(const Frac& c) const {
  Vector r(ring_);
  for (int k = 1; k <= kFrameDim; ++k) r[k] = (*this)[k] * c;
  return r;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a.ring());
  for (int k = 1; k <= kFrameDim; ++k) r[k] = a[k] + b[k];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a.ring());
  for (int k = 1; k <= kFrameDim; ++k) r[k] = a[k] - b[k];
  return r;
}

bool operator==(const Vector& a, const Vector& b) {
  for (int k = 1; k <= kFrameDim; ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

std::string Vector::str() const {
  std::string out = "(";
  for (int k = 1; k <= kFrameDim; ++k) {
    if (k > 1) out += ", ";
    out += (*this)[k].str();
  }
  return out + ")";
}

KForm::KForm(const RingPtr& ring, int degree) : degree_(degree), ring_(ring) {
  if (degree < 0 || degree > kFrameDim)
    fail(ErrorKind::Internal, "form degree out of range");
}

KForm KForm::basis(const RingPtr& ring, IndexMask mask) {
  KForm w(ring, mask_degree(mask));
  w.terms_.emplace(mask, Frac::constant(ring, GaussRational(1)));
  return w;
}

KForm KForm::scalar(const RingPtr& ring, const Frac& c) {
  KForm w(ring, 0);
  if (!c.is_zero()) w.terms_.emplace(0, c);
  return w;
}

Frac KForm::coeff(IndexMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Frac::zero(ring_) : it->second;
}

void KForm::set_coeff(IndexMask mask, const Frac& c) {
  if (mask_degree(mask) != degree_)
    fail(ErrorKind::Internal, "index tuple length does not match form degree");
  if (c.is_zero()) terms_.erase(mask);
  else terms_[mask] = c;
}

void KForm::add_coeff(IndexMask mask, const Frac& c) {
  if (c.is_zero()) return;
  if (mask_degree(mask) != degree_)
    fail(ErrorKind::Internal, "index tuple length does not match form degree");
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

KForm KForm::operator-() const {
  KForm r(ring_, degree_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

KForm operator+(const KForm& a, const KForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree_ != b.degree_) fail(ErrorKind::Internal, "adding forms of different degree");
  KForm r = a;
  for (const auto& [m, c] : b.terms_) r.add_coeff(m, c);
  return r;
}

KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }

bool operator==(const KForm& a, const KForm& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.degree_ != b.degree_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [m, c] : a.terms_) {
    auto it = b.terms_.find(m);
    if (it == b.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

KForm KForm::scaled(const Frac& c) const {
  KForm r(ring_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.add_coeff(m, k * c);
  return r;
}

KForm KForm::substitute(const std::map<std::string, Frac>& bindings) const {
  KForm r;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Frac sc = c.substitute(bindings);
    if (first) {
      r = KForm(sc.ring(), degree_);
      first = false;
    }
    r.add_coeff(m, sc);
  }
  if (first) {
    // All-zero form: substitute into a zero coefficient to land in the right ring.
    Frac sc = Frac::zero(ring_).substitute(bindings);
    r = KForm(sc.ring(), degree_);
  }
  return r;
}

KForm KForm::conj() const {
  KForm r(ring_, degree_);
  for (const auto& [m, c] : terms_) r.add_coeff(m, c.conj());
  return r;
}

std::string KForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string atom = degree_ == 0 ? "" : "e" + mask_str(m);
    if (cs == "1" && !atom.empty()) {
      out << atom;
    } else {
      bool needs_parens = cs.find_first_of("+- ") != std::string::npos;
      if (needs_parens && !atom.empty()) out << "(" << cs << ")";
      else out << cs;
      if (!atom.empty()) out << "*" << atom;
    }
  }
  return out.str();
}

KForm wedge(const KForm& a, const KForm& b) {
  int deg = a.degree() + b.degree();
  if (deg > kFrameDim) deg = kFrameDim;
  KForm r(a.ring(), deg);
  if (a.degree() + b.degree() > kFrameDim) return r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Frac c = ca * cb;
      if (s < 0) c = -c;
      r.add_coeff(static_cast<IndexMask>(ma | mb), c);
    }
  }
  return r;
}

KForm contract(const Vector& v, const KForm& w) {
  if (w.degree() == 0) fail(ErrorKind::DegreeZero, "cannot contract a 0-form");
  KForm r(w.ring(), w.degree() - 1);
  for (const auto& [m, c] : w.terms()) {
    int pos = 0;
    for (int k = 1; k <= kFrameDim; ++k) {
      IndexMask bit = static_cast<IndexMask>(1u << (k - 1));
      if (!(m & bit)) continue;
      const Frac& vk = v[k];
      if (!vk.is_zero()) {
        Frac c2 = c * vk;
        if (pos % 2 == 1) c2 = -c2;
        r.add_coeff(static_cast<IndexMask>(m & ~bit), c2);
      }
      ++pos;
    }
  }
  return r;
}

Frac evaluate(const KForm& w, const std::vector<Vector>& args) {
  if (static_cast<int>(args.size()) != w.degree())
    fail(ErrorKind::ArityMismatch, "evaluate: argument count must equal the form degree");
  KForm cur = w;
  for (const auto& v : args) cur = contract(v, cur);
  return cur.coeff(0);
}

Frac volume_quotient(const KForm& top, const KForm& nu) {
  if (top.degree() != kFrameDim) fail(ErrorKind::BadVolume, "quotient needs a 6-form");
  if (nu.degree() != kFrameDim || nu.terms().size() != 1)
    fail(ErrorKind::BadVolume, "volume form must be a nonzero single-term 6-form");
  const auto& [mask, c] = *nu.terms().begin();
  return top.coeff(mask) / c;
}

}  // namespace hexforms
