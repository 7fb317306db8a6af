#include "hexforms/liealg.hpp"

#include <sstream>

namespace hexforms {

Assumption Assumption::note(std::string text) {
  Assumption a;
  a.text = std::move(text);
  return a;
}

Assumption Assumption::predicate(const RingPtr& ring, const std::string& text) {
  static const char* kOps[] = {"<=", ">=", "!=", "==", "<", ">"};
  for (const char* op : kOps) {
    auto pos = text.find(op);
    if (pos == std::string::npos) continue;
    Assumption a;
    a.text = text;
    a.checkable = true;
    a.op = op;
    a.lhs = parse_frac(text.substr(0, pos), ring);
    a.rhs = parse_frac(text.substr(pos + a.op.size()), ring);
    return a;
  }
  fail(ErrorKind::ParseError, "assumption has no comparison operator: " + text);
}

bool Assumption::holds(const std::map<std::string, GaussRational>& bindings) const {
  if (!checkable) return true;
  GaussRational l = lhs.evaluate(bindings), r = rhs.evaluate(bindings);
  if (op == "!=") return l != r;
  if (op == "==") return l == r;
  if (!l.is_real() || !r.is_real())
    fail(ErrorKind::AssumptionViolation, "ordered comparison of non-real values: " + text);
  int c = cmp(l.re(), r.re());
  if (op == "<") return c < 0;
  if (op == ">") return c > 0;
  if (op == "<=") return c <= 0;
  return c >= 0;
}

LieAlgebra LieAlgebra::from_differentials(std::string name, RingPtr ring,
                                          std::array<KForm, kFrameDim> d_basis, bool check) {
  LieAlgebra g;
  g.name_ = std::move(name);
  g.ring_ = std::move(ring);
  for (int k = 0; k < kFrameDim; ++k) {
    if (!d_basis[k].is_zero() && d_basis[k].degree() != 2)
      fail(ErrorKind::ParseError, "structure equation for e" + std::to_string(k + 1) +
                                      " must be a 2-form");
    g.d_[k] = d_basis[k];
  }
  if (check) {
    JacobiReport rep = g.check_jacobi();
    if (!rep.ok) {
      std::ostringstream msg;
      msg << "Jacobi identity fails for " << g.name_ << ":";
      for (const auto& [k, witness] : rep.failures)
        msg << " d(de" << k << ") = " << witness.str() << ";";
      fail(ErrorKind::JacobiError, msg.str());
    }
  }
  return g;
}

LieAlgebra LieAlgebra::parse(std::string name, const std::string& tuple_text, const RingPtr& ring,
                             bool check) {
  return from_differentials(std::move(name), ring, parse_structure_tuple(tuple_text, ring), check);
}

Frac LieAlgebra::c(int k, int i, int j) const {
  if (i == j) return Frac::zero(ring_);
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  IndexMask m = static_cast<IndexMask>((1u << (i - 1)) | (1u << (j - 1)));
  Frac v = d_[k - 1].coeff(m);
  return sign < 0 ? -v : v;
}

KForm LieAlgebra::differential(const KForm& w) const {
  if (w.is_zero() || w.degree() == 0)
    return KForm::zero(ring_, w.degree() == 0 ? 1 : std::min(w.degree() + 1, kFrameDim));
  KForm out(w.ring(), std::min(w.degree() + 1, kFrameDim));
  if (w.degree() == kFrameDim) return out;
  for (const auto& [mask, c] : w.terms()) {
    int pos = 0;
    for (int k = 1; k <= kFrameDim; ++k) {
      IndexMask bit = static_cast<IndexMask>(1u << (k - 1));
      if (!(mask & bit)) continue;
      const KForm& dek = d_[k - 1];
      if (!dek.is_zero()) {
        // (-1)^pos e^{..<k} ^ de^k ^ e^{k<..}; fold both wedges into one sign.
        IndexMask rest = static_cast<IndexMask>(mask & ~bit);
        for (const auto& [dm, dc] : dek.terms()) {
          int s = wedge_sign(dm, rest);
          if (s == 0) continue;
          // Move de^k into the slot of e^k: sign (-1)^pos from commuting the
          // 2-form past the first pos one-forms is +1 (even degree), but the
          // removed e^k sat at position pos, so the slot sign is (-1)^pos.
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

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector r(ring_);
  for (int k = 1; k <= kFrameDim; ++k) {
    // [x,y]^k = -de^k(x,y)
    Frac acc = Frac::zero(ring_);
    for (const auto& [mask, c] : d_[k - 1].terms()) {
      int i = 0, j = 0;
      for (int t = 1; t <= kFrameDim; ++t)
        if (mask & (1u << (t - 1))) {
          if (i == 0) i = t;
          else j = t;
        }
      acc += c * (x[i] * y[j] - x[j] * y[i]);
    }
    r[k] = -acc;
  }
  return r;
}

JacobiReport LieAlgebra::check_jacobi() const {
  JacobiReport rep;
  for (int k = 1; k <= kFrameDim; ++k) {
    KForm dd = differential(d_basis(k));
    if (!dd.is_zero()) {
      rep.ok = false;
      rep.failures.emplace_back(k, dd);
    }
  }
  return rep;
}

UnimodularReport LieAlgebra::check_unimodular() const {
  UnimodularReport rep;
  for (int i = 1; i <= kFrameDim; ++i) {
    Frac tr = Frac::zero(ring_);
    for (int j = 1; j <= kFrameDim; ++j) tr += c(j, i, j);
    if (!tr.is_zero()) {
      rep.ok = false;
      rep.failures.emplace_back(i, tr);
    }
  }
  return rep;
}

LieAlgebra LieAlgebra::substitute(const std::string& new_name,
                                  const std::map<std::string, Frac>& bindings, bool check) const {
  std::array<KForm, kFrameDim> d;
  for (int k = 0; k < kFrameDim; ++k) d[k] = d_[k].substitute(bindings);
  LieAlgebra g = from_differentials(new_name, d[0].ring(), d, check);
  g.tags = tags;
  return g;
}

std::string LieAlgebra::tuple_str() const {
  std::string out = "(";
  for (int k = 1; k <= kFrameDim; ++k) {
    if (k > 1) out += ",";
    out += d_basis(k).str();
  }
  return out + ")";
}

std::string LieAlgebra::display_tuple_str() const {
  std::string s = tuple_str();
  std::string out;
  for (size_t p = 0; p < s.size(); ++p) {
    if (s[p] == 'e' && p + 1 < s.size() && s[p + 1] >= '1' && s[p + 1] <= '6') continue;
    out += s[p];
  }
  return out;
}

}  // namespace hexforms
