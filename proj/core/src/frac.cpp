#include "hexforms/frac.hpp"

#include <utility>

namespace hexforms {

namespace {

void split_by_var(const Poly& p, int var, Poly* even, Poly* odd) {
  Poly::TermMap e, o;
  for (const auto& [m, c] : p.terms()) {
    int exp = var < static_cast<int>(m.size()) ? m[var] : 0;
    if (exp == 0) {
      e.emplace(m, c);
    } else {
      Mono r = m;
      r[var] = 0;
      o.emplace(std::move(r), c);
    }
  }
  *even = Poly::from_terms(p.ring(), std::move(e));
  *odd = Poly::from_terms(p.ring(), std::move(o));
}

std::pair<Frac, Frac> aligned(const Frac& a, const Frac& b) {
  if (a.ring() == b.ring()) return {a, b};
  RingPtr merged = merge_rings(a.ring(), b.ring());
  return {lift_frac(a, merged), lift_frac(b, merged)};
}

}  // namespace

Frac::Frac(Poly num) : num_(std::move(num)) {
  if (!num_.ring()) fail(ErrorKind::Internal, "fraction needs a ring");
  den_ = Poly::constant(num_.ring(), GaussRational(1));
}

Frac::Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!num_.ring() || !den_.ring()) fail(ErrorKind::Internal, "fraction needs a ring");
  canonicalize();
}

void Frac::canonicalize() {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ring(), GaussRational(1));
    return;
  }

  // Clear radical variables from the denominator: multiply both sides by the
  // conjugate d0 - d1*w and rewrite w^2.
  const RingPtr& ring = num_.ring();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = ring->nvars() - 1; v >= 0; --v) {
      if (!ring->has_relation(v) || !den_.contains_var(v)) continue;
      Poly d0(ring), d1(ring);
      split_by_var(den_, v, &d0, &d1);
      Poly w = Poly::variable(ring, v);
      Poly conjugate = d0 - d1 * w;
      Poly new_den = den_ * conjugate;
      if (new_den.is_zero())
        fail(ErrorKind::Internal,
             "denominator is a zero divisor modulo relation for " + ring->name(v));
      num_ = num_ * conjugate;
      den_ = std::move(new_den);
      changed = true;
      break;
    }
  }

  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one() && !g.is_zero()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  const GaussRational& lc = den_.leading_coeff();
  if (!lc.is_one()) {
    GaussRational inv = lc.inv();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

GaussRational Frac::constant_value() const {
  if (!is_constant()) fail(ErrorKind::Internal, "fraction is not constant");
  return num_.constant_value();
}

Frac Frac::operator-() const {
  Frac r = *this;
  r.num_ = -r.num_;
  return r;
}

Frac operator+(const Frac& a, const Frac& b) {
  auto [x, y] = aligned(a, b);
  Poly g = Poly::gcd(x.den_, y.den_);
  Poly db = y.den_.exact_div(g);
  Poly da = x.den_.exact_div(g);
  return Frac(x.num_ * db + y.num_ * da, x.den_ * db);
}

Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }

Frac operator*(const Frac& a, const Frac& b) {
  auto [x, y] = aligned(a, b);
  if (x.is_zero() || y.is_zero()) return Frac::zero(x.ring());
  Poly g1 = Poly::gcd(x.num_, y.den_);
  Poly g2 = Poly::gcd(y.num_, x.den_);
  Poly nx = g1.is_one() ? x.num_ : x.num_.exact_div(g1);
  Poly dy = g1.is_one() ? y.den_ : y.den_.exact_div(g1);
  Poly ny = g2.is_one() ? y.num_ : y.num_.exact_div(g2);
  Poly dx = g2.is_one() ? x.den_ : x.den_.exact_div(g2);
  return Frac(nx * ny, dx * dy);
}

Frac operator/(const Frac& a, const Frac& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero fraction");
  return a * b.inv();
}

bool operator==(const Frac& a, const Frac& b) {
  if (a.ring() == b.ring() || (a.ring() && b.ring() && a.ring()->same_content(*b.ring())))
    return a.num_ == b.num_ && a.den_ == b.den_;
  auto [x, y] = aligned(a, b);
  return x.num_ == y.num_ && x.den_ == y.den_;
}

Frac Frac::scaled(const GaussRational& c) const {
  Frac r = *this;
  r.num_ = r.num_.scaled(c);
  if (c.is_zero()) r.den_ = Poly::constant(ring(), GaussRational(1));
  return r;
}

Frac Frac::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero fraction");
  return Frac(den_, num_);
}

Frac Frac::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  Frac r = Frac::constant(ring(), GaussRational(1));
  for (int k = 0; k < e; ++k) r *= *this;
  return r;
}

Frac Frac::conj() const { return Frac(num_.conj(), den_.conj()); }

Frac Frac::substitute(const std::map<std::string, Frac>& bindings) const {
  Frac n = num_.substitute(bindings);
  Frac d = den_.substitute(bindings);
  if (d.is_zero())
    fail(ErrorKind::DivisionByZero, "substitution makes a denominator identically zero");
  return n / d;
}

GaussRational Frac::evaluate(const std::map<std::string, GaussRational>& bindings) const {
  GaussRational d = den_.evaluate(bindings);
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "denominator vanishes at this point");
  return num_.evaluate(bindings) / d;
}

std::string Frac::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.nterms() > 1) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

Frac lift_frac(const Frac& f, const RingPtr& target) {
  if (f.ring() == target) return f;
  return Frac(lift_to_ring(f.num(), target), lift_to_ring(f.den(), target));
}

Frac project_frac(const Frac& f, const RingPtr& target) {
  if (f.ring() == target) return f;
  return Frac(project_to_ring(f.num(), target), project_to_ring(f.den(), target));
}

}  // namespace hexforms
