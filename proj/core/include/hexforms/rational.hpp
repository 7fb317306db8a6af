// Exact scalars: arbitrary-precision rationals and Gaussian rationals a+bi.
// Backed by GMP's mpq_class; arithmetic never rounds.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "hexforms/errors.hpp"

namespace hexforms {

using Rational = mpq_class;

Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& q);

// Exact square root of a nonnegative rational, when it exists.
std::optional<Rational> rational_sqrt(const Rational& q);

// Element of Q(i). Denominators of re/im are kept positive and reduced by
// mpq_class itself.
class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long n) : re_(n), im_(0) {}  // NOLINT(runtime/explicit)
  GaussRational(const Rational& re) : re_(re), im_(0) {}  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }
  static GaussRational from_pair(long num_re, long den_re, long num_im = 0, long den_im = 1) {
    Rational re(num_re, den_re);
    re.canonicalize();
    Rational im(num_im, den_im);
    im.canonicalize();
    return GaussRational(re, im);
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRational operator-() const { return GaussRational(-re_, -im_); }
  GaussRational conj() const { return GaussRational(re_, -im_); }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero Gaussian rational");
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  GaussRational inv() const {
    GaussRational one(1);
    one /= *this;
    return one;
  }

  // Deterministic total order (re, then im); used only for canonical tie-breaks.
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  // Prints 0, 3, -1/2, i, -i, 2*i, 1+i, 3/2-1/2*i.
  std::string str() const;

 private:
  Rational re_, im_;
};

}  // namespace hexforms
