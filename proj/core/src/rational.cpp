#include "hexforms/rational.hpp"

namespace hexforms {

Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) fail(ErrorKind::ParseError, "bad rational literal: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2)) return std::nullopt;
  if (rn * rn != num) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2)) return std::nullopt;
  if (rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

namespace {

// |q| printed without sign; caller handles signs.
std::string abs_str(const Rational& q) {
  Rational a = q < 0 ? Rational(-q) : q;
  return a.get_str();
}

}  // namespace

std::string GaussRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) {
    out += re_.get_str();
  }
  if (im_ != 0) {
    if (re_ != 0) out += (im_ > 0) ? "+" : "-";
    else if (im_ < 0) out += "-";
    Rational a = im_ < 0 ? Rational(-im_) : im_;
    if (a == 1) out += "i";
    else out += abs_str(im_) + "*i";
  }
  return out;
}

}  // namespace hexforms
