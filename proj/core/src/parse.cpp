#include "hexforms/parse.hpp"

#include <cctype>
#include <optional>

namespace hexforms {

namespace {

// Recursive-descent parser over both scalar and form expressions. A "value"
// is a scalar together with an optional basis-form atom; multiplying two
// form atoms is rejected (wedge is not part of the text grammar).
class Parser {
 public:
  Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Frac scalar() {
    Value v = expr();
    if (v.form) err("form atom in scalar context");
    return v.coeff;
  }

  KForm form(int expected_degree) {
    skip_ws();
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) err("trailing input");
    return value_to_form(v, expected_degree);
  }

  KForm form_prefix(int expected_degree, char stop) {
    stop_ = stop;
    Value v = expr();
    stop_ = 0;
    return value_to_form(v, expected_degree);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) err(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  void check_end() {
    if (!at_end()) err("trailing input");
  }

 private:
  struct FormPart {
    KForm value;
  };
  struct Value {
    Frac coeff;
    std::optional<KForm> form;  // sum of basis atoms with coefficients
  };

  [[noreturn]] void err(const std::string& msg) {
    fail(ErrorKind::ParseError,
         "parse error at position " + std::to_string(pos_) + ": " + msg + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_stop() {
    skip_ws();
    return pos_ >= text_.size() || (stop_ && text_[pos_] == stop_);
  }

  KForm value_to_form(const Value& v, int expected_degree) {
    if (v.form) {
      if (expected_degree >= 0 && !v.form->is_zero() && v.form->degree() != expected_degree)
        err("form degree " + std::to_string(v.form->degree()) + " where " +
            std::to_string(expected_degree) + " expected");
      return *v.form;
    }
    if (!v.coeff.is_zero()) {
      if (expected_degree > 0) err("scalar where a form was expected");
      return KForm::scalar(ring_, v.coeff);
    }
    return KForm::zero(ring_, expected_degree >= 0 ? expected_degree : 0);
  }

  Value expr() {
    skip_ws();
    bool neg = false;
    while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      if (text_[pos_] == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    Value acc = term();
    if (neg) acc = negate(acc);
    while (!peek_stop()) {
      char c = text_[pos_];
      if (c != '+' && c != '-') break;
      ++pos_;
      Value rhs = term();
      if (c == '-') rhs = negate(rhs);
      acc = add(acc, rhs);
    }
    return acc;
  }

  Value negate(Value v) {
    v.coeff = -v.coeff;
    if (v.form) *v.form = -*v.form;
    return v;
  }

  Value add(const Value& a, const Value& b) {
    if (a.form.has_value() != b.form.has_value()) {
      // Adding a scalar and a form: only legal when one side is zero.
      if (a.form && b.coeff.is_zero()) return a;
      if (b.form && a.coeff.is_zero()) return b;
      err("cannot add a scalar and a form");
    }
    Value r;
    if (a.form) {
      r.coeff = Frac::zero(ring_);
      if (a.form->is_zero()) r.form = *b.form;
      else if (b.form->is_zero()) r.form = *a.form;
      else if (a.form->degree() != b.form->degree()) err("adding forms of different degree");
      else r.form = *a.form + *b.form;
    } else {
      r.coeff = a.coeff + b.coeff;
    }
    return r;
  }

  Value term() {
    Value acc{Frac::constant(ring_, GaussRational(1)), std::nullopt};
    bool expect_factor = true;
    bool dividing = false;
    while (true) {
      if (expect_factor) {
        Value f = factor();
        if (f.form) {
          if (dividing) err("cannot divide by a form");
          if (acc.form) err("product of two form atoms");
          acc.form = f.form;
          acc.coeff = acc.coeff * f.coeff;
        } else {
          acc.coeff = dividing ? acc.coeff / f.coeff : acc.coeff * f.coeff;
        }
        expect_factor = false;
        continue;
      }
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == '*' || c == '/') {
        dividing = (c == '/');
        ++pos_;
        expect_factor = true;
        continue;
      }
      break;
    }
    if (acc.form) *acc.form = acc.form->scaled(acc.coeff);
    return acc;
  }

  Value factor() {
    skip_ws();
    if (pos_ >= text_.size()) err("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      char saved = stop_;
      stop_ = 0;
      Value v = expr();
      stop_ = saved;
      expect(')');
      return apply_power(v);
    }
    if (c == '+' || c == '-') {
      ++pos_;
      Value v = factor();
      return c == '-' ? negate(v) : v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      Rational q(digits);
      return apply_power(Value{Frac::constant(ring_, GaussRational(q)), std::nullopt});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      if (name == "i")
        return apply_power(Value{Frac::constant(ring_, GaussRational::i()), std::nullopt});
      if (name[0] == 'e' && name.size() > 1 &&
          name.find_first_not_of("123456", 1) == std::string::npos) {
        std::vector<int> idx;
        for (size_t k = 1; k < name.size(); ++k) idx.push_back(name[k] - '0');
        KForm atom = KForm::basis(ring_, mask_from_indices(idx));
        return Value{Frac::constant(ring_, GaussRational(1)), atom};
      }
      if (ring_->index_of(name) < 0) err("unknown variable '" + name + "'");
      return apply_power(Value{Frac::variable(ring_, name), std::nullopt});
    }
    err(std::string("unexpected character '") + c + "'");
  }

  Value apply_power(Value v) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      if (digits.empty()) err("exponent expected after '^'");
      if (v.form) err("cannot raise a form atom to a power");
      int e = std::stoi(digits);
      v.coeff = v.coeff.pow(neg ? -e : e);
    }
    return v;
  }

  const std::string& text_;
  RingPtr ring_;
  size_t pos_ = 0;
  char stop_ = 0;
};

}  // namespace

RingPtr make_ring(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& relations) {
  auto ring = Ring::make(names);
  for (const auto& [radical, square_text] : relations) {
    int idx = ring->index_of(radical);
    if (idx < 0) fail(ErrorKind::ParseError, "relation for unknown variable " + radical);
    Frac square = parse_frac(square_text, ring);
    if (!square.is_polynomial())
      fail(ErrorKind::ParseError, "radical square must be polynomial: " + square_text);
    ring->install_relation(idx, square.num());
  }
  return ring;
}

Frac parse_frac(const std::string& text, const RingPtr& ring) {
  Parser p(text, ring);
  Frac f = p.scalar();
  p.check_end();
  return f;
}

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  Frac f = parse_frac(text, ring);
  if (!f.is_polynomial())
    fail(ErrorKind::ParseError, "expected a polynomial, got a proper fraction: " + text);
  return f.num();
}

KForm parse_form(const std::string& text, const RingPtr& ring, int expected_degree) {
  Parser p(text, ring);
  return p.form(expected_degree);
}

std::array<KForm, kFrameDim> parse_structure_tuple(const std::string& text, const RingPtr& ring) {
  Parser p(text, ring);
  p.expect('(');
  std::array<KForm, kFrameDim> out;
  for (int k = 0; k < kFrameDim; ++k) {
    out[k] = p.form_prefix(2, k + 1 < kFrameDim ? ',' : ')');
    p.expect(k + 1 < kFrameDim ? ',' : ')');
  }
  p.check_end();
  return out;
}

}  // namespace hexforms
