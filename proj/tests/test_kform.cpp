// Exterior algebra: wedge, contraction, evaluation, volume pairing.
#include <doctest.h>

#include <random>

#include "hexforms/kform.hpp"
#include "hexforms/parse.hpp"
#include "support/oracles.hpp"

using namespace hexforms;

namespace {

std::mt19937_64 rng(424242);

Frac random_scalar(const RingPtr& ring) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return Frac::constant(ring, GaussRational(q));
}

KForm random_form(const RingPtr& ring, int degree, int terms = 4) {
  KForm w(ring, degree);
  std::uniform_int_distribution<int> pick(0, 63);
  for (int t = 0; t < terms; ++t) {
    IndexMask m = static_cast<IndexMask>(pick(rng));
    if (mask_degree(m) != degree) continue;
    w.add_coeff(m, random_scalar(ring));
  }
  return w;
}

Vector random_vector(const RingPtr& ring) {
  Vector v(ring);
  for (int k = 1; k <= kFrameDim; ++k) v[k] = random_scalar(ring);
  return v;
}

}  // namespace

TEST_CASE("wedge on basis forms") {
  auto ring = make_ring({});
  KForm e1 = parse_form("e1", ring), e2 = parse_form("e2", ring);
  CHECK(wedge(e1, e2) == parse_form("e12", ring));
  KForm e12 = parse_form("e12", ring);
  CHECK(wedge(e12, e12).is_zero());
  CHECK(wedge(parse_form("e123", ring), parse_form("e456", ring)) ==
        parse_form("e123456", ring));
}

TEST_CASE("contraction is the interior product") {
  auto ring = make_ring({});
  KForm e123 = parse_form("e123", ring);
  CHECK(contract(Vector::basis(ring, 1), e123) == parse_form("e23", ring));
  CHECK(contract(Vector::basis(ring, 2), e123) == -parse_form("e13", ring));
  CHECK(contract(Vector::basis(ring, 4), e123).is_zero());
  CHECK_THROWS_AS((void)contract(Vector::basis(ring, 1), KForm::scalar(ring, Frac::constant(ring, GaussRational(1)))), HexError);
}

TEST_CASE("evaluation matches the determinant convention") {
  auto ring = make_ring({});
  KForm e12 = parse_form("e12", ring);
  auto one = GaussRational(1);
  CHECK(evaluate(e12, {Vector::basis(ring, 1), Vector::basis(ring, 2)}).constant_value() == one);
  CHECK(evaluate(e12, {Vector::basis(ring, 2), Vector::basis(ring, 1)}).constant_value() ==
        GaussRational(-1));
  CHECK_THROWS_AS((void)evaluate(e12, {Vector::basis(ring, 1)}), HexError);
}

TEST_CASE("volume quotient") {
  auto ring = make_ring({});
  KForm nu = parse_form("e123456", ring);
  CHECK(volume_quotient(nu.scaled(Frac::constant(ring, GaussRational(3))), nu).constant_value() ==
        GaussRational(3));
  CHECK(volume_quotient(KForm::zero(ring, 6), nu).is_zero());
  CHECK_THROWS_AS((void)volume_quotient(parse_form("e12345", ring), nu), HexError);
  CHECK_THROWS_AS((void)volume_quotient(nu, parse_form("e123456-e123456", ring)), HexError);
}

TEST_CASE("graded anticommutativity on random forms") {
  auto ring = make_ring({"t"});
  for (int it = 0; it < 500; ++it) {
    std::uniform_int_distribution<int> deg(0, 4);
    int p = deg(rng), q = deg(rng);
    KForm a = random_form(ring, p), b = random_form(ring, q);
    KForm lhs = wedge(a, b);
    KForm rhs = wedge(b, a);
    if ((p * q) % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("contraction is an anti-derivation") {
  auto ring = make_ring({"t"});
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> deg(1, 3);
    int p = deg(rng), q = deg(rng);
    KForm a = random_form(ring, p), b = random_form(ring, q);
    Vector v = random_vector(ring);
    KForm lhs = contract(v, wedge(a, b));
    KForm rhs = wedge(contract(v, a), b);
    KForm second = wedge(a, contract(v, b));
    if (p % 2 == 1) second = -second;
    rhs = rhs + second;
    CHECK(lhs == rhs);
    CHECK(contract(v, contract(v, wedge(a, b))).is_zero());
  }
}

TEST_CASE("evaluation is consistent with iterated contraction and permutation oracle") {
  auto ring = make_ring({"t"});
  for (int it = 0; it < 100; ++it) {
    std::uniform_int_distribution<int> deg(1, 4);
    int p = deg(rng);
    KForm w = random_form(ring, p);
    std::vector<Vector> args;
    for (int k = 0; k < p; ++k) args.push_back(random_vector(ring));
    Frac via_contract = evaluate(w, args);
    // evaluate(w,[v,...]) = evaluate(contract(v,w),[...])
    std::vector<Vector> rest(args.begin() + 1, args.end());
    CHECK(via_contract == evaluate(contract(w.degree() ? args[0] : args[0], w), rest));
    CHECK(via_contract == oracles::evaluate_by_permutations(w, args));
  }
}
