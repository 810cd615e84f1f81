#include <doctest.h>

#include "kakeya/error.hpp"
#include "kakeya/gf.hpp"
#include "oracles.hpp"

using namespace kakeya;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected kakeya::Error");
  return ErrorKind::InternalInconsistency;
}

std::vector<std::pair<unsigned, unsigned>> supported_fields() {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p = 2; p <= 256; ++p) {
    if (!is_prime(p)) continue;
    unsigned q = p;
    for (unsigned k = 1; q <= 256; ++k, q *= p) out.emplace_back(p, k);
  }
  return out;
}

}  // namespace

TEST_SUITE("gf") {

TEST_CASE("prime field arithmetic") {
  const auto f3 = make_field(3);
  CHECK(f3->add(Felt{1}, Felt{2}) == Felt{0});
  CHECK(f3->mul(Felt{2}, Felt{2}) == Felt{1});
  CHECK_FALSE(f3->modulus().has_value());

  const auto f5 = make_field(5);
  CHECK(f5->arith(ArithKind::Add, Felt{2}, Felt{4}) == Felt{1});
  CHECK(f5->arith(ArithKind::Sub, Felt{2}, Felt{4}) == Felt{3});
  CHECK(f5->arith(ArithKind::Neg, Felt{2}) == Felt{3});

  const auto f7 = make_field(7);
  CHECK(f7->arith(ArithKind::Inv, Felt{3}) == Felt{5});
  CHECK(f7->arith(ArithKind::Div, Felt{1}, Felt{3}) == Felt{5});
}

TEST_CASE("extension fields use the smallest irreducible modulus") {
  // Frozen from a brute-force divisor search over monic polynomials,
  // candidates ordered by (c_0, c_1, ...).
  struct Case {
    unsigned p, k;
    std::vector<unsigned> modulus;
  };
  const std::vector<Case> cases = {
      {2, 2, {1, 1, 1}},       {2, 3, {1, 0, 1, 1}},       {3, 2, {1, 0, 1}},
      {2, 4, {1, 0, 0, 1, 1}}, {5, 2, {1, 1, 1}},          {3, 3, {1, 0, 2, 1}},
      {7, 2, {1, 0, 1}},       {2, 5, {1, 0, 0, 1, 0, 1}}, {3, 4, {1, 0, 1, 1, 1}},
      {2, 8, {1, 0, 0, 0, 1, 1, 0, 1, 1}}, {13, 2, {1, 3, 1}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.k);
    const auto f = make_field(c.p, c.k);
    REQUIRE(f->modulus().has_value());
    CHECK(*f->modulus() == c.modulus);
  }
}

TEST_CASE("GF(4) and GF(9) products match polynomial arithmetic") {
  const auto f4 = make_field(2, 2);
  CHECK(f4->mul(Felt{2}, Felt{2}) == Felt{3});
  CHECK(f4->div(Felt{1}, Felt{2}) == Felt{3});
  const auto f9 = make_field(3, 2);
  CHECK(f9->mul(Felt{3}, Felt{3}) == Felt{2});

  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 8}}) {
    const auto f = make_field(p, k);
    for (unsigned a = 0; a < f->q(); ++a)
      for (unsigned b = 0; b < f->q(); ++b)
        REQUIRE(f->mul(Felt{a}, Felt{b}).idx == oracle::poly_mul(p, *f->modulus(), a, b));
  }
}

TEST_CASE("construction errors") {
  CHECK(kind_of([] { make_field(4); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_field(1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_field(2, 9); }) == ErrorKind::OrderTooLarge);
  CHECK(kind_of([] { make_field(257); }) == ErrorKind::OrderTooLarge);
  CHECK(kind_of([] { make_field(3, 0); }) == ErrorKind::InvalidDegree);
  const auto f = make_field(5);
  CHECK(kind_of([&] { f->inv(Felt{0}); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { f->div(Felt{3}, Felt{0}); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { f->element(5); }) == ErrorKind::InvalidElement);
  CHECK(kind_of([&] { f->arith(ArithKind::Mul, Felt{1}); }) == ErrorKind::InvalidElement);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (auto [p, k] : supported_fields()) {
    const auto f = make_field(p, k);
    if (f->q() > 16) continue;
    CAPTURE(f->q());
    CHECK(audit_field(*f).axioms_hold);
  }
}

TEST_CASE("every supported field: identities, inverses, nonzero product") {
  for (auto [p, k] : supported_fields()) {
    const auto f = make_field(p, k);
    CAPTURE(f->q());
    CHECK(f->add(Felt{0}, Felt{1}) == Felt{1});
    for (unsigned a = 1; a < f->q(); ++a) REQUIRE(f->mul(Felt{a}, f->inv(Felt{a})) == f->one());
    const Felt prod = nonzero_product(*f);
    if (f->odd())
      CHECK(prod == f->neg(f->one()));
    else
      CHECK(prod == f->one());
  }
  CHECK(nonzero_product(*make_field(5)) == Felt{4});
  CHECK(nonzero_product(*make_field(3)) == Felt{2});
  CHECK(nonzero_product(*make_field(2, 2)) == Felt{1});
}

TEST_CASE("index encodes base-p coefficients") {
  const auto f = make_field(3, 2);
  // (c0 + c1 a) + (d0 + d1 a) adds digitwise mod 3
  for (unsigned a = 0; a < 9; ++a)
    for (unsigned b = 0; b < 9; ++b) {
      const unsigned expect = ((a % 3 + b % 3) % 3) + 3 * ((a / 3 + b / 3) % 3);
      REQUIRE(f->add(Felt{a}, Felt{b}).idx == expect);
    }
}

}
