#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddfact/error.hpp"
#include "oddfact/gf.hpp"

using namespace oddfact;

namespace {

// Independent polynomial arithmetic over Z/p modulo a monic f (low to high).
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<int> r(2 * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int k = 2 * d - 2; k >= d; --k) {
    const int c = r[k];
    if (!c) continue;
    for (int i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - c * f[i]) % p + p) % p;
  }
  r.resize(d);
  return r;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 1}}) {
    const FieldPtr F = Field::make(p, f);
    const int q = F->order();
    CAPTURE(q);
    for (Elt a = 0; a < q; ++a) {
      CHECK(F->add(a, 0) == a);
      CHECK(F->mul(a, 1) == a);
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
      for (Elt b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (Elt c = 0; c < q; ++c) {
          REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
          REQUIRE(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplication matches polynomial arithmetic modulo the stored modulus") {
  for (auto [p, f] : {std::pair{3, 2}, {3, 3}, {5, 2}}) {
    const FieldPtr F = Field::make(p, f);
    for (Elt a = 0; a < F->order(); ++a)
      for (Elt b = 0; b < F->order(); ++b)
        REQUIRE(F->coeffs(F->mul(a, b)) == poly_mulmod(F->coeffs(a), F->coeffs(b), F->modulus(), p));
  }
}

TEST_CASE("prime subfield elements are the codes 0..p-1 with integer arithmetic") {
  for (auto [p, f] : {std::pair{3, 2}, {3, 3}, {5, 2}}) {
    const FieldPtr F = Field::make(p, f);
    for (int a = 0; a < p; ++a) {
      CHECK(F->from_int(a) == static_cast<Elt>(a));
      for (int b = 0; b < p; ++b) {
        CHECK(F->add(a, b) == static_cast<Elt>((a + b) % p));
        CHECK(F->mul(a, b) == static_cast<Elt>((a * b) % p));
      }
    }
    CHECK(F->from_int(-1) == static_cast<Elt>(p - 1));
  }
}

TEST_CASE("squares, nonsquares, primitive elements and square roots") {
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {3, 2}, {3, 3}, {5, 2}}) {
    const FieldPtr F = Field::make(p, f);
    const int q = F->order();
    int squares = 0;
    for (Elt a = 1; a < q; ++a) {
      const bool sq = F->is_square(a);
      // independent check: a is a square iff some x has x^2 = a
      bool found = false;
      for (Elt x = 1; x < q && !found; ++x) found = F->mul(x, x) == a;
      CHECK(sq == found);
      squares += sq;
      if (sq) CHECK(F->mul(F->sqrt(a), F->sqrt(a)) == a);
    }
    CHECK(squares == (q - 1) / 2);
    CHECK_FALSE(F->is_square(F->nonsquare()));
    const Elt g = F->primitive();
    Elt x = 1;
    for (int k = 1; k < q - 1; ++k) {
      x = F->mul(x, g);
      CHECK(x != 1);
    }
    CHECK(F->mul(x, g) == 1);
  }
}

TEST_CASE("Frobenius is a field automorphism of order f") {
  const FieldPtr F = Field::make(3, 3);
  for (Elt a = 0; a < 27; ++a) {
    CHECK(F->pow(F->pow(F->pow(a, 3), 3), 3) == a);
    for (Elt b = 0; b < 27; ++b) CHECK(F->pow(F->mul(a, b), 3) == F->mul(F->pow(a, 3), F->pow(b, 3)));
  }
}

TEST_CASE("FieldElement wrapper and arith") {
  const FieldPtr F = Field::make(5);
  const FieldElement a = FieldElement::from_int(F, 3), b = FieldElement::from_int(F, 4);
  CHECK((a + b).code() == 2);
  CHECK((a - b).code() == 4);
  CHECK((a * b).code() == 2);
  CHECK((a / b * b) == a);
  CHECK(arith(a, b, ArithOp::Div) == a / b);
  CHECK((-a).code() == 2);
  CHECK(a.pow(4).code() == 1);
  CHECK_FALSE(is_square(nonsquare(F)));
  const FieldPtr G = Field::make(5);
  CHECK_THROWS_AS(FieldElement(G, 1) + FieldElement(Field::make(7), 1), Error);
}

TEST_CASE("errors") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::BadParams;
  };
  CHECK(code_of([] { Field::make(9); }) == ErrorCode::NonPrime);
  CHECK(code_of([] { Field::make(2); }) == ErrorCode::EvenCharacteristic);
  CHECK(code_of([] { Field::make(3)->inv(0); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { Field::make(3)->is_square(0); }) == ErrorCode::ZeroArgument);
}

TEST_CASE("serialization round trip") {
  for (auto [p, f] : {std::pair{3, 1}, {3, 2}, {3, 3}, {5, 2}}) {
    const FieldPtr F = Field::make(p, f);
    const FieldPtr G = Field::parse(F->serialize());
    CHECK(G->same_as(*F));
    for (Elt a = 0; a < F->order(); ++a)
      for (Elt b = 0; b < F->order(); ++b) REQUIRE(G->mul(a, b) == F->mul(a, b));
  }
}
