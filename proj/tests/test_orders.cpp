#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddfact/error.hpp"
#include "oddfact/orders.hpp"

using namespace oddfact;

namespace {

// |GL_n(q)| by counting ordered bases, an oracle independent of the
// closed forms in the library.
BigInt gl_order(int n, long long q) {
  BigInt r = 1, qn = ipow(BigInt(q), n);
  for (int i = 0; i < n; ++i) r *= qn - ipow(BigInt(q), i);
  return r;
}

}  // namespace

TEST_CASE("orders quoted for q = 3") {
  CHECK(order_of(Family::OmegaOdd, {3, 3}) == BigInt("4585351680"));
  CHECK(order_of(Family::G2, {3}) == 4245696);
  CHECK(order_of(Family::SL, {3, 3}) == 5616);
  CHECK(order_of(Family::SU, {3, 3}) == 6048);
  CHECK(order_of(Family::OmegaPlus, {3, 3}) == 6065280);
  CHECK(order_of(Family::OmegaMinus, {3, 3}) == 6531840);
  CHECK(order_of(Family::TwistedG2, {3}) == 1512);
  CHECK(order_of(Family::SL, {1, 9}) == 1);
}

TEST_CASE("SL agrees with the basis count") {
  for (long long q : {3, 5, 7, 9, 25, 27})
    for (int n = 1; n <= 5; ++n) CHECK(order_of(Family::SL, {n, q}) * (q - 1) == gl_order(n, q));
}

TEST_CASE("orthogonal orders agree with point counts") {
  // |Omega_{2m+1} : Omega_{2m}^{+/-}| is the number of vectors of one fixed
  // nonzero norm; (q-1)/2 norms of each square class account for all
  // nonsingular vectors, (q^{2m+1} - 1) - (q^{2m} - 1) = q^{2m}(q - 1).
  for (long long q : {3, 5, 9})
    for (int m = 2; m <= 4; ++m) {
      const BigInt z = order_of(Family::OmegaOdd, {m, q});
      const BigInt plus = order_of(Family::OmegaPlus, {m, q}), minus = order_of(Family::OmegaMinus, {m, q});
      const BigInt qm = ipow(BigInt(q), m);
      CHECK(z % plus == 0);
      CHECK(z % minus == 0);
      CHECK(z / plus == qm * (qm + 1));
      CHECK(z / minus == qm * (qm - 1));
      CHECK((z / plus + z / minus) * ((q - 1) / 2) == ipow(BigInt(q), 2 * m) * (q - 1));
    }
}

TEST_CASE("Sp and PSp") {
  CHECK(order_of(Family::Sp, {2, 3}) == 24);
  CHECK(order_of(Family::Sp, {4, 3}) == 51840);
  CHECK(order_of(Family::PSp, {6, 3}) == order_of(Family::OmegaOdd, {3, 3}));
  CHECK(order_of(Family::Sp, {2, 5}) == order_of(Family::SL, {2, 5}));
}

TEST_CASE("families and factor strings") {
  CHECK(parse_family("G2") == Family::G2);
  CHECK(parse_family("OmegaOdd") == Family::OmegaOdd);
  CHECK_THROWS_AS(parse_family("Foo"), Error);
  CHECK(order_factors({Family::SL, {1, 9}}) == "1");
  CHECK(order_factors({Family::G2, {3}}) == "3^6 * (3^6-1) * (3^2-1)");
}

TEST_CASE("prime powers") {
  CHECK(prime_power(9) == std::pair<long long, int>{3, 2});
  CHECK(prime_power(27) == std::pair<long long, int>{3, 3});
  CHECK(prime_power(5) == std::pair<long long, int>{5, 1});
  CHECK_THROWS_AS(prime_power(15), Error);
  CHECK_THROWS_AS(prime_power(8), Error);
  CHECK_THROWS_AS(order_of(Family::TwistedG2, {9}), Error);
  CHECK_THROWS_AS(order_of(Family::G2, {4}), Error);
}
