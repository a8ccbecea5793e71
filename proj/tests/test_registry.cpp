#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oddfact/error.hpp"
#include "oddfact/orders.hpp"
#include "oddfact/registry.hpp"

using namespace oddfact;

namespace {

// |Ω_{2m+1}(q)| from the product formula, written out independently.
BigInt omega_odd(int m, long long q) {
  BigInt r = ipow(BigInt(q), m * m);
  for (int i = 1; i <= m; ++i) r *= ipow(BigInt(q), 2 * i) - 1;
  return r / 2;
}

// |Ω^-_{2n}(q)|.
BigInt omega_minus_even(int n, long long q) {
  BigInt r = ipow(BigInt(q), n * (n - 1)) * (ipow(BigInt(q), n) + 1);
  for (int i = 1; i < n; ++i) r *= ipow(BigInt(q), 2 * i) - 1;
  return r / 2;
}

}  // namespace

TEST_CASE("closed-form orders are consistent for every case") {
  for (long long q : {3, 5, 9, 27})
    for (int row = 1; row <= 11; ++row)
      for (const FactorCase& c : cases_for(row, q, std::nullopt)) {
        CAPTURE(c.id);
        CHECK(c.z_order == omega_odd(c.m, q));
        CHECK(c.z_order % c.y_order == 0);
        CHECK(c.z_order % c.x_order == 0);
        if (c.expect == Expect::Holds) {
          CHECK(order_obstruction(c.x_order, c.index()).empty());
          CHECK(c.index() * c.expected_intersection == c.x_order);
        }
      }
}

TEST_CASE("arithmetic audit identities hold for every q") {
  for (long long q : {3, 5, 9, 27}) {
    const auto ids = audit_identities_for(q);
    CHECK_FALSE(ids.empty());
    std::set<std::string> seen;
    for (const Identity& id : ids) {
      CAPTURE(id.id);
      CHECK(id.holds());
      CHECK(id.terms.size() >= 2);
      CHECK(seen.insert(id.id).second);
    }
  }
}

TEST_CASE("indices quoted at q = 3") {
  auto index_of = [](int row, const std::string& suffix) {
    for (const FactorCase& c : cases_for(row, 3, std::nullopt))
      if (c.id.size() >= suffix.size() && c.id.compare(c.id.size() - suffix.size(), suffix.size(), suffix) == 0)
        return c.index();
    FAIL("case not found: " << suffix);
    return BigInt(0);
  };
  CHECK(index_of(2, "Omega6+") == 1080);
  CHECK(index_of(3, "SU3") == 756);
  CHECK(index_of(4, "SL3") == 702);
  CHECK(index_of(9, "A9") == 1120);
  CHECK(index_of(10, "2.S5") == 6480);
  CHECK(index_of(11, "SL2(13)") == omega_odd(6, 3) / omega_minus_even(6, 3));
}

TEST_CASE("row scopes") {
  std::string why;
  CHECK(cases_for(1, 3, 3).size() == 2);
  CHECK(cases_for(1, 3, 4).size() == 5);
  CHECK(cases_for(2, 3, std::nullopt).size() == 5);
  CHECK(cases_for(3, 3, std::nullopt).size() == 2);
  CHECK(cases_for(9, 3, std::nullopt).size() == 6);
  CHECK(cases_for(10, 3, std::nullopt).size() == 3);
  CHECK(cases_for(7, 5, std::nullopt, &why).empty());
  CHECK(why == "needs q = 3");
  CHECK(cases_for(3, 5, std::nullopt, &why).empty());
  CHECK(why == "needs q = 3^f");
  CHECK_FALSE(cases_for(3, 9, std::nullopt).empty());
  CHECK_THROWS_AS(cases_for(12, 3, std::nullopt), Error);
  CHECK_THROWS_AS(cases_for(0, 3, std::nullopt), Error);

  // Sp variants need m >= 4
  for (const FactorCase& c : cases_for(1, 3, 3)) CHECK(c.id.find("Sp") == std::string::npos);
  int sp = 0;
  for (const FactorCase& c : cases_for(1, 3, 4)) sp += c.id.find("Sp") != std::string::npos;
  CHECK(sp == 2);
}

TEST_CASE("stretch and arithmetic-only flags") {
  for (int row = 1; row <= 11; ++row)
    for (const FactorCase& c : cases_for(row, 3, std::nullopt)) {
      CAPTURE(c.id);
      CHECK(c.stretch == (row == 5 || row == 11));
      if (row == 6) {
        CHECK_FALSE(c.constructive);
        CHECK_FALSE(c.arithmetic_only_reason.empty());
      } else {
        CHECK(c.constructive);
      }
    }
}

TEST_CASE("order obstruction texts") {
  CHECK(order_obstruction(BigInt(504), BigInt(756)) == "order obstruction 504 < 756");
  CHECK(order_obstruction(BigInt(25920), BigInt(702)) == "order obstruction: 702 does not divide 25920");
  CHECK(order_obstruction(BigInt(5616), BigInt(702)).empty());
}

TEST_CASE("negative controls") {
  const auto ctl = negative_controls();
  REQUIRE(ctl.size() == 2);
  for (const FactorCase& c : ctl) {
    CAPTURE(c.id);
    CHECK(c.expect == Expect::Fails);
    CHECK_FALSE(order_obstruction(c.x_order, c.index()).empty());
  }
  CHECK(order_obstruction(ctl[0].x_order, ctl[0].index()) == "order obstruction 504 < 756");
}

TEST_CASE("workspace seeds depend only on the run seed and the key") {
  const Workspace a(20240601, "", ""), b(20240601, "", ""), c(7, "", "");
  CHECK(a.seed_for("x") == b.seed_for("x"));
  CHECK(a.seed_for("x") != a.seed_for("y"));
  CHECK(a.seed_for("x") != c.seed_for("x"));
}

TEST_CASE("shared constructions at q = 3") {
  Workspace ws(20240601, "", "");
  CHECK(ws.omega(3, 3).order() == BigInt("4585351680"));
  CHECK(build::g2(ws, 3, 'A').order() == 4245696);
  CHECK(build::g2(ws, 3, 'B').order() == 4245696);
  CHECK(build::omega6(ws, 3, 3, '+').order() == 6065280);
  CHECK(build::omega6(ws, 3, 3, '-').order() == 6531840);
  CHECK(build::rt_group(ws, 3, 3, 3, 1, ExtKind::SL).order() == 4094064);
  CHECK(build::rt_group(ws, 3, 3, 1, 3, ExtKind::SL).order() == 729);
  // memoized: same object on repeat
  CHECK(&build::g2(ws, 3, 'A') == &build::g2(ws, 3, 'A'));
  CHECK(build::fixed_space_dim(build::g2(ws, 3, 'A').gens) == 0);
  CHECK(build::fixed_space_dim(build::rt_group(ws, 3, 3, 1, 3, ExtKind::SL).gens) >= 3);
}
