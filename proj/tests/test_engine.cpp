#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddfact/atlas.hpp"
#include "oddfact/engine.hpp"
#include "oddfact/error.hpp"
#include "oddfact/fingerprint.hpp"

using namespace oddfact;

namespace {

struct Omega7 {
  OrthSpace V = standard_space(3, Field::make(3));
  CertifiedGroup Z;
  Omega7() {
    Group g = omega_group(V);
    g.claimed_order.reset();
    Z = certify(g, 7);  // full Schreier-Sims, no bound
  }
};

const Omega7& omega7() {
  static const Omega7 o;
  return o;
}

}  // namespace

TEST_CASE("Omega_7(3) certified without a bound") {
  CHECK(omega7().Z.order() == BigInt("4585351680"));
}

TEST_CASE("orbits of e1 and v") {
  const auto& [V, Z] = omega7();
  const Field& F = *V.field;
  const Orbit o = orbit(F, Z.gens, vector_point(V.e(1)));
  CHECK(o.size() == 728);
  for (const Point& p : o.points) CHECK(beta(V.gram, p.data, p.data) == 0);
  CHECK(orbit(F, Z.gens, vector_point(minus_point(V))).size() == 702);
  CHECK(orbit(F, Z.gens, line_point(F, V.e(1))).size() == 364);
  // Schreier vector reconstructs transversals
  for (int i : {1, 100, 727}) CHECK(act(F, o.points[0], orbit_transversal(o, Z.gens, i)) == o.points[i]);
  CHECK_THROWS_AS(orbit(F, Z.gens, vector_point(V.e(1)), 100), Error);
}

TEST_CASE("stabilizer orders are certified from orbit lengths") {
  const auto& [V, Z] = omega7();
  const CertifiedGroup s = stabilizer(Z.bsgs, vector_point(V.e(1)), 11);
  CHECK(s.order() * 728 == Z.order());
  for (const Mat& g : s.gens) CHECK(vec_mul(V.e(1), g) == V.e(1));
  const CertifiedGroup plus = stabilizer(Z.bsgs, vector_point(plus_point(V)), 12);
  CHECK(plus.order() == 6065280);
  const CertifiedGroup minus = stabilizer(Z.bsgs, vector_point(minus_point(V)), 13);
  CHECK(minus.order() == 6531840);
  Mat u(V.field, 3, 7);
  for (int i = 0; i < 3; ++i) u(i, V.e_index(i + 1)) = 1;
  const CertifiedGroup p3 = stabilizer(Z.bsgs, subspace_point(u), 14);
  CHECK(p3.order() == 4094064);
}

TEST_CASE("G2 and SL3 from the octonion tensor") {
  const auto& [V, Z] = omega7();
  const CertifiedGroup g2 = stabilizer(Z.bsgs, octonion_tensor(V), 21);
  CHECK(g2.order() == 4245696);
  const Suborbit sl3 = point_suborbit(g2, vector_point(plus_point(V)), 22);
  CHECK(sl3.orbit_size == 756);
  CHECK(sl3.stabilizer.order() == 5616);
  const Suborbit x = point_suborbit(stabilizer(Z.bsgs, vector_point(plus_point(V)), 23), octonion_tensor(V), 24);
  CHECK(x.orbit_size == 1080);
  CHECK(x.stabilizer.order() == 5616);
}

TEST_CASE("membership") {
  const auto& [V, Z] = omega7();
  for (const Mat& g : Z.gens) CHECK(Z.bsgs.contains(g));
  CHECK(Z.bsgs.contains(Z.gens[0] * Z.gens[1] * Z.gens[0]));
  CHECK_FALSE(Z.bsgs.contains(reflection(V.gram, V.d())));
  const Vec u = vec_add(*V.field, V.e(1), V.f(1));
  CHECK_FALSE(Z.bsgs.contains(reflection(V.gram, V.d()) * reflection(V.gram, u)));
}

TEST_CASE("known order bound: exceeding it is an error") {
  const auto& [V, Z] = omega7();
  BsgsOptions opt;
  opt.known_order = BigInt(1000);
  CHECK_THROWS_AS(Bsgs::build(V.field, 7, Z.gens, opt), Error);
  BsgsOptions cap;
  cap.order_cap = BigInt(1000);
  cap.verify = false;
  try {
    Bsgs::build(V.field, 7, Z.gens, cap);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("chain serialization round trip and canonical Schreier trees") {
  const auto& [V, Z] = omega7();
  const std::string text = serialize_bsgs(Z.bsgs, "Omega7(3)");
  std::string name;
  const Bsgs b = deserialize_bsgs(text, &name);
  CHECK(name == "Omega7(3)");
  CHECK(b.order() == Z.order());
  CHECK(b.orbit_sizes() == Z.bsgs.orbit_sizes());
  std::mt19937_64 r1(5), r2(5);
  for (int i = 0; i < 5; ++i) CHECK(b.random_element(r1) == Z.bsgs.random_element(r2));

  // corrupt one strong generator: the stored chain no longer verifies
  std::string bad = text;
  const auto pos = bad.rfind("\n", bad.size() - 2);
  const auto digit = bad.find_first_of("12", pos);
  REQUIRE(digit != std::string::npos);
  bad[digit] = bad[digit] == '1' ? '2' : '1';
  CHECK_THROWS_AS(deserialize_bsgs(bad), Error);
  CHECK_THROWS_AS(deserialize_bsgs("nonsense"), Error);
}

TEST_CASE("random elements are reproducible") {
  const auto& [V, Z] = omega7();
  RandomElements a(Z.gens, 99), b(Z.gens, 99), c(Z.gens, 100);
  const Mat x = a.next();
  CHECK(x == b.next());
  CHECK_FALSE(x == c.next());
  CHECK(Z.bsgs.contains(x));
}

TEST_CASE("coset orbits agree with point orbits") {
  const auto& [V, Z] = omega7();
  const CertifiedGroup g2 = stabilizer(Z.bsgs, octonion_tensor(V), 31);
  const CertifiedGroup x = stabilizer(Z.bsgs, vector_point(plus_point(V)), 32);
  const CosetOracle oracle(g2, 33);
  CHECK(oracle.same(Z.gens[0], g2.gens[0] * Z.gens[0]));
  const Suborbit s = coset_suborbit(x, oracle, 34);
  CHECK(s.orbit_size == 1080);
  CHECK(s.stabilizer.order() == 5616);
  // X = Y: orbit of length 1
  const Suborbit t = coset_suborbit(g2, oracle, 35);
  CHECK(t.orbit_size == 1);
  CHECK(t.stabilizer.order() == g2.order());
}

TEST_CASE("fingerprints of small reference groups") {
  const Fingerprint sl23 = fingerprint(certify(reference_group("SL2(3)"), 1), 1);
  CHECK(sl23.order == 24);
  CHECK(sl23.derived_order == 8);
  CHECK(sl23.center_order == BigInt(2));
  CHECK(sl23.abelian_invariants == std::vector<long long>{3});
  REQUIRE(sl23.histogram);
  CHECK(sl23.histogram->at(1) == 1);
  CHECK(sl23.histogram->at(2) == 1);
  CHECK(sl23.histogram->at(4) == 6);
  CHECK(sl23.histogram->at(3) == 8);
  CHECK(sl23.histogram->at(6) == 8);

  const Fingerprint s3 = fingerprint(certify(reference_group("S3"), 1), 1);
  CHECK(s3.order == 6);
  CHECK(s3.derived_order == 3);
  CHECK(s3.center_order == BigInt(1));
  CHECK(s3.abelian_invariants == std::vector<long long>{2});

  const Fingerprint sl33 = fingerprint(certify(reference_group("SL3(3)"), 1), 1);
  CHECK(sl33.is_perfect());
  CHECK(sl33.center_order == BigInt(1));
  CHECK(fingerprint_mismatches(sl33, sl33).empty());
  CHECK(fingerprint_mismatches(sl23, s3) == std::vector<std::string>{"order", "derivedOrder", "abelianInvariants",
                                                                      "centerOrder", "histogram"});
}
