#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddfact/atlas.hpp"
#include "oddfact/error.hpp"
#include "oddfact/fingerprint.hpp"

using namespace oddfact;

namespace {

// Order from a full Schreier-Sims run, ignoring any claimed order.
BigInt order_of_group(Group g) {
  g.claimed_order.reset();
  return certify(g, 3).order();
}

bool all_in_omega(const Group& g) {
  for (const Mat& m : g.gens)
    if (in_omega(g.gram, m) != OmegaClass::InOmega) return false;
  return true;
}

OrthSpace space(int m, int p, int f = 1) { return standard_space(m, Field::make(p, f)); }

}  // namespace

TEST_CASE("Omega generators") {
  for (auto [m, p] : {std::pair{2, 3}, {3, 3}, {2, 5}}) {
    const Group g = omega_group(space(m, p));
    CHECK(all_in_omega(g));
    CHECK(order_of_group(g) == order_of(Family::OmegaOdd, {m, p}));
  }
}

TEST_CASE("parabolic R and T") {
  for (auto [m, p] : {std::pair{3, 3}, {4, 3}, {3, 5}}) {
    const OrthSpace V = space(m, p);
    const ParabolicRT rt = parabolic_rt(V);
    CHECK(all_in_omega(rt.R));
    CHECK(all_in_omega(rt.T));
    CHECK(order_of_group(rt.R) == ipow(BigInt(p), m * (m + 1) / 2));
    CHECK(order_of_group(rt.T) == order_of(Family::SL, {m, p}));
    // R acts trivially on U = <e_i>
    for (const Mat& g : rt.R.gens)
      for (int i = 1; i <= m; ++i) CHECK(vec_mul(V.e(i), g) == V.e(i));
  }
}

TEST_CASE("field extension subgroups of T") {
  const OrthSpace V3 = space(3, 3), V4 = space(4, 3);
  CHECK(order_of_group(embed_field_ext(3, 1, ExtKind::SL, V3)) == 5616);
  CHECK(order_of_group(embed_field_ext(1, 3, ExtKind::SL, V3)) == 1);
  CHECK(order_of_group(embed_field_ext(2, 2, ExtKind::SL, V4)) == 720);
  CHECK(order_of_group(embed_field_ext(2, 2, ExtKind::Sp, V4)) == 720);
  CHECK(order_of_group(embed_field_ext(4, 1, ExtKind::Sp, V4)) == 51840);
  CHECK_THROWS_AS(embed_field_ext(2, 1, ExtKind::SL, V3), Error);
  CHECK(all_in_omega(embed_field_ext(2, 2, ExtKind::SL, V4)));
}

TEST_CASE("restriction of scalars preserves products") {
  const FieldPtr F9 = Field::make(3, 2), F3 = Field::make(3);
  const std::vector<Mat> gens = sl_generators(2, F9);
  REQUIRE(gens.size() >= 2);
  const Mat ab = restrict_scalars(gens[0] * gens[1], F3);
  CHECK(ab == restrict_scalars(gens[0], F3) * restrict_scalars(gens[1], F3));
  CHECK(ab.rows() == 4);
}

TEST_CASE("G2 tensor stabilizer") {
  const OrthSpace V = space(3, 3);
  const CertifiedGroup z = certify(omega_group(V), 1);
  CHECK(stabilizer(z.bsgs, octonion_tensor(V), 2).order() == 4245696);
}

TEST_CASE("subgroups of Omega_7(3) built directly") {
  const OrthSpace V = space(3, 3);
  const Group a9 = permutation_module_group(V, 9, false);
  CHECK(all_in_omega(a9));
  CHECK(order_of_group(a9) == 181440);
  CHECK(order_of_group(permutation_module_group(V, 8, true)) == 40320);
  CHECK(order_of_group(permutation_module_group(V, 8, false)) == 20160);
  const Group sp62 = weyl_e7_plus(V);
  CHECK(all_in_omega(sp62));
  CHECK(order_of_group(sp62) == 1451520);
  CHECK(order_of_group(monomial_2_6_a7(V)) == 161280);
  CHECK(order_of_group(monomial_3_5_2_4_a5(V)) == 233280);
  const ESGroups es = es_subgroup(V);
  CHECK(all_in_omega(es.X));
  CHECK(order_of_group(es.X) == 81 * 360);
  CHECK(order_of_group(es.E) == 81);
}

TEST_CASE("SL_2(13) in dimension 6 over GF(3)") {
  const Group g = sl2_13_gf3();
  CHECK(g.gram.rows() == 6);
  CHECK(g.gram.field()->order() == 3);
  for (const Mat& m : g.gens) CHECK(m.det() == 1);
  const CertifiedGroup c = certify(g, 4);
  CHECK(c.order() == 2184);
  const Fingerprint f = fingerprint(c, 5);
  CHECK(f.is_perfect());
  CHECK(f.center_order == BigInt(2));
}

TEST_CASE("wedge construction dimensions") {
  const WedgeEmbedding w = wedge_embedding(Field::make(3));
  CHECK(w.v1_dim == 14);
  CHECK(w.quotient_dim == 13);
  CHECK(w.X.gram.rows() == 13);
  for (const Mat& m : w.X.gens) CHECK(is_isometry(w.X.gram, m));
  CHECK_THROWS_AS(wedge_embedding(Field::make(5)), Error);
}

TEST_CASE("reference groups") {
  for (const std::string& name : reference_group_names()) {
    CAPTURE(name);
    const Group g = reference_group(name);
    REQUIRE(g.claimed_order);
    CHECK(order_of_group(g) == *g.claimed_order);
  }
  CHECK_THROWS_AS(reference_group("nope"), Error);
}

TEST_CASE("generator files round trip and reject foreign forms") {
  const OrthSpace V = space(3, 3);
  const Group a9 = permutation_module_group(V, 9, false);
  const std::string text = serialize_group(a9);
  const Group back = parse_group(text, &V.gram);
  CHECK(back.name == a9.name);
  CHECK(back.gens == a9.gens);
  CHECK(back.claimed_order == a9.claimed_order);
  Mat other = V.gram;
  other(V.d_index(), V.d_index()) = 2;
  CHECK_THROWS_AS(parse_group(text, &other), Error);
  const std::string head = text.substr(0, text.find('\n') + 1);
  CHECK_THROWS_AS(parse_group(head + "DIM x\n"), Error);
  CHECK_THROWS_AS(parse_group(head + "DIM 7\nNAME a\nCLAIMED_ORDER 12x\nPROVENANCE p\n"), Error);
}
