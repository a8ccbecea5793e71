#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddfact/atlas.hpp"
#include "oddfact/error.hpp"
#include "oddfact/orthospace.hpp"

using namespace oddfact;

namespace {

// Calls f on every vector of F^n.
template <class Fn>
void for_each_vector(int q, int n, Fn&& f) {
  Vec v(n, 0);
  for (;;) {
    f(v);
    int i = 0;
    while (i < n && ++v[i] == static_cast<Elt>(q)) v[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace

TEST_CASE("standard form: basis pairing and nondegeneracy") {
  for (long long q : {3, 5, 9}) {
    const auto [p, f] = prime_power(q);
    const OrthSpace V = standard_space(3, Field::make(static_cast<int>(p), f));
    CHECK(V.dim() == 7);
    CHECK(V.gram == V.gram.transpose());
    CHECK(V.gram.rank() == 7);
    CHECK(beta(V.gram, V.e(1), V.f(1)) == 1);
    CHECK(beta(V.gram, V.e(1), V.e(1)) == 0);
    CHECK(beta(V.gram, V.e(2), V.f(1)) == 0);
    CHECK(beta(V.gram, V.d(), V.d()) == 1);
  }
}

TEST_CASE("singular vectors of the 7-space over GF(3): exhaustive count") {
  const OrthSpace V = standard_space(3, Field::make(3));
  int singular = 0;
  for_each_vector(3, 7, [&](const Vec& v) {
    if (!vec_is_zero(v) && beta(V.gram, v, v) == 0) ++singular;
  });
  CHECK(singular == 728);
}

TEST_CASE("reflections and Siegel transformations") {
  const OrthSpace V = standard_space(3, Field::make(3));
  const FieldPtr& F = V.field;
  const Mat rd = reflection(V.gram, V.d());
  CHECK(is_isometry(V.gram, rd));
  CHECK((rd * rd).is_identity());
  CHECK(rd.det() == F->neg(1));
  CHECK(in_omega(V.gram, rd) == OmegaClass::InOnotSO);
  CHECK_THROWS_AS(reflection(V.gram, V.e(1)), Error);

  // β(d,d) = 1 is a square, β(e1+f1, e1+f1) = 2 is not, β(e1-f1, e1-f1) = -2 = 1 is
  const Vec u = vec_add(*F, V.e(1), V.f(1));
  const Vec w = vec_add(*F, V.e(1), vec_scale(*F, F->neg(1), V.f(1)));
  CHECK(in_omega(V.gram, rd * reflection(V.gram, u)) == OmegaClass::InSOnotOmega);
  CHECK(in_omega(V.gram, rd * reflection(V.gram, w)) == OmegaClass::InOmega);

  const Mat s = siegel(V.gram, V.e(1), V.e(2));
  CHECK(is_isometry(V.gram, s));
  CHECK(in_omega(V.gram, s) == OmegaClass::InOmega);
  CHECK(s.power(3).is_identity());

  Mat bad = Mat::identity(F, 7);
  bad(0, 1) = 1;
  CHECK(in_omega(V.gram, bad) == OmegaClass::NotIsometry);
}

TEST_CASE("perp and Witt types") {
  for (long long q : {3, 5, 9, 27}) {
    const auto [p, f] = prime_power(q);
    CAPTURE(q);
    const OrthSpace V = standard_space(3, Field::make(static_cast<int>(p), f));
    const Subspace minus_perp = perp(span(V.gram, {minus_point(V)}));
    const Subspace plus_perp = perp(span(V.gram, {plus_point(V)}));
    CHECK(minus_perp.dim() == 6);
    CHECK(witt_type(minus_perp).kind == WittKind::Minus);
    CHECK(witt_type(plus_perp).kind == WittKind::Plus);
    CHECK(witt_type(whole_space(V.gram)).kind == WittKind::OddDim);
    const Subspace iso = span(V.gram, {V.e(1), V.e(2), V.e(3)});
    CHECK(perp(iso).dim() == 4);
    CHECK(contains(perp(iso), V.e(1)));
    const WittType t = witt_type(span(V.gram, {V.e(1), V.e(2), V.d()}));
    CHECK(t.kind == WittKind::Degenerate);
    CHECK(t.radical_dim == 2);
  }
}

TEST_CASE("choose_lambda gives a minus-type perp for every odd q tested") {
  for (long long q : {3, 5, 7, 9, 25, 27}) {
    const auto [p, f] = prime_power(q);
    const OrthSpace V = standard_space(2, Field::make(static_cast<int>(p), f));
    const FieldElement lambda = choose_lambda(V);
    Vec v = V.e(1);
    v[V.f_index(1)] = lambda.code();
    CHECK(witt_type(perp(span(V.gram, {v}))).kind == WittKind::Minus);
  }
}

TEST_CASE("isometry transport between equivalent forms") {
  const OrthSpace V = standard_space(3, Field::make(5));
  const std::vector<Vec> ob = orthogonal_basis(V.gram);
  REQUIRE(ob.size() == 7);
  for (std::size_t i = 0; i < ob.size(); ++i)
    for (std::size_t j = 0; j < ob.size(); ++j)
      if (i != j) CHECK(beta(V.gram, ob[i], ob[j]) == 0);
  Mat diag(V.field, 7, 7);
  for (int i = 0; i < 7; ++i) diag(i, i) = beta(V.gram, ob[i], ob[i]);
  const Mat t = isometry_transport(diag, V.gram);
  CHECK(t * diag * t.transpose() == V.gram);
}
