#include "oddfact/atlas.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace oddfact {

namespace {

// 1, x, ..., x^{f-1}: a basis of GF(q) over GF(p).
std::vector<Elt> prime_basis(const Field& F) {
  std::vector<Elt> out;
  Elt c = 1;
  for (int k = 0; k < F.degree(); ++k, c = static_cast<Elt>(c * F.p())) out.push_back(c);
  return out;
}

Mat conjugate_into(const Mat& T, const Mat& Tinv, const Mat& g) { return T * g * Tinv; }

std::vector<Mat> transport_all(const Mat& T, const std::vector<Mat>& gens) {
  const Mat Tinv = T.inverse();
  std::vector<Mat> out;
  out.reserve(gens.size());
  for (const Mat& g : gens) out.push_back(conjugate_into(T, Tinv, g));
  return out;
}

Mat permutation_matrix(const FieldPtr& F, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Mat g(F, n, n);
  for (int i = 0; i < n; ++i) g(i, perm[i]) = 1;
  return g;
}

std::vector<int> cycle(int n, const std::vector<int>& c) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

bool is_odd(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int parity = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1, ++len;
    parity ^= (len + 1) & 1;
  }
  return parity;
}

// Generators of Sym(k) (full) or Alt(k) on points 0..k-1 inside Sym(n).
std::vector<std::vector<int>> symmetric_generators(int n, int k, bool full) {
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  if (full) return {cycle(n, {0, 1}), cycle(n, all)};
  if (k < 3) return {};
  if (k % 2 == 1) return {cycle(n, {0, 1, 2}), cycle(n, all)};
  return {cycle(n, {0, 1, 2}), cycle(n, std::vector<int>(all.begin() + 1, all.end()))};
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Vec scaled(const Field& F, Elt c, const Vec& v) { return vec_scale(F, c, v); }

}  // namespace

Group make_group(std::string name, const Mat& gram, std::vector<Mat> gens, std::optional<BigInt> claimed,
                 std::string provenance) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!is_isometry(gram, gens[i]))
      throw Error(ErrorCode::IsometryViolation, name + ": generator " + std::to_string(i) + " does not preserve the form");
  return Group{std::move(name), gram, std::move(gens), std::move(claimed), std::move(provenance)};
}

CertifiedGroup certify(const Group& g, std::uint64_t seed, const std::optional<BigInt>& bound) {
  BsgsOptions opt;
  opt.seed = seed;
  opt.known_order = bound;
  Bsgs b;
  try {
    b = Bsgs::build(g.gram.field(), g.gram.rows(), g.gens, opt);
  } catch (const Error& e) {
    throw Error(e.code(), g.name + ": " + e.what());
  }
  if (g.claimed_order && b.order() != *g.claimed_order)
    throw Error(ErrorCode::CertificationFailure,
                g.name + ": order " + to_string(b.order()) + " but claimed " + to_string(*g.claimed_order));
  return CertifiedGroup{g.gens, std::move(b)};
}

Group omega_group(const OrthSpace& V) {
  const Field& F = *V.field;
  std::vector<Vec> singular;
  for (int i = 1; i <= V.m; ++i) {
    singular.push_back(V.e(i));
    singular.push_back(V.f(i));
  }
  std::vector<Mat> gens;
  const auto basis = prime_basis(F);
  for (std::size_t a = 0; a < singular.size(); ++a) {
    std::vector<Vec> partners;
    for (std::size_t b = a + 1; b < singular.size(); ++b)
      if (beta(V.gram, singular[a], singular[b]) == 0) partners.push_back(singular[b]);
    partners.push_back(V.d());
    for (const Vec& w : partners)
      for (Elt c : basis) gens.push_back(siegel(V.gram, singular[a], scaled(F, c, w)));
  }
  const long long q = F.order();
  return make_group("Omega(" + std::to_string(V.dim()) + "," + std::to_string(q) + ")", V.gram, std::move(gens),
                    order_of(Family::OmegaOdd, {V.m, q}));
}

Mat levi_element(const OrthSpace& V, const Mat& A) {
  if (A.rows() != V.m || A.cols() != V.m) throw Error(ErrorCode::DimensionMismatch, "levi block must be m x m");
  const Mat B = A.inverse().transpose();
  Mat g = Mat::identity(V.field, V.dim());
  for (int i = 0; i < V.m; ++i)
    for (int j = 0; j < V.m; ++j) {
      g(V.e_index(i + 1), V.e_index(j + 1)) = A(i, j);
      g(V.f_index(i + 1), V.f_index(j + 1)) = B(i, j);
    }
  return g;
}

ParabolicRT parabolic_rt(const OrthSpace& V) {
  const Field& F = *V.field;
  const auto basis = prime_basis(F);
  const long long q = F.order();
  std::vector<Mat> r;
  for (int i = 1; i <= V.m; ++i) {
    for (int j = i + 1; j <= V.m; ++j)
      for (Elt c : basis) r.push_back(siegel(V.gram, V.e(i), scaled(F, c, V.e(j))));
    for (Elt c : basis) r.push_back(siegel(V.gram, V.e(i), scaled(F, c, V.d())));
  }
  std::vector<Mat> t;
  for (const Mat& A : sl_generators(V.m, V.field)) t.push_back(levi_element(V, A));
  const std::string tag = "(" + std::to_string(V.m) + "," + std::to_string(q) + ")";
  return ParabolicRT{
      make_group("R" + tag, V.gram, std::move(r), ipow(BigInt(q), static_cast<unsigned>(V.m * (V.m + 1) / 2))),
      make_group("T" + tag, V.gram, std::move(t), order_of(Family::SL, {V.m, q}))};
}

std::string to_string(ExtKind k) { return k == ExtKind::SL ? "SL" : "Sp"; }

Mat restrict_scalars(const Mat& A, const FieldPtr& base) {
  const Field& E = *A.field();
  const int b = E.degree();
  if (base->p() != E.p() || base->degree() != 1) throw Error(ErrorCode::FieldMismatch, "base must be the prime field");
  Mat out(base, A.rows() * b, A.cols() * b);
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      const Elt c = A(i, j);
      if (!c) continue;
      Elt xk = 1;
      for (int k = 0; k < b; ++k, xk = static_cast<Elt>(xk * E.p())) {
        const auto co = E.coeffs(E.mul(xk, c));
        for (int l = 0; l < b; ++l) out(i * b + k, j * b + l) = static_cast<Elt>(co[l]);
      }
    }
  return out;
}

std::vector<Mat> sl_generators(int a, const FieldPtr& F) {
  std::vector<Mat> out;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      if (i == j) continue;
      for (Elt c : prime_basis(*F)) {
        Mat g = Mat::identity(F, a);
        g(i, j) = c;
        out.push_back(std::move(g));
      }
    }
  return out;
}

std::vector<Mat> sp_generators(int a, const FieldPtr& F) {
  if (a % 2) throw Error(ErrorCode::BadFactorization, "symplectic dimension must be even");
  const Field& K = *F;
  // ω(E_i,F_i) = 1 on the ordered basis E_1,F_1,...
  Mat omega(F, a, a);
  for (int i = 0; i < a; i += 2) {
    omega(i, i + 1) = 1;
    omega(i + 1, i) = K.neg(1);
  }
  std::vector<Vec> dirs;
  for (int r = 0; r < a; ++r) dirs.push_back(unit_vector(a, r));
  for (int r = 0; r < a; ++r)
    for (int s = r + 1; s < a; ++s) {
      Vec v = unit_vector(a, r);
      v[s] = 1;
      dirs.push_back(v);
    }
  std::vector<Mat> out;
  for (const Vec& u : dirs)
    for (Elt c : prime_basis(K)) {
      // x -> x + c ω(x,u) u
      Mat g = Mat::identity(F, a);
      for (int r = 0; r < a; ++r) {
        const Elt w = K.mul(c, beta(omega, unit_vector(a, r), u));
        if (!w) continue;
        for (int s = 0; s < a; ++s) g(r, s) = K.add(g(r, s), K.mul(w, u[s]));
      }
      out.push_back(std::move(g));
    }
  return out;
}

Group embed_field_ext(int a, int b, ExtKind kind, const OrthSpace& V) {
  const Field& F = *V.field;
  if (!F.is_prime()) throw Error(ErrorCode::BadParams, "field extension subgroups need prime q");
  if (a < 1 || b < 1 || a * b != V.m) throw Error(ErrorCode::BadFactorization, "need a*b = m");
  if (kind == ExtKind::Sp && a % 2) throw Error(ErrorCode::BadFactorization, "Sp needs even a");
  const FieldPtr E = Field::make(F.p(), b);
  const auto block = kind == ExtKind::SL ? sl_generators(a, E) : sp_generators(a, E);
  std::vector<Mat> gens;
  for (const Mat& A : block) gens.push_back(levi_element(V, restrict_scalars(A, V.field)));
  const long long Q = E->order();
  const BigInt order = order_of(kind == ExtKind::SL ? Family::SL : Family::Sp, {a, Q});
  return make_group(to_string(kind) + "(" + std::to_string(a) + "," + std::to_string(Q) + ")", V.gram, std::move(gens),
                    order);
}

Vec minus_point(const OrthSpace& V) {
  Vec v = V.e(1);
  v[V.f_index(1)] = choose_lambda(V).code();
  return v;
}

Vec plus_point(const OrthSpace& V) {
  const int q = V.field->order();
  for (int c = 1; c < q; ++c) {
    Vec v = V.e(1);
    v[V.f_index(1)] = static_cast<Elt>(c);
    if (witt_type(perp(span(V.gram, {v}))).kind == WittKind::Plus) return v;
  }
  throw Error(ErrorCode::ConstructionFailure, "no vector with plus-type perp");
}

Point octonion_tensor(const OrthSpace& V) {
  if (V.m != 3) throw Error(ErrorCode::BadParams, "octonion tensor needs dimension 7");
  const Field& F = *V.field;
  const Mat minus_id = Mat::identity(V.field, 7).scaled(F.neg(1));
  // rows of P: an orthonormal basis (norm -1) in standard coordinates
  const Mat P = isometry_transport(V.gram, minus_id);
  static const int lines[7][3] = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
  std::vector<TensorTerm> terms;
  for (const auto& l : lines) terms.push_back({l[0], l[1], l[2], 1});
  return act(F, tensor_point(F, 7, terms), P);
}

XBasis x_basis(const OrthSpace& V) {
  if (V.m != 3) throw Error(ErrorCode::BadParams, "x-basis needs dimension 7");
  const Field& F = *V.field;
  XBasis xb;
  xb.field = V.field;
  xb.gram = Mat(V.field, 7, 7);
  xb.gram(X1, X8) = xb.gram(X8, X1) = 1;
  xb.gram(X2, X7) = xb.gram(X7, X2) = 1;
  xb.gram(X3, X6) = xb.gram(X6, X3) = 1;
  xb.gram(XY, XY) = F.neg(F.from_int(2));
  const Mat T = similarity_transport(xb.gram, V.gram);
  xb.from_std = T;
  xb.to_std = T.inverse();
  // w^⊥ ∩ W_1 = <x_2,x_7> ⊥ <y,z> is of minus type iff -μ is a nonsquare.
  xb.mu = F.is_square(F.neg(1)) ? F.nonsquare() : Elt{1};
  return xb;
}

ProofElements proof_elements(const XBasis& xb, Elt a) {
  const Field& F = *xb.field;
  const Elt two_a = F.mul(F.from_int(2), a);
  const Elt a2 = F.mul(a, a);
  Mat sigma = Mat::identity(xb.field, 7), h = sigma, k = sigma;
  sigma(X3, X1) = F.neg(a);
  sigma(X8, X6) = a;
  h(X7, XY) = a;
  h(X7, X2) = a2;
  h(XY, X2) = two_a;
  k(X3, X1) = F.neg(a);
  k(X7, XY) = F.neg(a);
  k(X7, X2) = a2;
  k(X8, X6) = a;
  k(XY, X2) = F.neg(two_a);
  return ProofElements{sigma, h, k};
}

ESGroups es_subgroup(const OrthSpace& V) {
  const XBasis xb = x_basis(V);
  const Field& F = *V.field;
  const FieldPtr& K = V.field;
  auto xv = [&](int i) { return unit_vector(7, i); };
  Vec w = xv(X3), z = xv(X3);
  w[X6] = xb.mu;
  z[X6] = F.neg(xb.mu);
  const auto basis = prime_basis(F);

  std::vector<Mat> e, s;
  for (const Vec& u : {xv(X2), xv(X7), xv(XY), z})
    for (Elt c : basis) e.push_back(siegel(xb.gram, xv(X1), scaled(F, c, u)));
  for (const Vec& u : {xv(X2), xv(X7)})
    for (const Vec& t : {xv(XY), z})
      for (Elt c : basis) s.push_back(siegel(xb.gram, u, scaled(F, c, t)));

  const long long q = F.order();
  const BigInt q4 = ipow(BigInt(q), 4);
  const BigInt om4 = order_of(Family::OmegaMinus, {2, q});
  auto e_std = transport_all(xb.from_std, e);
  auto s_std = transport_all(xb.from_std, s);
  std::vector<Mat> all = e_std;
  all.insert(all.end(), s_std.begin(), s_std.end());
  (void)K;
  ESGroups out{make_group("E", V.gram, e_std, q4), make_group("Omega4-", V.gram, s_std, om4),
                    make_group("q^4:Omega4-", V.gram, all, q4 * om4), xb.carry_vec(w), xb.carry_vec(xv(X1)),
                    xb.carry_vec(xv(X8))};
  return out;
}

RhoSigma rho_sigma_elements(const OrthSpace& V) {
  if (V.m < 3) throw Error(ErrorCode::BadParams, "needs m >= 3");
  const Field& F = *V.field;
  const Elt half = F.inv(F.from_int(2));
  Mat rho = Mat::identity(V.field, V.dim());
  // f_2 -> f_2 - d - e_2/2, d -> d + e_2
  rho(V.f_index(2), V.d_index()) = F.neg(1);
  rho(V.f_index(2), V.e_index(2)) = F.neg(half);
  rho(V.d_index(), V.e_index(2)) = 1;
  Mat sigma2 = Mat::identity(V.field, V.dim());
  for (int i : {V.e_index(2), V.f_index(2), V.e_index(3), V.f_index(3)}) sigma2(i, i) = F.neg(1);
  return RhoSigma{rho, sigma2};
}

WedgeEmbedding wedge_embedding(const FieldPtr& Fp) {
  const Field& F = *Fp;
  if (F.p() != 3) throw Error(ErrorCode::BadCharacteristic, "the trivial submodule lies in V_1 only for p = 3");
  const int n = 6, N = 15;
  Mat omega(Fp, n, n);
  for (int i = 0; i < n; i += 2) {
    omega(i, i + 1) = 1;
    omega(i + 1, i) = F.neg(1);
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pidx(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      pidx[a][b] = static_cast<int>(pairs.size());
      pairs.push_back({a, b});
    }
  // contraction u∧w -> ω(u,w); V_1 is its kernel
  Mat contraction(Fp, N, 1);
  for (int i = 0; i < N; ++i) contraction(i, 0) = omega(pairs[i].first, pairs[i].second);
  const Mat kernel = left_kernel(contraction);
  Vec big_omega(N, 0);
  for (int i = 0; i < n; i += 2) big_omega[pidx[i][i + 1]] = 1;

  // basis of V_1 with Ω first, completed to a basis of Λ² by one more vector
  std::vector<Vec> rows{big_omega};
  for (int r = 0; r < kernel.rows(); ++r) {
    rows.push_back(kernel.row(r));
    if (Mat::from_rows(Fp, rows, N).rank() < static_cast<int>(rows.size())) rows.pop_back();
  }
  const int v1 = static_cast<int>(rows.size());
  for (int i = 0; i < N && static_cast<int>(rows.size()) < N; ++i) {
    rows.push_back(unit_vector(N, i));
    if (Mat::from_rows(Fp, rows, N).rank() < static_cast<int>(rows.size())) rows.pop_back();
  }
  const Mat M = Mat::from_rows(Fp, rows, N);
  const Mat Minv = M.inverse();

  Mat g2(Fp, N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const auto [u1, w1] = pairs[i];
      const auto [u2, w2] = pairs[j];
      g2(i, j) = F.sub(F.mul(omega(u1, u2), omega(w1, w2)), F.mul(omega(u1, w2), omega(w1, u2)));
    }
  const Mat g_all = M * g2 * M.transpose();
  const int k = v1 - 1;
  Mat induced(Fp, k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) induced(i, j) = g_all(i + 1, j + 1);

  auto wedge_square = [&](const Mat& g) {
    Mat out(Fp, N, N);
    for (int i = 0; i < N; ++i) {
      const auto [a, b] = pairs[i];
      for (int j = 0; j < N; ++j) {
        const auto [c, d] = pairs[j];
        out(i, j) = F.sub(F.mul(g(a, c), g(b, d)), F.mul(g(a, d), g(b, c)));
      }
    }
    return out;
  };
  auto on_quotient = [&](const Mat& g) {
    const Mat full = M * wedge_square(g) * Minv;  // in the basis `rows`
    Mat out(Fp, k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) out(i, j) = full(i + 1, j + 1);
    return out;
  };

  const OrthSpace V13 = standard_space(k / 2, Fp);
  const Mat T = similarity_transport(induced, V13.gram);
  std::vector<Mat> gens;
  for (const Mat& g : sp_generators(n, Fp)) gens.push_back(on_quotient(g));
  gens = transport_all(T, gens);
  WedgeEmbedding out;
  out.v1_dim = v1;
  out.quotient_dim = k;
  out.induced_gram = induced;
  out.X = make_group("PSp6(" + std::to_string(F.order()) + ")", V13.gram, std::move(gens),
                     order_of(Family::PSp, {6, F.order()}));
  return out;
}

Group permutation_module_group(const OrthSpace& V, int points, bool full) {
  const Field& F = *V.field;
  if (F.order() != 3 || V.m != 3) throw Error(ErrorCode::BadParams, "the permutation module construction needs Omega_7(3)");
  if (points < 2 || points > 9) throw Error(ErrorCode::BadParams, "between 2 and 9 points");
  // quotient basis b_i = e_i - e_8 (i < 7); b_7 = -(b_0 + ... + b_6) mod the all-ones vector, b_8 = 0
  auto coords = [&](int i) {
    Vec v(7, 0);
    if (i < 7) v[i] = 1;
    else if (i == 7)
      for (Elt& x : v) x = F.neg(1);
    return v;
  };
  auto on_quotient = [&](const std::vector<int>& perm) {
    const bool odd = is_odd(perm);
    Mat g(V.field, 7, 7);
    for (int i = 0; i < 7; ++i) {
      Vec img = vec_add(F, coords(perm[i]), vec_scale(F, F.neg(1), coords(perm[8])));
      if (odd) img = vec_scale(F, F.neg(1), img);
      for (int j = 0; j < 7; ++j) g(i, j) = img[j];
    }
    return g;
  };
  Mat gram(V.field, 7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) gram(i, j) = i == j ? F.from_int(2) : Elt{1};
  std::vector<Mat> gens;
  for (const auto& p : symmetric_generators(9, points, full)) gens.push_back(on_quotient(p));
  gens = transport_all(similarity_transport(gram, V.gram), gens);
  const BigInt order = full ? factorial(points) : factorial(points) / 2;
  return make_group(std::string(full ? "S" : "A") + std::to_string(points), V.gram, std::move(gens), order);
}

Group weyl_e7_plus(const OrthSpace& V) {
  const Field& F = *V.field;
  if (V.m != 3 || F.order() != 3) throw Error(ErrorCode::BadParams, "W(E7)+ is built in Omega_7(3)");
  // Bourbaki labels 1..7: chain 1-3-4-5-6-7 with 2 attached to 4
  static const int edges[6][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}};
  Mat cartan(V.field, 7, 7);
  for (int i = 0; i < 7; ++i) cartan(i, i) = F.from_int(2);
  for (const auto& e : edges) cartan(e[0], e[1]) = cartan(e[1], e[0]) = F.neg(1);
  std::vector<Mat> refl;
  for (int i = 0; i < 7; ++i) {
    Mat s = Mat::identity(V.field, 7);
    for (int j = 0; j < 7; ++j) s(j, i) = F.sub(s(j, i), cartan(j, i));
    refl.push_back(std::move(s));
  }
  std::vector<Mat> gens;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) gens.push_back(refl[i] * refl[j]);
  gens = transport_all(similarity_transport(cartan, V.gram), gens);
  return make_group("Sp6(2)", V.gram, std::move(gens), BigInt(1451520));
}

Group monomial_2_6_a7(const OrthSpace& V) {
  if (V.m != 3) throw Error(ErrorCode::BadParams, "needs dimension 7");
  const Field& F = *V.field;
  std::vector<Mat> gens;
  for (int i = 0; i + 1 < 7; ++i) {
    Mat g = Mat::identity(V.field, 7);
    g(i, i) = g(i + 1, i + 1) = F.neg(1);
    gens.push_back(std::move(g));
  }
  for (const auto& p : symmetric_generators(7, 7, false)) gens.push_back(permutation_matrix(V.field, p));
  const Mat minus_id = Mat::identity(V.field, 7).scaled(F.neg(1));
  gens = transport_all(isometry_transport(minus_id, V.gram), gens);
  return make_group("2^6:A7", V.gram, std::move(gens), BigInt(64) * 2520);
}

Group monomial_3_5_2_4_a5(const OrthSpace& V) {
  if (V.m != 3) throw Error(ErrorCode::BadParams, "needs dimension 7");
  const Field& F = *V.field;
  const std::vector<int> w_idx{V.e_index(2), V.f_index(2), V.e_index(3), V.f_index(3), V.d_index()};
  Mat gw(V.field, 5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) gw(i, j) = V.gram(w_idx[i], w_idx[j]);
  std::vector<Mat> small;
  for (int i = 0; i + 1 < 5; ++i) {
    Mat g = Mat::identity(V.field, 5);
    g(i, i) = g(i + 1, i + 1) = F.neg(1);
    small.push_back(std::move(g));
  }
  for (const auto& p : symmetric_generators(5, 5, false)) small.push_back(permutation_matrix(V.field, p));
  small = transport_all(isometry_transport(Mat::identity(V.field, 5), gw), small);

  std::vector<Mat> gens;
  for (const Mat& s : small) {
    Mat g = Mat::identity(V.field, V.dim());
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) g(w_idx[i], w_idx[j]) = s(i, j);
    gens.push_back(std::move(g));
  }
  for (int i : w_idx)
    for (Elt c : prime_basis(F)) gens.push_back(siegel(V.gram, V.e(1), scaled(F, c, unit_vector(V.dim(), i))));
  const BigInt order = ipow(BigInt(F.order()), 5) * 960;
  return make_group("q^5:2^4:A5", V.gram, std::move(gens), order);
}

namespace {

Mat frobenius(const Mat& g) {
  const Field& F = *g.field();
  Mat out(g.field(), g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) out(i, j) = F.pow(g(i, j), F.p());
  return out;
}

// Odd part of the Weil representation of SL_2(r) on functions GF(r) -> K,
// basis b_x = δ_x - δ_{-x}, x = 1..(r-1)/2. t: f(y) -> ψ(k y^2) f(y);
// w: f(y) -> c Σ_z ψ(j y z) f(z).
std::vector<Mat> weil_odd(const FieldPtr& K, Elt zeta, int r, int k, int j, Elt c) {
  const Field& F = *K;
  const int h = (r - 1) / 2;
  auto psi = [&](long long e) { return F.pow(zeta, static_cast<std::uint64_t>(((e % r) + r) % r)); };
  Mat t(K, h, h), w(K, h, h);
  for (int x = 1; x <= h; ++x) t(x - 1, x - 1) = psi(static_cast<long long>(k) * x * x);
  for (int x = 1; x <= h; ++x)
    for (int y = 1; y <= h; ++y)
      w(x - 1, y - 1) = F.mul(c, F.sub(psi(static_cast<long long>(j) * x * y), psi(-static_cast<long long>(j) * x * y)));
  return {t, w};
}

// Rewrites an absolutely irreducible group over GF(p^f) whose Frobenius twist
// is equivalent to itself as a group over GF(p).
std::vector<Mat> descend(const std::vector<Mat>& gens, const FieldPtr& base) {
  const FieldPtr& K = gens.front().field();
  const Field& F = *K;
  const int n = gens.front().rows();
  const int f = F.degree();
  // C with g^σ C = C g for every generator.
  Mat sys(K, n * n, n * n * static_cast<int>(gens.size()));
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const Mat& g = gens[s];
    const Mat gs = frobenius(g);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int i = 0; i < n; ++i)
          for (int jj = 0; jj < n; ++jj) {
            Elt v = 0;
            if (b == jj) v = F.add(v, gs(i, a));
            if (i == a) v = F.sub(v, g(b, jj));
            sys(a * n + b, static_cast<int>(s) * n * n + i * n + jj) = v;
          }
  }
  const Mat ker = left_kernel(sys);
  if (ker.rows() != 1) throw Error(ErrorCode::ConstructionFailure, "Galois descent: intertwiner not unique");
  Mat C(K, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) C(a, b) = ker(0, a * n + b);
  // Scale C so that C^{σ^{f-1}} ... C^σ C = 1.
  auto norm_product = [&](const Mat& c) {
    Mat acc = c, cur = c;
    for (int i = 1; i < f; ++i) {
      cur = frobenius(cur);
      acc = cur * acc;
    }
    return acc;
  };
  const Mat N = norm_product(C);
  bool scaled_ok = false;
  for (Elt lam = 1; lam < F.order() && !scaled_ok; ++lam) {
    const Mat Cl = C.scaled(lam);
    if (norm_product(Cl).is_identity()) {
      C = Cl;
      scaled_ok = true;
    }
  }
  if (!scaled_ok) throw Error(ErrorCode::ConstructionFailure, "Galois descent: norm not trivial " + N.to_string());
  // Φ(v) = v^σ C is GF(p)-linear on K^n = GF(p)^{nf}; its fixed space is a form.
  const int N18 = n * f;
  Mat phi(base, N18, N18);
  for (int jv = 0; jv < n; ++jv)
    for (int kp = 0; kp < f; ++kp) {
      std::vector<int> co(f, 0);
      co[kp] = 1;
      Vec v(n, 0);
      v[jv] = F.pow(F.from_coeffs(co), F.p());
      const Vec img = vec_mul(v, C);
      for (int jj = 0; jj < n; ++jj) {
        const std::vector<int> cc = F.coeffs(img[jj]);
        for (int kk = 0; kk < f; ++kk)
          phi(jv * f + kp, jj * f + kk) = static_cast<Elt>(((cc[kk] - (jv == jj && kp == kk ? 1 : 0)) % F.p() + F.p()) % F.p());
      }
    }
  const Mat fixed = left_kernel(phi);
  if (fixed.rows() != n) throw Error(ErrorCode::ConstructionFailure, "Galois descent: fixed space has wrong dimension");
  Mat B(K, n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      std::vector<int> co(f);
      for (int kk = 0; kk < f; ++kk) co[kk] = fixed(i, jj * f + kk);
      B(i, jj) = F.from_coeffs(co);
    }
  const Mat Bi = B.inverse();
  std::vector<Mat> out;
  for (const Mat& g : gens) {
    const Mat a = B * g * Bi;
    Mat r(base, n, n);
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        const std::vector<int> cc = F.coeffs(a(i, jj));
        for (int kk = 1; kk < f; ++kk)
          if (cc[kk] != 0) throw Error(ErrorCode::ConstructionFailure, "Galois descent: entry outside the prime field");
        r(i, jj) = static_cast<Elt>(cc[0]);
      }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Group sl2_13_gf3() {
  const int r = 13;
  const FieldPtr K = Field::make(3, 3);
  const FieldPtr F3 = Field::make(3);
  const Field& F = *K;
  const Elt zeta = F.pow(F.primitive(), (F.order() - 1) / r);
  const BigInt target = 2184;
  for (int k = 1; k < r; ++k)
    for (int j = 1; j < r; ++j)
      for (Elt c = 1; c < F.order(); ++c) {
        const std::vector<Mat> gens = weil_odd(K, zeta, r, k, j, c);
        if (!(gens[1] * gens[1]).scaled(F.neg(1)).is_identity()) continue;  // w^2 = -1
        BsgsOptions opt;
        opt.order_cap = target;
        opt.point_cap = 100000;
        try {
          const Bsgs b = Bsgs::build(K, (r - 1) / 2, gens, opt);
          if (b.order() != target) continue;
        } catch (const Error&) {
          continue;
        }
        Group g{"SL2(13)", Mat::identity(F3, (r - 1) / 2), descend(gens, F3), target,
                "Weil representation k=" + std::to_string(k) + " j=" + std::to_string(j)};
        return g;
      }
  throw Error(ErrorCode::ConstructionFailure, "no Weil representation of SL2(13) found");
}

namespace {

Group su3_reference(const FieldPtr& K) {
  // SU_3(3) on GF(9)^3 with the antidiagonal hermitian form
  const Field& F = *K;
  const int q = 3;
  auto bar = [&](Elt x) { return F.pow(x, q); };
  Mat H(K, 3, 3);
  H(0, 2) = H(1, 1) = H(2, 0) = 1;
  auto preserves = [&](const Mat& g) {
    Mat gbar(K, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) gbar(i, j) = bar(g(i, j));
    return g * H * gbar.transpose() == H;
  };
  std::vector<Mat> gens;
  const int n = F.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Mat g = Mat::identity(K, 3);
        g(0, 1) = static_cast<Elt>(a);
        g(0, 2) = static_cast<Elt>(b);
        g(1, 2) = static_cast<Elt>(c);
        if (g.is_identity() || !preserves(g)) continue;
        gens.push_back(g);
        gens.push_back(H * g * H);
      }
  return Group{"SU3(3)", H, std::move(gens), BigInt(6048), "constructed"};
}

Group matrix_reference(std::string name, const FieldPtr& F, std::vector<Mat> gens, long long order) {
  const int n = gens.front().rows();
  return Group{std::move(name), Mat::identity(F, n), std::move(gens), BigInt(order), "constructed"};
}

}  // namespace

std::vector<std::string> reference_group_names() {
  return {"C2", "C8", "3^2", "S3", "SL2(3)", "3^(1+2)", "S3xS3", "GL2(3)", "PSL2(7)", "ASL2(3)", "2xS5", "SL3(3)", "SU3(3)"};
}

Group reference_group(const std::string& name) {
  const FieldPtr F3 = Field::make(3);
  const Field& F = *F3;
  auto perms = [&](int n, const std::vector<std::vector<int>>& ps) {
    std::vector<Mat> out;
    for (const auto& p : ps) out.push_back(permutation_matrix(F3, p));
    (void)n;
    return out;
  };
  if (name == "C2") return matrix_reference(name, F3, {Mat::identity(F3, 1).scaled(F.neg(1))}, 2);
  if (name == "C8") {
    const FieldPtr F9 = Field::make(3, 2);
    Mat z(F9, 1, 1);
    z(0, 0) = F9->primitive();
    return matrix_reference(name, F3, {restrict_scalars(z, F3)}, 8);
  }
  if (name == "3^2") {
    Mat a = Mat::identity(F3, 3), b = a;
    a(0, 2) = 1;
    b(1, 2) = 1;
    return matrix_reference(name, F3, {a, b}, 9);
  }
  if (name == "S3") return matrix_reference(name, F3, perms(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})}), 6);
  if (name == "S3xS3")
    return matrix_reference(
        name, F3, perms(6, {cycle(6, {0, 1}), cycle(6, {0, 1, 2}), cycle(6, {3, 4}), cycle(6, {3, 4, 5})}), 36);
  if (name == "SL2(3)") return matrix_reference(name, F3, sl_generators(2, F3), 24);
  if (name == "SL3(3)") return matrix_reference(name, F3, sl_generators(3, F3), 5616);
  if (name == "GL2(3)") {
    auto g = sl_generators(2, F3);
    Mat d = Mat::identity(F3, 2);
    d(0, 0) = F.neg(1);
    g.push_back(d);
    return matrix_reference(name, F3, g, 48);
  }
  if (name == "3^(1+2)") {
    Mat a = Mat::identity(F3, 3), b = a;
    a(0, 1) = 1;
    b(1, 2) = 1;
    return matrix_reference(name, F3, {a, b}, 27);
  }
  if (name == "ASL2(3)") {
    std::vector<Mat> g;
    for (const Mat& s : sl_generators(2, F3)) {
      Mat a = Mat::identity(F3, 3);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a(i, j) = s(i, j);
      g.push_back(a);
    }
    Mat t = Mat::identity(F3, 3);
    t(2, 0) = 1;
    g.push_back(t);
    return matrix_reference(name, F3, g, 216);
  }
  if (name == "2xS5") {
    auto g = perms(5, {cycle(5, {0, 1}), cycle(5, {0, 1, 2, 3, 4})});
    g.push_back(Mat::identity(F3, 5).scaled(F.neg(1)));
    return matrix_reference(name, F3, g, 240);
  }
  if (name == "PSL2(7)") {
    // GL_3(2) permuting the 7 nonzero vectors of GF(2)^3 (vector v <-> index v-1)
    auto act2 = [](const int m[3][3], int v) {
      int out = 0;
      for (int i = 0; i < 3; ++i)
        if (v >> i & 1)
          for (int j = 0; j < 3; ++j) out ^= m[i][j] << j;
      return out;
    };
    static const int a[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    static const int c[3][3] = {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
    std::vector<Mat> g;
    for (const auto* m : {a, c}) {
      std::vector<int> p(7);
      for (int v = 1; v <= 7; ++v) p[v - 1] = act2(m, v) - 1;
      g.push_back(permutation_matrix(F3, p));
    }
    return matrix_reference(name, F3, g, 168);
  }
  if (name == "SU3(3)") return su3_reference(Field::make(3, 2));
  throw Error(ErrorCode::UnknownFamily, "no reference group '" + name + "'");
}

std::string data_dir() {
  if (const char* env = std::getenv("ODDFACT_DATA")) return env;
#ifdef ODDFACT_DATA_DIR
  return ODDFACT_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace oddfact
