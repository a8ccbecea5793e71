#include "oddfact/orthospace.hpp"

#include <algorithm>

namespace oddfact {

OrthSpace standard_space(int m, const FieldPtr& field) {
  if (m < 2) throw Error(ErrorCode::BadParams, "standard space needs m >= 2");
  OrthSpace V;
  V.m = m;
  V.field = field;
  const int n = 2 * m + 1;
  V.gram = Mat(field, n, n);
  for (int i = 1; i <= m; ++i) {
    V.gram(V.e_index(i), V.f_index(i)) = 1;
    V.gram(V.f_index(i), V.e_index(i)) = 1;
    V.labels.push_back("e" + std::to_string(i));
    V.labels.push_back("f" + std::to_string(i));
  }
  V.gram(V.d_index(), V.d_index()) = 1;
  V.labels.push_back("d");
  return V;
}

Elt beta(const Mat& gram, const Vec& u, const Vec& w) {
  const int n = gram.rows();
  if (static_cast<int>(u.size()) != n || static_cast<int>(w.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match form");
  const Field& F = *gram.field();
  Elt s = 0;
  for (int i = 0; i < n; ++i) {
    if (!u[i]) continue;
    Elt t = 0;
    for (int j = 0; j < n; ++j)
      if (w[j]) t = F.add(t, F.mul(gram(i, j), w[j]));
    s = F.add(s, F.mul(u[i], t));
  }
  return s;
}

FieldElement beta(const OrthSpace& V, const Vec& u, const Vec& w) {
  return FieldElement(V.field, beta(V.gram, u, w));
}

bool is_isometry(const Mat& gram, const Mat& g) {
  if (g.rows() != gram.rows() || g.cols() != gram.cols()) return false;
  return g * gram * g.transpose() == gram;
}

Mat reflection(const Mat& gram, const Vec& u) {
  const Field& F = *gram.field();
  const int n = gram.rows();
  const Elt quu = beta(gram, u, u);
  if (!quu) throw Error(ErrorCode::SingularVector, "reflection in an isotropic vector");
  const Elt c = F.div(F.from_int(2), quu);
  Mat r = Mat::identity(gram.field(), n);
  for (int i = 0; i < n; ++i) {
    const Elt b = beta(gram, unit_vector(n, i), u);
    if (!b) continue;
    const Elt s = F.mul(c, b);
    for (int j = 0; j < n; ++j) r(i, j) = F.sub(r(i, j), F.mul(s, u[j]));
  }
  return r;
}

Mat siegel(const Mat& gram, const Vec& u, const Vec& w) {
  const Field& F = *gram.field();
  const int n = gram.rows();
  if (beta(gram, u, u) != 0) throw Error(ErrorCode::BadParams, "Siegel map needs singular u");
  if (beta(gram, u, w) != 0) throw Error(ErrorCode::BadParams, "Siegel map needs w perpendicular to u");
  const Elt half_qw = F.div(beta(gram, w, w), F.from_int(2));
  Mat r = Mat::identity(gram.field(), n);
  for (int i = 0; i < n; ++i) {
    const Vec x = unit_vector(n, i);
    const Elt bxw = beta(gram, x, w);
    const Elt bxu = beta(gram, x, u);
    const Elt cu = F.sub(bxw, F.mul(half_qw, bxu));
    for (int j = 0; j < n; ++j) {
      r(i, j) = F.add(r(i, j), F.mul(cu, u[j]));
      r(i, j) = F.sub(r(i, j), F.mul(bxu, w[j]));
    }
  }
  return r;
}

Subspace span(const Mat& gram, const std::vector<Vec>& vectors) {
  const int n = gram.rows();
  if (vectors.empty()) return Subspace{gram, Mat(gram.field(), 0, n)};
  return Subspace{gram, rref(Mat::from_rows(gram.field(), vectors, n))};
}

Subspace whole_space(const Mat& gram) {
  return Subspace{gram, Mat::identity(gram.field(), gram.rows())};
}

Subspace perp(const Subspace& s) {
  const int n = s.gram.rows();
  if (s.dim() == 0) return whole_space(s.gram);
  // x . G . s_i^T = 0 for all basis rows s_i
  Mat k = left_kernel(s.gram * s.basis.transpose());
  if (k.rows() == 0) return Subspace{s.gram, Mat(s.gram.field(), 0, n)};
  return Subspace{s.gram, rref(k)};
}

bool contains(const Subspace& s, const Vec& v) {
  std::vector<Vec> rows;
  for (int i = 0; i < s.dim(); ++i) rows.push_back(s.basis.row(i));
  rows.push_back(v);
  return Mat::from_rows(s.gram.field(), rows, s.gram.rows()).rank() == s.dim();
}

std::string to_string(WittKind k) {
  switch (k) {
    case WittKind::Plus: return "plus";
    case WittKind::Minus: return "minus";
    case WittKind::OddDim: return "odd_dim";
    case WittKind::Degenerate: return "degenerate";
  }
  return "?";
}

namespace {

// Nondegenerate form given by its Gram matrix H in coordinates; the peel
// produces a basis (rows, in coordinates) made of hyperbolic pairs followed by
// an anisotropic remainder of dimension at most two.
struct Peeled {
  std::vector<Vec> rows;
  int pairs = 0;
};

std::vector<Vec> span_rows(const FieldPtr& F, const std::vector<Vec>& rows, int n) {
  if (rows.empty()) return {};
  Mat r = rref(Mat::from_rows(F, rows, n));
  std::vector<Vec> out;
  for (int i = 0; i < r.rows(); ++i) out.push_back(r.row(i));
  return out;
}

// Exhaustive search over projective points of span(W) for a vector with
// beta(x,x) == target (target 0: isotropic).
bool find_vector_with_norm(const Mat& H, const std::vector<Vec>& W, Elt target, Vec& out) {
  const Field& F = *H.field();
  const int k = static_cast<int>(W.size());
  const int n = H.rows();
  const int q = F.order();
  std::vector<int> c(k, 0);
  // Enumerate coefficient vectors whose first nonzero entry is 1 when looking
  // for isotropic vectors (projective points), all nonzero otherwise.
  const bool projective = target == 0;
  while (true) {
    int i = 0;
    while (i < k && ++c[i] == q) c[i++] = 0;
    if (i == k) return false;
    if (projective) {
      int lead = 0;
      while (lead < k && c[lead] == 0) ++lead;
      if (c[lead] != 1) continue;
    }
    Vec x(n, 0);
    for (int j = 0; j < k; ++j)
      if (c[j]) x = vec_add(F, x, vec_scale(F, static_cast<Elt>(c[j]), W[j]));
    if (beta(H, x, x) == target && !vec_is_zero(x)) {
      out = std::move(x);
      return true;
    }
  }
}

Peeled peel(const Mat& H) {
  const FieldPtr& Fp = H.field();
  const Field& F = *Fp;
  const int n = H.rows();
  std::vector<Vec> W;
  for (int i = 0; i < n; ++i) W.push_back(unit_vector(n, i));
  Peeled out;
  Vec x;
  while (W.size() >= 2 && find_vector_with_norm(H, W, 0, x)) {
    Vec y;
    for (const Vec& w : W)
      if (beta(H, x, w)) {
        y = vec_scale(F, F.inv(beta(H, x, w)), w);
        break;
      }
    if (y.empty()) throw Error(ErrorCode::ConstructionFailure, "form is degenerate");
    const Elt half = F.div(beta(H, y, y), F.from_int(2));
    y = vec_add(F, y, vec_scale(F, F.neg(half), x));
    out.rows.push_back(x);
    out.rows.push_back(y);
    ++out.pairs;
    std::vector<Vec> proj;
    for (const Vec& w : W) {
      Vec p = vec_add(F, w, vec_scale(F, F.neg(beta(H, w, y)), x));
      p = vec_add(F, p, vec_scale(F, F.neg(beta(H, w, x)), y));
      proj.push_back(std::move(p));
    }
    W = span_rows(Fp, proj, n);
  }
  const Elt nu = F.nonsquare();
  auto normalise = [&](Vec a) {
    const Elt c = beta(H, a, a);
    const Elt target = F.is_square(c) ? Elt{1} : nu;
    const Elt s = F.sqrt(F.div(target, c));
    return vec_scale(F, F.inv(s), a);
  };
  if (W.size() == 1) {
    out.rows.push_back(normalise(W[0]));
  } else if (W.size() == 2) {
    Vec a;
    if (!find_vector_with_norm(H, W, 1, a)) throw Error(ErrorCode::ConstructionFailure, "anisotropic plane without norm 1");
    Vec b;
    for (const Vec& w : W) {
      Vec c = vec_add(F, w, vec_scale(F, F.neg(beta(H, w, a)), a));
      if (!vec_is_zero(c)) {
        b = std::move(c);
        break;
      }
    }
    out.rows.push_back(a);
    out.rows.push_back(normalise(b));
  }
  return out;
}

Mat restricted_gram(const Subspace& s) { return s.basis * s.gram * s.basis.transpose(); }

}  // namespace

WittType witt_type(const Subspace& s) {
  const int k = s.dim();
  if (k == 0) return WittType{WittKind::Plus, 0, 0};
  Mat H = restricted_gram(s);
  const int rad = left_kernel(H).rows();
  if (rad > 0) return WittType{WittKind::Degenerate, rad, 0};
  const Peeled p = peel(H);
  if (k % 2) return WittType{WittKind::OddDim, 0, p.pairs};
  return WittType{p.pairs == k / 2 ? WittKind::Plus : WittKind::Minus, 0, p.pairs};
}

FieldElement choose_lambda(const OrthSpace& V) {
  const Field& F = *V.field;
  std::vector<Elt> order{1, F.nonsquare()};
  for (int c = 2; c < F.order(); ++c)
    if (std::find(order.begin(), order.end(), c) == order.end()) order.push_back(static_cast<Elt>(c));
  for (Elt lambda : order) {
    Vec v = V.e(1);
    v[V.f_index(1)] = lambda;
    if (witt_type(perp(span(V.gram, {v}))).kind == WittKind::Minus) return FieldElement(V.field, lambda);
  }
  throw Error(ErrorCode::NoMinusVector, "no lambda gives a minus-type perp");
}

std::string to_string(OmegaClass c) {
  switch (c) {
    case OmegaClass::InOmega: return "inOmega";
    case OmegaClass::InSOnotOmega: return "inSOnotOmega";
    case OmegaClass::InOnotSO: return "inOnotSO";
    case OmegaClass::NotIsometry: return "notIsometry";
  }
  return "?";
}

std::vector<Vec> orthogonal_basis(const Mat& gram) {
  const FieldPtr& Fp = gram.field();
  const Field& F = *Fp;
  const int n = gram.rows();
  std::vector<Vec> W;
  for (int i = 0; i < n; ++i) W.push_back(unit_vector(n, i));
  std::vector<Vec> out;
  while (!W.empty()) {
    Vec a;
    for (const Vec& w : W)
      if (beta(gram, w, w)) {
        a = w;
        break;
      }
    for (std::size_t i = 0; a.empty() && i < W.size(); ++i)
      for (std::size_t j = i + 1; j < W.size(); ++j)
        if (beta(gram, W[i], W[j])) {
          a = vec_add(F, W[i], W[j]);
          break;
        }
    if (a.empty()) throw Error(ErrorCode::ConstructionFailure, "degenerate form");
    const Elt qa = beta(gram, a, a);
    std::vector<Vec> proj;
    for (const Vec& w : W) proj.push_back(vec_add(F, w, vec_scale(F, F.neg(F.div(beta(gram, w, a), qa)), a)));
    out.push_back(std::move(a));
    W = span_rows(Fp, proj, n);
  }
  return out;
}

OmegaClass in_omega(const Mat& gram, const Mat& g, std::vector<Vec>* reflections) {
  if (!g.square() || g.rows() != gram.rows()) throw Error(ErrorCode::DimensionMismatch, "element size");
  if (!is_isometry(gram, g)) return OmegaClass::NotIsometry;
  const Field& F = *gram.field();
  std::vector<Vec> used;
  Mat h = g;
  for (const Vec& x : orthogonal_basis(gram)) {
    const Vec y = vec_mul(x, h);
    if (y == x) continue;
    const Vec z = vec_add(F, x, vec_scale(F, F.neg(1), y));
    if (beta(gram, z, z)) {
      h = h * reflection(gram, z);
      used.push_back(z);
    } else {
      const Vec s = vec_add(F, x, y);
      h = h * reflection(gram, s) * reflection(gram, x);
      used.push_back(s);
      used.push_back(x);
    }
  }
  if (!h.is_identity()) throw Error(ErrorCode::ConstructionFailure, "reflection peeling did not terminate");
  std::reverse(used.begin(), used.end());
  Elt norm = 1;
  for (const Vec& u : used) norm = F.mul(norm, beta(gram, u, u));
  if (reflections) *reflections = used;
  if (used.size() % 2) return OmegaClass::InOnotSO;
  return F.is_square(norm) ? OmegaClass::InOmega : OmegaClass::InSOnotOmega;
}

OmegaClass in_omega(const OrthSpace& V, const Mat& g) { return in_omega(V.gram, g); }

Mat isometry_transport(const Mat& src, const Mat& dst) {
  if (src.rows() != dst.rows()) throw Error(ErrorCode::DimensionMismatch, "forms of different dimension");
  const Peeled ps = peel(src), pd = peel(dst);
  const int n = src.rows();
  Mat Ns = Mat::from_rows(src.field(), ps.rows, n);
  Mat Nd = Mat::from_rows(dst.field(), pd.rows, n);
  if (ps.pairs != pd.pairs || !(Ns * src * Ns.transpose() == Nd * dst * Nd.transpose()))
    throw Error(ErrorCode::IsometryViolation, "forms are not isometric");
  Mat T = Nd.inverse() * Ns;
  if (!(T * src * T.transpose() == dst)) throw Error(ErrorCode::ConstructionFailure, "transport check failed");
  return T;
}

Mat similarity_transport(const Mat& src, const Mat& dst) {
  try {
    return isometry_transport(src, dst);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IsometryViolation || src.rows() % 2 == 0) throw;
  }
  return isometry_transport(src.scaled(src.field()->nonsquare()), dst);
}

}  // namespace oddfact
