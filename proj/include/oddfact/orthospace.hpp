#pragma once

#include <string>
#include <vector>

#include "oddfact/gf.hpp"
#include "oddfact/mat.hpp"

namespace oddfact {

/// Odd-dimensional orthogonal space in the standard basis
/// e_1, f_1, ..., e_m, f_m, d with beta(e_i, f_j) = delta_ij and beta(d, d) = 1.
struct OrthSpace {
  int m = 0;
  FieldPtr field;
  Mat gram;
  std::vector<std::string> labels;

  int dim() const noexcept { return 2 * m + 1; }
  int e_index(int i) const noexcept { return 2 * (i - 1); }  // 1-based
  int f_index(int i) const noexcept { return 2 * (i - 1) + 1; }
  int d_index() const noexcept { return 2 * m; }
  Vec e(int i) const { return unit_vector(dim(), e_index(i)); }
  Vec f(int i) const { return unit_vector(dim(), f_index(i)); }
  Vec d() const { return unit_vector(dim(), d_index()); }
};

OrthSpace standard_space(int m, const FieldPtr& field);

/// u^T . gram . w on element codes.
Elt beta(const Mat& gram, const Vec& u, const Vec& w);
FieldElement beta(const OrthSpace& V, const Vec& u, const Vec& w);

bool is_isometry(const Mat& gram, const Mat& g);

/// x -> x - (2 beta(x,u) / beta(u,u)) u. Throws SingularVector when u is isotropic.
Mat reflection(const Mat& gram, const Vec& u);

/// Siegel (Eichler) transformation for singular u and w perpendicular to u:
/// x -> x + beta(x,w) u - beta(x,u) w - 1/2 beta(w,w) beta(x,u) u.
Mat siegel(const Mat& gram, const Vec& u, const Vec& w);

/// Subspace of an ambient form space; `basis` is always in reduced row
/// echelon form so equal subspaces compare equal.
struct Subspace {
  Mat gram;
  Mat basis;

  int dim() const noexcept { return basis.rows(); }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }
};

Subspace span(const Mat& gram, const std::vector<Vec>& vectors);
Subspace whole_space(const Mat& gram);
Subspace perp(const Subspace& s);
bool contains(const Subspace& s, const Vec& v);

enum class WittKind { Plus, Minus, OddDim, Degenerate };

struct WittType {
  WittKind kind;
  int radical_dim = 0;
  int witt_index = 0;
};

std::string to_string(WittKind k);

/// Type of the form restricted to s, by radical computation and explicit
/// hyperbolic-pair peeling with exhaustive isotropic-vector search.
WittType witt_type(const Subspace& s);

/// Least lambda (1, then the least nonsquare, then the remaining nonzero
/// values in code order) with (e_1 + lambda f_1)^perp of minus type.
FieldElement choose_lambda(const OrthSpace& V);

enum class OmegaClass { InOmega, InSOnotOmega, InOnotSO, NotIsometry };
std::string to_string(OmegaClass c);

/// Classifies g against the nondegenerate form gram. When `reflections` is
/// given it receives vectors u_1..u_k with g = r_{u_1} ... r_{u_k}.
OmegaClass in_omega(const Mat& gram, const Mat& g, std::vector<Vec>* reflections = nullptr);
OmegaClass in_omega(const OrthSpace& V, const Mat& g);

/// Orthogonal basis of a nondegenerate form (rows), each vector nonsingular.
std::vector<Vec> orthogonal_basis(const Mat& gram);

/// Basis matching between isometric nondegenerate forms: returns T with
/// T . src . T^T == dst, so g -> T g T^-1 carries isometries of src to
/// isometries of dst. Throws IsometryViolation if the forms are not isometric.
Mat isometry_transport(const Mat& src, const Mat& dst);

/// Like isometry_transport, but rescales src by a nonsquare first when the
/// discriminants differ (odd dimension only): the isometry groups coincide.
Mat similarity_transport(const Mat& src, const Mat& dst);

}  // namespace oddfact
