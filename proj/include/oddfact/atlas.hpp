#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddfact/engine.hpp"
#include "oddfact/orders.hpp"
#include "oddfact/orthospace.hpp"
#include "oddfact/point.hpp"

namespace oddfact {

/// Named generating set of isometries of `gram`.
struct Group {
  std::string name;
  Mat gram;
  std::vector<Mat> gens;
  std::optional<BigInt> claimed_order;
  std::string provenance = "constructed";
};

/// Checks every generator against the form; throws IsometryViolation.
Group make_group(std::string name, const Mat& gram, std::vector<Mat> gens, std::optional<BigInt> claimed,
                 std::string provenance = "constructed");

/// Certifies a group. With `bound` (a proven upper bound on the order) the
/// randomized chain stops as soon as it reaches the bound; otherwise every
/// Schreier generator is checked. A claimed order must then match exactly.
CertifiedGroup certify(const Group& g, std::uint64_t seed, const std::optional<BigInt>& bound = std::nullopt);

/// Ω(V) from Siegel maps ρ_{u,w}, u ∈ {e_i, f_i}, w a basis vector ⊥ u (and
/// its multiple by the primitive element over extension fields).
Group omega_group(const OrthSpace& V);

/// A ∈ GL_m(q) acting on U = <e_i> as A, on W = <f_i> as A^{-T}, fixing d.
Mat levi_element(const OrthSpace& V, const Mat& A);

struct ParabolicRT {
  Group R;  // kernel of Ω(V)_U on U
  Group T;  // SL_m(q) acting on U and dually on W
};
ParabolicRT parabolic_rt(const OrthSpace& V);

enum class ExtKind { SL, Sp };
std::string to_string(ExtKind k);

/// SL_a(q^b) or Sp_a(q^b) written over GF(q) (m = ab) and placed in T.
/// Requires q prime. Throws BadFactorization when a*b != m.
Group embed_field_ext(int a, int b, ExtKind kind, const OrthSpace& V);
/// The a x a matrices over GF(q^b) as ab x ab matrices over GF(q).
Mat restrict_scalars(const Mat& A, const FieldPtr& base);
/// Generators of SL_a(F) or Sp_a(F) (symplectic form with ω(E_i,F_i)=1 on
/// the ordered basis E_1,F_1,...).
std::vector<Mat> sl_generators(int a, const FieldPtr& F);
std::vector<Mat> sp_generators(int a, const FieldPtr& F);

/// v = e_1 + λ f_1 with λ from choose_lambda (perp of minus type), and a
/// vector of the same shape whose perp has plus type.
Vec minus_point(const OrthSpace& V);
Vec plus_point(const OrthSpace& V);

/// The alternating 3-tensor Σ u_i∧u_j∧u_k over the lines of the Fano plane
/// on an orthonormal basis (gram -I) transported into V (m = 3). Its
/// stabilizer in Ω(V) is G_2(q).
Point octonion_tensor(const OrthSpace& V);

/// Matrices in the basis x_1,x_2,x_3,x_6,x_7,x_8,y of x^⊥ (x = x_4 + x_5)
/// inside the 8-space with β(x_i,x_j) = δ_{i+j,9}.
struct XBasis {
  FieldPtr field;
  Mat gram;       // form on x^⊥ in that basis
  Mat to_std;     // rows: the x-basis vectors in standard coordinates
  Mat from_std;   // inverse of to_std
  Elt mu;         // w = x_3 + μ x_6 with -μ a nonsquare
  Mat carry(const Mat& g) const { return from_std * g * to_std; }
  Vec carry_vec(const Vec& v) const { return vec_mul(v, to_std); }
};
XBasis x_basis(const OrthSpace& V);
/// Index of each named vector in the x-basis.
enum XIdx { X1 = 0, X2 = 1, X3 = 2, X6 = 3, X7 = 4, X8 = 5, XY = 6 };

struct ProofElements {
  Mat sigma, h, k;  // in the x-basis
};
ProofElements proof_elements(const XBasis& xb, Elt a);

/// E:S = R_w:T_w = q^4:Ω_4^-(q) transported into V.
struct ESGroups {
  Group E;
  Group S;
  Group X;  // E:S
  Vec w;    // w = x_3 + μ x_6 in standard coordinates
  Vec x1;   // x_1 in standard coordinates
  Vec x8;
};
ESGroups es_subgroup(const OrthSpace& V);

struct RhoSigma {
  Mat rho, sigma2;
};
RhoSigma rho_sigma_elements(const OrthSpace& V);

/// Λ²-construction: V_1 ⊂ Λ²V_0 (dim 14), V = V_1/V_2 (dim 13) with the
/// induced form, transported to the standard 13-dimensional basis. Needs p=3.
struct WedgeEmbedding {
  int v1_dim = 0;
  int quotient_dim = 0;
  Mat induced_gram;  // on V_1/V_2 before transport
  Group X;           // image of Sp_6(q), in standard coordinates
};
WedgeEmbedding wedge_embedding(const FieldPtr& F);

/// Alternating group on the sum-zero module modulo the all-ones vector
/// (9 points over GF(3)); odd permutations act with a sign so that the full
/// symmetric group lies in Ω_7(3). `points` lists the permuted points (the
/// rest are fixed) and `full` selects S_k instead of A_k.
Group permutation_module_group(const OrthSpace& V, int points, bool full);
/// W(E_7)^+ ≅ Sp_6(2) on the E_7 root lattice mod 3.
Group weyl_e7_plus(const OrthSpace& V);
/// 2^6:A_7: even sign changes and even permutations of an orthonormal basis.
Group monomial_2_6_a7(const OrthSpace& V);
/// 3^5:2^4:A_5: R_{e_1} with the even-sign monomial A_5 on an orthonormal
/// basis of <e_2,f_2,e_3,f_3,d>.
Group monomial_3_5_2_4_a5(const OrthSpace& V);

/// SL_2(13) in SL_6(3): the odd half of the Weil representation, built over
/// GF(27) and written over GF(3) by Galois descent.
Group sl2_13_gf3();

/// Reference groups built directly (no embedding), for fingerprints.
Group reference_group(const std::string& name);
std::vector<std::string> reference_group_names();

/// Generator data file.
Group load_group(const std::string& path);
void store_group(const Group& g, const std::string& path);
std::string serialize_group(const Group& g);
Group parse_group(const std::string& text, const Mat* expected_gram = nullptr);

/// Data directory for stored generator files (ODDFACT_DATA or the build-time default).
std::string data_dir();

}  // namespace oddfact
