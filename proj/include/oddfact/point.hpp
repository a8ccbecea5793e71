#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oddfact/mat.hpp"

namespace oddfact {

/// Objects a matrix group acts on from the right.
///   Vector    n coordinates
///   Line      n coordinates, first nonzero entry scaled to 1
///   Subspace  k rows of length n in reduced row echelon form
///   Tensor    alternating 3-tensor, coefficients on e_i^e_j^e_k for i<j<k
///             in lexicographic order; g acts on every factor
enum class PointKind : std::uint8_t { Vector, Line, Subspace, Tensor };

std::string to_string(PointKind k);

struct Point {
  PointKind kind = PointKind::Vector;
  std::uint8_t n = 0;
  std::vector<Elt> data;

  friend bool operator==(const Point& a, const Point& b) noexcept {
    return a.kind == b.kind && a.n == b.n && a.data == b.data;
  }
  friend bool operator<(const Point& a, const Point& b) noexcept {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.n != b.n) return a.n < b.n;
    return a.data < b.data;
  }
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

Point vector_point(const Vec& v);
Point line_point(const Field& F, const Vec& v);
Point subspace_point(const Mat& rows);
/// Tensor from a list of (i, j, k, coefficient) terms with distinct indices;
/// reordering to i<j<k applies the sign of the permutation.
struct TensorTerm {
  int i, j, k;
  Elt c;
};
Point tensor_point(const Field& F, int n, const std::vector<TensorTerm>& terms);

/// Image of p under g (right action).
Point act(const Field& F, const Point& p, const Mat& g);

/// Number of points a tensor in dimension n stores.
int tensor_size(int n);

/// Text form "V:0 1 2", "L:...", "S<k>:r0;r1", "T<n>:..." for logs and cache files.
std::string to_string(const Field& F, const Point& p);
Point parse_point(const Field& F, const std::string& text);

}  // namespace oddfact
