#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oddfact/gf.hpp"

namespace oddfact {

/// Row vector of element codes.
using Vec = std::vector<Elt>;

/// Dense matrix over a finite field, row-major. Group elements act on row
/// vectors from the right, so row i is the image of the i-th basis vector.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr field, int rows, int cols);
  Mat(FieldPtr field, int rows, int cols, std::vector<Elt> entries);

  static Mat identity(FieldPtr field, int n);
  /// Rows taken from the given vectors (all of equal length).
  static Mat from_rows(FieldPtr field, const std::vector<Vec>& rows, int cols);

  const FieldPtr& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Elt operator()(int i, int j) const noexcept { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elt& operator()(int i, int j) noexcept { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<Elt>& data() const noexcept { return a_; }
  Vec row(int i) const;

  Mat transpose() const;
  /// Throws SingularMatrix.
  Mat inverse() const;
  Elt det() const;
  int rank() const;
  bool is_identity() const noexcept;
  Mat scaled(Elt c) const;
  Mat power(long long e) const;

  std::size_t hash() const noexcept;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// "a b c;d e f" with comma-joined coefficients in extension fields.
  std::string to_string() const;
  static Mat parse(const FieldPtr& field, const std::string& text);

 private:
  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elt> a_;
};

/// x * g for a row vector x.
Vec vec_mul(const Vec& x, const Mat& g);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Elt c, const Vec& a);
bool vec_is_zero(const Vec& a) noexcept;
Vec unit_vector(int n, int i);

/// Reduced row echelon form; the returned matrix has only the nonzero rows.
Mat rref(const Mat& a, std::vector<int>* pivots = nullptr);
/// Basis (as rows) of {x : x * a = 0}.
Mat left_kernel(const Mat& a);
/// Multiplicative order of an invertible matrix; gives up after limit steps
/// and returns 0.
long long element_order(const Mat& g, long long limit = 1 << 20);

struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept { return m.hash(); }
};

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept;
};

}  // namespace oddfact
