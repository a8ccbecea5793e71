#include "oddfact/mat.hpp"

#include <sstream>

namespace oddfact {

Mat::Mat(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, 0) {}

Mat::Mat(FieldPtr field, int rows, int cols, std::vector<Elt> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(rows) * cols)
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
}

Mat Mat::identity(FieldPtr field, int n) {
  Mat m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FieldPtr field, const std::vector<Vec>& rows, int cols) {
  Mat m(std::move(field), static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(int i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
             a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  const Field& F = *a.field_;
  Mat c(a.field_, a.rows_, b.cols_);
  const int n = a.cols_, m = b.cols_;
  if (F.is_prime()) {
    const int p = F.p();
    std::vector<int> acc(m);
    for (int i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const Elt* ai = &a.a_[static_cast<std::size_t>(i) * n];
      for (int k = 0; k < n; ++k) {
        const int x = ai[k];
        if (!x) continue;
        const Elt* bk = &b.a_[static_cast<std::size_t>(k) * m];
        for (int j = 0; j < m; ++j) acc[j] += x * bk[j];
      }
      Elt* ci = &c.a_[static_cast<std::size_t>(i) * m];
      for (int j = 0; j < m; ++j) ci[j] = static_cast<Elt>(acc[j] % p);
    }
    return c;
  }
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < n; ++k) {
      const Elt x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < m; ++j) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
    }
  return c;
}

namespace {

// Gaussian elimination in place; returns pivot columns. Optionally applies the
// same row operations to `aug`.
std::vector<int> eliminate(Mat& m, Mat* aug, bool reduce_above, int* swaps = nullptr) {
  const Field& F = *m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) std::swap((*aug)(piv, j), (*aug)(r, j));
      if (swaps) ++*swaps;
    }
    const Elt inv = F.inv(m(r, c));
    if (!swaps) {
      for (int j = 0; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), inv);
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) (*aug)(r, j) = F.mul((*aug)(r, j), inv);
    }
    for (int i = reduce_above ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r || !m(i, c)) continue;
      const Elt f = swaps ? F.mul(m(i, c), inv) : m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) (*aug)(i, j) = F.sub((*aug)(i, j), F.mul(f, (*aug)(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat Mat::inverse() const {
  if (!square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  Mat m = *this;
  Mat inv = identity(field_, rows_);
  auto piv = eliminate(m, &inv, true);
  if (static_cast<int>(piv.size()) != rows_) throw Error(ErrorCode::SingularMatrix, "matrix not invertible");
  return inv;
}

Elt Mat::det() const {
  if (!square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  Mat m = *this;
  int swaps = 0;
  auto piv = eliminate(m, nullptr, false, &swaps);
  if (static_cast<int>(piv.size()) != rows_) return 0;
  const Field& F = *field_;
  Elt d = 1;
  for (int i = 0; i < rows_; ++i) d = F.mul(d, m(i, i));
  return swaps % 2 ? F.neg(d) : d;
}

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(eliminate(m, nullptr, false).size());
}

bool Mat::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat Mat::scaled(Elt c) const {
  Mat m = *this;
  for (auto& x : m.a_) x = field_->mul(x, c);
  return m;
}

Mat Mat::power(long long e) const {
  if (e < 0) return inverse().power(-e);
  Mat r = identity(field_, rows_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::size_t Mat::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(rows_ * 131 + cols_);
  for (Elt x : a_) h = (h ^ x) * 1099511628211ull;
  return h;
}

std::string Mat::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    if (i) s += ';';
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += field_->element_to_string((*this)(i, j));
    }
  }
  return s;
}

Mat Mat::parse(const FieldPtr& field, const std::string& text) {
  std::vector<std::vector<Elt>> rows;
  std::stringstream rs(text);
  std::string rowtxt;
  while (std::getline(rs, rowtxt, ';')) {
    std::istringstream es(rowtxt);
    std::string tok;
    std::vector<Elt> row;
    while (es >> tok) {
      std::vector<int> c;
      std::stringstream cs(tok);
      std::string part;
      while (std::getline(cs, part, ',')) {
        try {
          std::size_t used = 0;
          c.push_back(std::stoi(part, &used));
          if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, "bad matrix entry '" + tok + "'");
        }
      }
      if (field->is_prime() && c.size() == 1) {
        if (c[0] < 0 || c[0] >= field->p()) throw Error(ErrorCode::ParseError, "entry out of range");
        row.push_back(static_cast<Elt>(c[0]));
      } else {
        if (static_cast<int>(c.size()) != field->degree())
          throw Error(ErrorCode::ParseError, "entry has wrong coefficient count");
        try {
          row.push_back(field->from_coeffs(c));
        } catch (const Error& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix");
  const int cols = static_cast<int>(rows[0].size());
  std::vector<Elt> flat;
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw Error(ErrorCode::ParseError, "ragged matrix");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Mat(field, static_cast<int>(rows.size()), cols, std::move(flat));
}

Vec vec_mul(const Vec& x, const Mat& g) {
  if (static_cast<int>(x.size()) != g.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix shape");
  const Field& F = *g.field();
  const int n = g.rows(), m = g.cols();
  Vec y(m, 0);
  const Elt* a = g.data().data();
  if (F.is_prime()) {
    const int p = F.p();
    int acc[64];
    std::vector<int> big;
    int* s = acc;
    if (m > 64) {
      big.assign(m, 0);
      s = big.data();
    } else {
      std::fill(acc, acc + m, 0);
    }
    for (int k = 0; k < n; ++k) {
      const int c = x[k];
      if (!c) continue;
      const Elt* r = a + static_cast<std::size_t>(k) * m;
      for (int j = 0; j < m; ++j) s[j] += c * r[j];
    }
    for (int j = 0; j < m; ++j) y[j] = static_cast<Elt>(s[j] % p);
    return y;
  }
  for (int k = 0; k < n; ++k) {
    if (!x[k]) continue;
    for (int j = 0; j < m; ++j) y[j] = F.add(y[j], F.mul(x[k], a[static_cast<std::size_t>(k) * m + j]));
  }
  return y;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.add(a[i], b[i]);
  return c;
}

Vec vec_scale(const Field& f, Elt c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

bool vec_is_zero(const Vec& a) noexcept {
  for (Elt x : a)
    if (x) return false;
  return true;
}

Vec unit_vector(int n, int i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Mat rref(const Mat& a, std::vector<int>* pivots) {
  Mat m = a;
  auto piv = eliminate(m, nullptr, true);
  Mat out(a.field(), static_cast<int>(piv.size()), a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(static_cast<int>(i), j) = m(static_cast<int>(i), j);
  if (pivots) *pivots = piv;
  return out;
}

Mat left_kernel(const Mat& a) {
  // x * a = 0  <=>  a^T * x^T = 0: solve the column system.
  const Field& F = *a.field();
  std::vector<int> piv;
  Mat r = rref(a.transpose(), &piv);
  const int n = a.rows();
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = F.neg(r(static_cast<int>(i), free));
    basis.push_back(std::move(x));
  }
  return Mat::from_rows(a.field(), basis, n);
}

long long element_order(const Mat& g, long long limit) {
  Mat x = g;
  for (long long k = 1; k <= limit; ++k) {
    if (x.is_identity()) return k;
    x = x * g;
  }
  return 0;
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Elt x : v) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace oddfact
