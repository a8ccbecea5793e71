#include "oddfact/point.hpp"

#include <array>
#include <memory>

namespace oddfact {

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::Vector: return "vector";
    case PointKind::Line: return "line";
    case PointKind::Subspace: return "subspace";
    case PointKind::Tensor: return "tensor";
  }
  return "?";
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ (static_cast<std::uint64_t>(p.kind) << 8 | p.n);
  for (Elt e : p.data) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Point vector_point(const Vec& v) { return Point{PointKind::Vector, static_cast<std::uint8_t>(v.size()), v}; }

namespace {

void normalise_line(const Field& F, Vec& v) {
  for (Elt x : v)
    if (x) {
      if (x != 1) {
        const Elt s = F.inv(x);
        for (Elt& y : v) y = F.mul(y, s);
      }
      return;
    }
}

// Index of e_i^e_j^e_k (i<j<k) among the lexicographically ordered triples.
struct TripleIndex {
  int n;
  std::vector<int> idx;
  explicit TripleIndex(int n_) : n(n_), idx(static_cast<std::size_t>(n_) * n_ * n_, -1) {
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) idx[(i * n + j) * n + k] = c++;
  }
  int operator()(int i, int j, int k) const { return idx[(i * n + j) * n + k]; }
};

const TripleIndex& triples(int n) {
  static thread_local std::vector<std::unique_ptr<TripleIndex>> cache(32);
  if (!cache[n]) cache[n] = std::make_unique<TripleIndex>(n);
  return *cache[n];
}

Point act_tensor(const Field& F, const Point& p, const Mat& g) {
  const int n = p.n;
  const int t = tensor_size(n);
  Point out{PointKind::Tensor, p.n, Vec(t, 0)};
  // 2x2 minors of row pairs: minor[(i,j)][(a,b)] for a<b
  const int pairs = n * (n - 1) / 2;
  std::vector<Elt> minors(static_cast<std::size_t>(n) * n * pairs, 0);
  std::vector<int> pair_index(static_cast<std::size_t>(n) * n, -1);
  {
    int c = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pair_index[a * n + b] = c++;
  }
  std::vector<char> have(static_cast<std::size_t>(n) * n, 0);
  auto minor_row = [&](int i, int j) -> const Elt* {
    Elt* m = &minors[(static_cast<std::size_t>(i) * n + j) * pairs];
    if (!have[i * n + j]) {
      have[i * n + j] = 1;
      int c = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          m[c++] = F.sub(F.mul(g(i, a), g(j, b)), F.mul(g(i, b), g(j, a)));
    }
    return m;
  };
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Elt* m = nullptr;
      for (int k = j + 1; k < n; ++k, ++c) {
        const Elt coeff = p.data[c];
        if (!coeff) continue;
        if (!m) m = minor_row(i, j);
        // det of rows i, j, k restricted to columns a<b<c, expanded along row k
        int o = 0;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            for (int d = b + 1; d < n; ++d, ++o) {
              Elt v = F.mul(g(k, d), m[pair_index[a * n + b]]);
              v = F.sub(v, F.mul(g(k, b), m[pair_index[a * n + d]]));
              v = F.add(v, F.mul(g(k, a), m[pair_index[b * n + d]]));
              if (v) out.data[o] = F.add(out.data[o], F.mul(coeff, v));
            }
      }
    }
  return out;
}

}  // namespace

Point line_point(const Field& F, const Vec& v) {
  Point p{PointKind::Line, static_cast<std::uint8_t>(v.size()), v};
  normalise_line(F, p.data);
  return p;
}

Point subspace_point(const Mat& rows) {
  Mat r = rref(rows);
  return Point{PointKind::Subspace, static_cast<std::uint8_t>(r.cols()), r.data()};
}

int tensor_size(int n) { return n * (n - 1) * (n - 2) / 6; }

Point tensor_point(const Field& F, int n, const std::vector<TensorTerm>& terms) {
  Point p{PointKind::Tensor, static_cast<std::uint8_t>(n), Vec(tensor_size(n), 0)};
  const TripleIndex& T = triples(n);
  for (const TensorTerm& term : terms) {
    std::array<int, 3> a{term.i, term.j, term.k};
    if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2]) throw Error(ErrorCode::BadParams, "repeated tensor index");
    bool odd = false;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 2 - x; ++y)
        if (a[y] > a[y + 1]) {
          std::swap(a[y], a[y + 1]);
          odd = !odd;
        }
    Elt c = odd ? F.neg(term.c) : term.c;
    Elt& slot = p.data[T(a[0], a[1], a[2])];
    slot = F.add(slot, c);
  }
  return p;
}

Point act(const Field& F, const Point& p, const Mat& g) {
  switch (p.kind) {
    case PointKind::Vector: return Point{p.kind, p.n, vec_mul(p.data, g)};
    case PointKind::Line: {
      Point out{p.kind, p.n, vec_mul(p.data, g)};
      normalise_line(F, out.data);
      return out;
    }
    case PointKind::Subspace: {
      const int k = static_cast<int>(p.data.size()) / p.n;
      Mat rows(g.field(), k, p.n, p.data);
      return subspace_point(rows * g);
    }
    case PointKind::Tensor: return act_tensor(F, p, g);
  }
  return p;
}

namespace {

Mat as_matrix(const FieldPtr& F, const Point& p) {
  if (p.kind == PointKind::Subspace) {
    const int k = static_cast<int>(p.data.size()) / p.n;
    return Mat(F, k, p.n, p.data);
  }
  return Mat(F, 1, static_cast<int>(p.data.size()), p.data);
}

}  // namespace

std::string to_string(const Field& F, const Point& p) {
  // The matrix printer needs a FieldPtr; rebuild a cheap shared handle.
  FieldPtr handle(&F, [](const Field*) {});
  std::string head;
  switch (p.kind) {
    case PointKind::Vector: head = "V"; break;
    case PointKind::Line: head = "L"; break;
    case PointKind::Subspace: head = "S" + std::to_string(p.n); break;
    case PointKind::Tensor: head = "T" + std::to_string(p.n); break;
  }
  return head + ":" + as_matrix(handle, p).to_string();
}

Point parse_point(const Field& F, const std::string& text) {
  FieldPtr handle(&F, [](const Field*) {});
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) throw Error(ErrorCode::ParseError, "point needs a kind prefix");
  const std::string head = text.substr(0, colon);
  const Mat m = Mat::parse(handle, text.substr(colon + 1));
  Point p;
  p.data = m.data();
  switch (head[0]) {
    case 'V': p.kind = PointKind::Vector; p.n = static_cast<std::uint8_t>(m.cols()); break;
    case 'L': p.kind = PointKind::Line; p.n = static_cast<std::uint8_t>(m.cols()); break;
    case 'S':
      p.kind = PointKind::Subspace;
      p.n = static_cast<std::uint8_t>(std::stoi(head.substr(1)));
      if (m.cols() != p.n) throw Error(ErrorCode::ParseError, "subspace width mismatch");
      break;
    case 'T':
      p.kind = PointKind::Tensor;
      p.n = static_cast<std::uint8_t>(std::stoi(head.substr(1)));
      if (static_cast<int>(p.data.size()) != tensor_size(p.n)) throw Error(ErrorCode::ParseError, "tensor size mismatch");
      break;
    default: throw Error(ErrorCode::ParseError, "unknown point kind '" + head + "'");
  }
  return p;
}

}  // namespace oddfact
