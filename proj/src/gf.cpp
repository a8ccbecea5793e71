#include "oddfact/gf.hpp"

#include <sstream>

namespace oddfact {

namespace {

using Poly = std::vector<int>;  // low-to-high, trailing zeros trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int r = 1;
  for (int e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inv_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_from_code(int code, int p, int len) {
  Poly c(len);
  for (int i = 0; i < len; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

// Monic polynomial of degree deg whose lower coefficients are given by code.
Poly monic_from_code(int code, int p, int deg) {
  Poly c = poly_from_code(code, p, deg);
  c.push_back(1);
  return c;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    for (int code = 0; code < ipow(p, d); ++code) {
      if (poly_mod(f, monic_from_code(code, p, d), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr Field::make(int p, int f) {
  if (!oddfact::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (f < 1) throw Error(ErrorCode::BadParams, "field degree must be positive");
  if (f == 1) return FieldPtr(new Field(p, 1, {0, 1}));
  for (int code = 0; code < ipow(p, f); ++code) {
    Poly cand = monic_from_code(code, p, f);
    if (irreducible(cand, p)) return FieldPtr(new Field(p, f, cand));
  }
  throw Error(ErrorCode::ConstructionFailure, "no irreducible polynomial found");
}

FieldPtr Field::from_modulus(int p, const std::vector<int>& modulus) {
  if (!oddfact::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  const int f = static_cast<int>(modulus.size()) - 1;
  if (f < 1 || modulus.back() != 1)
    throw Error(ErrorCode::BadParams, "modulus must be monic of positive degree");
  for (int c : modulus)
    if (c < 0 || c >= p) throw Error(ErrorCode::BadParams, "modulus coefficient out of range");
  if (f == 1) {
    if (modulus[0] != 0) throw Error(ErrorCode::BadParams, "prime field modulus must be x");
    return FieldPtr(new Field(p, 1, modulus));
  }
  if (!irreducible(modulus, p)) throw Error(ErrorCode::BadParams, "modulus is reducible");
  return FieldPtr(new Field(p, f, modulus));
}

Field::Field(int p, int f, std::vector<int> modulus)
    : p_(p), f_(f), q_(ipow(p, f)), modulus_(std::move(modulus)) {
  if (q_ > 4096) throw Error(ErrorCode::BadParams, "field too large for table arithmetic");
  const std::size_t qq = static_cast<std::size_t>(q_) * q_;
  add_.resize(qq);
  mul_.resize(qq);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  std::vector<Poly> polys(q_);
  for (int a = 0; a < q_; ++a) polys[a] = poly_from_code(a, p_, f_);
  auto code_of = [&](const Poly& c) {
    int code = 0;
    for (int i = f_ - 1; i >= 0; --i) code = code * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return static_cast<Elt>(code);
  };
  for (int a = 0; a < q_; ++a) {
    Poly n(f_);
    for (int i = 0; i < f_; ++i) n[i] = (p_ - polys[a][i]) % p_;
    neg_[a] = code_of(n);
    for (int b = 0; b < q_; ++b) {
      Poly s(f_);
      for (int i = 0; i < f_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[a * q_ + b] = code_of(s);
      Poly prod(2 * f_ - 1, 0);
      for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p_;
      mul_[a * q_ + b] = f_ == 1 ? code_of(prod) : code_of(poly_mod(prod, modulus_, p_));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<Elt>(b);
        break;
      }
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return inv_[a];
}

Elt Field::pow(Elt a, std::uint64_t e) const noexcept {
  Elt r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elt Field::from_int(long long v) const noexcept {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

std::vector<int> Field::coeffs(Elt a) const { return poly_from_code(a, p_, f_); }

Elt Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != f_) throw Error(ErrorCode::BadParams, "coefficient count");
  int code = 0;
  for (int i = f_ - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= p_) throw Error(ErrorCode::BadParams, "coefficient out of range");
    code = code * p_ + c[i];
  }
  return static_cast<Elt>(code);
}

bool Field::is_square(Elt a) const {
  if (a == 0) throw Error(ErrorCode::ZeroArgument, "square class of zero");
  return pow(a, static_cast<std::uint64_t>((q_ - 1) / 2)) == 1;
}

Elt Field::nonsquare() const {
  for (int a = 1; a < q_; ++a)
    if (!is_square(static_cast<Elt>(a))) return static_cast<Elt>(a);
  throw Error(ErrorCode::ConstructionFailure, "field without nonsquares");
}

Elt Field::primitive() const {
  for (int a = 1; a < q_; ++a) {
    int order = 1;
    for (Elt x = static_cast<Elt>(a); x != 1; x = mul(x, static_cast<Elt>(a))) ++order;
    if (order == q_ - 1) return static_cast<Elt>(a);
  }
  throw Error(ErrorCode::ConstructionFailure, "no primitive element");
}

Elt Field::sqrt(Elt a) const {
  for (int x = 0; x < q_; ++x)
    if (mul(static_cast<Elt>(x), static_cast<Elt>(x)) == a) return static_cast<Elt>(x);
  throw Error(ErrorCode::BadParams, "not a square");
}

std::string Field::serialize() const {
  std::ostringstream os;
  os << "GF " << p_ << ' ' << f_;
  for (int c : modulus_) os << ' ' << c;
  return os.str();
}

FieldPtr Field::parse(const std::string& line) {
  std::istringstream is(line);
  std::string tag;
  int p = 0, f = 0;
  if (!(is >> tag >> p >> f) || tag != "GF" || f < 1)
    throw Error(ErrorCode::ParseError, "bad field header: " + line);
  std::vector<int> mod(f + 1);
  for (int& c : mod)
    if (!(is >> c)) throw Error(ErrorCode::ParseError, "bad field modulus: " + line);
  std::string extra;
  if (is >> extra) throw Error(ErrorCode::ParseError, "trailing data in field header: " + line);
  try {
    return from_modulus(p, mod);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string Field::element_to_string(Elt a) const {
  if (f_ == 1) return std::to_string(a);
  std::string s;
  auto c = coeffs(a);
  for (int i = 0; i < f_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

FieldElement::FieldElement(FieldPtr field, Elt code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_->order()) throw Error(ErrorCode::BadParams, "element code out of range");
}

FieldElement FieldElement::from_int(FieldPtr field, long long v) {
  const Elt c = field->from_int(v);
  return FieldElement(std::move(field), c);
}

namespace {
const Field& common(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !a.field()->same_as(*b.field()))
    throw Error(ErrorCode::FieldMismatch, "operands from different fields");
  return *a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field(), common(a, b).add(a.code(), b.code()));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field(), common(a, b).sub(a.code(), b.code()));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field(), common(a, b).mul(a.code(), b.code()));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field(), common(a, b).div(a.code(), b.code()));
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(code_)); }
FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(field_, field_->pow(code_, e));
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.code() == b.code() && (a.field() == b.field() || a.field()->same_as(*b.field()));
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorCode::BadParams, "unknown operation");
}

bool is_square(const FieldElement& a) { return a.field()->is_square(a.code()); }

FieldElement nonsquare(const FieldPtr& field) { return FieldElement(field, field->nonsquare()); }

}  // namespace oddfact
