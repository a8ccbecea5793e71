#include "oddfact/orders.hpp"

#include <map>

#include "oddfact/error.hpp"
#include "oddfact/gf.hpp"

namespace oddfact {

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string to_string(const BigInt& n) { return n.str(); }

std::pair<long long, int> prime_power(long long q) {
  if (q < 3) throw Error(ErrorCode::BadParams, "q must be an odd prime power");
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (!p) p = q;
  if (p == 2) throw Error(ErrorCode::BadParams, "q must be odd");
  int f = 0;
  long long r = q;
  while (r % p == 0) {
    r /= p;
    ++f;
  }
  if (r != 1) throw Error(ErrorCode::BadParams, std::to_string(q) + " is not a prime power");
  return {p, f};
}

namespace {

const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> names{
      {"OmegaOdd", Family::OmegaOdd}, {"OmegaPlus", Family::OmegaPlus}, {"OmegaMinus", Family::OmegaMinus},
      {"SL", Family::SL},             {"SU", Family::SU},               {"Sp", Family::Sp},
      {"PSp", Family::PSp},           {"G2", Family::G2},               {"TwistedG2", Family::TwistedG2},
      {"F4", Family::F4},             {"Spin9", Family::Spin9},         {"SpinMinus8", Family::SpinMinus8}};
  return names;
}

struct Terms {
  std::vector<std::pair<std::string, BigInt>> factors;
  BigInt divisor = 1;

  void power(long long q, long long e) {
    factors.emplace_back(std::to_string(q) + "^" + std::to_string(e), ipow(BigInt(q), static_cast<unsigned>(e)));
  }
  // (q^e + sign)
  void cyclo(long long q, long long e, int sign) {
    BigInt v = ipow(BigInt(q), static_cast<unsigned>(e)) + sign;
    factors.emplace_back("(" + std::to_string(q) + "^" + std::to_string(e) + (sign > 0 ? "+1)" : "-1)"), v);
  }
  void times(const Terms& other) {
    factors.insert(factors.end(), other.factors.begin(), other.factors.end());
    divisor *= other.divisor;
  }
  BigInt value() const {
    BigInt r = 1;
    for (const auto& f : factors) r *= f.second;
    return r / divisor;
  }
};

long long need(const OrderFormula& f, std::size_t count) {
  if (f.params.size() != count)
    throw Error(ErrorCode::BadParams, to_string(f.family) + " takes " + std::to_string(count) + " parameter(s)");
  return 0;
}

long long checked_q(long long q) {
  prime_power(q);
  return q;
}

Terms omega_odd(long long m, long long q) {
  if (m < 1) throw Error(ErrorCode::BadParams, "OmegaOdd needs m >= 1");
  Terms t;
  t.power(q, m * m);
  for (long long i = 1; i <= m; ++i) t.cyclo(q, 2 * i, -1);
  t.divisor = 2;
  return t;
}

Terms omega_even(long long m, long long q, int eps) {
  if (m < 1) throw Error(ErrorCode::BadParams, "even-dimensional Omega needs m >= 1");
  Terms t;
  if (m == 1) {
    // Omega^{+/-}_2(q) is cyclic of order (q - eps)/2
    t.cyclo(q, 1, -eps);
    t.divisor = 2;
    return t;
  }
  t.power(q, m * (m - 1));
  t.cyclo(q, m, -eps);
  for (long long i = 1; i <= m - 1; ++i) t.cyclo(q, 2 * i, -1);
  t.divisor = 2;
  return t;
}

Terms sl(long long n, long long q, bool unitary) {
  if (n < 1) throw Error(ErrorCode::BadParams, "SL/SU needs n >= 1");
  Terms t;
  if (n == 1) return t;
  t.power(q, n * (n - 1) / 2);
  for (long long i = 2; i <= n; ++i) t.cyclo(q, i, unitary && i % 2 ? 1 : -1);
  return t;
}

Terms sp(long long n, long long q) {
  if (n < 0 || n % 2) throw Error(ErrorCode::BadParams, "Sp needs even dimension");
  Terms t;
  const long long k = n / 2;
  if (k == 0) return t;
  t.power(q, k * k);
  for (long long i = 1; i <= k; ++i) t.cyclo(q, 2 * i, -1);
  return t;
}

Terms terms_of(const OrderFormula& f) {
  switch (f.family) {
    case Family::OmegaOdd:
      need(f, 2);
      return omega_odd(f.params[0], checked_q(f.params[1]));
    case Family::OmegaPlus:
      need(f, 2);
      return omega_even(f.params[0], checked_q(f.params[1]), +1);
    case Family::OmegaMinus:
      need(f, 2);
      return omega_even(f.params[0], checked_q(f.params[1]), -1);
    case Family::SL:
      need(f, 2);
      return sl(f.params[0], checked_q(f.params[1]), false);
    case Family::SU:
      need(f, 2);
      return sl(f.params[0], checked_q(f.params[1]), true);
    case Family::Sp:
      need(f, 2);
      return sp(f.params[0], checked_q(f.params[1]));
    case Family::PSp: {
      need(f, 2);
      Terms t = sp(f.params[0], checked_q(f.params[1]));
      if (f.params[0] > 0) t.divisor = 2;
      return t;
    }
    case Family::G2: {
      need(f, 1);
      const long long q = checked_q(f.params[0]);
      Terms t;
      t.power(q, 6);
      t.cyclo(q, 6, -1);
      t.cyclo(q, 2, -1);
      return t;
    }
    case Family::TwistedG2: {
      need(f, 1);
      const long long q = checked_q(f.params[0]);
      auto [p, e] = prime_power(q);
      if (p != 3 || e % 2 == 0) throw Error(ErrorCode::BadParams, "TwistedG2 needs q = 3^(odd)");
      Terms t;
      t.power(q, 3);
      t.cyclo(q, 3, +1);
      t.cyclo(q, 1, -1);
      return t;
    }
    case Family::F4: {
      need(f, 1);
      const long long q = checked_q(f.params[0]);
      Terms t;
      t.power(q, 24);
      for (long long e : {12, 8, 6, 2}) t.cyclo(q, e, -1);
      return t;
    }
    case Family::Spin9: {
      need(f, 1);
      Terms t = omega_odd(4, checked_q(f.params[0]));
      t.divisor = 1;
      return t;
    }
    case Family::SpinMinus8: {
      need(f, 1);
      Terms t = omega_even(4, checked_q(f.params[0]), -1);
      t.divisor = 1;
      return t;
    }
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family");
}

}  // namespace

Family parse_family(const std::string& name) {
  auto it = family_names().find(name);
  if (it == family_names().end()) throw Error(ErrorCode::UnknownFamily, "unknown family '" + name + "'");
  return it->second;
}

std::string to_string(Family f) {
  for (const auto& [name, fam] : family_names())
    if (fam == f) return name;
  return "?";
}

BigInt order_of(const OrderFormula& f) { return terms_of(f).value(); }

BigInt order_of(Family family, std::vector<long long> params) {
  return order_of(OrderFormula{family, std::move(params)});
}

std::string order_factors(const OrderFormula& f) {
  const Terms t = terms_of(f);
  std::string s;
  for (const auto& [label, v] : t.factors) {
    if (!s.empty()) s += " * ";
    s += label;
  }
  if (s.empty()) s = "1";
  if (t.divisor != 1) s += " / " + t.divisor.str();
  return s;
}

}  // namespace oddfact
