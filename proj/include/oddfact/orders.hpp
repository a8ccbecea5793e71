#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddfact {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(const BigInt& base, unsigned e);
std::string to_string(const BigInt& n);

/// Families with closed-form orders. Parameter conventions:
///   OmegaOdd(m, q)            |Omega_{2m+1}(q)|
///   OmegaPlus/OmegaMinus(m,q) |Omega^{+/-}_{2m}(q)|
///   SL/SU(n, q)               matrix group orders
///   Sp/PSp(n, q)              n = dimension (even)
///   G2(q), TwistedG2(q) (q = 3^odd), F4(q)
///   Spin9(q) = 2.Omega_9(q), SpinMinus8(q) = 2.Omega^-_8(q)
enum class Family { OmegaOdd, OmegaPlus, OmegaMinus, SL, SU, Sp, PSp, G2, TwistedG2, F4, Spin9, SpinMinus8 };

struct OrderFormula {
  Family family;
  std::vector<long long> params;  // (n or m, q) or (q)
};

Family parse_family(const std::string& name);
std::string to_string(Family f);

/// Exact order; throws BadParams on invalid parameters (q must be an odd
/// prime power for every family).
BigInt order_of(const OrderFormula& f);
BigInt order_of(Family family, std::vector<long long> params);

/// Human-readable product of the factors the formula multiplies together,
/// e.g. "3^9 * 8 * 80 * 728 / 2".
std::string order_factors(const OrderFormula& f);

/// q = p^f with p an odd prime; returns {p, f} or throws BadParams.
std::pair<long long, int> prime_power(long long q);

}  // namespace oddfact
