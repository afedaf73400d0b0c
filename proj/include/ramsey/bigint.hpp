#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt ipow(BigInt base, std::uint64_t exp);

// largest n >= 0 with n^k <= x; exact, bisection on big integers
BigInt integer_kth_root(const BigInt& x, unsigned k);
std::uint64_t u64_kth_root(std::uint64_t x, unsigned k);

}
