#include "ramsey/bigint.hpp"

#include <stdexcept>

namespace ramsey {

BigInt ipow(BigInt base, std::uint64_t exp) {
    BigInt result = 1;
    while (exp) {
        if (exp & 1) result *= base;
        exp >>= 1;
        if (exp) base *= base;
    }
    return result;
}

BigInt integer_kth_root(const BigInt& x, unsigned k) {
    if (k == 0) throw std::invalid_argument("integer_kth_root: k must be >= 1");
    if (x < 0) throw std::invalid_argument("integer_kth_root: negative input");
    if (x == 0) return 0;
    if (k == 1) return x;
    // x < 2^bits, so root <= 2^(bits/k + 1)
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
    BigInt lo = 1, hi = BigInt(1) << (bits / k + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) >> 1;
        if (ipow(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::uint64_t u64_kth_root(std::uint64_t x, unsigned k) {
    return static_cast<std::uint64_t>(integer_kth_root(BigInt(x), k));
}

}
