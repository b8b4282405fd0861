#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sternkit/polynomial.hpp"

namespace sternkit {

enum class SequenceKind { stern, twisted };

/// Lazily memoized values of s(n) (stern) or t(n) (twisted).
///
/// Not synchronized: share one instance per thread. The free functions
/// stern() and twisted() below use a thread-local instance each.
class SequenceCache {
public:
    explicit SequenceCache(SequenceKind kind) : kind_(kind) {}

    SequenceKind kind() const noexcept { return kind_; }
    const mpz_class& value(std::uint64_t n);
    std::size_t size() const noexcept { return values_.size(); }

private:
    SequenceKind kind_;
    std::unordered_map<std::uint64_t, mpz_class> values_;
};

/// s(0)=0, s(1)=1, s(2n)=s(n), s(2n+1)=s(n)+s(n+1).
mpz_class stern(std::uint64_t n);
/// t(0)=0, t(1)=1, t(2n)=-t(n), t(2n+1)=-t(n)-t(n+1).
mpz_class twisted(std::uint64_t n);

// Cache-free evaluation by a single pass over the binary digits, least
// significant first, tracking a*x(m) + b*x(m+1).
mpz_class stern_by_digits(std::uint64_t n);
mpz_class twisted_by_digits(std::uint64_t n);

/// Most significant bit first; the word of 0 is "0".
struct BinaryWord {
    std::vector<std::uint8_t> bits;

    static BinaryWord of(std::uint64_t n);
    std::uint64_t value() const;
    std::size_t size() const noexcept { return bits.size(); }
};

/// Bit-length limit for the brute-force enumerators.
inline constexpr unsigned kEnumerationGuardBits = 24;

/// Number of subsequences of the binary word of n lying in 1(01)*, by a
/// two-state scan.
mpz_class count_admissible(std::uint64_t n);

/// Bit positions (exponents, highest first) of one admissible subsequence.
using PositionSet = std::vector<unsigned>;

/// Every admissible subsequence, by checking all 2^l position subsets.
/// Throws InputTooLarge past `guard_bits` bits.
std::vector<PositionSet> enumerate_admissible(std::uint64_t n, unsigned guard_bits = kEnumerationGuardBits);

/// S(n): admissible subsequences weighted by w^k for 1(01)^k.
Polynomial weighted_stern(std::uint64_t n);
/// S_e(n): subsequences (10)^k weighted by w^k; the empty one counts 1.
Polynomial weighted_even(std::uint64_t n);
/// S(n) through S(2n)=S(n), S(4n+1)=wS(2n)+S(2n+1) and
/// S(4n-1)=S(2n-1)+S(2m+1)+(w-1)S(2m) with n=2^a(2m+1).
Polynomial weighted_stern_alt(std::uint64_t n);
/// (S(n), S_e(n)) by enumerating every subsequence of the binary word.
std::pair<Polynomial, Polynomial> weighted_count_direct(std::uint64_t n, unsigned guard_bits = kEnumerationGuardBits);

/// 2-adic valuation; DomainError for 0.
unsigned v2(std::uint64_t n);
/// Parity of s(n) and t(n): 0 iff 3 divides n.
int mod2(std::uint64_t n);

inline bool is_power_of_two(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }
/// n = 3 * 2^j for some j >= 0.
inline bool is_three_times_power_of_two(std::uint64_t n) noexcept {
    if (n == 0) return false;
    while ((n & 1u) == 0) n >>= 1;
    return n == 3;
}

}  // namespace sternkit
