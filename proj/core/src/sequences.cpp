#include "sternkit/sequences.hpp"

#include <bit>

#include "sternkit/error.hpp"

namespace sternkit {

const mpz_class& SequenceCache::value(std::uint64_t n) {
    if (auto it = values_.find(n); it != values_.end()) return it->second;
    mpz_class v;
    if (n < 2) {
        v = static_cast<unsigned long>(n);
    } else if (n % 2 == 0) {
        v = value(n / 2);
        if (kind_ == SequenceKind::twisted) v = -v;
    } else {
        const std::uint64_t m = n / 2;
        v = value(m);
        v += value(m + 1);
        if (kind_ == SequenceKind::twisted) v = -v;
    }
    return values_.emplace(n, std::move(v)).first->second;
}

mpz_class stern(std::uint64_t n) {
    thread_local SequenceCache cache(SequenceKind::stern);
    return cache.value(n);
}

mpz_class twisted(std::uint64_t n) {
    thread_local SequenceCache cache(SequenceKind::twisted);
    return cache.value(n);
}

mpz_class stern_by_digits(std::uint64_t n) {
    mpz_class a = 1, b = 0;
    for (; n > 1; n >>= 1) {
        if (n % 2 == 0) {
            a += b;
        } else {
            b += a;
        }
    }
    return n == 0 ? b : mpz_class(a + b);
}

mpz_class twisted_by_digits(std::uint64_t n) {
    mpz_class a = 1, b = 0;
    for (; n > 1; n >>= 1) {
        if (n % 2 == 0) {
            mpz_class na = -a - b;
            b = -b;
            a = std::move(na);
        } else {
            mpz_class nb = -a - b;
            a = -a;
            b = std::move(nb);
        }
    }
    return n == 0 ? b : mpz_class(a - b);
}

BinaryWord BinaryWord::of(std::uint64_t n) {
    BinaryWord w;
    if (n == 0) {
        w.bits.push_back(0);
        return w;
    }
    const int len = std::bit_width(n);
    for (int i = len - 1; i >= 0; --i) w.bits.push_back(static_cast<std::uint8_t>((n >> i) & 1u));
    return w;
}

std::uint64_t BinaryWord::value() const {
    std::uint64_t v = 0;
    for (auto b : bits) v = (v << 1) | b;
    return v;
}

mpz_class count_admissible(std::uint64_t n) {
    // ends_in_one: subsequences in 1(01)*; ends_in_ten: subsequences in 1(01)*0.
    mpz_class ends_in_one = 0, ends_in_ten = 0;
    for (auto bit : BinaryWord::of(n).bits) {
        if (bit) {
            ends_in_one += ends_in_ten + 1;
        } else {
            ends_in_ten += ends_in_one;
        }
    }
    return ends_in_one;
}

namespace {

void check_guard(const BinaryWord& w, unsigned guard_bits) {
    if (w.size() > guard_bits) {
        throw InputTooLarge("binary word of length " + std::to_string(w.size()) + " exceeds enumeration guard of " +
                            std::to_string(guard_bits) + " bits");
    }
}

// Alternating word 1010... of the given parity of start.
bool alternates_from_one(const std::vector<std::uint8_t>& word) {
    for (std::size_t j = 0; j < word.size(); ++j) {
        if (word[j] != (j % 2 == 0 ? 1 : 0)) return false;
    }
    return true;
}

template <class Visit>
void for_each_subsequence(const BinaryWord& w, Visit&& visit) {
    const std::size_t l = w.size();
    std::vector<std::uint8_t> word;
    std::vector<unsigned> positions;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
        word.clear();
        positions.clear();
        for (std::size_t i = 0; i < l; ++i) {
            if ((mask >> (l - 1 - i)) & 1u) {
                word.push_back(w.bits[i]);
                positions.push_back(static_cast<unsigned>(l - 1 - i));
            }
        }
        visit(word, positions);
    }
}

}  // namespace

std::vector<PositionSet> enumerate_admissible(std::uint64_t n, unsigned guard_bits) {
    const BinaryWord w = BinaryWord::of(n);
    check_guard(w, guard_bits);
    std::vector<PositionSet> out;
    for_each_subsequence(w, [&](const std::vector<std::uint8_t>& word, const std::vector<unsigned>& pos) {
        if (word.size() % 2 == 1 && alternates_from_one(word)) out.push_back(pos);
    });
    return out;
}

std::pair<Polynomial, Polynomial> weighted_count_direct(std::uint64_t n, unsigned guard_bits) {
    const BinaryWord w = BinaryWord::of(n);
    check_guard(w, guard_bits);
    std::vector<mpz_class> odd(w.size() / 2 + 1), even(w.size() / 2 + 1);
    for_each_subsequence(w, [&](const std::vector<std::uint8_t>& word, const std::vector<unsigned>&) {
        if (!alternates_from_one(word)) return;
        if (word.size() % 2 == 1) {
            odd[word.size() / 2] += 1;
        } else {
            even[word.size() / 2] += 1;
        }
    });
    return {Polynomial(std::move(odd)), Polynomial(std::move(even))};
}

namespace {

std::pair<Polynomial, Polynomial> weighted_pair(std::uint64_t n) {
    if (n == 0) return {Polynomial{}, Polynomial::constant(1)};
    const Polynomial w = Polynomial::variable();
    Polynomial s = Polynomial::constant(1);
    Polynomial se = Polynomial::constant(1);
    const int len = std::bit_width(n);
    for (int i = len - 2; i >= 0; --i) {
        if ((n >> i) & 1u) {
            s += se;
        } else {
            se += w * s;
        }
    }
    return {std::move(s), std::move(se)};
}

}  // namespace

Polynomial weighted_stern(std::uint64_t n) { return weighted_pair(n).first; }

Polynomial weighted_even(std::uint64_t n) { return weighted_pair(n).second; }

Polynomial weighted_stern_alt(std::uint64_t n) {
    thread_local std::unordered_map<std::uint64_t, Polynomial> memo;
    if (n == 0) return {};
    if (n == 1) return Polynomial::constant(1);
    if (auto it = memo.find(n); it != memo.end()) return it->second;

    Polynomial result;
    if (n % 2 == 0) {
        result = weighted_stern_alt(n / 2);
    } else if (n % 4 == 1) {
        const std::uint64_t q = n / 4;
        result = Polynomial::variable() * weighted_stern_alt(2 * q) + weighted_stern_alt(2 * q + 1);
    } else {
        const std::uint64_t q = (n + 1) / 4;
        const std::uint64_t m = ((q >> std::countr_zero(q)) - 1) / 2;
        result = weighted_stern_alt(2 * q - 1) + weighted_stern_alt(2 * m + 1) +
                 Polynomial{-1, 1} * weighted_stern_alt(2 * m);
    }
    return memo.emplace(n, std::move(result)).first->second;
}

unsigned v2(std::uint64_t n) {
    if (n == 0) throw DomainError("2-adic valuation of 0 is undefined");
    return static_cast<unsigned>(std::countr_zero(n));
}

int mod2(std::uint64_t n) { return n % 3 == 0 ? 0 : 1; }

}  // namespace sternkit
