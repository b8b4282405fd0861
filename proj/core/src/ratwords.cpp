#include "sternkit/ratwords.hpp"

#include <algorithm>

namespace sternkit {

std::vector<unsigned> expansion(std::uint64_t n, unsigned k) {
    if (k < 2) throw PreconditionError("expansion base must be at least 2");
    std::vector<unsigned> digits;
    do {
        digits.push_back(static_cast<unsigned>(n % k));
        n /= k;
    } while (n != 0);
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace sternkit
