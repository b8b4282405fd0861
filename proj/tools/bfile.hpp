#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sternkit::cli {

/// Contents of an OEIS b-file: "n value" lines with strictly increasing n.
struct BFile {
    std::string oeis_id;
    std::vector<std::pair<std::uint64_t, mpz_class>> entries;
};

/// Skips blank lines and lines starting with '#'. ParseError (with the
/// 1-based line number) on a malformed line, FormatError on a non-increasing
/// index.
BFile parse_bfile(std::string_view text, std::string oeis_id = {});

/// True for "A" followed by one or more digits.
bool is_oeis_id(std::string_view id);

}  // namespace sternkit::cli
