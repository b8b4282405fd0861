#include "bfile.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "sternkit/error.hpp"

namespace sternkit::cli {

namespace {

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::optional<std::uint64_t> parse_index(std::string_view token) {
    if (token.empty() || token.size() > 19) return std::nullopt;
    std::uint64_t v = 0;
    for (char c : token) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
}

}  // namespace

bool is_oeis_id(std::string_view id) {
    return id.size() >= 2 && id[0] == 'A' &&
           std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BFile parse_bfile(std::string_view text, std::string oeis_id) {
    BFile out;
    out.oeis_id = std::move(oeis_id);
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t end = text.find('\n');
        std::string_view line = trim(text.substr(0, end));
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (line.empty() || line.front() == '#') continue;

        const std::size_t gap = line.find_first_of(" \t");
        if (gap == std::string_view::npos) throw ParseError(line_no, "expected 'index value'");
        const auto index = parse_index(line.substr(0, gap));
        if (!index) throw ParseError(line_no, "bad index '" + std::string(line.substr(0, gap)) + "'");
        const std::string value_text(trim(line.substr(gap)));
        mpz_class value;
        if (value_text.empty() || value_text.find_first_of(" \t") != std::string::npos ||
            value.set_str(value_text.front() == '+' ? value_text.substr(1) : value_text, 10) != 0) {
            throw ParseError(line_no, "bad value '" + value_text + "'");
        }
        if (!out.entries.empty() && *index <= out.entries.back().first) {
            throw FormatError("line " + std::to_string(line_no) + ": index " + std::to_string(*index) +
                              " does not increase");
        }
        out.entries.emplace_back(*index, std::move(value));
    }
    return out;
}

}  // namespace sternkit::cli
