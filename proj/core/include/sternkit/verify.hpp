#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "sternkit/expr.hpp"
#include "sternkit/series.hpp"

namespace sternkit {

enum class IdentityStatus { as_printed, suspected_typo, corrected };

std::string_view to_string(IdentityStatus status);
IdentityStatus identity_status_from_string(std::string_view text);

/// One registry entry: a chain of closed forms that must all be equal on the
/// parameter range e >= e_min, n_lo(e) <= n <= n_hi(e). Range bounds use
/// floor semantics for negative powers of two.
struct IdentityRecord {
    std::string id;
    std::vector<Expr> sides;
    unsigned e_min = 0;
    Expr n_lo = 0;
    Expr n_hi = 0;
    std::string printed_range;  ///< range as originally stated
    std::string anchor;         ///< verbatim source formula
    IdentityStatus status = IdentityStatus::as_printed;

    std::string statement() const;
};

const std::vector<IdentityRecord>& identity_registry();
/// Throws LookupError for an unknown id.
const IdentityRecord& find_identity(std::string_view id);

struct Counterexample {
    long e = 0;
    mpz_class n;
    std::string lhs;  ///< decimal, or "undefined" outside the domain
    std::string rhs;
    std::string note;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Maximal contiguous valid n-interval found around the center of the
/// printed range for one e.
struct ScannedRange {
    long e = 0;
    mpz_class printed_lo, printed_hi;
    bool empty = false;
    mpz_class lo, hi;
    bool capped = false;  ///< upper search limit reached without a failure

    friend bool operator==(const ScannedRange&, const ScannedRange&) = default;
};

struct VerificationReport {
    static constexpr std::size_t kMaxCounterexamples = 10;

    std::string id;
    std::string statement;
    nlohmann::json params = nlohmann::json::object();
    std::string status = "as-printed";
    bool conjecture = false;
    std::size_t swept = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<ScannedRange> scanned;
    nlohmann::json data = nlohmann::json::object();  ///< extra payload, e.g. leading coefficients

    bool ok() const noexcept { return failed == 0; }
    /// Failures that should turn a verification run red: not a conjecture,
    /// not a flagged typo, not a range scan.
    bool blocking_failure() const;

    void record(bool pass, Counterexample&& cx);
    /// Appends another report's tallies (used to merge per-e partial results in order).
    void merge(const VerificationReport& other);

    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json& j);
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class RangePolicy { printed_range, scan };

struct SweepOptions {
    unsigned jobs = 1;
};

/// Sweeps e_min <= e <= e_max over the record's range (or scans outward from
/// its center) comparing every side of the chain exactly.
VerificationReport check_identity(std::string_view id, unsigned e_max, RangePolicy policy,
                                  const SweepOptions& opts = {});

/// The four closed forms for partial sums of s, (-1)^n s, t, (-1)^n t over 1..2^e.
VerificationReport check_partial_sums(unsigned e_max);

/// s(n) t(n+1) - s(n+1) t(n); RangeError for n = 0.
mpz_class det_M(std::uint64_t n);
/// det_M(n) = -2 (-1)^k for 2^k <= n < 2^(k+1), all 1 <= n < limit.
VerificationReport check_det_M(std::uint64_t limit, const SweepOptions& opts = {});

/// 2x2 matrices with rows (x(n), x(n+1)) and (y(2^e+n), y(2^e+n+1)).
struct MatrixFamily {
    std::string id;
    std::function<std::array<mpz_class, 4>(unsigned e, std::uint64_t n)> entries;
    /// Expected determinant, or nullopt where the printed ranges say nothing.
    std::function<std::optional<int>(unsigned e, std::uint64_t n)> expected;
    /// Sweep 0 <= n < sweep_end(e).
    std::function<std::uint64_t(unsigned e)> sweep_end;
};

const std::vector<MatrixFamily>& matrix_families();
VerificationReport check_det_families(unsigned e_max, const SweepOptions& opts = {});

/// s(n) | s(n-1)+s(n+1) with quotient 1+2 v2(n), and the three-case law for t,
/// for 1 <= n < limit. Requires limit >= 4.
VerificationReport check_divisibility(std::uint64_t limit);

/// (-1)^e t(3*2^e+n) = (-1)^e t(6*2^e-n) >= 0 on 0 <= n <= 3*2^e, central term 2.
VerificationReport check_palindrome(unsigned e_max);

/// u = sum t(3+n) z^n / sum s(n) z^n and the identities
/// sum t(3*2^e+n) z^n = (-1)^e u(z^(2^e)) sum s(m) z^m for e <= max_e.
VerificationReport check_conjecture_gen(unsigned max_e, std::size_t order);
/// The series A and B with their two families of identities for e <= max_e.
VerificationReport check_conjecture_ab(unsigned max_e, std::size_t order);

/// u = sum t(3+n) z^n / S(z), A = sum (s(2+n)-s(1+n)) z^n / S(z) and
/// B = -sum (t(2+n)+t(1+n)) z^n / S(z), where S = sum s(n+1) z^n; all to order N.
IntSeries u_series(std::size_t order);
IntSeries a_series(std::size_t order);
IntSeries b_series(std::size_t order);

/// Leading coefficients as published alongside the conjectures.
const std::vector<long>& published_u_prefix();
const std::vector<long>& published_a_prefix();
const std::vector<long>& published_b_prefix();

struct SuiteOptions {
    unsigned max_e = 10;
    std::optional<std::uint64_t> max_n;  ///< defaults to 2^(max_e + 4)
    unsigned jobs = 1;
};

/// all | identities | matrices | divisibility | mod2 | palindrome.
std::vector<VerificationReport> run_suite(std::string_view suite, const SuiteOptions& opts);

/// Human-readable table, one row per report.
std::string render_table(const std::vector<VerificationReport>& reports);

}  // namespace sternkit
