#include "sternkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "sternkit/error.hpp"
#include "sternkit/sequences.hpp"
#include "sternkit/series.hpp"

namespace sternkit {

namespace {

using namespace expr;

IdentityRecord make(std::string id, std::vector<Expr> sides, unsigned e_min, Expr lo, Expr hi,
                    std::string printed, std::string anchor, IdentityStatus status = IdentityStatus::as_printed) {
    return IdentityRecord{std::move(id), std::move(sides), e_min,           std::move(lo),
                          std::move(hi), std::move(printed), std::move(anchor), status};
}

std::vector<IdentityRecord> build_registry() {
    const Expr p = pow2(e);
    std::vector<IdentityRecord> r;
    r.push_back(make("STID-S", {s(p + n), s(p - n) + s(n)}, 0, 0, p, "e >= 0, 0 <= n <= 2^e",
                     R"(s(2^e+n)&=&s(2^e-n)+s(n))"));
    r.push_back(make("STID-T", {t(p + n), sign(e) * (s(p - n) - s(n))}, 0, 0, p, "e >= 0, 0 <= n <= 2^e",
                     R"(t(2^e+n)&=&(-1)^e\left(s(2^e-n)-s(n)\right))"));
    r.push_back(make("STID-T3", {t(3 * p + n), t(6 * p - n), sign(e) * s(n)}, 0, 0, pow2(e + 1),
                     "e >= 0, 0 <= n <= 2^(e+1)", R"(t(3\cdot 2^e+n)=t(6\cdot 2^e-n)=(-1)^e s(n))"));
    r.push_back(make("MF1", {s(pow2(e + 1) + n), s(p + n) + s(n)}, 0, 0, p, "0 <= n <= 2^e",
                     R"(s(2^{e+1}+n)=s(2^e+n)+s(n))"));
    r.push_back(make("MF2", {t(pow2(e + 1) + n) + t(p + n), sign(e + 1) * s(n)}, 0, 0, p, "0 <= n <= 2^e",
                     R"(t(2^{e+1}+n)+t(2^e+n)=(-1)^{e+1}s(n))"));
    r.push_back(make("REC-S", {s(n), -s(n - p) + s(n - 2 * p) + 2 * s(n - 3 * p)}, 0, pow2(e + 2),
                     pow2(e + 3) - p, "e >= 0, 2^(e+2) <= n <= 2^(e+3) - 2^e",
                     R"(s(n)=-s(n-2^e)+s(n-2\cdot 2^e)+2s(n-3\cdot 2^e))"));
    r.push_back(make("REC-T", {t(n), t(n - p) - t(n - pow2(e + 1))}, 0, pow2(e + 2), pow2(e + 3),
                     "2^(e+2) <= n <= 2^(e+3)", R"(t(n)=t(n-2^e)-t(n-2^{e+1}))"));
    // Printed range "0 <= e <= 2^n" does not bound n; swept as 0 <= n <= 2^e.
    r.push_back(make("ID3", {s(3 * p + n), s(3 * p - n)}, 0, 0, p, "0 <= e <= 2^n",
                     R"(s(3\cdot 2^e+n)=s(3\cdot 2^e-n))", IdentityStatus::suspected_typo));
    r.push_back(make("ID4", {s(3 * p + n), s(3 * pow2(e - 1) + n) + 2 * s(n)}, 1, 0, pow2(e - 1),
                     "0 <= n <= 2^(e-1)", R"(s(3\cdot 2^e+n)=s(3\cdot 2^{e-1}+n)+2s(n))"));
    r.push_back(make("ID5", {t(p + n), t(p + n - pow2(e - 2)) - t(p + n - pow2(e - 1))}, 2, 1, p,
                     "e >= 2, 1 <= n <= 2^e", R"(t(2^e+n)=t(2^e+n-2^{e-2})-t(2^e+n-2^{e-1}))"));
    r.push_back(make("ID6", {s(p + n), sign(e) * t(p + n) + 2 * s(n)}, 0, 0, pow2(e + 1), "0 <= n <= 2^(e+1)",
                     R"(s(2^e+n)=(-1)^et(2^e+n)+2s(n))"));
    r.push_back(make("ID7", {s(p + n), sign(e) * t(p - n) - 3 * s(n)}, 0, 0, pow2(e - 1), "0 <= n <= 2^(e-1)",
                     R"(s(2^e+n)=(-1)^et(2^e-n)-3s(n))", IdentityStatus::suspected_typo));
    r.push_back(make("ID7c", {s(p + n), sign(e) * t(p - n) + 3 * s(n)}, 0, 0, pow2(e - 1), "0 <= n <= 2^(e-1)",
                     R"(s(2^e+n)=(-1)^et(2^e-n)-3s(n))", IdentityStatus::corrected));
    r.push_back(make("ID8", {s(p - n), sign(e) * t(p - n) + 2 * s(n)}, 0, 0, pow2(e - 1), "0 <= n <= 2^(e-1)",
                     R"(s(2^e-n)=(-1)^et(2^e-n)+2s(n))"));
    r.push_back(make("ID9", {s(p - n), sign(e) * t(p + n) + s(n)}, 0, 0, p, "0 <= n <= 2^e",
                     R"(s(2^e-n)=(-1)^et(2^e+n)+s(n))"));
    // Divisibility and parity laws swept over dyadic blocks 2^e <= n < 2^(e+1).
    r.push_back(make("DIV-S", {s(n - 1) + s(n + 1), (1 + 2 * v2(n)) * s(n)}, 0, p, pow2(e + 1) - 1, "n >= 1",
                     R"(\frac{s(n-1)+s(n+1)}{s(n)}=1+2v_2(n))"));
    r.push_back(make("DIV-T",
                     {t(n - 1) + t(n + 1), (1 + 2 * v2(n) - 4 * is_pow2(n) + 2 * equal(n, 1)) * t(n)}, 0, p,
                     pow2(e + 1) - 1, "n >= 1", R"(\frac{t(2^e-1)+t(2^e+1)}{t(2^e)}=1+2(e-2))"));
    r.push_back(make("MOD2", {mod(s(n), 2), mod(t(n), 2), 1 - equal(mod(n, 3), 0)}, 0, p, pow2(e + 1) - 1,
                     "n >= 0", R"(s(n)\pmod 2)"));
    return r;
}

template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F&& f) {
    using Result = decltype(f(std::size_t{0}));
    std::vector<Result> results(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = f(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    const unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned w = 0; w < n_workers; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) results[i] = f(i);
        });
    }
    workers.clear();
    return results;
}

std::string show(const mpz_class& x) { return x.get_str(); }

struct ChainResult {
    bool pass;
    Counterexample cx;
};

ChainResult evaluate_chain(const IdentityRecord& rec, long e, const mpz_class& n) {
    ChainResult out{true, {e, n, "", "", ""}};
    std::vector<mpz_class> values;
    for (std::size_t i = 0; i < rec.sides.size(); ++i) {
        try {
            values.push_back(rec.sides[i].evaluate(e, n));
        } catch (const DomainError& err) {
            out.pass = false;
            out.cx.lhs = values.empty() ? "undefined" : show(values.front());
            out.cx.rhs = "undefined";
            out.cx.note = err.what();
            return out;
        }
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] != values[0]) {
            out.pass = false;
            out.cx.lhs = show(values[0]);
            out.cx.rhs = show(values[i]);
            if (values.size() > 2) out.cx.note = "side " + std::to_string(i);
            return out;
        }
    }
    out.cx.lhs = out.cx.rhs = show(values[0]);
    return out;
}

VerificationReport base_report(const IdentityRecord& rec) {
    VerificationReport r;
    r.id = rec.id;
    r.statement = rec.statement();
    r.status = std::string(to_string(rec.status));
    return r;
}

VerificationReport sweep_printed(const IdentityRecord& rec, long e) {
    VerificationReport part;
    const mpz_class lo = rec.n_lo.evaluate(e, 0, true);
    const mpz_class hi = rec.n_hi.evaluate(e, 0, true);
    for (mpz_class n = std::max(lo, mpz_class(0)); n <= hi; ++n) {
        auto res = evaluate_chain(rec, e, n);
        part.record(res.pass, std::move(res.cx));
    }
    return part;
}

VerificationReport scan_one(const IdentityRecord& rec, long e) {
    VerificationReport part;
    ScannedRange range;
    range.e = e;
    range.printed_lo = rec.n_lo.evaluate(e, 0, true);
    range.printed_hi = rec.n_hi.evaluate(e, 0, true);
    mpz_class lo = std::max(range.printed_lo, mpz_class(0));
    mpz_class hi = std::max(range.printed_hi, lo);
    const mpz_class center = (lo + hi) / 2;
    const mpz_class cap = std::max(mpz_class(2 * hi), mpz_class(hi + 64));

    auto probe = [&](const mpz_class& n) {
        auto res = evaluate_chain(rec, e, n);
        const bool pass = res.pass;
        part.record(pass, std::move(res.cx));
        return pass;
    };

    if (!probe(center)) {
        range.empty = true;
        part.scanned.push_back(range);
        return part;
    }
    range.lo = center;
    while (range.lo > 0 && probe(range.lo - 1)) --range.lo;
    range.hi = center;
    while (true) {
        if (range.hi >= cap) {
            range.capped = true;
            break;
        }
        if (!probe(range.hi + 1)) break;
        ++range.hi;
    }
    part.scanned.push_back(range);
    return part;
}

const mpz_class& sgn_pow(unsigned e) {
    static const mpz_class plus = 1, minus = -1;
    return e % 2 == 0 ? plus : minus;
}

mpz_class pow_ui(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

}  // namespace

std::string IdentityRecord::statement() const {
    std::string out;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        if (i) out += " = ";
        out += sides[i].to_string();
    }
    return out;
}

const std::vector<IdentityRecord>& identity_registry() {
    static const std::vector<IdentityRecord> registry = build_registry();
    return registry;
}

const IdentityRecord& find_identity(std::string_view id) {
    for (const auto& rec : identity_registry()) {
        if (rec.id == id) return rec;
    }
    throw LookupError("unknown identity id '" + std::string(id) + "'");
}

VerificationReport check_identity(std::string_view id, unsigned e_max, RangePolicy policy,
                                  const SweepOptions& opts) {
    const IdentityRecord& rec = find_identity(id);
    VerificationReport report = base_report(rec);
    report.params = {{"e_min", rec.e_min},
                     {"e_max", e_max},
                     {"policy", policy == RangePolicy::scan ? "scan" : "printed-range"},
                     {"printed_range", rec.printed_range},
                     {"anchor", rec.anchor}};
    if (e_max < rec.e_min) return report;
    const std::size_t count = e_max - rec.e_min + 1;
    auto parts = parallel_map(count, opts.jobs, [&](std::size_t i) {
        const long e = static_cast<long>(rec.e_min + i);
        return policy == RangePolicy::scan ? scan_one(rec, e) : sweep_printed(rec, e);
    });
    for (const auto& part : parts) report.merge(part);
    return report;
}

VerificationReport check_partial_sums(unsigned e_max) {
    VerificationReport report;
    report.id = "PSUM";
    report.statement = "sums over 1 <= n <= 2^e of s(n), (-1)^n s(n), t(n), (-1)^n t(n)";
    report.params = {{"e_max", e_max}};
    mpz_class sum_s = 0, alt_s = 0, sum_t = 0, alt_t = 0;
    std::uint64_t n = 0;
    for (unsigned e = 0; e <= e_max; ++e) {
        const std::uint64_t end = std::uint64_t{1} << e;
        for (++n; n <= end; ++n) {
            const mpz_class sn = stern(n), tn = twisted(n);
            sum_s += sn;
            sum_t += tn;
            if (n % 2 == 0) {
                alt_s += sn;
                alt_t += tn;
            } else {
                alt_s -= sn;
                alt_t -= tn;
            }
        }
        n = end;
        const mpz_class& sg = sgn_pow(e);
        const mpz_class closed_s = (pow_ui(3, e) + 1) / 2;
        const mpz_class closed_t = (sg + 1) / 2;
        const mpz_class closed_alt_t = (sg - 3) / 2;
        auto check = [&](const mpz_class& lhs, const mpz_class& rhs, const char* form) {
            report.record(lhs == rhs, Counterexample{static_cast<long>(e), mpz_class(end), show(lhs), show(rhs), form});
        };
        check(sum_s, closed_s, "sum s(n) = (3^e+1)/2");
        if (e >= 1) check(alt_s, (1 - pow_ui(3, e - 1)) / 2, "sum (-1)^n s(n) = (1-3^(e-1))/2");
        check(sum_t, closed_t, "sum t(n) = ((-1)^e+1)/2");
        check(alt_t, closed_alt_t, "sum (-1)^n t(n) = (-3+(-1)^e)/2");
    }
    return report;
}

mpz_class det_M(std::uint64_t n) {
    if (n == 0) throw RangeError("det M(n) is defined for n >= 1");
    return stern(n) * twisted(n + 1) - stern(n + 1) * twisted(n);
}

VerificationReport check_det_M(std::uint64_t limit, const SweepOptions& opts) {
    VerificationReport report;
    report.id = "DET-M";
    report.statement = "det [[s(n), s(n+1)], [t(n), t(n+1)]] = -2(-1)^k for 2^k <= n < 2^(k+1)";
    report.params = {{"limit", limit}};
    if (limit <= 1) return report;
    const unsigned blocks = static_cast<unsigned>(std::bit_width(limit - 1));
    auto parts = parallel_map(blocks, opts.jobs, [&](std::size_t k) {
        VerificationReport part;
        const std::uint64_t begin = std::uint64_t{1} << k;
        const std::uint64_t end = std::min<std::uint64_t>(begin * 2, limit);
        const mpz_class expected = k % 2 == 0 ? -2 : 2;
        for (std::uint64_t n = begin; n < end; ++n) {
            const mpz_class d = det_M(n);
            part.record(d == expected, Counterexample{static_cast<long>(k), mpz_class(static_cast<unsigned long>(n)),
                                                      show(d), show(expected), ""});
        }
        return part;
    });
    for (const auto& p : parts) report.merge(p);
    return report;
}

const std::vector<MatrixFamily>& matrix_families() {
    static const std::vector<MatrixFamily> families = [] {
        auto rows = [](auto top, auto bottom) {
            return [=](unsigned e, std::uint64_t n) {
                const std::uint64_t shift = std::uint64_t{1} << e;
                return std::array<mpz_class, 4>{top(n), top(n + 1), bottom(shift + n), bottom(shift + n + 1)};
            };
        };
        std::vector<MatrixFamily> f;
        // 0 <= n < 2^e: -1; 2^e <= n < 2^(e+1): 1
        f.push_back({"SS", rows(stern, stern),
                     [](unsigned e, std::uint64_t n) -> std::optional<int> {
                         const std::uint64_t p = std::uint64_t{1} << e;
                         if (n < p) return -1;
                         if (n < 2 * p) return 1;
                         return std::nullopt;
                     },
                     [](unsigned e) { return std::uint64_t{1} << (e + 3); }});
        // 0 <= n < 2^e: (-1)^(e+1); 2^e <= n < 2^(e+2): (-1)^e
        f.push_back({"ST", rows(stern, twisted),
                     [](unsigned e, std::uint64_t n) -> std::optional<int> {
                         const std::uint64_t p = std::uint64_t{1} << e;
                         const int sg = e % 2 == 0 ? 1 : -1;
                         if (n < p) return -sg;
                         if (n < 4 * p) return sg;
                         return std::nullopt;
                     },
                     [](unsigned e) { return std::uint64_t{1} << (e + 3); }});
        // 2^(e+1) < n < 5*2^e: (-1)^(e+1)
        f.push_back({"TS", rows(twisted, stern),
                     [](unsigned e, std::uint64_t n) -> std::optional<int> {
                         const std::uint64_t p = std::uint64_t{1} << e;
                         if (n > 2 * p && n < 5 * p) return e % 2 == 0 ? -1 : 1;
                         return std::nullopt;
                     },
                     [](unsigned e) { return std::uint64_t{1} << (e + 3); }});
        // 2^(e-2) <= n < 2^e or 7*2^e <= n < 2^(e+3): 1; 2^e <= n < 7*2^e: -1
        f.push_back({"TT", rows(twisted, twisted),
                     [](unsigned e, std::uint64_t n) -> std::optional<int> {
                         const std::uint64_t p = std::uint64_t{1} << e;
                         if (4 * n >= p && n < p) return 1;
                         if (n >= p && n < 7 * p) return -1;
                         if (n >= 7 * p && n < 8 * p) return 1;
                         return std::nullopt;
                     },
                     [](unsigned e) { return std::uint64_t{1} << (e + 3); }});
        return f;
    }();
    return families;
}

VerificationReport check_det_families(unsigned e_max, const SweepOptions& opts) {
    VerificationReport report;
    report.id = "DET-FAMILIES";
    report.statement = "determinants of [[x(n), x(n+1)], [y(2^e+n), y(2^e+n+1)]] for x, y in {s, t}";
    report.params = {{"e_max", e_max}};
    const auto& families = matrix_families();
    auto parts = parallel_map((e_max + 1) * families.size(), opts.jobs, [&](std::size_t idx) {
        const auto& fam = families[idx % families.size()];
        const unsigned e = static_cast<unsigned>(idx / families.size());
        VerificationReport part;
        for (std::uint64_t n = 0; n < fam.sweep_end(e); ++n) {
            const auto expected = fam.expected(e, n);
            if (!expected) continue;
            const auto m = fam.entries(e, n);
            const mpz_class d = m[0] * m[3] - m[1] * m[2];
            part.record(d == *expected, Counterexample{static_cast<long>(e), mpz_class(static_cast<unsigned long>(n)),
                                                       show(d), std::to_string(*expected), fam.id});
        }
        return part;
    });
    for (const auto& p : parts) report.merge(p);
    return report;
}

VerificationReport check_divisibility(std::uint64_t limit) {
    if (limit < 4) throw PreconditionError("divisibility sweep needs limit >= 4");
    VerificationReport report;
    report.id = "DIV";
    report.statement = "s(n) | s(n-1)+s(n+1) with quotient 1+2v2(n); three-case law for t";
    report.params = {{"limit", limit}};
    for (std::uint64_t n = 1; n < limit; ++n) {
        const mpz_class nz(static_cast<unsigned long>(n));
        const mpz_class s_sum = stern(n - 1) + stern(n + 1);
        const mpz_class s_expected = (1 + 2 * v2(n)) * stern(n);
        report.record(s_sum == s_expected, Counterexample{0, nz, show(s_sum), show(s_expected), "s"});

        const mpz_class tn = twisted(n);
        const mpz_class t_sum = twisted(n - 1) + twisted(n + 1);
        if (is_three_times_power_of_two(n)) {
            report.record(tn == 0 && t_sum == 0,
                          Counterexample{0, nz, show(t_sum), show(tn), "t: both zero expected"});
            continue;
        }
        long q;
        if (n == 1) {
            q = -1;
        } else if (is_power_of_two(n)) {
            q = 1 + 2 * (static_cast<long>(v2(n)) - 2);
        } else {
            q = 1 + 2 * static_cast<long>(v2(n));
        }
        const mpz_class t_expected = q * tn;
        const bool ok = tn != 0 && t_sum != 0 && t_sum == t_expected;
        report.record(ok, Counterexample{0, nz, show(t_sum), show(t_expected), "t: quotient " + std::to_string(q)});
    }
    return report;
}

VerificationReport check_palindrome(unsigned e_max) {
    VerificationReport report;
    report.id = "PALINDROME";
    report.statement = "(-1)^e t(3*2^e+n) = (-1)^e t(6*2^e-n) >= 0 for 0 <= n <= 3*2^e; central value 2";
    report.params = {{"e_max", e_max}};
    for (unsigned e = 0; e <= e_max; ++e) {
        const std::uint64_t base = std::uint64_t{3} << e;
        const mpz_class& sg = sgn_pow(e);
        for (std::uint64_t n = 0; n <= base; ++n) {
            const mpz_class a = sg * twisted(base + n);
            const mpz_class b = sg * twisted(2 * base - n);
            report.record(a == b && sgn(a) >= 0, Counterexample{static_cast<long>(e),
                                                                mpz_class(static_cast<unsigned long>(n)), show(a),
                                                                show(b), "palindrome"});
        }
        if (e >= 1) {
            const mpz_class mid = sg * twisted(base + base / 2);
            report.record(mid == 2, Counterexample{static_cast<long>(e), mpz_class(static_cast<unsigned long>(base / 2)),
                                                   show(mid), "2", "central element"});
        }
    }
    return report;
}

const std::vector<long>& published_u_prefix() {
    static const std::vector<long> v{1, 0, -2, 0, 0, -2, 4, 2, -6, 4, 2, -6, 8};
    return v;
}

const std::vector<long>& published_a_prefix() {
    static const std::vector<long> v{1, -2, 2, 0, -4, 4, 2};
    return v;
}

const std::vector<long>& published_b_prefix() {
    static const std::vector<long> v{1, -2, -2, 4, 0, 0, 6, -6};
    return v;
}

namespace {

IntSeries sequence_series(std::size_t order, const std::function<mpz_class(std::uint64_t)>& f) {
    std::vector<mpz_class> cs(order + 1);
    for (std::size_t i = 0; i <= order; ++i) cs[i] = f(i);
    return IntSeries(std::move(cs), order);
}

// Integral quotient num/den computed over Q; records failure if not integral
// or if it differs from the integer-ring quotient.
IntSeries integral_quotient(const IntSeries& num, const IntSeries& den, VerificationReport& report,
                            const std::string& name) {
    const IntSeries over_z = div_exact(num, den);
    const RatSeries over_q = div_exact(to_rational(num), to_rational(den));
    bool integral = true;
    try {
        integral = to_integer(over_q).identical(over_z);
    } catch (const DivisionError&) {
        integral = false;
    }
    report.record(integral, Counterexample{0, 0, name, "", name + " integral"});
    return over_z;
}

void compare_prefix(const IntSeries& series, const std::vector<long>& published, VerificationReport& report,
                    const std::string& name) {
    for (std::size_t i = 0; i < published.size() && i <= series.order(); ++i) {
        report.record(series[i] == published[i],
                      Counterexample{-1, mpz_class(static_cast<unsigned long>(i)), show(series[i]),
                                     std::to_string(published[i]), name + " leading coefficient"});
    }
}

void compare_series(const IntSeries& lhs, const IntSeries& rhs, long e, VerificationReport& report,
                    const std::string& name) {
    const std::size_t n = std::min(lhs.order(), rhs.order());
    for (std::size_t i = 0; i <= n; ++i) {
        report.record(lhs[i] == rhs[i], Counterexample{e, mpz_class(static_cast<unsigned long>(i)), show(lhs[i]),
                                                       show(rhs[i]), name});
    }
}

IntSeries u_numerator(std::size_t order) {
    return sequence_series(order, [](std::uint64_t n) { return twisted(3 + n); });
}

IntSeries a_numerator(std::size_t order) {
    return sequence_series(order, [](std::uint64_t n) { return mpz_class(stern(2 + n) - stern(1 + n)); });
}

IntSeries b_numerator(std::size_t order) {
    return sequence_series(order, [](std::uint64_t n) { return mpz_class(twisted(2 + n) + twisted(1 + n)); });
}

nlohmann::json leading(const IntSeries& s, std::size_t count) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < count && i <= s.order(); ++i) arr.push_back(s[i].get_str());
    return arr;
}

}  // namespace

IntSeries u_series(std::size_t order) { return div_exact(u_numerator(order + 1), stern_series(order + 1)); }

IntSeries a_series(std::size_t order) { return div_exact(a_numerator(order + 1), stern_series(order + 1)); }

IntSeries b_series(std::size_t order) { return -div_exact(b_numerator(order + 1), stern_series(order + 1)); }

VerificationReport check_conjecture_gen(unsigned max_e, std::size_t order) {
    const std::size_t need = std::size_t{3} << max_e;
    if (order < need) throw PreconditionError("order must be at least 3*2^max_e = " + std::to_string(need));
    VerificationReport report;
    report.id = "CONJ-GEN";
    report.statement = "sum t(3*2^e+n) z^n = (-1)^e u(z^(2^e)) sum s(m) z^m";
    report.status = "conjecture";
    report.conjecture = true;
    report.params = {{"max_e", max_e}, {"order", order}};

    const IntSeries stern_z = stern_series(order + 1);
    const IntSeries u = integral_quotient(u_numerator(order + 1), stern_z, report, "u");
    compare_prefix(u, published_u_prefix(), report, "u");
    report.data["u"] = leading(u, 32);

    for (unsigned e = 0; e <= max_e; ++e) {
        const std::uint64_t base = std::uint64_t{3} << e;
        const std::size_t m = order - base;
        const IntSeries lhs = sequence_series(m, [&](std::uint64_t n) { return twisted(base + n); });
        IntSeries rhs = substitute_power(u, std::size_t{1} << e, m) * stern_z.truncate(m);
        if (e % 2 == 1) rhs = -rhs;
        compare_series(lhs, rhs, e, report, "e=" + std::to_string(e));
    }
    return report;
}

VerificationReport check_conjecture_ab(unsigned max_e, std::size_t order) {
    const std::size_t need = std::size_t{2} << max_e;
    if (order < need) throw PreconditionError("order must be at least 2^(max_e+1) = " + std::to_string(need));
    VerificationReport report;
    report.id = "CONJ-AB";
    report.statement =
        "sum (s(2^(e+1)+n) - s(2^e+n)) z^n = A(z^(2^e)) S(z); "
        "(-1)^(e+1) sum (t(2^(e+1)+n) + t(2^e+n)) z^n = B(z^(2^e)) S(z)";
    report.status = "conjecture";
    report.conjecture = true;
    report.params = {{"max_e", max_e}, {"order", order}};

    const IntSeries stern_z = stern_series(order + 1);
    const IntSeries a = integral_quotient(a_numerator(order + 1), stern_z, report, "A");
    const IntSeries b = -integral_quotient(b_numerator(order + 1), stern_z, report, "B");
    compare_prefix(a, published_a_prefix(), report, "A");
    compare_prefix(b, published_b_prefix(), report, "B");
    report.data["A"] = leading(a, 32);
    report.data["B"] = leading(b, 32);

    for (unsigned e = 0; e <= max_e; ++e) {
        const std::uint64_t p = std::uint64_t{1} << e;
        const std::size_t m = order - 2 * p;
        const IntSeries s_m = stern_z.truncate(m);
        const IntSeries lhs_a =
            sequence_series(m, [&](std::uint64_t n) { return mpz_class(stern(2 * p + n) - stern(p + n)); });
        compare_series(lhs_a, substitute_power(a, p, m) * s_m, e, report, "A e=" + std::to_string(e));
        IntSeries lhs_b =
            sequence_series(m, [&](std::uint64_t n) { return mpz_class(twisted(2 * p + n) + twisted(p + n)); });
        if (e % 2 == 0) lhs_b = -lhs_b;
        compare_series(lhs_b, substitute_power(b, p, m) * s_m, e, report, "B e=" + std::to_string(e));
    }
    return report;
}

std::vector<VerificationReport> run_suite(std::string_view suite, const SuiteOptions& opts) {
    const std::uint64_t max_n = opts.max_n.value_or(std::uint64_t{1} << (opts.max_e + 4));
    const SweepOptions sweep{opts.jobs};
    std::vector<VerificationReport> out;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "identities") {
        known = true;
        for (const auto& rec : identity_registry()) {
            out.push_back(check_identity(rec.id, opts.max_e, RangePolicy::printed_range, sweep));
        }
    }
    if (all || suite == "matrices") {
        known = true;
        out.push_back(check_det_M(max_n, sweep));
        out.push_back(check_det_families(opts.max_e, sweep));
    }
    if (all || suite == "divisibility") {
        known = true;
        out.push_back(check_divisibility(std::max<std::uint64_t>(max_n, 4)));
    }
    if (suite == "mod2") {
        known = true;
        const unsigned e_top = max_n > 1 ? static_cast<unsigned>(std::bit_width(max_n - 1)) - 1 : 0;
        out.push_back(check_identity("MOD2", e_top, RangePolicy::printed_range, sweep));
    }
    if (all || suite == "palindrome") {
        known = true;
        out.push_back(check_palindrome(opts.max_e));
    }
    if (all) out.push_back(check_partial_sums(opts.max_e));
    if (!known) throw LookupError("unknown suite '" + std::string(suite) + "'");
    return out;
}

}  // namespace sternkit
