#include <iomanip>
#include <sstream>

#include "sternkit/error.hpp"
#include "sternkit/verify.hpp"

namespace sternkit {

std::string_view to_string(IdentityStatus status) {
    switch (status) {
        case IdentityStatus::as_printed: return "as-printed";
        case IdentityStatus::suspected_typo: return "suspected-typo";
        case IdentityStatus::corrected: return "corrected";
    }
    return "as-printed";
}

IdentityStatus identity_status_from_string(std::string_view text) {
    if (text == "as-printed") return IdentityStatus::as_printed;
    if (text == "suspected-typo") return IdentityStatus::suspected_typo;
    if (text == "corrected") return IdentityStatus::corrected;
    throw FormatError("unknown identity status '" + std::string(text) + "'");
}

bool VerificationReport::blocking_failure() const {
    if (failed == 0 || conjecture) return false;
    if (status == "suspected-typo") return false;
    return params.value("policy", std::string()) != "scan";
}

void VerificationReport::record(bool pass, Counterexample&& cx) {
    ++swept;
    if (pass) {
        ++passed;
        return;
    }
    ++failed;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(cx));
}

void VerificationReport::merge(const VerificationReport& other) {
    swept += other.swept;
    passed += other.passed;
    failed += other.failed;
    for (const auto& cx : other.counterexamples) {
        if (counterexamples.size() >= kMaxCounterexamples) break;
        counterexamples.push_back(cx);
    }
    scanned.insert(scanned.end(), other.scanned.begin(), other.scanned.end());
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json cxs = nlohmann::json::array();
    for (const auto& cx : counterexamples) {
        cxs.push_back({{"e", cx.e}, {"n", cx.n.get_str()}, {"lhs", cx.lhs}, {"rhs", cx.rhs}, {"note", cx.note}});
    }
    nlohmann::json ranges = nlohmann::json::array();
    for (const auto& r : scanned) {
        nlohmann::json entry = {{"e", r.e},
                                {"printed_lo", r.printed_lo.get_str()},
                                {"printed_hi", r.printed_hi.get_str()},
                                {"empty", r.empty}};
        if (!r.empty) {
            entry["lo"] = r.lo.get_str();
            entry["hi"] = r.hi.get_str();
            entry["capped"] = r.capped;
        }
        ranges.push_back(std::move(entry));
    }
    return {{"id", id},
            {"statement", statement},
            {"params", params},
            {"status", status},
            {"conjecture", conjecture},
            {"swept", std::to_string(swept)},
            {"passed", std::to_string(passed)},
            {"failed", std::to_string(failed)},
            {"counterexamples", std::move(cxs)},
            {"scanned_range", std::move(ranges)},
            {"data", data}};
}

namespace {

std::size_t count_field(const nlohmann::json& j, const char* key) {
    const std::string text = j.at(key).get<std::string>();
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw FormatError(std::string("bad count in field '") + key + "'");
    return static_cast<std::size_t>(v);
}

mpz_class big(const nlohmann::json& j, const char* key) {
    mpz_class v;
    if (v.set_str(j.at(key).get<std::string>(), 10) != 0) {
        throw FormatError(std::string("bad integer in field '") + key + "'");
    }
    return v;
}

}  // namespace

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
    try {
        VerificationReport r;
        r.id = j.at("id").get<std::string>();
        r.statement = j.at("statement").get<std::string>();
        r.params = j.at("params");
        r.status = j.at("status").get<std::string>();
        r.conjecture = j.at("conjecture").get<bool>();
        r.swept = count_field(j, "swept");
        r.passed = count_field(j, "passed");
        r.failed = count_field(j, "failed");
        if (r.passed + r.failed != r.swept) throw FormatError("passed + failed must equal swept");
        for (const auto& c : j.at("counterexamples")) {
            r.counterexamples.push_back(Counterexample{c.at("e").get<long>(), big(c, "n"), c.at("lhs").get<std::string>(),
                                                       c.at("rhs").get<std::string>(), c.at("note").get<std::string>()});
        }
        for (const auto& s : j.at("scanned_range")) {
            ScannedRange range;
            range.e = s.at("e").get<long>();
            range.printed_lo = big(s, "printed_lo");
            range.printed_hi = big(s, "printed_hi");
            range.empty = s.at("empty").get<bool>();
            if (!range.empty) {
                range.lo = big(s, "lo");
                range.hi = big(s, "hi");
                range.capped = s.at("capped").get<bool>();
            }
            r.scanned.push_back(std::move(range));
        }
        r.data = j.at("data");
        return r;
    } catch (const nlohmann::json::exception& err) {
        throw FormatError(std::string("malformed verification report: ") + err.what());
    }
}

std::string render_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << std::left << std::setw(14) << "id" << std::setw(16) << "status" << std::right << std::setw(10) << "swept"
        << std::setw(10) << "passed" << std::setw(8) << "failed" << "  result\n";
    for (const auto& r : reports) {
        std::string result = r.ok() ? "ok" : (r.blocking_failure() ? "FAIL" : "fail (non-blocking)");
        if (!r.counterexamples.empty()) {
            const auto& cx = r.counterexamples.front();
            result += "  first: e=" + std::to_string(cx.e) + " n=" + cx.n.get_str() + " " + cx.lhs + " != " + cx.rhs;
        }
        for (const auto& range : r.scanned) {
            result += "  [e=" + std::to_string(range.e) + ": ";
            result += range.empty ? std::string("empty") : range.lo.get_str() + ".." + range.hi.get_str() + (range.capped ? "+" : "");
            result += "]";
        }
        out << std::left << std::setw(14) << r.id << std::setw(16) << (r.conjecture ? "conjecture" : r.status)
            << std::right << std::setw(10) << r.swept << std::setw(10) << r.passed << std::setw(8) << r.failed << "  "
            << result << '\n';
    }
    return out.str();
}

}  // namespace sternkit
