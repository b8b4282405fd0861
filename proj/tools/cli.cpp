#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bfile.hpp"
#include "sternkit/error.hpp"
#include "sternkit/ratwords.hpp"
#include "sternkit/regularity.hpp"
#include "sternkit/sequences.hpp"
#include "sternkit/series.hpp"
#include "sternkit/verify.hpp"

namespace sternkit::cli {

namespace {

constexpr std::size_t kDefaultOrder = 1024;
constexpr unsigned kDefaultMaxE = 10;
constexpr std::uint64_t kMaxSeqSpan = std::uint64_t{1} << 22;

class UsageError : public Error {
public:
    using Error::Error;
};

template <class T>
T env_or(const char* name, T fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    const std::string text(raw);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.front() == '-') {
        throw UsageError(std::string(name) + " must be a non-negative integer, got '" + text + "'");
    }
    return static_cast<T>(v);
}

std::size_t default_order() { return env_or<std::size_t>("STERNKIT_ORDER", kDefaultOrder); }
unsigned default_max_e() { return env_or<unsigned>("STERNKIT_MAX_E", kDefaultMaxE); }

void emit_series(std::ostream& out, const std::string& name, const IntSeries& s, const std::string& format) {
    if (format == "json") {
        out << nlohmann::json{{"name", name}, {"order", s.order()}, {"coefficients", to_json(s)}}.dump() << '\n';
    } else {
        out << to_text(s) << '\n';
    }
}

void emit_reports(std::ostream& out, const std::vector<VerificationReport>& reports, const std::string& format) {
    if (format == "json") {
        for (const auto& r : reports) out << r.to_json().dump() << '\n';
    } else {
        out << render_table(reports);
    }
}

// --- seq -------------------------------------------------------------------

struct SeqArgs {
    std::string kind = "s";
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::string format = "text";
};

int cmd_seq(const SeqArgs& a, std::ostream& out) {
    if (a.to < a.from) throw UsageError("--to must not be below --from");
    if (a.to - a.from >= kMaxSeqSpan) throw UsageError("requested range is too long");
    std::vector<std::string> values;
    for (std::uint64_t n = a.from;; ++n) {
        if (a.kind == "s") values.push_back(stern(n).get_str());
        else if (a.kind == "t") values.push_back(twisted(n).get_str());
        else if (a.kind == "S") values.push_back(weighted_stern(n).to_string('w'));
        else values.push_back(weighted_even(n).to_string('w'));
        if (n == a.to) break;
    }
    if (a.format == "json") {
        out << nlohmann::json{{"kind", a.kind}, {"from", a.from}, {"to", a.to}, {"values", values}}.dump() << '\n';
    } else if (a.format == "csv") {
        out << "n,value\n";
        for (std::size_t i = 0; i < values.size(); ++i) out << a.from + i << ',' << values[i] << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) out << a.from + i << ' ' << values[i] << '\n';
    }
    return kExitOk;
}

// --- series ----------------------------------------------------------------

struct SeriesArgs {
    std::string name;
    std::optional<std::size_t> order;
    std::optional<unsigned> e;
    std::string format = "text";
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
    if (a.name == "psi") {
        if (!a.e) throw UsageError("--e is required for psi");
        const Polynomial p = psi(*a.e);
        if (a.format == "json") {
            nlohmann::json cs = nlohmann::json::array();
            for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(p.degree(), 0L)); ++i) {
                cs.push_back(p.coeff(i).get_str());
            }
            out << nlohmann::json{{"name", "psi"}, {"e", *a.e}, {"coefficients", cs}}.dump() << '\n';
        } else {
            out << p.to_string('z') << '\n';
        }
        return kExitOk;
    }
    const std::size_t order = a.order.value_or(default_order());
    static const std::map<std::string, std::function<IntSeries(std::size_t)>> builders{
        {"stern", stern_series},
        {"twisted", twisted_series},
        {"carlitz", [](std::size_t n) { return infinite_product(Polynomial{1, 1, 1}, 2, n); }},
        {"H", h_series},
        {"C", c_series},
        {"u", u_series},
        {"A", a_series},
        {"B", b_series},
        {"binpart", binary_partition_series},
    };
    emit_series(out, a.name, builders.at(a.name)(order), a.format);
    return kExitOk;
}

// --- verify / scan / conjecture --------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    std::optional<unsigned> max_e;
    std::optional<std::uint64_t> max_n;
    unsigned jobs = 1;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    SuiteOptions opts;
    opts.max_e = a.max_e.value_or(default_max_e());
    opts.max_n = a.max_n;
    opts.jobs = a.jobs;
    const auto reports = run_suite(a.suite, opts);
    emit_reports(out, reports, a.format);
    for (const auto& r : reports) {
        if (r.blocking_failure()) return kExitCounterexample;
    }
    return kExitOk;
}

struct ScanArgs {
    std::string identity;
    unsigned e = 0;
    unsigned jobs = 1;
    std::string format = "text";
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
    emit_reports(out, {check_identity(a.identity, a.e, RangePolicy::scan, SweepOptions{a.jobs})}, a.format);
    return kExitOk;
}

struct ConjectureArgs {
    std::string which;
    unsigned max_e = 6;
    std::optional<std::size_t> order;
    std::string format = "text";
};

int cmd_conjecture(const ConjectureArgs& a, std::ostream& out) {
    const std::size_t order = a.order.value_or(default_order());
    const auto report =
        a.which == "gen" ? check_conjecture_gen(a.max_e, order) : check_conjecture_ab(a.max_e, order);
    if (a.format == "json") {
        out << report.to_json().dump() << '\n';
    } else {
        out << render_table({report});
        for (const auto& [key, value] : report.data.items()) {
            out << key << ":";
            for (const auto& c : value) out << ' ' << c.get<std::string>();
            out << '\n';
        }
    }
    return kExitOk;
}

// --- kernel ----------------------------------------------------------------

struct KernelArgs {
    std::string target;
    std::size_t k = 2;
    std::size_t depth = 6;
    std::optional<std::size_t> order;
    std::string format = "text";
};

int cmd_kernel(const KernelArgs& a, std::ostream& out) {
    const std::size_t order = a.order.value_or(default_order());
    IntSeries s(0);
    if (a.target == "stern") s = stern_series(order);
    else if (a.target == "H") s = h_series(order);
    else if (a.target == "C") s = c_series(order);
    else s = binary_partition_series(order);
    const auto report = kernel_rank(a.target, s.coefficients(), a.k, a.depth, order);
    if (a.format == "json") {
        out << report.to_json().dump() << '\n';
        return kExitOk;
    }
    auto join = [](const std::vector<std::size_t>& v) {
        std::string r;
        for (std::size_t x : v) r += (r.empty() ? "" : " ") + std::to_string(x);
        return r;
    };
    out << "target " << report.target << ", k=" << report.k << ", order " << report.order << ", prefix length "
        << report.prefix_length << '\n'
        << "ranks by depth 0.." << report.depth << ": " << join(report.ranks) << '\n'
        << "at half order: " << join(report.ranks_half) << (report.stable ? " (stable)" : " (unstable)") << '\n';
    return kExitOk;
}

// --- count -----------------------------------------------------------------

struct CountArgs {
    std::string pattern;
    std::uint64_t n = 0;
    bool weighted = false;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
    if (a.pattern == "admissible") {
        if (a.weighted) {
            const auto rep = subsequence_transform(admissible_pattern(Polynomial::variable()));
            out << count_in_expansion(rep, a.n, 2).to_string('w') << '\n';
        } else {
            const auto rep = subsequence_transform(admissible_pattern(mpz_class(1)));
            out << count_in_expansion(rep, a.n, 2).get_str() << '\n';
        }
        return kExitOk;
    }
    if (a.weighted) throw UsageError("--weighted applies to the admissible pattern only");
    const std::vector<unsigned> word = a.pattern == "ones" ? std::vector<unsigned>{1} : std::vector<unsigned>{1, 1};
    const auto rep = subfactor_transform(word_indicator<mpz_class>(2, word));
    out << count_in_expansion(rep, a.n, 2).get_str() << '\n';
    return kExitOk;
}

// --- oeis-check ------------------------------------------------------------

struct OeisArgs {
    std::string id;
    std::string path;
    std::optional<std::uint64_t> max_n;
};

int cmd_oeis(const OeisArgs& a, std::ostream& out) {
    std::ifstream in(a.path, std::ios::binary);
    if (!in) throw UsageError("cannot open b-file '" + a.path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const BFile file = parse_bfile(buf.str(), a.id);

    // A000123 lists binary partitions of 2n, so entry n is coefficient 2n of
    // the binary partition series.
    const std::uint64_t stride = a.id == "A000123" ? 2 : 1;
    const std::uint64_t limit = a.max_n.value_or(a.id == "A002487" ? std::uint64_t{1} << 16 : 2048);
    std::uint64_t top = 0;
    for (const auto& [n, v] : file.entries) {
        if (n <= limit) top = n;
    }
    std::optional<IntSeries> series;
    if (a.id == "A163659") series = h_series(top);
    if (a.id == "A000123") series = binary_partition_series(stride * top);

    std::size_t compared = 0, mismatched = 0;
    std::string first;
    for (const auto& [n, v] : file.entries) {
        if (n > limit) break;
        const mpz_class ours = series ? (*series)[stride * n] : stern(n);
        ++compared;
        if (ours != v) {
            if (mismatched++ == 0) first = "n=" + std::to_string(n) + ": b-file " + v.get_str() + ", computed " + ours.get_str();
        }
    }
    out << a.id << ": compared " << compared << " entries with index <= " << limit << ", " << mismatched
        << " mismatches";
    if (mismatched) out << " (first " << first << ")";
    out << '\n';
    return mismatched ? kExitCounterexample : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with the Stern and twisted Stern sequences", "sternkit"};
    app.require_subcommand(1);
    const std::vector<std::string> text_json{"text", "json"};

    SeqArgs seq;
    auto* c_seq = app.add_subcommand("seq", "Print terms of s, t, S or S_e");
    c_seq->add_option("--kind", seq.kind, "s | t | S | Se")->check(CLI::IsMember({"s", "t", "S", "Se"}));
    c_seq->add_option("--from", seq.from, "first index")->required();
    c_seq->add_option("--to", seq.to, "last index")->required();
    c_seq->add_option("--format", seq.format)->check(CLI::IsMember({"text", "json", "csv"}));

    SeriesArgs ser;
    auto* c_series = app.add_subcommand("series", "Print a truncated power series");
    c_series->add_option("--name", ser.name)
        ->required()
        ->check(CLI::IsMember({"stern", "twisted", "carlitz", "psi", "H", "C", "u", "A", "B", "binpart"}));
    c_series->add_option("--order", ser.order, "truncation order (default $STERNKIT_ORDER or 1024)");
    c_series->add_option("--e", ser.e, "exponent for psi");
    c_series->add_option("--format", ser.format)->check(CLI::IsMember(text_json));

    VerifyArgs ver;
    auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
    c_verify->add_option("--suite", ver.suite)
        ->check(CLI::IsMember({"all", "identities", "matrices", "divisibility", "mod2", "palindrome"}));
    c_verify->add_option("--max-e", ver.max_e, "largest e (default $STERNKIT_MAX_E or 10)");
    c_verify->add_option("--max-n", ver.max_n, "sweep bound for n-indexed checks (default 2^(max-e+4))");
    c_verify->add_option("--jobs", ver.jobs)->check(CLI::PositiveNumber);
    c_verify->add_option("--format", ver.format)->check(CLI::IsMember(text_json));

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan", "Find the valid n-range of an identity for each e up to --e");
    c_scan->add_option("--identity", scan.identity)->required();
    c_scan->add_option("--e", scan.e)->required();
    c_scan->add_option("--jobs", scan.jobs)->check(CLI::PositiveNumber);
    c_scan->add_option("--format", scan.format)->check(CLI::IsMember(text_json));

    KernelArgs ker;
    auto* c_kernel = app.add_subcommand("kernel", "Probe the k-kernel rank of a coefficient sequence");
    c_kernel->add_option("--target", ker.target)->required()->check(CLI::IsMember({"stern", "H", "C", "binpart"}));
    c_kernel->add_option("--k", ker.k);
    c_kernel->add_option("--depth", ker.depth);
    c_kernel->add_option("--order", ker.order);
    c_kernel->add_option("--format", ker.format)->check(CLI::IsMember(text_json));

    ConjectureArgs conj;
    auto* c_conj = app.add_subcommand("conjecture", "Collect evidence for the u and A/B series identities");
    c_conj->add_option("--which", conj.which)->required()->check(CLI::IsMember({"gen", "ab"}));
    c_conj->add_option("--max-e", conj.max_e);
    c_conj->add_option("--order", conj.order);
    c_conj->add_option("--format", conj.format)->check(CLI::IsMember(text_json));

    CountArgs cnt;
    auto* c_count = app.add_subcommand("count", "Count a pattern in the binary expansion of n");
    c_count->add_option("--pattern", cnt.pattern)->required()->check(CLI::IsMember({"admissible", "ones", "factor11"}));
    c_count->add_option("--n", cnt.n)->required();
    c_count->add_flag("--weighted", cnt.weighted, "weight 1(01)^k by w^k");

    OeisArgs oeis;
    auto* c_oeis = app.add_subcommand("oeis-check", "Compare a local OEIS b-file with computed values");
    c_oeis->add_option("--id", oeis.id)->required()->check(CLI::IsMember({"A002487", "A163659", "A000123"}));
    c_oeis->add_option("--bfile", oeis.path)->required();
    c_oeis->add_option("--max-n", oeis.max_n, "largest index compared");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_seq->parsed()) return cmd_seq(seq, out);
        if (c_series->parsed()) return cmd_series(ser, out);
        if (c_verify->parsed()) return cmd_verify(ver, out);
        if (c_scan->parsed()) return cmd_scan(scan, out);
        if (c_kernel->parsed()) return cmd_kernel(ker, out);
        if (c_conj->parsed()) return cmd_conjecture(conj, out);
        if (c_count->parsed()) return cmd_count(cnt, out);
        if (c_oeis->parsed()) return cmd_oeis(oeis, out);
    } catch (const Error& e) {
        err << "sternkit: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sternkit::cli
