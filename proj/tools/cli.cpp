#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "psiq/errors.hpp"
#include "psiq/io.hpp"
#include "psiq/search.hpp"
#include "psiq/tables.hpp"
#include "psiq/theorem.hpp"

namespace psiq::cli {

namespace {

std::optional<u64> parse_u64(const std::string& text)
{
    auto v = parse_u128(text);
    if (!v || *v > ~u64{0}) return std::nullopt;
    return static_cast<u64>(*v);
}

u64 require_u64(const std::string& text, const char* what)
{
    auto v = parse_u64(text);
    if (!v) throw InvalidInput(std::string(what) + " must be a non-negative integer, got '" + text + "'");
    return *v;
}

std::vector<u64> parse_list(const std::string& text, const char* what)
{
    std::vector<u64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        out.push_back(require_u64(item, what));
    }
    return out;
}

std::string describe(const TupleKind& k)
{
    return kind_label(k) + " (p=" + std::to_string(k.power) + ", e=" + std::to_string(k.equal) +
           ", f=" + std::to_string(k.free) + ")";
}

unsigned default_jobs()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

struct SearchArgs
{
    std::string kind;
    int power = 0;
    int equal = 0;
    int free = 0;
    u64 bound = 0;
    unsigned jobs = default_jobs();
    std::string format = "json";
    bool emit_partial = false;
};

TupleKind resolve_kind(const SearchArgs& a)
{
    if (!a.kind.empty()) {
        if (a.power || a.equal || a.free) throw InvalidInput("give either --kind or --power/--equal/--free, not both");
        auto k = lookup_kind(a.kind);
        if (!k) throw InvalidInput("unknown kind '" + a.kind + "'");
        return *k;
    }
    if (!a.power || !a.equal || !a.free) throw InvalidInput("need --kind or all of --power, --equal, --free");
    TupleKind k{a.power, a.equal, a.free, ""};
    validate_kind(k);
    k.name = kind_label(k);
    return k;
}

int cmd_psi(const std::string& arg, std::ostream& out)
{
    const u64 n = require_u64(arg, "n");
    if (n == 0) throw InvalidInput("psi is defined for n >= 1");
    out << psi(n) << '\n';
    return kOk;
}

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err)
{
    SearchConfig config;
    config.kind = resolve_kind(a);
    config.bound = a.bound;
    config.jobs = a.jobs;
    config.emit_partial = a.emit_partial;
    const bool csv = a.format == "csv";

    PartialSink sink;
    if (a.emit_partial) {
        sink = [&err](std::span<const Solution> part) {
            for (const auto& s : part) err << "partial " << format_tuple(s) << '\n';
            err.flush();
        };
    }
    const auto found = search(config, sink);
    if (csv) out << csv_header(config.kind) << '\n';
    for (const auto& s : found) out << (csv ? to_csv_row(s) : to_json_line(s)) << '\n';
    return kOk;
}

int cmd_verify(const std::string& kind_name, const std::string& equal, const std::string& free, std::ostream& out)
{
    auto kind = lookup_kind(kind_name);
    if (!kind) throw InvalidInput("unknown kind '" + kind_name + "'");
    const auto eq = parse_list(equal, "equal entry");
    const auto fr = parse_list(free, "free entry");
    const auto rep = verify_solution(*kind, eq, fr);

    out << "kind: " << describe(*kind) << '\n';
    out << "tuple: " << format_tuple(eq, fr) << '\n';
    out << "psi:";
    for (std::size_t i = 0; i < rep.psi_values.size(); ++i) out << (i ? ", " : " ") << rep.psi_values[i];
    out << '\n';
    out << "lhs: " << rep.lhs << '\n';
    out << "rhs: " << rep.rhs << '\n';
    out << "discrepancy: " << rep.discrepancy << '\n';
    if (rep.used_bigint) out << "precision: arbitrary (128-bit overflow)\n";
    out << "ok: " << (rep.ok ? "true" : "false") << '\n';
    return rep.ok ? kOk : kMismatch;
}

int cmd_table(int id, std::optional<u64> bound, unsigned jobs, std::ostream& out)
{
    const auto& table = table_by_id(id);
    const u64 n = bound.value_or(table.default_bound);
    const auto diff = reproduce_table(table, n, jobs);

    out << "Table " << id << ": " << describe(table.kind) << ", bound " << n << '\n';
    out << "MATCHED " << diff.matched.size() << '\n';
    for (const auto& s : diff.matched) out << "  " << format_tuple(s) << '\n';
    out << "EXTRA " << diff.extra.size() << '\n';
    for (const auto& s : diff.extra) {
        out << "  " << format_tuple(s);
        const bool distinct_equal = std::adjacent_find(s.equal_entries.begin(), s.equal_entries.end(),
                                                       std::not_equal_to<>()) != s.equal_entries.end();
        if (s.kind.equal > 1 && distinct_equal) out << "  [distinct equal entries]";
        out << '\n';
    }
    out << "MISSING " << diff.missing.size() << '\n';
    for (const auto& s : diff.missing) out << "  " << format_tuple(s) << '\n';
    out << "OUT-OF-BOUND " << diff.out_of_bound.size() << " (not searched, spot-verified)\n";
    for (const auto& r : diff.out_of_bound) {
        const auto e = static_cast<std::size_t>(table.kind.equal);
        out << "  " << format_tuple(std::span(r.row).first(e), std::span(r.row).subspan(e))
            << (r.verified ? " verified" : " NOT VERIFIED") << '\n';
    }
    return diff.ok() ? kOk : kMismatch;
}

int cmd_obstruct(const std::string& arg, std::ostream& out)
{
    const auto rep = pair_obstruction(require_u64(arg, "x"));
    out << "x: " << rep.x << '\n';
    out << "psi: " << rep.psi << '\n';
    out << "case: " << to_string(rep.case_id);
    switch (rep.case_id) {
    case PairCase::PowerOfTwo: out << " (x = 2^" << rep.k << ")"; break;
    case PairCase::OddOnly: out << " (x odd)"; break;
    case PairCase::TwoThree: out << " (x = 2^" << rep.k << " * 3^" << rep.r << ")"; break;
    case PairCase::TwoTimesPrimePower:
        out << " (x = 2^" << rep.k << " * " << rep.p << "^" << rep.r << ", p = 4l+" << rep.p_mod4 << ", l = " << rep.l;
        if (rep.p_mod4 == 1) out << ", gcd(l+1, 5l+2) = " << rep.g;
        out << ")";
        break;
    case PairCase::General: out << " (x = 2^" << rep.k << " * two or more odd primes)"; break;
    }
    out << '\n';
    out << "u: " << rep.u << '\n' << "v: " << rep.v << '\n' << "d: " << rep.d << '\n';
    out << "u1: " << rep.u1 << '\n' << "v1: " << rep.v1 << '\n';
    out << "witness: " << to_string(rep.witness.kind) << ": " << rep.witness.text << '\n';
    out << "case certificate: " << to_string(rep.case_certificate.kind) << ": " << rep.case_certificate.text << '\n';
    out << "checked: " << (report_consistent(rep) ? "true" : "false") << '\n';
    return report_consistent(rep) ? kOk : kMismatch;
}

int cmd_classify(const std::string& arg, std::ostream& out)
{
    const auto rep = classify_equal_pair(require_u64(arg, "a"));
    out << "a: " << rep.a << '\n';
    out << "branch: " << to_string(rep.branch) << '\n';
    if (rep.branch == EqualPairBranch::OddBranch) {
        out << "A: " << rep.prod_plus_one << '\n' << "B: " << rep.prod_primes << '\n';
        out << "F: " << to_string(rep.obstruction) << '\n' << "F mod 4: " << rep.residue << '\n';
    } else if (rep.branch == EqualPairBranch::MixedBranch) {
        out << "P: " << rep.prod_plus_one << '\n' << "Q: " << rep.prod_primes << '\n';
        out << "H: " << to_string(rep.obstruction) << '\n' << "H mod 16: " << rep.residue << '\n';
    }
    out << "c: " << (rep.c ? std::to_string(*rep.c) : std::string("none")) << '\n';
    return kOk;
}

int cmd_family(int k, std::ostream& out)
{
    out << format_tuple(triple_family(k)) << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dedekind psi tuples: evaluation, exhaustive search, obstruction checks", "psiq"};
    app.require_subcommand(1);

    std::string psi_arg;
    auto* psi_cmd = app.add_subcommand("psi", "Print psi(n)");
    psi_cmd->add_option("n", psi_arg, "positive integer")->required();

    SearchArgs sa;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive search up to a bound on the equal entries");
    search_cmd->add_option("--kind", sa.kind, "named kind, e.g. cubic-quadruple");
    search_cmd->add_option("--power", sa.power, "power p (2..5)");
    search_cmd->add_option("--equal", sa.equal, "equal-class size e");
    search_cmd->add_option("--free", sa.free, "free-class size f");
    search_cmd->add_option("--bound", sa.bound, "largest equal-class entry")->required();
    search_cmd->add_option("--jobs", sa.jobs, "worker threads")->capture_default_str();
    search_cmd->add_option("--format", sa.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    search_cmd->add_flag("--emit-partial", sa.emit_partial, "stream chunk results to stderr as they finish");

    std::string v_kind, v_equal, v_free;
    auto* verify_cmd = app.add_subcommand("verify", "Check one tuple exactly");
    verify_cmd->add_option("--kind", v_kind, "named kind")->required();
    verify_cmd->add_option("--equal", v_equal, "comma-separated equal entries")->required();
    verify_cmd->add_option("--free", v_free, "comma-separated free entries")->required();

    int t_id = 0;
    std::optional<u64> t_bound;
    unsigned t_jobs = default_jobs();
    auto* table_cmd = app.add_subcommand("table", "Reproduce a published table and diff it");
    table_cmd->add_option("--id", t_id, "table number 1..7")->required();
    table_cmd->add_option("--bound", t_bound, "search bound (default covers the table or a desk-scale prefix)");
    table_cmd->add_option("--jobs", t_jobs, "worker threads")->capture_default_str();

    std::string o_arg;
    auto* obstruct_cmd = app.add_subcommand("obstruct", "Why psi^2(x) = x^2 + y^2 fails for x");
    obstruct_cmd->add_option("x", o_arg, "integer >= 2")->required();

    std::string c_arg;
    auto* classify_cmd = app.add_subcommand("classify", "Classify psi^2(a) = 2a^2 + c^2 for a");
    classify_cmd->add_option("a", c_arg, "integer >= 2")->required();

    int f_k = 0;
    auto* family_cmd = app.add_subcommand("family", "Print the triple (2^k, 2^k, 2^(k-1))");
    family_cmd->add_option("--k", f_k, "exponent 1..62")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        if (!rev.empty()) rev.pop_back(); // program name
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*psi_cmd) return cmd_psi(psi_arg, out);
        if (*search_cmd) return cmd_search(sa, out, err);
        if (*verify_cmd) return cmd_verify(v_kind, v_equal, v_free, out);
        if (*table_cmd) return cmd_table(t_id, t_bound, t_jobs, out);
        if (*obstruct_cmd) return cmd_obstruct(o_arg, out);
        if (*classify_cmd) return cmd_classify(c_arg, out);
        if (*family_cmd) return cmd_family(f_k, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return kOverflow;
    }
    return kInvalidInput;
}

} // namespace psiq::cli
