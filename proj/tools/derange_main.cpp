#include "derange/derangement.hpp"
#include "derange/identity_verify.hpp"
#include "derange/perm_oracle.hpp"
#include "derange/quadrature.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using derange::Integer;
using derange::exact::ELaurent;
using derange::exact::Rational;
using derange::verify::VerificationReport;

constexpr unsigned kComputeCap = 2000;
constexpr unsigned kTableCap = 500;
constexpr std::uint64_t kDefaultHermiteSeed = 1234;

// Exit codes are a CI contract: 0 success, 1 verification failure, 2 usage.
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Writes to stdout or, when --output is given, to the named file.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw UsageError("cannot open output file: " + path);
            }
        }
    }

    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

double numeric(const ELaurent& x) {
    return x.enclosure(64).midpoint().convert_to<double>();
}

double relative_error(double value, double reference) {
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

void apply_env_precision_cap() {
    const char* raw = std::getenv("DERANGE_PRECISION_CAP");
    if (raw == nullptr || *raw == '\0') {
        return;
    }
    char* end = nullptr;
    const unsigned long cap = std::strtoul(raw, &end, 10);
    if (end == nullptr || *end != '\0' || cap < 1 || cap > 100000000UL) {
        throw UsageError(std::string("DERANGE_PRECISION_CAP: invalid value '") + raw + "'");
    }
    derange::exact::set_precision_cap(static_cast<unsigned>(cap));
}

// ---------------------------------------------------------------------------
// compute

struct ComputeOptions {
    std::string kind;
    long long argument = 0;
    std::string method = "table";
    std::string format = "plain";
    std::string output;
};

Integer compute_derangement(unsigned n, const std::string& method) {
    if (method == "table") {
        return derange::derangement(n);
    }
    if (method == "series") {
        return derange::derangement_series(n);
    }
    if (method == "pair") {
        return derange::derangement_pair_recurrence(n);
    }
    if (method == "signed") {
        return derange::derangement_signed_recurrence(n);
    }
    if (method == "floor") {
        return derange::derangement_floor_formula(n);
    }
    if (method == "nearest") {
        return derange::derangement_nearest_formula(n);
    }
    throw UsageError("unknown method: " + method);
}

int run_compute(const ComputeOptions& opts) {
    if (opts.argument < 0) {
        throw UsageError("argument must be non-negative");
    }
    const auto n = static_cast<unsigned>(opts.argument);
    if (n > kComputeCap) {
        throw UsageError("argument exceeds the compute cap of " + std::to_string(kComputeCap));
    }
    if (opts.method != "table" && opts.kind != "derangement") {
        throw UsageError("--method applies to 'compute derangement' only");
    }

    Integer value;
    if (opts.kind == "derangement") {
        value = compute_derangement(n, opts.method);
    } else if (opts.kind == "sum") {
        value = derange::sum_rule_lhs(n);
    } else if (opts.kind == "floor") {
        value = ELaurent::e_inv_times(Rational(derange::exact::factorial(n))).floor();
    } else if (opts.kind == "a") {
        if (n < 1) {
            throw UsageError("'compute a' requires N >= 1");
        }
        value = derange::a_recurrence(n);
    } else {
        throw UsageError("unknown compute kind: " + opts.kind);
    }

    Sink sink(opts.output);
    if (opts.format == "plain") {
        sink.out() << value.str() << "\n";
    } else if (opts.format == "json-lines") {
        nlohmann::ordered_json j;
        j["kind"] = opts.kind;
        j["n"] = opts.argument;
        if (opts.kind == "derangement") {
            j["method"] = opts.method;
        }
        j["value"] = value.str();
        sink.out() << j.dump() << "\n";
    } else {
        throw UsageError("unknown format: " + opts.format);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// table

struct TableOptions {
    long long max_n = 0;
    std::string format = "plain";
    std::string output;
};

int run_table(const TableOptions& opts) {
    if (opts.max_n < 0 || opts.max_n > static_cast<long long>(kTableCap)) {
        throw UsageError("max_n must be in 0.." + std::to_string(kTableCap));
    }
    const auto max_n = static_cast<unsigned>(opts.max_n);
    Sink sink(opts.output);
    std::ostream& out = sink.out();

    const bool csv = opts.format == "csv";
    const bool plain = opts.format == "plain";
    const bool json = opts.format == "json-lines";
    if (!csv && !plain && !json) {
        throw UsageError("unknown format: " + opts.format);
    }
    if (plain) {
        out << "n derangement sum a floor\n";
    } else if (csv) {
        out << "n,derangement,sum,a,floor\n";
    }

    derange::DerangementTable& table = derange::shared_table();
    Integer running_sum = 0;  // S_n accumulated per its defining sum
    for (unsigned n = 0; n <= max_n; ++n) {
        const Integer d = table.at(n);
        running_sum += Integer(n) * d;
        const Integer a_next = derange::a_recurrence(n + 1);
        const Integer floor_next = derange::sum_rule_rhs(n);
        if (json) {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["derangement"] = d.str();
            j["sum"] = running_sum.str();
            j["a"] = a_next.str();
            j["floor"] = floor_next.str();
            out << j.dump() << "\n";
        } else {
            const char sep = csv ? ',' : ' ';
            out << n << sep << d.str() << sep << running_sum.str() << sep << a_next.str() << sep
                << floor_next.str() << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string identity;
    std::optional<long long> min;
    std::optional<long long> max;
    unsigned cases = 1000;
    std::uint64_t seed = kDefaultHermiteSeed;
    bool quick = false;
    std::string format = "text";
    std::string output;
};

enum class IdentityKind { Ranged, MaxOnly, Randomized };

struct IdentityEntry {
    const char* name;
    IdentityKind kind;
    unsigned full_lo;
    unsigned full_hi;
    unsigned quick_lo;
    unsigned quick_hi;
    VerificationReport (*run)(unsigned lo, unsigned hi);
};

VerificationReport run_max_only(VerificationReport (*fn)(unsigned), unsigned hi) {
    return fn(hi);
}

const std::vector<IdentityEntry>& identity_registry() {
    using namespace derange::verify;
    static const std::vector<IdentityEntry> entries = {
        {"theorem1", IdentityKind::MaxOnly, 0, 200, 0, 50,
         [](unsigned, unsigned hi) { return verify_theorem1(hi); }},
        {"toprove", IdentityKind::Ranged, 0, 200, 0, 50, verify_toprove},
        {"has1", IdentityKind::Ranged, 1, 100, 1, 25, verify_has1},
        {"has2", IdentityKind::Ranged, 1, 100, 1, 25, verify_has2},
        {"iint", IdentityKind::Ranged, 0, 200, 0, 50, verify_iint},
        {"hermite", IdentityKind::Randomized, 0, 0, 0, 0, nullptr},
        {"hermite-factorial", IdentityKind::Ranged, 0, 100, 0, 25, verify_hermite_factorial},
        {"fractional-bounds", IdentityKind::Ranged, 0, 100, 0, 25, verify_fractional_bounds},
        {"parity", IdentityKind::Ranged, 0, 200, 0, 50, verify_parity_identity},
        {"nearest-floor", IdentityKind::Ranged, 1, 201, 1, 51, verify_nearest_floor_split},
        {"binomial", IdentityKind::MaxOnly, 1, 50, 1, 20,
         [](unsigned, unsigned hi) { return verify_binomial_identities(hi); }},
        {"a-connection", IdentityKind::MaxOnly, 0, 200, 0, 50,
         [](unsigned, unsigned hi) { return verify_a_connection(hi); }},
        {"oracle", IdentityKind::MaxOnly, 0, 9, 0, 8,
         [](unsigned, unsigned hi) { return verify_oracle(hi); }},
    };
    return entries;
}

VerificationReport run_identity(const IdentityEntry& entry, const VerifyOptions& opts) {
    if (entry.kind == IdentityKind::Randomized) {
        if (opts.min || opts.max) {
            throw UsageError("'hermite' takes --cases/--seed, not range bounds");
        }
        const unsigned cases = opts.quick ? std::min(opts.cases, 200u) : opts.cases;
        return derange::verify::verify_hermite_random(cases, opts.seed);
    }
    unsigned lo = opts.quick ? entry.quick_lo : entry.full_lo;
    unsigned hi = opts.quick ? entry.quick_hi : entry.full_hi;
    if (opts.min) {
        if (entry.kind == IdentityKind::MaxOnly) {
            throw UsageError(std::string("'") + entry.name + "' takes --max only");
        }
        if (*opts.min < 0) {
            throw UsageError("--min must be non-negative");
        }
        lo = static_cast<unsigned>(*opts.min);
    }
    if (opts.max) {
        if (*opts.max < 0) {
            throw UsageError("--max must be non-negative");
        }
        hi = static_cast<unsigned>(*opts.max);
    }
    return entry.run(lo, hi);
}

int run_verify(const VerifyOptions& opts) {
    std::vector<const IdentityEntry*> selected;
    for (const IdentityEntry& entry : identity_registry()) {
        if (opts.identity == "all" || opts.identity == entry.name) {
            selected.push_back(&entry);
        }
    }
    if (selected.empty()) {
        throw UsageError("unknown identity: " + opts.identity);
    }
    if (opts.identity == "all" && (opts.min || opts.max)) {
        throw UsageError("range bounds apply to a single identity, not 'all'");
    }

    Sink sink(opts.output);
    bool all_pass = true;
    for (const IdentityEntry* entry : selected) {
        VerificationReport report = run_identity(*entry, opts);
        all_pass = all_pass && report.pass();
        if (opts.format == "text") {
            sink.out() << derange::verify::to_text(report) << "\n";
        } else if (opts.format == "json-lines") {
            sink.out() << derange::verify::to_json_line(report) << "\n";
        } else {
            throw UsageError("unknown format: " + opts.format);
        }
    }
    return all_pass ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// quadcheck

struct QuadcheckOptions {
    long long max_n = 12;
    double tol = 1e-8;
    std::string format = "text";
    std::string output;
};

int run_quadcheck(const QuadcheckOptions& opts) {
    if (opts.max_n < 0 || opts.max_n > 12) {
        throw UsageError("max_n must be in 0..12");
    }
    if (opts.tol < 1e-12 || opts.tol > 1.0) {
        throw UsageError("tol must be in [1e-12, 1]");
    }
    const auto max_n = static_cast<unsigned>(opts.max_n);
    Sink sink(opts.output);
    std::ostream& out = sink.out();

    bool all_pass = true;
    const auto emit = [&](unsigned n, const char* check, double value, double reference) {
        const double rel = relative_error(value, reference);
        const bool pass = rel <= opts.tol;
        all_pass = all_pass && pass;
        if (opts.format == "json-lines") {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["check"] = check;
            j["quad"] = value;
            j["reference"] = reference;
            j["rel_err"] = rel;
            j["pass"] = pass;
            out << j.dump() << "\n";
        } else {
            out << "n=" << n << " " << check << ": quad=" << value << " ref=" << reference << " rel=" << rel
                << " " << (pass ? "PASS" : "FAIL") << "\n";
        }
    };

    for (unsigned n = 0; n <= max_n; ++n) {
        const ELaurent full = derange::verify::symbolic_integral(n);
        const Integer fact = derange::exact::factorial(n);
        const double fact_ref = Rational(fact).convert_to<double>();
        const double finite_ref = numeric(full - ELaurent::from_rational(Rational(fact)));
        const double full_ref = numeric(full);

        const double finite_tol = std::max(1e-12, opts.tol / 100.0);
        const double tail_tol = std::max(1e-12, opts.tol / 100.0 * std::max(1.0, fact_ref));
        const derange::quad::QuadResult finite = derange::quad::integrate_exp_monomial(n, -1.0, 0.0, finite_tol);
        const derange::quad::QuadResult tail = derange::quad::integrate_tail(n, tail_tol);

        emit(n, "finite", finite.value, finite_ref);
        emit(n, "tail", tail.value, fact_ref);
        emit(n, "total", finite.value + tail.value, full_ref);
    }
    if (opts.format != "json-lines") {
        out << (all_pass ? "quadcheck: PASS" : "quadcheck: FAIL") << "\n";
    }
    return all_pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact derangement numbers, the sum rule S_p = floor((p+1)!/e), and identity verification"};
    app.require_subcommand(1);

    ComputeOptions compute_opts;
    CLI::App* compute = app.add_subcommand("compute", "Compute one exact value");
    compute->add_option("kind", compute_opts.kind, "derangement | sum | floor | a")->required();
    compute->add_option("n", compute_opts.argument, "Argument (n, p or N)")->required();
    compute->add_option("--method", compute_opts.method,
                        "derangement method: table | series | pair | signed | floor | nearest");
    compute->add_option("--format", compute_opts.format, "plain | json-lines");
    compute->add_option("-o,--output", compute_opts.output, "Write to file instead of stdout");

    TableOptions table_opts;
    CLI::App* table = app.add_subcommand("table", "Emit rows n, D(n), S_n, A_{n+1}, floor((n+1)!/e)");
    table->add_option("max_n", table_opts.max_n, "Last row (<= 500)")->required();
    table->add_option("--format", table_opts.format, "plain | csv | json-lines");
    table->add_option("-o,--output", table_opts.output, "Write to file instead of stdout");

    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "Run identity checkers; exit 0 iff all pass");
    verify
        ->add_option("identity", verify_opts.identity,
                     "theorem1 | toprove | has1 | has2 | iint | hermite | hermite-factorial | "
                     "fractional-bounds | parity | nearest-floor | binomial | a-connection | oracle | all")
        ->required();
    long long min_val = 0;
    long long max_val = 0;
    CLI::Option* min_opt = verify->add_option("--min,--min-n,--min-p", min_val, "Range start override");
    CLI::Option* max_opt = verify->add_option("--max,--max-n,--max-p", max_val, "Range end override");
    verify->add_option("--cases", verify_opts.cases, "Randomized Hermite case count (default 1000)");
    verify->add_option("--seed", verify_opts.seed, "Randomized Hermite seed (default 1234)");
    CLI::Option* quick_opt = verify->add_flag("--quick", "Shortened CI ranges");
    CLI::Option* full_opt = verify->add_flag("--full", "Full ranges (default)");
    quick_opt->excludes(full_opt);
    verify->add_option("--format", verify_opts.format, "text | json-lines");
    verify->add_option("-o,--output", verify_opts.output, "Write to file instead of stdout");

    QuadcheckOptions quad_opts;
    CLI::App* quadcheck = app.add_subcommand("quadcheck", "Numerical cross-check of the integral identities");
    quadcheck->add_option("--max-n", quad_opts.max_n, "Check n = 0..max_n (<= 12, default 12)");
    quadcheck->add_option("--tol", quad_opts.tol, "Relative tolerance (default 1e-8)");
    quadcheck->add_option("--format", quad_opts.format, "text | json-lines");
    quadcheck->add_option("-o,--output", quad_opts.output, "Write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        apply_env_precision_cap();
        if (*compute) {
            return run_compute(compute_opts);
        }
        if (*table) {
            return run_table(table_opts);
        }
        if (*verify) {
            verify_opts.quick = quick_opt->count() > 0;
            if (min_opt->count() > 0) {
                verify_opts.min = min_val;
            }
            if (max_opt->count() > 0) {
                verify_opts.max = max_val;
            }
            return run_verify(verify_opts);
        }
        if (*quadcheck) {
            return run_quadcheck(quad_opts);
        }
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
