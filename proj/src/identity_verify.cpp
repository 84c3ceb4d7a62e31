#include "derange/identity_verify.hpp"

#include "derange/perm_oracle.hpp"

#include <nlohmann/json.hpp>

#include <random>
#include <sstream>

namespace derange::verify {

namespace {

void require_range(unsigned lo, unsigned hi, unsigned max_hi, const char* who) {
    if (lo > hi) {
        throw std::invalid_argument(std::string(who) + ": empty range");
    }
    if (hi > max_hi) {
        throw std::invalid_argument(std::string(who) + ": range end exceeds the supported bound of " +
                                    std::to_string(max_hi));
    }
}

VerificationReport make_report(std::string id, unsigned lo, unsigned hi) {
    VerificationReport report;
    report.identity_id = std::move(id);
    report.range_lo = lo;
    report.range_hi = hi;
    report.cases_checked = static_cast<std::uint64_t>(hi) - lo + 1;
    return report;
}

void record(VerificationReport& report, std::string input, std::string lhs, std::string rhs) {
    report.failures.push_back({std::move(input), std::move(lhs), std::move(rhs)});
}

// floor(c * e^-1) for an integer c.
Integer floor_over_e(const Integer& c) {
    return ELaurent::e_inv_times(Rational(c)).floor();
}

bool hermite_holds(const Rational& x, unsigned m, Integer& lhs_out, Integer& rhs_out) {
    Integer sum = 0;
    for (unsigned k = 0; k < m; ++k) {
        sum += exact::rational_floor(x + exact::make_rational(k, m));
    }
    lhs_out = std::move(sum);
    rhs_out = exact::rational_floor(Rational(m) * x);
    return lhs_out == rhs_out;
}

}  // namespace

std::string to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << report.identity_id << ": " << (report.pass() ? "PASS" : "FAIL") << "  range=[" << report.range_lo
        << "," << report.range_hi << "] cases=" << report.cases_checked;
    if (!report.pass()) {
        out << " failures=" << report.failures.size();
        for (const Failure& f : report.failures) {
            out << "\n  " << f.input << ": lhs=" << f.lhs << " rhs=" << f.rhs;
        }
    }
    return out.str();
}

std::string to_json_line(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["identity_id"] = report.identity_id;
    j["range"] = {report.range_lo, report.range_hi};
    j["cases_checked"] = report.cases_checked;
    j["pass"] = report.pass();
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const Failure& f : report.failures) {
        nlohmann::ordered_json entry;
        entry["input"] = f.input;
        entry["lhs"] = f.lhs;
        entry["rhs"] = f.rhs;
        failures.push_back(std::move(entry));
    }
    j["failures"] = std::move(failures);
    return j.dump();
}

ELaurent symbolic_integral(unsigned n) {
    Integer coeff = 1;  // I_0 = e
    for (unsigned k = 1; k <= n; ++k) {
        coeff = Integer(k) * coeff + (k % 2 == 0 ? 1 : -1);
    }
    return ELaurent::e_times(Rational(coeff));
}

VerificationReport verify_has1(unsigned n_lo, unsigned n_hi) {
    require_range(n_lo, n_hi, 500, "verify_has1");
    VerificationReport report = make_report("has1", n_lo, n_hi);
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        const ELaurent lhs = symbolic_integral(n);
        const ELaurent rhs = ELaurent::e_times(Rational(floor_over_e(exact::factorial(n) + 1)));
        if (!(lhs == rhs)) {
            record(report, "n=" + std::to_string(n), lhs.str(), rhs.str());
        }
    }
    return report;
}

VerificationReport verify_has2(unsigned n_lo, unsigned n_hi) {
    require_range(n_lo, n_hi, 500, "verify_has2");
    if (n_lo < 1) {
        throw std::invalid_argument("verify_has2: defined for n >= 1");
    }
    VerificationReport report = make_report("has2", n_lo, n_hi);
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        const Integer fact = exact::factorial(n);
        // integral over [-1, 0] = integral over [-1, inf) minus n!.
        const ELaurent lhs = symbolic_integral(n) - ELaurent::from_rational(Rational(fact));
        // e*((1 + (-1)^n)/2 - {n!/e}) with {n!/e} = n!*e^-1 - floor(n!/e);
        // multiplying through by e turns the fractional part into
        // n! - e*floor(n!/e), all exactly representable.
        const Rational half_term = n % 2 == 0 ? Rational(1) : Rational(0);
        const ELaurent rhs(-Rational(fact), half_term + Rational(floor_over_e(fact)), 0);
        if (!(lhs == rhs)) {
            record(report, "n=" + std::to_string(n), lhs.str(), rhs.str());
        }
    }
    return report;
}

VerificationReport verify_iint(unsigned p_lo, unsigned p_hi) {
    require_range(p_lo, p_hi, 500, "verify_iint");
    VerificationReport report = make_report("iint", p_lo, p_hi);
    for (unsigned p = p_lo; p <= p_hi; ++p) {
        const ELaurent lhs = symbolic_integral(p + 2) - Rational(p + 2) * symbolic_integral(p + 1);
        const ELaurent rhs = ELaurent::e_times(p % 2 == 0 ? Rational(1) : Rational(-1));
        if (!(lhs == rhs)) {
            record(report, "p=" + std::to_string(p), lhs.str(), rhs.str());
        }
    }
    return report;
}

VerificationReport verify_toprove(unsigned p_lo, unsigned p_hi) {
    require_range(p_lo, p_hi, 300, "verify_toprove");
    VerificationReport report = make_report("toprove", p_lo, p_hi);
    for (unsigned p = p_lo; p <= p_hi; ++p) {
        const Integer fact_next = exact::factorial(p + 1);
        const Integer lhs = floor_over_e(fact_next * (p + 2));  // (p+2)!
        const Integer rhs = floor_over_e(fact_next) + Integer(p + 1) * floor_over_e(fact_next + 1);
        if (lhs != rhs) {
            record(report, "p=" + std::to_string(p), lhs.str(), rhs.str());
        }
    }
    return report;
}

VerificationReport verify_hermite_rational(const Rational& x, unsigned m) {
    if (m < 1) {
        throw std::invalid_argument("verify_hermite_rational: m must be >= 1");
    }
    VerificationReport report = make_report("hermite", 0, m - 1);
    Integer lhs;
    Integer rhs;
    if (!hermite_holds(x, m, lhs, rhs)) {
        std::ostringstream input;
        input << "x=" << x << ",m=" << m;
        record(report, input.str(), lhs.str(), rhs.str());
    }
    return report;
}

VerificationReport verify_hermite_random(unsigned cases, std::uint64_t seed) {
    if (cases < 1) {
        throw std::invalid_argument("verify_hermite_random: need at least one case");
    }
    VerificationReport report = make_report("hermite", 1, cases);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num_dist(-1000000, 1000000);
    std::uniform_int_distribution<long long> den_dist(1, 1000000);
    std::uniform_int_distribution<unsigned> m_dist(1, 50);
    for (unsigned i = 0; i < cases; ++i) {
        const Rational x = exact::make_rational(num_dist(rng), den_dist(rng));
        const unsigned m = m_dist(rng);
        Integer lhs;
        Integer rhs;
        if (!hermite_holds(x, m, lhs, rhs)) {
            std::ostringstream input;
            input << "case=" << i + 1 << ",x=" << x << ",m=" << m;
            record(report, input.str(), lhs.str(), rhs.str());
        }
    }
    return report;
}

VerificationReport verify_hermite_factorial(unsigned p_lo, unsigned p_hi) {
    require_range(p_lo, p_hi, 150, "verify_hermite_factorial");
    VerificationReport report = make_report("hermite-factorial", p_lo, p_hi);
    for (unsigned p = p_lo; p <= p_hi; ++p) {
        const unsigned m = p + 2;
        const Integer fact = exact::factorial(p + 1);
        const Integer whole = floor_over_e(fact * m);  // floor((p+2)!/e)
        const Integer term_zero = floor_over_e(fact);
        const Integer term_rest = floor_over_e(fact + 1);

        Integer sum = 0;
        bool terms_ok = true;
        for (unsigned k = 0; k < m; ++k) {
            const Integer term = ELaurent(exact::make_rational(k, m), 0, Rational(fact)).floor();
            sum += term;
            const Integer& expected = k == 0 ? term_zero : term_rest;
            if (term != expected) {
                terms_ok = false;
                record(report, "p=" + std::to_string(p) + ",k=" + std::to_string(k) + " (term collapse)",
                       term.str(), expected.str());
            }
        }
        if (sum != whole && terms_ok) {
            record(report, "p=" + std::to_string(p), sum.str(), whole.str());
        }
    }
    return report;
}

VerificationReport verify_fractional_bounds(unsigned p_lo, unsigned p_hi) {
    require_range(p_lo, p_hi, 150, "verify_fractional_bounds");
    VerificationReport report = make_report("fractional-bounds", p_lo, p_hi);
    for (unsigned p = p_lo; p <= p_hi; ++p) {
        const Integer fact = exact::factorial(p + 1);
        const Integer fl = floor_over_e(fact + 1);
        // diff = (p+1)!/e - floor(((p+1)!+1)/e), an exact ELaurent.
        const ELaurent diff(-Rational(fl), 0, Rational(fact));
        const Rational bound = exact::make_rational(1, p + 2);
        const ELaurent upper = diff - ELaurent::from_rational(bound);
        const ELaurent lower = diff + ELaurent::from_rational(bound);
        if (!(upper.sign() < 0)) {
            record(report, "p=" + std::to_string(p) + " (upper strict)", diff.str(), bound.str());
        }
        if (!(lower.sign() > 0)) {
            record(report, "p=" + std::to_string(p) + " (lower strict)", diff.str(), Rational(-bound).str());
        }
    }
    return report;
}

VerificationReport verify_parity_identity(unsigned p_lo, unsigned p_hi) {
    require_range(p_lo, p_hi, 300, "verify_parity_identity");
    VerificationReport report = make_report("parity", p_lo, p_hi);
    for (unsigned p = p_lo; p <= p_hi; ++p) {
        const Integer lhs = sum_rule_lhs(p);
        const Integer rhs = derangement(p + 1) - (p % 2);
        if (lhs != rhs) {
            record(report, "p=" + std::to_string(p), lhs.str(), rhs.str());
        }
    }
    return report;
}

VerificationReport verify_nearest_floor_split(unsigned m_lo, unsigned m_hi) {
    require_range(m_lo, m_hi, 300, "verify_nearest_floor_split");
    if (m_lo < 1) {
        throw std::invalid_argument("verify_nearest_floor_split: defined for m >= 1");
    }
    VerificationReport report = make_report("nearest-floor", m_lo, m_hi);
    for (unsigned m = m_lo; m <= m_hi; ++m) {
        const ELaurent value = ELaurent::e_inv_times(Rational(exact::factorial(m)));
        const Integer gap = value.nearest() - value.floor();
        const Integer expected = m % 2 == 0 ? 1 : 0;
        if (gap != expected) {
            record(report, "m=" + std::to_string(m), gap.str(), expected.str());
        }
    }
    return report;
}

VerificationReport verify_binomial_identities(unsigned p_max) {
    if (p_max < 1) {
        throw std::invalid_argument("verify_binomial_identities: p_max must be >= 1");
    }
    VerificationReport report = make_report("binomial", 1, p_max);
    DerangementTable& table = shared_table();
    for (unsigned p = 1; p <= p_max; ++p) {
        Integer sum = 0;
        for (unsigned n = 0; n <= p; ++n) {
            sum += exact::binomial(p, n) * table.at(n);
        }
        const Integer fact = exact::factorial(p);
        if (sum != fact) {
            record(report, "p=" + std::to_string(p), sum.str(), fact.str());
        }
        for (unsigned l = 0; l < p; ++l) {
            Integer shifted = 0;
            for (unsigned n = 0; n <= p; ++n) {
                shifted += exact::binomial(p - l, static_cast<std::int64_t>(n) - l) * table.at(p - n);
            }
            const Integer target = exact::factorial(p - l);
            if (shifted != target) {
                record(report, "p=" + std::to_string(p) + ",l=" + std::to_string(l), shifted.str(),
                       target.str());
            }
        }
    }
    return report;
}

VerificationReport verify_theorem1(unsigned p_max) {
    VerificationReport report = make_report("theorem1", 0, p_max);
    for (unsigned p = 0; p <= p_max; ++p) {
        const Integer lhs = sum_rule_lhs(p);
        const Integer rhs = sum_rule_rhs(p);
        if (lhs != rhs) {
            record(report, "p=" + std::to_string(p), lhs.str(), rhs.str());
        }
    }
    return report;
}

VerificationReport verify_a_connection(unsigned p_max) {
    VerificationReport report = make_report("a-connection", 0, p_max);
    for (unsigned p = 0; p <= p_max; ++p) {
        const Integer lhs = sum_rule_lhs(p);
        const Integer rhs = a_recurrence(p + 1);
        if (lhs != rhs) {
            record(report, "p=" + std::to_string(p), lhs.str(), rhs.str());
        }
    }
    return report;
}

VerificationReport verify_oracle(unsigned n_max) {
    require_range(0, n_max, static_cast<unsigned>(perm::kDefaultCap), "verify_oracle");
    VerificationReport report = make_report("oracle", 0, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        const Integer brute = perm::brute_derangement_count(static_cast<int>(n));
        const auto check = [&](const char* name, const Integer& value) {
            if (value != brute) {
                record(report, "n=" + std::to_string(n) + " (" + name + ")", value.str(), brute.str());
            }
        };
        check("series", derangement_series(n));
        check("pair-recurrence", derangement_pair_recurrence(n));
        check("signed-recurrence", derangement_signed_recurrence(n));
        if (n >= 1) {
            check("floor-formula", derangement_floor_formula(n));
            check("nearest-formula", derangement_nearest_formula(n));
        }
        if (n <= static_cast<unsigned>(perm::kDefaultSumCap)) {
            const Integer lhs = sum_rule_lhs(n);
            const Integer rhs = perm::brute_sum_rule(static_cast<int>(n));
            if (lhs != rhs) {
                record(report, "p=" + std::to_string(n) + " (sum-rule)", lhs.str(), rhs.str());
            }
        }
    }
    return report;
}

}  // namespace derange::verify
