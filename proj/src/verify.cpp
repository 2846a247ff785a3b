#include "modcount/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "modcount/congruence.hpp"
#include "modcount/necklaces.hpp"
#include "modcount/oracle.hpp"
#include "modcount/vt_codes.hpp"

namespace modcount {

namespace {

struct Checker {
    CheckResult result;

    explicit Checker(std::string name) { result.name = std::move(name); }

    void check(bool ok, auto describe) {
        ++result.cases;
        if (ok) {
            return;
        }
        ++result.failures;
        if (result.first_counterexample.empty()) {
            result.first_counterexample = describe();
        }
    }
};

std::string eq_failure(const std::string &where, const Count &formula,
                       const Count &reference) {
    return where + ": formula=" + formula.get_str() +
           " reference=" + reference.get_str();
}

void sweep_arith(ArithContext &ctx, std::int64_t max_n, VerifyReport &report) {
    Checker routes("ramanujan sum: divisor formula vs von Sterneck vs definition");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t m = -n; m <= n; ++m) {
            const std::int64_t kluyver = ramanujan_sum(ctx, n, m);
            const std::int64_t sterneck = von_sterneck(ctx, n, m);
            const std::int64_t definition = oracle::ramanujan_definition(n, m);
            routes.check(kluyver == sterneck && kluyver == definition, [&] {
                return "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                       ": kluyver=" + std::to_string(kluyver) +
                       " von_sterneck=" + std::to_string(sterneck) +
                       " definition=" + std::to_string(definition);
            });
        }
    }
    report.checks.push_back(std::move(routes.result));

    Checker divisor("sum of c_d(m) over d | n");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            std::int64_t total = 0;
            for (std::int64_t d : ctx.divisors(n)) {
                total += ramanujan_sum(ctx, d, m);
            }
            const std::int64_t expected = m % n == 0 ? n : 0;
            divisor.check(total == expected, [&] {
                return "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                       ": sum=" + std::to_string(total) +
                       " expected=" + std::to_string(expected);
            });
        }
    }
    report.checks.push_back(std::move(divisor.result));

    Checker totient("sum of phi(d) over d | n");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        std::int64_t total = 0;
        for (std::int64_t d : ctx.divisors(n)) {
            total += ctx.euler_phi(d);
        }
        totient.check(total == n, [&] {
            return "n=" + std::to_string(n) + ": sum=" + std::to_string(total);
        });
    }
    report.checks.push_back(std::move(totient.result));

    Checker mobius("sum of mu(d) over d | n");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        std::int64_t total = 0;
        for (std::int64_t d : ctx.divisors(n)) {
            total += ctx.mobius(d);
        }
        const std::int64_t expected = n == 1 ? 1 : 0;
        mobius.check(total == expected, [&] {
            return "n=" + std::to_string(n) + ": sum=" + std::to_string(total);
        });
    }
    report.checks.push_back(std::move(mobius.result));
}

void sweep_congruence(ArithContext &ctx, std::int64_t max_n, VerifyReport &report) {
    Checker distinct("distinct-coordinate count vs subset enumeration");
    Checker positive("positive distinct-coordinate count vs subset enumeration");
    Checker unordered("unordered count times k! equals ordered count");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            for (std::int64_t b = 0; b < n; ++b) {
                const CongruenceSpec spec(n, k, b);
                const std::string where = "n=" + std::to_string(n) +
                                          " k=" + std::to_string(k) +
                                          " b=" + std::to_string(b);
                const Count ordered = count_distinct(ctx, spec);
                const Count brute = oracle::count_distinct(spec);
                distinct.check(ordered == brute,
                               [&] { return eq_failure(where, ordered, brute); });

                const Count pos = count_distinct_positive(ctx, spec);
                const Count pos_brute = oracle::count_distinct_positive(spec);
                positive.check(pos == pos_brute,
                               [&] { return eq_failure(where, pos, pos_brute); });

                const Count unord = count_distinct_unordered(ctx, spec);
                unordered.check(unord * factorial(k) == ordered, [&] {
                    return eq_failure(where, unord * factorial(k), ordered);
                });
            }
        }
    }
    report.checks.push_back(std::move(distinct.result));
    report.checks.push_back(std::move(positive.result));
    report.checks.push_back(std::move(unordered.result));

    Checker subsets("subset-sum count vs mask enumeration");
    Checker subsets_excl("subset-sum count without n vs mask enumeration");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t b = 0; b < n; ++b) {
            const std::string where =
                "n=" + std::to_string(n) + " b=" + std::to_string(b);
            const Count formula = subset_sum_count(ctx, n, b);
            const Count brute = oracle::subset_sum(n, b, false);
            subsets.check(formula == brute,
                          [&] { return eq_failure(where, formula, brute); });

            const Count formula_excl = subset_sum_count_excl(ctx, n, b);
            const Count brute_excl = oracle::subset_sum(n, b, true);
            subsets_excl.check(formula_excl == brute_excl, [&] {
                return eq_failure(where, formula_excl, brute_excl);
            });
        }
    }
    report.checks.push_back(std::move(subsets.result));
    report.checks.push_back(std::move(subsets_excl.result));

    Checker products("product coefficients vs complex expansion");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            const CoeffVector exact = product_coefficients(ctx, n, m);
            const std::vector<double> numeric =
                oracle::product_coefficients_numeric(n, m);
            for (std::int64_t k = 0; k <= n; ++k) {
                const double diff =
                    std::abs(exact.coeffs[static_cast<std::size_t>(k)].get_d() -
                             numeric[static_cast<std::size_t>(k)]);
                products.check(diff < 1e-6, [&] {
                    return "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                           " k=" + std::to_string(k) +
                           ": |exact - numeric| = " + std::to_string(diff);
                });
            }
        }
    }
    report.checks.push_back(std::move(products.result));
}

void sweep_vt(ArithContext &ctx, std::int64_t max_n, VerifyReport &report) {
    Checker sizes("code size vs word scan");
    Checker weights("weight distribution vs word scan");
    Checker enumeration("enumeration sorted, members only, size consistent");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t b = 0; b <= n; ++b) {
            const VTSpec spec(n, b);
            const std::string where =
                "n=" + std::to_string(n) + " b=" + std::to_string(b);
            const oracle::VTScan scan = oracle::vt_scan(spec);

            const Count size = vt_size(ctx, spec);
            sizes.check(size == scan.size,
                        [&] { return eq_failure(where, size, scan.size); });

            const WeightDistribution dist = vt_weight_distribution(ctx, spec);
            weights.check(dist.counts == scan.weights.counts, [&] {
                return where + ": weight histogram mismatch";
            });

            const std::vector<BitVector> words = vt_enumerate(spec);
            bool ok = static_cast<std::int64_t>(words.size()) == scan.size;
            for (std::size_t i = 0; ok && i < words.size(); ++i) {
                ok = vt_member(words[i], spec) &&
                     (i == 0 || words[i - 1] < words[i]);
            }
            enumeration.check(ok, [&] {
                return where + ": enumeration of " + std::to_string(words.size()) +
                       " words is inconsistent";
            });
        }
    }
    report.checks.push_back(std::move(sizes.result));
    report.checks.push_back(std::move(weights.result));
    report.checks.push_back(std::move(enumeration.result));
}

void sweep_necklace(ArithContext &ctx, std::int64_t max_n, VerifyReport &report) {
    Checker density("fixed-density necklaces vs rotation classes");
    Checker lyndon("fixed-density Lyndon words vs rotation classes");
    Checker poly("necklace polynomial vs total Lyndon count");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        Count lyndon_total = 0;
        for (std::int64_t k = 0; k <= n; ++k) {
            const std::string where =
                "n=" + std::to_string(n) + " k=" + std::to_string(k);
            const Count formula = fixed_density_necklaces(ctx, n, k);
            const Count classes = oracle::necklaces(n, k, false);
            density.check(formula == classes,
                          [&] { return eq_failure(where, formula, classes); });

            const Count lformula = fixed_density_lyndon(ctx, n, k);
            const Count lclasses = oracle::necklaces(n, k, true);
            lyndon.check(lformula == lclasses,
                         [&] { return eq_failure(where, lformula, lclasses); });
            lyndon_total += lclasses;
        }
        const Count m2 = necklace_poly(ctx, 2, n);
        poly.check(m2 == lyndon_total, [&] {
            return eq_failure("n=" + std::to_string(n), m2, lyndon_total);
        });
    }
    report.checks.push_back(std::move(density.result));
    report.checks.push_back(std::move(lyndon.result));
    report.checks.push_back(std::move(poly.result));
}

} // namespace

bool VerifyReport::all_passed() const {
    for (const CheckResult &c : checks) {
        if (!c.passed()) {
            return false;
        }
    }
    return true;
}

std::int64_t VerifyReport::total_cases() const {
    std::int64_t total = 0;
    for (const CheckResult &c : checks) {
        total += c.cases;
    }
    return total;
}

std::int64_t VerifyReport::total_failures() const {
    std::int64_t total = 0;
    for (const CheckResult &c : checks) {
        total += c.failures;
    }
    return total;
}

VerifyReport run_suite(ArithContext &ctx, const std::string &suite,
                       std::int64_t max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("run_suite: max_n must be >= 1");
    }
    VerifyReport report;
    const bool all = suite == "all";
    if (all || suite == "arith") {
        sweep_arith(ctx, max_n, report);
    }
    if (all || suite == "congruence") {
        sweep_congruence(ctx, max_n, report);
    }
    if (all || suite == "vt") {
        sweep_vt(ctx, max_n, report);
    }
    if (all || suite == "necklace") {
        sweep_necklace(ctx, max_n, report);
    }
    if (report.checks.empty()) {
        throw std::invalid_argument("run_suite: unknown suite \"" + suite + "\"");
    }
    return report;
}

} // namespace modcount
