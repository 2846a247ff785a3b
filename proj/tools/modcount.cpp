// Command-line front end: evaluates the closed-form counters, prints tables
// and code listings, and runs the oracle verification sweeps.
//
// Exit codes: 0 success, 1 verification mismatch (or internal failure),
// 2 usage error, 3 capacity error.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "modcount/arith.hpp"
#include "modcount/congruence.hpp"
#include "modcount/necklaces.hpp"
#include "modcount/verify.hpp"
#include "modcount/vt_codes.hpp"

namespace {

using modcount::ArithContext;
using modcount::Count;
using nlohmann::json;

enum class Mode { text, json_out, csv };

struct Options {
    Mode mode = Mode::text;
    bool quiet = false;
};

class Timer {
  public:
    double elapsed_ms() const {
        const auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_json(const std::string &command, json params, json result, double ms) {
    json record{{"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"elapsed_ms", ms}};
    std::cout << record.dump(2) << "\n";
}

std::string csv_quote(const std::string &field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// One scalar result: bare value in text mode, single CSV row otherwise.
void emit_scalar(const Options &opt, const std::string &command, json params,
                 const std::string &value, const std::string &csv_header,
                 const std::string &csv_row, double ms) {
    switch (opt.mode) {
    case Mode::text:
        std::cout << value << "\n";
        break;
    case Mode::json_out:
        emit_json(command, std::move(params), value, ms);
        break;
    case Mode::csv:
        std::cout << csv_header << "\n" << csv_row << "\n";
        break;
    }
}

std::int64_t enum_cap_from_env() {
    const char *text = std::getenv("MODCOUNT_ENUM_CAP");
    if (text == nullptr || *text == '\0') {
        return modcount::kDefaultEnumCap;
    }
    char *end = nullptr;
    const long long value = std::strtoll(text, &end, 10);
    if (end == nullptr || *end != '\0' || value < 1) {
        throw std::invalid_argument(
            "MODCOUNT_ENUM_CAP must be a positive integer, got \"" +
            std::string(text) + "\"");
    }
    return static_cast<std::int64_t>(value);
}

int run_ramanujan(ArithContext &ctx, std::int64_t n, std::int64_t m, bool table,
                  const Options &opt) {
    Timer timer;
    if (!table) {
        const std::int64_t value = modcount::ramanujan_sum(ctx, n, m);
        emit_scalar(opt, "ramanujan", {{"n", n}, {"m", m}}, std::to_string(value),
                    "n,m,value",
                    std::to_string(n) + "," + std::to_string(m) + "," +
                        std::to_string(value),
                    timer.elapsed_ms());
        return 0;
    }
    if (m < 0) {
        throw std::invalid_argument("ramanujan --table needs m >= 0");
    }
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        std::vector<std::int64_t> row;
        row.reserve(static_cast<std::size_t>(m) + 1);
        for (std::int64_t j = 0; j <= m; ++j) {
            row.push_back(modcount::ramanujan_sum(ctx, i, j));
        }
        rows.push_back(std::move(row));
    }
    const double ms = timer.elapsed_ms();
    switch (opt.mode) {
    case Mode::text:
        if (!opt.quiet) {
            std::cout << "c_i(j) for i = 1.." << n << " (rows), j = 0.." << m
                      << " (columns)\n";
        }
        for (const auto &row : rows) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                std::cout << (j == 0 ? "" : " ") << row[j];
            }
            std::cout << "\n";
        }
        break;
    case Mode::json_out: {
        json cells = json::array();
        for (std::int64_t i = 1; i <= n; ++i) {
            for (std::int64_t j = 0; j <= m; ++j) {
                cells.push_back({{"n", i},
                                 {"m", j},
                                 {"value", std::to_string(rows[static_cast<std::size_t>(
                                     i - 1)][static_cast<std::size_t>(j)])}});
            }
        }
        emit_json("ramanujan", {{"n", n}, {"m", m}, {"table", true}},
                  std::move(cells), ms);
        break;
    }
    case Mode::csv:
        std::cout << "n,m,value\n";
        for (std::int64_t i = 1; i <= n; ++i) {
            for (std::int64_t j = 0; j <= m; ++j) {
                std::cout << i << "," << j << ","
                          << rows[static_cast<std::size_t>(i - 1)]
                                 [static_cast<std::size_t>(j)]
                          << "\n";
            }
        }
        break;
    }
    return 0;
}

int run_count(ArithContext &ctx, std::int64_t n, std::int64_t k, std::int64_t b,
              bool positive, bool unordered, const Options &opt) {
    Timer timer;
    const modcount::CongruenceSpec spec(n, k, b);
    Count value;
    if (positive) {
        value = modcount::count_distinct_positive(ctx, spec);
    } else if (unordered) {
        value = modcount::count_distinct_unordered(ctx, spec);
    } else {
        value = modcount::count_distinct(ctx, spec);
    }
    json params{{"n", n}, {"k", k}, {"b", b}};
    if (positive) {
        params["positive"] = true;
    }
    if (unordered) {
        params["unordered"] = true;
    }
    emit_scalar(opt, "count", std::move(params), value.get_str(), "n,k,b,value",
                std::to_string(n) + "," + std::to_string(k) + "," +
                    std::to_string(b) + "," + value.get_str(),
                timer.elapsed_ms());
    return 0;
}

int run_subset_sum(ArithContext &ctx, std::int64_t n, std::int64_t b,
                   bool exclude_n, const Options &opt) {
    Timer timer;
    const Count value = exclude_n ? modcount::subset_sum_count_excl(ctx, n, b)
                                  : modcount::subset_sum_count(ctx, n, b);
    json params{{"n", n}, {"b", b}};
    if (exclude_n) {
        params["exclude_n"] = true;
    }
    emit_scalar(opt, "subset-sum", std::move(params), value.get_str(), "n,b,value",
                std::to_string(n) + "," + std::to_string(b) + "," + value.get_str(),
                timer.elapsed_ms());
    return 0;
}

int run_vt_size(ArithContext &ctx, std::int64_t n, std::int64_t b,
                const Options &opt) {
    Timer timer;
    const modcount::VTSpec spec(n, b);
    const Count value = modcount::vt_size(ctx, spec);
    emit_scalar(opt, "vt size", {{"n", n}, {"b", b}}, value.get_str(), "n,b,value",
                std::to_string(n) + "," + std::to_string(b) + "," + value.get_str(),
                timer.elapsed_ms());
    return 0;
}

int run_vt_weights(ArithContext &ctx, std::int64_t n, std::int64_t b,
                   const Options &opt) {
    Timer timer;
    const modcount::VTSpec spec(n, b);
    const modcount::WeightDistribution dist = modcount::vt_weight_distribution(ctx, spec);
    const std::vector<std::string> counts = modcount::to_decimal_strings(dist.counts);
    const double ms = timer.elapsed_ms();
    switch (opt.mode) {
    case Mode::text: {
        std::cout << "[";
        for (std::size_t k = 0; k < counts.size(); ++k) {
            std::cout << (k == 0 ? "" : ",") << counts[k];
        }
        std::cout << "]\n";
        break;
    }
    case Mode::json_out:
        emit_json("vt weights", {{"n", n}, {"b", b}}, counts, ms);
        break;
    case Mode::csv:
        std::cout << "n,b,k,count\n";
        for (std::size_t k = 0; k < counts.size(); ++k) {
            std::cout << n << "," << b << "," << k << "," << counts[k] << "\n";
        }
        break;
    }
    return 0;
}

int run_vt_enum(std::int64_t n, std::int64_t b, const Options &opt) {
    Timer timer;
    const modcount::VTSpec spec(n, b);
    const std::vector<modcount::BitVector> words =
        modcount::vt_enumerate(spec, enum_cap_from_env());
    const double ms = timer.elapsed_ms();
    switch (opt.mode) {
    case Mode::text:
        for (const modcount::BitVector &w : words) {
            std::cout << w.str() << "\n";
        }
        break;
    case Mode::json_out: {
        json list = json::array();
        for (const modcount::BitVector &w : words) {
            list.push_back(w.str());
        }
        emit_json("vt enum", {{"n", n}, {"b", b}}, std::move(list), ms);
        break;
    }
    case Mode::csv:
        std::cout << "n,b,index,codeword\n";
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::cout << n << "," << b << "," << i << "," << words[i].str() << "\n";
        }
        break;
    }
    return 0;
}

int run_necklace(ArithContext &ctx, const std::vector<std::int64_t> &args,
                 bool quasi, bool has_density, std::int64_t density, bool lyndon,
                 const Options &opt) {
    Timer timer;
    if (has_density) {
        if (quasi) {
            throw std::invalid_argument("--quasi cannot be combined with --density");
        }
        if (args.size() != 1) {
            throw std::invalid_argument(
                "necklace --density takes exactly one length argument");
        }
        const std::int64_t n = args[0];
        const Count value = lyndon
                                ? modcount::fixed_density_lyndon(ctx, n, density)
                                : modcount::fixed_density_necklaces(ctx, n, density);
        json params{{"n", n}, {"density", density}};
        if (lyndon) {
            params["lyndon"] = true;
        }
        emit_scalar(opt, "necklace", std::move(params), value.get_str(),
                    "n,ones,value",
                    std::to_string(n) + "," + std::to_string(density) + "," +
                        value.get_str(),
                    timer.elapsed_ms());
        return 0;
    }
    if (lyndon) {
        throw std::invalid_argument("--lyndon requires --density");
    }
    if (args.size() != 2) {
        throw std::invalid_argument("necklace takes q and n (or --density k and n)");
    }
    const std::int64_t q = args[0];
    const std::int64_t n = args[1];
    std::string value;
    if (quasi) {
        value = modcount::quasi_necklace_poly(ctx, q, n).get_str();
    } else {
        value = modcount::necklace_poly(ctx, q, n).get_str();
    }
    json params{{"q", q}, {"n", n}};
    if (quasi) {
        params["quasi"] = true;
    }
    emit_scalar(opt, "necklace", std::move(params), value, "q,n,value",
                std::to_string(q) + "," + std::to_string(n) + "," + value,
                timer.elapsed_ms());
    return 0;
}

int run_verify(ArithContext &ctx, const std::string &suite, std::int64_t max_n,
               const Options &opt) {
    Timer timer;
    const modcount::VerifyReport report = modcount::run_suite(ctx, suite, max_n);
    const double ms = timer.elapsed_ms();
    switch (opt.mode) {
    case Mode::text:
        if (!opt.quiet) {
            for (const modcount::CheckResult &c : report.checks) {
                if (c.passed()) {
                    std::cout << "ok   " << c.name << " (" << c.cases << " cases)\n";
                } else {
                    std::cout << "FAIL " << c.name << " (" << c.cases << " cases, "
                              << c.failures << " failures) first: "
                              << c.first_counterexample << "\n";
                }
            }
            std::cout << report.checks.size() << " checks, " << report.total_cases()
                      << " cases, " << report.total_failures() << " failures\n";
        }
        break;
    case Mode::json_out: {
        json checks = json::array();
        for (const modcount::CheckResult &c : report.checks) {
            checks.push_back({{"name", c.name},
                              {"cases", c.cases},
                              {"failures", c.failures},
                              {"first_counterexample", c.first_counterexample}});
        }
        emit_json("verify", {{"suite", suite}, {"max_n", max_n}},
                  {{"passed", report.all_passed()}, {"checks", std::move(checks)}},
                  ms);
        break;
    }
    case Mode::csv:
        std::cout << "check,cases,failures,first_counterexample\n";
        for (const modcount::CheckResult &c : report.checks) {
            std::cout << csv_quote(c.name) << "," << c.cases << "," << c.failures
                      << "," << csv_quote(c.first_counterexample) << "\n";
        }
        break;
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact counters for linear congruences with distinct coordinates, "
                 "modular subset sums, Varshamov-Tenengolts codes, and necklaces"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_flag = false;
    bool csv_flag = false;
    Options opt;
    CLI::Option *json_opt =
        app.add_flag("--json", json_flag, "emit one JSON record on stdout");
    CLI::Option *csv_opt =
        app.add_flag("--csv", csv_flag, "emit CSV with a header row on stdout");
    json_opt->excludes(csv_opt);
    csv_opt->excludes(json_opt);
    app.add_flag("--quiet", opt.quiet, "suppress headers and per-check report lines");

    std::int64_t ram_n = 0;
    std::int64_t ram_m = 0;
    bool ram_table = false;
    CLI::App *ram = app.add_subcommand("ramanujan", "Ramanujan sum c_n(m)");
    ram->add_option("n", ram_n, "modulus n >= 1")->required();
    ram->add_option("m", ram_m, "argument m (any integer)")->required();
    ram->add_flag("--table", ram_table, "tabulate c_i(j) for i = 1..n, j = 0..m");

    std::int64_t count_n = 0;
    std::int64_t count_k = 0;
    std::int64_t count_b = 0;
    bool count_positive = false;
    bool count_unordered = false;
    CLI::App *count = app.add_subcommand(
        "count", "solutions of x_1 + ... + x_k == b (mod n), coordinates distinct");
    count->add_option("n", count_n, "modulus n >= 1")->required();
    count->add_option("k", count_k, "number of coordinates, k >= 0")->required();
    count->add_option("b", count_b, "target residue (any integer)")->required();
    CLI::Option *positive_opt = count->add_flag(
        "--positive", count_positive, "require all coordinates nonzero mod n");
    CLI::Option *unordered_opt = count->add_flag(
        "--unordered", count_unordered, "count solution sets instead of tuples");
    positive_opt->excludes(unordered_opt);
    unordered_opt->excludes(positive_opt);

    std::int64_t ss_n = 0;
    std::int64_t ss_b = 0;
    bool ss_exclude = false;
    CLI::App *subset = app.add_subcommand(
        "subset-sum", "subsets of {1,...,n} with element sum == b (mod n)");
    subset->add_option("n", ss_n, "modulus n >= 1; also the largest element")
        ->required();
    subset->add_option("b", ss_b, "target residue (any integer)")->required();
    subset->add_flag("--exclude-n", ss_exclude,
                     "draw subsets from {1,...,n-1} instead");

    CLI::App *vt = app.add_subcommand(
        "vt", "Varshamov-Tenengolts code VT_b(n); length n, modulus n+1");
    vt->require_subcommand(1);
    std::int64_t vt_n = 0;
    std::int64_t vt_b = 0;
    CLI::App *vt_size_cmd = vt->add_subcommand("size", "number of codewords");
    vt_size_cmd->add_option("n", vt_n, "code length n >= 1")->required();
    vt_size_cmd->add_option("b", vt_b, "syndrome residue (any integer)")->required();
    CLI::App *vt_weights_cmd =
        vt->add_subcommand("weights", "codeword counts by Hamming weight 0..n");
    vt_weights_cmd->add_option("n", vt_n, "code length n >= 1")->required();
    vt_weights_cmd->add_option("b", vt_b, "syndrome residue (any integer)")
        ->required();
    CLI::App *vt_enum_cmd = vt->add_subcommand(
        "enum", "list all codewords in lexicographic order (capped length)");
    vt_enum_cmd->add_option("n", vt_n, "code length n >= 1")->required();
    vt_enum_cmd->add_option("b", vt_b, "syndrome residue (any integer)")->required();

    std::vector<std::int64_t> neck_args;
    bool neck_quasi = false;
    bool neck_lyndon = false;
    std::int64_t neck_density = 0;
    CLI::App *neck = app.add_subcommand(
        "necklace", "necklace polynomial M(q,n) and fixed-density counts");
    neck->add_option("args", neck_args, "q n (or just n with --density)");
    neck->add_flag("--quasi", neck_quasi, "quasi-necklace polynomial M(q,n)/2");
    CLI::Option *density_opt = neck->add_option(
        "--density", neck_density, "count binary necklaces with this many ones");
    neck->add_flag("--lyndon", neck_lyndon,
                   "with --density, count only aperiodic necklaces");

    std::string verify_suite = "all";
    std::int64_t verify_max_n = 12;
    CLI::App *verify = app.add_subcommand(
        "verify", "sweep the closed forms against brute-force oracles");
    verify->add_option("--suite", verify_suite,
                       "arith, congruence, vt, necklace, or all");
    verify->add_option("--max-n", verify_max_n, "largest modulus/length to sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opt.mode = json_flag ? Mode::json_out : csv_flag ? Mode::csv : Mode::text;

    modcount::ArithContext ctx;
    try {
        if (ram->parsed()) {
            return run_ramanujan(ctx, ram_n, ram_m, ram_table, opt);
        }
        if (count->parsed()) {
            return run_count(ctx, count_n, count_k, count_b, count_positive,
                             count_unordered, opt);
        }
        if (subset->parsed()) {
            return run_subset_sum(ctx, ss_n, ss_b, ss_exclude, opt);
        }
        if (vt->parsed()) {
            if (vt_size_cmd->parsed()) {
                return run_vt_size(ctx, vt_n, vt_b, opt);
            }
            if (vt_weights_cmd->parsed()) {
                return run_vt_weights(ctx, vt_n, vt_b, opt);
            }
            return run_vt_enum(vt_n, vt_b, opt);
        }
        if (neck->parsed()) {
            return run_necklace(ctx, neck_args, neck_quasi,
                                density_opt->count() > 0, neck_density,
                                neck_lyndon, opt);
        }
        return run_verify(ctx, verify_suite, verify_max_n, opt);
    } catch (const modcount::CapacityError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
