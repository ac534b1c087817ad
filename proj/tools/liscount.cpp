// liscount: exact counts of fixed-multiplicity words with bounded longest
// strictly increasing subsequence, with cross-validating methods.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liscount/table.hpp"

namespace {

using namespace liscount;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

struct Defaults {
    std::string method = "gessel";
    std::string cap = "100000000";
    int digits = 12;
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// Simple key=value config; the --config flag wins over LISCOUNT_CONFIG.
// Flags given on the command line override anything from the file.
Defaults load_defaults(int argc, char** argv) {
    std::string path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config")
            path = argv[i + 1];
    if (path.empty())
        if (const char* env = std::getenv("LISCOUNT_CONFIG"))
            path = env;
    Defaults defaults;
    if (path.empty())
        return defaults;
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "method")
            defaults.method = value;
        else if (key == "cap")
            defaults.cap = value;
        else if (key == "digits")
            defaults.digits = std::stoi(value);
        else
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    return defaults;
}

BigInt parse_cap(const std::string& text) {
    BigInt cap;
    if (mpz_set_str(cap.get_mpz_t(), text.c_str(), 10) != 0 || cap < 0)
        throw std::invalid_argument("malformed cap: '" + text + "'");
    return cap;
}

int run_count(int d, int r, int n, const std::string& method, const BigInt& cap) {
    std::cout << "d=" << d << " r=" << r << " n=" << n << "\n";
    if (method != "all") {
        const CountResult res = count_with_method(d, r, n, method, cap);
        std::cout << to_string(res.method) << " " << res.value.get_str() << "\n";
        return kExitOk;
    }
    std::vector<CountResult> results;
    results.push_back(count_via_gessel(d, r, n));
    results.push_back(count_via_gessel_tr_eliminated(d, r, n));
    if (r == 2)
        results.push_back(count_via_gessel_r2(d, n));
    results.push_back(count_via_rsk(d, r, n));
    if (total_word_count(r, n) <= cap)
        results.push_back(count_via_brute(d, r, n, cap));
    else
        std::cout << "brute skipped (" << total_word_count(r, n).get_str()
                  << " words exceed cap " << cap.get_str() << ")\n";
    bool match = true;
    for (const CountResult& res : results) {
        std::cout << to_string(res.method) << " " << res.value.get_str() << "\n";
        match = match && res.value == results.front().value;
    }
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? kExitOk : kExitMismatch;
}

int run_table(const TableRequest& req) {
    std::cout << render_table(build_table(req), req.format);
    return kExitOk;
}

int run_prob(int d, int r, int n, const std::optional<std::string>& poisson, int terms,
             int digits) {
    const Rational p = prob_lis_le(d, r, n);
    std::cout << "prob " << p.get_str() << "\n";
    std::cout << "decimal " << to_decimal(p, digits) << "\n";
    if (poisson) {
        const Rational theta = parse_rational(*poisson);
        if (theta < 0)
            throw std::invalid_argument("--poisson requires theta >= 0");
        const Rational partial = poissonized_partial_sum(d, r, theta, terms);
        std::cout << "poisson_partial_sum " << partial.get_str() << "\n";
        // e^{-theta} applied here only, at display precision.
        const Rational value = partial / exp_approx(theta, digits + 6);
        std::cout << "poissonized " << to_decimal(value, digits) << "\n";
    }
    return kExitOk;
}

int run_validate(int r_max, int d_max, const BigInt& cap) {
    if (r_max < 1 || d_max < 1)
        throw std::invalid_argument("validate: caps must be positive");
    long instances = 0;
    long mismatches = 0;
    for (int r = 1; r <= r_max; ++r) {
        for (int n = 1;; ++n) {
            if (total_word_count(r, n) > cap)
                break;
            for (int d = 1; d <= d_max; ++d) {
                const BigInt brute = count_via_brute(d, r, n, cap).value;
                const BigInt rsk = count_via_rsk(d, r, n).value;
                const BigInt gessel = count_via_gessel(d, r, n).value;
                bool ok = brute == rsk && rsk == gessel;
                std::ostringstream extra;
                if (r == 1) {
                    const Rational bessel = Rational(factorial(static_cast<unsigned long>(n))) *
                                            Rational(factorial(static_cast<unsigned long>(n))) *
                                            gessel_r1_series(d, n)[static_cast<std::size_t>(n)];
                    ok = ok && bessel == Rational(gessel);
                    extra << " bessel=" << bessel.get_str();
                }
                ++instances;
                if (!ok)
                    ++mismatches;
                std::cout << "d=" << d << " r=" << r << " n=" << n
                          << " brute=" << brute.get_str() << " rsk=" << rsk.get_str()
                          << " gessel=" << gessel.get_str() << extra.str() << " "
                          << (ok ? "MATCH" : "MISMATCH") << "\n";
            }
        }
    }
    std::cout << instances << " instances, " << mismatches << " mismatches\n";
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

std::vector<int> parse_d_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        if (t.empty())
            throw std::invalid_argument("malformed --d-list: '" + text + "'");
        out.push_back(std::stoi(t));
    }
    if (out.empty())
        throw std::invalid_argument("--d-list must not be empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const Defaults defaults = load_defaults(argc, argv);

        CLI::App app{"Exact counts of words with bounded longest strictly increasing "
                     "subsequence, via Toeplitz-determinant generating functions"};
        app.require_subcommand(1);
        std::string config_path;
        app.add_option("--config", config_path, "key=value config file (cap, method, digits)");

        int d = 1, r = 1, n = 0;
        std::string method = defaults.method;
        std::string cap_text = defaults.cap;

        CLI::App* count = app.add_subcommand("count", "Compute a single value A_{d+1,r}(n)");
        count->add_option("--d", d, "max allowed increasing-subsequence length")->required();
        count->add_option("--r", r, "letter multiplicity")->required();
        count->add_option("--n", n, "alphabet size")->required();
        count->add_option("--method", method, "gessel | rsk | brute | all");
        count->add_option("--cap", cap_text, "brute-force enumeration cap");

        std::string d_list = "1,2,3,4";
        int n_max = 1;
        std::string format = "markdown";
        CLI::App* table = app.add_subcommand("table", "Tabulate A_{d+1,r}(n)");
        table->add_option("--r", r, "letter multiplicity")->required();
        table->add_option("--d-list", d_list, "comma-separated d values");
        table->add_option("--n-max", n_max, "largest n column")->required();
        table->add_option("--method", method, "gessel | rsk | brute | all");
        table->add_option("--format", format, "csv | json | markdown");
        table->add_option("--cap", cap_text, "brute-force enumeration cap");

        std::optional<std::string> poisson;
        int terms = 0;
        int digits = defaults.digits;
        CLI::App* prob = app.add_subcommand("prob", "Exact Prob(L <= d) and Poissonization");
        prob->add_option("--d", d)->required();
        prob->add_option("--r", r)->required();
        prob->add_option("--n", n)->required();
        prob->add_option("--poisson", poisson, "theta as exact rational p/q");
        prob->add_option("--terms", terms, "partial-sum length N for --poisson");
        prob->add_option("--digits", digits, "significant digits for decimal display");

        int r_max = 3, d_max = 3;
        std::string validate_cap = "1000000";
        CLI::App* validate = app.add_subcommand("validate", "Three-way method agreement sweep");
        validate->add_option("--r-max", r_max);
        validate->add_option("--d-max", d_max);
        validate->add_option("--cap", validate_cap, "brute-force size cap per instance");

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            std::cerr << e.what() << "\n";
            return kExitUsage;
        }

        if (count->parsed())
            return run_count(d, r, n, method, parse_cap(cap_text));
        if (table->parsed()) {
            TableRequest req;
            req.r = r;
            req.d_values = parse_d_list(d_list);
            req.n_max = n_max;
            req.method = method;
            req.format = parse_table_format(format);
            req.cap = parse_cap(cap_text);
            return run_table(req);
        }
        if (prob->parsed())
            return run_prob(d, r, n, poisson, terms, digits);
        if (validate->parsed())
            return run_validate(r_max, d_max, parse_cap(validate_cap));
        return kExitUsage;
    } catch (const liscount::EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const liscount::MethodMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
