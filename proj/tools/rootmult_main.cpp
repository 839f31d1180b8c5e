#include "rootmult/cache_io.hpp"
#include "rootmult/multiplicity.hpp"
#include "rootmult/number_theory.hpp"
#include "rootmult/sampler.hpp"
#include "rootmult/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace rootmult;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

constexpr long long kMaxQ = 1'000'000'000;
constexpr long long kMaxBruteN = 40;
constexpr long long kMaxSamplerN = 1'000'000;
constexpr long long kMaxTableDelta = 8;

std::string fmt_double(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

json rational_json(const ExactScalar& v) {
    return json{{"num", v.numerator().get_str()}, {"den", v.denominator().get_str()}};
}

struct Row {
    std::string lambda;
    long long q = 0;
    long long n = 0;
    std::string method;
    std::optional<BigInt> value;
    std::optional<ExactScalar> main_term;
    std::optional<ExactScalar> error_scale;
    std::optional<double> ratio;
    std::optional<double> residual;
    double elapsed_ms = 0.0;
};

const char* kRowHeader = "lambda,q,n,method,value,main_term,error_scale,ratio,elapsed_ms,residual";

void print_row_csv(const Row& r) {
    std::string line = csv_quote(r.lambda);
    line += ',' + std::to_string(r.q);
    line += ',' + std::to_string(r.n);
    line += ',' + r.method;
    line += ',' + (r.value ? r.value->get_str() : std::string());
    line += ',' + (r.main_term ? r.main_term->str() : std::string());
    line += ',' + (r.error_scale ? r.error_scale->str() : std::string());
    line += ',' + (r.ratio ? fmt_double(*r.ratio) : std::string());
    line += ',' + fmt_double(r.elapsed_ms);
    line += ',' + (r.residual ? fmt_double(*r.residual) : std::string());
    std::cout << line << '\n';
}

json row_json(const Row& r) {
    json j{{"lambda", r.lambda}, {"q", r.q}, {"n", r.n}, {"method", r.method}, {"elapsed_ms", r.elapsed_ms}};
    if (r.value) j["value"] = r.value->get_str();
    if (r.main_term) j["main_term"] = rational_json(*r.main_term);
    if (r.error_scale) j["error_scale"] = rational_json(*r.error_scale);
    if (r.ratio) j["ratio"] = *r.ratio;
    if (r.residual) j["residual"] = *r.residual;
    return j;
}

void emit_rows(const std::string& command, const std::string& format, const std::vector<Row>& rows) {
    if (format == "json") {
        json doc{{"command", command}, {"rows", json::array()}};
        for (const Row& r : rows) doc["rows"].push_back(row_json(r));
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << kRowHeader << '\n';
        for (const Row& r : rows) print_row_csv(r);
    }
}

struct Options {
    std::string format = "csv";
    int workers = 0;
    double threshold = 10.0;

    // multiplicity / table
    std::string lambda_text;
    std::string mu_text;
    long long n = -1;
    long long q = -1;
    std::string method = "all";
    long long q_from = 0, q_to = -1, q_step = 1;
    std::string q_list;
    bool primes_only = false;

    // verify
    std::string suite;
    long long q_max = 100000;
    int grid = 30;

    // sample
    std::string spec_text;
    long long trials = 100000;
    std::uint64_t seed = 0;
};

MomentSpec parse_spec(const std::string& text) {
    std::vector<MomentTerm> terms;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t colon = tok.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("spec entry '" + tok + "' is not k:m");
        terms.push_back({std::stoll(tok.substr(0, colon)), std::stoll(tok.substr(colon + 1))});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (terms.empty()) throw std::invalid_argument("empty spec");
    return MomentSpec(std::move(terms));
}

bool is_prime(long long v) {
    return mpz_probab_prime_p(big(v).get_mpz_t(), 30) > 0;
}

void validate_q(long long q) {
    if (q < 1 || q > kMaxQ)
        throw std::invalid_argument("q must be in 1.." + std::to_string(kMaxQ));
}

// Fills main term, error scale, ratio and residual against the asymptotic
// estimate; skipped for one-row lambda where no estimate is defined.
void attach_estimate(Row& row, const AsymptoticEstimate& est, const BigInt& exact) {
    row.main_term = est.main_term;
    row.error_scale = est.error_scale;
    row.ratio = ExactScalar(exact).to_double() / est.main_term.to_double();
    row.residual = ((ExactScalar(exact) - est.main_term).abs() / est.error_scale).to_double();
}

std::string lambda_label(const Partition& mu, long long n) {
    std::string label = std::to_string(n - mu.weight());
    if (!mu.empty()) label += ',' + mu.str();
    return label;
}

int cmd_multiplicity(const Options& opt) {
    validate_q(opt.q);
    Partition mu;
    long long n = 0;
    if (!opt.lambda_text.empty() && !opt.mu_text.empty())
        throw std::invalid_argument("--lambda and --mu are mutually exclusive");
    if (!opt.lambda_text.empty()) {
        Partition lambda = Partition::parse(opt.lambda_text);
        if (lambda.empty()) throw std::invalid_argument("--lambda must be nonempty");
        mu = lambda.tail();
        n = lambda.weight();
    } else if (!opt.mu_text.empty()) {
        if (opt.n < 1) throw std::invalid_argument("--mu requires --n");
        mu = Partition::parse(opt.mu_text);
        n = opt.n;
        if (n - mu.weight() < std::max<long long>(mu.first(), 1))
            throw std::invalid_argument("need n - |mu| >= max(mu_1, 1)");
    } else {
        throw std::invalid_argument("need --lambda or --mu with --n");
    }

    const long long delta = mu.weight();
    const std::string label = lambda_label(mu, n);

    bool want_brute = opt.method == "brute" || opt.method == "all";
    bool want_closed = opt.method == "closed_form" || opt.method == "all";
    bool want_asym = opt.method == "asymptotic" || opt.method == "all";
    if (!want_brute && !want_closed && !want_asym)
        throw std::invalid_argument("unknown method '" + opt.method + "'");

    if (opt.method == "brute" && n > kMaxBruteN)
        throw std::invalid_argument("brute path limited to n <= " + std::to_string(kMaxBruteN));
    if (opt.method == "asymptotic" && delta == 0)
        throw std::invalid_argument("asymptotic estimate undefined for one-row lambda (value is exactly 1)");
    if (opt.method == "all" && n > kMaxBruteN) {
        std::cerr << "note: skipping brute path at n=" << n << " (> " << kMaxBruteN << ")\n";
        want_brute = false;
    }

    std::optional<AsymptoticEstimate> est;
    if (delta >= 1) {
        est = multiplicity_asymptotic(mu, opt.q);
        if (!est->delta_in_range)
            std::cerr << "warning: delta=" << delta << " exceeds log(q)/log(2); the estimate is extrapolated\n";
    }

    std::vector<Row> rows;
    auto exact_row = [&](const MultiplicityResult& res) {
        Row row{label, opt.q, n, method_name(res.method)};
        row.value = res.value;
        row.elapsed_ms = res.elapsed.count();
        if (est) attach_estimate(row, *est, res.value);
        rows.push_back(std::move(row));
    };

    if (want_brute) exact_row(multiplicity_brute(lambda_from_mu(mu, n), opt.q, opt.workers));
    if (want_closed) exact_row(multiplicity_closed_form(mu, n, opt.q));
    if (want_asym && est) {
        Row row{label, opt.q, n, "asymptotic"};
        row.main_term = est->main_term;
        row.error_scale = est->error_scale;
        rows.push_back(std::move(row));
    } else if (want_asym && opt.method == "all") {
        std::cerr << "note: skipping asymptotic row for one-row lambda\n";
    }

    emit_rows("multiplicity", opt.format, rows);
    return kExitOk;
}

int cmd_table(const Options& opt) {
    Partition mu = Partition::parse(opt.mu_text);
    const long long delta = mu.weight();
    if (delta < 1 || delta > kMaxTableDelta)
        throw std::invalid_argument("table requires 1 <= |mu| <= " + std::to_string(kMaxTableDelta));

    std::vector<long long> qs;
    if (!opt.q_list.empty()) {
        std::size_t pos = 0;
        while (pos < opt.q_list.size()) {
            std::size_t comma = opt.q_list.find(',', pos);
            qs.push_back(std::stoll(opt.q_list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        if (opt.q_to > kMaxQ || opt.q_from < 0) throw std::invalid_argument("q range out of bounds");
        if (opt.q_step < 1) throw std::invalid_argument("--q-step must be positive");
        if (opt.q_to >= opt.q_from && (opt.q_to - opt.q_from) / opt.q_step + 1 > 1'000'000)
            throw std::invalid_argument("q range too large (at most 10^6 values)");
        for (long long q = opt.q_from; q <= opt.q_to; q += opt.q_step) qs.push_back(q);
    }

    std::vector<Row> rows;
    for (long long q : qs) {
        validate_q(q);
        if (opt.primes_only && !is_prime(q)) continue;
        long long n = opt.n >= 1 ? opt.n : std::max(delta * q, delta + mu.first());
        MultiplicityResult res = multiplicity_closed_form(mu, n, q);
        AsymptoticEstimate est = multiplicity_asymptotic(mu, q);
        Row row{lambda_label(mu, n), q, n, "closed_form"};
        row.value = res.value;
        row.elapsed_ms = res.elapsed.count();
        attach_estimate(row, est, res.value);
        rows.push_back(std::move(row));
    }

    emit_rows("table", opt.format, rows);
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    if (opt.threshold <= 0) throw std::invalid_argument("--threshold must be positive");
    SuiteResult res;
    if (opt.suite == "theorem") {
        res = verify_theorem(opt.threshold, opt.q_max, opt.grid);
    } else {
        res = run_suite(opt.suite, opt.threshold, opt.workers);
    }

    for (const std::string& note : res.notes) std::cerr << "fail: " << note << '\n';

    if (opt.format == "json") {
        json doc{{"command", "verify"},
                 {"rows", json::array({json{{"suite", res.suite},
                                            {"checks", res.checks},
                                            {"failures", res.failures},
                                            {"worst_constant", res.worst_constant}}})}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "suite,checks,failures,worst_constant\n";
        std::cout << res.suite << ',' << res.checks << ',' << res.failures << ','
                  << fmt_double(res.worst_constant) << '\n';
    }
    return res.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_sample(const Options& opt) {
    validate_q(opt.q);
    if (opt.n < 1 || opt.n > kMaxSamplerN)
        throw std::invalid_argument("sampler n must be in 1.." + std::to_string(kMaxSamplerN));
    if (opt.trials < 1) throw std::invalid_argument("--trials must be positive");
    MomentSpec spec = parse_spec(opt.spec_text);

    SampleReport report = empirical_moment(spec, opt.n, opt.q, opt.trials, opt.seed, opt.workers);

    if (opt.format == "json") {
        json doc{{"command", "sample"},
                 {"rows", json::array({json{{"spec", opt.spec_text},
                                            {"n", opt.n},
                                            {"q", opt.q},
                                            {"trials", report.trials},
                                            {"seed", report.seed},
                                            {"estimate", report.estimate},
                                            {"standard_error", report.standard_error}}})}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "spec,n,q,trials,seed,estimate,standard_error\n";
        std::cout << csv_quote(opt.spec_text) << ',' << opt.n << ',' << opt.q << ',' << report.trials << ','
                  << report.seed << ',' << fmt_double(report.estimate, "%.17g") << ','
                  << fmt_double(report.standard_error, "%.17g") << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicities of symmetric-group characters in q-th root counting functions"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; flags take precedence");

    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--workers", opt.workers, "worker threads (0 = all cores; output is identical either way)");
    app.add_option("--threshold", opt.threshold, "monitored-constant threshold for verification");

    auto* mult = app.add_subcommand("multiplicity", "multiplicity of chi_lambda in the q-th root count");
    mult->add_option("--lambda", opt.lambda_text, "partition, e.g. 9,1");
    mult->add_option("--mu", opt.mu_text, "tail partition; lambda = (n-|mu|, mu)");
    mult->add_option("--n", opt.n, "weight of lambda when --mu is given");
    mult->add_option("--q", opt.q, "root exponent")->required();
    mult->add_option("--method", opt.method, "brute | closed_form | asymptotic | all");

    auto* table = app.add_subcommand("table", "closed form vs main term over a q range");
    table->add_option("--mu", opt.mu_text, "tail partition")->required();
    table->add_option("--q-from", opt.q_from, "range start");
    table->add_option("--q-to", opt.q_to, "range end (inclusive)");
    table->add_option("--q-step", opt.q_step, "range step");
    table->add_option("--q-list", opt.q_list, "explicit comma-separated q values");
    table->add_option("--n", opt.n, "fixed weight of lambda (default: the stability point |mu|*q)");
    table->add_flag("--primes-only", opt.primes_only, "keep only prime q from the range");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", opt.suite, "scharf | agreement | moments | theorem | stirling")->required();
    verify->add_option("--q-max", opt.q_max, "largest q for the theorem grid");
    verify->add_option("--grid", opt.grid, "number of log-spaced q values for the theorem grid");

    auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of a cycle-count moment of pi^q");
    sample->add_option("--n", opt.n, "permutation degree")->required();
    sample->add_option("--q", opt.q, "root exponent")->required();
    sample->add_option("--spec", opt.spec_text, "moment spec k:m[,k:m...]")->required();
    sample->add_option("--trials", opt.trials, "number of samples");
    sample->add_option("--seed", opt.seed, "64-bit stream seed");

    // global flags are accepted after the subcommand name as well
    for (CLI::App* sub : {mult, table, verify, sample}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        load_caches_from_env();
        int code = kExitOk;
        if (mult->parsed()) code = cmd_multiplicity(opt);
        else if (table->parsed()) code = cmd_table(opt);
        else if (verify->parsed()) code = cmd_verify(opt);
        else if (sample->parsed()) code = cmd_sample(opt);
        save_caches_to_env();
        return code;
    } catch (const rootmult::internal_consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}
