#include "gfwilson/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gfwilson/modnum.hpp"
#include "gfwilson/report.hpp"
#include "gfwilson/symmetric.hpp"

namespace gfwilson::cli {

namespace {

/// Parameter errors surfaced to the user with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Field field_from(const CliConfig& cfg) {
    if (!cfg.p) throw UsageError("--p is required");
    const std::uint32_t p = *cfg.p;
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < cfg.n && q <= kMaxSuiteOrder; ++i) q *= p;
    if (q > kMaxSuiteOrder) {
        throw UsageError(std::to_string(p) + "^" + std::to_string(cfg.n) + " exceeds the supported order " +
                         std::to_string(kMaxSuiteOrder));
    }
    if (q < 3) throw UsageError("q = " + std::to_string(q) + " is unsupported; the identities need q >= 3");
    return make_field(p, cfg.n);
}

SymmetricProfile naive_profile(const Field& field) {
    SymmetricProfile profile{field, {}};
    for (std::uint64_t k = 1; k <= field.q() - 1; ++k) profile.values.push_back(esp_naive(field, k));
    return profile;
}

std::string summary_line(const VerificationReport& r) {
    const auto passed = std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.pass; });
    const auto p = std::find_if(r.params.begin(), r.params.end(), [](const auto& kv) { return kv.first == "p"; });
    const std::string modulus =
        PolyZp(std::vector<std::uint64_t>(r.modulus.begin(), r.modulus.end()), static_cast<std::uint32_t>(p->second))
            .to_string();
    std::ostringstream os;
    os << std::left << std::setw(12) << r.subject << "  modulus=" << std::setw(16) << modulus
       << "  checks=" << std::setw(6) << r.checks.size() << "  passed=" << std::setw(6) << passed << "  "
       << (r.all_pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

unsigned worker_count(const CliConfig& cfg, std::size_t tasks) {
    unsigned jobs = cfg.jobs != 0 ? cfg.jobs : std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks, 1)));
}

int exit_for(bool all_pass) { return all_pass ? kExitPass : kExitFail; }

}  // namespace

VerificationReport field_suite(const Field& field, Strategy strategy) {
    const SymmetricProfile profile =
        strategy == Strategy::Naive ? naive_profile(field) : esp_all_product(field);
    VerificationReport report = field_report(field);
    report.append(verify_generalized_wilson(profile));
    report.append(verify_vieta_evaluation(profile));
    if (field.q() >= 5) report.checks.push_back(verify_wolstenholme_field(profile));
    if (strategy == Strategy::Both) {
        for (std::uint64_t k = 1; k <= field.q() - 1; ++k) {
            if (binomial_saturating(field.q() - 1, k) > kNaiveSubsetBudget) continue;
            CheckResult c{"naive_agreement",
                          {{"p", field.p()}, {"n", field.n()}, {"q", field.q()}, {"k", static_cast<std::int64_t>(k)}},
                          false,
                          std::to_string(profile.s(k).encoding()),
                          std::to_string(esp_naive(field, k).encoding())};
            c.pass = c.expected == c.actual;
            report.checks.push_back(std::move(c));
        }
    }
    return report;
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const Field field = field_from(cfg);
    const VerificationReport report = field_suite(field, cfg.strategy);
    if (cfg.json) {
        out << dump(to_json(report));
    } else {
        out << field.name() << " modulus " << field.modulus().to_string() << '\n'
            << render_text(report) << (report.all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return exit_for(report.all_pass());
}

int run_sweep(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.max_q) throw UsageError("--max-q is required");
    if (*cfg.max_q > kMaxSuiteOrder) {
        throw UsageError("--max-q above the supported order " + std::to_string(kMaxSuiteOrder));
    }
    const std::vector<PrimePower> fields = prime_powers_between(3, *cfg.max_q);
    if (fields.empty()) throw UsageError("no prime powers q with 3 <= q <= " + std::to_string(*cfg.max_q));

    std::vector<VerificationReport> reports(fields.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < fields.size(); i = next++) {
            reports[i] = field_suite(make_field(fields[i].p, fields[i].n), cfg.strategy);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < worker_count(cfg, fields.size()); ++w) pool.emplace_back(worker);
        worker();
    }

    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_pass(); });
    if (cfg.json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& r : reports) doc.push_back(to_json(r));
        out << dump(doc);
    } else {
        std::size_t passed = 0;
        for (const auto& r : reports) {
            out << summary_line(r);
            passed += r.all_pass() ? 1 : 0;
        }
        out << "sweep 3 <= q <= " << *cfg.max_q << ": " << passed << "/" << reports.size()
            << " fields passed\n";
    }
    return exit_for(all_pass);
}

int run_table(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const Field field = field_from(cfg);
    const SymmetricProfile profile = esp_all_product(field);
    const VerificationReport report = verify_generalized_wilson(profile);

    if (cfg.json) {
        nlohmann::ordered_json doc = to_json(report);
        const nlohmann::ordered_json all_pass = doc["all_pass"];
        doc.erase("all_pass");
        doc["profile"] = to_json(profile);
        doc["all_pass"] = all_pass;
        out << dump(doc);
        return exit_for(report.all_pass());
    }

    std::vector<std::string> coeff_text;
    std::size_t coeff_width = std::string("coeffs").size();
    for (const FieldElement& s : profile.values) {
        coeff_text.push_back(field.format(s));
        coeff_width = std::max(coeff_width, coeff_text.back().size());
    }
    const int num_width = std::max<int>(9, static_cast<int>(std::to_string(field.q()).size()));
    out << field.name() << " modulus " << field.modulus().to_string() << '\n';
    out << std::right << std::setw(num_width) << "k" << "  " << std::setw(num_width) << "s_k" << "  "
        << std::left << std::setw(static_cast<int>(coeff_width)) << "coeffs" << "  " << std::right
        << std::setw(num_width) << "predicted" << "  match\n";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const CheckResult& c = report.checks[i];
        out << std::right << std::setw(num_width) << (i + 1) << "  " << std::setw(num_width) << c.actual
            << "  " << std::left << std::setw(static_cast<int>(coeff_width)) << coeff_text[i] << "  "
            << std::right << std::setw(num_width) << c.expected << "  " << (c.pass ? "ok" : "FAIL") << '\n';
    }
    return exit_for(report.all_pass());
}

int run_wilson(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.max_p) throw UsageError("--max-p is required");
    if (*cfg.max_p < 3) throw UsageError("--max-p must be at least 3");
    if (*cfg.max_p > kMaxSweepPrime) {
        throw UsageError("--max-p above the supported bound " + std::to_string(kMaxSweepPrime));
    }
    VerificationReport report;
    report.subject = "wilson";
    report.params = {{"max_p", static_cast<std::int64_t>(*cfg.max_p)}};
    for (std::uint64_t p : primes_up_to(*cfg.max_p)) {
        if (p >= 3) report.checks.push_back(verify_wilson_prime(p));
    }
    out << (cfg.json ? dump(to_json(report)) : render_text(report));
    return exit_for(report.all_pass());
}

int run_wolstenholme(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.max_p) throw UsageError("--max-p is required");
    const std::uint64_t lowest = cfg.allow_negative_control ? 3 : 5;
    if (*cfg.max_p < lowest) {
        throw UsageError("--max-p must be at least " + std::to_string(lowest) +
                         (cfg.allow_negative_control ? "" : " (p = 3 needs --allow-negative-control)"));
    }
    if (*cfg.max_p > kMaxSweepPrime) {
        throw UsageError("--max-p above the supported bound " + std::to_string(kMaxSweepPrime));
    }
    VerificationReport report;
    report.subject = "wolstenholme";
    report.params = {{"max_p", static_cast<std::int64_t>(*cfg.max_p)}};
    for (std::uint64_t p : primes_up_to(*cfg.max_p)) {
        if (p >= lowest) {
            report.checks.push_back(verify_wolstenholme_classical(p, cfg.allow_negative_control));
        }
    }
    out << (cfg.json ? dump(to_json(report)) : render_text(report));
    return exit_for(report.all_pass());
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-field Wilson and Wolstenholme identity verifier", "gfwilson"};
    app.require_subcommand(1);

    CliConfig cfg;
    const std::map<std::string, Strategy> strategies{
        {"product", Strategy::Product}, {"naive", Strategy::Naive}, {"both", Strategy::Both}};
    std::string strategy_name = "product";
    auto add_strategy = [&](CLI::App* sub) {
        sub->add_option("--strategy", strategy_name, "s_k source")
            ->check(CLI::IsMember({"product", "naive", "both"}))
            ->capture_default_str();
    };

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", cfg.json, "Print a JSON report");
        sub->add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)");
    };
    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "Characteristic (prime)")->required();
        sub->add_option("--n", cfg.n, "Extension degree")->capture_default_str();
        add_strategy(sub);
    };

    CLI::App* verify = app.add_subcommand("verify", "Run the identity suite on GF(p^n)");
    add_field(verify);
    add_common(verify);
    CLI::App* table = app.add_subcommand("table", "Print s_k and its prediction for k = 1..q-1");
    add_field(table);
    add_common(table);
    CLI::App* sweep = app.add_subcommand("sweep", "Run the suite on every prime power 3 <= q <= max-q");
    sweep->add_option("--max-q", cfg.max_q, "Largest field order")->required();
    add_strategy(sweep);
    add_common(sweep);
    CLI::App* wilson = app.add_subcommand("wilson", "Check (p-1)! = -1 mod p for primes up to max-p");
    wilson->add_option("--max-p", cfg.max_p, "Largest prime")->required();
    add_common(wilson);
    CLI::App* wolst = app.add_subcommand("wolstenholme", "Check Wolstenholme mod p^2 for primes up to max-p");
    wolst->add_option("--max-p", cfg.max_p, "Largest prime")->required();
    wolst->add_flag("--allow-negative-control", cfg.allow_negative_control, "Include p = 3, which must fail");
    add_common(wolst);

    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // help requests exit 0; everything else is a usage error
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    }
    cfg.strategy = strategies.at(strategy_name);

    try {
        if (verify->parsed()) return run_verify(cfg, out, err);
        if (table->parsed()) return run_table(cfg, out, err);
        if (sweep->parsed()) return run_sweep(cfg, out, err);
        if (wilson->parsed()) return run_wilson(cfg, out, err);
        return run_wolstenholme(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace gfwilson::cli
