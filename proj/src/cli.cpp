#include "knoedel/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "knoedel/closed_forms.hpp"
#include "knoedel/monte_carlo.hpp"
#include "knoedel/verify.hpp"
#include "knoedel/walk.hpp"

namespace knoedel::cli {
namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommonFlags {
    std::string format = "csv";
    int precision = 12;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--precision", flags.precision, "Significant digits of the advisory decimal column")
        ->check(CLI::Range(1, 100));
}

struct ModelFlags {
    std::string model;
    std::string p;
};

void add_model(CLI::App* cmd, ModelFlags& flags) {
    cmd->add_option("--model", flags.model, "double-large | double-small")
        ->required()
        ->check(CLI::IsMember({"double-large", "double-small"}));
    cmd->add_option("--p", flags.p, "Red-arrival probability as a fraction (default: balanced)");
}

WalkModel make_model(const ModelFlags& flags) {
    const ModelKind kind = parse_model_token(flags.model);
    if (flags.p.empty()) return WalkModel::balanced(kind);
    try {
        return WalkModel(kind, ExactRational::parse(flags.p));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--p: ") + e.what());
    }
}

void check_steps(unsigned long steps) {
    const unsigned long cap = max_steps_cap();
    if (steps > cap) {
        throw UsageError("--steps " + std::to_string(steps) + " exceeds the limit " + std::to_string(cap) +
                         " (set KNOEDEL_MAX_STEPS to raise it)");
    }
}

json state_json(State s) {
    if (s.is_beta()) return "beta";
    return s.index();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct Record {
    std::string model;
    std::uint64_t step = 0;
    State state = State::numbered(0);
    ExactRational value;
    std::string source;
    std::string note;
};

json record_json(const Record& r, int precision) {
    json j = {{"model", r.model},
              {"step", r.step},
              {"state", state_json(r.state)},
              {"value", r.value.to_fraction_string()},
              {"decimal", r.value.to_decimal_string(precision)},
              {"source", r.source}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

int cmd_table(const ModelFlags& mf, unsigned long steps, const CommonFlags& cf, std::ostream& out) {
    check_steps(steps);
    const WalkModel model = make_model(mf);
    const auto rows = dp_distribution(model, steps);
    const std::string token(model_token(model.kind()));
    if (cf.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            for (const auto& [state, mass] : row.support()) {
                arr.push_back(record_json({token, row.step(), state, mass, "dp", ""}, cf.precision));
            }
        }
        out << arr.dump(2) << '\n';
        return kSuccess;
    }
    out << "model,step,state,num,den,decimal\n";
    for (const auto& row : rows) {
        for (const auto& [state, mass] : row.support()) {
            out << token << ',' << row.step() << ',' << state.to_string() << ',' << mass.numerator().get_str() << ','
                << mass.denominator().get_str() << ',' << mass.to_decimal_string(cf.precision) << '\n';
        }
    }
    return kSuccess;
}

int cmd_coeff(const ModelFlags& mf, const std::string& state_token, unsigned long steps, const std::string& source,
              const CommonFlags& cf, std::ostream& out) {
    const WalkModel model = make_model(mf);
    State state = State::numbered(0);
    try {
        state = State::parse(state_token);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--state: ") + e.what());
    }
    Record rec{std::string(model_token(model.kind())), steps, state, {}, source, ""};
    if (static_cast<int>(steps % 3) != residue_class(model.kind(), state)) {
        rec.note = "state " + state.to_string() + " is unreachable at this step count (residue class mod 3)";
    } else if (source == "dp") {
        check_steps(steps);
        rec.value = dp_distribution(model, steps).back().mass(state);
    } else {
        if (!model.is_balanced()) throw UsageError("closed forms require the balanced probabilities");
        rec.value = closed_form_probability(model, state, steps);
    }
    if (cf.format == "json") {
        out << record_json(rec, cf.precision).dump(2) << '\n';
        return kSuccess;
    }
    out << "model,step,state,num,den,decimal,source,note\n";
    out << rec.model << ',' << rec.step << ',' << state.to_string() << ',' << rec.value.numerator().get_str() << ','
        << rec.value.denominator().get_str() << ',' << rec.value.to_decimal_string(cf.precision) << ',' << rec.source
        << ',' << rec.note << '\n';
    return kSuccess;
}

int cmd_series(const std::string& which, std::size_t order, const CommonFlags& cf, std::ostream& out) {
    if (order > kMaxSeriesOrder) throw UsageError("--order must not exceed " + std::to_string(kMaxSeriesOrder));
    TruncatedSeries s;
    if (which == "t") s = t_series(order);
    else if (which == "inv1mt") s = inv_one_minus_t_series(order);
    else if (which == "u1") s = u1_series(order);
    else if (which == "f0") s = f0_series(order);
    else s = g0_series(order);

    if (cf.format == "json") {
        json coeffs = json::array();
        for (const auto& c : s.coefficients()) coeffs.push_back(c.to_fraction_string());
        out << json{{"series", which}, {"order", order}, {"coefficients", coeffs}}.dump(2) << '\n';
        return kSuccess;
    }
    out << "series,k,num,den,decimal\n";
    for (std::size_t k = 0; k < s.order(); ++k) {
        out << which << ',' << k << ',' << s[k].numerator().get_str() << ',' << s[k].denominator().get_str() << ','
            << s[k].to_decimal_string(cf.precision) << '\n';
    }
    return kSuccess;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
    const auto results = run_verification(options);
    std::size_t failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checks << " checks)";
        if (!r.passed) {
            out << ": " << r.first_failure;
            ++failed;
        }
        out << '\n';
    }
    out << (failed == 0 ? "all " + std::to_string(results.size()) + " suites passed"
                        : std::to_string(failed) + " of " + std::to_string(results.size()) + " suites failed")
        << '\n';
    return failed == 0 ? kSuccess : kVerificationFailed;
}

int cmd_simulate(const ModelFlags& mf, unsigned long steps, std::uint64_t trials, std::uint64_t seed,
                 unsigned threads, const CommonFlags& cf, std::ostream& out) {
    check_steps(steps);
    if (trials == 0) throw UsageError("--trials must be positive");
    const WalkModel model = make_model(mf);
    SimConfig config{model, steps, trials, seed, threads};
    EmpiricalDistribution emp;
    try {
        emp = simulate(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto exact = dp_distribution(model, steps).back();

    std::vector<State> states;
    for (const auto& [s, m] : exact.support()) states.push_back(s);
    for (const auto& [s, c] : emp.counts) {
        if (exact.mass(s).is_zero()) states.push_back(s);
    }
    std::sort(states.begin(), states.end());

    const std::string token(model_token(model.kind()));
    json arr = json::array();
    if (cf.format == "csv") {
        out << "model,step,state,count,trials,empirical,exact_num,exact_den,exact_decimal,deviation,bound,within\n";
    }
    for (State s : states) {
        const ExactRational p = exact.mass(s);
        const double pd = p.to_double();
        const double freq = emp.frequency(s);
        const double dev = std::fabs(freq - pd);
        const double bound = 4.0 * std::sqrt(pd * (1.0 - pd) / static_cast<double>(trials));
        const bool within = dev <= bound;
        if (cf.format == "json") {
            arr.push_back({{"model", token},
                           {"step", steps},
                           {"state", state_json(s)},
                           {"count", emp.count(s)},
                           {"trials", trials},
                           {"empirical", freq},
                           {"value", p.to_fraction_string()},
                           {"decimal", p.to_decimal_string(cf.precision)},
                           {"deviation", dev},
                           {"bound", bound},
                           {"within", within},
                           {"source", "monte-carlo"}});
        } else {
            out << token << ',' << steps << ',' << s.to_string() << ',' << emp.count(s) << ',' << trials << ','
                << format_double(freq) << ',' << p.numerator().get_str() << ',' << p.denominator().get_str() << ','
                << p.to_decimal_string(cf.precision) << ',' << format_double(dev) << ',' << format_double(bound) << ','
                << (within ? "yes" : "no") << '\n';
        }
    }
    if (cf.format == "json") out << arr.dump(2) << '\n';
    return kSuccess;
}

}  // namespace

unsigned long max_steps_cap() {
    if (const char* env = std::getenv("KNOEDEL_MAX_STEPS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return kDefaultMaxSteps;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration of the ternary Knoedel bin-packing walks", "knoedel"};
    app.require_subcommand(1);

    CommonFlags table_cf, coeff_cf, series_cf, sim_cf;
    ModelFlags table_mf, coeff_mf, sim_mf;

    unsigned long table_steps = 0;
    auto* table = app.add_subcommand("table", "Exact state distributions for steps 0..N (dynamic programming)");
    add_model(table, table_mf);
    table->add_option("--steps", table_steps, "Largest step count")->required();
    add_common(table, table_cf);

    std::string coeff_state, coeff_source = "dp";
    unsigned long coeff_steps = 0;
    auto* coeff = app.add_subcommand("coeff", "Probability of one state after a given number of steps");
    add_model(coeff, coeff_mf);
    coeff->add_option("--state", coeff_state, "Box count or 'beta'")->required();
    coeff->add_option("--steps", coeff_steps, "Step count")->required();
    coeff->add_option("--source", coeff_source, "dp | closed-form")->check(CLI::IsMember({"dp", "closed-form"}));
    add_common(coeff, coeff_cf);

    std::string series_which;
    std::size_t series_order = 32;
    auto* series = app.add_subcommand("series", "Coefficients of a series in x = z^3");
    series->add_option("--which", series_which, "t | inv1mt | u1 | f0 | g0")
        ->required()
        ->check(CLI::IsMember({"t", "inv1mt", "u1", "f0", "g0"}));
    series->add_option("--order", series_order, "Number of coefficients");
    add_common(series, series_cf);

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run every identity suite; exit 1 on any failure");
    verify->add_option("--order", verify_opts.order, "Series order and Girard-Waring bound");
    verify->add_option("--max-steps", verify_opts.max_steps, "Largest step count in the DP grids");
    verify->add_flag("--inject-fault", verify_opts.inject_fault, "Negative control: corrupt one coefficient");

    unsigned long sim_steps = 0;
    std::uint64_t sim_trials = 0, sim_seed = kDefaultSeed;
    unsigned sim_threads = 0;
    auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo against the exact distribution");
    add_model(sim, sim_mf);
    sim->add_option("--steps", sim_steps, "Step count")->required();
    sim->add_option("--trials", sim_trials, "Number of independent walks")->required();
    sim->add_option("--seed", sim_seed, "SplitMix64 master seed");
    sim->add_option("--threads", sim_threads, "Worker threads (0 = hardware); output does not depend on it");
    add_common(sim, sim_cf);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << "run 'knoedel " << sub->get_name() << " --help' for usage\n";
        }
        return kUsageError;
    }

    try {
        if (*table) return cmd_table(table_mf, table_steps, table_cf, out);
        if (*coeff) return cmd_coeff(coeff_mf, coeff_state, coeff_steps, coeff_source, coeff_cf, out);
        if (*series) return cmd_series(series_which, series_order, series_cf, out);
        if (*verify) return cmd_verify(verify_opts, out);
        if (*sim) return cmd_simulate(sim_mf, sim_steps, sim_trials, sim_seed, sim_threads, sim_cf, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace knoedel::cli
