#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wentropy/checks.hpp"
#include "wentropy/empirical.hpp"
#include "wentropy/entropy.hpp"
#include "wentropy/error.hpp"
#include "wentropy/gof.hpp"
#include "wentropy/io.hpp"
#include "wentropy/moments.hpp"
#include "wentropy/verify.hpp"

using json = nlohmann::ordered_json;
using namespace wentropy;

namespace {

constexpr const char* kGrammar = R"(Distributions:
  exp(rate)             pareto(shape,scale)    uniform(lower,upper)
  power(shape,upper)    rayleigh(rate)         weibull(shape[,scale])
  gamma(shape[,scale])  affine(<dist>,scale,shift)   (scale*X + shift)
Names are case-insensitive.

Exit status: 0 ok, 1 domain error, 2 usage error. Errors are reported on
stderr as a single line "error: code=<code> message=<text>".)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Text, Csv };

struct Common {
    std::string format = "json";
    double alpha = 0.26;
    double beta = 1.25;

    Format fmt() const {
        if (format == "text") return Format::Text;
        if (format == "csv") return Format::Csv;
        return Format::Json;
    }
    EntropyOrder order() const { return EntropyOrder::make(alpha, beta); }
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("WENTROPY_SEED")) {
        try {
            std::size_t pos = 0;
            const auto v = std::stoull(env, &pos);
            if (pos == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError("WENTROPY_SEED must be a non-negative integer");
    }
    return 42;
}

EstimatorVariant variant_from(const std::string& text) {
    if (auto v = parse_variant(text)) return *v;
    throw UsageError("unknown estimator variant '" + text + "' (segment-sum | exact-step)");
}

// Prints a flat record: JSON object, "key: value" lines, or a two-line CSV.
void emit_record(const json& rec, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << rec.dump(2) << "\n";
        return;
    }
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (fmt == Format::Text) {
        for (const auto& [k, v] : rec.items()) std::cout << k << ": " << scalar(v) << "\n";
        return;
    }
    bool first = true;
    for (const auto& [k, v] : rec.items()) {
        std::cout << (first ? "" : ",") << k;
        first = false;
    }
    std::cout << "\n";
    first = true;
    for (const auto& [k, v] : rec.items()) {
        std::cout << (first ? "" : ",") << scalar(v);
        first = false;
    }
    std::cout << "\n";
}

// Rows with identical keys: JSON array, aligned text, or CSV.
void emit_rows(const json& rows, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << rows.dump(2) << "\n";
        return;
    }
    if (rows.empty()) return;
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    const char* sep = fmt == Format::Csv ? "," : "\t";
    bool first = true;
    for (const auto& [k, v] : rows.front().items()) {
        std::cout << (first ? "" : sep) << k;
        first = false;
    }
    std::cout << "\n";
    for (const auto& row : rows) {
        first = true;
        for (const auto& [k, v] : row.items()) {
            std::cout << (first ? "" : sep) << scalar(v);
            first = false;
        }
        std::cout << "\n";
    }
}

json entropy_json(const EntropyValue& v, const Distribution& d) {
    json out{{"measure", std::string(to_string(v.kind))},
             {"distribution", d.to_string()},
             {"alpha", v.order.alpha()},
             {"beta", v.order.beta()},
             {"value", v.value},
             {"integral", v.integral()}};
    if (v.t) out["t"] = *v.t;
    return out;
}

json bounds_json(const BoundReport& r) {
    json items = json::array();
    for (const auto& it : r.items) {
        json j{{"name", it.name}, {"statement", it.statement}, {"applicable", it.applicable}};
        if (it.applicable) {
            j["lhs"] = it.lhs;
            j["rhs"] = it.rhs;
            j["margin"] = it.margin;
        } else {
            j["reason"] = it.reason;
        }
        items.push_back(j);
    }
    return items;
}

QuadratureConfig quad_config(bool no_closed_form) {
    QuadratureConfig q;
    q.allow_closed_form = !no_closed_form;
    return q;
}

int emit_bounds(const BoundReport& report, Format fmt) {
    if (fmt == Format::Json) {
        json out{{"all_hold", report.all_hold()}, {"items", bounds_json(report)}};
        std::cout << out.dump(2) << "\n";
    } else {
        json rows = json::array();
        for (const auto& it : report.items) {
            rows.push_back(json{{"name", it.name},
                                {"applicable", it.applicable},
                                {"lhs", it.applicable ? json(it.lhs) : json("")},
                                {"rhs", it.applicable ? json(it.rhs) : json("")},
                                {"margin", it.applicable ? json(it.margin) : json("")}});
        }
        emit_rows(rows, fmt);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized weighted survival and failure entropies, and an exponentiality test"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();

    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--alpha", common.alpha, "Order alpha")->capture_default_str();
        sub->add_option("--beta", common.beta, "Order beta")->capture_default_str();
    };

    std::string dist_text, measure, data_path, table_path, out_path, variant_text = "segment-sum";
    std::optional<std::string> column;
    std::optional<double> t;
    int n_count = 1;
    bool no_closed_form = false;
    double level = 0.05;
    std::size_t replications = 10000;
    std::optional<std::uint64_t> seed;
    unsigned workers = 0;
    bool no_simulate = false;
    std::string sizes_text, levels_text = "0.01,0.05,0.10";
    int draws = 20;
    double tolerance = 1e-8;

    // entropy
    auto* entropy = app.add_subcommand("entropy", "Static entropy measures and bound checks");
    entropy->add_option("--dist", dist_text, "Distribution, e.g. exp(1)")->required();
    add_order(entropy);
    entropy->add_option("--measure", measure, "gwse | gwfe | gse | gfe | gwse-min | bounds")
        ->check(CLI::IsMember({"gwse", "gwfe", "gse", "gfe", "gwse-min", "bounds"}))
        ->required();
    entropy->add_option("--n", n_count, "Sample size for gwse-min (GWSE of the minimum)");
    entropy->add_option("--t", t, "Time for the dynamic bounds");
    entropy->add_flag("--no-closed-form", no_closed_form, "Force quadrature");

    // dynamic
    auto* dynamic = app.add_subcommand("dynamic", "Dynamic measures, WMRL/WMIT and monotonicity");
    dynamic->add_option("--dist", dist_text, "Distribution")->required();
    add_order(dynamic);
    dynamic->add_option("--measure", measure, "gdwse | gdwfe | gdse | gdfe | gdwfe-max | wmrl | wmit | monotonicity")
        ->check(CLI::IsMember({"gdwse", "gdwfe", "gdse", "gdfe", "gdwfe-max", "wmrl", "wmit", "monotonicity"}))
        ->required();
    dynamic->add_option("--t", t, "Time t (required except for monotonicity)");
    dynamic->add_option("--n", n_count, "Sample size for gdwfe-max (GDWFE of the maximum)");
    dynamic->add_flag("--no-closed-form", no_closed_form, "Force quadrature");

    // empirical
    auto* empirical = app.add_subcommand("empirical", "Empirical GWSE/GWFE of a data file");
    empirical->add_option("--data", data_path, "One value per line, or CSV with --column")->required();
    empirical->add_option("--column", column, "CSV column name");
    add_order(empirical);
    empirical->add_option("--measure", measure, "gwse | gwfe")
        ->check(CLI::IsMember({"gwse", "gwfe"}))
        ->default_val("gwse");
    empirical->add_option("--variant", variant_text, "segment-sum | exact-step")->capture_default_str();

    auto add_mc = [&](CLI::App* sub) {
        sub->add_option("--B,--replications", replications, "Monte-Carlo replications")->capture_default_str();
        sub->add_option("--seed", seed, "Seed (default: $WENTROPY_SEED or 42)");
        sub->add_option("--workers", workers, "Worker threads (0 = all cores)")->capture_default_str();
        sub->add_option("--variant", variant_text, "segment-sum | exact-step")->capture_default_str();
        add_order(sub);
    };

    // gof-test
    auto* gof = app.add_subcommand("gof-test", "Test a data file for exponentiality");
    gof->add_option("--data", data_path, "One value per line, or CSV with --column")->required();
    gof->add_option("--column", column, "CSV column name");
    gof->add_option("--level", level, "Significance level")->capture_default_str();
    gof->add_option("--table", table_path, "Critical table (.json or .csv)");
    gof->add_flag("--no-simulate", no_simulate, "Fail instead of simulating a missing critical value");
    add_mc(gof);

    // critical-table
    auto* crit = app.add_subcommand("critical-table", "Simulate critical values of T");
    crit->add_option("--n", sizes_text, "Sample sizes, e.g. 4:30,35:100:5")->required();
    crit->add_option("--levels", levels_text, "Levels")->capture_default_str();
    crit->add_option("--out", out_path, "Output file (.json or .csv); stdout when omitted");
    add_mc(crit);

    // power
    auto* power = app.add_subcommand("power", "Power of the test against an alternative");
    power->add_option("--alt", dist_text, "Alternative distribution, e.g. weibull(2)")->required();
    power->add_option("--n", sizes_text, "Sample sizes")->required();
    power->add_option("--levels", levels_text, "Levels")->capture_default_str();
    power->add_option("--table", table_path, "Critical table; simulated when absent");
    add_mc(power);

    // verify
    auto* verify = app.add_subcommand("verify", "Closed-form vs quadrature oracle suite");
    verify->add_option("--seed", seed, "Seed for the random draws");
    verify->add_option("--draws", draws, "Draws per cell")->capture_default_str();
    verify->add_option("--tolerance", tolerance, "Relative tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: code=usage message=" << e.what() << "\n";
        return 2;
    }

    const Format fmt = common.fmt();
    try {
        auto mc_config = [&] {
            TestConfig cfg;
            cfg.order = common.order();
            cfg.level = level;
            cfg.replications = replications;
            cfg.seed = seed ? *seed : default_seed();
            cfg.variant = variant_from(variant_text);
            cfg.workers = workers;
            cfg.simulate_missing = !no_simulate;
            cfg.validate();
            return cfg;
        };

        if (*entropy) {
            const auto d = parse_distribution(dist_text);
            const auto order = common.order();
            const auto q = quad_config(no_closed_form);
            if (measure == "bounds") return emit_bounds(bound_check(d, order, t, q), fmt);
            EntropyValue v = measure == "gwse"  ? gwse(d, order, q)
                             : measure == "gwfe" ? gwfe(d, order, q)
                             : measure == "gse"  ? gse(d, order, q)
                             : measure == "gfe"  ? gfe(d, order, q)
                                                 : gwse_first_order_stat(d, order, n_count, q);
            auto rec = entropy_json(v, d);
            if (measure == "gwse-min") rec["n"] = n_count;
            emit_record(rec, fmt);
            return 0;
        }

        if (*dynamic) {
            const auto d = parse_distribution(dist_text);
            const auto order = common.order();
            const auto q = quad_config(no_closed_form);
            if (measure == "monotonicity") {
                const auto grid = default_monotonicity_grid(d);
                const auto m = classify_gdwse_monotonicity(d, order, grid, q);
                emit_record(json{{"measure", "gdwse-monotonicity"},
                                 {"distribution", d.to_string()},
                                 {"alpha", order.alpha()},
                                 {"beta", order.beta()},
                                 {"grid_from", grid.front()},
                                 {"grid_to", grid.back()},
                                 {"grid_points", grid.size()},
                                 {"class", std::string(to_string(m))}},
                            fmt);
                return 0;
            }
            if (!t) throw UsageError("--t is required for " + measure);
            if (measure == "wmrl" || measure == "wmit") {
                const double v = measure == "wmrl" ? wmrl(d, *t, q) : wmit(d, *t, q);
                emit_record(json{{"measure", measure}, {"distribution", d.to_string()}, {"t", *t}, {"value", v}},
                            fmt);
                return 0;
            }
            EntropyValue v = measure == "gdwse"  ? gdwse(d, order, *t, q)
                             : measure == "gdwfe" ? gdwfe(d, order, *t, q)
                             : measure == "gdse"  ? gdse(d, order, *t, q)
                             : measure == "gdfe"  ? gdfe(d, order, *t, q)
                                                  : gdwfe_max_order_stat(d, order, n_count, *t, q);
            auto rec = entropy_json(v, d);
            if (measure == "gdwfe-max") rec["n"] = n_count;
            emit_record(rec, fmt);
            return 0;
        }

        if (*empirical) {
            const auto s = read_sample(data_path, column);
            const auto order = common.order();
            const auto variant = variant_from(variant_text);
            const double v = measure == "gwse" ? empirical_gwse(s, order, variant) : empirical_gwfe(s, order, variant);
            emit_record(json{{"measure", "empirical-" + measure},
                             {"n", s.size()},
                             {"alpha", order.alpha()},
                             {"beta", order.beta()},
                             {"variant", std::string(to_string(variant))},
                             {"value", v}},
                        fmt);
            return 0;
        }

        if (*gof) {
            const auto cfg = mc_config();
            const auto s = read_sample(data_path, column);
            std::optional<CriticalTable> table;
            if (!table_path.empty()) table = read_critical_table(table_path);
            const auto out = run_test(s, cfg, table ? &*table : nullptr);
            json rec{{"n", out.n},
                     {"lambda_hat", out.stat.lambda_hat},
                     {"empirical_gwse", out.stat.empirical},
                     {"plug_in_gwse", out.stat.plug_in},
                     {"D", out.stat.D},
                     {"T", out.stat.T},
                     {"level", out.level},
                     {"critical_value", out.critical_value},
                     {"critical_value_source", out.simulated_critical_value ? "simulated" : "table"},
                     {"decision", std::string(to_string(out.decision))}};
            if (out.simulated_critical_value) {
                rec["seed"] = cfg.seed;
                rec["replications"] = cfg.replications;
            }
            emit_record(rec, fmt);
            return 0;
        }

        if (*crit) {
            const auto cfg = mc_config();
            const auto sizes = parse_size_list(sizes_text);
            const auto levels = parse_real_list(levels_text);
            for (int n : sizes) {
                if (n < 2) throw UsageError("critical values need n >= 2");
            }
            const auto table = critical_values(sizes, levels, cfg);
            if (!out_path.empty()) {
                write_critical_table(table, out_path);
                emit_record(json{{"written", out_path}, {"entries", table.entries().size()}}, fmt);
            } else {
                std::cout << (fmt == Format::Csv ? critical_table_to_csv(table) : critical_table_to_json(table));
            }
            return 0;
        }

        if (*power) {
            const auto cfg = mc_config();
            const auto alt = parse_distribution(dist_text);
            const auto sizes = parse_size_list(sizes_text);
            const auto levels = parse_real_list(levels_text);
            std::optional<CriticalTable> table;
            if (!table_path.empty()) table = read_critical_table(table_path);
            json rows = json::array();
            for (const auto& r : power_study(alt, sizes, levels, cfg, table ? &*table : nullptr)) {
                rows.push_back(json{{"alternative", r.alternative},
                                    {"n", r.n},
                                    {"level", r.level},
                                    {"critical_value", r.critical_value},
                                    {"power", r.power},
                                    {"replications", r.replications},
                                    {"standard_error", r.standard_error}});
            }
            emit_rows(rows, fmt);
            return 0;
        }

        if (*verify) {
            const auto report = closed_form_suite(seed ? *seed : 20240601, draws, tolerance);
            if (fmt == Format::Json) {
                json cells = json::array();
                for (const auto& c : report.cells) {
                    cells.push_back(json{{"quantity", c.quantity},
                                         {"family", c.family},
                                         {"formula", c.formula},
                                         {"draws", c.draws},
                                         {"passed", c.passed},
                                         {"max_rel_error", c.max_rel_error},
                                         {"pass", c.pass()}});
                }
                std::cout << json{{"tolerance", report.tolerance}, {"all_pass", report.all_pass()}, {"cells", cells}}
                                 .dump(2)
                          << "\n";
            } else {
                json rows = json::array();
                for (const auto& c : report.cells) {
                    rows.push_back(json{{"quantity", c.quantity},
                                        {"family", c.family},
                                        {"passed", std::to_string(c.passed) + "/" + std::to_string(c.draws)},
                                        {"max_rel_error", c.max_rel_error},
                                        {"result", c.pass() ? "PASS" : "FAIL"}});
                }
                emit_rows(rows, fmt);
            }
            return report.all_pass() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: code=usage message=" << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: code=" << to_string(e.code()) << " message=" << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: code=internal message=" << e.what() << "\n";
        return 1;
    }
    return 0;
}
