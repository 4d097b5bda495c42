#include "wentropy/gof.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "wentropy/error.hpp"
#include "wentropy/sampler.hpp"

namespace wentropy {

void TestConfig::validate() const {
    if (!(level > 0.0 && level < 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "significance level must lie in (0, 1)");
    }
    if (replications < 100) {
        throw Error(ErrorCode::InvalidParameter, "at least 100 Monte-Carlo replications are required");
    }
}

namespace detail {

double statistic_T(std::span<const double> sorted, const EntropyOrder& order, EstimatorVariant variant) {
    double total = 0.0;
    for (double v : sorted) total += v;
    const double mean = total / static_cast<double>(sorted.size());
    const double sum = empirical_survival_sum(sorted, order.gamma(), variant);
    const double empirical = std::log(sum) / order.delta();
    const double plug_in = -2.0 / order.delta() * std::log(order.gamma() / mean);
    return std::exp(-std::abs(plug_in - empirical));
}

}  // namespace detail

Statistic statistic(const Sample& s, const EntropyOrder& order, EstimatorVariant variant) {
    if (s.size() < 2) throw Error(ErrorCode::InvalidParameter, "the test statistic needs at least two observations");
    const double mean = s.mean();
    if (!(mean > 0.0)) throw Error(ErrorCode::DegenerateSample, "sample mean must be positive");
    Statistic out{};
    out.lambda_hat = 1.0 / mean;
    out.empirical = empirical_gwse(s, order, variant);
    out.plug_in = -2.0 / order.delta() * std::log(out.lambda_hat * order.gamma());
    out.D = std::abs(out.empirical - out.plug_in);
    out.T = std::exp(-out.D);
    return out;
}

// ---- CriticalTable -----------------------------------------------------------

namespace {

bool same_level(double a, double b) { return std::abs(a - b) <= 1e-12; }

}  // namespace

void CriticalTable::set(int n, double level, double value) {
    if (!(value > 0.0 && value < 1.0)) {
        std::ostringstream os;
        os << "critical value must lie in (0, 1), got " << value << " for n=" << n;
        throw Error(ErrorCode::InvalidParameter, os.str());
    }
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const Entry& e) { return e.n == n && same_level(e.level, level); });
    if (it != entries_.end()) {
        it->value = value;
        return;
    }
    entries_.push_back({n, level, value});
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.n != b.n ? a.n < b.n : a.level < b.level;
    });
}

std::optional<double> CriticalTable::find(int n, double level) const {
    for (const auto& e : entries_) {
        if (e.n == n && same_level(e.level, level)) return e.value;
    }
    return std::nullopt;
}

std::vector<int> CriticalTable::sizes() const {
    std::vector<int> out;
    for (const auto& e : entries_) {
        if (out.empty() || out.back() != e.n) out.push_back(e.n);
    }
    return out;
}

bool CriticalTable::monotone_in_level() const {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].n == entries_[i - 1].n && entries_[i].value < entries_[i - 1].value) return false;
    }
    return true;
}

bool CriticalTable::monotone_in_n(double slack) const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            const auto& a = entries_[i];
            const auto& b = entries_[j];
            if (b.n > a.n && same_level(a.level, b.level) && b.value < a.value - slack) return false;
        }
    }
    return true;
}

bool CriticalTable::operator==(const CriticalTable& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& a = entries_[i];
        const auto& b = other.entries_[i];
        if (a.n != b.n || a.level != b.level || a.value != b.value) return false;
    }
    return true;
}

// ---- Simulation ---------------------------------------------------------------

namespace {

constexpr std::uint64_t kAlternativeStreams = 1ULL << 63;

std::uint64_t stream_id(int n, std::size_t replication, std::uint64_t tag) {
    return tag | (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(replication);
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) on a fixed set of workers. Each index
// writes only its own output slot, so the result is independent of the
// partitioning.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i, 0u);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t begin = count * w / workers;
            const std::size_t end = count * (w + 1) / workers;
            for (std::size_t i = begin; i < end; ++i) body(i, w);
        });
    }
}

std::vector<double> simulate(const Distribution& d, int n, const TestConfig& cfg, std::uint64_t tag) {
    if (n < 2) throw Error(ErrorCode::InvalidParameter, "simulated sample size must be at least 2");
    cfg.validate();
    const unsigned workers = resolve_workers(cfg.workers);
    std::vector<double> out(cfg.replications);
    std::vector<std::vector<double>> scratch(workers);
    parallel_for(cfg.replications, workers, [&](std::size_t r, unsigned w) {
        SeededSampler rng(cfg.seed, stream_id(n, r, tag));
        auto& buf = scratch[w];
        draw_n(d, static_cast<std::size_t>(n), rng, buf);
        std::sort(buf.begin(), buf.end());
        out[r] = detail::statistic_T(buf, cfg.order, cfg.variant);
    });
    return out;
}

double lower_quantile(std::vector<double> values, double level) {
    const std::size_t k = lower_quantile_rank(level, values.size());
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k - 1), values.end());
    return values[k - 1];
}

}  // namespace

std::size_t lower_quantile_rank(double level, std::size_t replications) {
    // The epsilon keeps e.g. 0.07 * 100 = 7.000000000000001 at rank 7.
    const double raw = std::ceil(level * static_cast<double>(replications) - 1e-9);
    return std::clamp<std::size_t>(static_cast<std::size_t>(raw), 1, replications);
}

std::vector<double> simulate_null(int n, const TestConfig& cfg) {
    return simulate(Distribution::exponential(1.0), n, cfg, 0);
}

std::vector<double> simulate_statistic(const Distribution& d, int n, const TestConfig& cfg) {
    return simulate(d, n, cfg, kAlternativeStreams);
}

CriticalTable critical_values(std::span<const int> sizes, std::span<const double> levels, const TestConfig& cfg) {
    cfg.validate();
    for (double level : levels) {
        if (!(level > 0.0 && level < 1.0)) throw Error(ErrorCode::InvalidParameter, "levels must lie in (0, 1)");
    }
    CriticalTable table;
    table.provenance = Provenance{cfg.seed, cfg.replications, cfg.order.alpha(), cfg.order.beta(), cfg.variant,
                                  "simulated"};
    for (int n : sizes) {
        if (n < 2) throw Error(ErrorCode::InvalidParameter, "critical values need n >= 2");
        auto values = simulate_null(n, cfg);
        for (double level : levels) table.set(n, level, lower_quantile(values, level));
    }
    return table;
}

std::string_view to_string(Decision d) { return d == Decision::Reject ? "reject" : "fail-to-reject"; }

TestOutcome run_test(const Sample& s, const TestConfig& cfg, const CriticalTable* table) {
    cfg.validate();
    const int n = static_cast<int>(s.size());
    TestOutcome out{};
    out.stat = statistic(s, cfg.order, cfg.variant);
    out.level = cfg.level;
    out.n = n;

    std::optional<double> critical;
    if (table) critical = table->find(n, cfg.level);
    if (!critical) {
        if (!cfg.simulate_missing) {
            std::ostringstream os;
            os << "no critical value for n=" << n << " at level " << cfg.level;
            throw Error(ErrorCode::MissingTableEntry, os.str());
        }
        const int sizes[] = {n};
        const double levels[] = {cfg.level};
        critical = critical_values(sizes, levels, cfg).find(n, cfg.level);
        out.simulated_critical_value = true;
    }
    out.critical_value = *critical;
    out.decision = out.stat.T < out.critical_value ? Decision::Reject : Decision::FailToReject;
    return out;
}

std::vector<PowerResult> power_study(const Distribution& alt, std::span<const int> sizes,
                                     std::span<const double> levels, const TestConfig& cfg,
                                     const CriticalTable* table) {
    cfg.validate();
    std::vector<PowerResult> results;
    for (int n : sizes) {
        const auto stats = simulate_statistic(alt, n, cfg);
        std::optional<std::vector<double>> null_stats;
        for (double level : levels) {
            std::optional<double> critical;
            if (table) critical = table->find(n, level);
            if (!critical) {
                if (!null_stats) null_stats = simulate_null(n, cfg);
                critical = lower_quantile(*null_stats, level);
            }
            const auto rejections = std::count_if(stats.begin(), stats.end(), [&](double t) { return t < *critical; });
            const double b = static_cast<double>(stats.size());
            const double p = static_cast<double>(rejections) / b;
            results.push_back(PowerResult{alt.to_string(), n, level, *critical, p, stats.size(),
                                          std::sqrt(p * (1.0 - p) / b)});
        }
    }
    return results;
}

}  // namespace wentropy
