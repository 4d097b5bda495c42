#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wentropy/distribution.hpp"
#include "wentropy/empirical.hpp"
#include "wentropy/order.hpp"
#include "wentropy/sample.hpp"

namespace wentropy {

// Goodness-of-fit test for exponentiality.
//
// With lambda_hat = 1 / mean, the plug-in GWSE of Exp(lambda_hat) is
// -(2 / (beta - alpha)) log(lambda_hat * gamma). The test statistic is
// T = exp(-|plug-in - empirical GWSE|); H0 is rejected at level p when T
// falls below the lower p-quantile of T's null distribution at sample
// size n. T is scale invariant, so the null is simulated at rate 1.

struct TestConfig {
    EntropyOrder order = EntropyOrder::test_default();
    double level = 0.05;
    std::size_t replications = 10000;
    std::uint64_t seed = 42;
    EstimatorVariant variant = EstimatorVariant::SegmentSum;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// run_test() simulates a missing critical value instead of failing.
    bool simulate_missing = true;

    void validate() const;
};

struct Statistic {
    double lambda_hat;
    double empirical;  ///< empirical GWSE
    double plug_in;    ///< GWSE of Exp(lambda_hat)
    double D;
    double T;
};

Statistic statistic(const Sample& s, const EntropyOrder& order,
                    EstimatorVariant variant = EstimatorVariant::SegmentSum);

namespace detail {
/// T for an already sorted span; the simulation hot path.
double statistic_T(std::span<const double> sorted, const EntropyOrder& order, EstimatorVariant variant);
}

struct Provenance {
    std::uint64_t seed = 0;
    std::size_t replications = 0;
    double alpha = 0.26;
    double beta = 1.25;
    EstimatorVariant variant = EstimatorVariant::SegmentSum;
    std::string source = "simulated";
};

/// Critical values T_{level, n}, keyed by sample size and level.
class CriticalTable {
public:
    struct Entry {
        int n;
        double level;
        double value;
    };

    Provenance provenance;

    /// Inserts or replaces; value must lie in (0, 1).
    void set(int n, double level, double value);
    std::optional<double> find(int n, double level) const;

    /// Entries sorted by (n, level).
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::vector<int> sizes() const;

    /// Level monotonicity (exact) for every n.
    bool monotone_in_level() const;
    /// Non-decreasing in n for each level, up to slack.
    bool monotone_in_n(double slack) const;

    bool operator==(const CriticalTable& other) const;

private:
    std::vector<Entry> entries_;
};

/// Index k = ceil(level * B) of the order statistic used as the lower
/// level-quantile of B simulated values (1-based).
std::size_t lower_quantile_rank(double level, std::size_t replications);

/// B statistics under H0 at sample size n. Replication r uses the stream
/// derived from (seed, n, r), so the result does not depend on workers.
std::vector<double> simulate_null(int n, const TestConfig& cfg);

/// B statistics with samples from an arbitrary distribution.
std::vector<double> simulate_statistic(const Distribution& d, int n, const TestConfig& cfg);

CriticalTable critical_values(std::span<const int> sizes, std::span<const double> levels, const TestConfig& cfg);

enum class Decision { Reject, FailToReject };

std::string_view to_string(Decision d);

struct TestOutcome {
    Statistic stat;
    double critical_value;
    Decision decision;
    double level;
    int n;
    bool simulated_critical_value;
};

/// Runs the test at cfg.level. The critical value comes from table when it
/// has (n, level); otherwise it is simulated when cfg.simulate_missing,
/// else MissingTableEntry is thrown.
TestOutcome run_test(const Sample& s, const TestConfig& cfg, const CriticalTable* table = nullptr);

struct PowerResult {
    std::string alternative;
    int n;
    double level;
    double critical_value;
    double power;
    std::size_t replications;
    double standard_error;
};

/// Rejection rates of B samples from alt at each (n, level). Critical
/// values come from table when present, otherwise from a null simulation
/// with cfg (same seed, null streams).
std::vector<PowerResult> power_study(const Distribution& alt, std::span<const int> sizes,
                                     std::span<const double> levels, const TestConfig& cfg,
                                     const CriticalTable* table = nullptr);

}  // namespace wentropy
