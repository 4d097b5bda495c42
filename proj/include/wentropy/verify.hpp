#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wentropy {

// Closed-form oracle suite: the published closed forms for the exponential,
// Pareto, uniform and power families, each evaluated over random valid
// (parameter, order) draws and compared with quadrature (closed forms in
// the library disabled).
//
// The comparison is made on the integral inside the logarithm, i.e. on
// exp((beta - alpha) * entropy), where a relative error is well defined
// even when the entropy itself is near zero.

struct OracleCell {
    std::string quantity;  ///< e.g. "gwse", "gwse(X_theta)", "wmrl(t)"
    std::string family;
    std::string formula;
    int draws = 0;
    int passed = 0;
    double max_rel_error = 0.0;

    bool pass() const { return draws > 0 && passed == draws; }
};

struct OracleReport {
    std::vector<OracleCell> cells;
    double tolerance = 0.0;
    double seconds = 0.0;

    bool all_pass() const;
};

OracleReport closed_form_suite(std::uint64_t seed = 20240601, int draws = 20, double tolerance = 1e-8);

}  // namespace wentropy
