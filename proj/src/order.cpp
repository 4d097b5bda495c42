#include "wentropy/order.hpp"

#include <cmath>
#include <sstream>

#include "wentropy/error.hpp"

namespace wentropy {

bool EntropyOrder::is_valid(double alpha, double beta) noexcept {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) return false;
    return beta >= 1.0 && alpha > beta - 1.0 && alpha < beta;
}

EntropyOrder EntropyOrder::make(double alpha, double beta) {
    if (!is_valid(alpha, beta)) {
        std::ostringstream os;
        os << "order (alpha=" << alpha << ", beta=" << beta
           << ") violates beta >= 1 and beta - 1 < alpha < beta";
        throw Error(ErrorCode::InvalidOrder, os.str());
    }
    return EntropyOrder(alpha, beta);
}

}  // namespace wentropy
