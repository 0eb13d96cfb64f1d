#pragma once

#include <stdexcept>
#include <string>

namespace qvoa {

// Rejected input: bad CLI flags, out-of-range module parameters,
// non-invertible series, singular change of basis. Maps to exit code 2.
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A violated internal invariant (integrality assertion, certified bound,
// parity bookkeeping). Never expected on any input; maps to exit code 3.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invalid_parameter(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw consistency_error(msg);
}

} // namespace qvoa
