#include "zfr/tolerance.hpp"

#include <algorithm>
#include <cmath>

namespace zfr {

Verdict leq_with_policy(double lhs, double rhs, const TolerancePolicy& policy) {
    policy.validate();
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        throw std::invalid_argument("leq_with_policy: non-finite input");
    }
    Verdict v;
    v.slack = std::max(policy.abs_tol, policy.rel_tol * std::abs(rhs));
    v.excess = lhs - rhs;
    v.pass = (v.excess <= v.slack);
    v.warned = !v.pass && policy.slack_mode == SlackMode::logged &&
               v.excess <= 10.0 * v.slack;
    return v;
}

}  // namespace zfr
