#pragma once

// Tolerance policy shared by every verification in the toolkit.  All checks
// are tolerance-gated binary64 comparisons with logged margins; there is no
// interval arithmetic here.

#include <stdexcept>

namespace zfr {

enum class SlackMode { strict, logged };

struct TolerancePolicy {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    SlackMode slack_mode = SlackMode::logged;

    // abs_tol, rel_tol must lie in [0, 1e-2].
    void validate() const {
        if (!(abs_tol >= 0.0 && abs_tol <= 1e-2) ||
            !(rel_tol >= 0.0 && rel_tol <= 1e-2)) {
            throw std::invalid_argument(
                "TolerancePolicy: tolerances must lie in [0, 1e-2]");
        }
    }
};

// Outcome of a single lhs <= rhs comparison.
//   excess = lhs - rhs   (positive means lhs sticks out above rhs)
//   slack  = max(abs_tol, rel_tol * |rhs|), the allowance actually applied
//   warned = failed, but within 10x the slack (only in SlackMode::logged)
struct Verdict {
    bool pass = false;
    double excess = 0.0;
    double slack = 0.0;
    bool warned = false;
};

Verdict leq_with_policy(double lhs, double rhs, const TolerancePolicy& policy);

}  // namespace zfr
