#pragma once

// Symbolic upper bounds for the Steckin differences j_{f,n}(sigma, mult*t)
// of the five combined log-derivatives (n = 0..4), each split into a main
// term (pole, kappa log N / log k / log |t| growth, an isolated-zero term)
// and a constant error term, plus sums over the primes dividing the level.
//
// Every quoted error constant is re-derivable: rederive_error_constant
// assembles the underlying expression from the M/C digamma table, the
// tangent-line digamma bound, the truncated zeta prime-sum bound, the two
// kernel floors, and the principal-character / half-digamma literature
// constants, then takes the supremum over even weights k (binding endpoint
// |t| = 1 for the |t| >= 1 rows).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zfr/steckin.hpp"
#include "zfr/trigpoly.hpp"

namespace zfr {

enum class Regime { t_ge_1, t_lt_1, t_eq_0 };

enum class SigmaRange { one_phi, one_115 };

enum class ZeroTermKind { none, reciprocal, lorentzian };

// reciprocal(n):      -n / (sigma - beta0)
// lorentzian(n, m):   -n (sigma - beta0) / ((sigma - beta0)^2 + (m t)^2)
struct ZeroTerm {
    ZeroTermKind kind = ZeroTermKind::none;
    double n = 0.0;
    int mult = 0;
};

enum class PrimeSumKind { sN, s1N, TN1, RN, RN1 };

struct PrimeTerm {
    PrimeSumKind kind;
    double coef;
};

struct BoundExpr {
    int n = 0;
    int mult = 0;
    Regime regime = Regime::t_ge_1;
    double pole_coef = 0.0;  // x 1/(sigma - 1)
    // (coef, m): coef (sigma-1) / ((sigma-1)^2 + (m t)^2)
    std::optional<std::pair<double, int>> lorentz_pole;
    double logN_coef = 0.0;  // x kappa log N
    double logk_coef = 0.0;  // x kappa log k
    double logt_coef = 0.0;  // x kappa log |t|
    ZeroTerm zero_term;
    double error_const = 0.0;
    std::vector<PrimeTerm> prime_terms;
    SigmaRange sigma_range = SigmaRange::one_phi;
};

// The defined (n, mult, regime) combinations:
//   (0,0,*), (1,1,t_ge_1|t_lt_1), (1,0,t_eq_0), (2,0,*), (2,2,t_ge_1|t_lt_1),
//   (3,1,*), (3,3,*), (4,0,*), (4,2,*), (4,4,*).
// For mult = 0 the regime tags which derivation applies: (2,0) under t_eq_0
// selects the wide-sigma variant (valid up to phi, error -1.36737) used in
// the very-small-t argument, while t_ge_1 / t_lt_1 select the sigma < 1.15
// variant (error -1.66308).  Throws std::invalid_argument otherwise.
BoundExpr jbound(int n, int mult, Regime regime);

struct RederivedConstant {
    double derived = 0.0;
    double quoted = 0.0;
    double margin = 0.0;  // quoted - derived; >= -1e-4 required
    int binding_k = 0;    // even weight attaining the supremum (0 if k-free)
    double binding_t = 0.0;
    bool tail_decreasing = true;  // expression decreasing over last k samples
};

RederivedConstant rederive_error_constant(int n, int mult, Regime regime);

double quoted_error_constant(int n, int mult, Regime regime);

// Numeric instantiation of Main + Error with the prime terms evaluated over
// the divisors of N.  Requires sigma inside the expression's sigma range,
// k even >= 2, N >= 1 squarefree, 1/2 < beta0 < 1, and |t| >= 1 whenever the
// expression carries a log|t| term.
double eval_bound(const BoundExpr& expr, double sigma, double t,
                  std::int64_t N, int k, double beta0);

// The nine (expression, weight) pairs of the positivity combination
//   ga2b2 j0 + (a2-4a4) j2(0) + 3a4 j4(0) + (a1-3a3) j1(t) + 3a3 j3(t)
//   + (a2-4a4) j2(2t) + 4a4 j4(2t) + a3 j3(3t) + a4 j4(4t),
// with the t-dependent entries taken in the given regime.
std::vector<std::pair<BoundExpr, double>> positivity_combination(
    const CosCoeffs& coeffs, Regime regime);

struct CombinedBound {
    double pole_coef = 0.0;
    double logN_coef = 0.0;
    double logk_coef = 0.0;
    double logt_coef = 0.0;
    double zero_recip_coef = 0.0;  // merged weight of 1/(sigma - beta0)
    double error_sum = 0.0;
    double prime_coef[5] = {0, 0, 0, 0, 0};  // indexed by PrimeSumKind
    // (coef, m) pairs kept un-merged:
    std::vector<std::pair<double, int>> lorentz_poles;
    std::vector<std::pair<double, int>> lorentz_zeros;
};

CombinedBound combine(const std::vector<std::pair<BoundExpr, double>>& terms);

struct ConstantRecord {
    std::string id;
    double value;
    std::string source;
};

// Literature inputs (principal-character and half-digamma constants), the
// truncated zeta prime-sum bound, and the two kernel floors.  These are
// inputs, not derived here; the half-digamma entries are cross-checked
// against the digamma oracle in the verification suites.
const std::vector<ConstantRecord>& literature_constants();

// Named bound constant -(1/sqrt5) sum_{p<=1e4} log p/(p^{sigma1}-1) < -0.19197.
inline constexpr double kZetaTailBound = -0.19197;

// Kernel floors: lemma32 floor -0.6; lemma33 floor -(phi/sqrt5 + 2/5).
inline constexpr double kLemma32Floor = -0.6;
double lemma33_floor();

}  // namespace zfr
