#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>

#include "difflab/schedule.hpp"

namespace difflab {

using Tensor = Eigen::ArrayXd;

// What a model output means: noise, clean data, angular velocity, or flow
// velocity.
enum class Kind { Eps, X0, V, U };

const char* kind_name(Kind k);
Kind kind_from_name(const std::string& name);

// A tagged model output at a given noisy state and time.
struct Prediction {
    Kind kind;
    Tensor value;
    Tensor state;  // the x_t the value was computed from; same shape as value
    double t = 0.0;
};

// Every parameterization is an affine function of every other at fixed
// (x_t, t):  value_to = on_value * value_from + on_state * x_t.
struct AffineCoeffs {
    double on_value;
    double on_state;
};

// Coefficients taking `from` to `to` on schedule `s` at time t.
// Throws SingularError when a denominator magnitude < 1e-12,
// VpRequiredError when v is involved on a non-VP schedule, and DomainError
// outside the clip range.
AffineCoeffs conversion_coeffs(Kind from, Kind to, const Schedule& s, double t);

Prediction convert(const Prediction& p, Kind target, const Schedule& s);
Prediction to_x0(const Prediction& p, const Schedule& s);

// Loss weights w_t^p relating each parameterization's squared loss to the
// x0 squared loss, plus the implied weights of cross-converted losses.
enum class WeightKind {
    WEps,     // alpha^2/sigma^2 (SNR)
    WV,       // 1/sigma^2 (SNR+1 under VP)
    WU,       // ((alpha_dot sigma - alpha sigma_dot)/sigma)^2
    WX0,      // 1
    WEpsToV,  // alpha^4/sigma^2
    WUToEps,  // alpha^2/sigma^2
};

const char* weight_kind_name(WeightKind k);

double weight(WeightKind k, const Schedule& s, double t);

// EDM-style preconditioning (c_skip, c_out) = (1/alpha, -sigma/alpha):
// x0_hat = c_skip * x_t + c_out * eps_hat, bit-identical to the eps->x0
// conversion path.
std::pair<double, double> precondition_coeffs(const Schedule& s, double t);

// True parameterization targets for a forward-process triple (x0, eps, t).
Tensor target_value(Kind k, const Tensor& x0, const Tensor& eps, const Schedule& s, double t);

}  // namespace difflab
