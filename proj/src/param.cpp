#include "difflab/param.hpp"

#include <cmath>

#include "difflab/errors.hpp"

namespace difflab {

namespace {

constexpr double kSingularTol = 1e-12;

void check_denominator(double den, const char* what) {
    if (std::abs(den) < kSingularTol)
        throw SingularError(std::string("singular conversion: ") + what +
                            " denominator below 1e-12");
}

void require_vp(const Schedule& s, const char* what) {
    if (!s.is_vp())
        throw VpRequiredError(std::string(what) +
                              ": v-parameterization requires a VP schedule");
}

// from -> x0 as (on_value, on_state).
AffineCoeffs coeffs_to_x0(Kind from, const Schedule& s, double t) {
    const double a = s.alpha(t), sg = s.sigma(t);
    switch (from) {
        case Kind::X0:
            return {1.0, 0.0};
        case Kind::Eps: {
            // x0 = (x_t - sigma eps)/alpha = c_out * eps + c_skip * x_t
            check_denominator(a, "eps->x0 alpha");
            return {-(sg / a), 1.0 / a};
        }
        case Kind::V: {
            // x0 = alpha x_t - sigma v
            require_vp(s, "v->x0");
            return {-sg, a};
        }
        case Kind::U: {
            // u = ((alpha_dot sigma - alpha sigma_dot)/sigma) x0 + (sigma_dot/sigma) x_t
            // => x0 = (sigma u - sigma_dot x_t)/(alpha_dot sigma - alpha sigma_dot)
            const double den = s.alpha_dot(t) * sg - a * s.sigma_dot(t);
            check_denominator(den, "u->x0 (alpha_dot sigma - alpha sigma_dot)");
            return {sg / den, -s.sigma_dot(t) / den};
        }
    }
    throw ConfigError("unreachable kind");
}

// x0 -> to as (on_value, on_state).
AffineCoeffs coeffs_from_x0(Kind to, const Schedule& s, double t) {
    const double a = s.alpha(t), sg = s.sigma(t);
    switch (to) {
        case Kind::X0:
            return {1.0, 0.0};
        case Kind::Eps: {
            // eps = (x_t - alpha x0)/sigma
            check_denominator(sg, "x0->eps sigma");
            return {-(a / sg), 1.0 / sg};
        }
        case Kind::V: {
            // v = alpha eps - sigma x0 with eps = (x_t - alpha x0)/sigma
            require_vp(s, "x0->v");
            check_denominator(sg, "x0->v sigma");
            return {-(a * a / sg + sg), a / sg};
        }
        case Kind::U: {
            const double den = s.alpha_dot(t) * sg - a * s.sigma_dot(t);
            check_denominator(sg, "x0->u sigma");
            return {den / sg, s.sigma_dot(t) / sg};
        }
    }
    throw ConfigError("unreachable kind");
}

}  // namespace

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Eps: return "eps";
        case Kind::X0: return "x0";
        case Kind::V: return "v";
        case Kind::U: return "u";
    }
    return "?";
}

Kind kind_from_name(const std::string& name) {
    if (name == "eps") return Kind::Eps;
    if (name == "x0") return Kind::X0;
    if (name == "v") return Kind::V;
    if (name == "u") return Kind::U;
    throw ConfigError("unknown prediction kind: " + name);
}

AffineCoeffs conversion_coeffs(Kind from, Kind to, const Schedule& s, double t) {
    s.require_in_clip(t, "conversion");
    if (from == to) return {1.0, 0.0};
    if (from == Kind::X0) return coeffs_from_x0(to, s, t);
    const AffineCoeffs in = coeffs_to_x0(from, s, t);
    if (to == Kind::X0) return in;
    const AffineCoeffs out = coeffs_from_x0(to, s, t);
    return {out.on_value * in.on_value, out.on_value * in.on_state + out.on_state};
}

Prediction convert(const Prediction& p, Kind target, const Schedule& s) {
    if (p.value.size() != p.state.size())
        throw ShapeError("prediction value and state shapes differ");
    if (p.kind == target) return p;
    const AffineCoeffs c = conversion_coeffs(p.kind, target, s, p.t);
    Prediction out;
    out.kind = target;
    out.t = p.t;
    out.state = p.state;
    out.value = c.on_value * p.value + c.on_state * p.state;
    return out;
}

Prediction to_x0(const Prediction& p, const Schedule& s) { return convert(p, Kind::X0, s); }

const char* weight_kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::WEps: return "w_eps";
        case WeightKind::WV: return "w_v";
        case WeightKind::WU: return "w_u";
        case WeightKind::WX0: return "w_x0";
        case WeightKind::WEpsToV: return "w_eps_to_v";
        case WeightKind::WUToEps: return "w_u_to_eps";
    }
    return "?";
}

double weight(WeightKind k, const Schedule& s, double t) {
    s.require_in_clip(t, "weight");
    const double a = s.alpha(t), sg = s.sigma(t);
    switch (k) {
        case WeightKind::WX0:
            return 1.0;
        case WeightKind::WEps:
            return (a * a) / (sg * sg);
        case WeightKind::WV:
            return 1.0 / (sg * sg);
        case WeightKind::WU: {
            const double num = s.alpha_dot(t) * sg - a * s.sigma_dot(t);
            return (num / sg) * (num / sg);
        }
        case WeightKind::WEpsToV:
            return (a * a) * (a * a) / (sg * sg);
        case WeightKind::WUToEps:
            return (a * a) / (sg * sg);
    }
    throw ConfigError("unreachable weight kind");
}

std::pair<double, double> precondition_coeffs(const Schedule& s, double t) {
    const double a = s.alpha(t), sg = s.sigma(t);
    check_denominator(a, "precondition alpha");
    return {1.0 / a, -(sg / a)};
}

Tensor target_value(Kind k, const Tensor& x0, const Tensor& eps, const Schedule& s, double t) {
    if (x0.size() != eps.size()) throw ShapeError("x0 and eps shapes differ");
    const double a = s.alpha(t), sg = s.sigma(t);
    switch (k) {
        case Kind::X0: return x0;
        case Kind::Eps: return eps;
        case Kind::V: return a * eps - sg * x0;
        case Kind::U: return s.alpha_dot(t) * x0 + s.sigma_dot(t) * eps;
    }
    throw ConfigError("unreachable kind");
}

}  // namespace difflab
