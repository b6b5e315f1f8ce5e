#include "difflab/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "difflab/errors.hpp"

namespace difflab {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Central-difference step for tabulated derivatives.
constexpr double kFdStep = 1e-6;

// Stable-Diffusion style discrete beta schedule: beta linearly spaced over
// 1000 steps, abar_k the running product of (1-beta). The continuous curve
// interpolates sqrt(abar) linearly in the step index, with abar_0 = 1 (empty
// product, t=0 is clean data). The terminal knot pins alpha(1)=0; it sits at
// t = 1-1e-4 .. 1, outside the default clip range, so sampled times always
// see the discrete curve itself. These constants are a conventional stand-in;
// they match the qualitative shape, not any particular checkpoint.
Schedule make_vp_linear_table() {
    const int n = 1000;
    const double beta_start = 0.00085, beta_end = 0.012;
    std::vector<double> t_knots, a_knots;
    t_knots.reserve(n + 2);
    a_knots.reserve(n + 2);
    t_knots.push_back(0.0);
    a_knots.push_back(1.0);
    double log_abar = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double beta = beta_start + (beta_end - beta_start) * (k - 1) / (n - 1);
        log_abar += std::log1p(-beta);
        const double t = (k < n) ? static_cast<double>(k) / n : 1.0 - 1e-4;
        t_knots.push_back(t);
        a_knots.push_back(std::exp(0.5 * log_abar));
    }
    t_knots.push_back(1.0);
    a_knots.push_back(0.0);
    return Schedule::custom_tabulated(std::move(t_knots), std::move(a_knots),
                                      TableSigma::VpComplement);
}

}  // namespace

Schedule Schedule::vp_linear() {
    Schedule s = make_vp_linear_table();
    s.kind_ = ScheduleKind::VpLinear;
    s.name_ = "vp_linear";
    return s;
}

Schedule Schedule::vp_cosine() {
    Schedule s;
    s.kind_ = ScheduleKind::VpCosine;
    s.name_ = "vp_cosine";
    s.vp_ = true;
    s.analytic_ = true;
    s.validate();
    return s;
}

Schedule Schedule::ot_flow() {
    Schedule s;
    s.kind_ = ScheduleKind::OtFlow;
    s.name_ = "ot_flow";
    s.vp_ = false;
    s.analytic_ = true;
    s.validate();
    return s;
}

Schedule Schedule::custom_tabulated(std::vector<double> t_knots,
                                    std::vector<double> alpha_knots,
                                    TableSigma mode) {
    if (t_knots.size() != alpha_knots.size() || t_knots.size() < 2)
        throw ConfigError("tabulated schedule needs >= 2 (t, alpha) knots");
    if (t_knots.front() != 0.0 || t_knots.back() != 1.0)
        throw ConfigError("tabulated schedule knots must cover t=0 and t=1");
    for (std::size_t i = 1; i < t_knots.size(); ++i)
        if (!(t_knots[i] > t_knots[i - 1]))
            throw ConfigError("tabulated schedule knots must be strictly increasing in t");
    Schedule s;
    s.kind_ = ScheduleKind::CustomTabulated;
    s.name_ = "custom_tabulated";
    s.vp_ = (mode == TableSigma::VpComplement);
    s.analytic_ = false;
    s.knot_t_ = std::move(t_knots);
    s.knot_alpha_ = std::move(alpha_knots);
    s.table_sigma_ = mode;
    s.validate();
    return s;
}

Schedule Schedule::by_name(const std::string& name) {
    if (name == "vp_linear") return vp_linear();
    if (name == "vp_cosine") return vp_cosine();
    if (name == "ot_flow") return ot_flow();
    if (name.rfind("table:", 0) == 0) return load_table_file(name.substr(6));
    throw ConfigError("unknown schedule name: " + name);
}

Schedule Schedule::load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open schedule table: " + path);
    std::string header;
    std::getline(in, header);
    TableSigma mode;
    if (header == "sigma=vp")
        mode = TableSigma::VpComplement;
    else if (header == "sigma=1-alpha")
        mode = TableSigma::OneMinusAlpha;
    else
        throw ConfigError("schedule table must start with 'sigma=vp' or 'sigma=1-alpha'");
    std::vector<double> ts, as;
    double t, a;
    while (in >> t >> a) {
        ts.push_back(t);
        as.push_back(a);
    }
    Schedule s = custom_tabulated(std::move(ts), std::move(as), mode);
    s.name_ = "table:" + path;
    return s;
}

double Schedule::table_alpha(double t) const {
    const auto& ts = knot_t_;
    if (t <= ts.front()) return knot_alpha_.front();
    if (t >= ts.back()) return knot_alpha_.back();
    const auto it = std::upper_bound(ts.begin(), ts.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - ts.begin());
    const double f = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
    return knot_alpha_[i - 1] + f * (knot_alpha_[i] - knot_alpha_[i - 1]);
}

double Schedule::alpha(double t) const {
    switch (kind_) {
        case ScheduleKind::VpCosine: return std::cos(kPi * t / 2.0);
        case ScheduleKind::OtFlow: return 1.0 - t;
        default: return table_alpha(t);
    }
}

double Schedule::sigma(double t) const {
    switch (kind_) {
        case ScheduleKind::VpCosine: return std::sin(kPi * t / 2.0);
        case ScheduleKind::OtFlow: return t;
        default: {
            const double a = table_alpha(t);
            if (table_sigma_ == TableSigma::VpComplement)
                return std::sqrt(std::max(0.0, 1.0 - a * a));
            return 1.0 - a;
        }
    }
}

double Schedule::fd_derivative(bool of_alpha, double t) const {
    double lo = t - kFdStep, hi = t + kFdStep;
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    const double flo = of_alpha ? alpha(lo) : sigma(lo);
    const double fhi = of_alpha ? alpha(hi) : sigma(hi);
    return (fhi - flo) / (hi - lo);
}

double Schedule::alpha_dot(double t) const {
    switch (kind_) {
        case ScheduleKind::VpCosine: return -(kPi / 2.0) * std::sin(kPi * t / 2.0);
        case ScheduleKind::OtFlow: return -1.0;
        default: return fd_derivative(true, t);
    }
}

double Schedule::sigma_dot(double t) const {
    switch (kind_) {
        case ScheduleKind::VpCosine: return (kPi / 2.0) * std::cos(kPi * t / 2.0);
        case ScheduleKind::OtFlow: return 1.0;
        default: return fd_derivative(false, t);
    }
}

void Schedule::require_in_clip(double t, const char* what) const {
    if (!(t >= t_min_ && t <= t_max_)) {
        std::ostringstream os;
        os << what << ": t=" << t << " outside clip range [" << t_min_ << ", " << t_max_ << "]";
        throw DomainError(os.str());
    }
}

double Schedule::snr(double t) const {
    require_in_clip(t, "snr");
    const double a = alpha(t), s = sigma(t);
    if (s == 0.0) throw DomainError("snr: sigma(t) = 0");
    return (a * a) / (s * s);
}

double Schedule::dlog_snr_dt(double t) const {
    require_in_clip(t, "dlog_snr_dt");
    const double a = alpha(t), s = sigma(t);
    if (a == 0.0 || s == 0.0) throw DomainError("dlog_snr_dt: alpha or sigma vanishes");
    return 2.0 * (alpha_dot(t) / a - sigma_dot(t) / s);
}

Schedule Schedule::with_clip(double t_min, double t_max) const {
    if (!(t_min >= 0.0 && t_min < t_max && t_max <= 1.0))
        throw ConfigError("clip range must satisfy 0 <= t_min < t_max <= 1");
    Schedule s = *this;
    s.t_min_ = t_min;
    s.t_max_ = t_max;
    return s;
}

std::vector<double> Schedule::discrete_grid(int n_steps) const {
    if (n_steps < 1) throw ConfigError("discrete_grid: n_steps must be >= 1");
    std::vector<double> ts(static_cast<std::size_t>(n_steps) + 1);
    for (int i = 0; i <= n_steps; ++i)
        ts[static_cast<std::size_t>(i)] =
            t_max_ + (t_min_ - t_max_) * static_cast<double>(i) / n_steps;
    ts.front() = t_max_;
    ts.back() = t_min_;
    return ts;
}

void Schedule::validate() const {
    const int n = 1024;
    double prev_a = alpha(0.0), prev_s = sigma(0.0);
    for (int i = 1; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        const double a = alpha(t), s = sigma(t);
        if (a > prev_a + 1e-12)
            throw ConfigError("schedule invariant violated: alpha must be non-increasing");
        if (s < prev_s - 1e-12)
            throw ConfigError("schedule invariant violated: sigma must be non-decreasing");
        if (vp_ && std::abs(a * a + s * s - 1.0) > 1e-10)
            throw ConfigError("schedule invariant violated: alpha^2 + sigma^2 != 1 on VP schedule");
        prev_a = a;
        prev_s = s;
    }
    if (std::abs(alpha(0.0) - 1.0) > 1e-6 || std::abs(sigma(0.0)) > 1e-6 ||
        std::abs(alpha(1.0)) > 1e-6 || std::abs(sigma(1.0) - 1.0) > 1e-6)
        throw ConfigError("schedule invariant violated: boundary values (1,0) at t=0 and (0,1) at t=1");
}

}  // namespace difflab
