#pragma once

#include <string>
#include <utility>
#include <vector>

namespace difflab {

enum class ScheduleKind { VpLinear, VpCosine, OtFlow, CustomTabulated };

// How sigma is derived from a tabulated alpha column.
enum class TableSigma { VpComplement, OneMinusAlpha };

// Interpolation coefficients (alpha_t, sigma_t) on t in [0,1] with t=0 clean
// and t=1 pure noise, plus their time derivatives and SNR. Instances are
// immutable after construction and safe to share across threads.
//
// Operations that divide by sigma (snr, dlog_snr_dt, the loss weights and
// parameterization conversions) are restricted to the clip range
// [t_min, t_max]; alpha/sigma themselves are defined on all of [0,1].
class Schedule {
public:
    static Schedule vp_linear();
    static Schedule vp_cosine();
    static Schedule ot_flow();

    // Two-column table (t, alpha); sigma is sqrt(1-alpha^2) or 1-alpha
    // depending on `mode`. Knots must cover t=0 and t=1.
    static Schedule custom_tabulated(std::vector<double> t_knots,
                                     std::vector<double> alpha_knots,
                                     TableSigma mode);

    // Config entry point: "vp_linear", "vp_cosine", "ot_flow", or
    // "table:<path>" for a tabulated file (see load_table_file).
    static Schedule by_name(const std::string& name);

    // Text table: first line "sigma=vp" or "sigma=1-alpha", then one
    // "t alpha" pair per line.
    static Schedule load_table_file(const std::string& path);

    ScheduleKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool is_vp() const { return vp_; }

    double alpha(double t) const;
    double sigma(double t) const;
    double alpha_dot(double t) const;
    double sigma_dot(double t) const;

    // alpha^2/sigma^2. Throws DomainError outside the clip range.
    double snr(double t) const;
    // d/dt log SNR = 2(alpha_dot/alpha - sigma_dot/sigma).
    double dlog_snr_dt(double t) const;

    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    Schedule with_clip(double t_min, double t_max) const;

    // n_steps+1 strictly decreasing times from t_max to t_min, uniform.
    std::vector<double> discrete_grid(int n_steps) const;

    // Checks monotonicity, boundary values, and the VP identity on a
    // 1024-point grid; throws ConfigError on violation. Constructors run
    // this for the built-in kinds.
    void validate() const;

    void require_in_clip(double t, const char* what) const;

private:
    Schedule() = default;

    ScheduleKind kind_ = ScheduleKind::OtFlow;
    std::string name_;
    bool vp_ = false;
    bool analytic_ = true;
    double t_min_ = 1e-4;
    double t_max_ = 1.0 - 1e-4;

    // Tabulated kinds: piecewise-linear alpha over knots.
    std::vector<double> knot_t_;
    std::vector<double> knot_alpha_;
    TableSigma table_sigma_ = TableSigma::VpComplement;

    double table_alpha(double t) const;
    double fd_derivative(bool of_alpha, double t) const;
};

}  // namespace difflab
