#pragma once

#include <Eigen/Dense>
#include <optional>

#include "difflab/param.hpp"
#include "difflab/schedule.hpp"

namespace difflab {

// Gaussian data distribution N(mean, cov) used as a closed-form test bed:
// its posterior mean E[x0 | x_t] is available exactly, so samplers and
// metrics can be validated independently of any training.
class GaussianData {
public:
    // Diagonal covariance fast path.
    GaussianData(Eigen::VectorXd mean, Eigen::VectorXd diag_var);
    // Dense covariance; must be symmetric (1e-12) positive definite.
    GaussianData(Eigen::VectorXd mean, Eigen::MatrixXd cov);

    const Eigen::VectorXd& mean() const { return mean_; }
    bool is_diagonal() const { return diagonal_; }
    Eigen::Index dim() const { return mean_.size(); }
    const Eigen::VectorXd& diag_var() const { return diag_var_; }
    const Eigen::MatrixXd& cov() const { return cov_; }

private:
    Eigen::VectorXd mean_;
    bool diagonal_;
    Eigen::VectorXd diag_var_;
    Eigen::MatrixXd cov_;
};

// E[x0 | X_t = x_t] = mu + alpha S (alpha^2 S + sigma^2 I)^-1 (x_t - alpha mu).
// Throws IllConditionedError when cond(alpha^2 S + sigma^2 I) > 1e12.
Prediction posterior_mean(const GaussianData& d, const Tensor& x_t, double t,
                          const Schedule& s);

// Score of the marginal N(alpha mu, alpha^2 S + sigma^2 I) at x_t; the
// independent closed form behind the Tweedie consistency check.
Tensor marginal_score(const GaussianData& d, const Tensor& x_t, double t,
                      const Schedule& s);

}  // namespace difflab
