#include "difflab/oracle.hpp"

#include <Eigen/Eigenvalues>

#include "difflab/errors.hpp"

namespace difflab {

namespace {
constexpr double kCondLimit = 1e12;
}

GaussianData::GaussianData(Eigen::VectorXd mean, Eigen::VectorXd diag_var)
    : mean_(std::move(mean)), diagonal_(true), diag_var_(std::move(diag_var)) {
    if (diag_var_.size() != mean_.size())
        throw ShapeError("GaussianData: mean and diag_var sizes differ");
    if ((diag_var_.array() < 0.0).any())
        throw ConfigError("GaussianData: variances must be >= 0");
}

GaussianData::GaussianData(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), diagonal_(false), cov_(std::move(cov)) {
    if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size())
        throw ShapeError("GaussianData: cov must be d x d");
    if (((cov_ - cov_.transpose()).array().abs() > 1e-12).any())
        throw ConfigError("GaussianData: cov must be symmetric to 1e-12");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw ConfigError("GaussianData: cov must be positive definite");
}

Prediction posterior_mean(const GaussianData& d, const Tensor& x_t, double t,
                          const Schedule& s) {
    s.require_in_clip(t, "posterior_mean");
    if (x_t.size() != d.dim()) throw ShapeError("posterior_mean: x_t dimension mismatch");
    const double a = s.alpha(t), sg = s.sigma(t);
    const double s2 = sg * sg;
    const Eigen::VectorXd centered = x_t.matrix() - a * d.mean();
    Eigen::VectorXd out;
    if (d.is_diagonal()) {
        const Eigen::ArrayXd denom = a * a * d.diag_var().array() + s2;
        if (denom.maxCoeff() / denom.minCoeff() > kCondLimit)
            throw IllConditionedError("posterior_mean: diagonal system condition > 1e12");
        out = d.mean().array() + a * d.diag_var().array() * centered.array() / denom;
    } else {
        Eigen::MatrixXd M = a * a * d.cov();
        M.diagonal().array() += s2;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
        const auto& ev = es.eigenvalues();
        if (ev.minCoeff() <= 0.0 || ev.maxCoeff() / ev.minCoeff() > kCondLimit)
            throw IllConditionedError("posterior_mean: dense system condition > 1e12");
        const Eigen::VectorXd solved =
            es.eigenvectors() *
            (es.eigenvectors().transpose() * centered).cwiseQuotient(ev);
        out = d.mean() + a * d.cov() * solved;
    }
    Prediction p;
    p.kind = Kind::X0;
    p.value = out.array();
    p.state = x_t;
    p.t = t;
    return p;
}

Tensor marginal_score(const GaussianData& d, const Tensor& x_t, double t,
                      const Schedule& s) {
    s.require_in_clip(t, "marginal_score");
    if (x_t.size() != d.dim()) throw ShapeError("marginal_score: x_t dimension mismatch");
    const double a = s.alpha(t), s2 = s.sigma(t) * s.sigma(t);
    const Eigen::VectorXd centered = x_t.matrix() - a * d.mean();
    if (d.is_diagonal()) {
        const Eigen::ArrayXd denom = a * a * d.diag_var().array() + s2;
        return -(centered.array() / denom);
    }
    Eigen::MatrixXd M = a * a * d.cov();
    M.diagonal().array() += s2;
    return -(M.ldlt().solve(centered)).array();
}

}  // namespace difflab
