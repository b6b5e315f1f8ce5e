#include "difflab/sampler.hpp"

#include <cmath>

#include "difflab/errors.hpp"

namespace difflab {

SamplerKind sampler_kind_from_name(const std::string& name) {
    if (name == "ddim") return SamplerKind::Ddim;
    if (name == "ddpm") return SamplerKind::Ddpm;
    if (name == "euler_flow") return SamplerKind::EulerFlow;
    throw ConfigError("unknown sampler kind: " + name);
}

const char* sampler_kind_name(SamplerKind k) {
    switch (k) {
        case SamplerKind::Ddim: return "ddim";
        case SamplerKind::Ddpm: return "ddpm";
        case SamplerKind::EulerFlow: return "euler_flow";
    }
    return "?";
}

void SamplerConfig::validate() const {
    if (n_steps < 1) throw ConfigError("sampler: n_steps must be >= 1");
    if (kind == SamplerKind::Ddim && eta_mode != EtaMode::Deterministic)
        throw ConfigError("sampler: ddim requires deterministic eta mode (gamma = 0)");
    if (kind == SamplerKind::Ddpm && eta_mode != EtaMode::DdpmGamma)
        throw ConfigError("sampler: ddpm requires ddpm_gamma eta mode");
}

Prediction OraclePredictor::predict(const Tensor& x_t, double t) const {
    Prediction p = posterior_mean(data_, x_t, t, schedule_);
    if (exposed_ != Kind::X0) p = convert(p, exposed_, schedule_);
    return p;
}

Tensor reverse_step(const Tensor& x_t, const Prediction& pred, double t, double t_prev,
                    const SamplerConfig& cfg, const Schedule& s, RngStream& rng) {
    if (!(t_prev < t)) throw DomainError("reverse_step: t_prev must be < t");
    if (!(t_prev >= 0.0 && t <= 1.0)) throw DomainError("reverse_step: times must lie in [0,1]");
    const Tensor x0_hat = convert(pred, Kind::X0, s).value;
    const Tensor eps_hat = convert(pred, Kind::Eps, s).value;
    const double a_prev = s.alpha(t_prev);
    const double sg_prev = s.sigma(t_prev);

    double gamma = 0.0;
    if (cfg.eta_mode == EtaMode::DdpmGamma) {
        const double a = s.alpha(t);
        const double ratio2 = (a * a) / (a_prev * a_prev);
        gamma = (sg_prev / s.sigma(t)) * std::sqrt(std::max(0.0, 1.0 - ratio2));
    }
    double rem = sg_prev * sg_prev - gamma * gamma;
    if (rem < -1e-12)
        throw GammaOverflowError("reverse_step: sigma_prev^2 - gamma^2 < -1e-12");
    rem = std::max(rem, 0.0);

    Tensor out = a_prev * x0_hat + std::sqrt(rem) * eps_hat;
    if (gamma > 0.0) {
        for (Eigen::Index i = 0; i < out.size(); ++i) out[i] += gamma * rng.normal();
    }
    return out;
}

Tensor sample_chain(const Predictor& pred, const SamplerConfig& cfg, const Schedule& s,
                    Eigen::Index dim, RngStream& rng) {
    cfg.validate();
    const std::vector<double> grid = s.discrete_grid(cfg.n_steps);
    Tensor x = sample_standard_normal(rng, dim);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double t = grid[i], t_prev = grid[i + 1];
        const Prediction p = pred.predict(x, t);
        if (cfg.kind == SamplerKind::EulerFlow) {
            const Tensor u = convert(p, Kind::U, s).value;
            x = x - (t - t_prev) * u;
        } else {
            x = reverse_step(x, p, t, t_prev, cfg, s, rng);
        }
    }
    return x;
}

Eigen::MatrixXd sample(const Predictor& pred, const SamplerConfig& cfg, const Schedule& s,
                       Eigen::Index dim, int n_chains) {
    cfg.validate();
    Eigen::MatrixXd out(n_chains, dim);
    for (int c = 0; c < n_chains; ++c) {
        RngStream rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(c)));
        out.row(c) = sample_chain(pred, cfg, s, dim, rng).matrix().transpose();
    }
    return out;
}

}  // namespace difflab
