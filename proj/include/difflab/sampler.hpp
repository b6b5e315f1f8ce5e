#pragma once

#include <cstdint>
#include <functional>

#include "difflab/oracle.hpp"
#include "difflab/param.hpp"
#include "difflab/rng.hpp"
#include "difflab/schedule.hpp"

namespace difflab {

enum class SamplerKind { Ddim, Ddpm, EulerFlow };
enum class EtaMode { Deterministic, DdpmGamma };

SamplerKind sampler_kind_from_name(const std::string& name);
const char* sampler_kind_name(SamplerKind k);

struct SamplerConfig {
    SamplerKind kind = SamplerKind::Ddim;
    int n_steps = 50;
    EtaMode eta_mode = EtaMode::Deterministic;
    std::uint64_t seed = 0;

    static SamplerConfig ddim(int n_steps, std::uint64_t seed = 0) {
        return {SamplerKind::Ddim, n_steps, EtaMode::Deterministic, seed};
    }
    static SamplerConfig ddpm(int n_steps, std::uint64_t seed = 0) {
        return {SamplerKind::Ddpm, n_steps, EtaMode::DdpmGamma, seed};
    }
    static SamplerConfig euler_flow(int n_steps, std::uint64_t seed = 0) {
        return {SamplerKind::EulerFlow, n_steps, EtaMode::Deterministic, seed};
    }
    void validate() const;
};

// Anything that maps (x_t, t) to a tagged prediction. Conditioning signals
// are bound at construction time.
class Predictor {
public:
    virtual ~Predictor() = default;
    virtual Prediction predict(const Tensor& x_t, double t) const = 0;
};

// Closed-form posterior-mean predictor for Gaussian data, optionally exposed
// under a different output kind (for the kind-invariance checks).
class OraclePredictor : public Predictor {
public:
    OraclePredictor(GaussianData data, const Schedule& schedule, Kind exposed = Kind::X0)
        : data_(std::move(data)), schedule_(schedule), exposed_(exposed) {}
    Prediction predict(const Tensor& x_t, double t) const override;

private:
    GaussianData data_;
    Schedule schedule_;
    Kind exposed_;
};

// One reverse-process update from t to t_prev:
//   x_prev = alpha_prev x0_hat + sqrt(sigma_prev^2 - gamma^2) eps_hat + gamma z.
// gamma = 0 for DDIM (no rng draw); the DDPM gamma is
// (sigma_prev/sigma_t) sqrt(1 - alpha_t^2/alpha_prev^2).
Tensor reverse_step(const Tensor& x_t, const Prediction& pred, double t, double t_prev,
                    const SamplerConfig& cfg, const Schedule& s, RngStream& rng);

// Integrates the full grid from t_max down to t_min, starting from standard
// normal noise. Euler flow uses x <- x - dt * u(x, t).
Tensor sample_chain(const Predictor& pred, const SamplerConfig& cfg, const Schedule& s,
                    Eigen::Index dim, RngStream& rng);

// n_chains independent chains; chain i uses the stream derived from
// (cfg.seed, i). Rows of the result are chains.
Eigen::MatrixXd sample(const Predictor& pred, const SamplerConfig& cfg, const Schedule& s,
                       Eigen::Index dim, int n_chains);

}  // namespace difflab
