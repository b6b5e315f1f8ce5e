#include "difflab/forward.hpp"

#include "difflab/errors.hpp"

namespace difflab {

Tensor noise(const Tensor& x0, double t, const Tensor& eps, const Schedule& s) {
    if (x0.size() != eps.size()) throw ShapeError("noise: x0 and eps shapes differ");
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("noise: t must lie in [0,1]");
    return s.alpha(t) * x0 + s.sigma(t) * eps;
}

double sample_time(RngStream& rng, const Schedule& s, TimeDist dist) {
    (void)dist;  // only Uniform for now
    return rng.uniform(s.t_min(), s.t_max());
}

Tensor sample_standard_normal(RngStream& rng, Eigen::Index n) {
    Tensor out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = rng.normal();
    return out;
}

TrainingPair draw_pair(RngStream& rng, const Tensor& x0, const Tensor& control,
                       const Schedule& s) {
    TrainingPair p;
    p.x0 = x0;
    p.control = control;
    p.t = sample_time(rng, s);
    p.eps = sample_standard_normal(rng, x0.size());
    p.xt = noise(p.x0, p.t, p.eps, s);
    return p;
}

}  // namespace difflab
