#pragma once

#include "difflab/param.hpp"
#include "difflab/rng.hpp"
#include "difflab/schedule.hpp"

namespace difflab {

// One draw from the forward process: x_t = alpha(t) x0 + sigma(t) eps.
struct TrainingPair {
    Tensor x0;
    Tensor eps;
    double t = 0.0;
    Tensor xt;
    Tensor control;  // empty when the task is unconditional
};

// alpha(t) x0 + sigma(t) eps. t may be anywhere in [0,1]; only shapes are
// checked.
Tensor noise(const Tensor& x0, double t, const Tensor& eps, const Schedule& s);

enum class TimeDist { Uniform };

// Uniform on [t_min, t_max].
double sample_time(RngStream& rng, const Schedule& s, TimeDist dist = TimeDist::Uniform);

Tensor sample_standard_normal(RngStream& rng, Eigen::Index n);

TrainingPair draw_pair(RngStream& rng, const Tensor& x0, const Tensor& control,
                       const Schedule& s);

}  // namespace difflab
