#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

namespace difflab {

enum class Direction { HigherBetter, LowerBetter };

// Ordered (step, value) series produced by a training run.
struct ConvergenceCurve {
    std::vector<int> steps;
    std::vector<double> values;
    std::string metric_name;
    double max_value = 1.0;  // normalization ceiling
    Direction direction = Direction::HigherBetter;

    std::size_t size() const { return steps.size(); }
    void push(int step, double value) {
        steps.push_back(step);
        values.push_back(value);
    }
    void check() const;  // strictly increasing steps, finite values
};

struct MauccConfig {
    std::vector<double> horizons;   // fractions in (0,1], sorted
    double ema_weight = 0.9;        // in [0,1)
    double report_scale = 100.0;

    // 25% to 100% in 5% steps (16 horizons).
    static MauccConfig defaults();
    void validate() const;
};

// s_0 = v_0; s_k = w s_{k-1} + (1-w) v_k.
ConvergenceCurve ema_smooth(const ConvergenceCurve& c, double w);

// Divide values by max_value (direction is reported, never inverted).
ConvergenceCurve normalize(const ConvergenceCurve& c);

// Normalized area under the curve up to ceil(horizon * T_max): trapezoid on
// the recorded step grid, left-constant extension to step 0, linear
// interpolation at the cutoff, divided by the horizon length.
double aucc_at(const ConvergenceCurve& normalized, double horizon);

// smooth -> normalize -> mean of aucc_at over horizons, times report_scale.
double maucc(const ConvergenceCurve& c, const MauccConfig& cfg);

// Per-horizon AUCC values of the smoothed normalized curve (same pipeline).
std::vector<double> aucc_table(const ConvergenceCurve& c, const MauccConfig& cfg);

// Toy control fidelity: threshold each sample at 0, IoU against the binary
// control mask, mean over the batch, scaled to [0,100]. Two empty masks
// count as IoU 1. Rows are samples.
double mask_iou(const Eigen::MatrixXd& samples, const Eigen::MatrixXd& controls);

}  // namespace difflab
