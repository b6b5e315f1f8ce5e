#include "difflab/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "difflab/errors.hpp"

namespace difflab {

void ConvergenceCurve::check() const {
    if (steps.size() != values.size())
        throw ShapeError("curve: steps and values lengths differ");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i > 0 && steps[i] <= steps[i - 1])
            throw ConfigError("curve: steps must be strictly increasing");
        if (!std::isfinite(values[i])) throw ConfigError("curve: non-finite value");
    }
}

MauccConfig MauccConfig::defaults() {
    MauccConfig cfg;
    for (int i = 0; i < 16; ++i) cfg.horizons.push_back(0.25 + 0.05 * i);
    return cfg;
}

void MauccConfig::validate() const {
    if (horizons.empty()) throw ConfigError("maucc: horizons must be non-empty");
    for (std::size_t i = 0; i < horizons.size(); ++i) {
        if (!(horizons[i] > 0.0 && horizons[i] <= 1.0))
            throw ConfigError("maucc: horizons must lie in (0,1]");
        if (i > 0 && horizons[i] < horizons[i - 1])
            throw ConfigError("maucc: horizons must be sorted");
    }
    if (!(ema_weight >= 0.0 && ema_weight < 1.0))
        throw ConfigError("maucc: ema_weight must lie in [0,1)");
}

ConvergenceCurve ema_smooth(const ConvergenceCurve& c, double w) {
    c.check();
    if (!(w >= 0.0 && w < 1.0)) throw ConfigError("ema_smooth: weight must lie in [0,1)");
    ConvergenceCurve out = c;
    for (std::size_t i = 1; i < out.values.size(); ++i)
        out.values[i] = w * out.values[i - 1] + (1.0 - w) * out.values[i];
    return out;
}

ConvergenceCurve normalize(const ConvergenceCurve& c) {
    c.check();
    if (!(c.max_value > 0.0)) throw ConfigError("normalize: max_value must be > 0");
    ConvergenceCurve out = c;
    for (double& v : out.values) v /= c.max_value;
    out.max_value = 1.0;
    return out;
}

double aucc_at(const ConvergenceCurve& c, double horizon) {
    c.check();
    if (c.size() == 0) throw ConfigError("aucc_at: empty curve");
    if (!(horizon > 0.0 && horizon <= 1.0))
        throw ConfigError("aucc_at: horizon must lie in (0,1]");
    const double t_max = static_cast<double>(c.steps.back());
    if (t_max <= 0.0) throw ConfigError("aucc_at: curve must extend past step 0");
    const double cutoff = std::ceil(horizon * t_max);

    // Left-constant extension: the curve is worth values[0] on [0, steps[0]].
    double area = 0.0;
    double prev_s = 0.0, prev_v = c.values.front();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double s = static_cast<double>(c.steps[i]);
        const double v = c.values[i];
        if (s <= prev_s) {  // first point at step 0
            prev_v = v;
            continue;
        }
        if (s >= cutoff) {
            const double f = (cutoff - prev_s) / (s - prev_s);
            const double v_cut = prev_v + f * (v - prev_v);
            area += 0.5 * (prev_v + v_cut) * (cutoff - prev_s);
            return area / cutoff;
        }
        area += 0.5 * (prev_v + v) * (s - prev_s);
        prev_s = s;
        prev_v = v;
    }
    // Horizon beyond the last record: extend flat (only possible when
    // cutoff == t_max was not reached due to rounding; treat as full curve).
    area += prev_v * (cutoff - prev_s);
    return area / cutoff;
}

std::vector<double> aucc_table(const ConvergenceCurve& c, const MauccConfig& cfg) {
    cfg.validate();
    const ConvergenceCurve prepared = normalize(ema_smooth(c, cfg.ema_weight));
    std::vector<double> out;
    out.reserve(cfg.horizons.size());
    for (double h : cfg.horizons) out.push_back(aucc_at(prepared, h));
    return out;
}

double maucc(const ConvergenceCurve& c, const MauccConfig& cfg) {
    const std::vector<double> table = aucc_table(c, cfg);
    double sum = 0.0;
    for (double a : table) sum += a;
    return cfg.report_scale * sum / static_cast<double>(table.size());
}

double mask_iou(const Eigen::MatrixXd& samples, const Eigen::MatrixXd& controls) {
    if (samples.rows() != controls.rows() || samples.cols() != controls.cols())
        throw ShapeError("mask_iou: batch shapes differ");
    if (samples.rows() == 0) throw ShapeError("mask_iou: empty batch");
    double total = 0.0;
    for (Eigen::Index r = 0; r < samples.rows(); ++r) {
        long inter = 0, uni = 0;
        for (Eigen::Index c = 0; c < samples.cols(); ++c) {
            const bool m = samples(r, c) > 0.0;
            const bool g = controls(r, c) > 0.5;
            inter += (m && g);
            uni += (m || g);
        }
        total += (uni == 0) ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
    }
    return 100.0 * total / static_cast<double>(samples.rows());
}

}  // namespace difflab
