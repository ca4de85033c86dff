#pragma once

#include <string>
#include <vector>

#include "pulsegrid/kernel.hpp"
#include "pulsegrid/pulse.hpp"

namespace pulsegrid {

/// The schedules for one 1D stage, indexed by neighbor offset -radius..+radius.
struct TapSet {
    int radius = 0;
    std::vector<CoefficientSchedule> schedules;  // size 2*radius + 1

    const CoefficientSchedule& at_offset(int offset) const {
        return schedules[static_cast<std::size_t>(offset + radius)];
    }
    int tap_count() const { return 2 * radius + 1; }
    int max_sample_count() const;
    /// Signed realized coefficient per offset: sign * N / ticks.
    std::vector<double> realized_values(int ticks) const;
};

/// One rank-1 term of the plan: the pre-quantization factors with their
/// gains, and the quantized tap schedules realizing them.
struct PlanPass {
    FactorPair factors;
    double gain_v = 1.0;
    double gain_h = 1.0;
    TapSet v_taps;
    TapSet h_taps;
};

/// Executable plan for a kernel: one simulated pass per rank-1 term, all
/// passes sharing the same gain product so the summed output relates to the
/// unscaled kernel by the single multiplier `realized_scale`.
struct PassPlan {
    std::vector<PlanPass> passes;
    double realized_scale = 1.0;  // gain_v * gain_h, identical for every pass
    PwmWindow window;
    int sample_rate = 256;
    PhaseRule phase_rule = PhaseRule::midpoint;
    int kernel_rows = 0;
    int kernel_cols = 0;
    std::string kernel_name;

    int pass_count() const { return static_cast<int>(passes.size()); }
};

struct GainPolicy {
    enum class Mode { auto_max, explicit_gains };
    Mode mode = Mode::auto_max;
    double gain_v = 1.0;  // used by explicit_gains, applied to every pass
    double gain_h = 1.0;

    static GainPolicy auto_max() { return {}; }
    static GainPolicy explicit_gains(double gv, double gh) {
        return {Mode::explicit_gains, gv, gh};
    }
};

/// Quantizes factor pairs into tap schedules: entry c becomes the signed
/// sample count round(c * gain * ticks). auto_max picks one stage gain for
/// all passes, as large as possible while the biggest tap lands exactly on
/// the sample rate; a shared gain keeps the per-pass gain products equal,
/// which is what makes the de-scaled output comparable to the kernel.
/// Explicit gains are checked tap by tap and rejected with the offending
/// tap named when a count would exceed the sample rate.
PassPlan quantize_plan(const std::vector<FactorPair>& factors, int sample_rate,
                       PwmWindow window, const GainPolicy& policy,
                       PhaseRule rule = PhaseRule::midpoint);

/// factorize + quantize_plan in one step.
PassPlan plan_kernel(const KernelSpec& kernel, int sample_rate, PwmWindow window,
                     const GainPolicy& policy, PhaseRule rule = PhaseRule::midpoint,
                     double tolerance = 1e-9);

/// The kernel the quantized plan actually applies, de-scaled by
/// realized_scale: sum over passes of outer(realized_v, realized_h) / scale.
KernelSpec realized_kernel(const PassPlan& plan);

/// realized_kernel(plan) - kernel: the coefficient-quantization error matrix.
KernelSpec coefficient_error(const PassPlan& plan, const KernelSpec& kernel);

}  // namespace pulsegrid
