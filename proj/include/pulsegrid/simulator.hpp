#pragma once

#include <cstdint>
#include <vector>

#include "pulsegrid/image.hpp"
#include "pulsegrid/plan.hpp"
#include "pulsegrid/pulse.hpp"

namespace pulsegrid {

enum class Boundary { zero_pad };

struct SimConfig {
    int sample_rate = 256;  // max sample instants per PWM cycle
    PwmWindow window;
    int mag_bits = 8;
    RegisterPolicy register_policy = RegisterPolicy::saturate;
    Boundary boundary = Boundary::zero_pad;
    PhaseRule phase_rule = PhaseRule::midpoint;

    /// Throws ConfigError unless 1 <= sample_rate <= ticks, ticks >= 2,
    /// mag_bits >= 1 and the register ceiling 2^mag_bits - 1 fits below one
    /// PWM period (so any regenerated duty cycle stays < 1).
    void validate() const;
};

/// The array of in-pixel result counters. All registers share width and
/// policy; `saturation_events` counts how many tap accumulations clamped.
struct RegisterPlane {
    int width = 0;
    int height = 0;
    int mag_bits = 8;
    RegisterPolicy policy = RegisterPolicy::saturate;
    std::vector<std::int32_t> values;
    std::uint64_t saturation_events = 0;

    RegisterPlane() = default;
    RegisterPlane(int w, int h, int bits, RegisterPolicy pol);

    std::int32_t at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * width + col];
    }
    void accumulate_at(int row, int col, std::int32_t delta);
};

/// One vertical counting stage (Eq.-style multiply-accumulate over row
/// offsets): each pixel samples the PWM line of its neighbor at offset x with
/// the schedule for tap x and adds the signed count to its register, offset
/// order 0, -1, +1, -2, +2, ... with the register policy applied per tap.
/// Missing neighbors outside the array contribute nothing (zero padding).
RegisterPlane run_vertical_pass(const PwmFrame& frame, const TapSet& taps, const SimConfig& config);

/// Count-back conversion of a register plane into a fresh PWM frame: the
/// magnitude becomes the high time and the sign moves to the sign plane
/// (zero regenerates as +0). Requires every magnitude to fit inside the
/// window, which the saturate policy guarantees by construction.
PwmFrame regenerate_pwm(const RegisterPlane& plane, PwmWindow window);

/// The horizontal counterpart of the vertical pass: offsets index neighbors
/// along the row, signs come from the regenerated frame's sign plane, and
/// counts accumulate into `into`, which carries the result across passes.
void run_horizontal_pass(const PwmFrame& frame, const TapSet& taps, const SimConfig& config,
                         RegisterPlane& into);

/// Full pipeline: encode once, then per pass run vertical, regenerate, and
/// accumulate the horizontal stage into the shared final plane.
RegisterPlane convolve_frame(const Image8& image, const PassPlan& plan, const SimConfig& config);

}  // namespace pulsegrid
