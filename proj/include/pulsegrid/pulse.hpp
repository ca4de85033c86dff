#pragma once

#include <cstdint>
#include <vector>

#include "pulsegrid/image.hpp"

namespace pulsegrid {

enum class RegisterPolicy { saturate, wrap };
enum class PhaseRule { midpoint, leading };

/// Master timebase: number of ticks in one PWM cycle. A pixel's value is the
/// number of ticks its line stays high, so every duty cycle is k/ticks.
struct PwmWindow {
    int ticks = 256;

    bool operator==(const PwmWindow&) const = default;
};

/// Per-pixel PWM state for the whole array: high-tick counts plus a sign
/// plane. A pixel whose high time is zero always carries sign +1.
struct PwmFrame {
    int width = 0;
    int height = 0;
    PwmWindow window;
    std::vector<std::int32_t> high_ticks;  // row-major, each in [0, ticks)
    std::vector<std::int8_t> sign;         // +1 or -1

    PwmFrame() = default;
    PwmFrame(int w, int h, PwmWindow win);

    std::int32_t high_at(int row, int col) const {
        return high_ticks[static_cast<std::size_t>(row) * width + col];
    }
    int sign_at(int row, int col) const {
        return sign[static_cast<std::size_t>(row) * width + col];
    }
};

/// One kernel tap realized as a gated sampling clock: a count direction and
/// the tick indices at which the incoming PWM line is sampled. The number of
/// instants is the tap's magnitude in counts per full-duty cycle.
struct CoefficientSchedule {
    int sign = +1;                          // +1 or -1; +1 when empty
    std::vector<std::int32_t> instants;     // sorted, unique, each < ticks

    int sample_count() const { return static_cast<int>(instants.size()); }
};

/// Fixed-width signed accumulator: `mag_bits` magnitude bits plus a sign.
/// saturate clamps at +/-(2^mag_bits - 1); wrap is two's complement in
/// (mag_bits + 1) bits.
struct SignedRegister {
    std::int32_t value = 0;
    int mag_bits = 8;
    RegisterPolicy policy = RegisterPolicy::saturate;
};

/// Maps an 8-bit image onto PWM duty cycles: intensity i becomes
/// i * ticks / 256 high ticks (the identity map for the default 256-tick
/// window). Windows shorter than 256 ticks cannot hold 8-bit data and are
/// rejected rather than silently truncated.
PwmFrame encode_pwm(const Image8& image, PwmWindow window);

/// Builds the sampling schedule for a tap whose scaled value is a signed
/// sample count. midpoint places sample j at floor((2j+1)*ticks / (2N));
/// leading places it at floor(j*ticks / N).
CoefficientSchedule make_schedule(int scaled_coefficient, PwmWindow window, PhaseRule rule = PhaseRule::midpoint);

/// Counts how many schedule instants fall inside the high interval
/// [0, high_ticks) and applies both the data sign and the tap sign.
int sample_count(int high_ticks, int sign_data, const CoefficientSchedule& schedule);

/// Register update with the policy applied: one counting phase's worth of
/// pulses lands as a single signed delta.
SignedRegister accumulate(SignedRegister reg, std::int32_t delta);

/// Shared clamp/wrap arithmetic behind accumulate and the register plane.
std::int32_t apply_register_policy(std::int64_t value, int mag_bits, RegisterPolicy policy);

}  // namespace pulsegrid
