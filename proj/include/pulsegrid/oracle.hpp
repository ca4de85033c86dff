#pragma once

#include <vector>

#include "pulsegrid/image.hpp"
#include "pulsegrid/kernel.hpp"
#include "pulsegrid/plan.hpp"
#include "pulsegrid/simulator.hpp"

namespace pulsegrid {

/// Double-precision plane, row-major. Used for exact reference results.
struct RealPlane {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    RealPlane() = default;
    RealPlane(int w, int h, double fill = 0.0);

    double at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
    double& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }

    RealPlane scaled(double factor) const;
    double max_abs_diff(const RealPlane& other) const;
};

RealPlane to_real(const Image8& image);
RealPlane to_real(const RegisterPlane& plane);

/// Exact 2D correlation: R[s,t] = sum over (x,y) of K[x,y] * P[s+x, t+y]
/// with out-of-range pixels read as zero. No kernel flip.
RealPlane ideal_convolve_2d(const RealPlane& image, const KernelSpec& kernel,
                            Boundary boundary = Boundary::zero_pad);

/// Exact two-stage evaluation of a plan at its pre-quantization factors and
/// gains, summed over passes. Agrees with ideal_convolve_2d of the
/// reconstructed kernel times realized_scale to within factorization
/// tolerance.
RealPlane ideal_separable(const RealPlane& image, const PassPlan& plan,
                          Boundary boundary = Boundary::zero_pad);

/// Exact two-stage evaluation at the quantized tap values (sign * N / ticks)
/// with unbounded registers: what the array would produce with perfect
/// sampling, isolating coefficient rounding from sampling and register
/// truncation.
RealPlane quantized_reference(const RealPlane& image, const PassPlan& plan,
                              Boundary boundary = Boundary::zero_pad);

}  // namespace pulsegrid
