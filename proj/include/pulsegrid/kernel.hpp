#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pulsegrid {

/// Real-valued convolution kernel with odd dimensions, row-major.
struct KernelSpec {
    int rows = 0;
    int cols = 0;
    std::vector<double> coeffs;
    std::string name;

    double at(int r, int c) const { return coeffs[static_cast<std::size_t>(r) * cols + c]; }
    double& at(int r, int c) { return coeffs[static_cast<std::size_t>(r) * cols + c]; }
    double max_abs() const;
    bool has_negative() const;
};

/// Parses the plain-text kernel format: one row per line, whitespace-
/// separated decimals, '#' comment lines allowed. Dimensions must be odd and
/// rows equally long; violations raise ParseError with line/column context.
KernelSpec parse_kernel(std::string_view text, std::string_view name = "");

/// Built-in kernel library: edge1, edge2, log5, sharpen.
KernelSpec builtin_kernel(std::string_view name);
const std::vector<std::string>& builtin_kernel_names();

/// One separable stage: a column factor (length rows) and a row factor
/// (length cols) whose outer product is one rank-1 term of the kernel.
/// Factors are balanced so the two stages carry equal peak magnitude.
struct FactorPair {
    std::vector<double> v;  // vertical factor, applied along columns
    std::vector<double> h;  // horizontal factor, applied along rows
};

/// Deterministic rank-revealing decomposition: repeatedly take the residual's
/// largest-magnitude entry as pivot, split off the cross through it
/// (column times row over pivot), and subtract. Row-major scan order breaks
/// ties, so the result is identical across runs and platforms. The number of
/// returned pairs equals the numerical rank at `tolerance`, and the sum of
/// outer products reconstructs the kernel to within `tolerance`.
std::vector<FactorPair> factorize(const KernelSpec& kernel, double tolerance = 1e-9);

}  // namespace pulsegrid
