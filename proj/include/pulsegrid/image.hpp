#pragma once

#include <cstdint>
#include <vector>

namespace pulsegrid {

/// 8-bit grayscale image, row-major.
struct Image8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    Image8() = default;
    Image8(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
    std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
    std::size_t size() const { return pixels.size(); }

    bool operator==(const Image8&) const = default;
};

/// Multiplies every pixel by `factor` in (0, 1], rounding half up and
/// clamping to [0, 255]. Used to derive low-light variants of a scene.
Image8 scale_illumination(const Image8& image, double factor);

}  // namespace pulsegrid
