#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cervreg {

/// Normalized single-channel raster. Pixels are row-major, intensities in [0,1].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<float> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, float fill = 0.0f)
        : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

    float& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    float at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }

    size_t size() const { return pixels.size(); }
    bool empty() const { return pixels.empty(); }
    bool same_dims(const GrayImage& o) const { return width == o.width && height == o.height; }
};

/// Per-pixel displacement vectors u = (u_x, u_y), in pixels.
/// The registration field is phi = Id + u: output pixel (x,y) samples the
/// moving image at (x + u_x, y + u_y).
struct DisplacementField {
    int width = 0;
    int height = 0;
    std::vector<float> u_x;
    std::vector<float> u_y;

    DisplacementField() = default;
    DisplacementField(int w, int h)
        : width(w), height(h),
          u_x(static_cast<size_t>(w) * h, 0.0f),
          u_y(static_cast<size_t>(w) * h, 0.0f) {}

    size_t idx(int x, int y) const { return static_cast<size_t>(y) * width + x; }
    size_t size() const { return u_x.size(); }
};

/// Per-pixel foreground flag.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h, uint8_t fill = 0)
        : width(w), height(h), bits(static_cast<size_t>(w) * h, fill) {}

    uint8_t& at(int x, int y) { return bits[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return bits[static_cast<size_t>(y) * width + x]; }

    size_t count() const;
};

/// Quantize to the 8-bit grid used by PGM files: round(v*255)/255, clamped.
/// Applied at pipeline stage boundaries so in-memory runs match runs that
/// round-trip through files.
float quantize8(float v);
GrayImage quantize8(const GrayImage& img);

/// Sum of intensities, accumulated in double.
double sum(const GrayImage& img);
double mean(const GrayImage& img);

/// Mean intensity over mask foreground. Throws on dimension mismatch or empty mask.
double mean_masked(const GrayImage& img, const BinaryMask& mask);

// --- I/O ---

/// Binary (P5) 8-bit grayscale PGM. Intensities map linearly [0,255] <-> [0,1].
GrayImage read_pgm(const std::string& path);
void write_pgm(const GrayImage& img, const std::string& path);

/// Displacement field CSV with header `x,y,ux,uy`, one row per pixel.
DisplacementField read_field_csv(const std::string& path);
void write_field_csv(const DisplacementField& field, const std::string& path);

}  // namespace cervreg
