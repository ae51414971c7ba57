#include "cervreg/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cervreg {

size_t BinaryMask::count() const {
    size_t n = 0;
    for (uint8_t b : bits) n += (b != 0);
    return n;
}

float quantize8(float v) {
    float c = std::clamp(v, 0.0f, 1.0f);
    return static_cast<float>(std::lround(c * 255.0f)) / 255.0f;
}

GrayImage quantize8(const GrayImage& img) {
    GrayImage out(img.width, img.height);
    for (size_t i = 0; i < img.pixels.size(); ++i) out.pixels[i] = quantize8(img.pixels[i]);
    return out;
}

double sum(const GrayImage& img) {
    double s = 0.0;
    for (float v : img.pixels) s += v;
    return s;
}

double mean(const GrayImage& img) {
    if (img.empty()) throw std::invalid_argument("mean: empty image");
    return sum(img) / static_cast<double>(img.size());
}

double mean_masked(const GrayImage& img, const BinaryMask& mask) {
    if (img.width != mask.width || img.height != mask.height)
        throw std::invalid_argument("mean_masked: dimension mismatch");
    double s = 0.0;
    size_t n = 0;
    for (size_t i = 0; i < img.pixels.size(); ++i) {
        if (mask.bits[i]) {
            s += img.pixels[i];
            ++n;
        }
    }
    if (n == 0) throw std::invalid_argument("mean_masked: empty mask");
    return s / static_cast<double>(n);
}

namespace {

// Skips whitespace and '#' comment lines between PGM header tokens.
int next_header_int(std::istream& in) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF) throw std::runtime_error("pgm: truncated header");
    int value = 0;
    bool any = false;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        any = true;
        c = in.get();
    }
    if (!any) throw std::runtime_error("pgm: malformed header");
    return value;
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("pgm: cannot open " + path);
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || m1 != '5') throw std::runtime_error("pgm: not a binary P5 file: " + path);
    int w = next_header_int(in);
    int h = next_header_int(in);
    int maxval = next_header_int(in);
    if (w <= 0 || h <= 0) throw std::runtime_error("pgm: bad dimensions in " + path);
    if (maxval != 255) throw std::runtime_error("pgm: only maxval 255 supported: " + path);
    std::vector<uint8_t> raw(static_cast<size_t>(w) * h);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size()))
        throw std::runtime_error("pgm: truncated pixel data in " + path);
    GrayImage img(w, h);
    for (size_t i = 0; i < raw.size(); ++i) img.pixels[i] = raw[i] / 255.0f;
    return img;
}

void write_pgm(const GrayImage& img, const std::string& path) {
    if (img.empty()) throw std::invalid_argument("pgm: empty image");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("pgm: cannot write " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::vector<uint8_t> raw(img.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        float c = std::clamp(img.pixels[i], 0.0f, 1.0f);
        raw[i] = static_cast<uint8_t>(std::lround(c * 255.0f));
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out) throw std::runtime_error("pgm: write failed for " + path);
}

DisplacementField read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("field csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,y,ux,uy", 0) != 0)
        throw std::runtime_error("field csv: missing `x,y,ux,uy` header in " + path);
    struct Row {
        int x, y;
        float ux, uy;
    };
    std::vector<Row> rows;
    int maxx = -1, maxy = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Row r;
        char c1, c2, c3;
        std::istringstream ss(line);
        if (!(ss >> r.x >> c1 >> r.y >> c2 >> r.ux >> c3 >> r.uy) || c1 != ',' || c2 != ',' || c3 != ',')
            throw std::runtime_error("field csv: malformed row `" + line + "` in " + path);
        rows.push_back(r);
        maxx = std::max(maxx, r.x);
        maxy = std::max(maxy, r.y);
    }
    if (rows.empty()) throw std::runtime_error("field csv: no rows in " + path);
    DisplacementField f(maxx + 1, maxy + 1);
    if (rows.size() != f.size()) throw std::runtime_error("field csv: incomplete grid in " + path);
    for (const Row& r : rows) {
        f.u_x[f.idx(r.x, r.y)] = r.ux;
        f.u_y[f.idx(r.x, r.y)] = r.uy;
    }
    return f;
}

void write_field_csv(const DisplacementField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("field csv: cannot write " + path);
    out << "x,y,ux,uy\n";
    char buf[128];
    for (int y = 0; y < field.height; ++y) {
        for (int x = 0; x < field.width; ++x) {
            size_t i = field.idx(x, y);
            std::snprintf(buf, sizeof(buf), "%d,%d,%.9g,%.9g\n", x, y, field.u_x[i], field.u_y[i]);
            out << buf;
        }
    }
    if (!out) throw std::runtime_error("field csv: write failed for " + path);
}

}  // namespace cervreg
