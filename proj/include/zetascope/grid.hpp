#pragma once

#include <utility>
#include <vector>

namespace zetascope {

struct Region {
    double x_min, x_max, y_min, y_max;
};

// Row-major rectangular sample of re/im zeta.  Masked samples (pole-adjacent
// or per-point evaluation failures) hold NaN and are skipped by contouring.
struct GridField {
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    int nx = 0, ny = 0;
    std::vector<double> re_values, im_values;  // size nx*ny, index j*nx + i

    double x_at(int i) const { return x_min + (x_max - x_min) * i / (nx - 1); }
    double y_at(int j) const { return y_min + (y_max - y_min) * j / (ny - 1); }
    int idx(int i, int j) const { return j * nx + i; }
};

GridField grid_eval(const Region& region, int nx, int ny, double tol);

struct Polyline {
    enum class Kind { re_zero, im_zero };
    Kind kind = Kind::re_zero;
    std::vector<std::pair<double, double>> points;  // (x, y)
};

// Marching-squares extraction of the re = 0 and im = 0 level curves, with
// linear interpolation along cell edges and deterministic stitching.
std::vector<Polyline> extract_zero_curves(const GridField& field);

}  // namespace zetascope
