#include "doctest.h"

#include <cmath>
#include <functional>
#include <limits>

#include "zetascope/errors.hpp"
#include "zetascope/grid.hpp"
#include "zetascope/zeta.hpp"

using namespace zetascope;

namespace {

// Synthetic field: re channel from `f`, im channel held at +1 so the im
// tracer stays quiet.
GridField make_field(double x_min, double x_max, double y_min, double y_max,
                     int nx, int ny, const std::function<double(double, double)>& f) {
    GridField g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.y_min = y_min;
    g.y_max = y_max;
    g.nx = nx;
    g.ny = ny;
    g.re_values.assign(static_cast<size_t>(nx) * ny, 0.0);
    g.im_values.assign(static_cast<size_t>(nx) * ny, 1.0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            g.re_values[static_cast<size_t>(g.idx(i, j))] = f(g.x_at(i), g.y_at(j));
    return g;
}

size_t count_kind(const std::vector<Polyline>& curves, Polyline::Kind kind) {
    size_t n = 0;
    for (const auto& c : curves)
        if (c.kind == kind) ++n;
    return n;
}

}  // namespace

TEST_CASE("grid_eval validation") {
    CHECK_THROWS_AS(grid_eval({0.0, 1.0, 0.0, 1.0}, 1, 5, 1e-10), domain_error);
    CHECK_THROWS_AS(grid_eval({0.0, 1.0, 0.0, 1.0}, 5, 1, 1e-10), domain_error);
    CHECK_THROWS_AS(grid_eval({1.0, 1.0, 0.0, 1.0}, 5, 5, 1e-10), domain_error);
    CHECK_THROWS_AS(grid_eval({0.0, 1.0, 2.0, -2.0}, 5, 5, 1e-10), domain_error);
}

TEST_CASE("grid nodes hold plain zeta values") {
    const GridField f = grid_eval({2.0, 3.0, 5.0, 6.0}, 3, 3, 1e-10);
    CHECK(f.nx == 3);
    CHECK(f.ny == 3);
    CHECK(f.x_at(0) == 2.0);
    CHECK(f.x_at(2) == 3.0);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            const Cplx v = zeta(Cplx(f.x_at(i), f.y_at(j)), 1e-10).value;
            CHECK(f.re_values[static_cast<size_t>(f.idx(i, j))] == v.real());
            CHECK(f.im_values[static_cast<size_t>(f.idx(i, j))] == v.imag());
        }
}

TEST_CASE("nodes near the pole are masked with NaN") {
    const GridField f = grid_eval({0.5, 1.5, -0.5, 0.5}, 3, 3, 1e-10);
    CHECK(std::isnan(f.re_values[static_cast<size_t>(f.idx(1, 1))]));
    CHECK(std::isnan(f.im_values[static_cast<size_t>(f.idx(1, 1))]));
    CHECK_FALSE(std::isnan(f.re_values[static_cast<size_t>(f.idx(0, 1))]));
    CHECK_FALSE(std::isnan(f.re_values[static_cast<size_t>(f.idx(1, 0))]));
}

TEST_CASE("vertical line level set comes out as one open chain") {
    const GridField g = make_field(0.0, 1.0, 0.0, 1.0, 5, 5,
                                   [](double x, double) { return x - 0.5; });
    const std::vector<Polyline> curves = extract_zero_curves(g);
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].kind == Polyline::Kind::re_zero);
    REQUIRE(curves[0].points.size() == 5);
    double prev_y = -1.0;
    for (const auto& [x, y] : curves[0].points) {
        CHECK(x == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(y > prev_y);
        prev_y = y;
    }
    CHECK(curves[0].points.front().second == 0.0);
    CHECK(curves[0].points.back().second == 1.0);
}

TEST_CASE("circle level set comes out as one closed loop") {
    const GridField g = make_field(-1.0, 1.0, -1.0, 1.0, 21, 21, [](double x, double y) {
        return x * x + y * y - 0.25;
    });
    const std::vector<Polyline> curves = extract_zero_curves(g);
    REQUIRE(curves.size() == 1);
    const auto& pts = curves[0].points;
    REQUIRE(pts.size() >= 9);
    CHECK(pts.front() == pts.back());
    for (const auto& [x, y] : pts)
        CHECK(std::abs(std::hypot(x, y) - 0.5) < 0.01);
}

TEST_CASE("saddle cell splits into two segments") {
    GridField g;
    g.x_min = 0.0;
    g.x_max = 1.0;
    g.y_min = 0.0;
    g.y_max = 1.0;
    g.nx = 2;
    g.ny = 2;
    g.re_values = {-1.0, 1.0, 1.0, -1.0};  // a, b, d... row-major: (0,0),(1,0),(0,1),(1,1)
    g.im_values = {1.0, 1.0, 1.0, 1.0};
    const std::vector<Polyline> curves = extract_zero_curves(g);
    REQUIRE(curves.size() == 2);
    for (const auto& c : curves) {
        CHECK(c.kind == Polyline::Kind::re_zero);
        CHECK(c.points.size() == 2);
    }
}

TEST_CASE("a NaN corner silences its cell") {
    GridField g;
    g.x_min = 0.0;
    g.x_max = 1.0;
    g.y_min = 0.0;
    g.y_max = 1.0;
    g.nx = 2;
    g.ny = 2;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    g.re_values = {nan, 1.0, -1.0, 1.0};
    g.im_values = {1.0, 1.0, 1.0, 1.0};
    CHECK(extract_zero_curves(g).empty());
}

TEST_CASE("extraction is deterministic") {
    const GridField g = make_field(-1.0, 1.0, -1.0, 1.0, 15, 15, [](double x, double y) {
        return std::sin(3.0 * x) + 0.3 * y;
    });
    const auto a = extract_zero_curves(g);
    const auto b = extract_zero_curves(g);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].kind == b[i].kind);
        CHECK(a[i].points == b[i].points);
    }
}

TEST_CASE("zeta zero curves pass near the first critical zero") {
    const GridField f = grid_eval({0.0, 1.0, 12.0, 16.0}, 41, 41, 1e-10);
    const std::vector<Polyline> curves = extract_zero_curves(f);
    CHECK(count_kind(curves, Polyline::Kind::re_zero) >= 1);
    CHECK(count_kind(curves, Polyline::Kind::im_zero) >= 1);

    double best_re = 1e9, best_im = 1e9;
    for (const auto& c : curves) {
        for (const auto& [x, y] : c.points) {
            CHECK(x >= 0.0);
            CHECK(x <= 1.0);
            CHECK(y >= 12.0);
            CHECK(y <= 16.0);
            const double d = std::hypot(x - 0.5, y - 14.134725141734695);
            (c.kind == Polyline::Kind::re_zero ? best_re : best_im) =
                std::min(c.kind == Polyline::Kind::re_zero ? best_re : best_im, d);
        }
    }
    // Both curve families must thread the cell block around the zero; one
    // cell is 0.025 x 0.1.
    CHECK(best_re < 0.15);
    CHECK(best_im < 0.15);
}
