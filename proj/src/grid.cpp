#include "zetascope/grid.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "zetascope/errors.hpp"
#include "zetascope/zeta.hpp"

namespace zetascope {

GridField grid_eval(const Region& region, int nx, int ny, double tol) {
    if (nx < 2 || ny < 2) throw domain_error("grid_eval: need nx, ny >= 2");
    if (!(region.x_min < region.x_max) || !(region.y_min < region.y_max))
        throw domain_error("grid_eval: empty region");

    GridField f;
    f.x_min = region.x_min;
    f.x_max = region.x_max;
    f.y_min = region.y_min;
    f.y_max = region.y_max;
    f.nx = nx;
    f.ny = ny;
    f.re_values.assign(static_cast<size_t>(nx) * ny, 0.0);
    f.im_values.assign(static_cast<size_t>(nx) * ny, 0.0);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const Cplx s(f.x_at(i), f.y_at(j));
            const size_t k = static_cast<size_t>(f.idx(i, j));
            if (std::abs(s - Cplx(1.0, 0.0)) < 1e-3) {
                f.re_values[k] = nan;
                f.im_values[k] = nan;
                continue;
            }
            try {
                const Cplx v = zeta(s, tol).value;
                f.re_values[k] = v.real();
                f.im_values[k] = v.imag();
            } catch (const numeric_error&) {
                f.re_values[k] = nan;
                f.im_values[k] = nan;
            }
        }
    }
    return f;
}

namespace {

using Point = std::pair<double, double>;

// One marching-squares pass over a single scalar channel.  Edges carry
// global ids (horizontals first) so the two cells sharing an edge agree on
// the crossing point and the stitcher can walk by id.
class LevelTracer {
  public:
    LevelTracer(const GridField& f, const std::vector<double>& v) : f_(f), v_(v) {}

    std::vector<std::vector<Point>> run() {
        for (int j = 0; j + 1 < f_.ny; ++j)
            for (int i = 0; i + 1 < f_.nx; ++i) cell(i, j);
        return stitch();
    }

  private:
    const GridField& f_;
    const std::vector<double>& v_;
    std::map<long long, Point> pts_;
    std::map<long long, std::vector<std::pair<long long, size_t>>> adj_;
    std::vector<std::pair<long long, long long>> segs_;

    long long hid(int i, int j) const { return static_cast<long long>(j) * (f_.nx - 1) + i; }
    long long vid(int i, int j) const {
        return static_cast<long long>(f_.nx - 1) * f_.ny + static_cast<long long>(j) * f_.nx + i;
    }

    double val(int i, int j) const { return v_[static_cast<size_t>(f_.idx(i, j))]; }

    // Crossing point on the edge from node (i0,j0) to node (i1,j1).
    Point cross(int i0, int j0, int i1, int j1) const {
        const double v0 = val(i0, j0), v1 = val(i1, j1);
        const double t = v0 / (v0 - v1);
        return {f_.x_at(i0) + t * (f_.x_at(i1) - f_.x_at(i0)),
                f_.y_at(j0) + t * (f_.y_at(j1) - f_.y_at(j0))};
    }

    void seg(long long ea, Point pa, long long eb, Point pb) {
        pts_.emplace(ea, pa);
        pts_.emplace(eb, pb);
        const size_t k = segs_.size();
        segs_.emplace_back(ea, eb);
        adj_[ea].emplace_back(eb, k);
        adj_[eb].emplace_back(ea, k);
    }

    void cell(int i, int j) {
        const double va = val(i, j), vb = val(i + 1, j);
        const double vc = val(i + 1, j + 1), vd = val(i, j + 1);
        if (std::isnan(va) || std::isnan(vb) || std::isnan(vc) || std::isnan(vd)) return;

        const int code = (va < 0 ? 1 : 0) | (vb < 0 ? 2 : 0) | (vc < 0 ? 4 : 0) |
                         (vd < 0 ? 8 : 0);
        if (code == 0 || code == 15) return;

        const long long B = hid(i, j), T = hid(i, j + 1);
        const long long L = vid(i, j), R = vid(i + 1, j);
        auto pB = [&] { return cross(i, j, i + 1, j); };
        auto pT = [&] { return cross(i, j + 1, i + 1, j + 1); };
        auto pL = [&] { return cross(i, j, i, j + 1); };
        auto pR = [&] { return cross(i + 1, j, i + 1, j + 1); };

        switch (code) {
            case 1: case 14: seg(B, pB(), L, pL()); break;
            case 2: case 13: seg(B, pB(), R, pR()); break;
            case 3: case 12: seg(L, pL(), R, pR()); break;
            case 4: case 11: seg(R, pR(), T, pT()); break;
            case 6: case 9: seg(B, pB(), T, pT()); break;
            case 7: case 8: seg(L, pL(), T, pT()); break;
            case 5:  // a,c negative: resolve by cell-center sign
                if (0.25 * (va + vb + vc + vd) < 0) {
                    seg(B, pB(), R, pR());
                    seg(L, pL(), T, pT());
                } else {
                    seg(B, pB(), L, pL());
                    seg(R, pR(), T, pT());
                }
                break;
            case 10:  // b,d negative
                if (0.25 * (va + vb + vc + vd) < 0) {
                    seg(B, pB(), L, pL());
                    seg(R, pR(), T, pT());
                } else {
                    seg(B, pB(), R, pR());
                    seg(L, pL(), T, pT());
                }
                break;
            default: break;
        }
    }

    std::vector<std::vector<Point>> stitch() {
        std::vector<char> used(segs_.size(), 0);
        std::vector<std::vector<Point>> out;

        auto walk = [&](long long start) {
            std::vector<Point> path;
            path.push_back(pts_.at(start));
            long long cur = start;
            for (;;) {
                long long next = -1;
                for (const auto& [nb, k] : adj_.at(cur)) {
                    if (!used[k]) {
                        used[k] = 1;
                        next = nb;
                        break;
                    }
                }
                if (next < 0) break;
                path.push_back(pts_.at(next));
                cur = next;
            }
            return path;
        };

        auto degree = [&](long long e) {
            size_t d = 0;
            for (const auto& [nb, k] : adj_.at(e))
                if (!used[k]) ++d;
            return d;
        };

        // Open chains first, then whatever remains is a cycle; both passes
        // start from the smallest live edge id, so output order is fixed.
        for (const auto& [e, nbs] : adj_)
            if (degree(e) == 1) out.push_back(walk(e));
        for (const auto& [e, nbs] : adj_)
            if (degree(e) > 0) out.push_back(walk(e));
        return out;
    }
};

}  // namespace

std::vector<Polyline> extract_zero_curves(const GridField& field) {
    std::vector<Polyline> out;
    for (auto& path : LevelTracer(field, field.re_values).run())
        out.push_back({Polyline::Kind::re_zero, std::move(path)});
    for (auto& path : LevelTracer(field, field.im_values).run())
        out.push_back({Polyline::Kind::im_zero, std::move(path)});
    return out;
}

}  // namespace zetascope
