#include "rsh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rsh {

int orientation(const Pt& a, const Pt& b, const Pt& c) {
    const long long cross =
        (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return (cross > 0) - (cross < 0);
}

bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

PointSet PointSet::create(std::vector<Pt> points, int grid_m) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw std::invalid_argument("need at least 3 points");
    for (const Pt& p : points)
        if (p.x < 0 || p.y < 0 || p.x >= grid_m || p.y >= grid_m)
            throw std::invalid_argument("point outside grid");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw std::invalid_argument("duplicate point");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l)
                if (orientation(points[i], points[j], points[l]) == 0)
                    throw std::invalid_argument("collinear triple");

    PointSet ps;
    ps.pts_ = std::move(points);
    ps.grid_m_ = grid_m;

    // Andrew's monotone chain: counterclockwise hull starting at the
    // lexicographically smallest point. Collinear triples were rejected, so
    // strictness of the pops never matters.
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return ps.pts_[a].x != ps.pts_[b].x ? ps.pts_[a].x < ps.pts_[b].x
                                            : ps.pts_[a].y < ps.pts_[b].y;
    });
    std::vector<int> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) { // lower
        while (k >= 2 &&
               orientation(ps.pts_[hull[k - 2]], ps.pts_[hull[k - 1]], ps.pts_[ids[i]]) <= 0)
            --k;
        hull[k++] = ids[i];
    }
    for (int i = n - 2, t = k + 1; i >= 0; --i) { // upper
        while (k >= t &&
               orientation(ps.pts_[hull[k - 2]], ps.pts_[hull[k - 1]], ps.pts_[ids[i]]) <= 0)
            --k;
        hull[k++] = ids[i];
    }
    ps.hull_.assign(hull.begin(), hull.begin() + (k - 1)); // last repeats the first

    std::vector<char> on_hull(n, 0);
    for (int v : ps.hull_) on_hull[v] = 1;
    for (int i = 0; i < n; ++i)
        if (!on_hull[i]) ps.inner_.push_back(i);
    return ps;
}

double PointSet::dist(int i, int j) const {
    const double dx = static_cast<double>(pts_[i].x - pts_[j].x);
    const double dy = static_cast<double>(pts_[i].y - pts_[j].y);
    return std::sqrt(dx * dx + dy * dy);
}

AngleBound angle_bound(const PointSet& ps) {
    const int n = ps.n();
    AngleBound ab;
    ab.d_min = 1e300;
    ab.d_max = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = ps.dist(i, j);
            ab.d_min = std::min(ab.d_min, d);
            ab.d_max = std::max(ab.d_max, d);
        }

    double min_side = std::numbers::pi; // min over triples of min(theta, pi - theta)
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            for (int w = u + 1; w < n; ++w) {
                if (w == v) continue;
                const Pt& pv = ps.point(v);
                const Pt& pu = ps.point(u);
                const Pt& pw = ps.point(w);
                const double ax = static_cast<double>(pu.x - pv.x);
                const double ay = static_cast<double>(pu.y - pv.y);
                const double bx = static_cast<double>(pw.x - pv.x);
                const double by = static_cast<double>(pw.y - pv.y);
                const double dot = ax * bx + ay * by;
                const double cross = ax * by - ay * bx;
                const double theta = std::atan2(std::abs(cross), dot);
                min_side = std::min(min_side, std::min(theta, std::numbers::pi - theta));
            }
        }
    ab.epsilon = min_side;
    const double c = std::cos(ab.epsilon);
    ab.a_eps = (ab.d_max / ab.d_min - 1.0) * (c / (1.0 - c));
    return ab;
}

double min_crossing_improvement(const AngleBound& ab) {
    const double c = std::cos(ab.epsilon);
    return 2.0 * ab.d_min * (1.0 - c) / c;
}

namespace {

bool valid_point_set(const std::vector<Pt>& pts, int grid_m, PointSet* out) {
    try {
        PointSet ps = PointSet::create(pts, grid_m);
        if (out) *out = std::move(ps);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

} // namespace

PointSet gen_convex_instance(int n, int grid_m, RngStream& rng) {
    const double cx = (grid_m - 1) / 2.0;
    const double radius = (grid_m - 1) / 2.0 - 1.0;
    if (radius < 2) throw std::invalid_argument("grid too small");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<double> angles(n);
        for (double& a : angles) a = rng.next_double() * 2.0 * std::numbers::pi;
        std::sort(angles.begin(), angles.end());
        std::vector<Pt> pts;
        for (double a : angles)
            pts.push_back(Pt{static_cast<long long>(std::llround(cx + radius * std::cos(a))),
                             static_cast<long long>(std::llround(cx + radius * std::sin(a)))});
        PointSet ps;
        if (!valid_point_set(pts, grid_m, &ps)) continue;
        if (ps.k() != 0) continue;
        return ps;
    }
    throw std::runtime_error("could not sample a convex instance");
}

PointSet gen_inner_instance(int n, int k, int grid_m, RngStream& rng) {
    if (k < 0 || n - k < 3) throw std::invalid_argument("need at least 3 hull points");
    const double cx = (grid_m - 1) / 2.0;
    const double radius = (grid_m - 1) / 2.0 - 1.0;
    if (radius < 4) throw std::invalid_argument("grid too small");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Pt> pts;
        std::vector<double> angles(n - k);
        for (double& a : angles) a = rng.next_double() * 2.0 * std::numbers::pi;
        std::sort(angles.begin(), angles.end());
        for (double a : angles)
            pts.push_back(Pt{static_cast<long long>(std::llround(cx + radius * std::cos(a))),
                             static_cast<long long>(std::llround(cx + radius * std::sin(a)))});
        for (int i = 0; i < k; ++i) {
            const double a = rng.next_double() * 2.0 * std::numbers::pi;
            const double r = radius * 0.55 * std::sqrt(rng.next_double());
            pts.push_back(Pt{static_cast<long long>(std::llround(cx + r * std::cos(a))),
                             static_cast<long long>(std::llround(cx + r * std::sin(a)))});
        }
        PointSet ps;
        if (!valid_point_set(pts, grid_m, &ps)) continue;
        if (ps.k() != k) continue;
        return ps;
    }
    throw std::runtime_error("could not sample an instance with the requested inner count");
}

void save_points_file(const std::string& path, const PointSet& ps, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (!comment.empty()) out << "# " << comment << "\n";
    out << ps.n() << " " << ps.grid_m() << "\n";
    for (const Pt& p : ps.points()) out << p.x << " " << p.y << "\n";
}

PointSet load_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    int n = -1, m = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream head(line);
        if (!(head >> n >> m)) throw std::runtime_error("bad points header");
        break;
    }
    if (n < 0) throw std::runtime_error("missing points header");
    std::vector<Pt> pts;
    while (static_cast<int>(pts.size()) < n && std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        Pt p;
        if (!(row >> p.x >> p.y)) throw std::runtime_error("bad point line");
        pts.push_back(p);
    }
    if (static_cast<int>(pts.size()) != n) throw std::runtime_error("truncated point list");
    return PointSet::create(std::move(pts), m);
}

} // namespace rsh
