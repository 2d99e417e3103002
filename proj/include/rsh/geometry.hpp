#ifndef RSH_GEOMETRY_HPP
#define RSH_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rsh/rng.hpp"

namespace rsh {

struct Pt {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const Pt&, const Pt&) = default;
};

// Sign of the cross product (b-a) x (c-a): positive = counterclockwise.
// Exact on grid coordinates.
int orientation(const Pt& a, const Pt& b, const Pt& c);

// Strictly interior segment crossing (shared endpoints excluded by the
// caller; collinear configurations cannot occur on valid point sets).
bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// Planar instance on an m x m integer grid. Construction rejects duplicate
// points and collinear triples, then fixes the convex hull order gamma
// (counterclockwise, starting at the lexicographically smallest point) and
// the inner point set.
class PointSet {
public:
    static PointSet create(std::vector<Pt> points, int grid_m);

    int n() const { return static_cast<int>(pts_.size()); }
    int grid_m() const { return grid_m_; }
    const std::vector<Pt>& points() const { return pts_; }
    const Pt& point(int i) const { return pts_[i]; }

    const std::vector<int>& hull() const { return hull_; }       // gamma
    const std::vector<int>& inner() const { return inner_; }     // sorted ids
    int k() const { return static_cast<int>(inner_.size()); }

    double dist(int i, int j) const;

private:
    std::vector<Pt> pts_;
    int grid_m_ = 0;
    std::vector<int> hull_;
    std::vector<int> inner_;
};

// Largest eps such that every angle among ordered point triples lies in
// (eps, pi - eps), and the derived improvement budget
// A(eps) = (d_max/d_min - 1) * cos(eps) / (1 - cos(eps)).
struct AngleBound {
    double epsilon = 0.0;
    double a_eps = 0.0;
    double d_min = 0.0;
    double d_max = 0.0;
};
AngleBound angle_bound(const PointSet& ps);

// Minimum improvement of a crossing-removing 2-opt move on an instance
// angle-bounded by eps: 2 d_min (1 - cos eps) / cos eps.
double min_crossing_improvement(const AngleBound& ab);

// Instance generators (retry until the no-collinear/no-duplicate and hull
// shape constraints hold).
PointSet gen_convex_instance(int n, int grid_m, RngStream& rng);
PointSet gen_inner_instance(int n, int k, int grid_m, RngStream& rng);

// Point file: optional '#' comments, "n m" header, then n lines "x y".
void save_points_file(const std::string& path, const PointSet& ps,
                      const std::string& comment = "");
PointSet load_points_file(const std::string& path);

} // namespace rsh

#endif
