#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dilogeq/chords.hpp"

namespace dilogeq {

// A point of the real projective line: a finite value or the point at
// infinity.
struct ProjPoint {
    double value = 0.0;
    bool infinite = false;

    static ProjPoint at_infinity() { return ProjPoint{0.0, true}; }
    static ProjPoint finite(double v) { return ProjPoint{v, false}; }
};

// n pairwise-distinct points z_1, ..., z_n in cyclic order on the real
// circle (z_1 < z_2 < ... < z_n < z_1, at most one point at infinity).
// Such a configuration represents a point of the open standard cell.
class PointConfig {
public:
    explicit PointConfig(std::vector<ProjPoint> z);  // validates

    int size() const { return static_cast<int>(z_.size()); }
    const ProjPoint& at(int idx1) const;  // 1-based, wraps mod n
    const std::vector<ProjPoint>& points() const { return z_; }

private:
    std::vector<ProjPoint> z_;
};

// The star chart {u_{1,3}, ..., u_{1,n-1}}: x[j-3] = u_{1,j}, each in (0,1).
struct StarCoords {
    int n = 0;
    std::vector<double> x;

    StarCoords(int n, std::vector<double> x);  // validates
};

// Values of every dihedral coordinate u_{i,j}, {i,j} in chi_n.
class CoordMap {
public:
    explicit CoordMap(int n) : n_(n) {}

    int n() const { return n_; }
    double at(const Chord& c) const;
    double at(int i, int j) const;  // normalizes the pair before lookup
    void set(const Chord& c, double v) { values_[c] = v; }
    const std::map<Chord, double>& values() const { return values_; }

private:
    int n_ = 0;
    std::map<Chord, double> values_;
};

// [a b | c d] = (a-c)(b-d) / ((a-d)(b-c)); if one argument is the point at
// infinity, the two factors containing it are cancelled before any
// floating-point division.
double cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                   const ProjPoint& d);

// u_{i,j} = [i i+1 | j+1 j], indices mod n. Normalized in (i, j) first, so
// (i, j) and (j, i) evaluate identically.
double dihedral_coord(const PointConfig& cfg, int i, int j);

CoordMap dihedral_coords(const PointConfig& cfg);

// The gauge-fixed representative z_1 = inf, z_2 = 0, z_n = 1,
// z_j = x_j x_{j+1} ... x_{n-1} for 3 <= j <= n-1. Round-trips:
// dihedral coordinates at the star chords {1,j} reproduce x_j.
PointConfig config_from_star(const StarCoords& s);

// Deterministic sample of the open cell: n-3 uniforms in
// [margin, 1-margin] drawn from the seed, fed through config_from_star.
StarCoords sample_star(int n, std::uint64_t seed, double margin);
PointConfig sample_cell(int n, std::uint64_t seed, double margin);

}  // namespace dilogeq
