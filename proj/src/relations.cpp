#include "dilogeq/relations.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace dilogeq {

namespace {

int wrap(int v, int n) {
    int r = v % n;
    return r <= 0 ? r + n : r;
}

// Product of u over the cyclic rectangle [lo1..hi1] x [lo2..hi2].
double rectangle_product(int lo1, int hi1, int lo2, int hi2, const CoordMap& m) {
    int n = m.n();
    double prod = 1.0;
    for (int i = lo1; i <= hi1; ++i)
        for (int j = lo2; j <= hi2; ++j) prod *= m.at(wrap(i, n), wrap(j, n));
    return prod;
}

}  // namespace

double check_chord_relation(const Chord& c, const CoordMap& m) {
    double prod = 1.0;
    for (const Chord& x : crossing_set(c)) prod *= m.at(x);
    return m.at(c) + prod - 1.0;
}

double check_block_relation(int a, int b, int c, int d, const CoordMap& m) {
    int n = m.n();
    for (int v : {a, b, c, d})
        if (v < 1 || v > n)
            throw std::invalid_argument("rectangle corner " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
    // Distinct and in cyclic order seen from a.
    int pb = wrap(b - a, n), pc = wrap(c - a, n), pd = wrap(d - a, n);
    if (!(0 < pb && pb < pc && pc < pd && pd < n))
        throw std::invalid_argument("rectangle corners not in cyclic order; products would "
                                    "contain non-chord pairs");
    double first = rectangle_product(a, a + pb - 1, a + pc, a + pd - 1, m);
    double second = rectangle_product(a + pb, a + pc - 1, a + pd, a + n - 1, m);
    return first + second - 1.0;
}

std::vector<std::array<int, 4>> enumerate_block_rectangles(int n) {
    std::vector<std::array<int, 4>> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) out.push_back({a, b, c, d});
    return out;
}

FormalSum<WedgePair> wedge_sum(int n) {
    FormalSum<WedgePair> sum;
    for (const Chord& c : enumerate_chords(n))
        for (const Chord& x : crossing_set(c)) {
            if (c < x)
                sum.add({c, x}, 1);
            else
                sum.add({x, c}, -1);
        }
    return sum;
}

DegenerationResult degenerate(const Chord& c) {
    DegenerationResult r;
    r.chord = c;
    r.forced_one = crossing_set(c);
    for (int v = c.i; v <= c.j; ++v) r.side1.push_back(v);
    for (int v = c.j; v <= c.i + c.n; ++v) r.side2.push_back(wrap(v, c.n));
    r.n1 = static_cast<int>(r.side1.size());
    r.n2 = static_cast<int>(r.side2.size());
    for (const Chord& x : enumerate_chords(c.n)) {
        if (x == c || crosses(c, x)) continue;
        // Both endpoints of a surviving chord lie in one closed arc.
        bool in1 = c.i <= x.i && x.j <= c.j;
        if (in1)
            r.side1_chords.push_back(x);
        else
            r.side2_chords.push_back(x);
    }
    return r;
}

CoordMap degeneration_endpoint(const Chord& c, double eps, double fill) {
    int n = c.n;
    // Rotate labels so c maps to the star chord {1, j0}.
    int j0 = c.j - c.i + 1;
    std::vector<double> x(static_cast<std::size_t>(n - 3), fill);
    x[static_cast<std::size_t>(j0 - 3)] = eps;
    PointConfig rotated = config_from_star(StarCoords(n, std::move(x)));
    std::vector<ProjPoint> z(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        z[static_cast<std::size_t>(v - 1)] = rotated.at(wrap(v - c.i + 1, n));
    return dihedral_coords(PointConfig(std::move(z)));
}

}  // namespace dilogeq
