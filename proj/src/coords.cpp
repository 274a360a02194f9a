#include "dilogeq/coords.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace dilogeq {

namespace {

int wrap(int v, int n) {
    int r = v % n;
    return r <= 0 ? r + n : r;
}

bool same_point(const ProjPoint& p, const ProjPoint& q) {
    if (p.infinite || q.infinite) return p.infinite && q.infinite;
    return p.value == q.value;
}

}  // namespace

PointConfig::PointConfig(std::vector<ProjPoint> z) : z_(std::move(z)) {
    int n = static_cast<int>(z_.size());
    if (n < 4) throw std::invalid_argument("configuration needs at least 4 points");

    int infinities = 0;
    for (const auto& p : z_) infinities += p.infinite ? 1 : 0;
    if (infinities > 1) throw std::invalid_argument("more than one point at infinity");

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (same_point(z_[static_cast<std::size_t>(a)], z_[static_cast<std::size_t>(b)]))
                throw std::invalid_argument("configuration points are not pairwise distinct");

    // Cyclic order: walking z_1 -> z_2 -> ... -> z_n -> z_1 must go around
    // the circle exactly once. Each finite pair contributes a wrap when it
    // descends; the step leaving the point at infinity is the wrap there.
    int wraps = 0;
    for (int a = 0; a < n; ++a) {
        const auto& p = z_[static_cast<std::size_t>(a)];
        const auto& q = z_[static_cast<std::size_t>((a + 1) % n)];
        if (p.infinite)
            ++wraps;
        else if (!q.infinite && q.value < p.value)
            ++wraps;
    }
    if (wraps != 1) throw std::invalid_argument("points are not in cyclic order");
}

const ProjPoint& PointConfig::at(int idx1) const {
    return z_[static_cast<std::size_t>(wrap(idx1, size()) - 1)];
}

StarCoords::StarCoords(int n, std::vector<double> x) : n(n), x(std::move(x)) {
    if (n < 4) throw std::invalid_argument("star coordinates need n >= 4");
    if (static_cast<int>(this->x.size()) != n - 3)
        throw std::invalid_argument("expected " + std::to_string(n - 3) +
                                    " star coordinates, got " + std::to_string(this->x.size()));
    for (double v : this->x)
        if (!(v > 0.0 && v < 1.0))
            throw std::invalid_argument("star coordinate " + std::to_string(v) +
                                        " outside (0,1)");
}

double CoordMap::at(const Chord& c) const {
    auto it = values_.find(c);
    if (it == values_.end())
        throw std::invalid_argument("coordinate map has no value for chord {" +
                                    std::to_string(c.i) + "," + std::to_string(c.j) + "}");
    return it->second;
}

double CoordMap::at(int i, int j) const { return at(Chord(i, j, n_)); }

double cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                   const ProjPoint& d) {
    const ProjPoint* pts[4] = {&a, &b, &c, &d};
    int infinities = 0;
    for (const auto* p : pts) infinities += p->infinite ? 1 : 0;
    if (infinities > 1) throw std::invalid_argument("cross-ratio with two points at infinity");
    for (int s = 0; s < 4; ++s)
        for (int t = s + 1; t < 4; ++t)
            if (same_point(*pts[s], *pts[t]))
                throw std::invalid_argument("cross-ratio of a degenerate configuration");

    if (a.infinite) return (b.value - d.value) / (b.value - c.value);
    if (b.infinite) return (a.value - c.value) / (a.value - d.value);
    if (c.infinite) return (b.value - d.value) / (a.value - d.value);
    if (d.infinite) return (a.value - c.value) / (b.value - c.value);
    return ((a.value - c.value) * (b.value - d.value)) /
           ((a.value - d.value) * (b.value - c.value));
}

double dihedral_coord(const PointConfig& cfg, int i, int j) {
    Chord c(i, j, cfg.size());
    return cross_ratio(cfg.at(c.i), cfg.at(c.i + 1), cfg.at(c.j + 1), cfg.at(c.j));
}

CoordMap dihedral_coords(const PointConfig& cfg) {
    CoordMap m(cfg.size());
    for (const Chord& c : enumerate_chords(cfg.size()))
        m.set(c, cross_ratio(cfg.at(c.i), cfg.at(c.i + 1), cfg.at(c.j + 1), cfg.at(c.j)));
    return m;
}

PointConfig config_from_star(const StarCoords& s) {
    std::vector<ProjPoint> z(static_cast<std::size_t>(s.n));
    z[0] = ProjPoint::at_infinity();
    z[1] = ProjPoint::finite(0.0);
    z[static_cast<std::size_t>(s.n - 1)] = ProjPoint::finite(1.0);
    double prod = 1.0;
    for (int j = s.n - 1; j >= 3; --j) {
        prod *= s.x[static_cast<std::size_t>(j - 3)];
        z[static_cast<std::size_t>(j - 1)] = ProjPoint::finite(prod);
    }
    return PointConfig(std::move(z));
}

StarCoords sample_star(int n, std::uint64_t seed, double margin) {
    if (n < 4) throw std::invalid_argument("sample_cell needs n >= 4");
    if (!(margin > 0.0 && margin < 0.5))
        throw std::invalid_argument("margin must lie in (0, 1/2)");
    std::mt19937_64 rng(seed);
    // 53-bit uniforms taken straight from the generator, so identical seeds
    // give identical configurations on every platform.
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<double> x(static_cast<std::size_t>(n - 3));
    for (auto& v : x) v = margin + (1.0 - 2.0 * margin) * unit();
    return StarCoords(n, std::move(x));
}

PointConfig sample_cell(int n, std::uint64_t seed, double margin) {
    return config_from_star(sample_star(n, seed, margin));
}

}  // namespace dilogeq
