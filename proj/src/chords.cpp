#include "dilogeq/chords.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dilogeq {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 1 || v > n)
        throw std::invalid_argument(std::string(what) + " index " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n));
}

// Representative of v in 1..n.
int wrap(int v, int n) {
    int r = v % n;
    return r <= 0 ? r + n : r;
}

}  // namespace

Chord::Chord(int a, int b, int polygon_size) : n(polygon_size) {
    if (n < 4) throw std::invalid_argument("chord needs polygon size >= 4, got " + std::to_string(n));
    check_vertex(a, n, "chord");
    check_vertex(b, n, "chord");
    i = std::min(a, b);
    j = std::max(a, b);
    int gap = j - i;
    if (gap < 2 || gap > n - 2)
        throw std::invalid_argument("{" + std::to_string(a) + "," + std::to_string(b) +
                                    "} is not a strict chord of the " + std::to_string(n) + "-gon");
}

int chord_count(int n) {
    if (n < 4) throw std::invalid_argument("polygon size must be >= 4, got " + std::to_string(n));
    return n * (n - 3) / 2;
}

std::vector<Chord> enumerate_chords(int n) {
    if (n < 4) throw std::invalid_argument("polygon size must be >= 4, got " + std::to_string(n));
    std::vector<Chord> out;
    out.reserve(static_cast<std::size_t>(chord_count(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n && j - i <= n - 2; ++j)
            out.emplace_back(i, j, n);
    return out;
}

bool crosses(const Chord& c1, const Chord& c2) {
    if (c1.n != c2.n)
        throw std::invalid_argument("chords of different polygons: n=" + std::to_string(c1.n) +
                                    " vs n=" + std::to_string(c2.n));
    if (c1.i == c2.i || c1.i == c2.j || c1.j == c2.i || c1.j == c2.j) return false;
    auto inside = [&](int v) { return c1.i < v && v < c1.j; };
    return inside(c2.i) != inside(c2.j);
}

std::vector<Chord> crossing_set(const Chord& c) {
    std::vector<Chord> out;
    for (int k = c.i + 1; k <= c.j - 1; ++k)
        for (int l = c.j + 1; l <= c.i - 1 + c.n; ++l)
            out.emplace_back(k, wrap(l, c.n), c.n);
    std::sort(out.begin(), out.end());
    return out;
}

VertexBlock::VertexBlock(int first, int len, int polygon_size)
    : first(first), len(len), n(polygon_size) {
    check_vertex(first, n, "block leader");
    if (len < 1 || len > n - 1)
        throw std::invalid_argument("block length " + std::to_string(len) + " out of range");
}

std::vector<int> VertexBlock::vertices() const {
    std::vector<int> vs(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) vs[static_cast<std::size_t>(t)] = wrap(first + t, n);
    return vs;
}

int VertexBlock::last() const { return wrap(first + len - 1, n); }

bool VertexBlock::contains(int v) const {
    return wrap(v - first, n) < len;
}

DecoratedPolygon forget(int n, const std::vector<int>& J) {
    if (n < 4) throw std::invalid_argument("polygon size must be >= 4, got " + std::to_string(n));
    std::set<int> forgotten;
    for (int s : J) {
        check_vertex(s, n, "forget");
        if (!forgotten.insert(s).second)
            throw std::invalid_argument("duplicate index " + std::to_string(s) + " in forget set");
    }
    int m = n - static_cast<int>(forgotten.size());
    if (m < 4)
        throw std::invalid_argument("forgetting " + std::to_string(forgotten.size()) +
                                    " of " + std::to_string(n) +
                                    " marked points leaves fewer than 4");

    DecoratedPolygon p;
    p.n = n;
    p.forgotten.assign(forgotten.begin(), forgotten.end());
    for (int r = 1; r <= n; ++r) {
        if (forgotten.count(r)) continue;
        int len = 1;
        while (forgotten.count(wrap(r + len, n))) ++len;
        p.blocks.emplace_back(r, len, n);
    }
    return p;
}

std::vector<BlockChord> block_chords(const DecoratedPolygon& p) {
    int m = p.size();
    std::vector<BlockChord> out;
    out.reserve(static_cast<std::size_t>(m * (m - 3) / 2));
    for (int s = 0; s < m; ++s)
        for (int t = s + 2; t < m && !(s == 0 && t == m - 1); ++t)
            out.push_back(BlockChord{p.blocks[static_cast<std::size_t>(s)],
                                     p.blocks[static_cast<std::size_t>(t)], p.n});
    return out;
}

std::vector<Chord> pullback(const BlockChord& bc) {
    std::vector<Chord> out;
    for (int i : bc.a.vertices())
        for (int j : bc.b.vertices()) out.emplace_back(i, j, bc.n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dilogeq
