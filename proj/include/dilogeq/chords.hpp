#pragma once

#include <compare>
#include <vector>

namespace dilogeq {

// A strict chord {i,j} of the n-gon whose vertices carry the cyclic order
// 1 < 2 < ... < n < 1: endpoints are non-adjacent, i.e. i, j, i+1, j+1 are
// pairwise distinct mod n. Stored normalized with i < j, so validity is
// 2 <= j - i <= n - 2. There are n(n-3)/2 such chords.
struct Chord {
    int i = 0;
    int j = 0;
    int n = 0;

    Chord() = default;
    Chord(int a, int b, int polygon_size);  // normalizes, throws if not strict

    auto operator<=>(const Chord&) const = default;
};

int chord_count(int n);

// All chords of the n-gon, sorted lexicographically on (i, j).
std::vector<Chord> enumerate_chords(int n);

// True iff the endpoints of c1 and c2 interleave strictly in the cyclic
// order (chords sharing an endpoint do not cross). Symmetric.
bool crosses(const Chord& c1, const Chord& c2);

// The chords {k,l} with k in {i+1..j-1} and l in {j+1..i-1} (cyclically),
// i.e. exactly those crossing c. Sorted; never empty for n >= 4.
std::vector<Chord> crossing_set(const Chord& c);

// A run (first, first+1, ..., first+len-1) of consecutive vertices mod n.
// A block of length k+1 records k forgotten marked points trailing its
// leader.
struct VertexBlock {
    int first = 0;
    int len = 1;
    int n = 0;

    VertexBlock() = default;
    VertexBlock(int first, int len, int polygon_size);

    std::vector<int> vertices() const;
    int leader() const { return first; }
    int last() const;
    bool contains(int v) const;

    auto operator<=>(const VertexBlock&) const = default;
};

// The m-gon obtained from the n-gon by forgetting the marked points in J
// (m = n - |J|), with vertices grouped into blocks: each forgotten vertex
// joins the block of its predecessor, so every block is a retained leader
// followed by the forgotten run after it. Blocks are listed in cyclic
// order starting from the smallest leader.
struct DecoratedPolygon {
    int n = 0;
    std::vector<int> forgotten;
    std::vector<VertexBlock> blocks;

    int size() const { return static_cast<int>(blocks.size()); }
};

DecoratedPolygon forget(int n, const std::vector<int>& J);

// A strict chord of the block m-gon: two blocks that are not cyclically
// adjacent in the host polygon's block sequence.
struct BlockChord {
    VertexBlock a;
    VertexBlock b;
    int n = 0;
};

// All m(m-3)/2 strict chords of the block polygon, sorted by block position.
std::vector<BlockChord> block_chords(const DecoratedPolygon& p);

// The set {{i,j} : i in a, j in b} of elementary chords whose coordinate
// product the block chord pulls back to. Depends only on the two blocks.
std::vector<Chord> pullback(const BlockChord& bc);

}  // namespace dilogeq
