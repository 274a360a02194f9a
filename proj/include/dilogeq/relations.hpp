#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dilogeq/chords.hpp"
#include "dilogeq/coords.hpp"
#include "dilogeq/formal_sum.hpp"

namespace dilogeq {

// Residual of the crossing relation for c: u_c + prod_{c' crossing c} u_{c'} - 1.
double check_chord_relation(const Chord& c, const CoordMap& m);

// Residual of the rectangle relation
//   prod_{i in [a,b-1], j in [c,d-1]} u_{i,j} + prod_{k in [b,c-1], l in [d,a-1]} u_{k,l} - 1
// for a, b, c, d distinct and in cyclic order on the n-gon (intervals taken
// cyclically). Every pair in both rectangles is then a strict chord.
double check_block_relation(int a, int b, int c, int d, const CoordMap& m);

// All rectangle instances on the n-gon, one per 4-subset of vertices, as
// sorted tuples (a, b, c, d).
std::vector<std::array<int, 4>> enumerate_block_rectangles(int n);

// Wedge c ^ c' over chords, canonicalized onto ordered pairs (smaller, larger)
// with c' ^ c contributing -1 to (c, c').
using WedgePair = std::pair<Chord, Chord>;

// sum_{c in chi_n} sum_{c' crossing c} c ^ c'. Exact integers; vanishes
// identically because the crossing relation is symmetric.
FormalSum<WedgePair> wedge_sum(int n);

// Effect of specializing u_c = 0: every coordinate crossing c is forced to 1
// and the polygon splits along c into two polygons of sizes n1 + n2 = n + 2
// (the endpoints of c belong to both). The surviving chords fall entirely on
// one side or the other.
struct DegenerationResult {
    Chord chord;
    std::vector<Chord> forced_one;
    std::vector<int> side1;  // vertices i..j
    std::vector<int> side2;  // vertices j..i, wrapping
    int n1 = 0;
    int n2 = 0;
    std::vector<Chord> side1_chords;
    std::vector<Chord> side2_chords;
};

DegenerationResult degenerate(const Chord& c);

// Coordinates of a cell point on a star path driving u_c down to eps: the
// polygon labels are rotated so that c becomes a star chord {1, j}, whose
// coordinate is set to eps while the remaining star coordinates sit at fill.
CoordMap degeneration_endpoint(const Chord& c, double eps, double fill = 0.5);

}  // namespace dilogeq
