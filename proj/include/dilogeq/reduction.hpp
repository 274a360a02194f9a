#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dilogeq/chords.hpp"
#include "dilogeq/coords.hpp"
#include "dilogeq/formal_sum.hpp"

namespace dilogeq {

// One L-argument of an equation instance: the product of the elementary
// coordinates {i,j}, i in block_a, j in block_b. The sorted chord list is
// the product symbol; it depends only on the two blocks, which is what
// makes pullbacks through different forget sets cancel.
struct ProductTerm {
    std::vector<int> block_a;
    std::vector<int> block_b;
    std::vector<Chord> chords;
};

using ProductSymbol = std::vector<Chord>;

ProductTerm make_term(const std::vector<int>& block_a, const std::vector<int>& block_b, int n);

enum class InstanceKind { base, pullback, reflection };

// A functional-equation instance on the n-gon: the base equation itself, a
// lower equation pulled back through a forgetful map, or a reflection
// L(p) + L(q) = L(1) between two rectangle products with p + q = 1.
// Every term carries coefficient +1; the L-sum equals constant_l1 * L(1).
struct EquationInstance {
    InstanceKind kind = InstanceKind::base;
    std::vector<int> forgotten;  // J, for pullbacks
    std::vector<ProductTerm> terms;
    long long constant_l1 = 0;
};

// The n-gon equation itself: every chord as a singleton term.
EquationInstance base_equation(int n);

// The (n-|J|)-gon equation pulled back through the forgetful map: one term
// per block chord of the decorated polygon. J empty reproduces the base.
EquationInstance pullback_equation(int n, std::vector<int> J);

// L(p) + L(q) = L(1) between the two rectangle products p + q = 1.
EquationInstance reflection_equation(const std::vector<int>& a1, const std::vector<int>& b1,
                                     const std::vector<int>& a2, const std::vector<int>& b2,
                                     int n);

double instance_l_sum(const EquationInstance& e, const CoordMap& m);

// Each term contributes +1 at its product symbol.
FormalSum<ProductSymbol> expand_instance(const EquationInstance& e);

enum class CertificateCase { self, six, even, odd };

// Signed list of instances reducing the n-gon equation to lower ones.
//
// Stored sign conventions: the even/odd cases keep the inclusion-exclusion
// signs (-1)^|J| (base = J empty, so the full signed sum vanishes); the six
// and self cases store the rearranged decomposition directly (base = sum of
// the signed others). rhs_sign() exposes the uniform rearranged-side
// coefficient either way. Flattened certificates use the rearranged form.
struct Certificate {
    int n = 0;
    CertificateCase kind = CertificateCase::self;
    bool rearranged = false;
    bool flattened = false;
    std::vector<std::pair<int, EquationInstance>> instances;  // base first
    FormalSum<ProductSymbol> expansion;  // rearranged right-hand side
    bool expansion_ok = false;

    const EquationInstance& base() const { return instances.front().second; }
    // Coefficient of instance idx (> 0) in "base = sum rhs_sign * instance".
    long long rhs_sign(std::size_t idx) const;
    long long rhs_constant_sum() const;
};

Certificate build_certificate_even(int n);  // n = 2k, k >= 4
Certificate build_certificate_odd(int n);   // n = 2k+1, k >= 3
Certificate build_certificate_six();
Certificate build_certificate_self(int n);  // n = 4 or 5
Certificate build_certificate(int n);       // dispatch on size and parity

// Optional post-pass: recursively replaces every pullback whose target has
// more than 5 marked points by its own certificate composed through the
// forgetful map, until only five-term / reflection-sized instances remain.
Certificate flatten_certificate(const Certificate& cert);

struct CertificateReport {
    bool structural_ok = false;
    // Nonzero coefficients of (rearranged expansion) - (each chord once).
    std::vector<std::pair<ProductSymbol, long long>> defects;
    bool constants_ok = false;
    long long constant_sum = 0;
    bool recursion_ok = false;
    double max_instance_residual = 0.0;
    double max_combination_residual = 0.0;
    bool numeric_ok = false;
    bool ok() const { return structural_ok && constants_ok && recursion_ok && numeric_ok; }
};

CertificateReport verify_certificate(const Certificate& cert, int samples, double tol,
                                     std::uint64_t seed = 0, double margin = 1e-3);

std::string describe_symbol(const ProductSymbol& s);

// Numeric check of the n-gon identity sum_{chi_n} L(u_{i,j}) =
// (n-3)(n-2)/2 * L(1) over sampled cell points.
struct EqnReport {
    double max_residual = 0.0;
    int worst_offset = 0;           // seed offset of the worst sample
    double max_chord_residual = 0.0;  // crossing-relation residuals, same samples
};

long long eqn_constant(int n);  // (n-3)(n-2)/2

EqnReport verify_eqn(int n, int samples, std::uint64_t seed = 0, double margin = 1e-3);

}  // namespace dilogeq
