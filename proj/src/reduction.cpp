#include "dilogeq/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dilogeq/dilog.hpp"
#include "dilogeq/relations.hpp"

namespace dilogeq {

namespace {

FormalSum<ProductSymbol> unit_chord_sum(int n) {
    FormalSum<ProductSymbol> s;
    for (const Chord& c : enumerate_chords(n)) s.add({c}, 1);
    return s;
}

// Subsets of {1..k} ordered by size then lexicographically.
std::vector<std::vector<int>> subsets_by_level(int k) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> J;
        for (int j = 1; j <= k; ++j)
            if (mask & (1u << (j - 1))) J.push_back(j);
        out.push_back(std::move(J));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

void finalize_rhs_expansion(Certificate& cert) {
    FormalSum<ProductSymbol> rhs;
    for (std::size_t idx = 1; idx < cert.instances.size(); ++idx)
        rhs.add_scaled(expand_instance(cert.instances[idx].second), cert.rhs_sign(idx));
    cert.expansion = std::move(rhs);
    cert.expansion_ok = cert.expansion == unit_chord_sum(cert.n);
}

// Inclusion-exclusion over J subset of {1..k}, forgetting the marked points
// 2j: the signed sum of the pulled-back equations vanishes identically.
Certificate build_inclusion_exclusion(int n, CertificateCase kind) {
    int k = n / 2;
    Certificate cert;
    cert.n = n;
    cert.kind = kind;
    cert.rearranged = false;
    for (const std::vector<int>& J : subsets_by_level(k)) {
        int sign = J.size() % 2 == 0 ? 1 : -1;
        if (J.empty()) {
            cert.instances.emplace_back(sign, base_equation(n));
        } else {
            std::vector<int> twoJ;
            for (int j : J) twoJ.push_back(2 * j);
            cert.instances.emplace_back(sign, pullback_equation(n, std::move(twoJ)));
        }
    }
    finalize_rhs_expansion(cert);
    return cert;
}

}  // namespace

EquationInstance base_equation(int n) {
    EquationInstance e;
    e.kind = InstanceKind::base;
    for (const Chord& c : enumerate_chords(n)) e.terms.push_back(make_term({c.i}, {c.j}, n));
    e.constant_l1 = eqn_constant(n);
    return e;
}

EquationInstance pullback_equation(int n, std::vector<int> J) {
    DecoratedPolygon p = forget(n, J);
    EquationInstance e;
    e.kind = InstanceKind::pullback;
    e.forgotten = p.forgotten;
    for (const BlockChord& bc : block_chords(p)) {
        ProductTerm t;
        t.block_a = bc.a.vertices();
        t.block_b = bc.b.vertices();
        t.chords = pullback(bc);
        e.terms.push_back(std::move(t));
    }
    e.constant_l1 = eqn_constant(p.size());
    return e;
}

EquationInstance reflection_equation(const std::vector<int>& a1, const std::vector<int>& b1,
                                     const std::vector<int>& a2, const std::vector<int>& b2,
                                     int n) {
    EquationInstance e;
    e.kind = InstanceKind::reflection;
    e.terms.push_back(make_term(a1, b1, n));
    e.terms.push_back(make_term(a2, b2, n));
    e.constant_l1 = 1;
    return e;
}

ProductTerm make_term(const std::vector<int>& block_a, const std::vector<int>& block_b, int n) {
    ProductTerm t;
    t.block_a = block_a;
    t.block_b = block_b;
    for (int i : block_a)
        for (int j : block_b) t.chords.emplace_back(i, j, n);
    std::sort(t.chords.begin(), t.chords.end());
    return t;
}

long long eqn_constant(int n) {
    if (n < 4) throw std::invalid_argument("equation needs n >= 4, got " + std::to_string(n));
    return static_cast<long long>(n - 3) * (n - 2) / 2;
}

double instance_l_sum(const EquationInstance& e, const CoordMap& m) {
    double sum = 0.0;
    for (const ProductTerm& t : e.terms) {
        double prod = 1.0;
        for (const Chord& c : t.chords) prod *= m.at(c);
        sum += rogers_l(prod);
    }
    return sum;
}

FormalSum<ProductSymbol> expand_instance(const EquationInstance& e) {
    FormalSum<ProductSymbol> s;
    for (const ProductTerm& t : e.terms) s.add(t.chords, 1);
    return s;
}

long long Certificate::rhs_sign(std::size_t idx) const {
    int stored = instances[idx].first;
    return rearranged ? stored : -stored;
}

long long Certificate::rhs_constant_sum() const {
    long long sum = 0;
    for (std::size_t idx = 1; idx < instances.size(); ++idx)
        sum += rhs_sign(idx) * instances[idx].second.constant_l1;
    return sum;
}

Certificate build_certificate_even(int n) {
    if (n % 2 != 0 || n < 8)
        throw std::invalid_argument("even-case certificate needs even n >= 8, got " +
                                    std::to_string(n));
    return build_inclusion_exclusion(n, CertificateCase::even);
}

Certificate build_certificate_odd(int n) {
    if (n % 2 != 1 || n < 7)
        throw std::invalid_argument("odd-case certificate needs odd n >= 7, got " +
                                    std::to_string(n));
    return build_inclusion_exclusion(n, CertificateCase::odd);
}

Certificate build_certificate_six() {
    Certificate cert;
    cert.n = 6;
    cert.kind = CertificateCase::six;
    cert.rearranged = true;
    cert.instances.emplace_back(1, base_equation(6));
    // Three pentagon pullbacks; together they cover each elementary chord
    // once and produce six product terms.
    for (int j : {2, 4, 6}) cert.instances.emplace_back(1, pullback_equation(6, {j}));
    // The six products pair into three reflections p + q = 1.
    cert.instances.emplace_back(-1, reflection_equation({1, 2}, {4}, {3}, {5, 6}, 6));
    cert.instances.emplace_back(-1, reflection_equation({3, 4}, {6}, {5}, {1, 2}, 6));
    cert.instances.emplace_back(-1, reflection_equation({1}, {3, 4}, {2}, {5, 6}, 6));
    finalize_rhs_expansion(cert);
    return cert;
}

Certificate build_certificate_self(int n) {
    if (n != 4 && n != 5)
        throw std::invalid_argument("self certificate is only for n = 4 or 5, got " +
                                    std::to_string(n));
    Certificate cert;
    cert.n = n;
    cert.kind = CertificateCase::self;
    cert.rearranged = true;
    cert.instances.emplace_back(1, base_equation(n));
    // The equation is its own certificate; record its expansion directly.
    cert.expansion = expand_instance(cert.base());
    cert.expansion_ok = cert.expansion == unit_chord_sum(n);
    return cert;
}

Certificate build_certificate(int n) {
    if (n < 4) throw std::invalid_argument("certificate needs n >= 4, got " + std::to_string(n));
    if (n <= 5) return build_certificate_self(n);
    if (n == 6) return build_certificate_six();
    return n % 2 == 0 ? build_certificate_even(n) : build_certificate_odd(n);
}

Certificate flatten_certificate(const Certificate& cert) {
    Certificate out;
    out.n = cert.n;
    out.kind = cert.kind;
    out.rearranged = true;
    out.flattened = true;
    out.instances.emplace_back(1, cert.base());

    std::vector<std::pair<long long, EquationInstance>> queue;
    for (std::size_t idx = 1; idx < cert.instances.size(); ++idx)
        queue.emplace_back(cert.rhs_sign(idx), cert.instances[idx].second);

    while (!queue.empty()) {
        auto [r, inst] = std::move(queue.back());
        queue.pop_back();
        int m = out.n - static_cast<int>(inst.forgotten.size());
        if (inst.kind != InstanceKind::pullback || m <= 5) {
            out.instances.emplace_back(static_cast<int>(r), std::move(inst));
            continue;
        }
        // Substitute the target equation's own certificate, composed through
        // the forgetful map: marked point t of the m-gon is the leader of
        // block t, and composing forgets is forgetting the union.
        Certificate inner = build_certificate(m);
        DecoratedPolygon host = forget(out.n, inst.forgotten);
        for (std::size_t idx2 = 1; idx2 < inner.instances.size(); ++idx2) {
            long long r2 = r * inner.rhs_sign(idx2);
            const EquationInstance& in2 = inner.instances[idx2].second;
            if (in2.kind == InstanceKind::pullback) {
                std::vector<int> total = inst.forgotten;
                for (int t : in2.forgotten)
                    total.push_back(host.blocks[static_cast<std::size_t>(t - 1)].leader());
                std::sort(total.begin(), total.end());
                queue.emplace_back(r2, pullback_equation(out.n, std::move(total)));
            } else {
                EquationInstance refl;
                refl.kind = InstanceKind::reflection;
                refl.constant_l1 = 1;
                for (const ProductTerm& t : in2.terms) {
                    std::vector<int> a, b;
                    for (int v : t.block_a)
                        for (int w : host.blocks[static_cast<std::size_t>(v - 1)].vertices())
                            a.push_back(w);
                    for (int v : t.block_b)
                        for (int w : host.blocks[static_cast<std::size_t>(v - 1)].vertices())
                            b.push_back(w);
                    refl.terms.push_back(make_term(a, b, out.n));
                }
                out.instances.emplace_back(static_cast<int>(r2), std::move(refl));
            }
        }
    }
    finalize_rhs_expansion(out);
    return out;
}

std::string describe_symbol(const ProductSymbol& s) {
    std::string out;
    for (const Chord& c : s) {
        if (!out.empty()) out += "*";
        out += "u{" + std::to_string(c.i) + "," + std::to_string(c.j) + "}";
    }
    return out.empty() ? "1" : out;
}

CertificateReport verify_certificate(const Certificate& cert, int samples, double tol,
                                     std::uint64_t seed, double margin) {
    CertificateReport rep;
    const FormalSum<ProductSymbol> target = unit_chord_sum(cert.n);

    FormalSum<ProductSymbol> rhs;
    if (cert.kind == CertificateCase::self) {
        rhs = expand_instance(cert.base());
    } else {
        for (std::size_t idx = 1; idx < cert.instances.size(); ++idx)
            rhs.add_scaled(expand_instance(cert.instances[idx].second), cert.rhs_sign(idx));
    }
    FormalSum<ProductSymbol> diff = rhs - target;
    for (const auto& [sym, coeff] : diff.terms()) rep.defects.emplace_back(sym, coeff);
    rep.structural_ok = diff.is_zero() && expand_instance(cert.base()) == target;

    rep.constant_sum = cert.kind == CertificateCase::self ? cert.base().constant_l1
                                                          : cert.rhs_constant_sum();
    rep.constants_ok =
        rep.constant_sum == eqn_constant(cert.n) && cert.base().constant_l1 == eqn_constant(cert.n);

    rep.recursion_ok = true;
    for (std::size_t idx = 1; idx < cert.instances.size(); ++idx) {
        const EquationInstance& e = cert.instances[idx].second;
        if (e.kind != InstanceKind::pullback) continue;
        int m = cert.n - static_cast<int>(e.forgotten.size());
        if (m < 4 || m >= cert.n) rep.recursion_ok = false;
    }

    for (int s = 0; s < samples; ++s) {
        CoordMap m = dihedral_coords(sample_cell(cert.n, seed + static_cast<std::uint64_t>(s), margin));
        double base_sum = instance_l_sum(cert.base(), m);
        rep.max_instance_residual = std::max(
            rep.max_instance_residual, std::fabs(base_sum - static_cast<double>(cert.base().constant_l1) * L1));
        if (cert.instances.size() > 1) {
            double rhs_sum = 0.0;
            for (std::size_t idx = 1; idx < cert.instances.size(); ++idx) {
                const EquationInstance& e = cert.instances[idx].second;
                double v = instance_l_sum(e, m);
                rep.max_instance_residual = std::max(
                    rep.max_instance_residual, std::fabs(v - static_cast<double>(e.constant_l1) * L1));
                rhs_sum += static_cast<double>(cert.rhs_sign(idx)) * v;
            }
            rep.max_combination_residual =
                std::max(rep.max_combination_residual, std::fabs(rhs_sum - base_sum));
        }
    }
    rep.numeric_ok = rep.max_instance_residual <= tol && rep.max_combination_residual <= tol;
    return rep;
}

EqnReport verify_eqn(int n, int samples, std::uint64_t seed, double margin) {
    EqnReport rep;
    const std::vector<Chord> chords = enumerate_chords(n);
    const double expected = static_cast<double>(eqn_constant(n)) * L1;
    for (int s = 0; s < samples; ++s) {
        CoordMap m = dihedral_coords(sample_cell(n, seed + static_cast<std::uint64_t>(s), margin));
        double sum = 0.0;
        for (const Chord& c : chords) sum += rogers_l(m.at(c));
        double r = std::fabs(sum - expected);
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.worst_offset = s;
        }
        for (const Chord& c : chords)
            rep.max_chord_residual =
                std::max(rep.max_chord_residual, std::fabs(check_chord_relation(c, m)));
    }
    return rep;
}

}  // namespace dilogeq
