#include "dilogeq/json_io.hpp"

namespace dilogeq {

namespace {

const char* case_name(CertificateCase c) {
    switch (c) {
        case CertificateCase::self: return "self";
        case CertificateCase::six: return "six";
        case CertificateCase::even: return "even";
        case CertificateCase::odd: return "odd";
    }
    return "?";
}

const char* kind_name(InstanceKind k) {
    switch (k) {
        case InstanceKind::base: return "base";
        case InstanceKind::pullback: return "pullback";
        case InstanceKind::reflection: return "reflection";
    }
    return "?";
}

json chords_to_json(const std::vector<Chord>& cs) {
    json a = json::array();
    for (const Chord& c : cs) a.push_back(chord_to_json(c));
    return a;
}

}  // namespace

json chord_to_json(const Chord& c) { return json::array({c.i, c.j}); }

std::string chord_key(const Chord& c) {
    return std::to_string(c.i) + "," + std::to_string(c.j);
}

json coord_map_to_json(const CoordMap& m) {
    json o = json::object();
    for (const auto& [c, v] : m.values()) o[chord_key(c)] = v;
    return o;
}

json formal_sum_to_json(const FormalSum<WedgePair>& s) {
    json a = json::array();
    for (const auto& [sym, coeff] : s.terms()) {
        json e;
        e["symbol"] = json::array({chord_to_json(sym.first), chord_to_json(sym.second)});
        e["coefficient"] = coeff;
        a.push_back(std::move(e));
    }
    return a;
}

json formal_sum_to_json(const FormalSum<ProductSymbol>& s) {
    json a = json::array();
    for (const auto& [sym, coeff] : s.terms()) {
        json e;
        e["symbol"] = chords_to_json(sym);
        e["coefficient"] = coeff;
        a.push_back(std::move(e));
    }
    return a;
}

json certificate_to_json(const Certificate& cert) {
    json o;
    o["n"] = cert.n;
    o["case"] = case_name(cert.kind);
    json instances = json::array();
    for (const auto& [sign, inst] : cert.instances) {
        json e;
        e["sign"] = sign;
        e["kind"] = kind_name(inst.kind);
        e["J"] = inst.forgotten;
        json terms = json::array();
        for (const ProductTerm& t : inst.terms) {
            json te;
            te["blocks"] = json::array({t.block_a, t.block_b});
            te["chords"] = chords_to_json(t.chords);
            terms.push_back(std::move(te));
        }
        e["terms"] = std::move(terms);
        e["constant_L1"] = std::to_string(inst.constant_l1) + "/1";
        instances.push_back(std::move(e));
    }
    o["instances"] = std::move(instances);
    o["expansion_ok"] = cert.expansion_ok;
    return o;
}

}  // namespace dilogeq
