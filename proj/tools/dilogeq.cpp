#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "dilogeq/dilog.hpp"
#include "dilogeq/json_io.hpp"
#include "dilogeq/reduction.hpp"
#include "dilogeq/relations.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    int n = 0;
    std::uint64_t seed = 0;
    int samples = 100;
    double tol = 1e-10;
    double margin = 1e-3;
    std::string format = "text";
    std::string out;
    std::string chord;
};

void emit(const RunConfig& cfg, const std::string& body) {
    if (cfg.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    f << body;
}

std::string dump(const dilogeq::json& j) { return j.dump(2) + "\n"; }

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string chord_label(const dilogeq::Chord& c) {
    return "u{" + std::to_string(c.i) + "," + std::to_string(c.j) + "}";
}

int cmd_chords(const RunConfig& cfg) {
    auto chords = dilogeq::enumerate_chords(cfg.n);
    if (cfg.format == "json") {
        dilogeq::json o;
        o["n"] = cfg.n;
        o["chord_count"] = chords.size();
        dilogeq::json list = dilogeq::json::array();
        for (const auto& c : chords) list.push_back(dilogeq::chord_to_json(c));
        o["chords"] = std::move(list);
        dilogeq::json xs = dilogeq::json::object();
        for (const auto& c : chords) {
            dilogeq::json cs = dilogeq::json::array();
            for (const auto& x : dilogeq::crossing_set(c)) cs.push_back(dilogeq::chord_to_json(x));
            xs[dilogeq::chord_key(c)] = std::move(cs);
        }
        o["crossing_sets"] = std::move(xs);
        emit(cfg, dump(o));
    } else {
        std::string body = "chi_" + std::to_string(cfg.n) + ": " + std::to_string(chords.size()) +
                           " chords\n";
        for (const auto& c : chords) {
            body += "{" + std::to_string(c.i) + "," + std::to_string(c.j) + "} crosses:";
            for (const auto& x : dilogeq::crossing_set(c))
                body += " {" + std::to_string(x.i) + "," + std::to_string(x.j) + "}";
            body += "\n";
        }
        emit(cfg, body);
    }
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
    auto rep = dilogeq::verify_eqn(cfg.n, cfg.samples, cfg.seed, cfg.margin);
    bool pass = rep.max_residual <= cfg.tol && rep.max_chord_residual <= cfg.tol;
    if (cfg.format == "json") {
        dilogeq::json o;
        o["n"] = cfg.n;
        o["samples"] = cfg.samples;
        o["seed"] = cfg.seed;
        o["margin"] = cfg.margin;
        o["tolerance"] = cfg.tol;
        o["constant_L1"] = std::to_string(dilogeq::eqn_constant(cfg.n)) + "/1";
        o["max_residual"] = rep.max_residual;
        o["worst_sample_offset"] = rep.worst_offset;
        o["max_chord_relation_residual"] = rep.max_chord_residual;
        o["pass"] = pass;
        emit(cfg, dump(o));
    } else {
        std::string body =
            "Eq_" + std::to_string(cfg.n) + ": sum of L over " +
            std::to_string(dilogeq::enumerate_chords(cfg.n).size()) + " chords vs " +
            std::to_string(dilogeq::eqn_constant(cfg.n)) + " * L(1)\n" + "samples " +
            std::to_string(cfg.samples) + ", seed " + std::to_string(cfg.seed) + ", margin " +
            fmt_g(cfg.margin) + "\n" + "max residual " +
            fmt_g(rep.max_residual) + " (worst sample offset " +
            std::to_string(rep.worst_offset) + ")\n" + "max crossing-relation residual " +
            fmt_g(rep.max_chord_residual) + "\n" + (pass ? "PASS" : "FAIL") + "\n";
        emit(cfg, body);
    }
    if (!pass)
        std::cerr << "verification failed: worst residual " << rep.max_residual
                  << " at sample offset " << rep.worst_offset << "\n";
    return pass ? kExitPass : kExitVerifyFail;
}

int cmd_wedge(const RunConfig& cfg) {
    auto sum = dilogeq::wedge_sum(cfg.n);
    if (cfg.format == "json") {
        dilogeq::json o;
        o["n"] = cfg.n;
        o["zero"] = sum.is_zero();
        o["terms"] = dilogeq::formal_sum_to_json(sum);
        emit(cfg, dump(o));
    } else {
        std::string body = "wedge sum over chi_" + std::to_string(cfg.n) + ": ";
        if (sum.is_zero()) {
            body += "0 (exact cancellation)\n";
        } else {
            body += std::to_string(sum.size()) + " nonzero terms\n";
            for (const auto& [sym, coeff] : sum.terms())
                body += "  " + std::to_string(coeff) + " * " + chord_label(sym.first) + "^" +
                        chord_label(sym.second) + "\n";
        }
        emit(cfg, body);
    }
    return sum.is_zero() ? kExitPass : kExitVerifyFail;
}

int cmd_certify(const RunConfig& cfg) {
    auto cert = dilogeq::build_certificate(cfg.n);
    auto rep = dilogeq::verify_certificate(cert, cfg.samples, cfg.tol, cfg.seed, cfg.margin);
    std::string cert_doc = dump(dilogeq::certificate_to_json(cert));

    std::string summary;
    summary += "certificate for Eq_" + std::to_string(cfg.n) + " (" +
               std::to_string(cert.instances.size()) + " instances)\n";
    summary += "structural cancellation: " + std::string(rep.structural_ok ? "ok" : "FAIL");
    if (!rep.structural_ok)
        for (const auto& [sym, coeff] : rep.defects)
            summary += "\n  leftover " + std::to_string(coeff) + " * " + dilogeq::describe_symbol(sym);
    summary += "\nconstants: rhs sum " + std::to_string(rep.constant_sum) + " vs " +
               std::to_string(dilogeq::eqn_constant(cfg.n)) + " -> " +
               (rep.constants_ok ? "ok" : "FAIL") + "\n";
    summary += "recursion well-founded: " + std::string(rep.recursion_ok ? "ok" : "FAIL") + "\n";
    summary += "numeric (" + std::to_string(cfg.samples) + " samples, tol " +
               fmt_g(cfg.tol) + "): max instance residual " +
               fmt_g(rep.max_instance_residual) + ", max combination residual " +
               fmt_g(rep.max_combination_residual) + " -> " +
               (rep.numeric_ok ? "ok" : "FAIL") + "\n";
    summary += (rep.ok() ? "PASS" : "FAIL");
    summary += "\n";

    if (cfg.format == "json") {
        // stdout (or --out) carries the certificate document itself.
        emit(cfg, cert_doc);
        std::cerr << summary;
    } else {
        if (!cfg.out.empty()) {
            std::ofstream f(cfg.out);
            if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
            f << cert_doc;
            summary += "certificate written to " + cfg.out + "\n";
        }
        std::cout << summary;
    }
    return rep.ok() ? kExitPass : kExitVerifyFail;
}

int cmd_degenerate(const RunConfig& cfg) {
    auto comma = cfg.chord.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--chord expects i,j (e.g. --chord 1,4)");
    dilogeq::Chord c(std::stoi(cfg.chord.substr(0, comma)),
                     std::stoi(cfg.chord.substr(comma + 1)), cfg.n);
    auto d = dilogeq::degenerate(c);
    // Numeric endpoint of the star path u_c -> 0.
    constexpr double kEps = 1e-8;
    auto endpoint = dilogeq::degeneration_endpoint(c, kEps);
    dilogeq::CoordMap forced_vals(cfg.n);
    for (const auto& f : d.forced_one) forced_vals.set(f, endpoint.at(f));

    bool reflection_case = cfg.n == 5 && c.i == 1 && c.j == 4;
    std::string note = reflection_case
                           ? "residual relation u{1,3} + u{2,4} = 1: the reflection relation"
                           : "";

    if (cfg.format == "json") {
        dilogeq::json o;
        o["n"] = cfg.n;
        o["chord"] = dilogeq::chord_to_json(c);
        dilogeq::json forced = dilogeq::json::array();
        for (const auto& f : d.forced_one) forced.push_back(dilogeq::chord_to_json(f));
        o["forced_one"] = std::move(forced);
        o["split_sizes"] = dilogeq::json::array({d.n1, d.n2});
        o["side1"] = d.side1;
        o["side2"] = d.side2;
        dilogeq::json s1 = dilogeq::json::array(), s2 = dilogeq::json::array();
        for (const auto& x : d.side1_chords) s1.push_back(dilogeq::chord_to_json(x));
        for (const auto& x : d.side2_chords) s2.push_back(dilogeq::chord_to_json(x));
        o["side1_chords"] = std::move(s1);
        o["side2_chords"] = std::move(s2);
        o["endpoint_u_c"] = kEps;
        o["forced_values_at_endpoint"] = dilogeq::coord_map_to_json(forced_vals);
        if (!note.empty()) o["note"] = note;
        emit(cfg, dump(o));
    } else {
        std::string body = "specializing " + chord_label(c) + " = 0 on the " +
                           std::to_string(cfg.n) + "-gon\n";
        body += "forced to 1:";
        for (const auto& f : d.forced_one) body += " " + chord_label(f);
        body += "\nsplit sizes (n1, n2) = (" + std::to_string(d.n1) + ", " + std::to_string(d.n2) +
                "), n1 + n2 = " + std::to_string(d.n1 + d.n2) + " = n + 2\n";
        body += "surviving chords side1:";
        for (const auto& x : d.side1_chords) body += " " + chord_label(x);
        body += "\nsurviving chords side2:";
        for (const auto& x : d.side2_chords) body += " " + chord_label(x);
        body += "\nat u_c = 1e-08 along the star path:";
        for (const auto& [f, v] : forced_vals.values())
            body += " " + chord_label(f) + " = " + fmt_g(v);
        body += "\n";
        if (!note.empty()) body += note + "\n";
        emit(cfg, body);
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for the polygon functional equations of the Rogers dilogarithm"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* sub, bool sampling) {
        sub->add_option("--n", cfg.n, "polygon size (number of marked points)")->required();
        sub->add_option("--format", cfg.format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
        if (sampling) {
            sub->add_option("--samples", cfg.samples, "number of sampled cell points");
            sub->add_option("--seed", cfg.seed, "base seed for the cell sampler");
            sub->add_option("--tol", cfg.tol, "residual tolerance");
            sub->add_option("--margin", cfg.margin, "sampling margin away from the cell boundary");
        }
    };

    auto* chords = app.add_subcommand("chords", "list the chords and their crossing sets");
    add_common(chords, false);
    auto* verify = app.add_subcommand("verify", "check the n-gon equation on sampled cell points");
    add_common(verify, true);
    auto* wedge = app.add_subcommand("wedge", "check the exact wedge cancellation");
    add_common(wedge, false);
    auto* certify = app.add_subcommand(
        "certify", "build and verify the reduction certificate down to five-term data");
    add_common(certify, true);
    auto* degenerate = app.add_subcommand("degenerate", "specialize one coordinate to zero");
    add_common(degenerate, false);
    degenerate->add_option("--chord", cfg.chord, "chord i,j to degenerate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (chords->parsed()) return cmd_chords(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (wedge->parsed()) return cmd_wedge(cfg);
        if (certify->parsed()) return cmd_certify(cfg);
        if (degenerate->parsed()) return cmd_degenerate(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
