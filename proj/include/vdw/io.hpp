#pragma once

// File formats: the pinned sweep CSV schema, certificate JSON with stable key
// order, SVG plots of sweep tables, and atomic text output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "vdw/blocking_asym.hpp"
#include "vdw/blocking_sym.hpp"
#include "vdw/montecarlo.hpp"

namespace vdw {

inline constexpr const char* kToolVersion = "1.0.0";

inline constexpr const char* kSweepCsvHeader =
    "n,q1,q2,r,c,p,trials,successes,indeterminate,phat,ci_low,ci_high,seed";

/// Fixed six-decimal rendering used for every probability-like CSV field.
inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

/// Write-temp-then-rename so that failures never leave a partial file.
inline void atomic_write_text(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.parent_path().empty() ? fs::path(".") : target.parent_path();
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path tmp = dir / (target.filename().string() + ".tmp." +
                                std::to_string(std::random_device{}()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write_text: cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp, ec);
            throw std::runtime_error("atomic_write_text: write failed for " + path);
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("atomic_write_text: rename failed for " + path);
    }
}

/// Sweep rows as CSV under the pinned header, sorted by (n asc, c asc).
inline std::string sweep_rows_to_csv(std::vector<SweepRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.c < b.c;
    });
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.q1) + ',' + std::to_string(r.q2) +
               ',' + std::to_string(r.r) + ',' + fixed6(r.c) + ',' + fixed6(r.p) + ',' +
               std::to_string(r.trials) + ',' + std::to_string(r.successes) + ',' +
               std::to_string(r.indeterminate) + ',' + fixed6(r.phat) + ',' + fixed6(r.ci_low) +
               ',' + fixed6(r.ci_high) + ',' + std::to_string(r.master_seed) + '\n';
    }
    return out;
}

inline void write_results_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    atomic_write_text(path, sweep_rows_to_csv(rows));
}

// ---------------------------------------------------------------------------
// Certificate JSON
// ---------------------------------------------------------------------------

using ordered_json = nlohmann::ordered_json;

inline ordered_json ap_to_json(const ArithmeticProgression& ap) {
    return ordered_json::array({ap.first, ap.diff, ap.length});
}

inline ArithmeticProgression ap_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::domain_error("certificate JSON: malformed progression triple");
    return {j[0].get<Vertex>(), j[1].get<Vertex>(), j[2].get<int>()};
}

namespace detail_io {

inline ordered_json refs_to_json(const APHypergraph& h, const std::vector<EdgeRef>& refs) {
    ordered_json arr = ordered_json::array();
    for (EdgeRef r : refs) arr.push_back(ap_to_json(h.edge(r)));
    return arr;
}

inline ordered_json cert_header(const char* kind, const APHypergraph& h) {
    ordered_json j;
    j["kind"] = kind;
    j["n"] = h.n();
    j["q1"] = h.q_long();
    j["q2"] = h.q_short();
    return j;
}

inline EdgeRef resolve(const APHypergraph& h, const ordered_json& j) {
    const auto ref = h.find_edge(ap_from_json(j));
    if (!ref) throw std::domain_error("certificate JSON: edge not present in host");
    return *ref;
}

inline std::vector<EdgeRef> resolve_list(const APHypergraph& h, const ordered_json& j) {
    std::vector<EdgeRef> out;
    for (const auto& e : j) out.push_back(resolve(h, e));
    return out;
}

}  // namespace detail_io

inline ordered_json certificate_to_json(const BlockingCertificateSym& cert,
                                        const APHypergraph& h) {
    using namespace detail_io;
    ordered_json j = cert_header(certificate_kind(cert), h);
    if (const auto* c = std::get_if<SpecialCycleCert>(&cert)) {
        j["edges"] = refs_to_json(h, c->path.edges);
        j["closing"] = ap_to_json(h.edge(c->closing));
        j["s"] = c->s;
    } else if (const auto* c = std::get_if<CycleWithHandleCert>(&cert)) {
        j["edges"] = refs_to_json(h, c->path.edges);
        j["closing"] = ap_to_json(h.edge(c->closing));
        j["handle"] = ap_to_json(h.edge(c->handle));
    } else if (const auto* c = std::get_if<SpoiledPathCert>(&cert)) {
        j["edges"] = refs_to_json(h, c->path.edges);
        j["spoiler"] = ap_to_json(h.edge(c->spoiler));
    } else {
        const auto& f = std::get<ReducedFanoCert>(cert);
        j["edges"] = refs_to_json(h, {f.edges.begin(), f.edges.end()});
    }
    return j;
}

inline ordered_json certificate_to_json(const BlockingCertificateAsym& cert,
                                        const APHypergraph& h) {
    using namespace detail_io;
    ordered_json j = cert_header(certificate_kind(cert), h);
    auto blocks_to_json = [&](const SimplePathAsym& p) {
        ordered_json blocks = ordered_json::array();
        for (const auto& b : p.longs) blocks.push_back(refs_to_json(h, b));
        return blocks;
    };
    if (const auto* c = std::get_if<NonSimpleCoverCert>(&cert)) {
        j["covered"] = ap_to_json(h.edge(c->cover.covered));
        j["edges"] = refs_to_json(h, c->cover.covering);
    } else if (const auto* c = std::get_if<SpoiledPathAsymCert>(&cert)) {
        j["shorts"] = refs_to_json(h, c->path.shorts);
        j["longs"] = blocks_to_json(c->path);
        j["spoiler"] = ap_to_json(h.edge(c->spoiler));
    } else if (const auto* c = std::get_if<SawCert>(&cert)) {
        j["shorts"] = refs_to_json(h, c->path.shorts);
        j["longs"] = blocks_to_json(c->path);
        j["saw_edges"] = refs_to_json(h, c->saw_edges);
    } else {
        const auto& e = std::get<SpoiledExtensionCert>(cert);
        j["shorts"] = refs_to_json(h, e.path.shorts);
        j["longs"] = blocks_to_json(e.path);
        j["ext_short"] = ap_to_json(h.edge(e.ext_short));
        j["ext_cover"] = refs_to_json(h, e.ext_cover);
    }
    return j;
}

inline BlockingCertificateSym certificate_sym_from_json(const ordered_json& j,
                                                        const APHypergraph& h) {
    using namespace detail_io;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "special_cycle")
        return SpecialCycleCert{{resolve_list(h, j.at("edges"))}, resolve(h, j.at("closing")),
                                j.at("s").get<int>()};
    if (kind == "cycle_with_handle")
        return CycleWithHandleCert{{resolve_list(h, j.at("edges"))}, resolve(h, j.at("closing")),
                                   resolve(h, j.at("handle"))};
    if (kind == "spoiled_path")
        return SpoiledPathCert{{resolve_list(h, j.at("edges"))}, resolve(h, j.at("spoiler"))};
    if (kind == "reduced_fano") {
        const auto refs = resolve_list(h, j.at("edges"));
        if (refs.size() != 4) throw std::domain_error("certificate JSON: fano needs 4 edges");
        return ReducedFanoCert{{refs[0], refs[1], refs[2], refs[3]}};
    }
    throw std::domain_error("certificate JSON: unknown symmetric kind " + kind);
}

inline BlockingCertificateAsym certificate_asym_from_json(const ordered_json& j,
                                                          const APHypergraph& h) {
    using namespace detail_io;
    const std::string kind = j.at("kind").get<std::string>();
    auto path_from = [&]() {
        SimplePathAsym p;
        p.shorts = resolve_list(h, j.at("shorts"));
        for (const auto& b : j.at("longs")) p.longs.push_back(resolve_list(h, b));
        return p;
    };
    if (kind == "non_simple_cover")
        return NonSimpleCoverCert{{resolve(h, j.at("covered")), resolve_list(h, j.at("edges"))}};
    if (kind == "spoiled_path")
        return SpoiledPathAsymCert{path_from(), resolve(h, j.at("spoiler"))};
    if (kind == "saw") return SawCert{path_from(), resolve_list(h, j.at("saw_edges"))};
    if (kind == "spoiled_extension")
        return SpoiledExtensionCert{path_from(), resolve(h, j.at("ext_short")),
                                    resolve_list(h, j.at("ext_cover"))};
    throw std::domain_error("certificate JSON: unknown asymmetric kind " + kind);
}

/// Serialize a verified certificate; an unverified one is a contract error.
inline void emit_certificate_json(const BlockingCertificateSym& cert, const APHypergraph& h,
                                  const std::string& path) {
    if (!verify_certificate_sym(cert, h))
        throw std::logic_error("emit_certificate_json: certificate does not verify");
    atomic_write_text(path, certificate_to_json(cert, h).dump(2) + "\n");
}

inline void emit_certificate_json(const BlockingCertificateAsym& cert, const APHypergraph& h,
                                  const std::string& path) {
    if (!verify_certificate_asym(cert, h))
        throw std::logic_error("emit_certificate_json: certificate does not verify");
    atomic_write_text(path, certificate_to_json(cert, h).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// SVG sweep plot
// ---------------------------------------------------------------------------

/// Minimal standalone plot of phat against c (log x) with CI bars, one
/// polyline per n. Display-only; never golden-tested beyond well-formedness.
inline std::string svg_sweep_plot(const std::vector<SweepRow>& rows) {
    constexpr int W = 720, H = 480, ML = 60, MR = 20, MT = 20, MB = 50;
    double cmin = 1e300, cmax = -1e300;
    for (const auto& r : rows) {
        if (r.c <= 0) continue;
        cmin = std::min(cmin, r.c);
        cmax = std::max(cmax, r.c);
    }
    if (cmin >= cmax) { cmin = 0.1; cmax = 10.0; }
    const double lx0 = std::log10(cmin), lx1 = std::log10(cmax);
    auto px = [&](double c) {
        const double t = (std::log10(c) - lx0) / (lx1 - lx0);
        return ML + t * (W - ML - MR);
    };
    auto py = [&](double phat) { return MT + (1.0 - phat) * (H - MT - MB); };

    static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                              "#9467bd", "#ff7f0e", "#8c564b"};
    std::map<Vertex, std::vector<const SweepRow*>> by_n;
    for (const auto& r : rows)
        if (r.c > 0) by_n[r.n].push_back(&r);

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(W) +
         "\" height=\"" + std::to_string(H) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<line x1=\"" + std::to_string(ML) + "\" y1=\"" + std::to_string(H - MB) + "\" x2=\"" +
         std::to_string(W - MR) + "\" y2=\"" + std::to_string(H - MB) +
         "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + std::to_string(ML) + "\" y1=\"" + std::to_string(MT) + "\" x2=\"" +
         std::to_string(ML) + "\" y2=\"" + std::to_string(H - MB) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + std::to_string(W / 2) + "\" y=\"" + std::to_string(H - 12) +
         "\" text-anchor=\"middle\" font-size=\"13\">c (log scale)</text>\n";
    s += "<text x=\"16\" y=\"" + std::to_string(H / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 " +
         std::to_string(H / 2) + ")\">estimated arrow probability</text>\n";

    int ci = 0;
    for (const auto& [n, cell_rows] : by_n) {
        const char* color = kColors[ci % 6];
        std::string pts;
        for (const auto* r : cell_rows) {
            const double x = px(r->c), y = py(r->phat);
            pts += std::to_string(x) + "," + std::to_string(y) + " ";
            s += "<line x1=\"" + std::to_string(x) + "\" y1=\"" + std::to_string(py(r->ci_low)) +
                 "\" x2=\"" + std::to_string(x) + "\" y2=\"" + std::to_string(py(r->ci_high)) +
                 "\" stroke=\"" + color + "\" stroke-width=\"1\"/>\n";
            s += "<circle cx=\"" + std::to_string(x) + "\" cy=\"" + std::to_string(y) +
                 "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
        }
        s += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"/>\n";
        s += "<text x=\"" + std::to_string(W - MR - 80) + "\" y=\"" +
             std::to_string(MT + 16 + 16 * ci) + "\" font-size=\"12\" fill=\"" + color +
             "\">n = " + std::to_string(n) + "</text>\n";
        ++ci;
    }
    s += "</svg>\n";
    return s;
}

}  // namespace vdw
