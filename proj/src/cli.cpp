#include "umbral/cli.hpp"

#include "umbral/bellpart.hpp"
#include "umbral/combinat.hpp"
#include "umbral/errors.hpp"
#include "umbral/graphs.hpp"
#include "umbral/io.hpp"
#include "umbral/rzcert.hpp"
#include "umbral/suites.hpp"
#include "umbral/umbra.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace umbral {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitAssertionFailed = 2;

int chromatic_vertex_limit() {
    if (const char* env = std::getenv("UMBRAL_RZ_MAX_VERTICES")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used != std::string(env).size() || v < 1) throw std::invalid_argument("range");
            return v;
        } catch (const std::exception&) {
            throw InputError("UMBRAL_RZ_MAX_VERTICES must be a positive integer");
        }
    }
    return kDefaultChromaticVertexLimit;
}

Poly poly_from_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw InputError("polynomial must be a JSON array of coefficients, constant term first");
    }
    return poly_from_json(j);
}

void emit_poly(const Poly& p, bool csv, std::ostream& out) {
    if (csv) {
        out << poly_to_csv(p) << "\n";
    } else {
        Json j;
        j["poly"] = poly_to_json(p);
        out << j.dump(2) << "\n";
    }
}

struct PendingExit {
    int code;
};

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculator for Bell-type polynomial families, falling-shift "
                 "operators, and real-rootedness certificates"};
    app.require_subcommand(1);
    bool csv = false;
    app.add_flag("--csv", csv, "Print polynomials as bare comma-separated coefficients");

    int exit_code = kExitOk;

    // ---- closed-form polynomial families ------------------------------
    unsigned bell_n = 0;
    auto* cmd_bell = app.add_subcommand("bell", "Exponential (Bell) polynomial of degree n");
    cmd_bell->add_option("n", bell_n, "Degree")->required();
    cmd_bell->callback([&] { emit_poly(bell_poly(bell_n), csv, out); });

    unsigned rbell_n = 0, rbell_r = 0;
    auto* cmd_rbell = app.add_subcommand("rbell", "Shifted Bell polynomial: rbell n r expands (y+r)^n umbrally");
    cmd_rbell->add_option("n", rbell_n, "Degree")->required();
    cmd_rbell->add_option("r", rbell_r, "Shift")->required();
    cmd_rbell->callback([&] { emit_poly(r_bell_poly(rbell_n, rbell_r), csv, out); });

    unsigned lah_n = 0;
    auto* cmd_lah = app.add_subcommand("lah", "Lah polynomial of degree n");
    cmd_lah->add_option("n", lah_n, "Degree")->required();
    cmd_lah->callback([&] { emit_poly(lah_poly(lah_n), csv, out); });

    // ---- operator application -----------------------------------------
    std::string ua_poly;
    std::vector<unsigned> ua_chain;
    auto* cmd_apply = app.add_subcommand(
        "umbra-apply", "Apply the falling-shift operator chain to a polynomial and certify the result");
    cmd_apply->add_option("--poly", ua_poly, "Input polynomial as a JSON coefficient array")->required();
    cmd_apply->add_option("--chain", ua_chain, "Shift amounts, applied left to right (empty = plain evaluation)")
        ->delimiter(',');
    cmd_apply->callback([&] {
        const Poly f = poly_from_text(ua_poly);
        const UmbralResult res = apply_falling_chain(f, ua_chain);
        if (csv) {
            out << poly_to_csv(res.value) << "\n";
            return;
        }
        Json j;
        j["source"] = poly_to_json(res.source);
        j["chain"] = res.chain;
        j["value"] = poly_to_json(res.value);
        if (!res.value.is_zero()) j["certificate"] = certificate_to_json(certify_rz(res.value));
        out << j.dump(2) << "\n";
    });

    // ---- certification -------------------------------------------------
    std::string rz_poly;
    bool rz_expect = false;
    auto* cmd_rz = app.add_subcommand("rz-certify", "Exact real-root census via Sturm chains");
    cmd_rz->add_option("--poly", rz_poly, "Polynomial as a JSON coefficient array")->required();
    cmd_rz->add_flag("--expect-rz", rz_expect, "Exit with status 2 unless every root is real");
    cmd_rz->callback([&] {
        const RzCertificate cert = certify_rz(poly_from_text(rz_poly));
        out << certificate_to_json(cert).dump(2) << "\n";
        if (rz_expect && !cert.all_real) exit_code = kExitAssertionFailed;
    });

    // ---- number triangles ----------------------------------------------
    std::string num_kind;
    unsigned num_rows = 8, num_param = 0;
    auto* cmd_numbers = app.add_subcommand("numbers", "Print rows 0..N of a combinatorial number triangle");
    cmd_numbers
        ->add_option("--kind", num_kind,
                     "binomial | stirling2 | stirling1 | stirling1-signed | r-stirling1 | lah | assoc")
        ->required();
    cmd_numbers->add_option("--rows", num_rows, "Largest row index (default 8)");
    cmd_numbers->add_option("--param", num_param, "r for r-stirling1, minimum block size for assoc");
    cmd_numbers->callback([&] {
        NumberKind kind;
        if (num_kind == "binomial") {
            kind = NumberKind::Binomial;
        } else if (num_kind == "stirling2") {
            kind = NumberKind::Stirling2;
        } else if (num_kind == "stirling1") {
            kind = NumberKind::Stirling1Unsigned;
        } else if (num_kind == "stirling1-signed") {
            kind = NumberKind::Stirling1Signed;
        } else if (num_kind == "r-stirling1") {
            kind = NumberKind::RStirling1Unsigned;
        } else if (num_kind == "lah") {
            kind = NumberKind::Lah;
        } else if (num_kind == "assoc") {
            kind = NumberKind::AssocStirling2;
        } else {
            throw InputError("unknown triangle kind '" + num_kind + "'");
        }
        if (kind == NumberKind::AssocStirling2 && num_param == 0) {
            throw InputError("assoc requires --param (minimum block size >= 1)");
        }
        const NumberTable table(kind, num_param);
        const auto rows = table.rows(num_rows);
        if (csv) {
            for (const auto& row : rows) {
                for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
                out << "\n";
            }
            return;
        }
        Json j;
        j["kind"] = num_kind;
        if (num_param) j["param"] = num_param;
        Json jr = Json::array();
        for (const auto& row : rows) {
            Json line = Json::array();
            for (const Int& v : row) line.push_back(v.str());
            jr.push_back(std::move(line));
        }
        j["rows"] = std::move(jr);
        out << j.dump(2) << "\n";
    });

    // ---- partition-indexed values ---------------------------------------
    unsigned pb_n = 0, pb_k = 0;
    std::string pb_seq = "ones";
    auto* cmd_pb = app.add_subcommand("partial-bell", "Partial Bell value B_{n,k} for a coefficient sequence");
    cmd_pb->add_option("n", pb_n, "Row")->required();
    cmd_pb->add_option("k", pb_k, "Block count")->required();
    cmd_pb->add_option("--seq", pb_seq, "Sequence preset or JSON array (default ones)");
    cmd_pb->callback([&] {
        const Seq a = seq_from_text(pb_seq, pb_n == 0 ? 1 : pb_n);
        const Rational v = partial_bell(pb_n, pb_k, a);
        if (csv) {
            out << rational_to_string(v) << "\n";
            return;
        }
        Json j;
        j["n"] = pb_n;
        j["k"] = pb_k;
        j["value"] = rational_to_string(v);
        out << j.dump(2) << "\n";
    });

    unsigned vp_n = 0, vp_r = 0;
    std::string vp_seq = "ones";
    auto* cmd_vp = app.add_subcommand(
        "vpoly", "Partition polynomial for a coefficient sequence, with the series/operator cross-check");
    cmd_vp->add_option("n", vp_n, "Degree")->required();
    cmd_vp->add_option("r", vp_r, "Shift index")->required();
    cmd_vp->add_option("--seq", vp_seq, "Sequence preset or JSON array (default ones)");
    cmd_vp->callback([&] {
        const Seq a = seq_from_text(vp_seq, vp_n == 0 ? 1 : vp_n);
        const Poly series_route = v_poly(vp_n, vp_r, a);
        const Poly umbral_route = v_poly_umbral(vp_n, vp_r, a);
        if (series_route != umbral_route) {
            throw InternalInconsistency("series and operator routes disagree for vpoly");
        }
        if (csv) {
            out << poly_to_csv(series_route) << "\n";
            return;
        }
        Json j;
        j["poly"] = poly_to_json(series_route);
        if (!series_route.is_zero()) j["certificate"] = certificate_to_json(certify_rz(series_route));
        out << j.dump(2) << "\n";
    });

    // ---- generating-function families -----------------------------------
    std::string fam_h = "ones";
    unsigned fam_nmax = 8;
    int fam_s = -1, fam_r = -1;
    auto* cmd_family = app.add_subcommand(
        "family", "Polynomial family from exp(x h(t)): --r walks the derivative ladder, --s iterates the "
                  "umbral evaluation");
    cmd_family->add_option("--preset", fam_h, "h-sequence preset or JSON array (default ones)");
    cmd_family->add_option("--nmax", fam_nmax, "Largest degree (default 8)");
    cmd_family->add_option("--s", fam_s, "Iteration level (mutually exclusive with --r)");
    cmd_family->add_option("--r", fam_r, "Derivative level (mutually exclusive with --s)");
    cmd_family->callback([&] {
        if (fam_s >= 0 && fam_r >= 0) throw InputError("choose one of --s and --r, not both");
        const Seq h = seq_from_text(fam_h, fam_nmax == 0 ? 1 : fam_nmax);
        std::vector<Poly> polys;
        if (fam_s >= 0) {
            polys = iterated_family(h, static_cast<unsigned>(fam_s), fam_nmax);
        } else {
            const unsigned r = fam_r >= 0 ? static_cast<unsigned>(fam_r) : 0;
            polys = f_family({Rational(1)}, h, r, fam_nmax);
        }
        if (csv) {
            for (const Poly& p : polys) out << poly_to_csv(p) << "\n";
            return;
        }
        Json j;
        j["preset"] = fam_h;
        j[fam_s >= 0 ? "s" : "r"] = fam_s >= 0 ? fam_s : std::max(fam_r, 0);
        Json arr = Json::array();
        for (const Poly& p : polys) arr.push_back(poly_to_json(p));
        j["polys"] = std::move(arr);
        out << j.dump(2) << "\n";
    });

    // ---- graphs ----------------------------------------------------------
    std::string sg_graph;
    std::vector<std::string> sg_union;
    auto* cmd_sigma = app.add_subcommand(
        "sigma", "Independent-partition polynomial of a graph (falling-basis image of its chromatic polynomial)");
    cmd_sigma->add_option("--graph", sg_graph, "Graph preset (path:n, cycle:n, complete:n, star:n), JSON, or file")
        ->required();
    cmd_sigma->add_option("--union", sg_union, "Graphs (e.g. complete:r) to union in before evaluating, in order");
    cmd_sigma->callback([&] {
        Graph g = graph_from_text(sg_graph);
        for (const std::string& part : sg_union) g = disjoint_union(g, graph_from_text(part));
        const int limit = chromatic_vertex_limit();
        const Poly sig = sigma_poly(g, limit);
        if (csv) {
            out << poly_to_csv(sig) << "\n";
            return;
        }
        Json j;
        j["graph"] = graph_to_json(g);
        j["sigma"] = poly_to_json(sig);
        if (!sig.is_zero()) j["certificate"] = certificate_to_json(certify_rz(sig));
        out << j.dump(2) << "\n";
    });

    std::string ch_graph;
    auto* cmd_chrom = app.add_subcommand("chromatic", "Proper-coloring polynomial of a graph");
    cmd_chrom->add_option("--graph", ch_graph, "Graph preset (path:n, cycle:n, complete:n, star:n), JSON, or file")
        ->required();
    cmd_chrom->callback([&] {
        const Graph g = graph_from_text(ch_graph);
        const int limit = chromatic_vertex_limit();
        const Poly chi = chromatic_poly(g, limit);
        if (csv) {
            out << poly_to_csv(chi) << "\n";
            return;
        }
        Json j;
        j["graph"] = graph_to_json(g);
        j["chromatic"] = poly_to_json(chi);
        out << j.dump(2) << "\n";
    });

    // ---- verification suites ---------------------------------------------
    std::vector<std::string> vf_suites;
    bool vf_list = false;
    unsigned vf_nmax = 0;
    std::uint64_t vf_seed = 0;
    auto* cmd_verify = app.add_subcommand("verify", "Run spot-check suites over the identities this tool computes");
    cmd_verify->add_option("--suite", vf_suites, "Suite name (repeatable), or 'all'");
    cmd_verify->add_flag("--list", vf_list, "List available suites and exit");
    cmd_verify->add_option("--nmax", vf_nmax, "Override the per-suite degree cap");
    cmd_verify->add_option("--seed", vf_seed, "Seed for the randomized instances (default 0)");
    cmd_verify->callback([&] {
        if (vf_list) {
            for (const std::string& name : list_suites()) out << name << "\n";
            return;
        }
        std::vector<std::string> names = vf_suites;
        if (names.empty()) throw InputError("verify needs --suite <name> (or --suite all, or --list)");
        if (names.size() == 1 && names[0] == "all") names = list_suites();
        SuiteOptions opts;
        if (vf_nmax > 0) opts.nmax = vf_nmax;
        opts.seed = vf_seed;
        Json reports = Json::array();
        bool all_ok = true;
        for (const std::string& name : names) {
            const SuiteReport rep = run_suite(name, opts);
            all_ok = all_ok && rep.all_passed();
            reports.push_back(suite_report_to_json(rep));
        }
        Json j;
        j["reports"] = std::move(reports);
        j["all_passed"] = all_ok;
        out << j.dump(2) << "\n";
        if (!all_ok) exit_code = kExitAssertionFailed;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend()); // CLI11 consumes back to front
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency (please report): " << e.what() << "\n";
        return kExitInput;
    }
    return exit_code;
}

} // namespace umbral
