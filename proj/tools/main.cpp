#include "hhr/clique.hpp"
#include "hhr/colouring.hpp"
#include "hhr/construction.hpp"
#include "hhr/degeneracy.hpp"
#include "hhr/embedding.hpp"
#include "hhr/experiment.hpp"
#include "hhr/hedgehog.hpp"
#include "hhr/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

// exit codes: 0 ok, 1 usage or I/O error, 2 the mathematics said no
constexpr int exit_negative = 2;

template <typename Fn>
void with_output(const std::string& path, Fn fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    fn(out);
}

void print_embedding(std::ostream& out, const hhr::Hedgehog& h, const hhr::Embedding& e) {
    auto line = [&](int v) { out << "map " << v << ' ' << e.map[static_cast<std::size_t>(v)] << '\n'; };
    for (int v : h.body()) line(v);
    for (const auto& s : h.spikes()) line(s.vertex);
    for (int v : h.padding_vertices()) line(v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalised-hedgehog Ramsey toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- gen-standard ----------------------------------------------------
    struct {
        int b = 0;
        std::string out;
    } gen_std;
    auto* cmd_gen_std = app.add_subcommand("gen-standard", "standard hedgehog: one spike per body pair");
    cmd_gen_std->add_option("--b", gen_std.b, "body size")->required();
    cmd_gen_std->add_option("-o,--output", gen_std.out, "output file (default stdout)");
    cmd_gen_std->callback([&] {
        const auto h = hhr::standard_hedgehog(gen_std.b);
        with_output(gen_std.out, [&](std::ostream& os) { hhr::write_hedgehog(os, h); });
    });

    // ---- gen-hstar -------------------------------------------------------
    struct {
        long long b = 0, k = 0, m = 0, n_total = 0, paper_n = 0;
        std::string out;
    } gen_hstar;
    auto* cmd_gen_hstar =
        app.add_subcommand("gen-hstar", "heavy-core hedgehog H*(b, k, m) padded to n-total");
    cmd_gen_hstar->add_option("--b", gen_hstar.b, "body size");
    cmd_gen_hstar->add_option("--k", gen_hstar.k, "heavy-core size");
    cmd_gen_hstar->add_option("--m", gen_hstar.m, "extra spikes per heavy pair");
    cmd_gen_hstar->add_option("--n-total", gen_hstar.n_total, "total vertex count");
    cmd_gen_hstar->add_option("--paper-params", gen_hstar.paper_n,
                              "derive b, k, m, n-total from a single n");
    cmd_gen_hstar->add_option("-o,--output", gen_hstar.out, "output file (default stdout)");
    cmd_gen_hstar->callback([&] {
        hhr::HStarParams p;
        if (gen_hstar.paper_n > 0) {
            p = hhr::paper_hstar_params(gen_hstar.paper_n);
        } else {
            p = {gen_hstar.b, gen_hstar.k, gen_hstar.m, gen_hstar.n_total};
        }
        const auto h = hhr::build_hstar(p);
        with_output(gen_hstar.out, [&](std::ostream& os) { hhr::write_hedgehog(os, h); });
    });

    // ---- decompose ---------------------------------------------------------
    struct {
        std::string in, out;
        bool strip = false;
    } dec;
    auto* cmd_dec = app.add_subcommand("decompose",
                                       "decompose a 1-degenerate 3-graph into hedgehogs");
    cmd_dec->add_option("-i,--input", dec.in, "h3 file")->required();
    cmd_dec->add_flag("--strip-isolated", dec.strip, "drop isolated vertices first");
    cmd_dec->add_option("-o,--output", dec.out, "output file (default stdout)");
    cmd_dec->callback([&] {
        hhr::Hypergraph3 h = hhr::read_hypergraph3_file(dec.in);
        if (dec.strip) {
            std::vector<int> label(static_cast<std::size_t>(h.n()), -1);
            int next = 0;
            for (int v = 0; v < h.n(); ++v)
                if (h.degree(v) > 0) label[static_cast<std::size_t>(v)] = next++;
            std::vector<hhr::Edge3> edges;
            for (const auto& e : h.edges())
                edges.push_back({label[static_cast<std::size_t>(e[0])],
                                 label[static_cast<std::size_t>(e[1])],
                                 label[static_cast<std::size_t>(e[2])]});
            h = hhr::Hypergraph3(next, std::move(edges));
        }
        const auto parts = hhr::decompose_hedgehogs(h);
        with_output(dec.out, [&](std::ostream& os) {
            os << "parts " << parts.size() << '\n';
            for (std::size_t i = 0; i < parts.size(); ++i) {
                os << "part " << i << " body";
                for (int v : parts[i].body()) os << ' ' << v;
                os << '\n';
                for (const auto& s : parts[i].spikes())
                    os << "part " << i << " edge " << s.u << ' ' << s.v << ' ' << s.vertex << '\n';
            }
        });
    });

    // ---- graph -------------------------------------------------------------
    auto* cmd_graph = app.add_subcommand("graph", "2-graph sampling and property checks");
    cmd_graph->require_subcommand(1);

    struct {
        int n = 0;
        double p = 0.0;
        std::uint64_t seed = 0;
        std::string out;
    } gnp;
    auto* cmd_gnp = cmd_graph->add_subcommand("sample-gnp", "binomial random graph G(n, p)");
    cmd_gnp->add_option("--n", gnp.n, "vertex count")->required();
    cmd_gnp->add_option("--p", gnp.p, "edge probability")->required();
    cmd_gnp->add_option("--seed", gnp.seed, "generator seed")->required();
    cmd_gnp->add_option("-o,--output", gnp.out, "output file (default stdout)");
    cmd_gnp->callback([&] {
        const auto g = hhr::sample_gnp(gnp.n, gnp.p, gnp.seed);
        with_output(gnp.out, [&](std::ostream& os) { hhr::write_graph2(os, g); });
    });

    struct {
        std::string in;
        int deg_bound = -1, clique_q = -1, indep_s = -1;
        long long paper_n = 0;
        bool report = false;
    } l3;
    auto* cmd_l3 = cmd_graph->add_subcommand("check-lemma3",
                                             "degree / clique / independence property check");
    cmd_l3->add_option("-i,--input", l3.in, "graph file")->required();
    cmd_l3->add_option("--deg-bound", l3.deg_bound, "max allowed degree");
    cmd_l3->add_option("--clique", l3.clique_q, "forbidden clique size");
    cmd_l3->add_option("--indep", l3.indep_s, "forbidden independent-set size");
    cmd_l3->add_option("--paper-params", l3.paper_n, "derive all bounds from a single n");
    cmd_l3->add_flag("--report", l3.report, "print witnesses");
    cmd_l3->callback([&] {
        const auto g = hhr::read_graph2_file(l3.in);
        hhr::Lemma3Params params;
        if (l3.paper_n > 0) {
            params = hhr::paper_lemma3_params(l3.paper_n);
            if (params.n_vertices != g.n())
                throw std::runtime_error("graph has " + std::to_string(g.n()) +
                                         " vertices but --paper-params implies " +
                                         std::to_string(params.n_vertices));
        } else {
            if (l3.deg_bound < 0 || l3.clique_q < 1 || l3.indep_s < 1)
                throw CLI::ValidationError(
                    "check-lemma3", "need --deg-bound, --clique and --indep (or --paper-params)");
            params = {g.n(), 0.0, l3.deg_bound, l3.clique_q, l3.indep_s};
        }
        const auto rep = hhr::check_lemma3(g, params);
        std::cout << "LEMMA3 " << (rep.all() ? "PASS" : "FAIL") << " deg_ok=" << rep.deg_ok
                  << " clique_ok=" << rep.clique_ok << " indep_ok=" << rep.indep_ok
                  << " max_degree=" << rep.max_degree << '\n';
        if (l3.report) {
            if (!rep.clique_witness.empty()) {
                std::cout << "clique:";
                for (int v : rep.clique_witness) std::cout << ' ' << v;
                std::cout << '\n';
            }
            if (!rep.indep_witness.empty()) {
                std::cout << "independent-set:";
                for (int v : rep.indep_witness) std::cout << ' ' << v;
                std::cout << '\n';
            }
        }
        if (!rep.all()) rc = exit_negative;
    });

    // ---- color -------------------------------------------------------------
    auto* cmd_color = app.add_subcommand("color", "triple colourings of the complete 3-graph");
    cmd_color->require_subcommand(1);

    struct {
        std::string graph, out;
    } cderive;
    auto* cmd_cderive = cmd_color->add_subcommand(
        "derive", "colouring derived from a graph: triple red iff it contains an edge");
    cmd_cderive->add_option("-g,--graph", cderive.graph, "graph file")->required();
    cmd_cderive->add_option("-o,--output", cderive.out, "output file (default stdout)");
    cmd_cderive->callback([&] {
        const auto gamma = hhr::read_graph2_file(cderive.graph);
        const auto c = hhr::TripleColouring::derived(gamma);
        with_output(cderive.out,
                    [&](std::ostream& os) { hhr::write_colouring(os, c, cderive.graph); });
    });

    struct {
        int n = 0;
        double bias = 0.5;
        std::uint64_t seed = 0;
        std::string out;
    } crand;
    auto* cmd_crand = cmd_color->add_subcommand("random", "independent random colouring");
    cmd_crand->add_option("--n", crand.n, "host size")->required();
    cmd_crand->add_option("--bias", crand.bias, "probability a triple is red (default 0.5)");
    cmd_crand->add_option("--seed", crand.seed, "generator seed")->required();
    cmd_crand->add_option("-o,--output", crand.out, "output file (default stdout)");
    cmd_crand->callback([&] {
        const auto c = hhr::TripleColouring::random(crand.n, crand.bias, crand.seed);
        with_output(crand.out, [&](std::ostream& os) { hhr::write_colouring(os, c); });
    });

    struct {
        std::string in, out;
        std::uint64_t max_bits = hhr::TripleColouring::default_materialise_budget;
    } cmat;
    auto* cmd_cmat = cmd_color->add_subcommand("materialise",
                                               "explicit bit-array copy of any colouring");
    cmd_cmat->add_option("-i,--input", cmat.in, "colour file")->required();
    cmd_cmat->add_option("--max-bits", cmat.max_bits, "memory budget in bits");
    cmd_cmat->add_option("-o,--output", cmat.out, "output file (default stdout)");
    cmd_cmat->callback([&] {
        const auto c = hhr::read_colouring_file(cmat.in).materialise(cmat.max_bits);
        with_output(cmat.out, [&](std::ostream& os) { hhr::write_colouring(os, c); });
    });

    // ---- embed -------------------------------------------------------------
    auto* cmd_embed = app.add_subcommand("embed", "monochromatic hedgehog embedding");
    cmd_embed->require_subcommand(1);

    struct {
        std::string colour_file, red, blue;
        int n = 0;
    } cfr;
    auto* cmd_cfr = cmd_embed->add_subcommand("cfr", "constructive majority-colour embedding");
    cmd_cfr->add_option("-c,--colouring", cfr.colour_file, "colour file")->required();
    cmd_cfr->add_option("--red", cfr.red, "hedgehog embedded when red wins")->required();
    cmd_cfr->add_option("--blue", cfr.blue, "hedgehog embedded when blue wins")->required();
    cmd_cfr->add_option("--n", cfr.n, "size parameter n (thresholds n and 2n)")->required();
    cmd_cfr->callback([&] {
        const auto host = hhr::read_colouring_file(cfr.colour_file);
        const auto h_red = hhr::read_hedgehog_file(cfr.red);
        const auto h_blue = hhr::read_hedgehog_file(cfr.blue);
        const auto res = hhr::cfr_embed(host, h_red, h_blue, cfr.n);
        if (res.success()) {
            const auto& target = res.embedding->colour == hhr::Colour::red ? h_red : h_blue;
            std::cout << "CFR SUCCESS colour=" << hhr::colour_name(res.embedding->colour) << '\n';
            print_embedding(std::cout, target, *res.embedding);
        } else {
            std::cout << "CFR FAILURE stage="
                      << (res.failed_stage == hhr::CfrStage::body ? "body" : "spike")
                      << " blocked=" << res.blocked_vertex << " detail=\"" << res.detail << "\"\n";
            rc = exit_negative;
        }
    });

    struct {
        std::string colour_file, target, colour;
    } exact;
    auto* cmd_exact = cmd_embed->add_subcommand("exact", "exhaustive monochromatic-copy search");
    cmd_exact->add_option("-c,--colouring", exact.colour_file, "colour file")->required();
    cmd_exact->add_option("--target", exact.target, "hedgehog file")->required();
    cmd_exact->add_option("--colour", exact.colour, "red or blue")
        ->required()
        ->check(CLI::IsMember({"red", "blue"}));
    cmd_exact->callback([&] {
        const auto host = hhr::read_colouring_file(exact.colour_file);
        const auto h = hhr::read_hedgehog_file(exact.target);
        const auto colour = exact.colour == "red" ? hhr::Colour::red : hhr::Colour::blue;
        const auto found = hhr::find_mono_copy_exact(host, h, colour);
        if (found) {
            std::cout << "EXACT FOUND colour=" << exact.colour << '\n';
            print_embedding(std::cout, h, *found);
        } else {
            std::cout << "EXACT NONE\n";
            rc = exit_negative;
        }
    });

    // ---- ramsey ------------------------------------------------------------
    auto* cmd_ramsey = app.add_subcommand("ramsey", "exhaustive tiny Ramsey numbers");
    cmd_ramsey->require_subcommand(1);

    struct {
        std::string red, blue;
        int nmax = 0;
        bool isomorph = false;
    } ram;
    auto* cmd_ram_exact = cmd_ramsey->add_subcommand(
        "exact", "least N <= nmax whose every colouring holds a red or blue copy");
    cmd_ram_exact->add_option("--red", ram.red, "red hedgehog file")->required();
    cmd_ram_exact->add_option("--blue", ram.blue, "blue hedgehog file")->required();
    cmd_ram_exact->add_option("--nmax", ram.nmax, "largest host size to test")->required();
    cmd_ram_exact->add_flag("--isomorph-reduction", ram.isomorph,
                            "test only lex-minimal colourings");
    cmd_ram_exact->callback([&] {
        const auto h_red = hhr::read_hedgehog_file(ram.red);
        const auto h_blue = hhr::read_hedgehog_file(ram.blue);
        const auto r = hhr::ramsey_number(h_red, h_blue, ram.nmax, ram.isomorph);
        if (r) {
            std::cout << *r << '\n';
        } else {
            std::cout << "exceeds " << ram.nmax << '\n';
            rc = exit_negative;
        }
    });

    // ---- witness -----------------------------------------------------------
    auto* cmd_witness = app.add_subcommand("witness", "lower-bound witness certification");
    cmd_witness->require_subcommand(1);

    struct {
        std::string graph;
        long long b = 0, k = 0, m = 0, n_total = 0;
        bool report = false;
    } wit;
    auto* cmd_wit = cmd_witness->add_subcommand(
        "verify", "certify that a graph's derived colouring blocks monochromatic H*");
    cmd_wit->add_option("-g,--graph", wit.graph, "graph file")->required();
    cmd_wit->add_option("--b", wit.b, "H* body size")->required();
    cmd_wit->add_option("--k", wit.k, "H* heavy-core size")->required();
    cmd_wit->add_option("--m", wit.m, "extra spikes per heavy pair")->required();
    cmd_wit->add_option("--n-total", wit.n_total, "H* total vertex count (informational)");
    cmd_wit->add_flag("--report", wit.report, "print witnesses of failed conditions");
    cmd_wit->callback([&] {
        const auto gamma = hhr::read_graph2_file(wit.graph);
        const hhr::HStarParams p{wit.b, wit.k, wit.m, wit.n_total};
        const auto rep = hhr::verify_lower_bound_witness(gamma, p);
        std::cout << "WITNESS " << (rep.certified ? "CERTIFIED" : "NOT-CERTIFIED")
                  << " alpha_ok=" << rep.alpha_ok << " clique_ok=" << rep.clique_ok
                  << " multiplicity_ok=" << rep.multiplicity_ok << " alpha=" << rep.alpha_value
                  << " max_degree=" << rep.max_degree << '\n';
        if (wit.report && !rep.clique_found.empty()) {
            std::cout << "clique:";
            for (int v : rep.clique_found) std::cout << ' ' << v;
            std::cout << '\n';
        }
        if (!rep.certified) rc = exit_negative;
    });

    // ---- experiment ----------------------------------------------------------
    auto* cmd_exp = app.add_subcommand("experiment", "seeded trial batches with CSV output");
    cmd_exp->require_subcommand(1);

    struct {
        std::string kind, out;
        hhr::ExperimentSpec spec;
    } exp;
    auto* cmd_run = cmd_exp->add_subcommand("run", "run one experiment kind");
    cmd_run->add_option("--kind", exp.kind,
                        "lemma3-rate | cfr-success | witness-sweep | decompose-stats")
        ->required()
        ->check(CLI::IsMember({"lemma3-rate", "cfr-success", "witness-sweep", "decompose-stats"}));
    cmd_run->add_option("--trials", exp.spec.trials, "trial count (default 1)");
    cmd_run->add_option("--seed", exp.spec.master_seed, "master seed")->required();
    cmd_run->add_option("--jobs", exp.spec.jobs, "worker threads (default 1)");
    cmd_run->add_flag("--timings", exp.spec.record_timings,
                      "record wall-clock per-trial timings in the CSV (not reproducible)");
    cmd_run->add_option("-o,--output", exp.out, "CSV file (default stdout)");
    // lemma3-rate
    cmd_run->add_option("--n", exp.spec.gnp_n, "lemma3-rate: graph size");
    cmd_run->add_option("--p", exp.spec.gnp_p, "lemma3-rate: edge probability");
    cmd_run->add_option("--deg-bound", exp.spec.deg_bound, "lemma3-rate: max allowed degree");
    cmd_run->add_option("--clique", exp.spec.clique_q, "lemma3-rate: forbidden clique size");
    cmd_run->add_option("--indep", exp.spec.indep_s, "lemma3-rate: forbidden independent size");
    // cfr-success
    cmd_run->add_option("--host-n", exp.spec.host_n, "cfr-success: host size");
    cmd_run->add_option("--hedgehog-n", exp.spec.hedgehog_n, "cfr-success: hedgehog size");
    cmd_run->add_option("--host-kind", exp.spec.host_kind, "cfr-success: random|derived|mixed")
        ->check(CLI::IsMember({"random", "derived", "mixed"}));
    cmd_run->add_option("--bias", exp.spec.red_bias, "cfr-success: random-host red bias");
    cmd_run->add_option("--host-gnp-p", exp.spec.derived_gnp_p,
                        "cfr-success: derived-host edge probability");
    // witness-sweep
    cmd_run->add_option("--gamma-n", exp.spec.gamma_n, "witness-sweep: graph size");
    cmd_run->add_option("--gamma-p", exp.spec.gamma_p, "witness-sweep: edge probability");
    cmd_run->add_option("--b", exp.spec.hstar_b, "witness-sweep: H* body size");
    cmd_run->add_option("--k", exp.spec.hstar_k, "witness-sweep: H* heavy-core size");
    cmd_run->add_option("--m", exp.spec.hstar_m, "witness-sweep: extra spikes per heavy pair");
    // decompose-stats
    cmd_run->add_option("--vertices", exp.spec.one_degenerate_n, "decompose-stats: vertex count");
    cmd_run->add_option("--attach-prob", exp.spec.attach_prob,
                        "decompose-stats: edge attachment probability");
    cmd_run->callback([&] {
        exp.spec.kind = hhr::experiment_kind_from_name(exp.kind);
        const auto report = hhr::run_experiment(exp.spec);
        with_output(exp.out, [&](std::ostream& os) { os << report.to_string(); });
        std::cerr << exp.kind << ": " << report.successes << "/" << exp.spec.trials
                  << " trials succeeded, mean trial time " << report.mean_elapsed_ms << " ms\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints the message or the help text
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
