#include "hhr/experiment.hpp"

#include "hhr/colouring.hpp"
#include "hhr/combinadic.hpp"
#include "hhr/construction.hpp"
#include "hhr/embedding.hpp"
#include "hhr/hedgehog.hpp"
#include "hhr/rng.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hhr {

ExperimentKind experiment_kind_from_name(const std::string& name) {
    if (name == "lemma3-rate") return ExperimentKind::lemma3_rate;
    if (name == "cfr-success") return ExperimentKind::cfr_success;
    if (name == "witness-sweep") return ExperimentKind::witness_sweep;
    if (name == "decompose-stats") return ExperimentKind::decompose_stats;
    throw std::invalid_argument("unknown experiment kind: " + name);
}

const char* experiment_kind_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::lemma3_rate: return "lemma3-rate";
        case ExperimentKind::cfr_success: return "cfr-success";
        case ExperimentKind::witness_sweep: return "witness-sweep";
        case ExperimentKind::decompose_stats: return "decompose-stats";
    }
    return "?";
}

namespace {

struct TrialResult {
    std::string params; // comma separated, matching the kind's header section
    std::string outcome;
    bool success = false;
    double elapsed_ms = 0.0;
};

std::string param_header(const ExperimentSpec& spec) {
    switch (spec.kind) {
        case ExperimentKind::lemma3_rate:
            return "n,p,deg_bound,clique_q,indep_s,max_degree,deg_ok,clique_ok,indep_ok";
        case ExperimentKind::cfr_success:
            return "host_kind,host_n,hedgehog_n,colour,stage";
        case ExperimentKind::witness_sweep:
            return "gamma_n,gamma_p,b,k,m,alpha,max_degree,alpha_ok,clique_ok,multiplicity_ok";
        case ExperimentKind::decompose_stats:
            return "n,attach_prob,edges,parts,largest_part_edges";
    }
    return "";
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

TrialResult run_lemma3_trial(const ExperimentSpec& spec, std::uint64_t seed) {
    const Lemma3Params params{spec.gnp_n, spec.gnp_p, spec.deg_bound, spec.clique_q,
                              spec.indep_s};
    const Graph2 g = sample_gnp(spec.gnp_n, spec.gnp_p, seed);
    const Lemma3Report rep = check_lemma3(g, params);
    TrialResult out;
    std::ostringstream os;
    os << spec.gnp_n << ',' << fmt(spec.gnp_p) << ',' << spec.deg_bound << ',' << spec.clique_q
       << ',' << spec.indep_s << ',' << rep.max_degree << ',' << rep.deg_ok << ','
       << rep.clique_ok << ',' << rep.indep_ok;
    out.params = os.str();
    out.success = rep.all();
    out.outcome = out.success ? "pass" : "fail";
    return out;
}

TrialResult run_cfr_trial(const ExperimentSpec& spec, std::uint64_t seed, int trial) {
    SplitMix64 gen(seed);
    const Hedgehog h_red = random_hedgehog(spec.hedgehog_n, gen.next());
    const Hedgehog h_blue = random_hedgehog(spec.hedgehog_n, gen.next());
    bool use_random = spec.host_kind == "random";
    if (spec.host_kind == "mixed") use_random = trial % 2 == 0;
    TripleColouring host =
        use_random ? TripleColouring::random(spec.host_n, spec.red_bias, gen.next())
                   : TripleColouring::derived(sample_gnp(spec.host_n, spec.derived_gnp_p,
                                                         gen.next()));
    const CfrResult res = cfr_embed(host, h_red, h_blue, spec.hedgehog_n);
    TrialResult out;
    std::ostringstream os;
    os << (use_random ? "random" : "derived") << ',' << spec.host_n << ',' << spec.hedgehog_n
       << ',';
    if (res.success()) {
        os << colour_name(res.embedding->colour) << ",-";
        out.success = verify_embedding(host, res.embedding->colour == Colour::red ? h_red : h_blue,
                                       res.embedding->colour, *res.embedding);
    } else {
        os << "-," << (res.failed_stage == CfrStage::body ? "body" : "spike");
        out.success = false;
    }
    out.params = os.str();
    out.outcome = out.success ? "success" : "failure";
    return out;
}

TrialResult run_witness_trial(const ExperimentSpec& spec, std::uint64_t seed) {
    const Graph2 gamma = sample_gnp(spec.gamma_n, spec.gamma_p, seed);
    HStarParams p;
    p.b = spec.hstar_b;
    p.k = spec.hstar_k;
    p.m = spec.hstar_m;
    p.n_total = 0; // not used by the certificate
    const WitnessReport rep = verify_lower_bound_witness(gamma, p);
    TrialResult out;
    std::ostringstream os;
    os << spec.gamma_n << ',' << fmt(spec.gamma_p) << ',' << spec.hstar_b << ',' << spec.hstar_k
       << ',' << spec.hstar_m << ',' << rep.alpha_value << ',' << rep.max_degree << ','
       << rep.alpha_ok << ',' << rep.clique_ok << ',' << rep.multiplicity_ok;
    out.params = os.str();
    out.success = rep.certified;
    out.outcome = rep.certified ? "certified" : "not-certified";
    return out;
}

TrialResult run_decompose_trial(const ExperimentSpec& spec, std::uint64_t seed) {
    const Hypergraph3 h = random_one_degenerate(spec.one_degenerate_n, spec.attach_prob, seed);
    // reverse gluing with attach_prob < 1 can leave isolated vertices; keep
    // only covered vertices, relabelled downward
    std::vector<int> label(static_cast<std::size_t>(h.n()), -1);
    int next = 0;
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) > 0) label[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge3> edges;
    edges.reserve(h.m());
    for (const auto& e : h.edges())
        edges.push_back({label[static_cast<std::size_t>(e[0])],
                         label[static_cast<std::size_t>(e[1])],
                         label[static_cast<std::size_t>(e[2])]});
    const Hypergraph3 stripped(next, std::move(edges));

    const auto parts = decompose_hedgehogs(stripped);
    // recombine and compare edge sets
    std::vector<Edge3> seen;
    std::size_t largest = 0;
    for (const auto& part : parts) {
        largest = std::max(largest, part.spikes().size());
        for (const auto& s : part.spikes()) {
            Edge3 e{s.u, s.v, s.vertex};
            std::sort(e.begin(), e.end());
            seen.push_back(e);
        }
    }
    std::sort(seen.begin(), seen.end(), [](const Edge3& a, const Edge3& b) {
        return triple_rank(a[0], a[1], a[2]) < triple_rank(b[0], b[1], b[2]);
    });
    const bool exact_cover = seen == stripped.edges();

    TrialResult out;
    std::ostringstream os;
    os << spec.one_degenerate_n << ',' << fmt(spec.attach_prob) << ',' << stripped.m() << ','
       << parts.size() << ',' << largest;
    out.params = os.str();
    out.success = exact_cover;
    out.outcome = exact_cover ? "ok" : "cover-mismatch";
    return out;
}

TrialResult run_trial(const ExperimentSpec& spec, int trial) {
    const std::uint64_t seed = derive_seed(spec.master_seed, static_cast<std::uint64_t>(trial));
    const auto start = std::chrono::steady_clock::now();
    TrialResult out;
    switch (spec.kind) {
        case ExperimentKind::lemma3_rate: out = run_lemma3_trial(spec, seed); break;
        case ExperimentKind::cfr_success: out = run_cfr_trial(spec, seed, trial); break;
        case ExperimentKind::witness_sweep: out = run_witness_trial(spec, seed); break;
        case ExperimentKind::decompose_stats: out = run_decompose_trial(spec, seed); break;
    }
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

} // namespace

std::string CsvReport::to_string() const {
    std::string out = header + "\n";
    for (const auto& row : rows) out += row + "\n";
    return out;
}

CsvReport run_experiment(const ExperimentSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");
    if (spec.jobs < 1) throw std::invalid_argument("run_experiment: jobs must be >= 1");

    std::vector<TrialResult> results(static_cast<std::size_t>(spec.trials));
    const int jobs = std::min(spec.jobs, spec.trials);
    if (jobs == 1) {
        for (int t = 0; t < spec.trials; ++t)
            results[static_cast<std::size_t>(t)] = run_trial(spec, t);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&spec, &results, w, jobs]() {
                for (int t = w; t < spec.trials; t += jobs)
                    results[static_cast<std::size_t>(t)] = run_trial(spec, t);
            });
        for (auto& worker : workers) worker.join();
    }

    CsvReport report;
    report.header = "trial,seed," + param_header(spec) + ",outcome,elapsed_ms";
    report.rows.reserve(results.size());
    double total_ms = 0.0;
    for (int t = 0; t < spec.trials; ++t) {
        const auto& res = results[static_cast<std::size_t>(t)];
        std::ostringstream os;
        os << t << ',' << derive_seed(spec.master_seed, static_cast<std::uint64_t>(t)) << ','
           << res.params << ',' << res.outcome << ',';
        if (spec.record_timings)
            os << static_cast<long long>(res.elapsed_ms + 0.5);
        report.rows.push_back(os.str());
        report.successes += res.success ? 1 : 0;
        total_ms += res.elapsed_ms;
    }
    report.mean_elapsed_ms = total_ms / spec.trials;
    return report;
}

} // namespace hhr
