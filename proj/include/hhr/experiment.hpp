#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hhr {

enum class ExperimentKind { lemma3_rate, cfr_success, witness_sweep, decompose_stats };

ExperimentKind experiment_kind_from_name(const std::string& name);
const char* experiment_kind_name(ExperimentKind kind);

// Trial i runs with derive_seed(master_seed, i). Rows are identical for a
// fixed master seed regardless of the worker count; wall-clock timings go
// into the CSV only when record_timings is set (they are the one
// non-reproducible column, so they default to empty).
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::lemma3_rate;
    int trials = 1;
    std::uint64_t master_seed = 0;
    int jobs = 1;
    bool record_timings = false;

    // lemma3-rate
    int gnp_n = 60;
    double gnp_p = 0.3;
    int deg_bound = 27;
    int clique_q = 10;
    int indep_s = 25;

    // cfr-success
    int host_n = 64;
    int hedgehog_n = 8;
    std::string host_kind = "mixed"; // random | derived | mixed
    double red_bias = 0.5;
    double derived_gnp_p = 0.1;

    // witness-sweep
    int gamma_n = 24;
    double gamma_p = 0.5;
    long long hstar_b = 3;
    long long hstar_k = 3;
    long long hstar_m = 60;

    // decompose-stats
    int one_degenerate_n = 30;
    double attach_prob = 1.0;
};

struct CsvReport {
    std::string header;
    std::vector<std::string> rows;
    int successes = 0;
    double mean_elapsed_ms = 0.0;

    std::string to_string() const;
};

CsvReport run_experiment(const ExperimentSpec& spec);

} // namespace hhr
