#include "hhr/experiment.hpp"

#include <doctest.h>

using namespace hhr;

TEST_CASE("lemma3-rate with p=0 records the independence failure") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::lemma3_rate;
    spec.trials = 1;
    spec.master_seed = 5;
    spec.gnp_n = 30;
    spec.gnp_p = 0.0;
    spec.deg_bound = 5;
    spec.clique_q = 10;
    spec.indep_s = 10; // the empty graph has alpha = 30
    const auto rep = run_experiment(spec);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.successes == 0);
    CHECK(rep.rows[0].find(",fail,") != std::string::npos);
    CHECK(rep.rows[0].find(",1,1,0,") != std::string::npos); // deg ok, clique ok, indep not
}

TEST_CASE("cfr-success on all-red hosts always succeeds") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::cfr_success;
    spec.trials = 6;
    spec.master_seed = 11;
    spec.host_n = 24;
    spec.hedgehog_n = 6;
    spec.host_kind = "random";
    spec.red_bias = 1.0;
    const auto rep = run_experiment(spec);
    CHECK(rep.successes == 6);
}

TEST_CASE("identical master seeds give byte-identical reports") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::decompose_stats;
    spec.trials = 8;
    spec.master_seed = 99;
    spec.one_degenerate_n = 25;
    const auto a = run_experiment(spec);
    const auto b = run_experiment(spec);
    CHECK(a.to_string() == b.to_string());

    spec.master_seed = 100;
    CHECK(run_experiment(spec).to_string() != a.to_string());
}

TEST_CASE("row content does not depend on the worker count") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::witness_sweep;
    spec.trials = 10;
    spec.master_seed = 42;
    spec.gamma_n = 12;
    spec.gamma_p = 0.6;
    spec.hstar_b = 4;
    spec.hstar_k = 3;
    spec.hstar_m = 30;
    const auto serial = run_experiment(spec);
    spec.jobs = 4;
    const auto parallel = run_experiment(spec);
    CHECK(serial.to_string() == parallel.to_string());
}

TEST_CASE("header follows the pinned contract") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::lemma3_rate;
    spec.trials = 1;
    spec.master_seed = 0;
    spec.gnp_n = 10;
    spec.indep_s = 3;
    spec.clique_q = 3;
    spec.deg_bound = 9;
    const auto rep = run_experiment(spec);
    CHECK(rep.header.rfind("trial,seed,", 0) == 0);
    CHECK(rep.header.find(",outcome,elapsed_ms") == rep.header.size() - 19);
}
