// Named experiment suites: each one sweeps a family of generated instances
// through a pipeline, revalidates every success against the verifier or an
// oracle, and returns a machine-readable report. Reports are deterministic
// for a fixed seed and configuration (timings live in separate fields and
// are exempt), so a stored report can be regenerated and diffed.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rainbow {

struct InstanceRecord {
    std::string id; // enough, with the report config, to regenerate the instance
    std::map<std::string, bool> hypotheses;
    // True when the verified hypotheses put the instance inside a guarantee,
    // making a search failure a violation rather than an honest miss.
    bool guarantee_claimed = false;
    bool success = false;
    bool verified = false; // success outputs revalidated independently
    std::map<std::string, std::int64_t> counts;
    std::map<std::string, std::string> notes; // verbatim findings, usually empty
    double elapsed_ms = 0.0;                  // excluded from determinism
};

struct ReportSummary {
    int instances = 0;
    int successes = 0;
    int verified = 0;
    int guarantee_violations = 0;  // guarantee claimed but the run failed
    int verification_failures = 0; // run succeeded but revalidation did not

    bool clean() const { return guarantee_violations == 0 && verification_failures == 0; }
};

struct ExperimentReport {
    std::string command; // config echo: suite name and parameters
    std::uint64_t seed = 0;
    std::map<std::string, std::int64_t> guards;
    std::vector<InstanceRecord> instances;

    ReportSummary summary() const;
    bool all_succeeded() const;

    // Pretty JSON with sorted keys. With include_timings false the text is
    // byte-identical across runs and worker counts.
    std::string to_json(bool include_timings = true) const;

    // One aggregate line per report for cross-suite tables.
    static std::string csv_header();
    std::string csv_row() const;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int workers = 0; // 0: pick from hardware concurrency
};

// Refinement pipeline properties on random graphs: proper output, color
// count never grows, witness neighbors below every vertex, and an acyclic
// orientation that passes the out-tree coloring check.
ExperimentReport refinement_suite(int count, int max_n, const SuiteOptions& options = {});

// Core search guarantee on synthetic fan-free instances colored with
// k = (r-1)(s-1)s/2 + s colors: every out-tree on s vertices embeds.
ExperimentReport lemma_main_suite(int r, int s, int count, const SuiteOptions& options = {});

// Pipeline results against brute force on small hosts: harness paths appear
// in the exhaustive enumeration, mu is consistent with it, and DAG embedding
// successes are confirmed by the induced-copy decision procedure.
ExperimentReport oracle_agreement_suite(int count, int max_n, const SuiteOptions& options = {});

// The five-cycle with an exact 3-coloring: hypotheses verified exactly, all
// color orderings searched, at least one distinct induced rainbow 2-path.
ExperimentReport rainbow_theorem_suite();

// Triangle-free graphs with exact-chromatic colorings scanned for an induced
// rainbow path on chi vertices; a counterexample is reported verbatim.
ExperimentReport aravind_suite(int graph_count, int colorings_per_graph,
                               const SuiteOptions& options = {});

// Synthetic fan-free DAG corpus with supplied 10-color out-tree colorings:
// every out-tree and in-tree on at most four vertices embeds, and in-tree
// images match the reversed search exactly.
ExperimentReport dag_embedding_suite(int corpus_size, const SuiteOptions& options = {});

// Random DAGs: the parity coloring passes its checker, parity search
// successes revalidate, and the single-arc tree always embeds.
ExperimentReport parity_bikernel_suite(int count, int max_n, const SuiteOptions& options = {});

// Planted fan-free hosts (projective-plane orientations, optionally with
// pendant noise): every tree on at most four vertices attaches, and peeled
// layers stay colorable within twice the degree threshold.
ExperimentReport br_embedding_suite(int planted_count, const SuiteOptions& options = {});

// Complete ary-tree hosts acting as their own rainbow copies: every pattern
// up to the level count extracts as an induced rainbow copy.
ExperimentReport extraction_suite();

// Every generator's emitted instances pass their declared constraint
// checkers, including the out-tree coloring and girth oracles.
ExperimentReport generator_fidelity_suite(const SuiteOptions& options = {});

} // namespace rainbow
