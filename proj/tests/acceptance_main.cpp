// End-to-end acceptance run. Each criterion drives one of the experiment
// suites (or an oracle comparison) at full scale, checks the outcome plus a
// pinned wall-clock budget, and prints exactly one PASS/FAIL line. The exit
// code is the number of failed criteria.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "rainbow/experiments.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/tree_search.hpp"

#include "oracles.hpp"

namespace {

using namespace rainbow;

// Wall-clock budgets, seconds. Deliberately generous: the suites finish in
// a small fraction of these on commodity hardware, so a pass reflects
// correctness rather than machine speed.
constexpr double kBudgetRefinement = 60.0;
constexpr double kBudgetLemmaMain = 120.0;
constexpr double kBudgetOracleAgreement = 180.0;
constexpr double kBudgetConjectureScan = 300.0;
constexpr double kBudgetDagEmbedding = 120.0;
constexpr double kBudgetParity = 120.0;
constexpr double kBudgetStripping = 180.0;
constexpr double kBudgetExtraction = 60.0;
constexpr double kBudgetFidelity = 60.0;
constexpr double kBudgetTotal = 900.0;

int failures = 0;

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void line(const std::string& id, const std::string& label, bool pass,
          const std::string& detail) {
    if (!pass) ++failures;
    std::cout << "ACCEPTANCE " << id << " " << label << ": " << (pass ? "PASS" : "FAIL") << " ("
              << detail << ")\n";
}

std::int64_t sum_counts(const ExperimentReport& report, const std::string& key) {
    std::int64_t total = 0;
    for (const auto& record : report.instances) {
        auto it = record.counts.find(key);
        if (it != record.counts.end()) total += it->second;
    }
    return total;
}

bool clean_and_complete(const ExperimentReport& report) {
    return report.summary().clean() && report.all_succeeded();
}

std::string timing(double elapsed, double budget) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    out << elapsed << "s of " << budget << "s";
    return out.str();
}

} // namespace

int main() {
    Timer total;

    { // A1: refinement invariants across a random corpus
        Timer t;
        auto report = refinement_suite(200, 60, {});
        double elapsed = t.seconds();
        bool ok = clean_and_complete(report) && elapsed < kBudgetRefinement &&
                  static_cast<int>(report.instances.size()) == 200;
        line("A1", "refinement-invariants", ok,
             std::to_string(report.instances.size()) + " instances, " +
                 timing(elapsed, kBudgetRefinement));
    }

    { // A2: full tree catalogs inside synthesized fan-free hosts
        Timer t;
        auto r23 = lemma_main_suite(2, 3, 50, {});
        auto r24 = lemma_main_suite(2, 4, 50, {});
        auto r33 = lemma_main_suite(3, 3, 25, {});
        double elapsed = t.seconds();
        auto verified = [](const ExperimentReport& r) {
            return clean_and_complete(r) &&
                   r.summary().verified == static_cast<int>(r.instances.size());
        };
        bool ok = verified(r23) && verified(r24) && verified(r33) && elapsed < kBudgetLemmaMain;
        line("A2", "fan-free-embeddings", ok,
             "r=2,s=3: " + std::to_string(r23.summary().successes) + "/50; r=2,s=4: " +
                 std::to_string(r24.summary().successes) + "/50; r=3,s=3: " +
                 std::to_string(r33.summary().successes) + "/25; " +
                 timing(elapsed, kBudgetLemmaMain));
    }

    { // A3: search results agree with brute-force enumeration
        Timer t;
        auto report = oracle_agreement_suite(300, 12, {});
        double elapsed = t.seconds();
        bool ok = clean_and_complete(report) && elapsed < kBudgetOracleAgreement &&
                  static_cast<int>(report.instances.size()) == 300;
        line("A3", "oracle-agreement", ok,
             std::to_string(report.summary().successes) + "/300 agree, " +
                 timing(elapsed, kBudgetOracleAgreement));
    }

    { // A4: the five-cycle admits an induced rainbow 2-path for every ordering
        auto report = rainbow_theorem_suite();
        const auto& record = report.instances.front();
        bool hypotheses = record.guarantee_claimed;
        bool all_orderings = record.counts.at("orderings") == 6 &&
                             record.counts.at("ordering_successes") == 6;
        bool enough = record.counts.at("distinct_paths") >= record.counts.at("required_distinct");
        bool ok = hypotheses && all_orderings && enough && record.verified;
        line("A4", "five-cycle-certified", ok,
             std::to_string(record.counts.at("distinct_paths")) + " distinct paths over " +
                 std::to_string(record.counts.at("orderings")) + " orderings, oracle-confirmed");
    }

    { // A5: exact-coloring scan over a triangle-free corpus
        Timer t;
        auto report = aravind_suite(200, 10, {});
        double elapsed = t.seconds();
        std::int64_t pairs = sum_counts(report, "pairs");
        std::int64_t counterexamples = sum_counts(report, "counterexamples");
        bool ok = clean_and_complete(report) && pairs >= 2000 && counterexamples == 0 &&
                  elapsed < kBudgetConjectureScan;
        line("A5", "exact-coloring-scan", ok,
             std::to_string(pairs) + " pairs, " + std::to_string(counterexamples) +
                 " counterexamples, " + timing(elapsed, kBudgetConjectureScan));
        for (const auto& record : report.instances)
            for (const auto& [key, text] : record.notes)
                if (key.rfind("counterexample_", 0) == 0)
                    std::cout << record.id << " " << key << ":\n" << text;
    }

    { // A6: every small catalog tree embeds in the fan-free DAG corpus,
      // and in-tree embeddings commute with reversal
        Timer t;
        auto report = dag_embedding_suite(5, {});
        double elapsed = t.seconds();
        std::int64_t trees = sum_counts(report, "trees");
        std::int64_t embedded = sum_counts(report, "embedded");
        std::int64_t round_trips = sum_counts(report, "round_trips");
        std::int64_t exact = sum_counts(report, "round_trips_exact");
        bool ok = clean_and_complete(report) && trees == 75 && embedded == trees &&
                  round_trips == 35 && exact == round_trips && elapsed < kBudgetDagEmbedding;
        line("A6", "dag-catalog-embeddings", ok,
             std::to_string(embedded) + "/" + std::to_string(trees) + " embedded, " +
                 std::to_string(exact) + "/" + std::to_string(round_trips) +
                 " reversal round-trips exact, " + timing(elapsed, kBudgetDagEmbedding));
    }

    { // A7: parity colorings verify and support extension on larger DAGs
        Timer t;
        auto report = parity_bikernel_suite(200, 300, {});
        double elapsed = t.seconds();
        bool ok = clean_and_complete(report) && elapsed < kBudgetParity &&
                  static_cast<int>(report.instances.size()) == 200;
        line("A7", "parity-colorings", ok,
             std::to_string(report.summary().successes) + "/200 instances, " +
                 timing(elapsed, kBudgetParity));
    }

    { // A8: leaf-stripping plans match the recursive oracle, and the planted
      // fan-free hosts admit every catalog tree with sane core chromatic numbers
        Timer t;
        int compared = 0;
        int agree = 0;
        for (int s = 1; s <= 6; ++s) {
            for (const auto& tree : oriented_trees(s).all) {
                ++compared;
                StPlan plan = st_plan(tree);
                bool plan_shape = static_cast<int>(plan.peel.size()) == plan.st_value;
                int removed = 0;
                for (const auto& step : plan.peel)
                    removed += static_cast<int>(step.removed.size());
                plan_shape = plan_shape && removed == tree.vertex_count() - 1;
                if (plan_shape && plan.st_value == oracles::st_value(tree)) ++agree;
            }
        }
        auto report = br_embedding_suite(30, {});
        double elapsed = t.seconds();
        std::int64_t chi_checks = sum_counts(report, "chi_checks");
        std::int64_t chi_ok = sum_counts(report, "chi_ok");
        bool ok = agree == compared && clean_and_complete(report) && chi_checks == chi_ok &&
                  static_cast<int>(report.instances.size()) == 30 && elapsed < kBudgetStripping;
        line("A8", "leaf-stripping", ok,
             std::to_string(agree) + "/" + std::to_string(compared) + " plans match oracle, " +
                 std::to_string(report.summary().successes) + "/30 planted hosts, " +
                 std::to_string(chi_ok) + "/" + std::to_string(chi_checks) + " core chi bounds, " +
                 timing(elapsed, kBudgetStripping));
    }

    { // A9: path extraction from rainbow ary-tree hosts, including the two
      // large hosts and an oracle-confirmable small one
        Timer t;
        auto report = extraction_suite();
        double elapsed = t.seconds();
        bool saw_small = false;
        bool saw_43 = false;
        bool saw_585 = false;
        for (const auto& record : report.instances) {
            std::int64_t host_n = record.counts.at("host_n");
            saw_small = saw_small || host_n <= guards::kInducedCopyVertices;
            saw_43 = saw_43 || host_n == 43;
            saw_585 = saw_585 || host_n == 585;
        }
        bool ok = clean_and_complete(report) && saw_small && saw_43 && saw_585 &&
                  elapsed < kBudgetExtraction;
        line("A9", "ary-tree-extraction", ok,
             std::to_string(report.summary().successes) + "/" +
                 std::to_string(report.instances.size()) + " extractions, hosts " +
                 (saw_small ? "small+" : "no-small+") + (saw_43 ? "43+" : "no-43+") +
                 (saw_585 ? "585" : "no-585") + ", " + timing(elapsed, kBudgetExtraction));
    }

    { // A10: generators deliver the structural properties they advertise
        Timer t;
        auto report = generator_fidelity_suite({});
        double elapsed = t.seconds();
        bool ok = clean_and_complete(report) && elapsed < kBudgetFidelity &&
                  report.instances.size() >= 20;
        line("A10", "generator-fidelity", ok,
             std::to_string(report.summary().successes) + "/" +
                 std::to_string(report.instances.size()) + " checks, " +
                 timing(elapsed, kBudgetFidelity));
    }

    double elapsed = total.seconds();
    bool in_budget = elapsed < kBudgetTotal;
    if (!in_budget) ++failures;
    std::cout << "ACCEPTANCE total: " << (failures == 0 ? "PASS" : "FAIL") << " ("
              << timing(elapsed, kBudgetTotal) << ", " << failures << " failures)\n";
    return failures;
}
