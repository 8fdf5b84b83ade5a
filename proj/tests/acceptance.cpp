// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Budgeted criteria also report elapsed time and fail when over budget.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "embkit/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    std::string name;
    double budget_seconds;  // <= 0 means unbudgeted
    std::vector<embkit::verify::PropertyResult> (*run)(std::uint64_t);
};

constexpr std::uint64_t kSeed = 20260826;

std::vector<embkit::verify::PropertyResult> golden(std::uint64_t) {
    return {embkit::verify::golden_table()};
}
std::vector<embkit::verify::PropertyResult> n1(std::uint64_t) {
    return {embkit::verify::n1_criterion()};
}
std::vector<embkit::verify::PropertyResult> oracle(std::uint64_t seed) {
    return {embkit::verify::oracle_agreement(seed, 500)};
}
std::vector<embkit::verify::PropertyResult> copy_char(std::uint64_t seed) {
    return {embkit::verify::copy_characterization(seed, 200)};
}
std::vector<embkit::verify::PropertyResult> witness(std::uint64_t seed) {
    return {embkit::verify::witness_soundness(seed, 60, 100)};
}
std::vector<embkit::verify::PropertyResult> monomorphicity(std::uint64_t seed) {
    return {embkit::verify::monomorphicity_sweep(seed, 100000)};
}
std::vector<embkit::verify::PropertyResult> posets(std::uint64_t seed) {
    return {embkit::verify::poset_laws(seed, 1000, 6),
            embkit::verify::product_laws(seed + 1, 300, 5),
            embkit::verify::transfer_soundness(seed + 2, 200, 5)};
}
std::vector<embkit::verify::PropertyResult> counterexamples(std::uint64_t) {
    return {embkit::verify::validation_counterexamples()};
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"golden classification table", 1.0, golden},
        {"exponent-one criterion", 0.0, n1},
        {"ideal oracle equivalence", 60.0, oracle},
        {"copy characterization", 0.0, copy_char},
        {"witness soundness", 0.0, witness},
        {"monomorphicity sweep", 300.0, monomorphicity},
        {"poset laws", 120.0, posets},
        {"validation counterexamples", 0.0, counterexamples},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        auto start = Clock::now();
        std::vector<embkit::verify::PropertyResult> results;
        std::string error;
        try {
            results = c.run(kSeed);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();

        bool pass = error.empty();
        long cases = 0;
        std::string detail = error;
        for (const auto& r : results) {
            cases += r.cases;
            if (!r.pass) {
                pass = false;
                if (detail.empty()) detail = r.name + ": " + r.detail;
            }
        }
        if (c.budget_seconds > 0 && elapsed > c.budget_seconds) {
            pass = false;
            if (detail.empty()) detail = "over time budget";
        }

        all_pass = all_pass && pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name << " (" << cases
                  << " cases, " << elapsed << "s";
        if (c.budget_seconds > 0) std::cout << " / budget " << c.budget_seconds << "s";
        std::cout << ")";
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
    }
    return all_pass ? 0 : 1;
}
