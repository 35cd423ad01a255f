#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinchain::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    int threads = 0;          // 0 -> hardware concurrency
    int steps = 4096;         // step density per gate time for criteria 1,2,4-8
    int disorder_steps = 1024;  // criterion 3 (second-order integrator error
                                // ~1e-6 there, against thresholds with >=6e-3
                                // margins; the CLI default stays 4096)
};

// Runs the built-in acceptance checks; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const Options& opts, std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

void print_result(std::ostream& os, const CriterionResult& r);

}  // namespace spinchain::verify
