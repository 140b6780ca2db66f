#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "partree/decomp_tree.hpp"

namespace partree {

struct SolveStats {
    std::int64_t subproblems = 0;
    double elapsed_seconds = 0.0;
};

struct SolveResult {
    std::int64_t value = 0;
    DecompTree witness;
    SolveStats stats;
    MeasureKind measure = MeasureKind::EptSum;
    std::string algorithm;
};

struct SolveOptions {
    // cap on distinct memo entries (and on submask work in the reference
    // recursion); exceeding it raises BudgetExceeded instead of thrashing
    std::int64_t subset_budget = std::int64_t{1} << 22;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::int64_t budget)
        : std::runtime_error("subset budget of " + std::to_string(budget) + " entries exceeded"),
          budget_(budget) {}
    std::int64_t budget() const { return budget_; }

private:
    std::int64_t budget_;
};

}  // namespace partree
