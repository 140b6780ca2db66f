// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion is pinned here with the exact corpus sizes and tolerances
// it is defined with; everything is integer-exact except the runtime
// scaling probe of criterion 10.

#include <cstdio>
#include <vector>

#include "partree/solve_result.hpp"
#include "partree/verify.hpp"

int main() {
    using namespace partree;
    struct Criterion {
        const char* id;
        CheckResult result;
    };
    std::vector<Criterion> rows;

    // 1. four solvers == brute-force oracles on every labeled tree, n <= 9
    rows.push_back({"criterion-01-oracle-equivalence",
                    check_oracle_equivalence(/*max_n=*/9, /*full_brute_n=*/7,
                                             /*full_solver_n=*/8, /*stride=*/50)});
    // 2. EPT-sum == DC-value on all connected graphs n <= 6 plus 200 random n <= 7
    rows.push_back({"criterion-02-eptsum-equals-dc",
                    check_thm3_identity(/*max_n=*/6, /*random_count=*/200, /*random_n=*/7,
                                        0xc0ffee)});
    // 3. star and power-of-two path closed forms
    rows.push_back({"criterion-03-closed-forms",
                    check_closed_forms(/*star_max=*/50, /*path_k_max=*/5)});
    // 4. rotation delta identity on 1000 random triples
    rows.push_back({"criterion-04-rotation-lemma", check_rotation_identity(1000, 0xc0ffee)});
    // 5. optimal clustering trees of trees n <= 8 are viable with connected clusters
    rows.push_back({"criterion-05-optimal-viable", check_optimal_clusterings_viable(8)});
    // 6. edge-removal inequalities on all trees n <= 9
    rows.push_back({"criterion-06-removal-inequalities", check_edge_removal_inequalities(9)});
    // 7. balanced clustering is a 2-approximation, trees n <= 9 and 500 random n <= 60
    rows.push_back({"criterion-07-two-approximation",
                    check_two_approximation(/*max_n=*/9, /*random_count=*/500,
                                            /*random_max_n=*/60, 0xc0ffee, SolveOptions{})});
    // 8. broomstick family values for k in {3,4,5}
    rows.push_back({"criterion-08-broomstick", check_broomstick({3, 4, 5})});
    // 9. completion bridge on all graphs n <= 6
    rows.push_back({"criterion-09-tp-completion", check_tp_bridge(6)});
    // 10. DP consistency (caterpillars n <= 12, 100 random low-spine trees n <= 40)
    //     and the empirical O(n^3) slope of the caterpillar DP
    rows.push_back({"criterion-10a-dp-consistency",
                    check_dp_consistency(/*max_cat_n=*/12, /*random_count=*/100,
                                         /*random_max_n=*/40, /*max_spine_leaves=*/4,
                                         0xc0ffee)});
    rows.push_back({"criterion-10b-cubic-scaling", check_caterpillar_scaling()});

    bool all_passed = true;
    for (const auto& row : rows) {
        const CheckResult& r = row.result;
        all_passed = all_passed && r.passed;
        std::printf("%s  %s  cases=%lld  %.2fs%s%s\n", r.passed ? "PASS" : "FAIL", row.id,
                    static_cast<long long>(r.cases), r.seconds, r.detail.empty() ? "" : "  ",
                    r.detail.c_str());
    }
    std::printf("%s\n", all_passed ? "acceptance: all criteria passed"
                                   : "acceptance: FAILURES above");
    return all_passed ? 0 : 1;
}
