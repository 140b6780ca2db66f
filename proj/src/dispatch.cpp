#include "partree/dispatch.hpp"

#include "partree/exact.hpp"
#include "partree/tree_opt.hpp"

namespace partree {

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "auto") return Algorithm::Auto;
    if (name == "exact") return Algorithm::Exact;
    if (name == "caterpillar") return Algorithm::Caterpillar;
    if (name == "bounded-spine") return Algorithm::BoundedSpine;
    if (name == "balanced") return Algorithm::Balanced;
    if (name == "local-search") return Algorithm::LocalSearch;
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Auto: return "auto";
        case Algorithm::Exact: return "exact";
        case Algorithm::Caterpillar: return "caterpillar";
        case Algorithm::BoundedSpine: return "bounded-spine";
        case Algorithm::Balanced: return "balanced";
        case Algorithm::LocalSearch: return "local-search";
    }
    return "?";
}

namespace {

bool sum_like(MeasureKind m) { return m == MeasureKind::EptSum || m == MeasureKind::Dc; }

// measure Dc wants a clustering witness, EptSum an EPT witness; the two are
// value-preserving conversions of each other
SolveResult adapt_witness(SolveResult r, MeasureKind want, const Graph& g) {
    if (r.measure == want) return r;
    if (want == MeasureKind::Dc && r.measure == MeasureKind::EptSum) {
        r.witness = ept_to_clustering(g, r.witness);
    } else if (want == MeasureKind::EptSum && r.measure == MeasureKind::Dc) {
        r.witness = clustering_to_ept(g, r.witness);
    }
    r.measure = want;
    return r;
}

SolveResult run_exact(const Graph& g, MeasureKind measure, const SolveOptions& opts) {
    switch (measure) {
        case MeasureKind::VptSum: return vpt_sum_exact(g, opts);
        case MeasureKind::VptMax: return vpt_max_exact(g, opts);
        case MeasureKind::EptSum: return ept_sum_exact(g, opts);
        case MeasureKind::EptMax: return ept_max_exact(g, opts);
        case MeasureKind::Dc:
            return adapt_witness(ept_sum_exact(g, opts), MeasureKind::Dc, g);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

SolveResult solve_with(const Graph& g, MeasureKind measure, Algorithm algorithm,
                       const SolveOptions& opts) {
    Classification c = g.classify();
    switch (algorithm) {
        case Algorithm::Exact:
            return run_exact(g, measure, opts);
        case Algorithm::Caterpillar: {
            if (!c.is_caterpillar)
                throw IncompatibleAlgorithm("caterpillar algorithm needs a caterpillar input");
            if (measure == MeasureKind::VptSum) return caterpillar_vpt_sum(g);
            if (sum_like(measure)) return adapt_witness(caterpillar_dc(g), measure, g);
            throw IncompatibleAlgorithm("caterpillar algorithm computes ept-sum/dc/vpt-sum only");
        }
        case Algorithm::BoundedSpine: {
            if (!c.is_tree)
                throw IncompatibleAlgorithm("bounded-spine algorithm needs a tree input");
            if (measure == MeasureKind::VptSum)
                return bounded_spine_solver(g, MeasureKind::VptSum, opts);
            if (sum_like(measure))
                return adapt_witness(bounded_spine_solver(g, MeasureKind::EptSum, opts), measure,
                                     g);
            throw IncompatibleAlgorithm("bounded-spine algorithm computes ept-sum/dc/vpt-sum only");
        }
        case Algorithm::Balanced: {
            if (!c.is_tree) throw IncompatibleAlgorithm("balanced algorithm needs a tree input");
            if (!sum_like(measure))
                throw IncompatibleAlgorithm("balanced algorithm approximates ept-sum/dc only");
            return adapt_witness(balanced_clustering(g), measure, g);
        }
        case Algorithm::LocalSearch: {
            if (!c.is_tree)
                throw IncompatibleAlgorithm("local-search needs a tree input for its initial tree");
            if (!sum_like(measure))
                throw IncompatibleAlgorithm("local-search improves ept-sum/dc only");
            SolveResult start = balanced_clustering(g);
            SolveResult r = local_search_rotations(g, start.witness);
            return adapt_witness(std::move(r), measure, g);
        }
        case Algorithm::Auto: {
            if (measure == MeasureKind::VptMax || measure == MeasureKind::EptMax)
                return run_exact(g, measure, opts);
            if (c.is_caterpillar)
                return solve_with(g, measure, Algorithm::Caterpillar, opts);
            if (c.is_tree) return solve_with(g, measure, Algorithm::BoundedSpine, opts);
            return run_exact(g, measure, opts);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace partree
