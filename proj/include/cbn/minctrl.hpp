#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cbn/analysis.hpp"
#include "cbn/kernel.hpp"
#include "cbn/model.hpp"

namespace cbn {

struct MinControlOptions {
    /// Exact search refuses instances with more non-mandatory candidates than this.
    std::size_t max_candidates = 30;
    /// Maximum number of candidate sets tested before SearchBudgetExceeded.
    std::uint64_t max_tests = 50'000'000;
    Kernel kernel = Kernel::Parallel;
    /// Candidates tested per parallel batch.
    std::size_t batch_size = 512;
};

struct MinControlResult {
    /// Ascending 0-based variable indices.
    std::vector<VarIndex> control_set;
    /// Verdict of the CBCN (base, control_set); always controllable.
    ControllabilityVerdict certificate;
    bool exact = false;
    /// Candidate sets examined up to and including the returned one.
    std::uint64_t tested_count = 0;
    double elapsed_seconds = 0.0;

    std::size_t cardinality() const { return control_set.size(); }
};

/// Variables with a self-loop. Only their own control removes the loop, so
/// every feasible control set contains them.
std::vector<VarIndex> mandatory_controls(const Cbn& cbn);

/// Minimum-cardinality control set. Mandatory variables are always included;
/// the remaining candidates are enumerated by increasing cardinality and
/// lexicographically within a cardinality, so the result is the
/// lexicographically smallest minimum set.
///
/// Throws TooLarge if there are more than options.max_candidates free
/// candidates, SearchBudgetExceeded (with the greedy set attached) if
/// options.max_tests is reached.
MinControlResult minimal_control_set(const Cbn& cbn, const MinControlOptions& options = {});

/// True iff some control set of size <= k makes the network controllable.
/// Stops the enumeration at cardinality k.
bool decision_min_controls(const Cbn& cbn, std::size_t k, const MinControlOptions& options = {});

/// Greedy upper bound: start from the mandatory set and repeatedly add the
/// variable leaving the fewest violations (ties: lowest index) until the
/// network is controllable.
MinControlResult greedy_control_set(const Cbn& cbn);

/// Simple nodes lying on a cycle plus simple nodes violating Property P.
/// Zero iff the CBCN is controllable.
std::size_t count_violations(const DependencyGraph& g);

} // namespace cbn
