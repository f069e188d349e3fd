#include "cbn/minctrl.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

namespace cbn {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<VarIndex> merge_sorted(const std::vector<VarIndex>& a, const std::vector<VarIndex>& b) {
    std::vector<VarIndex> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool feasible(const Cbn& cbn, std::vector<VarIndex> set) {
    return check_controllability(Cbcn(cbn, std::move(set))).controllable;
}

// Advances `pick` (strictly increasing indices into a pool of `pool` items)
// to the next combination in lexicographic order. False when exhausted.
bool next_combination(std::vector<std::size_t>& pick, std::size_t pool) {
    const std::size_t size = pick.size();
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == pool - size + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    return true;
}

struct SearchOutcome {
    std::optional<std::vector<VarIndex>> found;
    std::uint64_t tested = 0;
};

// Increasing-cardinality search up to `max_card` free candidates on top of the mandatory set.
SearchOutcome search(const Cbn& cbn, std::size_t max_card, const MinControlOptions& options) {
    const auto mandatory = mandatory_controls(cbn);
    std::vector<VarIndex> free;
    for (VarIndex i = 0; i < cbn.size(); ++i) {
        if (!std::binary_search(mandatory.begin(), mandatory.end(), i)) free.push_back(i);
    }
    if (free.size() > options.max_candidates) {
        throw TooLarge("exact search over " + std::to_string(free.size()) +
                       " non-mandatory candidates exceeds the limit of " +
                       std::to_string(options.max_candidates));
    }

    SearchOutcome outcome;
    const std::size_t batch_cap =
        options.kernel == Kernel::Serial ? 1 : std::max<std::size_t>(options.batch_size, 1);
    std::vector<std::vector<VarIndex>> batch;
    std::vector<std::uint8_t> ok;

    for (std::size_t card = 0; card <= std::min(max_card, free.size()); ++card) {
        std::vector<std::size_t> pick(card);
        for (std::size_t i = 0; i < card; ++i) pick[i] = i;
        bool more = true;
        while (more) {
            batch.clear();
            while (more && batch.size() < batch_cap) {
                std::vector<VarIndex> chosen;
                chosen.reserve(card);
                for (std::size_t i : pick) chosen.push_back(free[i]);
                batch.push_back(merge_sorted(mandatory, chosen));
                more = next_combination(pick, free.size());
            }
            const std::uint64_t remaining = options.max_tests - outcome.tested;
            if (batch.size() > remaining) batch.resize(static_cast<std::size_t>(remaining));
            if (batch.empty()) {
                throw SearchBudgetExceeded("exact search stopped after " +
                                               std::to_string(outcome.tested) + " candidate tests",
                                           greedy_control_set(cbn).control_set);
            }

            ok.assign(batch.size(), 0);
            const auto count = static_cast<std::int64_t>(batch.size());
            if (options.kernel == Kernel::Serial) {
                for (std::int64_t b = 0; b < count; ++b) ok[b] = feasible(cbn, batch[b]);
            } else {
#pragma omp parallel for schedule(dynamic, 8)
                for (std::int64_t b = 0; b < count; ++b) ok[b] = feasible(cbn, batch[b]);
            }

            // First success in enumeration order, independent of thread timing.
            const auto hit = std::find(ok.begin(), ok.end(), 1);
            if (hit != ok.end()) {
                const auto idx = static_cast<std::size_t>(hit - ok.begin());
                outcome.tested += idx + 1;
                outcome.found = std::move(batch[idx]);
                return outcome;
            }
            outcome.tested += batch.size();
            if (outcome.tested >= options.max_tests && more) {
                throw SearchBudgetExceeded("exact search stopped after " +
                                               std::to_string(outcome.tested) + " candidate tests",
                                           greedy_control_set(cbn).control_set);
            }
        }
    }
    return outcome;
}

// Iterative Tarjan; marks simple nodes inside a non-trivial SCC or carrying a self-loop.
std::vector<std::uint8_t> on_cycle(const DependencyGraph& g) {
    const NodeId bound = g.id_bound();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(bound, kUnvisited), low(bound, 0);
    std::vector<std::uint8_t> on_stack(bound, 0), cyclic(bound, 0);
    std::vector<NodeId> scc_stack;
    std::vector<std::pair<NodeId, std::size_t>> call;
    std::size_t counter = 0;

    for (NodeId root = 0; root < bound; ++root) {
        if (!g.contains(root) || index[root] != kUnvisited) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto [v, next] = call.back();
            if (next == 0) {
                index[v] = low[v] = counter++;
                scc_stack.push_back(v);
                on_stack[v] = 1;
            }
            const auto out = g.out_neighbors(v);
            if (next < out.size()) {
                call.back().second = next + 1;
                const NodeId w = out[next];
                if (index[w] == kUnvisited) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            call.pop_back();
            if (!call.empty()) {
                const NodeId parent = call.back().first;
                low[parent] = std::min(low[parent], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<NodeId> component;
                NodeId w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                } while (w != v);
                if (component.size() > 1) {
                    for (NodeId c : component) cyclic[c] = 1;
                }
            }
        }
    }
    for (NodeId v = 0; v < g.num_vars(); ++v) {
        if (g.has_self_loop(v)) cyclic[v] = 1;
    }
    return cyclic;
}

} // namespace

std::vector<VarIndex> mandatory_controls(const Cbn& cbn) {
    std::vector<VarIndex> out;
    for (VarIndex i = 0; i < cbn.size(); ++i) {
        if (cbn.has_self_loop(i)) out.push_back(i);
    }
    return out;
}

std::size_t count_violations(const DependencyGraph& g) {
    const auto cyclic = on_cycle(g);
    std::vector<std::uint8_t> fed(g.num_vars(), 0);
    for (NodeId v = 0; v < g.id_bound(); ++v) {
        if (g.contains(v) && g.feeds_uniquely(v)) fed[g.out_neighbors(v).front()] = 1;
    }
    std::size_t violations = 0;
    for (NodeId v = 0; v < g.num_vars(); ++v) violations += std::size_t{cyclic[v]} + (fed[v] ? 0U : 1U);
    return violations;
}

MinControlResult minimal_control_set(const Cbn& cbn, const MinControlOptions& options) {
    const auto start = Clock::now();
    auto outcome = search(cbn, cbn.size(), options);
    // Controlling every variable is always feasible, so the full search cannot come back empty.
    if (!outcome.found) throw std::logic_error("exact search found no feasible control set");
    MinControlResult result;
    result.control_set = std::move(*outcome.found);
    result.certificate = check_controllability(Cbcn(cbn, result.control_set));
    result.exact = true;
    result.tested_count = outcome.tested;
    result.elapsed_seconds = seconds_since(start);
    return result;
}

bool decision_min_controls(const Cbn& cbn, std::size_t k, const MinControlOptions& options) {
    const std::size_t forced = mandatory_controls(cbn).size();
    if (k < forced) return false;
    return search(cbn, k - forced, options).found.has_value();
}

MinControlResult greedy_control_set(const Cbn& cbn) {
    const auto start = Clock::now();
    MinControlResult result;
    std::vector<VarIndex> chosen = mandatory_controls(cbn);
    std::vector<std::uint8_t> in_set(cbn.size(), 0);
    for (VarIndex i : chosen) in_set[i] = 1;

    while (true) {
        const DependencyGraph g(Cbcn(cbn, chosen));
        ++result.tested_count;
        if (count_violations(g) == 0) break;

        std::optional<VarIndex> best;
        std::size_t best_score = 0;
        for (VarIndex i = 0; i < cbn.size(); ++i) {
            if (in_set[i]) continue;
            auto trial = chosen;
            trial.insert(std::upper_bound(trial.begin(), trial.end(), i), i);
            const std::size_t score = count_violations(DependencyGraph(Cbcn(cbn, std::move(trial))));
            ++result.tested_count;
            if (!best || score < best_score) {
                best = i;
                best_score = score;
            }
        }
        chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), *best), *best);
        in_set[*best] = 1;
    }

    result.control_set = std::move(chosen);
    result.certificate = check_controllability(Cbcn(cbn, result.control_set));
    result.exact = false;
    result.elapsed_seconds = seconds_since(start);
    return result;
}

} // namespace cbn
