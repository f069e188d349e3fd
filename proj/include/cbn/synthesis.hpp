#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cbn/analysis.hpp"
#include "cbn/model.hpp"

namespace cbn {

/// Control vectors for times 0..T-1, all of the same width.
class ControlSequence {
public:
    ControlSequence() = default;
    explicit ControlSequence(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t horizon() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    const ControlVector& operator[](std::size_t t) const { return steps_[t]; }
    const std::vector<ControlVector>& steps() const { return steps_; }

    void push_back(ControlVector u);

    /// Column `c` over time, e.g. the feed of one generator.
    std::vector<bool> column(std::size_t c) const;

    friend bool operator==(const ControlSequence&, const ControlSequence&) = default;

private:
    std::size_t width_ = 0;
    std::vector<ControlVector> steps_;
};

using Trajectory = std::vector<NetworkState>;

/// One synchronous update. Throws DimensionMismatch.
NetworkState step(const Cbcn& net, const NetworkState& x, const ControlVector& u);

/// x(0..T) with x(k+1) = step(net, x(k), u(k)).
Trajectory simulate(const Cbcn& net, const NetworkState& x0, const ControlSequence& seq);

/// Everything of the steering construction that does not depend on the target.
struct SynthesisPlan {
    PathDecomposition paths;
    DepthMap depth;
    /// Simple-node count of each path, parallel to `paths`.
    std::vector<std::size_t> path_lengths;
    /// tau + max path length.
    std::size_t horizon = 0;
};

/// Throws NotControllable.
SynthesisPlan plan_synthesis(const Cbcn& net);

/// Target bits of each path's simple nodes, generator-adjacent node first.
std::vector<std::vector<bool>> split_target(const SynthesisPlan& plan, const NetworkState& b);

/// Control sequence steering every initial state to `b` in plan.horizon steps.
///
/// Each generator feeds ones until time T - L_p, then the path's target bits
/// in reverse so that the bit for the r-th node enters at T - r and reaches
/// that node exactly at T.
ControlSequence synthesize(const Cbcn& net, const SynthesisPlan& plan, const NetworkState& b);

/// Throws NotControllable. `a` only fixes the expected width: the sequence
/// is the same for every initial state.
ControlSequence synthesize(const Cbcn& net, const NetworkState& a, const NetworkState& b);

/// One line of |I| bits per time step; column order follows ascending controlled index.
std::string format_sequence(const ControlSequence& seq);

/// Inverse of format_sequence. Also accepts ',' or ';' as the step separator
/// and "-" for a zero-width step.
ControlSequence parse_sequence(std::string_view text, std::size_t width);

/// T+1 lines of n bits.
std::string format_trajectory(const Trajectory& trajectory);

} // namespace cbn
