#include "cbn/synthesis.hpp"

#include <algorithm>

namespace cbn {

void ControlSequence::push_back(ControlVector u) {
    if (u.size() != width_) {
        throw DimensionMismatch("control vector has " + std::to_string(u.size()) +
                                " bits, sequence width is " + std::to_string(width_));
    }
    steps_.push_back(std::move(u));
}

std::vector<bool> ControlSequence::column(std::size_t c) const {
    std::vector<bool> out;
    out.reserve(steps_.size());
    for (const auto& u : steps_) out.push_back(u.at(c));
    return out;
}

NetworkState step(const Cbcn& net, const NetworkState& x, const ControlVector& u) {
    if (x.size() != net.size()) {
        throw DimensionMismatch("state has " + std::to_string(x.size()) + " bits, network has " +
                                std::to_string(net.size()) + " variables");
    }
    if (u.size() != net.num_controls()) {
        throw DimensionMismatch("control vector has " + std::to_string(u.size()) +
                                " bits, network has " + std::to_string(net.num_controls()) +
                                " controls");
    }
    NetworkState next(net.size());
    for (VarIndex i = 0; i < net.size(); ++i) {
        if (net.is_controlled(i)) {
            next.set(i, u[net.control_column(i)]);
            continue;
        }
        const auto deps = net.base().update_set(i);
        next.set(i, std::all_of(deps.begin(), deps.end(), [&](VarIndex j) { return x[j]; }));
    }
    return next;
}

Trajectory simulate(const Cbcn& net, const NetworkState& x0, const ControlSequence& seq) {
    if (seq.width() != net.num_controls()) {
        throw DimensionMismatch("sequence width " + std::to_string(seq.width()) +
                                " does not match " + std::to_string(net.num_controls()) + " controls");
    }
    Trajectory out;
    out.reserve(seq.horizon() + 1);
    out.push_back(x0);
    for (const auto& u : seq.steps()) out.push_back(step(net, out.back(), u));
    return out;
}

SynthesisPlan plan_synthesis(const Cbcn& net) {
    const DependencyGraph g(net);
    SynthesisPlan plan;
    plan.paths = decompose_controlled_paths(g);
    plan.depth = fill_depth(g);
    std::size_t longest = 0;
    for (const auto& p : plan.paths) {
        plan.path_lengths.push_back(p.simple_count());
        longest = std::max(longest, p.simple_count());
    }
    plan.horizon = plan.depth.tau + longest;
    return plan;
}

std::vector<std::vector<bool>> split_target(const SynthesisPlan& plan, const NetworkState& b) {
    std::vector<std::vector<bool>> slices;
    slices.reserve(plan.paths.size());
    for (const auto& p : plan.paths) {
        std::vector<bool> slice;
        for (std::size_t r = 1; r < p.nodes.size(); ++r) slice.push_back(b.at(p.nodes[r]));
        slices.push_back(std::move(slice));
    }
    return slices;
}

ControlSequence synthesize(const Cbcn& net, const SynthesisPlan& plan, const NetworkState& b) {
    if (b.size() != net.size()) {
        throw DimensionMismatch("target has " + std::to_string(b.size()) + " bits, network has " +
                                std::to_string(net.size()) + " variables");
    }
    const std::size_t T = plan.horizon;
    std::vector<ControlVector> steps(T, ControlVector(net.num_controls(), true));
    const auto slices = split_target(plan, b);
    const std::size_t n = net.size();
    for (std::size_t p = 0; p < plan.paths.size(); ++p) {
        const auto column = net.control_column(static_cast<VarIndex>(plan.paths[p].generator() - n));
        const auto& bits = slices[p];
        // Bit r (1-based) enters at T - r and arrives at the r-th node at T.
        for (std::size_t r = 1; r <= bits.size(); ++r) steps[T - r].set(column, bits[r - 1]);
    }
    ControlSequence seq(net.num_controls());
    for (auto& u : steps) seq.push_back(std::move(u));
    return seq;
}

ControlSequence synthesize(const Cbcn& net, const NetworkState& a, const NetworkState& b) {
    if (a.size() != net.size()) {
        throw DimensionMismatch("initial state has " + std::to_string(a.size()) +
                                " bits, network has " + std::to_string(net.size()) + " variables");
    }
    return synthesize(net, plan_synthesis(net), b);
}

std::string format_sequence(const ControlSequence& seq) {
    std::string out;
    for (const auto& u : seq.steps()) out += (u.size() == 0 ? std::string("-") : u.to_string()) + '\n';
    return out;
}

ControlSequence parse_sequence(std::string_view text, std::size_t width) {
    ControlSequence seq(width);
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        // "-" stands for the empty control vector of an uncontrolled network.
        seq.push_back(token == "-" ? ControlVector(0) : ControlVector::from_string(token));
        token.clear();
    };
    for (char c : text) {
        if (c == '\n' || c == ',' || c == ';') {
            flush();
        } else if (c != ' ' && c != '\t' && c != '\r') {
            token += c;
        }
    }
    flush();
    return seq;
}

std::string format_trajectory(const Trajectory& trajectory) {
    std::string out;
    for (const auto& x : trajectory) out += x.to_string() + '\n';
    return out;
}

} // namespace cbn
