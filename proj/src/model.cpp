#include "cbn/model.hpp"

#include <algorithm>
#include <sstream>

namespace cbn {

Cbn::Cbn(std::vector<std::vector<VarIndex>> update_sets) : update_sets_(std::move(update_sets)) {
    const std::size_t n = update_sets_.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto& set = update_sets_[i];
        if (set.empty()) {
            throw ParseError(ParseErrorKind::ConstantUpdate, 0,
                             var_name(static_cast<VarIndex>(i)) +
                                 " has a constant update function; control it explicitly instead");
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        if (set.back() >= n) {
            throw ParseError(ParseErrorKind::IndexOutOfRange, 0,
                             var_name(static_cast<VarIndex>(i)) + " depends on " +
                                 var_name(set.back()) + " but the network has " +
                                 std::to_string(n) + " variables");
        }
    }
}

bool Cbn::has_self_loop(VarIndex i) const {
    const auto& set = update_sets_.at(i);
    return std::binary_search(set.begin(), set.end(), i);
}

Cbcn::Cbcn(Cbn base, std::vector<VarIndex> controlled)
    : base_(std::move(base)), controlled_(std::move(controlled)), column_(base_.size(), kNoColumn) {
    std::sort(controlled_.begin(), controlled_.end());
    controlled_.erase(std::unique(controlled_.begin(), controlled_.end()), controlled_.end());
    for (std::size_t c = 0; c < controlled_.size(); ++c) {
        if (controlled_[c] >= base_.size()) {
            throw ParseError(ParseErrorKind::IndexOutOfRange, 0,
                             "controlled index " + var_name(controlled_[c]) + " out of range");
        }
        column_[controlled_[c]] = c;
    }
}

std::size_t Cbcn::control_column(VarIndex i) const {
    const std::size_t c = column_.at(i);
    if (c == kNoColumn) throw UnknownNode(var_name(i) + " is not controlled");
    return c;
}

std::string NodeClass::to_string() const {
    if (generator) return "Generator";
    if (directly_controlled && channel) return "DirectlyControlled+Channel";
    if (directly_controlled) return "DirectlyControlled";
    if (channel) return "Channel";
    return "PlainSimple";
}

DependencyGraph::DependencyGraph(const Cbcn& net)
    : n_(net.size()), present_(2 * n_, 0), out_(2 * n_), in_(2 * n_) {
    std::fill(present_.begin(), present_.begin() + static_cast<std::ptrdiff_t>(n_), 1);
    const Cbn& base = net.base();
    // Iterating targets in ascending order keeps every out-list sorted.
    for (VarIndex i = 0; i < n_; ++i) {
        if (net.is_controlled(i)) {
            const NodeId g = generator_of(i);
            present_[g] = 1;
            out_[g].push_back(i);
            in_[i].push_back(g);
            ++num_generators_;
            ++num_arcs_;
            continue;
        }
        const auto deps = base.update_set(i);
        in_[i].assign(deps.begin(), deps.end());
        for (VarIndex j : deps) out_[j].push_back(i);
        num_arcs_ += deps.size();
    }
}

NodeId DependencyGraph::checked(NodeId v) const {
    if (!contains(v)) throw UnknownNode("node id " + std::to_string(v) + " is not in the graph");
    return v;
}

std::vector<NodeId> DependencyGraph::nodes() const {
    std::vector<NodeId> out;
    out.reserve(num_nodes());
    for (NodeId v = 0; v < present_.size(); ++v) {
        if (present_[v]) out.push_back(v);
    }
    return out;
}

std::vector<Arc> DependencyGraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(num_arcs_);
    for (NodeId v = 0; v < present_.size(); ++v) {
        if (!present_[v]) continue;
        for (NodeId w : out_[v]) out.push_back({v, w});
    }
    return out;
}

bool DependencyGraph::has_self_loop(NodeId v) const {
    const auto& out = out_[checked(v)];
    return std::binary_search(out.begin(), out.end(), v);
}

std::string DependencyGraph::node_name(NodeId v) const {
    if (is_generator(v)) return "U" + std::to_string(v - n_ + 1);
    return var_name(v);
}

DependencyGraph build_dependency_graph(const Cbcn& net) { return DependencyGraph(net); }

NodeClass classify_node(const DependencyGraph& g, NodeId v) {
    if (!g.contains(v)) throw UnknownNode("node id " + std::to_string(v) + " is not in the graph");
    NodeClass c;
    if (g.is_generator(v)) {
        c.generator = true;
        return c;
    }
    c.directly_controlled = g.is_directly_controlled(v);
    c.channel = g.feeds_uniquely(v);
    return c;
}

std::string serialize_cbn(const Cbcn& net) {
    std::ostringstream os;
    for (VarIndex i = 0; i < net.size(); ++i) {
        os << var_name(i) << " = ";
        if (net.is_controlled(i)) {
            os << "?\n";
            continue;
        }
        const auto deps = net.base().update_set(i);
        for (std::size_t k = 0; k < deps.size(); ++k) {
            if (k) os << " & ";
            os << var_name(deps[k]);
        }
        os << '\n';
    }
    return os.str();
}

std::string to_dot(const DependencyGraph& g) {
    std::ostringstream os;
    os << "digraph dependency {\n";
    for (NodeId v : g.nodes()) {
        os << "  " << g.node_name(v);
        if (g.is_generator(v)) os << " [shape=box]";
        os << ";\n";
    }
    for (const Arc& a : g.arcs()) {
        os << "  " << g.node_name(a.from) << " -> " << g.node_name(a.to) << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string var_name(VarIndex i) { return "X" + std::to_string(std::size_t{i} + 1); }

bool parse_var_name(std::string_view token, VarIndex& out) {
    if (token.size() < 2 || (token[0] != 'X' && token[0] != 'x')) return false;
    std::uint64_t value = 0;
    for (char c : token.substr(1)) {
        if (c < '0' || c > '9') return false;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > 0xFFFFFFFFULL) return false;
    }
    if (value == 0) {
        out = static_cast<VarIndex>(-1);
        return true;
    }
    out = static_cast<VarIndex>(value - 1);
    return true;
}

} // namespace cbn
