#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbn/errors.hpp"

namespace cbn {

/// 0-based state-variable index. Variable i is written X<i+1> in text.
using VarIndex = std::uint32_t;

/// Dependency-graph node id. Simple node i stands for variable i; the
/// generator of a controlled variable i has id n + i.
using NodeId = std::uint32_t;

/// Conjunctive Boolean network: X_i(k+1) = AND_{j in update_set(i)} X_j(k).
///
/// Update sets are kept sorted and deduplicated. Construction rejects empty
/// sets (constant updates) and indices outside [0, n).
class Cbn {
public:
    Cbn() = default;
    explicit Cbn(std::vector<std::vector<VarIndex>> update_sets);

    std::size_t size() const { return update_sets_.size(); }
    std::span<const VarIndex> update_set(VarIndex i) const { return update_sets_.at(i); }
    const std::vector<std::vector<VarIndex>>& update_sets() const { return update_sets_; }

    bool has_self_loop(VarIndex i) const;

    friend bool operator==(const Cbn&, const Cbn&) = default;

private:
    std::vector<std::vector<VarIndex>> update_sets_;
};

/// A CBN in which every variable of `controlled()` is driven by a free input U_i.
/// A Cbcn with an empty controlled set is the plain CBN.
class Cbcn {
public:
    Cbcn() = default;
    explicit Cbcn(Cbn base, std::vector<VarIndex> controlled = {});

    const Cbn& base() const { return base_; }
    std::size_t size() const { return base_.size(); }

    /// Controlled variables in ascending order; this is also the column order of control vectors.
    std::span<const VarIndex> controlled() const { return controlled_; }
    std::size_t num_controls() const { return controlled_.size(); }
    bool is_controlled(VarIndex i) const { return column_.at(i) != kNoColumn; }

    /// Position of controlled variable `i` inside a control vector.
    std::size_t control_column(VarIndex i) const;

    friend bool operator==(const Cbcn& a, const Cbcn& b) {
        return a.base_ == b.base_ && a.controlled_ == b.controlled_;
    }

private:
    static constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);

    Cbn base_;
    std::vector<VarIndex> controlled_;
    std::vector<std::size_t> column_;
};

/// Fixed-width bit string. Bit 0 is the first variable (little-endian when
/// packed into an integer, leftmost character when printed).
template <class Tag>
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t width, bool value = false) : bits_(width, value ? 1 : 0) {}

    static BitString from_string(std::string_view text) {
        BitString out;
        out.bits_.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw DimensionMismatch("bit string may only contain '0' and '1': '" +
                                        std::string(text) + "'");
            }
            out.bits_.push_back(c == '1' ? 1 : 0);
        }
        return out;
    }

    static BitString from_integer(std::uint64_t value, std::size_t width) {
        BitString out(width);
        for (std::size_t i = 0; i < width && i < 64; ++i) out.bits_[i] = (value >> i) & 1U;
        return out;
    }

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    bool at(std::size_t i) const { return bits_.at(i) != 0; }
    void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }

    bool all(bool value) const {
        for (auto b : bits_) {
            if ((b != 0) != value) return false;
        }
        return true;
    }

    std::uint64_t to_integer() const {
        if (bits_.size() > 64) throw DimensionMismatch("bit string wider than 64 bits");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) v |= std::uint64_t{bits_[i]} << i;
        return v;
    }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
        return s;
    }

    BitString complement() const {
        BitString out = *this;
        for (auto& b : out.bits_) b ^= 1U;
        return out;
    }

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

struct StateTag {};
struct ControlTag {};

/// Value of X_1..X_n at one time step.
using NetworkState = BitString<StateTag>;
/// Values of the control inputs at one time step, one bit per controlled variable.
using ControlVector = BitString<ControlTag>;

/// Node classification. `directly_controlled` and `channel` may both be set.
struct NodeClass {
    bool generator = false;
    bool directly_controlled = false;
    bool channel = false;

    bool plain_simple() const { return !generator && !directly_controlled && !channel; }
    std::string to_string() const;

    friend bool operator==(const NodeClass&, const NodeClass&) = default;
};

struct Arc {
    NodeId from;
    NodeId to;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Dependency graph of a CBCN: arc j -> i when X_j appears in the update of
/// an uncontrolled X_i, plus one arc U_i -> i for every controlled i.
///
/// Adjacency lists are sorted ascending, so simple nodes come before generators.
class DependencyGraph {
public:
    explicit DependencyGraph(const Cbcn& net);

    std::size_t num_vars() const { return n_; }
    std::size_t num_nodes() const { return n_ + num_generators_; }
    std::size_t num_arcs() const { return num_arcs_; }
    /// Exclusive upper bound on node ids (2n); ids of absent generators are skipped.
    NodeId id_bound() const { return static_cast<NodeId>(2 * n_); }

    bool contains(NodeId v) const { return v < present_.size() && present_[v]; }
    bool is_generator(NodeId v) const { return v >= n_; }
    bool is_simple(NodeId v) const { return v < n_; }
    bool is_directly_controlled(NodeId v) const { return v < n_ && present_[n_ + v]; }

    NodeId generator_of(VarIndex i) const { return static_cast<NodeId>(n_ + i); }
    VarIndex controlled_var(NodeId generator) const { return static_cast<VarIndex>(generator - n_); }

    /// Present node ids in ascending order.
    std::vector<NodeId> nodes() const;
    std::vector<Arc> arcs() const;

    std::span<const NodeId> out_neighbors(NodeId v) const { return out_[checked(v)]; }
    std::span<const NodeId> in_neighbors(NodeId v) const { return in_[checked(v)]; }
    std::size_t out_degree(NodeId v) const { return out_[checked(v)].size(); }
    std::size_t in_degree(NodeId v) const { return in_[checked(v)].size(); }
    bool has_self_loop(NodeId v) const;

    /// Out-degree exactly one and not a self-loop: a channel or a generator.
    bool feeds_uniquely(NodeId v) const {
        return out_[v].size() == 1 && out_[v].front() != v;
    }

    /// "X3" for simple nodes, "U3" for the generator of X3.
    std::string node_name(NodeId v) const;

private:
    NodeId checked(NodeId v) const;

    std::size_t n_ = 0;
    std::size_t num_generators_ = 0;
    std::size_t num_arcs_ = 0;
    std::vector<std::uint8_t> present_;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
};

DependencyGraph build_dependency_graph(const Cbcn& net);

/// Throws UnknownNode when `v` is not a node of `g`.
NodeClass classify_node(const DependencyGraph& g, NodeId v);

/// Parses the line-oriented ".cbn" format:
///
///     # comment
///     X1 = X2
///     X2 = X1 & X2
///     X3 = ?          (controlled)
Cbcn parse_cbn(std::string_view text);

/// Parses a disjunctive network (`X1 = X2 | X3`) and returns the CBN with the
/// same update sets. The DBN trajectory from s is the complement of the CBN
/// trajectory from ~s (controls complemented as well), so controllability
/// verdicts carry over unchanged.
Cbcn dbn_to_cbn(std::string_view text);

std::string serialize_cbn(const Cbcn& net);

/// Graphviz digraph of the dependency graph; generators are drawn as boxes.
std::string to_dot(const DependencyGraph& g);

std::string var_name(VarIndex i);

/// Parses "X<k>" (1-based) into a 0-based index. Returns false if malformed;
/// "X0" parses but yields an index no network can contain.
bool parse_var_name(std::string_view token, VarIndex& out);

} // namespace cbn
