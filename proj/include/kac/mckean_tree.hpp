#pragma once

// Full (every node has 0 or 2 children) ordered binary trees with labeled
// leaves, the index set of the Wild-sum decomposition. A tree with n leaves
// is stored as its pre-order shape string: one flag per node, internal or
// leaf, 2n-1 flags total. Pre-order keeps leaves in left-to-right order and
// gives internal nodes the fixed 1..n-1 numbering used to attach scattering
// angles, so every quantity of interest falls out of one linear scan.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kac/rng.hpp"

namespace kac {

class McKeanTree {
public:
    // flags[i] == true marks an internal node in pre-order
    explicit McKeanTree(std::vector<bool> preorder_flags);

    static McKeanTree single_leaf();
    static McKeanTree from_string(std::string_view s); // "I"/"L" symbols
    std::string to_string() const;

    std::int64_t leaf_count() const { return n_leaves_; }
    std::int64_t internal_count() const { return n_leaves_ - 1; }
    const std::vector<bool>& preorder() const { return pre_; }

    bool operator==(const McKeanTree& other) const { return pre_ == other.pre_; }

    // Pre-order walk with per-node inherited state. onInternal(node_id, state)
    // returns {left_state, right_state}; node_id runs 1..n-1 in pre-order.
    // onLeaf(leaf_id, state); leaf_id runs 1..n left to right. Iterative, so
    // comb-shaped trees with millions of leaves do not overflow the stack.
    template <class S, class FInternal, class FLeaf>
    void walk(S root_state, FInternal&& onInternal, FLeaf&& onLeaf) const {
        std::vector<S> pending;
        pending.push_back(std::move(root_state));
        std::int64_t node_id = 0, leaf_id = 0;
        for (bool internal : pre_) {
            S state = std::move(pending.back());
            pending.pop_back();
            if (internal) {
                auto [left, right] = onInternal(++node_id, state);
                pending.push_back(std::move(right));
                pending.push_back(std::move(left)); // left popped first
            } else {
                onLeaf(++leaf_id, state);
            }
        }
    }

private:
    McKeanTree() = default;
    std::vector<bool> pre_;
    std::int64_t n_leaves_ = 0;
};

struct DepthProfile {
    std::vector<std::int32_t> depths; // edges from leaf j to the root
    std::int32_t tree_depth = 0;      // min over leaves
};

struct TreeWeight {
    double probability = 1.0;
    double log_probability = 0.0;
};

// |G(n)|: number of full binary trees with n leaves, (2n-2 choose n-1)/n.
// Exact in 64-bit unsigned for n <= 37; throws std::range_error beyond.
std::uint64_t catalan(std::int64_t n);
inline constexpr std::int64_t kCatalanMaxLeaves = 37;

// All trees of G(n), deterministic order. Guarded by a cap (default 10,
// 4862 trees) since the count is Catalan-exponential.
std::vector<McKeanTree> enumerate_trees(std::int64_t n, std::int64_t cap = 10);

// Probability of a tree under the uniform-split recursion: the product of
// 1/(l(v)-1) over internal nodes v, where l(v) counts leaves below v.
// The plain probability underflows for huge trees; log form never does.
TreeWeight tree_probability(const McKeanTree& tree);

// Draw a tree of G(n): split n into (left, right) = (n-j, j) with j uniform
// on {1,...,n-1}, recurse on both sides. Matches tree_probability by
// construction; iterative, O(n).
McKeanTree sample_tree(std::int64_t n, RandomStream& rng);

DepthProfile leaf_depths(const McKeanTree& tree);

// Exact check of sum_j 2^(-depth_j) == 1 using integer pair-merging on the
// depth counts, no floating point.
bool kraft_sum_is_one(const std::vector<std::int32_t>& depths);

// E[ sum_j x^(depth_j) | n leaves ] = Gamma(2x+n-1) / (Gamma(2x) Gamma(n)),
// evaluated in log space; stable up to n ~ 1e6.
double depth_moment_exact(double x, std::int64_t n);

} // namespace kac
