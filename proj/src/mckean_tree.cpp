#include "kac/mckean_tree.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "kac/special_functions.hpp"

namespace kac {

namespace {

// A flag sequence is a valid pre-order of a full binary tree iff the count
// of nodes still awaited stays positive until it hits zero at the very end.
std::int64_t validate_preorder(const std::vector<bool>& pre) {
    if (pre.empty())
        throw std::invalid_argument("McKeanTree: empty shape");
    std::int64_t open = 1, leaves = 0;
    for (std::size_t i = 0; i < pre.size(); ++i) {
        if (open <= 0)
            throw std::invalid_argument("McKeanTree: shape has trailing symbols");
        if (pre[i]) {
            open += 1; // consumes one slot, opens two
        } else {
            open -= 1;
            leaves += 1;
        }
    }
    if (open != 0)
        throw std::invalid_argument("McKeanTree: shape ends before tree is complete");
    return leaves;
}

} // namespace

McKeanTree::McKeanTree(std::vector<bool> preorder_flags) : pre_(std::move(preorder_flags)) {
    n_leaves_ = validate_preorder(pre_);
}

McKeanTree McKeanTree::single_leaf() { return McKeanTree(std::vector<bool>{false}); }

McKeanTree McKeanTree::from_string(std::string_view s) {
    std::vector<bool> flags;
    flags.reserve(s.size());
    for (char c : s) {
        if (c == 'I')
            flags.push_back(true);
        else if (c == 'L')
            flags.push_back(false);
        else
            throw std::invalid_argument("McKeanTree: shape string must contain only 'I'/'L'");
    }
    return McKeanTree(std::move(flags));
}

std::string McKeanTree::to_string() const {
    std::string s;
    s.reserve(pre_.size());
    for (bool b : pre_)
        s.push_back(b ? 'I' : 'L');
    return s;
}

std::uint64_t catalan(std::int64_t n) {
    if (n < 1)
        throw std::domain_error("catalan: requires n >= 1");
    if (n > kCatalanMaxLeaves)
        throw std::range_error("catalan: exact 64-bit result only for n <= 37");
    // binom(2n-2, n-1)/n via 128-bit running product, exact at every step
    unsigned __int128 b = 1;
    const std::int64_t m = n - 1;
    for (std::int64_t i = 1; i <= m; ++i) {
        b = b * static_cast<unsigned __int128>(m + i);
        b /= static_cast<unsigned __int128>(i); // binom(m+i, i) is integral
    }
    b /= static_cast<unsigned __int128>(n);
    return static_cast<std::uint64_t>(b);
}

namespace {

void enumerate_rec(std::int64_t n, std::vector<std::vector<std::string>>& memo) {
    if (!memo[n].empty())
        return;
    if (n == 1) {
        memo[n] = {"L"};
        return;
    }
    for (std::int64_t j = 1; j <= n - 1; ++j) { // j leaves on the right
        enumerate_rec(n - j, memo);
        enumerate_rec(j, memo);
        for (const auto& left : memo[n - j])
            for (const auto& right : memo[j])
                memo[n].push_back("I" + left + right);
    }
}

} // namespace

std::vector<McKeanTree> enumerate_trees(std::int64_t n, std::int64_t cap) {
    if (n < 1)
        throw std::domain_error("enumerate_trees: requires n >= 1");
    if (n > cap)
        throw std::range_error("enumerate_trees: n exceeds enumeration cap");
    std::vector<std::vector<std::string>> memo(n + 1);
    enumerate_rec(n, memo);
    std::vector<McKeanTree> out;
    out.reserve(memo[n].size());
    for (const auto& s : memo[n])
        out.push_back(McKeanTree::from_string(s));
    return out;
}

TreeWeight tree_probability(const McKeanTree& tree) {
    // Scan the shape back to front: children complete before their parent,
    // so a stack of subtree leaf counts gives l(v) at each internal node.
    const auto& pre = tree.preorder();
    std::vector<std::int64_t> counts;
    double log_p = 0.0;
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        if (*it) {
            const std::int64_t a = counts.back();
            counts.pop_back();
            const std::int64_t b = counts.back();
            counts.pop_back();
            const std::int64_t l = a + b;
            log_p -= std::log(static_cast<double>(l - 1));
            counts.push_back(l);
        } else {
            counts.push_back(1);
        }
    }
    return TreeWeight{std::exp(log_p), log_p};
}

McKeanTree sample_tree(std::int64_t n, RandomStream& rng) {
    if (n < 1)
        throw std::domain_error("sample_tree: requires n >= 1");
    std::vector<bool> pre;
    pre.reserve(static_cast<std::size_t>(2 * n - 1));
    std::vector<std::int64_t> todo;
    todo.push_back(n);
    while (!todo.empty()) {
        const std::int64_t m = todo.back();
        todo.pop_back();
        if (m == 1) {
            pre.push_back(false);
            continue;
        }
        pre.push_back(true);
        const std::int64_t j = static_cast<std::int64_t>(rng.uniform_index1(m - 1));
        todo.push_back(j);     // right subtree, j leaves
        todo.push_back(m - j); // left subtree, processed first
    }
    return McKeanTree(std::move(pre));
}

DepthProfile leaf_depths(const McKeanTree& tree) {
    DepthProfile out;
    out.depths.resize(static_cast<std::size_t>(tree.leaf_count()));
    tree.walk<std::int32_t>(
        0,
        [](std::int64_t, std::int32_t d) { return std::pair<std::int32_t, std::int32_t>{d + 1, d + 1}; },
        [&](std::int64_t leaf_id, std::int32_t d) { out.depths[leaf_id - 1] = d; });
    out.tree_depth = *std::min_element(out.depths.begin(), out.depths.end());
    return out;
}

bool kraft_sum_is_one(const std::vector<std::int32_t>& depths) {
    if (depths.empty())
        return false;
    if (depths.size() == 1)
        return depths[0] == 0;
    // merge two nodes of maximal depth into one a level up until one node
    // of depth zero remains; exactly the dyadic sum, done in integers
    std::map<std::int32_t, std::int64_t> count;
    for (auto d : depths) {
        if (d <= 0)
            return false;
        ++count[d];
    }
    while (!count.empty()) {
        auto deepest = std::prev(count.end());
        const std::int32_t d = deepest->first;
        const std::int64_t c = deepest->second;
        if (d == 0)
            return c == 1 && count.size() == 1;
        if (c % 2 != 0)
            return false;
        count.erase(deepest);
        count[d - 1] += c / 2;
    }
    return false;
}

double depth_moment_exact(double x, std::int64_t n) {
    if (!(x > 0.0))
        throw std::domain_error("depth_moment_exact: requires x > 0");
    if (n < 1)
        throw std::domain_error("depth_moment_exact: requires n >= 1");
    const double a = 2.0 * x;
    return std::exp(log_gamma(a + static_cast<double>(n) - 1.0) - log_gamma(a) -
                    log_gamma(static_cast<double>(n)));
}

} // namespace kac
