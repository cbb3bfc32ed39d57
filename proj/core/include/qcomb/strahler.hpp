#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "qcomb/rational.hpp"
#include "qcomb/series.hpp"

namespace qcomb::strahler {

// Plane binary tree: a leaf, or an internal node with two subtrees.
struct BinaryTree {
    std::unique_ptr<BinaryTree> left;   // null for a leaf
    std::unique_ptr<BinaryTree> right;  // null iff left is null

    bool is_leaf() const { return left == nullptr; }
};

BinaryTree leaf();
BinaryTree node(BinaryTree l, BinaryTree r);

// Register function (Horton-Strahler number): leaves have 0; an internal
// node has max of the children when they differ, child value + 1 on a tie.
int reg(const BinaryTree& t);

// All plane binary trees of every size up to a cap, stored with full
// structure sharing so enumeration over millions of trees stays cheap.
// Trees of size m are addressed by (m, index), index < Catalan(m).
class TreeTable {
  public:
    // Default cap 14: Catalan(14) = 2674440 trees at the top size.
    explicit TreeTable(int cap = 14);

    int cap() const { return cap_; }
    std::uint64_t count(int size) const;  // = Catalan(size)

    // Register function of tree (size, index).
    int reg_of(int size, std::uint64_t index) const;

    // Materialize one tree (for spot checks; enumeration uses reg_of).
    BinaryTree build(int size, std::uint64_t index) const;

  private:
    struct Node {
        std::int8_t left_size;
        std::uint32_t left, right;
    };
    int cap_;
    std::vector<std::vector<Node>> nodes_;        // per size, size >= 1
    std::vector<std::vector<std::uint8_t>> reg_;  // memoized register values
};

// Streams every plane binary tree with n internal nodes exactly once.
// Throws if n exceeds the table cap.
void enumerate_trees(const TreeTable& table, int n,
                     const std::function<void(int size, std::uint64_t index)>& visit);

// Histogram of register values over all trees of size n, by enumeration.
std::vector<std::uint64_t> census_by_enumeration(const TreeTable& table, int n);

// Generating function R_p(z) of trees with register value exactly p,
// truncated at the given order: R_0 = 1, R_p = z R_{p-1}^2 / (1 - 2z sum_{j<p} R_j).
Series register_series(int p, int order);

// Number of trees of size n with register value exactly p, via the
// central-binomial closed form. Requires n, p >= 1.
Int count_register(long n, int p);

// sum over trees of size n of reg(t), as the v2-weighted binomial sum.
Int register_weighted_sum(long n);

// Exact mean register value over trees of size n.
Rat register_mean(long n);

// d0 = 1/2 - gamma/(2 log 2) - 1/log 2 + log2(pi), each constant certified to tol.
double register_d0(double tol);

}  // namespace qcomb::strahler
