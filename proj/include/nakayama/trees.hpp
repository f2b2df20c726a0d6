#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyck.hpp"
#include "kupisch.hpp"

namespace nakayama {

struct NotNaturallyLabeled : std::invalid_argument {
    NotNaturallyLabeled() : std::invalid_argument("tree is not naturally labeled") {}
};

struct BoundViolated : std::invalid_argument {
    BoundViolated() : std::invalid_argument("tree violates the depth bound") {}
};

/// Rooted tree on vertices {0,...,n} with root n, stored as a parent map
/// for the non-root vertices.
class LabeledTree {
public:
    explicit LabeledTree(std::vector<int> parent) : parent_(std::move(parent)) {
        int n = size();
        for (int i = 0; i < n; ++i)
            if (parent_[static_cast<std::size_t>(i)] <= i || parent_[static_cast<std::size_t>(i)] > n)
                throw std::invalid_argument("parent labels must increase towards the root");
    }

    int size() const { return static_cast<int>(parent_.size()); } // n; vertices are 0..n
    int root() const { return size(); }
    int parent(int i) const {
        if (i < 0 || i >= size()) throw std::out_of_range("no parent for this vertex");
        return parent_[static_cast<std::size_t>(i)];
    }

    std::vector<std::vector<int>> children() const {
        std::vector<std::vector<int>> ch(static_cast<std::size_t>(size()) + 1);
        for (int i = 0; i < size(); ++i)
            ch[static_cast<std::size_t>(parent(i))].push_back(i);
        for (auto& v : ch) std::sort(v.begin(), v.end());
        return ch;
    }

    int depth(int i) const {
        check_vertex(i);
        int d = 0;
        while (i != root()) { i = parent(i); ++d; }
        return d;
    }

    int dist(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        // walk both vertices up to their lowest common ancestor
        int di = depth(i), dj = depth(j), d = 0;
        while (di > dj) { i = parent(i); --di; ++d; }
        while (dj > di) { j = parent(j); --dj; ++d; }
        while (i != j) { i = parent(i); j = parent(j); d += 2; }
        return d;
    }

    bool operator==(const LabeledTree& o) const { return parent_ == o.parent_; }
    bool operator!=(const LabeledTree& o) const { return !(*this == o); }

private:
    void check_vertex(int i) const {
        if (i < 0 || i > size()) throw std::out_of_range("vertex out of range");
    }

    std::vector<int> parent_;
};

/// tau(A): edges i + c_i -> i for the linear-product series A.
inline LabeledTree tau(const KupischSeries& a) {
    if (a.is_cyclic()) throw std::invalid_argument("tau requires a linear series");
    std::vector<int> parent(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i)
        parent[static_cast<std::size_t>(i)] = i + a.c(i);
    return LabeledTree(std::move(parent));
}

inline bool is_naturally_labeled(const LabeledTree& t) {
    // labels increase towards the root (enforced on construction), and
    // children of i are all smaller than children of i+1
    auto ch = t.children();
    for (int i = 0; i + 1 <= t.size(); ++i) {
        const auto& a = ch[static_cast<std::size_t>(i)];
        const auto& b = ch[static_cast<std::size_t>(i + 1)];
        if (!a.empty() && !b.empty() && a.back() >= b.front()) return false;
    }
    return true;
}

/// Inverse of tau: c_i = parent(i) - i.
inline KupischSeries tau_inverse(const LabeledTree& t) {
    if (!is_naturally_labeled(t)) throw NotNaturallyLabeled();
    std::vector<int> c(static_cast<std::size_t>(t.size()));
    for (int i = 0; i < t.size(); ++i)
        c[static_cast<std::size_t>(i)] = t.parent(i) - i;
    return KupischSeries::linear(std::move(c));
}

inline int pdim_via_tree(const LabeledTree& t, int i) {
    return t.dist(i, i + 1) - 1;
}

inline int gldim_via_tree(const LabeledTree& t) {
    int best = 0;
    for (int i = 0; i < t.size(); ++i)
        best = std::max(best, pdim_via_tree(t, i));
    return best;
}

/// Ordered rooted tree: a root with an ordered list of subtrees.
/// Structural value semantics.
struct OrderedTree {
    std::vector<OrderedTree> children;

    bool operator==(const OrderedTree& o) const { return children == o.children; }
    bool operator!=(const OrderedTree& o) const { return !(*this == o); }

    int vertex_count() const {
        int n = 1;
        for (const auto& c : children) n += c.vertex_count();
        return n;
    }

    int depth() const {
        int d = 0;
        for (const auto& c : children) d = std::max(d, 1 + c.depth());
        return d;
    }
};

/// Order children by label, drop the labels.
inline OrderedTree forget_labels(const LabeledTree& t) {
    if (!is_naturally_labeled(t)) throw NotNaturallyLabeled();
    auto ch = t.children();
    // children() already sorts ascending by label
    struct Builder {
        const std::vector<std::vector<int>>& ch;
        OrderedTree build(int v) const {
            OrderedTree node;
            for (int c : ch[static_cast<std::size_t>(v)])
                node.children.push_back(build(c));
            return node;
        }
    };
    return Builder{ch}.build(t.root());
}

/// The unique natural labeling: levels get descending label intervals
/// from the root down, left to right within a level.
inline LabeledTree natural_labeling(const OrderedTree& t) {
    // collect nodes level by level, in left-to-right order
    std::vector<std::vector<const OrderedTree*>> levels;
    struct Walker {
        std::vector<std::vector<const OrderedTree*>>& levels;
        void visit(const OrderedTree& node, std::size_t d) {
            if (levels.size() <= d) levels.resize(d + 1);
            levels[d].push_back(&node);
            for (const auto& c : node.children) visit(c, d + 1);
        }
    };
    Walker{levels}.visit(t, 0);

    int n = t.vertex_count() - 1;
    std::map<const OrderedTree*, int> label;
    int next = n;
    for (const auto& level : levels) {
        int lo = next - static_cast<int>(level.size()) + 1;
        int v = lo;
        for (const OrderedTree* node : level) label[node] = v++;
        next = lo - 1;
    }

    std::vector<int> parent(static_cast<std::size_t>(n));
    struct ParentWalker {
        const std::map<const OrderedTree*, int>& label;
        std::vector<int>& parent;
        void visit(const OrderedTree& node) const {
            for (const auto& c : node.children) {
                parent[static_cast<std::size_t>(label.at(&c))] = label.at(&node);
                visit(c);
            }
        }
    };
    ParentWalker{label, parent}.visit(t);
    return LabeledTree(std::move(parent));
}

/// No two siblings i < j with subtree depths >= floor(g/2) and
/// >= ceil(g/2) respectively; equivalent to gldim <= g.
inline bool sibling_bound_check(const OrderedTree& t, int g) {
    int lo = g / 2, hi = (g + 1) / 2;
    bool seen_lo = false;
    for (const auto& c : t.children) {
        int d = c.depth();
        if (seen_lo && d >= hi) return false;
        if (d >= lo) seen_lo = true;
        if (!sibling_bound_check(c, g)) return false;
    }
    return true;
}

struct TreeDecomposition {
    int m = 0;
    std::vector<OrderedTree> left;  // depths <= floor(g/2)
    std::vector<OrderedTree> right; // depths <= ceil(g/2)
    OrderedTree middle;             // depth <= ceil(g/2), = ceil(g/2) when m > 0
};

/// Bounded-depth decomposition: repeatedly peel off the left and right
/// siblings of the unique deep child of the root.
inline TreeDecomposition decompose_tree_bounded(OrderedTree t, int g) {
    if (!sibling_bound_check(t, g)) throw BoundViolated();
    const int hcut = (g + 1) / 2; // ceil(g/2)
    TreeDecomposition out;
    while (t.depth() > hcut) {
        int deep = -1;
        for (std::size_t idx = 0; idx < t.children.size(); ++idx) {
            if (1 + t.children[idx].depth() > hcut) {
                if (deep >= 0) throw BoundViolated(); // uniqueness from the sibling bound
                deep = static_cast<int>(idx);
            }
        }
        ++out.m;
        OrderedTree left_part, right_part;
        left_part.children.assign(t.children.begin(), t.children.begin() + deep);
        right_part.children.assign(t.children.begin() + deep + 1, t.children.end());
        out.left.push_back(std::move(left_part));
        out.right.push_back(std::move(right_part));
        OrderedTree descend = std::move(t.children[static_cast<std::size_t>(deep)]);
        t = std::move(descend);
    }
    out.middle = std::move(t);
    return out;
}

inline OrderedTree recompose_tree_bounded(const TreeDecomposition& dec) {
    OrderedTree t = dec.middle;
    for (int k = dec.m; k >= 1; --k) {
        OrderedTree node;
        const auto& l = dec.left[static_cast<std::size_t>(k - 1)];
        const auto& r = dec.right[static_cast<std::size_t>(k - 1)];
        node.children = l.children;
        node.children.push_back(std::move(t));
        node.children.insert(node.children.end(), r.children.begin(), r.children.end());
        t = std::move(node);
    }
    return t;
}

/// Pre-order traversal: up step on descend, down step on ascend.
inline DyckPath tree_to_dyck(const OrderedTree& t) {
    std::vector<bool> steps;
    struct Walker {
        std::vector<bool>& steps;
        void visit(const OrderedTree& node) const {
            for (const auto& c : node.children) {
                steps.push_back(true);
                visit(c);
                steps.push_back(false);
            }
        }
    };
    Walker{steps}.visit(t);
    return DyckPath(std::move(steps));
}

inline OrderedTree dyck_to_tree(const DyckPath& d) {
    OrderedTree root;
    std::vector<OrderedTree*> stack{&root};
    for (bool u : d.steps()) {
        if (u) {
            stack.back()->children.emplace_back();
            stack.push_back(&stack.back()->children.back());
        } else {
            stack.pop_back();
        }
    }
    return root;
}

/// Balanced-parenthesis serialization of the pre-order traversal.
inline std::string tree_to_parens(const OrderedTree& t) {
    DyckPath d = tree_to_dyck(t);
    std::string out;
    for (bool u : d.steps()) out.push_back(u ? '(' : ')');
    return out;
}

inline OrderedTree tree_from_parens(const std::string& s) {
    std::string word;
    for (char ch : s) {
        if (ch == '(') word.push_back('U');
        else if (ch == ')') word.push_back('D');
        else throw std::invalid_argument("parenthesis string expected");
    }
    return dyck_to_tree(DyckPath(word));
}

} // namespace nakayama
