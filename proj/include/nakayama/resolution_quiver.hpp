#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "kupisch.hpp"
#include "rational.hpp"

namespace nakayama {

struct WrongKind : std::invalid_argument {
    WrongKind() : std::invalid_argument("resolution quiver requires a cyclic series") {}
};

struct Cycle {
    std::vector<int> vertices; // in successor order, starting at the minimal vertex
    Rational weight;           // (1/n) * sum of c_i over the cycle
};

struct CycleReport {
    std::vector<Cycle> cycles; // sorted by minimal vertex
    int component_count = 0;   // equals the number of cycles
};

/// Ringel's resolution quiver: the functional graph i -> (i + c_i) mod n.
class ResolutionQuiver {
public:
    explicit ResolutionQuiver(const KupischSeries& a) {
        if (!a.is_cyclic()) throw WrongKind();
        int n = a.size();
        successor_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            successor_[static_cast<std::size_t>(i)] = (i + a.c(i)) % n;
    }

    int size() const { return static_cast<int>(successor_.size()); }
    int successor(int i) const { return successor_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& successors() const { return successor_; }

private:
    std::vector<int> successor_;
};

inline ResolutionQuiver build_resolution_quiver(const KupischSeries& a) {
    return ResolutionQuiver(a);
}

inline CycleReport cycle_report(const ResolutionQuiver& q, const KupischSeries& a) {
    int n = q.size();
    // Functional graph: walk from each unvisited vertex; the first vertex
    // seen twice on a walk lies on a cycle.
    std::vector<int> color(static_cast<std::size_t>(n), 0); // 0 unseen, 1 on stack, 2 done
    CycleReport report;
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != 0) continue;
        std::vector<int> path;
        int v = start;
        while (color[static_cast<std::size_t>(v)] == 0) {
            color[static_cast<std::size_t>(v)] = 1;
            path.push_back(v);
            v = q.successor(v);
        }
        if (color[static_cast<std::size_t>(v)] == 1) {
            // new cycle: the tail of the current path starting at v
            auto it = std::find(path.begin(), path.end(), v);
            std::vector<int> cyc(it, path.end());
            auto min_it = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), min_it, cyc.end());
            int total = 0;
            for (int u : cyc) total += a.c(u);
            report.cycles.push_back({std::move(cyc), Rational(total, n)});
        }
        for (int u : path) color[static_cast<std::size_t>(u)] = 2;
    }
    std::sort(report.cycles.begin(), report.cycles.end(),
              [](const Cycle& x, const Cycle& y) { return x.vertices[0] < y.vertices[0]; });
    report.component_count = static_cast<int>(report.cycles.size());
    return report;
}

inline CycleReport cycle_report(const KupischSeries& a) {
    return cycle_report(ResolutionQuiver(a), a);
}

/// Finite global dimension iff the quiver is connected and its unique
/// cycle has weight 1.
inline bool finite_gldim_via_quiver(const KupischSeries& a) {
    CycleReport r = cycle_report(a);
    return r.component_count == 1 && r.cycles[0].weight == Rational(1);
}

} // namespace nakayama
