#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fintop/error.hpp"

namespace fintop {

struct ColoredArc {
    int source = 0;
    int target = 0;
    int color = 0;
};

// Directed multigraph with colored arcs and no self-loops.
struct ColoredDigraph {
    int vertices = 0;
    int colors = 0;
    std::vector<ColoredArc> arcs;
};

// Undirected graph, edges normalized to source < target, kept sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;

    static SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> edges) {
        if (n < 0) throw ValidationError(ErrorKind::bad_input, "negative vertex count");
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ValidationError(ErrorKind::bad_input, "edge endpoint out of range");
            if (u == v)
                throw ValidationError(ErrorKind::bad_input,
                                      "self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw ValidationError(ErrorKind::bad_input, "parallel edge");
        SimpleGraph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        return g;
    }

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const auto& [u, v] : edges_) {
            ++d[u];
            ++d[v];
        }
        return d;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// Incremental builder used by the gadget construction.
class GraphBuilder {
public:
    int add_vertex() { return n_++; }

    void add_edge(int u, int v) { edges_.push_back({u, v}); }

    // Appends a pendant path of `len` new vertices hanging off `at`.
    void add_tail(int at, int len) {
        int prev = at;
        for (int i = 0; i < len; ++i) {
            int t = add_vertex();
            add_edge(prev, t);
            prev = t;
        }
    }

    SimpleGraph build() const { return SimpleGraph::from_edges(n_, edges_); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

} // namespace fintop
