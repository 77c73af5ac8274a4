#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace regbound {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..v-1, stored as sorted adjacency lists.
// Immutable after construction.
class Graph {
public:
    Graph() = default;
    // Rejects loops and out-of-range endpoints; duplicate edges collapse.
    Graph(int vertex_count, std::span<const Edge> edges);
    Graph(int vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    int degree(Vertex x) const { return static_cast<int>(adj_[x].size()); }
    std::span<const Vertex> neighbors(Vertex x) const { return adj_[x]; }
    bool adjacent(Vertex x, Vertex y) const;
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

// Row-major v x v boolean pattern.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}
    int size() const { return n_; }
    bool operator()(int r, int c) const { return bits_[static_cast<std::size_t>(r) * n_ + c] != 0; }
    void set(int r, int c, bool value) { bits_[static_cast<std::size_t>(r) * n_ + c] = value ? 1 : 0; }
    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    int n_ = 0;
    std::vector<unsigned char> bits_;
};

}  // namespace regbound
