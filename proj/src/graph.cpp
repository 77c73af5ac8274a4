#include "regbound/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace regbound {

Graph::Graph(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(vertex_count);
    for (auto [x, y] : edges) {
        if (x < 0 || y < 0 || x >= vertex_count || y >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(x) + "-" +
                                        std::to_string(y));
        if (x == y) throw std::invalid_argument("loop at vertex " + std::to_string(x));
        adj_[x].push_back(y);
        adj_[y].push_back(x);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        edge_count_ += row.size();
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(Vertex x, Vertex y) const {
    return std::binary_search(adj_[x].begin(), adj_[x].end(), y);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex x = 0; x < vertex_count(); ++x)
        for (Vertex y : adj_[x])
            if (x < y) out.emplace_back(x, y);
    return out;
}

}  // namespace regbound
