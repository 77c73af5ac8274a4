#pragma once

// Combinatorial invariants of a Graph.

#include "regbound/graph.hpp"
#include "regbound/scalar.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace regbound {

// Common degree, or nullopt if degrees differ (or the graph is empty).
std::optional<int> regularity(const Graph& g);

bool is_connected(const Graph& g);

// Shortest cycle length; nullopt for forests.
std::optional<int> girth_bfs(const Graph& g);

// All-pairs shortest path lengths; -1 marks unreachable pairs.
class DistanceTable {
public:
    explicit DistanceTable(const Graph& g);
    int operator()(Vertex x, Vertex y) const { return dist_[static_cast<std::size_t>(x) * n_ + y]; }
    int size() const { return n_; }
    bool connected() const { return connected_; }
    int max_distance() const { return max_; }

private:
    int n_;
    std::vector<int> dist_;
    bool connected_ = true;
    int max_ = 0;
};

// A_i: (x,y) set iff d(x,y) = i. Requires a connected graph.
BoolMatrix distance_matrix(const Graph& g, int i);

// Requires a connected graph.
int diameter(const Graph& g);

inline constexpr int kMaxEnumeratedPathLength = 12;

// Number of walks u = u_0 ~ u_1 ~ ... ~ u_i = w with u_{j-1} != u_{j+1},
// counted by explicit enumeration.
std::uint64_t irreducible_path_count(const Graph& g, Vertex u, Vertex w, int length);

// b_0..b_{D-1}, c_1..c_D, a_0..a_D; stored 0-based, so c[0] is c_1.
struct IntersectionArray {
    std::vector<int> b;
    std::vector<int> c;
    std::vector<int> a;

    int diameter() const { return static_cast<int>(b.size()); }
    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// Builds an array from b and c, deriving a_i = k - b_i - c_i. Validates
// b_0 = k, c_1 = 1 and nonnegativity.
IntersectionArray make_intersection_array(std::vector<int> b, std::vector<int> c);

// Checks distance-regularity by definition over every ordered pair.
// Requires a connected regular graph.
std::optional<IntersectionArray> is_distance_regular(const Graph& g);

inline constexpr int kMaxExpansionVertices = 24;

struct ExpansionResult {
    Rational h;
    std::vector<Vertex> witness;
};

// Exact edge expansion min |dS|/|S| over nonempty S with |S| <= v/2.
ExpansionResult edge_expansion(const Graph& g);

// |dS| for an arbitrary subset, used to re-verify witnesses.
std::size_t boundary_size(const Graph& g, const std::vector<Vertex>& subset);

}  // namespace regbound
