#include "regbound/metrics.hpp"

#include "regbound/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <string>

namespace regbound {

std::optional<int> regularity(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    const int k = g.degree(0);
    for (Vertex x = 1; x < g.vertex_count(); ++x)
        if (g.degree(x) != k) return std::nullopt;
    return k;
}

namespace {

// BFS distances from root; -1 for unreachable.
void bfs(const Graph& g, Vertex root, std::vector<int>& dist, std::vector<Vertex>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[root] = 0;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
}

}  // namespace

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<int> dist(n);
    std::vector<Vertex> queue;
    bfs(g, 0, dist, queue);
    return static_cast<int>(queue.size()) == n;
}

std::optional<int> girth_bfs(const Graph& g) {
    const int n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[root] = 0;
        parent[root] = -1;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            // No shorter cycle through root can be found beyond this depth.
            if (best && 2 * dist[x] >= *best) break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    const int len = dist[x] + dist[y] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.vertex_count()), dist_(static_cast<std::size_t>(n_) * n_) {
    std::vector<int> row(n_);
    std::vector<Vertex> queue;
    for (Vertex x = 0; x < n_; ++x) {
        bfs(g, x, row, queue);
        for (Vertex y = 0; y < n_; ++y) {
            dist_[static_cast<std::size_t>(x) * n_ + y] = row[y];
            if (row[y] < 0) connected_ = false;
            max_ = std::max(max_, row[y]);
        }
    }
    if (n_ == 0) connected_ = false;
}

BoolMatrix distance_matrix(const Graph& g, int i) {
    DistanceTable table(g);
    if (!table.connected()) throw PreconditionError("distance_matrix: graph is not connected");
    const int n = g.vertex_count();
    BoolMatrix out(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) out.set(x, y, table(x, y) == i);
    return out;
}

int diameter(const Graph& g) {
    DistanceTable table(g);
    if (!table.connected()) throw PreconditionError("diameter: graph is not connected");
    return table.max_distance();
}

namespace {

std::uint64_t count_walks(const Graph& g, Vertex prev, Vertex cur, Vertex target, int remaining) {
    if (remaining == 0) return cur == target ? 1 : 0;
    std::uint64_t total = 0;
    for (Vertex next : g.neighbors(cur)) {
        if (next == prev) continue;
        total += count_walks(g, cur, next, target, remaining - 1);
    }
    return total;
}

}  // namespace

std::uint64_t irreducible_path_count(const Graph& g, Vertex u, Vertex w, int length) {
    if (length < 0) throw std::invalid_argument("negative path length");
    if (length > kMaxEnumeratedPathLength)
        throw SizeLimitError("irreducible path enumeration capped at length 12");
    if (u < 0 || w < 0 || u >= g.vertex_count() || w >= g.vertex_count())
        throw std::invalid_argument("vertex out of range");
    return count_walks(g, -1, u, w, length);
}

IntersectionArray make_intersection_array(std::vector<int> b, std::vector<int> c) {
    if (b.empty() || b.size() != c.size()) throw std::invalid_argument("intersection array needs |b| = |c| >= 1");
    if (c[0] != 1) throw std::invalid_argument("intersection array requires c_1 = 1");
    const int k = b[0];
    IntersectionArray arr;
    arr.a.push_back(0);
    for (std::size_t i = 1; i <= b.size(); ++i) {
        const int bi = i < b.size() ? b[i] : 0;
        const int ai = k - bi - c[i - 1];
        if (bi < 0 || c[i - 1] < 0 || ai < 0) throw std::invalid_argument("intersection array has negative entry");
        arr.a.push_back(ai);
    }
    arr.b = std::move(b);
    arr.c = std::move(c);
    return arr;
}

std::optional<IntersectionArray> is_distance_regular(const Graph& g) {
    const auto k = regularity(g);
    if (!k) throw PreconditionError("is_distance_regular: graph is not regular");
    DistanceTable table(g);
    if (!table.connected()) throw PreconditionError("is_distance_regular: graph is not connected");
    const int n = g.vertex_count();
    const int diam = table.max_distance();

    // counts[l] = (c_l, a_l, b_l) observed for the first pair at distance l.
    std::vector<std::array<int, 3>> counts(diam + 1, {-1, -1, -1});
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            const int l = table(x, y);
            std::array<int, 3> seen{0, 0, 0};
            for (Vertex z : g.neighbors(x)) {
                const int dz = table(z, y);
                seen[dz - l + 1] += 1;
            }
            if (counts[l][0] < 0) {
                counts[l] = seen;
            } else if (counts[l] != seen) {
                return std::nullopt;
            }
        }
    }
    std::vector<int> b, c;
    for (int l = 0; l < diam; ++l) b.push_back(counts[l][2]);
    for (int l = 1; l <= diam; ++l) c.push_back(counts[l][0]);
    if (diam == 0) return IntersectionArray{{}, {}, {0}};
    return make_intersection_array(std::move(b), std::move(c));
}

ExpansionResult edge_expansion(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxExpansionVertices)
        throw SizeLimitError("edge_expansion: brute force capped at 24 vertices");
    if (n < 2) throw PreconditionError("edge_expansion: needs at least 2 vertices");

    std::vector<std::uint32_t> nbr(n, 0);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y : g.neighbors(x)) nbr[x] |= 1u << y;

    // Gray-code walk: one vertex toggles per step, boundary updated in O(1).
    std::uint32_t set = 0;
    long long boundary = 0;
    int size = 0;
    long long best_num = -1;
    long long best_den = 1;
    std::uint32_t best_set = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const int x = std::countr_zero(step);
        const std::uint32_t bit = 1u << x;
        const int inside = std::popcount(nbr[x] & set);
        const int deg = g.degree(x);
        if (set & bit) {
            set &= ~bit;
            boundary += 2 * inside - deg;
            --size;
        } else {
            set |= bit;
            boundary += deg - 2 * inside;
            ++size;
        }
        if (size == 0 || 2 * size > n) continue;
        if (best_num < 0 || boundary * best_den < best_num * size) {
            best_num = boundary;
            best_den = size;
            best_set = set;
        }
    }
    ExpansionResult out{Rational(best_num, best_den), {}};
    for (Vertex x = 0; x < n; ++x)
        if (best_set & (1u << x)) out.witness.push_back(x);
    return out;
}

std::size_t boundary_size(const Graph& g, const std::vector<Vertex>& subset) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex x : subset) in.at(x) = 1;
    std::size_t count = 0;
    for (Vertex x : subset)
        for (Vertex y : g.neighbors(x))
            if (!in[y]) ++count;
    return count;
}

}  // namespace regbound
