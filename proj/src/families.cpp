#include "regbound/families.hpp"

#include "regbound/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace regbound {

namespace {

constexpr std::array<std::array<int, 4>, 4> kGF4Mul{{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};

// GF(2)[x] / (x^3 + x + 1).
constexpr std::array<std::array<int, 8>, 8> kGF8Mul{{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 2, 4, 6, 3, 1, 7, 5},
    {0, 3, 6, 5, 7, 4, 1, 2},
    {0, 4, 3, 7, 6, 2, 5, 1},
    {0, 5, 1, 4, 2, 7, 3, 6},
    {0, 6, 7, 1, 5, 3, 2, 4},
    {0, 7, 5, 2, 1, 6, 4, 3},
}};

struct FamilyName {
    Family family;
    std::string_view name;
    std::size_t arity;
};

constexpr std::array<FamilyName, 9> kNames{{
    {Family::Cycle, "cycle", 1},
    {Family::Complete, "complete", 1},
    {Family::CompleteBipartite, "complete_bipartite", 1},
    {Family::Petersen, "petersen", 0},
    {Family::Kneser, "kneser", 2},
    {Family::Clebsch, "clebsch", 0},
    {Family::HoffmanSingleton, "hoffman_singleton", 0},
    {Family::IncidencePG2, "pg2", 1},
    {Family::IncidenceGQ, "gq", 1},
}};

const FamilyName& name_of(Family f) {
    for (const auto& n : kNames)
        if (n.family == f) return n;
    throw std::logic_error("unknown family");
}

long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

// All t-subsets of {0..n-1} as bitmasks, in lexicographic order.
std::vector<unsigned> subsets(int n, int t) {
    std::vector<unsigned> out;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
        unsigned mask = 0;
        for (int i : idx) mask |= 1u << i;
        out.push_back(mask);
        int i = t - 1;
        while (i >= 0 && idx[i] == n - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<std::array<int, 3>> pg2_points(const GaloisField& f) {
    const int q = f.order();
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
    pts.push_back({0, 0, 1});
    return pts;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q), prime_(q == 2 || q == 3 || q == 5 || q == 7) {
    if (!supported(q)) throw std::invalid_argument("GF(" + std::to_string(q) + ") not shipped");
}

bool GaloisField::supported(int q) { return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8; }

int GaloisField::add(int a, int b) const { return prime_ ? (a + b) % q_ : (a ^ b); }

int GaloisField::mul(int a, int b) const {
    if (prime_) return (a * b) % q_;
    return q_ == 4 ? kGF4Mul[a][b] : kGF8Mul[a][b];
}

void validate(const FamilySpec& spec) {
    const auto& n = name_of(spec.family);
    if (spec.params.size() != n.arity)
        throw std::invalid_argument(std::string(n.name) + " takes " + std::to_string(n.arity) + " parameter(s)");
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::Cycle:
            if (p[0] < 3) throw std::invalid_argument("cycle length must be >= 3");
            break;
        case Family::Complete:
            if (p[0] < 2) throw std::invalid_argument("complete graph needs n >= 2");
            break;
        case Family::CompleteBipartite:
            if (p[0] < 1) throw std::invalid_argument("complete bipartite graph needs k >= 1");
            break;
        case Family::Kneser:
            if (p[1] < 1 || p[0] < 2 * p[1] + 1 || p[0] > 30)
                throw std::invalid_argument("kneser:n,t needs t >= 1 and 2t+1 <= n <= 30");
            break;
        case Family::IncidencePG2:
            if (!GaloisField::supported(p[0])) throw std::invalid_argument("pg2:q needs q in {2,3,4,5,7,8}");
            break;
        case Family::IncidenceGQ:
            if (p[0] != 2) throw std::invalid_argument("gq:q is only shipped for q = 2");
            break;
        default:
            break;
    }
    if (spec.family == Family::Cycle || spec.family == Family::Complete || spec.family == Family::CompleteBipartite) {
        const long long v = spec.family == Family::CompleteBipartite ? 2LL * p[0] : p[0];
        if (v > 100000) throw SizeLimitError("family instance exceeds 100000 vertices");
    }
    if (spec.family == Family::Kneser && binomial(p[0], p[1]) > 100000)
        throw SizeLimitError("kneser instance exceeds 100000 vertices");
}

FamilySpec parse_family_spec(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    FamilySpec spec{};
    bool found = false;
    for (const auto& n : kNames) {
        if (n.name == name) {
            spec.family = n.family;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("unknown family '" + std::string(name) + "'");
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        for (;;) {
            const auto comma = rest.find(',');
            const std::string_view token = rest.substr(0, comma);
            int value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
                throw std::invalid_argument("bad family parameter '" + std::string(token) + "'");
            spec.params.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    std::string out(name_of(spec.family).name);
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        out += i == 0 ? ':' : ',';
        out += std::to_string(spec.params[i]);
    }
    return out;
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complete_bipartite_graph(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) edges.emplace_back(i, k + j);
    return Graph(2 * k, edges);
}

Graph kneser_graph(int n, int t) {
    const auto sets = subsets(n, t);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(sets.size()), edges);
}

Graph petersen_graph() { return kneser_graph(5, 2); }

// Folded 5-cube: 4-bit words adjacent at Hamming distance 1 or 4.
Graph clebsch_graph() {
    std::vector<Edge> edges;
    for (int x = 0; x < 16; ++x) {
        for (int bit = 0; bit < 4; ++bit)
            if (x < (x ^ (1 << bit))) edges.emplace_back(x, x ^ (1 << bit));
        if (x < (x ^ 15)) edges.emplace_back(x, x ^ 15);
    }
    return Graph(16, edges);
}

// Robertson's construction: pentagons P_h (vertex 5h + j, j ~ j+-1) and
// pentagrams Q_i (vertex 25 + 5i + j, j ~ j+-2), with P_{h,j} ~ Q_{i, hi+j}.
Graph hoffman_singleton_graph() {
    std::vector<Edge> edges;
    for (int h = 0; h < 5; ++h) {
        for (int j = 0; j < 5; ++j) {
            edges.emplace_back(5 * h + j, 5 * h + (j + 1) % 5);
            edges.emplace_back(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
        }
    }
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i < 5; ++i) edges.emplace_back(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
    return Graph(50, edges);
}

std::vector<std::vector<int>> pg2_lines(int q) {
    const GaloisField f(q);
    const auto pts = pg2_points(f);
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<int>> lines(n);
    for (int l = 0; l < n; ++l) {
        for (int p = 0; p < n; ++p) {
            int dot = 0;
            for (int c = 0; c < 3; ++c) dot = f.add(dot, f.mul(pts[l][c], pts[p][c]));
            if (dot == 0) lines[l].push_back(p);
        }
    }
    // Two distinct points share exactly one line.
    std::vector<int> shared(static_cast<std::size_t>(n) * n, 0);
    for (const auto& line : lines)
        for (int a : line)
            for (int b : line)
                if (a != b) ++shared[static_cast<std::size_t>(a) * n + b];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && shared[static_cast<std::size_t>(a) * n + b] != 1)
                throw std::logic_error("PG(2," + std::to_string(q) + ") incidence axiom violated");
    return lines;
}

Graph incidence_pg2(int q) {
    const auto lines = pg2_lines(q);
    const int n = static_cast<int>(lines.size());
    std::vector<Edge> edges;
    for (int l = 0; l < n; ++l)
        for (int p : lines[l]) edges.emplace_back(p, n + l);
    return Graph(2 * n, edges);
}

// GQ(2,2): points are the 15 pairs from {0..5}, lines the 15 perfect matchings.
Graph incidence_gq(int q) {
    if (q != 2) throw std::invalid_argument("gq:q is only shipped for q = 2");
    std::vector<std::pair<int, int>> duads;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) duads.emplace_back(a, b);
    std::vector<std::array<std::pair<int, int>, 3>> synthemes;
    for (int b = 1; b < 6; ++b) {
        std::vector<int> rest;
        for (int x = 1; x < 6; ++x)
            if (x != b) rest.push_back(x);
        for (int j = 1; j < 4; ++j) {
            std::vector<int> last;
            for (int i = 1; i < 4; ++i)
                if (i != j) last.push_back(rest[i]);
            synthemes.push_back({{{0, b}, {rest[0], rest[j]}, {last[0], last[1]}}});
        }
    }
    std::vector<Edge> edges;
    for (int s = 0; s < 15; ++s)
        for (const auto& pair : synthemes[s]) {
            const auto it = std::find(duads.begin(), duads.end(), pair);
            edges.emplace_back(static_cast<int>(it - duads.begin()), 15 + s);
        }
    return Graph(30, edges);
}

Graph build(const FamilySpec& spec) {
    validate(spec);
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::Cycle: return cycle_graph(p[0]);
        case Family::Complete: return complete_graph(p[0]);
        case Family::CompleteBipartite: return complete_bipartite_graph(p[0]);
        case Family::Petersen: return petersen_graph();
        case Family::Kneser: return kneser_graph(p[0], p[1]);
        case Family::Clebsch: return clebsch_graph();
        case Family::HoffmanSingleton: return hoffman_singleton_graph();
        case Family::IncidencePG2: return incidence_pg2(p[0]);
        case Family::IncidenceGQ: return incidence_gq(p[0]);
    }
    throw std::logic_error("unknown family");
}

namespace {

std::optional<int> kneser_girth(int n, int t) {
    if (t == 1 || n >= 3 * t) return 3;
    if (n == 2 * t + 1) return t == 2 ? 5 : 6;
    return 4;
}

}  // namespace

ExpectedProfile expected_profile(const FamilySpec& spec) {
    validate(spec);
    const auto& p = spec.params;
    ExpectedProfile out;
    switch (spec.family) {
        case Family::Cycle: {
            const int n = p[0];
            out = {n, 2, n, {}};
            for (int j = 0; 2 * j <= n; ++j) {
                const int mult = (j == 0 || 2 * j == n) ? 1 : 2;
                out.spectrum.push_back({2.0 * std::cos(2.0 * M_PI * j / n), mult});
            }
            break;
        }
        case Family::Complete: {
            const int n = p[0];
            out = {n, n - 1, n >= 3 ? std::optional<int>(3) : std::nullopt, {{double(n - 1), 1}, {-1.0, n - 1}}};
            break;
        }
        case Family::CompleteBipartite: {
            const int k = p[0];
            out = {2 * k, k, k >= 2 ? std::optional<int>(4) : std::nullopt, {{double(k), 1}}};
            if (k >= 2) out.spectrum.push_back({0.0, 2 * k - 2});
            out.spectrum.push_back({double(-k), 1});
            break;
        }
        case Family::Petersen:
            out = {10, 3, 5, {{3, 1}, {1, 5}, {-2, 4}}};
            break;
        case Family::HoffmanSingleton:
            out = {50, 7, 5, {{7, 1}, {2, 28}, {-3, 21}}};
            break;
        case Family::Clebsch:
            out = {16, 5, 4, {{5, 1}, {1, 10}, {-3, 5}}};
            break;
        case Family::Kneser: {
            const int n = p[0];
            const int t = p[1];
            out = {static_cast<int>(binomial(n, t)), static_cast<int>(binomial(n - t, t)), kneser_girth(n, t), {}};
            for (int j = 0; j <= t; ++j) {
                const double value = (j % 2 ? -1.0 : 1.0) * static_cast<double>(binomial(n - t - j, t - j));
                const int mult = static_cast<int>(binomial(n, j) - binomial(n, j - 1));
                out.spectrum.push_back({value, mult});
            }
            std::sort(out.spectrum.begin(), out.spectrum.end(),
                      [](const auto& a, const auto& b) { return a.value > b.value; });
            break;
        }
        case Family::IncidencePG2: {
            const int q = p[0];
            const double r = std::sqrt(static_cast<double>(q));
            out = {2 * (1 + q + q * q), q + 1, 6, {{double(q + 1), 1}, {r, q * q + q}, {-r, q * q + q}, {double(-(q + 1)), 1}}};
            break;
        }
        case Family::IncidenceGQ: {
            const int q = p[0];
            const double r = std::sqrt(2.0 * q);
            out = {2 * (1 + q + q * q + q * q * q), q + 1, 8, {{3, 1}, {r, 9}, {0, 10}, {-r, 9}, {-3, 1}}};
            break;
        }
    }
    return out;
}

std::vector<FamilySpec> table2_specs() {
    return {
        {Family::Cycle, {5}},
        {Family::Cycle, {7}},
        {Family::Complete, {4}},
        {Family::CompleteBipartite, {3}},
        {Family::IncidencePG2, {2}},
        {Family::IncidencePG2, {3}},
        {Family::IncidencePG2, {4}},
        {Family::IncidenceGQ, {2}},
        {Family::Petersen, {}},
        {Family::HoffmanSingleton, {}},
        {Family::Kneser, {7, 3}},
        {Family::Clebsch, {}},
    };
}

}  // namespace regbound
