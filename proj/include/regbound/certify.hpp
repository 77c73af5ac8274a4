#pragma once

// End-to-end certification of a graph as an extremal expander.

#include "regbound/graph.hpp"
#include "regbound/lpbound.hpp"
#include "regbound/metrics.hpp"
#include "regbound/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regbound {

// 1 + k * sum_{j<d} (k-1)^j. Throws on 64-bit overflow.
long long moore_bound(int k, int d);

// Lower bound on the order of a k-regular graph of girth 2e+1; same sum.
long long tutte_bound(int k, int e);

// b = (k, k-1, ..., k-1), c = (1, ..., 1, c), both of length d.
IntersectionArray moore_polygon_array(int k, int d, int c);

enum class Verdict { Certified, NotApplicable, Failed };
const char* to_string(Verdict verdict);

struct CertificationReport {
    int v = 0;
    std::optional<int> k;
    std::optional<int> girth;  // nullopt: acyclic or not computed
    std::optional<int> diameter;
    std::optional<int> d;
    std::optional<Spectrum> spectrum;
    std::optional<long long> moore_bound;
    std::optional<long long> tutte_bound;  // girth odd only
    bool is_moore = false;
    std::optional<int> moore_polygon_c;
    std::optional<IntersectionArray> distance_regular;
    std::optional<CertificateSummary> lp;
    bool tight = false;
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;
    // Structural facts that contradict what the girth/eigenvalue count implies.
    std::vector<std::string> discrepancies;
};

struct CertifyOptions {
    std::optional<double> cluster_tol;
    double slack_tol = kDefaultSlackTol;
};

CertificationReport certify(const Graph& g, const CertifyOptions& options = {});

}  // namespace regbound
