#pragma once

// Deterministic constructors for the extremal expander families with compact
// constructions, and their closed-form profiles.

#include "regbound/graph.hpp"
#include "regbound/spectral.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace regbound {

enum class Family {
    Cycle,              // cycle:n
    Complete,           // complete:n
    CompleteBipartite,  // complete_bipartite:k
    Petersen,           // petersen
    Kneser,             // kneser:n,t
    Clebsch,            // clebsch
    HoffmanSingleton,   // hoffman_singleton
    IncidencePG2,       // pg2:q
    IncidenceGQ,        // gq:q
};

struct FamilySpec {
    Family family;
    std::vector<int> params;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Parses "name" or "name:p1,p2" and validates parameter ranges.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
void validate(const FamilySpec& spec);

Graph build(const FamilySpec& spec);

struct ExpectedProfile {
    int v = 0;
    int k = 0;
    std::optional<int> girth;
    std::vector<SpectrumEntry> spectrum;  // distinct eigenvalues, descending
};

ExpectedProfile expected_profile(const FamilySpec& spec);

// The generated rows of the extremal expander table, in display order.
std::vector<FamilySpec> table2_specs();

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int k);
Graph kneser_graph(int n, int t);
Graph petersen_graph();
Graph clebsch_graph();
Graph hoffman_singleton_graph();
Graph incidence_pg2(int q);
Graph incidence_gq(int q);

// Arithmetic in GF(q) for the field orders shipped: primes 2, 3, 5, 7 and 4, 8.
class GaloisField {
public:
    explicit GaloisField(int q);
    static bool supported(int q);
    int order() const { return q_; }
    int add(int a, int b) const;
    int mul(int a, int b) const;

private:
    int q_;
    bool prime_;
};

// Lines of PG(2,q) as point-index lists; points and lines are the
// normalized nonzero vectors of GF(q)^3 in lexicographic order.
std::vector<std::vector<int>> pg2_lines(int q);

}  // namespace regbound
