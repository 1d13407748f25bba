#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclograph/matrix.hpp"

namespace cyclograph {

// Strong: switchings + permutations + Galois conjugation.
// Full: additionally global negation.
enum class Flavor : std::uint8_t { Strong, Full };

const char* flavor_name(Flavor f);
Flavor parse_flavor(std::string_view s);

// Identifies an orbit: bytes serialize the minimal representative matrix
// ("<ring> <n> <row-major tokens>"), stable across versions.
struct CanonicalKey {
    Flavor flavor = Flavor::Full;
    std::string bytes;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

// mu-switching at v: conjugation by diag(1,..,mu,..,1). Spectrum unchanged.
HermitianMatrix switch_at(const HermitianMatrix& A, int v, const RingElement& mu);

HermitianMatrix galois_conjugate(const HermitianMatrix& A);  // entrywise conj
HermitianMatrix negate(const HermitianMatrix& A);            // all entries negated

// Distinguished representative of {u*e : u unit}: lexicographically
// greatest (a, b). Unit entries normalize to 1.
RingElement unit_orbit_rep(const RingElement& e);

CanonicalKey canonical_key(const HermitianMatrix& A, Flavor flavor);

HermitianMatrix matrix_from_key(const CanonicalKey& key);

bool are_equivalent(const HermitianMatrix& A, const HermitianMatrix& B, Flavor flavor);

// ---- wildcard subgraph patterns ----

struct PatternCharge {
    enum Kind { Any, Exact } kind = Any;
    std::int64_t value = 0;
};

struct PatternEdge {
    enum Kind { Zero, AnyNonzero, NormEquals } kind = Zero;
    std::int64_t norm = 0;
};

// Constraint graph with wildcard cells: charges and edges carry
// constraints instead of values. Exact edges are matched by norm, which
// determines the unit orbit for every norm the catalog patterns use.
class GraphPattern {
  public:
    GraphPattern(int n, std::vector<PatternCharge> charges, std::vector<PatternEdge> edges_upper);
    static GraphPattern from_matrix(const HermitianMatrix& A);

    int size() const { return n_; }
    const PatternCharge& charge(int v) const { return charges_[v]; }
    const PatternEdge& edge(int i, int j) const;  // i != j

    GraphPattern negated() const;

  private:
    int n_;
    std::vector<PatternCharge> charges_;
    std::vector<PatternEdge> edges_;  // upper triangle, row-major
};

// Does some induced principal submatrix of A match the pattern (up to the
// flavor's group)? Wildcards absorb switching and Galois action; Full flavor
// additionally tries the negated pattern.
bool contains_induced_equivalent(const HermitianMatrix& A, const GraphPattern& pattern, Flavor flavor);

// Concrete pattern: canonical-key comparison over all induced submatrices.
bool contains_induced_equivalent(const HermitianMatrix& A, const HermitianMatrix& pattern, Flavor flavor);

}  // namespace cyclograph
