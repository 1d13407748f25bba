#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclograph/equiv.hpp"
#include "cyclograph/matrix.hpp"

namespace cyclograph {
namespace catalog {

// Concrete named graphs: sporadics (S1..S16 with dagger variants), the
// infinite families (T2k, Ti2k, Tw2k, C2k, C2kpp, C2kpm, C2k1 with the k
// parameter), seeds and excluded subgraphs. Throws UsageError for unknown
// names or out-of-range k.
HermitianMatrix build_graph(const std::string& name, std::optional<int> k = std::nullopt);

// Wildcard patterns (starred charges/edges): X1, X2, X3, X5, X8, Y1, Y9, Y10.
GraphPattern build_pattern(const std::string& name);
bool has_pattern(const std::string& name);

std::vector<std::string> sporadic_names();

struct FamilyInfo {
    std::string name;
    int k_min;
};
std::vector<FamilyInfo> families();

// Rings over which the named maximal graph is maximal.
std::vector<Ring> maximal_rings(const std::string& name);

std::vector<std::string> type1_names();  // non-cyclotomic excluded subgraphs
std::vector<std::string> type2_names();  // cyclotomic with finitely many supergraphs

// True iff no single-vertex addition with charge in {0,+-1} and column
// entries of norm <= column_norm_cap yields a connected cyclotomic
// supermatrix. Complete because a cyclotomic supermatrix has all vertex
// degrees at most 4, which bounds usable columns.
bool verify_maximal(const HermitianMatrix& A, std::int64_t column_norm_cap);

// Exact seed lists for the registered searches.
std::vector<HermitianMatrix> list_seeds(const std::string& search_name);
std::vector<std::string> seeded_search_names();

}  // namespace catalog
}  // namespace cyclograph
