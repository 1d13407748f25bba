#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclograph/equiv.hpp"
#include "cyclograph/matrix.hpp"
#include "cyclograph/poly.hpp"

namespace cyclograph {

inline constexpr int kMaxSearchVertices = 16;

// Per-charge column rule: which norm levels the entries may use (the level
// set L_k), plus an optional total-norm bound b (the bounded column sets).
struct ChargeRule {
    std::int64_t charge = 0;
    std::vector<std::int64_t> norm_levels;      // e.g. {1, 2}
    std::optional<std::int64_t> norm_bound;     // sum of entry norms <= bound
};

enum class TrianglePolicy : std::uint8_t { Allow, ForbidAll, ForbidExceptDoubleCharged, ForbidCharged };

const char* triangle_policy_name(TrianglePolicy p);
TrianglePolicy parse_triangle_policy(std::string_view s);

struct GrowConfig {
    Ring ring = Ring::Gaussian;
    std::vector<ChargeRule> rules;
    int max_vertices = kMaxSearchVertices;
    std::optional<int> degree_cap = 4;  // applies once the supermatrix has >= degree_cap_from vertices
    int degree_cap_from = 7;
    bool degree_includes_charge = true;
    TrianglePolicy triangle_policy = TrianglePolicy::Allow;
    std::vector<std::string> excluded_patterns;  // catalog names (wildcard or concrete)
    bool require_complex_entry = false;
    bool uncharged_only = false;
    Flavor dedup_flavor = Flavor::Full;

    std::string to_text() const;
    static GrowConfig from_text(std::string_view text);
    std::uint32_t hash() const;
    void validate() const;
};

struct MinimalEntry {
    std::string key_bytes;  // canonical representative
    MahlerResult mahler;
    int round_found = 0;
};

// Frontier Sigma_j plus the accumulated minimal non-cyclotomic sets T_j.
struct SearchState {
    GrowConfig config;
    int round = 0;                                          // vertex count of frontier matrices
    std::map<std::string, HermitianMatrix> frontier;        // canonical key bytes -> representative
    std::map<int, std::map<std::string, MinimalEntry>> minimal;  // j -> T_j
    std::uint64_t extensions_tested = 0;
    std::uint64_t cyclotomic_found = 0;
};

// One representative per unit-scaling class of nonzero columns with entries
// drawn from the alphabet, total entry norm <= bound when given. The
// representative's first nonzero entry is minimal in its unit orbit.
std::vector<std::vector<RingElement>> generate_columns(Ring ring, int n,
                                                       const std::vector<RingElement>& alphabet,
                                                       std::optional<std::int64_t> bound);

// All additions of one vertex to A permitted by the config.
std::vector<VertexAddition> filtered_additions(const HermitianMatrix& A, const GrowConfig& config);

// Connected, not cyclotomic, every (n-1)-vertex principal submatrix
// cyclotomic. Interlacing makes the single-deletion check sufficient: a
// non-cyclotomic eigenvalue of any smaller subgraph survives into some
// (n-1)-vertex principal submatrix.
bool is_minimal_noncyclotomic(const HermitianMatrix& A);

void grow_round(SearchState& state, int threads = 1);

struct ReportRow {
    int j = 0;
    std::uint64_t count = 0;
    bool count_is_exact = true;
    bool has_min = false;
    double min_mahler = 0.0;
    std::string witness_key;
    std::string witness_file;
};

struct SearchReport {
    std::string name;
    std::vector<ReportRow> rows;
    std::string to_csv() const;
    std::string to_table() const;
};

SearchReport run_search(SearchState& state, int stop_at_vertices, int threads,
                        const std::string& witness_dir = "", const std::string& checkpoint_path = "",
                        int checkpoint_every = 0);

void write_checkpoint(const SearchState& state, const std::string& path);
SearchState read_checkpoint(const std::string& path);

// Registered searches: name -> config + seeds (from the catalog).
struct RegisteredSearch {
    std::string name;
    GrowConfig config;
    int default_stop = 10;
};
std::vector<std::string> registered_search_names();
RegisteredSearch make_registered_search(const std::string& name);
SearchState make_state(const RegisteredSearch& search);
SearchState make_state(const GrowConfig& config, const std::vector<HermitianMatrix>& seeds);

// Diagnostic: maximal number of vertices in a chordless path or cycle.
struct PathRankResult {
    int longest_chordless_path = 0;   // vertices
    int longest_chordless_cycle = 0;  // vertices, 0 if acyclic
};
PathRankResult path_rank(const HermitianMatrix& A);

}  // namespace cyclograph
