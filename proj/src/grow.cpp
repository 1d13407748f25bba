#include "cyclograph/grow.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "cyclograph/catalog.hpp"

namespace cyclograph {

const char* triangle_policy_name(TrianglePolicy p) {
    switch (p) {
        case TrianglePolicy::Allow: return "allow";
        case TrianglePolicy::ForbidAll: return "forbid-all";
        case TrianglePolicy::ForbidExceptDoubleCharged: return "forbid-except-double-charged";
        case TrianglePolicy::ForbidCharged: return "forbid-charged";
    }
    return "?";
}

TrianglePolicy parse_triangle_policy(std::string_view s) {
    if (s == "allow") return TrianglePolicy::Allow;
    if (s == "forbid-all") return TrianglePolicy::ForbidAll;
    if (s == "forbid-except-double-charged") return TrianglePolicy::ForbidExceptDoubleCharged;
    if (s == "forbid-charged") return TrianglePolicy::ForbidCharged;
    throw UsageError("unknown triangle policy: " + std::string(s));
}

// ---------------- config text round trip ----------------

std::string GrowConfig::to_text() const {
    std::ostringstream os;
    os << "ring = " << ring_name(ring) << "\n";
    os << "flavor = " << flavor_name(dedup_flavor) << "\n";
    os << "max_vertices = " << max_vertices << "\n";
    os << "degree_cap = " << (degree_cap ? std::to_string(*degree_cap) : "none") << "\n";
    os << "degree_cap_from = " << degree_cap_from << "\n";
    os << "degree_includes_charge = " << (degree_includes_charge ? "true" : "false") << "\n";
    os << "triangle_policy = " << triangle_policy_name(triangle_policy) << "\n";
    os << "require_complex_entry = " << (require_complex_entry ? "true" : "false") << "\n";
    os << "uncharged_only = " << (uncharged_only ? "true" : "false") << "\n";
    if (!excluded_patterns.empty()) {
        os << "exclude =";
        for (const auto& p : excluded_patterns) os << ' ' << p;
        os << "\n";
    }
    for (const auto& r : rules) {
        os << "rule = " << r.charge << " :";
        for (auto lvl : r.norm_levels) os << " L" << lvl;
        os << " : " << (r.norm_bound ? std::to_string(*r.norm_bound) : "none") << "\n";
    }
    return os.str();
}

GrowConfig GrowConfig::from_text(std::string_view text) {
    GrowConfig cfg;
    cfg.rules.clear();
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key, eq;
        if (!(ls >> key)) continue;
        if (!(ls >> eq) || eq != "=") throw UsageError("config: expected 'key = value' in: " + line);
        if (key == "ring") {
            std::string v;
            ls >> v;
            cfg.ring = parse_ring(v);
        } else if (key == "flavor") {
            std::string v;
            ls >> v;
            cfg.dedup_flavor = parse_flavor(v);
        } else if (key == "max_vertices") {
            ls >> cfg.max_vertices;
        } else if (key == "degree_cap") {
            std::string v;
            ls >> v;
            if (v == "none")
                cfg.degree_cap.reset();
            else
                cfg.degree_cap = std::stoi(v);
        } else if (key == "degree_cap_from") {
            ls >> cfg.degree_cap_from;
        } else if (key == "degree_includes_charge") {
            std::string v;
            ls >> v;
            cfg.degree_includes_charge = (v == "true");
        } else if (key == "triangle_policy") {
            std::string v;
            ls >> v;
            cfg.triangle_policy = parse_triangle_policy(v);
        } else if (key == "require_complex_entry") {
            std::string v;
            ls >> v;
            cfg.require_complex_entry = (v == "true");
        } else if (key == "uncharged_only") {
            std::string v;
            ls >> v;
            cfg.uncharged_only = (v == "true");
        } else if (key == "exclude") {
            std::string v;
            while (ls >> v) cfg.excluded_patterns.push_back(v);
        } else if (key == "rule") {
            ChargeRule rule;
            std::string tok;
            ls >> rule.charge;
            ls >> tok;  // ':'
            if (tok != ":") throw UsageError("config: malformed rule line: " + line);
            while (ls >> tok && tok != ":") {
                if (tok.size() < 2 || tok[0] != 'L') throw UsageError("config: bad norm level: " + tok);
                rule.norm_levels.push_back(std::stoll(tok.substr(1)));
            }
            if (tok != ":") throw UsageError("config: malformed rule line: " + line);
            ls >> tok;
            if (tok != "none") rule.norm_bound = std::stoll(tok);
            cfg.rules.push_back(std::move(rule));
        } else {
            throw UsageError("config: unknown key: " + key);
        }
    }
    cfg.validate();
    return cfg;
}

void GrowConfig::validate() const {
    if (max_vertices < 1 || max_vertices > kMaxSearchVertices)
        throw CapacityError("config: max_vertices outside 1.." + std::to_string(kMaxSearchVertices));
    if (rules.empty()) throw UsageError("config: needs at least one charge rule");
    for (const auto& r : rules) {
        if (std::abs(r.charge) > 2) throw UsageError("config: charges limited to -2..2");
        if (uncharged_only && r.charge != 0) throw UsageError("config: uncharged_only forbids charged rules");
    }
}

std::uint32_t GrowConfig::hash() const {
    std::uint32_t h = 2166136261u;
    for (char c : to_text()) {
        h ^= static_cast<unsigned char>(c);
        h *= 16777619u;
    }
    return h;
}

// ---------------- column generation ----------------

std::vector<std::vector<RingElement>> generate_columns(Ring ring, int n,
                                                       const std::vector<RingElement>& alphabet,
                                                       std::optional<std::int64_t> bound) {
    if (n < 1) throw UsageError("generate_columns: n must be positive");
    std::vector<RingElement> alpha;
    for (const auto& e : alphabet)
        if (!e.is_zero()) alpha.push_back(e);
    std::sort(alpha.begin(), alpha.end(), elem_less);
    alpha.erase(std::unique(alpha.begin(), alpha.end()), alpha.end());
    // an element may lead a representative column iff it is minimal in its unit orbit
    std::vector<char> leadable(alpha.size(), 1);
    for (size_t i = 0; i < alpha.size(); ++i) {
        for (const auto& u : units(ring)) {
            if (elem_less(mul(u, alpha[i]), alpha[i])) {
                leadable[i] = 0;
                break;
            }
        }
    }
    std::vector<std::vector<RingElement>> out;
    std::vector<RingElement> col(n, make_elem(ring, 0, 0));
    const std::int64_t limit = bound.value_or(-1);
    auto rec = [&](auto&& self, int pos, bool lead_placed, std::int64_t used) -> void {
        if (pos == n) {
            if (lead_placed) out.push_back(col);
            return;
        }
        col[pos] = make_elem(ring, 0, 0);
        self(self, pos + 1, lead_placed, used);
        for (size_t i = 0; i < alpha.size(); ++i) {
            if (!lead_placed && !leadable[i]) continue;
            const std::int64_t w = norm_of(alpha[i]);
            if (limit >= 0 && used + w > limit) continue;
            col[pos] = alpha[i];
            self(self, pos + 1, true, used + w);
        }
        col[pos] = make_elem(ring, 0, 0);
    };
    rec(rec, 0, false, 0);
    return out;
}

// ---------------- filters ----------------

namespace {

struct CompiledExclusions {
    std::vector<GraphPattern> patterns;
    std::vector<HermitianMatrix> concrete;
};

CompiledExclusions compile_exclusions(const GrowConfig& cfg) {
    CompiledExclusions out;
    for (const auto& name : cfg.excluded_patterns) {
        if (catalog::has_pattern(name))
            out.patterns.push_back(catalog::build_pattern(name));
        else
            out.concrete.push_back(as_ring(catalog::build_graph(name), cfg.ring));
    }
    return out;
}

bool triangle_allowed(const HermitianMatrix& A, const std::vector<RingElement>& col, std::int64_t x,
                      TrianglePolicy policy) {
    if (policy == TrianglePolicy::Allow) return true;
    const int n = A.size();
    for (int u = 0; u < n; ++u) {
        if (col[u].is_zero()) continue;
        for (int v = u + 1; v < n; ++v) {
            if (col[v].is_zero() || A.at(u, v).is_zero()) continue;
            // new triangle (u, v, added vertex)
            switch (policy) {
                case TrianglePolicy::ForbidAll: return false;
                case TrianglePolicy::ForbidCharged:
                    if (A.charge(u) != 0 || A.charge(v) != 0 || x != 0) return false;
                    break;
                case TrianglePolicy::ForbidExceptDoubleCharged: {
                    const int charges = (A.charge(u) != 0) + (A.charge(v) != 0) + (x != 0);
                    if (charges != 2) return false;
                    break;
                }
                case TrianglePolicy::Allow: break;
            }
        }
    }
    return true;
}

bool column_filters_pass(const HermitianMatrix& A, const std::vector<RingElement>& col, std::int64_t x,
                         const GrowConfig& cfg, const std::vector<std::int64_t>& degs,
                         bool degree_cap_active) {
    const int n = A.size();
    if (degree_cap_active) {
        const std::int64_t cap = *cfg.degree_cap;
        std::int64_t newdeg = cfg.degree_includes_charge ? x * x : 0;
        for (int v = 0; v < n; ++v) {
            const std::int64_t w = norm_of(col[v]);
            if (w == 0) continue;
            newdeg += w;
            if (degs[v] + w > cap) return false;
        }
        if (newdeg > cap) return false;
    }
    if (cfg.require_complex_entry) {
        bool complex_found = false;
        for (const auto& e : col) complex_found |= (e.b != 0);
        if (!complex_found) return false;
    }
    return triangle_allowed(A, col, x, cfg.triangle_policy);
}

}  // namespace

std::vector<VertexAddition> filtered_additions(const HermitianMatrix& A, const GrowConfig& config) {
    config.validate();
    const int n = A.size();
    const bool cap_active = config.degree_cap && (n + 1 >= config.degree_cap_from);
    std::vector<std::int64_t> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = degree(A, v, config.degree_includes_charge);
    const CompiledExclusions excl = compile_exclusions(config);
    std::vector<VertexAddition> out;
    for (const auto& rule : config.rules) {
        std::vector<RingElement> alphabet;
        for (auto lvl : rule.norm_levels)
            for (const auto& e : elements_of_norm(config.ring, lvl)) alphabet.push_back(e);
        std::optional<std::int64_t> bound = rule.norm_bound;
        if (cap_active) {
            const std::int64_t cap_budget =
                *config.degree_cap - (config.degree_includes_charge ? rule.charge * rule.charge : 0);
            bound = bound ? std::min(*bound, cap_budget) : cap_budget;
        }
        for (auto& col : generate_columns(config.ring, n, alphabet, bound)) {
            if (!column_filters_pass(A, col, rule.charge, config, degs, cap_active)) continue;
            VertexAddition add{std::move(col), rule.charge};
            if (!excl.patterns.empty() || !excl.concrete.empty()) {
                HermitianMatrix B = extend(A, add);
                bool hit = false;
                for (const auto& p : excl.patterns)
                    if (contains_induced_equivalent(B, p, config.dedup_flavor)) {
                        hit = true;
                        break;
                    }
                for (const auto& m : excl.concrete) {
                    if (hit) break;
                    if (contains_induced_equivalent(B, m, config.dedup_flavor)) hit = true;
                }
                if (hit) continue;
            }
            out.push_back(std::move(add));
        }
    }
    return out;
}

bool is_minimal_noncyclotomic(const HermitianMatrix& A) {
    if (!is_connected(A)) return false;
    if (is_cyclotomic_matrix(A)) return false;
    const int n = A.size();
    for (int v = 0; v < n; ++v) {
        if (n == 1) break;
        std::vector<int> keep;
        keep.reserve(n - 1);
        for (int u = 0; u < n; ++u)
            if (u != v) keep.push_back(u);
        if (!is_cyclotomic_matrix(principal_submatrix(A, keep))) return false;
    }
    return true;
}

// ---------------- growing rounds ----------------

void grow_round(SearchState& state, int threads) {
    if (state.frontier.empty()) {
        ++state.round;
        return;
    }
    const GrowConfig& cfg = state.config;
    cfg.validate();
    if (state.round >= cfg.max_vertices)
        throw CapacityError("grow_round: frontier already at max_vertices");
    std::vector<const HermitianMatrix*> mats;
    mats.reserve(state.frontier.size());
    for (const auto& [k, m] : state.frontier) mats.push_back(&m);

    struct Emit {
        bool is_minimal;
        std::string key;
    };
    std::vector<std::vector<Emit>> buckets(mats.size());
    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> tested{0};
    const int nworkers = std::max(1, threads);
    auto worker = [&]() {
        while (true) {
            const size_t idx = next.fetch_add(1);
            if (idx >= mats.size()) break;
            const HermitianMatrix& A = *mats[idx];
            std::vector<Emit> local;
            for (const auto& add : filtered_additions(A, cfg)) {
                HermitianMatrix B = extend(A, add);
                tested.fetch_add(1, std::memory_order_relaxed);
                if (!is_connected(B)) continue;
                if (is_cyclotomic_matrix(B)) {
                    local.push_back({false, canonical_key(B, cfg.dedup_flavor).bytes});
                } else if (is_minimal_noncyclotomic(B)) {
                    local.push_back({true, canonical_key(B, cfg.dedup_flavor).bytes});
                }
            }
            buckets[idx] = std::move(local);
        }
    };
    if (nworkers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    state.extensions_tested += tested.load();

    const int j = state.round + 1;
    std::map<std::string, HermitianMatrix> sigma;
    auto& tj = state.minimal[j];
    std::vector<const std::string*> fresh;
    for (const auto& bucket : buckets) {
        for (const auto& e : bucket) {
            if (e.is_minimal) {
                auto [it, inserted] = tj.emplace(e.key, MinimalEntry{e.key, MahlerResult{}, j});
                if (inserted) fresh.push_back(&it->first);
            } else {
                if (!sigma.count(e.key))
                    sigma.emplace(e.key, matrix_from_key(CanonicalKey{cfg.dedup_flavor, e.key}));
            }
        }
    }
    for (const std::string* key : fresh)
        tj[*key].mahler = mahler_of_matrix(matrix_from_key(CanonicalKey{cfg.dedup_flavor, *key}));
    state.cyclotomic_found += sigma.size();
#ifndef NDEBUG
    for (const auto& [key, M] : sigma) assert(is_connected(M) && is_cyclotomic_matrix(M));
    for (const auto& [key, entry] : tj)
        assert(is_minimal_noncyclotomic(matrix_from_key(CanonicalKey{cfg.dedup_flavor, key})));
#endif
    state.frontier = std::move(sigma);
    state.round = j;
}

// ---------------- reports ----------------

namespace {

std::string format_measure(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(10) << v;
    return os.str();
}

}  // namespace

std::string SearchReport::to_csv() const {
    std::ostringstream os;
    os << "j,count,count_is_exact,min_mahler,witness_file\n";
    for (const auto& r : rows) {
        os << r.j << ',' << r.count << ',' << (r.count_is_exact ? "true" : "false") << ','
           << (r.has_min ? format_measure(r.min_mahler) : "") << ',' << r.witness_file << "\n";
    }
    return os.str();
}

std::string SearchReport::to_table() const {
    std::ostringstream os;
    os << "search: " << name << "\n";
    os << "  j   |T_j|   min M(A)\n";
    for (const auto& r : rows) {
        os << std::setw(3) << r.j << ' ' << std::setw(7) << r.count << "   "
           << (r.has_min ? format_measure(r.min_mahler) : "-") << "\n";
    }
    return os.str();
}

SearchReport run_search(SearchState& state, int stop_at_vertices, int threads,
                        const std::string& witness_dir, const std::string& checkpoint_path,
                        int checkpoint_every) {
    if (stop_at_vertices > state.config.max_vertices)
        throw CapacityError("run_search: stop beyond max_vertices");
    int since_checkpoint = 0;
    while (state.round < stop_at_vertices && !state.frontier.empty()) {
        grow_round(state, threads);
        if (!checkpoint_path.empty() && checkpoint_every > 0 && ++since_checkpoint >= checkpoint_every) {
            write_checkpoint(state, checkpoint_path);
            since_checkpoint = 0;
        }
    }
    if (!checkpoint_path.empty()) write_checkpoint(state, checkpoint_path);
    SearchReport report;
    for (const auto& [j, tj] : state.minimal) {
        ReportRow row;
        row.j = j;
        row.count = tj.size();
        row.count_is_exact = true;
        const MinimalEntry* best = nullptr;
        for (const auto& [key, entry] : tj) {
            if (!best || entry.mahler.value < best->mahler.value - 1e-12) best = &entry;
        }
        if (best) {
            row.has_min = true;
            row.min_mahler = best->mahler.value;
            row.witness_key = best->key_bytes;
            if (!witness_dir.empty()) {
                const std::string fname = witness_dir + "/witness_j" + std::to_string(j) + ".mat";
                std::ofstream f(fname);
                f << to_text(matrix_from_key(CanonicalKey{state.config.dedup_flavor, best->key_bytes}));
                row.witness_file = fname;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ---------------- checkpointing ----------------

namespace {

std::uint32_t crc32_update(std::uint32_t crc, const void* data, size_t len) {
    static std::uint32_t table[256];
    static bool init = false;
    if (!init) {
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            table[i] = c;
        }
        init = true;
    }
    const auto* p = static_cast<const unsigned char*>(data);
    crc = ~crc;
    for (size_t i = 0; i < len; ++i) crc = table[(crc ^ p[i]) & 0xFF] ^ (crc >> 8);
    return ~crc;
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_str(std::string& out, const std::string& s) {
    put_u64(out, s.size());
    out += s;
}

void put_f64(std::string& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

struct Reader {
    const std::string& s;
    size_t pos = 0;
    void need(size_t k) const {
        if (pos + k > s.size()) throw LoadError("checkpoint truncated");
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
        pos += 8;
        return v;
    }
    std::string str() {
        const std::uint64_t len = u64();
        need(len);
        std::string v = s.substr(pos, len);
        pos += len;
        return v;
    }
    double f64() {
        const std::uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }
};

constexpr char kMagic[8] = {'C', 'Y', 'G', 'R', 'C', 'K', '0', '1'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

void write_checkpoint(const SearchState& state, const std::string& path) {
    std::string payload;
    put_u32(payload, kVersion);
    put_str(payload, state.config.to_text());
    put_u32(payload, static_cast<std::uint32_t>(state.round));
    put_u64(payload, state.frontier.size());
    for (const auto& [key, m] : state.frontier) put_str(payload, key);
    put_u64(payload, state.minimal.size());
    for (const auto& [j, tj] : state.minimal) {
        put_u32(payload, static_cast<std::uint32_t>(j));
        put_u64(payload, tj.size());
        for (const auto& [key, entry] : tj) {
            put_str(payload, key);
            put_f64(payload, entry.mahler.value);
            put_f64(payload, entry.mahler.error_bound);
            payload.push_back(entry.mahler.is_exactly_one ? 1 : 0);
            put_u32(payload, static_cast<std::uint32_t>(entry.round_found));
        }
    }
    std::string out(kMagic, sizeof(kMagic));
    out += payload;
    put_u32(out, crc32_update(0, payload.data(), payload.size()));
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write checkpoint: " + path);
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
}

SearchState read_checkpoint(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw LoadError("cannot open checkpoint: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string blob = ss.str();
    if (blob.size() < sizeof(kMagic) + 8 || std::memcmp(blob.data(), kMagic, sizeof(kMagic)) != 0)
        throw LoadError("checkpoint: bad magic");
    const std::string payload = blob.substr(sizeof(kMagic), blob.size() - sizeof(kMagic) - 4);
    Reader tail{blob, blob.size() - 4};
    const std::uint32_t want = tail.u32();
    if (crc32_update(0, payload.data(), payload.size()) != want)
        throw LoadError("checkpoint: checksum mismatch");
    Reader r{payload, 0};
    if (r.u32() != kVersion) throw LoadError("checkpoint: unsupported version");
    SearchState state;
    state.config = GrowConfig::from_text(r.str());
    state.round = static_cast<int>(r.u32());
    const std::uint64_t nf = r.u64();
    for (std::uint64_t i = 0; i < nf; ++i) {
        std::string key = r.str();
        state.frontier.emplace(key, matrix_from_key(CanonicalKey{state.config.dedup_flavor, key}));
    }
    const std::uint64_t nrounds = r.u64();
    for (std::uint64_t i = 0; i < nrounds; ++i) {
        const int j = static_cast<int>(r.u32());
        const std::uint64_t cnt = r.u64();
        auto& tj = state.minimal[j];
        for (std::uint64_t t = 0; t < cnt; ++t) {
            MinimalEntry e;
            e.key_bytes = r.str();
            e.mahler.value = r.f64();
            e.mahler.error_bound = r.f64();
            r.need(1);
            e.mahler.is_exactly_one = payload[r.pos] != 0;
            ++r.pos;
            e.round_found = static_cast<int>(r.u32());
            tj.emplace(e.key_bytes, std::move(e));
        }
    }
    return state;
}

// ---------------- registered searches ----------------

namespace {

ChargeRule rule(std::int64_t charge, std::vector<std::int64_t> levels,
                std::optional<std::int64_t> bound = std::nullopt) {
    return ChargeRule{charge, std::move(levels), bound};
}

GrowConfig base_config(Ring r) {
    GrowConfig cfg;
    cfg.ring = r;
    cfg.rules = {rule(0, {1}), rule(1, {1}), rule(-1, {1})};
    return cfg;
}

}  // namespace

std::vector<std::string> registered_search_names() { return catalog::seeded_search_names(); }

RegisteredSearch make_registered_search(const std::string& name) {
    const bool zw = name.size() > 2 && name.substr(name.size() - 2) == "zw";
    const Ring r = zw ? Ring::Eisenstein : Ring::Gaussian;
    RegisteredSearch s;
    s.name = name;
    s.config = base_config(r);
    if (name == "weight2-zi") {
        s.config.rules = {rule(0, {1, 2}), rule(1, {1}), rule(-1, {1})};
        s.default_stop = 6;
    } else if (name == "weight2-zw") {
        // no norm-2 elements exist here; the analogous alphabet uses norms 3 and 4
        s.config.rules = {rule(0, {1, 3, 4}), rule(1, {1}), rule(-1, {1})};
        s.default_stop = 6;
    } else if (name == "weight2-charged-zi") {
        s.config.rules = {rule(0, {1, 2}), rule(1, {1}), rule(-1, {1})};
        s.default_stop = 6;
    } else if (name == "triple-charged-triangle-zi" || name == "triple-charged-triangle-zw" ||
               name == "single-charged-triangle-zi" || name == "single-charged-triangle-zw" ||
               name == "uncharged-triangle-zi" || name == "uncharged-triangle-zw") {
        s.default_stop = 9;
    } else if (name == "double-charged-triangle-zi" || name == "double-charged-triangle-zw") {
        s.config.triangle_policy = TrianglePolicy::ForbidExceptDoubleCharged;
        s.default_stop = 10;
    } else if (name == "uncharged-trianglefree-zi" || name == "uncharged-trianglefree-zw") {
        s.config.rules = {rule(0, {1})};
        s.config.triangle_policy = TrianglePolicy::ForbidAll;
        s.config.uncharged_only = true;
        s.default_stop = 10;
    } else if (name == "charged-trianglefree-zi" || name == "charged-trianglefree-zw") {
        s.config.triangle_policy = TrianglePolicy::ForbidAll;
        s.default_stop = 10;
    } else if (name == "supersporadic-zi" || name == "supersporadic-zw") {
        s.config.rules = {rule(0, {1, 2}), rule(1, {1}), rule(-1, {1})};
        s.default_stop = 10;
    } else {
        throw UsageError("unknown registered search: " + name);
    }
    return s;
}

SearchState make_state(const GrowConfig& config, const std::vector<HermitianMatrix>& seeds) {
    config.validate();
    if (seeds.empty()) throw UsageError("search needs at least one seed");
    SearchState state;
    state.config = config;
    state.round = seeds.front().size();
    for (const auto& s : seeds) {
        if (s.size() != state.round) throw UsageError("seeds must share a common vertex count");
        if (s.ring() != config.ring) throw UsageError("seed ring does not match config");
        state.frontier.emplace(canonical_key(s, config.dedup_flavor).bytes, s);
        if (config.dedup_flavor == Flavor::Strong) {
            // seed lists are given up to full equivalence; a strong-flavor run
            // starts from every strong class inside those full classes
            HermitianMatrix ns = negate(s);
            std::string k = canonical_key(ns, Flavor::Strong).bytes;
            if (!state.frontier.count(k)) state.frontier.emplace(std::move(k), std::move(ns));
        }
    }
    return state;
}

SearchState make_state(const RegisteredSearch& search) {
    return make_state(search.config, catalog::list_seeds(search.name));
}

// ---------------- path rank diagnostic ----------------

PathRankResult path_rank(const HermitianMatrix& A) {
    const int n = A.size();
    PathRankResult res;
    res.longest_chordless_path = 1;
    std::vector<int> path;
    std::vector<char> inpath(n, 0);
    auto dfs = [&](auto&& self) -> void {
        res.longest_chordless_path = std::max(res.longest_chordless_path, static_cast<int>(path.size()));
        const int last = path.back();
        const int first = path.front();
        for (int u = 0; u < n; ++u) {
            if (inpath[u] || A.at(last, u).is_zero()) continue;
            int extra = 0;
            bool hits_first = false;
            for (int v : path) {
                if (v == last) continue;
                if (!A.at(u, v).is_zero()) {
                    if (v == first)
                        hits_first = true;
                    else
                        ++extra;
                }
            }
            if (extra > 0) continue;
            if (hits_first) {
                if (path.size() >= 2)
                    res.longest_chordless_cycle =
                        std::max(res.longest_chordless_cycle, static_cast<int>(path.size()) + 1);
                continue;
            }
            path.push_back(u);
            inpath[u] = 1;
            self(self);
            inpath[u] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(inpath.begin(), inpath.end(), 0);
        inpath[s] = 1;
        dfs(dfs);
    }
    return res;
}

}  // namespace cyclograph
