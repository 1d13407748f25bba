#include "cyclograph/equiv.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>

namespace cyclograph {

const char* flavor_name(Flavor f) { return f == Flavor::Strong ? "strong" : "full"; }

Flavor parse_flavor(std::string_view s) {
    if (s == "strong") return Flavor::Strong;
    if (s == "full") return Flavor::Full;
    throw UsageError("unknown equivalence flavor: " + std::string(s));
}

HermitianMatrix switch_at(const HermitianMatrix& A, int v, const RingElement& mu) {
    if (v < 0 || v >= A.size()) throw UsageError("switch_at: vertex out of range");
    if (mu.ring != A.ring()) throw UsageError("switch_at: unit from a different ring");
    if (norm_of(mu) != 1) throw UsageError("switch_at: mu must be a unit");
    HermitianMatrix B = A;
    for (int u = 0; u < A.size(); ++u) {
        if (u == v) continue;
        B.set(v, u, mul(mu, A.at(v, u)));
    }
    return B;
}

HermitianMatrix galois_conjugate(const HermitianMatrix& A) {
    HermitianMatrix B(A.ring(), A.size());
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j <= i; ++j) B.set(i, j, conj(A.at(i, j)));
    return B;
}

HermitianMatrix negate(const HermitianMatrix& A) {
    HermitianMatrix B(A.ring(), A.size());
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j <= i; ++j) B.set(i, j, neg(A.at(i, j)));
    return B;
}

RingElement unit_orbit_rep(const RingElement& e) {
    RingElement best = e;
    for (const auto& u : units(e.ring)) {
        RingElement c = mul(u, e);
        if (elem_less(best, c)) best = c;
    }
    return best;
}

namespace {

// ---- vertex colors: switching-invariant refinement ----

std::vector<int> stable_colors(const HermitianMatrix& A) {
    const int n = A.size();
    using Sig = std::vector<std::int64_t>;
    std::vector<int> color(n, 0);
    auto rank_signatures = [&](const std::vector<Sig>& sigs) {
        std::vector<Sig> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> out(n);
        for (int v = 0; v < n; ++v)
            out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
        return out;
    };
    {
        std::vector<Sig> sigs(n);
        for (int v = 0; v < n; ++v) {
            Sig s = {A.charge(v), degree(A, v)};
            std::vector<std::int64_t> norms;
            for (int u = 0; u < n; ++u)
                if (u != v && !A.at(u, v).is_zero()) norms.push_back(norm_of(A.at(u, v)));
            std::sort(norms.begin(), norms.end());
            s.insert(s.end(), norms.begin(), norms.end());
            sigs[v] = std::move(s);
        }
        color = rank_signatures(sigs);
    }
    for (int round = 0; round < n; ++round) {
        std::vector<Sig> sigs(n);
        for (int v = 0; v < n; ++v) {
            Sig s = {color[v]};
            std::vector<std::pair<std::int64_t, std::int64_t>> nb;
            for (int u = 0; u < n; ++u)
                if (u != v && !A.at(u, v).is_zero()) nb.emplace_back(color[u], norm_of(A.at(u, v)));
            std::sort(nb.begin(), nb.end());
            for (const auto& [c, w] : nb) {
                s.push_back(c);
                s.push_back(w);
            }
            sigs[v] = std::move(s);
        }
        std::vector<int> next = rank_signatures(sigs);
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

// ---- minimal serialization over connected orderings ----
//
// Vertices are placed one at a time; every vertex after the first must be
// adjacent to an already placed one, which pins its switching unit via the
// first such edge (normalized to the distinguished unit-orbit representative).
// The residual switching freedom is a constant unit per component and acts
// trivially, so for a fixed ordering the emitted stream is a class function.

struct CanonSearch {
    const HermitianMatrix& A;
    const std::vector<int>& color;
    int n;
    const std::vector<RingElement>& us;

    std::vector<std::int64_t> best;
    bool have_best = false;
    std::vector<int> best_order;
    std::vector<RingElement> best_mu;

    std::vector<std::int64_t> cur;
    std::vector<int> order;
    std::vector<char> placed;
    std::vector<RingElement> mu;  // per placed position

    CanonSearch(const HermitianMatrix& a, const std::vector<int>& col)
        : A(a), color(col), n(a.size()), us(units(a.ring())) {
        placed.assign(n, 0);
    }

    void run() {
        for (int v = 0; v < n; ++v) try_vertex(v);
    }

    // The prefix is always compared against the current best from the start:
    // best can change at any leaf, which invalidates cheaper incremental
    // comparison states.
    void try_vertex(int v) {
        const int k = static_cast<int>(order.size());
        if (k > 0) {
            bool adjacent = false;
            for (int j = 0; j < k && !adjacent; ++j) adjacent = !A.at(v, order[j]).is_zero();
            if (!adjacent) return;
        }
        // build this position's stream segment
        std::vector<std::int64_t> seg;
        seg.push_back(color[v]);
        RingElement muv = make_elem(A.ring(), 1);
        int first = -1;
        for (int j = 0; j < k; ++j) {
            if (!A.at(v, order[j]).is_zero()) {
                first = j;
                break;
            }
        }
        if (first >= 0) {
            const RingElement val = mul(A.at(v, order[first]), conj(mu[first]));
            const RingElement rep = unit_orbit_rep(val);
            for (const auto& u : us)
                if (mul(u, val) == rep) {
                    muv = u;
                    break;
                }
        }
        for (int j = 0; j < k; ++j) {
            const RingElement e = mul(mul(muv, A.at(v, order[j])), conj(mu[j]));
            seg.push_back(e.a);
            seg.push_back(e.b);
        }
        seg.push_back(A.charge(v));
        const size_t save = cur.size();
        cur.insert(cur.end(), seg.begin(), seg.end());
        if (have_best) {
            int cmp = 0;
            for (size_t i = 0; i < cur.size(); ++i) {
                if (cur[i] != best[i]) {
                    cmp = cur[i] < best[i] ? -1 : 1;
                    break;
                }
            }
            if (cmp > 0) {
                cur.resize(save);
                return;
            }
        }
        order.push_back(v);
        mu.push_back(muv);
        placed[v] = 1;
        if (static_cast<int>(order.size()) == n) {
            if (!have_best || cur < best) {
                best = cur;
                best_order = order;
                best_mu = mu;
                have_best = true;
            }
        } else {
            for (int w = 0; w < n; ++w)
                if (!placed[w]) try_vertex(w);
        }
        placed[v] = 0;
        mu.pop_back();
        order.pop_back();
        cur.resize(save);
    }

    HermitianMatrix minimal_matrix() const {
        HermitianMatrix B(A.ring(), n);
        for (int i = 0; i < n; ++i) {
            B.set(i, i, A.at(best_order[i], best_order[i]));
            for (int j = 0; j < i; ++j)
                B.set(i, j, mul(mul(best_mu[i], A.at(best_order[i], best_order[j])), conj(best_mu[j])));
        }
        return B;
    }
};

struct CanonResult {
    std::vector<std::int64_t> stream;
    HermitianMatrix matrix;
};

CanonResult canonical_connected(const HermitianMatrix& A, Flavor flavor) {
    std::vector<HermitianMatrix> variants = {A, galois_conjugate(A)};
    if (flavor == Flavor::Full) {
        variants.push_back(negate(A));
        variants.push_back(negate(galois_conjugate(A)));
    }
    bool have = false;
    CanonResult res{{}, HermitianMatrix(A.ring(), A.size())};
    for (const auto& V : variants) {
        const std::vector<int> color = stable_colors(V);
        CanonSearch search(V, color);
        search.run();
        if (!have || search.best < res.stream) {
            res.stream = search.best;
            res.matrix = search.minimal_matrix();
            have = true;
        }
    }
    return res;
}

std::vector<std::vector<int>> component_list(const HermitianMatrix& A) {
    const int n = A.size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp = {s};
        std::vector<int> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u)
                if (!seen[u] && u != v && !A.at(v, u).is_zero()) {
                    seen[u] = 1;
                    comp.push_back(u);
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::string serialize_key_bytes(const HermitianMatrix& A) {
    std::ostringstream os;
    os << ring_name(A.ring()) << ' ' << A.size();
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < A.size(); ++j) os << ' ' << to_string(A.at(i, j));
    return os.str();
}

}  // namespace

CanonicalKey canonical_key(const HermitianMatrix& A, Flavor flavor) {
    if (A.size() > kMaxVertices) throw CapacityError("canonical_key: matrix too large");
    auto comps = component_list(A);
    HermitianMatrix assembled(A.ring(), A.size());
    if (comps.size() == 1) {
        assembled = canonical_connected(A, flavor).matrix;
    } else {
        std::vector<std::pair<std::string, HermitianMatrix>> parts;
        for (const auto& comp : comps) {
            CanonResult r = canonical_connected(principal_submatrix(A, comp), flavor);
            parts.emplace_back(serialize_key_bytes(r.matrix), std::move(r.matrix));
        }
        std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
            if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
            return x.first < y.first;
        });
        int base = 0;
        for (const auto& [bytes, M] : parts) {
            for (int i = 0; i < M.size(); ++i)
                for (int j = 0; j <= i; ++j) assembled.set(base + i, base + j, M.at(i, j));
            base += M.size();
        }
    }
    return CanonicalKey{flavor, serialize_key_bytes(assembled)};
}

HermitianMatrix matrix_from_key(const CanonicalKey& key) {
    std::istringstream is(key.bytes);
    std::string ringword;
    int n = 0;
    if (!(is >> ringword >> n) || n < 1) throw UsageError("malformed canonical key");
    const Ring ring = parse_ring(ringword);
    std::vector<RingElement> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    std::string tok;
    for (int k = 0; k < n * n; ++k) {
        if (!(is >> tok)) throw UsageError("malformed canonical key: missing entries");
        entries.push_back(parse_element(ring, tok));
    }
    return HermitianMatrix::from_entries(ring, n, std::move(entries));
}

bool are_equivalent(const HermitianMatrix& A, const HermitianMatrix& B, Flavor flavor) {
    if (A.size() != B.size()) throw UsageError("are_equivalent: dimension mismatch");
    if (A.ring() != B.ring()) throw UsageError("are_equivalent: ring mismatch");
    return canonical_key(A, flavor) == canonical_key(B, flavor);
}

// ---------------- wildcard patterns ----------------

GraphPattern::GraphPattern(int n, std::vector<PatternCharge> charges, std::vector<PatternEdge> edges_upper)
    : n_(n), charges_(std::move(charges)), edges_(std::move(edges_upper)) {
    if (static_cast<int>(charges_.size()) != n) throw UsageError("pattern charge count mismatch");
    if (static_cast<int>(edges_.size()) != n * (n - 1) / 2) throw UsageError("pattern edge count mismatch");
}

GraphPattern GraphPattern::from_matrix(const HermitianMatrix& A) {
    std::vector<PatternCharge> charges;
    std::vector<PatternEdge> edges;
    for (int v = 0; v < A.size(); ++v) charges.push_back({PatternCharge::Exact, A.charge(v)});
    for (int i = 0; i < A.size(); ++i)
        for (int j = i + 1; j < A.size(); ++j) {
            const std::int64_t w = norm_of(A.at(i, j));
            edges.push_back(w == 0 ? PatternEdge{PatternEdge::Zero, 0} : PatternEdge{PatternEdge::NormEquals, w});
        }
    return GraphPattern(A.size(), std::move(charges), std::move(edges));
}

const PatternEdge& GraphPattern::edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges_[static_cast<size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1)];
}

GraphPattern GraphPattern::negated() const {
    std::vector<PatternCharge> charges = charges_;
    for (auto& c : charges)
        if (c.kind == PatternCharge::Exact) c.value = -c.value;
    return GraphPattern(n_, std::move(charges), edges_);
}

namespace {

bool match_injection(const HermitianMatrix& A, const GraphPattern& P) {
    const int m = P.size();
    const int n = A.size();
    if (m > n) return false;
    std::vector<int> map(m, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k == m) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            const PatternCharge& pc = P.charge(k);
            if (pc.kind == PatternCharge::Exact && A.charge(v) != pc.value) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                const PatternEdge& pe = P.edge(j, k);
                const std::int64_t w = norm_of(A.at(map[j], v));
                switch (pe.kind) {
                    case PatternEdge::Zero: ok = (w == 0); break;
                    case PatternEdge::AnyNonzero: ok = (w != 0); break;
                    case PatternEdge::NormEquals: ok = (w == pe.norm); break;
                }
            }
            if (!ok) continue;
            map[k] = v;
            used[v] = 1;
            if (rec(k + 1)) return true;
            used[v] = 0;
            map[k] = -1;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

bool contains_induced_equivalent(const HermitianMatrix& A, const GraphPattern& pattern, Flavor flavor) {
    if (pattern.size() > A.size()) return false;
    if (match_injection(A, pattern)) return true;
    if (flavor == Flavor::Full && match_injection(A, pattern.negated())) return true;
    return false;
}

bool contains_induced_equivalent(const HermitianMatrix& A, const HermitianMatrix& pattern, Flavor flavor) {
    const int m = pattern.size();
    const int n = A.size();
    if (m > n) return false;
    if (pattern.ring() != A.ring()) throw UsageError("contains_induced_equivalent: ring mismatch");
    const CanonicalKey want = canonical_key(pattern, flavor);
    std::vector<int> comb(m);
    for (int i = 0; i < m; ++i) comb[i] = i;
    while (true) {
        if (canonical_key(principal_submatrix(A, comb), flavor) == want) return true;
        int i = m - 1;
        while (i >= 0 && comb[i] == n - m + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
    }
    return false;
}

}  // namespace cyclograph
