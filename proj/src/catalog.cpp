#include "cyclograph/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "cyclograph/grow.hpp"
#include "cyclograph/poly.hpp"

namespace cyclograph {
namespace catalog {

namespace {

struct Edge {
    int u, v;
    std::int64_t a, b;
};

HermitianMatrix graph(Ring r, int n, const std::vector<std::int64_t>& charges, const std::vector<Edge>& edges) {
    HermitianMatrix A(r, n);
    for (int v = 0; v < n; ++v) A.set(v, v, make_elem(r, charges[v]));
    for (const Edge& e : edges) A.set(e.u, e.v, make_elem(r, e.a, e.b));
    return A;
}

// standard ladder rung between consecutive columns (t,b) -> (tn,bn):
// top row keeps sign +, bottom row -
void rung(std::vector<Edge>& es, int t, int b, int tn, int bn) {
    es.push_back({t, tn, 1, 0});
    es.push_back({t, bn, 1, 0});
    es.push_back({b, tn, -1, 0});
    es.push_back({b, bn, -1, 0});
}

HermitianMatrix build_T2k(Ring r, int k, bool twisted) {
    if (k < 3) throw UsageError("T2k family needs k >= 3");
    const int n = 2 * k;
    std::vector<Edge> es;
    for (int j = 0; j < k; ++j) {
        const int jn = (j + 1) % k;
        const int t = 2 * j, b = 2 * j + 1, tn = 2 * jn, bn = 2 * jn + 1;
        if (twisted && j == k - 1) {
            // the wrap-around rung is multiplied by theta
            es.push_back({t, tn, 0, 1});
            es.push_back({t, bn, 0, 1});
            es.push_back({b, tn, 0, -1});
            es.push_back({b, bn, 0, -1});
        } else {
            rung(es, t, b, tn, bn);
        }
    }
    return graph(r, n, std::vector<std::int64_t>(n, 0), es);
}

HermitianMatrix build_C2k(int k) {
    if (k < 2) throw UsageError("C2k family needs k >= 2");
    const int n = 2 * k;
    std::vector<Edge> es;
    const int L = 0, R = n - 1;
    es.push_back({1, L, 1, 1});
    es.push_back({2, L, 1, 1});
    for (int j = 0; j + 2 < k; ++j) rung(es, 1 + 2 * j, 2 + 2 * j, 3 + 2 * j, 4 + 2 * j);
    es.push_back({2 * k - 3, R, 1, 1});
    es.push_back({2 * k - 2, R, -1, -1});
    return graph(Ring::Gaussian, n, std::vector<std::int64_t>(n, 0), es);
}

HermitianMatrix build_C2kpp(Ring r, int k, bool pm) {
    if (k < 2) throw UsageError("C2k++/C2k+- families need k >= 2");
    const int n = 2 * k;
    std::vector<Edge> es;
    for (int j = 0; j + 1 < k; ++j) rung(es, 2 * j, 2 * j + 1, 2 * j + 2, 2 * j + 3);
    es.push_back({0, 1, 1, 0});
    es.push_back({n - 2, n - 1, pm ? 1 : -1, 0});
    std::vector<std::int64_t> ch(n, 0);
    ch[0] = ch[1] = 1;
    ch[n - 2] = ch[n - 1] = pm ? -1 : 1;
    return graph(r, n, ch, es);
}

HermitianMatrix build_C2k1(int k) {
    if (k < 1) throw UsageError("C2k+1 family needs k >= 1");
    const int n = 2 * k + 1;
    std::vector<Edge> es;
    const int L = 0;
    es.push_back({1, L, 1, 1});
    es.push_back({2, L, 1, 1});
    for (int j = 0; j + 1 < k; ++j) rung(es, 1 + 2 * j, 2 + 2 * j, 3 + 2 * j, 4 + 2 * j);
    es.push_back({n - 2, n - 1, -1, 0});
    std::vector<std::int64_t> ch(n, 0);
    ch[n - 2] = ch[n - 1] = 1;
    return graph(Ring::Gaussian, n, ch, es);
}

HermitianMatrix build_sporadic(const std::string& name);
HermitianMatrix build_named_small(const std::string& name);

HermitianMatrix build_sporadic(const std::string& name) {
    const Ring G = Ring::Gaussian, E = Ring::Eisenstein, Q = Ring::Rational;
    if (name == "S1") return graph(Q, 1, {2}, {});
    if (name == "S2") return graph(Q, 2, {0, 0}, {{0, 1, 2, 0}});
    if (name == "S2dag") return graph(E, 2, {-1, 1}, {{1, 0, 1, 1}});
    if (name == "S4")
        return graph(G, 4, {1, -1, -1, 1}, {{0, 2, -1, -1}, {1, 3, 1, 1}, {1, 0, 1, 0}, {2, 3, 1, 0}});
    if (name == "S4dag")
        return graph(G, 4, {1, 0, -1, 0},
                     {{2, 0, 0, 1}, {1, 3, 1, 1}, {1, 0, 1, 0}, {2, 3, 1, 0}, {0, 3, -1, 0}, {2, 1, 1, 0}});
    if (name == "S4ddag")
        return graph(E, 4, {0, 0, 0, 0}, {{0, 2, -1, -1}, {1, 3, 1, 1}, {0, 1, 1, 0}, {2, 3, 1, 0}});
    if (name == "S5")
        return graph(E, 5, {0, 0, 1, 1, 0},
                     {{0, 2, 0, -1}, {1, 3, 0, -1}, {2, 4, 1, 0}, {4, 3, 1, 0}, {0, 3, 1, 0},
                      {1, 2, 1, 0}, {4, 1, 0, -1}, {0, 1, 1, 0}, {4, 0, 0, -1}});
    if (name == "S6")
        return graph(E, 6, {-1, 1, -1, 1, -1, 1},
                     {{1, 0, 0, -1}, {0, 3, 0, -1}, {5, 4, 0, -1}, {1, 2, 1, 0}, {4, 3, 0, -1},
                      {5, 2, 1, 0}, {3, 2, 1, 0}, {0, 5, 1, 0}, {1, 4, 1, 0}});
    if (name == "S6dag")
        return graph(E, 6, {0, 0, -1, 1, 0, 0},
                     {{1, 0, 0, -1}, {0, 3, 0, -1}, {5, 4, 0, -1}, {1, 2, 1, 0}, {4, 3, 0, -1},
                      {5, 2, 1, 0}, {3, 2, 1, 0}, {4, 0, -1, 0}, {1, 5, 1, 0}, {0, 5, 1, 0}, {1, 4, 1, 0}});
    if (name == "S7")
        return graph(Q, 7, {1, 0, 0, -1, 1, 1, 0},
                     {{1, 0, 1, 0}, {0, 2, -1, 0}, {0, 3, 1, 0}, {2, 5, 1, 0}, {6, 5, -1, 0}, {1, 6, 1, 0},
                      {3, 4, 1, 0}, {3, 5, 1, 0}, {1, 4, -1, 0}, {2, 6, 1, 0}, {4, 6, 1, 0}, {1, 2, 1, 0}});
    if (name == "S8")
        return graph(Q, 8, {-1, 1, 1, -1, 1, -1, -1, 1},
                     {{1, 0, 1, 0}, {0, 2, -1, 0}, {0, 4, 1, 0}, {2, 6, 1, 0}, {2, 3, 1, 0}, {1, 5, -1, 0},
                      {1, 3, 1, 0}, {4, 5, 1, 0}, {4, 6, 1, 0}, {7, 6, -1, 0}, {5, 7, 1, 0}, {3, 7, 1, 0}});
    if (name == "S8p")
        return graph(Q, 8, {-1, 1, 0, 0, 0, 0, 1, -1},
                     {{1, 0, 1, 0}, {0, 2, 1, 0}, {0, 4, 1, 0}, {2, 6, 1, 0}, {2, 3, -1, 0}, {1, 5, -1, 0},
                      {1, 3, 1, 0}, {4, 5, 1, 0}, {4, 6, -1, 0}, {7, 6, 1, 0}, {5, 7, 1, 0}, {3, 7, 1, 0},
                      {3, 5, 1, 0}, {2, 4, 1, 0}});
    if (name == "S8dag")
        return graph(G, 8, {0, 0, 0, 0, 0, 0, 0, 0},
                     {{1, 0, 1, 0}, {0, 2, 1, 0}, {0, 6, 1, 0}, {1, 7, -1, 0}, {0, 4, 0, -1}, {6, 2, 0, 1},
                      {2, 3, 1, 0}, {1, 5, 0, 1}, {1, 3, -1, 0}, {4, 5, 1, 0}, {4, 6, -1, 0}, {7, 6, 1, 0},
                      {5, 7, 1, 0}, {7, 3, 0, -1}, {3, 5, -1, 0}, {2, 4, 1, 0}});
    if (name == "S8dagdag")
        return graph(G, 8, {0, 0, 0, 0, 0, 0, 0, 0},
                     {{1, 0, 1, 0}, {0, 2, 1, 1}, {0, 4, -1, 0}, {6, 2, -1, 0}, {3, 2, 1, 0}, {1, 5, 1, 0},
                      {3, 1, 0, 1}, {4, 5, 1, 0}, {4, 6, 0, -1}, {7, 6, 1, 0}, {7, 5, -1, -1}, {7, 3, 1, 0},
                      {3, 4, 1, 0}, {1, 6, 1, 0}});
    if (name == "S8ddag")
        return graph(G, 8, {0, 0, 0, 0, 0, 0, 0, 0},
                     {{1, 0, 1, 0}, {0, 2, 1, 1}, {0, 4, 1, 0}, {6, 2, -1, 0}, {3, 2, 1, 0}, {1, 5, 1, 0},
                      {1, 3, -1, -1}, {4, 5, -1, 0}, {4, 6, 1, 1}, {7, 6, 1, 0}, {5, 7, 1, 1}, {7, 3, 1, 0}});
    if (name == "S10") {
        std::vector<Edge> es;
        for (int j = 0; j < 5; ++j) {
            es.push_back({j, 5 + j, 1, 0});
            es.push_back({j, 5 + (j + 4) % 5, 1, 0});
            es.push_back({j, 5 + (j + 1) % 5, 0, -1});
            es.push_back({j, 5 + (j + 3) % 5, 0, -1});
        }
        return graph(E, 10, std::vector<std::int64_t>(10, 0), es);
    }
    if (name == "S12") {
        std::vector<Edge> es;
        for (int m : {0, 2, 4}) {
            es.push_back({m, 6 + (m + 5) % 6, 1, 0});
            es.push_back({m, 6 + (m + 4) % 6, -1, 0});
            es.push_back({m, 6 + (m + 2) % 6, -1, 0});
            es.push_back({m, 6 + m, 0, 1});
        }
        for (int m : {1, 3, 5}) {
            es.push_back({m, 6 + (m + 5) % 6, 1, 0});
            es.push_back({m, 6 + m, 1, 0});
            es.push_back({m, 6 + (m + 2) % 6, 1, 0});
            es.push_back({m, 6 + (m + 4) % 6, -1, 1});  // conj(-w) = w - 1
        }
        return graph(E, 12, std::vector<std::int64_t>(12, 0), es);
    }
    if (name == "S14") {
        // 14 roots of E7 forming a tight frame: A^2 = 4I, 4-regular,
        // not equivalent to T14 (different underlying graph)
        static const int s14[][3] = {
            {0, 2, 1},   {0, 3, 1},   {0, 10, 1},  {0, 11, 1},  {1, 2, 1},   {1, 3, -1},  {1, 12, 1},
            {1, 13, 1},  {2, 4, 1},   {2, 5, 1},   {3, 6, 1},   {3, 7, 1},   {4, 8, 1},   {4, 11, -1},
            {4, 13, -1}, {5, 8, -1},  {5, 10, -1}, {5, 12, -1}, {6, 8, 1},   {6, 10, -1}, {6, 13, 1},
            {7, 8, -1},  {7, 11, -1}, {7, 12, 1},  {9, 10, 1},  {9, 11, -1}, {9, 12, -1}, {9, 13, 1}};
        std::vector<Edge> es;
        for (const auto& e : s14) es.push_back({e[0], e[1], e[2], 0});
        return graph(Q, 14, std::vector<std::int64_t>(14, 0), es);
    }
    if (name == "S16") {
        std::vector<Edge> es;
        for (int j = 0; j < 8; ++j) {
            es.push_back({8 + j, 8 + (j + 3) % 8, 1, 0});
            es.push_back({j, (j + 1) % 8, 1, 0});
            es.push_back({j, 8 + (j + 1) % 8, -1, 0});
            es.push_back({j, 8 + (j + 7) % 8, 1, 0});
        }
        return graph(Q, 16, std::vector<std::int64_t>(16, 0), es);
    }
    throw UsageError("unknown catalog graph: " + name);
}

HermitianMatrix build_named_small(const std::string& name) {
    const Ring G = Ring::Gaussian, E = Ring::Eisenstein, Q = Ring::Rational;
    // 2-vertex graphs with a norm-2 edge
    if (name == "WH1") return graph(G, 2, {1, 1}, {{0, 1, 1, 1}});
    if (name == "WH2") return graph(G, 2, {1, -1}, {{0, 1, 1, 1}});
    if (name == "WH3") return graph(G, 2, {1, 0}, {{0, 1, 1, 1}});
    if (name == "WH4") return graph(G, 2, {0, 0}, {{0, 1, 1, 1}});
    if (name == "WH4w") return graph(E, 2, {0, 0}, {{0, 1, 1, 1}});  // norm-3 edge
    // triangles
    if (name == "TC1") return graph(Q, 3, {1, 1, 1}, {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 2, -1, 0}});
    if (name == "TC2") return graph(Q, 3, {1, 1, -1}, {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 2, -1, 0}});
    if (name == "SC1") return graph(Q, 3, {1, 0, 0}, {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 2, -1, 0}});
    if (name == "SC2") return graph(E, 3, {1, 0, 0}, {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 2, 0, -1}});
    if (name == "UT1") return graph(Q, 3, {0, 0, 0}, {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 2, 1, 0}});
    if (name == "UT2g") return graph(G, 3, {0, 0, 0}, {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 2, 0, 1}});
    if (name == "UT2e") return graph(E, 3, {0, 0, 0}, {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 2, 0, 1}});
    if (name == "DC1") return graph(Q, 3, {0, 1, 1}, {{0, 1, 1, 0}, {1, 2, -1, 0}, {0, 2, 1, 0}});
    if (name == "DC2") return graph(G, 3, {0, 1, -1}, {{0, 1, 1, 0}, {1, 2, 0, 1}, {2, 0, 1, 0}});
    // charged pairs
    if (name == "CP0") return graph(Q, 2, {1, 0}, {{0, 1, 1, 0}});
    if (name == "CPP") return graph(Q, 2, {1, 1}, {{0, 1, 1, 0}});
    if (name == "CPM") return graph(Q, 2, {1, -1}, {{0, 1, 1, 0}});
    // uncharged triangle-free 4-vertex seeds
    if (name == "UTF1") return graph(Q, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 3, 1, 0}, {0, 2, 1, 0}});
    if (name == "UTF2") return graph(Q, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {0, 3, 1, 0}, {0, 2, 1, 0}});
    if (name == "UTF3")
        return graph(Q, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 3, 1, 0}, {0, 2, 1, 0}, {2, 3, 1, 0}});
    if (name == "UTF4")
        return graph(Q, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 3, 1, 0}, {0, 2, 1, 0}, {2, 3, -1, 0}});
    if (name == "UTF5g")
        return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 3, 1, 0}, {0, 2, 1, 0}, {2, 3, 0, 1}});
    if (name == "UTF6g")
        return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 3, 1, 0}, {0, 2, 1, 0}, {2, 3, 0, -1}});
    if (name == "UTF5e")
        return graph(E, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 3, 1, 0}, {0, 2, 1, 0}, {2, 3, 0, 1}});
    if (name == "UTF6e")
        return graph(E, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 3, 1, 0}, {0, 2, 1, 0}, {2, 3, 0, -1}});
    // type-I (non-cyclotomic) graphs, plus the charged star X4
    if (name == "X4") return graph(Q, 4, {0, 0, 0, 1}, {{3, 0, 1, 0}, {3, 1, 1, 0}, {3, 2, 1, 0}});
    if (name == "X6") return graph(Q, 3, {1, 0, 1}, {{0, 1, 1, 0}, {2, 1, 1, 0}});
    if (name == "X7") return graph(Q, 3, {1, 0, -1}, {{0, 1, 1, 0}, {2, 1, 1, 0}});
    if (name == "TI1") return graph(G, 3, {0, 0, 0}, {{0, 1, 1, 1}, {0, 2, 1, 1}, {1, 2, 1, 0}});
    if (name == "TI2") return graph(G, 3, {0, 0, 0}, {{0, 1, 1, 1}, {2, 0, 1, 1}, {1, 2, 1, 0}});
    if (name == "TI3") return graph(G, 3, {0, 0, 0}, {{0, 1, 1, 1}, {0, 2, 1, 0}, {1, 2, 1, 0}});
    if (name == "TI4") return build_named_small("WH1");
    if (name == "TI5") return graph(G, 4, {0, 0, 0, 1}, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 0}});
    if (name == "TI6") return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 0}});
    if (name == "TI7")
        return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 1}, {0, 2, 1, 0}, {2, 3, 1, 0}, {3, 1, 1, 0}});
    if (name == "TI8")
        return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 1}, {0, 2, 1, 0}, {2, 3, 1, 1}, {3, 1, 1, 0}});
    if (name == "TI9")
        return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 1}, {0, 2, 1, 0}, {3, 2, 1, 1}, {3, 1, 1, 0}});
    // type-II (cyclotomic, only finitely many cyclotomic supergraphs)
    if (name == "TII1") return build_named_small("WH2");
    if (name == "TII2") return build_named_small("WH3");
    if (name == "TII3") return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 2, 1, 1}, {2, 3, 1, 0}});
    if (name == "TII4")
        return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 1}, {0, 2, 1, 0}, {2, 3, -1, -1}, {3, 1, 1, 0}});
    if (name == "TII5")
        return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 1}, {0, 2, 1, 0}, {2, 3, -1, 0}, {3, 1, 1, 0}});
    // supersporadic seeds
    if (name == "YA1")
        return graph(Q, 6, {0, 0, 0, 0, 0, 0},
                     {{0, 1, 1, 0}, {1, 4, 1, 0}, {0, 2, 1, 0}, {2, 3, 1, 0}, {3, 5, 1, 0}, {1, 3, -1, 0}});
    if (name == "YA2")
        return graph(Q, 6, {0, 0, 0, 0, 0, 0},
                     {{0, 1, 1, 0}, {1, 4, 1, 0}, {0, 2, 1, 0}, {2, 3, 1, 0}, {3, 5, 1, 0}, {1, 3, -1, 0},
                      {4, 5, 1, 0}});
    if (name == "YA3")
        return graph(Q, 6, {0, 0, 0, 0, 0, 0},
                     {{4, 5, 1, 0}, {0, 2, 1, 0}, {2, 3, 1, 0}, {3, 5, 1, 0}, {1, 3, 1, 0}});
    // concrete Y graphs (excluded subgraphs of large non-supersporadics)
    if (name == "Y2") return graph(Q, 3, {1, 0, 1}, {{0, 1, 1, 0}, {2, 1, 1, 0}, {2, 0, 1, 0}});
    if (name == "Y3")
        return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 2, 1, 0}, {2, 3, 1, 1}, {0, 3, 1, 1}});
    if (name == "Y4")
        return graph(G, 4, {0, 0, 0, 0}, {{0, 1, 1, 0}, {1, 2, 1, 0}, {2, 3, 1, 0}, {0, 3, 0, 1}});
    if (name == "Y5")
        return graph(Q, 5, {0, 0, 0, 0, 0},
                     {{0, 1, 1, 0}, {1, 2, 1, 0}, {2, 3, 1, 0}, {0, 3, 1, 0}, {3, 4, 1, 0}});
    if (name == "Y6")
        return graph(Q, 6, {0, 0, 0, 0, 0, 0},
                     {{0, 1, 1, 0}, {2, 3, 1, 0}, {0, 3, 1, 0}, {3, 5, 1, 0}, {4, 5, 1, 0}});
    if (name == "Y7") {
        std::vector<Edge> es;
        for (int j = 0; j < 5; ++j) es.push_back({j, (j + 1) % 5, 1, 0});
        es.push_back({3, 5, 1, 0});
        return graph(Q, 6, {0, 0, 0, 0, 0, 0}, es);
    }
    if (name == "Y8") {
        std::vector<Edge> es;
        for (int j = 0; j < 4; ++j) es.push_back({j, j + 1, 1, 0});
        es.push_back({4, 0, 0, 1});
        es.push_back({3, 5, 1, 0});
        return graph(G, 6, {0, 0, 0, 0, 0, 0}, es);
    }
    throw UsageError("unknown catalog graph: " + name);
}

}  // namespace

HermitianMatrix build_graph(const std::string& name, std::optional<int> k) {
    if (name == "T2k") return build_T2k(Ring::Rational, k.value_or(0), false);
    if (name == "Ti2k") return build_T2k(Ring::Gaussian, k.value_or(0), true);
    if (name == "Tw2k") return build_T2k(Ring::Eisenstein, k.value_or(0), true);
    if (name == "C2k") return build_C2k(k.value_or(0));
    if (name == "C2kpp") return build_C2kpp(Ring::Rational, k.value_or(0), false);
    if (name == "C2kpm") return build_C2kpp(Ring::Rational, k.value_or(0), true);
    if (name == "C2k1") return build_C2k1(k.value_or(0));
    if (k.has_value()) throw UsageError("graph " + name + " does not take a parameter");
    const auto sp = sporadic_names();
    if (std::find(sp.begin(), sp.end(), name) != sp.end()) return build_sporadic(name);
    return build_named_small(name);
}

bool has_pattern(const std::string& name) {
    static const std::vector<std::string> names = {"X1", "X2", "X3", "X5", "X8", "Y1", "Y9", "Y10"};
    return std::find(names.begin(), names.end(), name) != names.end();
}

GraphPattern build_pattern(const std::string& name) {
    using PC = PatternCharge;
    using PE = PatternEdge;
    const PC any{PC::Any, 0};
    auto exact = [](std::int64_t c) { return PC{PC::Exact, c}; };
    const PE zero{PE::Zero, 0};
    const PE edge{PE::AnyNonzero, 0};
    auto ne = [](std::int64_t w) { return PE{PE::NormEquals, w}; };
    // upper-triangle edge order for n vertices: (01)(02)...(0,n-1)(12)...
    if (name == "X1")  // chordless 4-path, any weights, one vertex pinned to charge +1
        return GraphPattern(4, {any, exact(1), any, any}, {edge, zero, zero, edge, zero, edge});
    if (name == "X2")  // chordless 4-path with a norm-2 middle edge
        return GraphPattern(4, {any, any, any, any}, {edge, zero, zero, ne(2), zero, edge});
    if (name == "X3") return GraphPattern(2, {exact(1), exact(-1)}, {edge});
    if (name == "X5") return GraphPattern(3, {exact(1), exact(1), any}, {edge, zero, edge});
    if (name == "X8") return GraphPattern(3, {exact(1), any, any}, {ne(2), zero, edge});
    if (name == "Y1")  // triangle with at most one charged vertex
        return GraphPattern(3, {exact(0), any, exact(0)}, {edge, edge, edge});
    if (name == "Y9")
        return GraphPattern(5, {exact(1), any, any, any, any},
                            {ne(1), zero, zero, zero, ne(1), ne(1), zero, zero, ne(1), zero});
    if (name == "Y10")
        return GraphPattern(5, {any, any, any, any, any},
                            {ne(2), zero, zero, zero, ne(1), ne(1), zero, zero, ne(1), zero});
    throw UsageError("unknown pattern: " + name);
}

std::vector<std::string> sporadic_names() {
    return {"S1",  "S2",  "S2dag",    "S4",     "S4dag", "S4ddag", "S5",  "S6",  "S6dag", "S7",
            "S8",  "S8p", "S8dag", "S8dagdag", "S8ddag", "S10",    "S12", "S14", "S16"};
}

std::vector<FamilyInfo> families() {
    return {{"T2k", 3}, {"Ti2k", 3}, {"Tw2k", 3}, {"C2k", 2}, {"C2kpp", 2}, {"C2kpm", 2}, {"C2k1", 1}};
}

std::vector<Ring> maximal_rings(const std::string& name) {
    static const std::map<std::string, std::vector<Ring>> table = {
        {"S1", {Ring::Gaussian, Ring::Eisenstein}},
        {"S2", {Ring::Gaussian, Ring::Eisenstein}},
        {"S2dag", {Ring::Eisenstein}},
        {"S4", {Ring::Gaussian}},
        {"S4dag", {Ring::Gaussian}},
        {"S4ddag", {Ring::Eisenstein}},
        {"S5", {Ring::Eisenstein}},
        {"S6", {Ring::Eisenstein}},
        {"S6dag", {Ring::Eisenstein}},
        {"S7", {Ring::Gaussian, Ring::Eisenstein}},
        {"S8", {Ring::Gaussian, Ring::Eisenstein}},
        {"S8p", {Ring::Gaussian, Ring::Eisenstein}},
        {"S8dag", {Ring::Gaussian}},
        {"S8dagdag", {Ring::Gaussian}},
        {"S8ddag", {Ring::Gaussian}},
        {"S10", {Ring::Eisenstein}},
        {"S12", {Ring::Eisenstein}},
        {"S14", {Ring::Gaussian, Ring::Eisenstein}},
        {"S16", {Ring::Gaussian, Ring::Eisenstein}},
        {"T2k", {Ring::Gaussian, Ring::Eisenstein}},
        {"Ti2k", {Ring::Gaussian}},
        {"Tw2k", {Ring::Eisenstein}},
        {"C2k", {Ring::Gaussian}},
        {"C2kpp", {Ring::Gaussian, Ring::Eisenstein}},
        {"C2kpm", {Ring::Gaussian, Ring::Eisenstein}},
        {"C2k1", {Ring::Gaussian}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw UsageError("not a maximal catalog graph: " + name);
    return it->second;
}

std::vector<std::string> type1_names() {
    return {"TI1", "TI2", "TI3", "TI4", "TI5", "TI6", "TI7", "TI8", "TI9", "X4"};
}

std::vector<std::string> type2_names() { return {"TII1", "TII2", "TII3", "TII4", "TII5"}; }

bool verify_maximal(const HermitianMatrix& A, std::int64_t column_norm_cap) {
    const int n = A.size();
    if (n >= kMaxVertices) throw CapacityError("verify_maximal: no room for an extra vertex");
    const Ring r = A.ring();
    std::vector<std::int64_t> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = degree(A, v);
    for (std::int64_t x : {0, 1, -1}) {
        // a cyclotomic supermatrix has every vertex degree at most 4 (the
        // degrees are diagonal entries of the squared matrix), so only
        // columns with total norm <= 4 - x^2 can produce one
        const std::int64_t budget = 4 - x * x;
        std::vector<RingElement> alphabet;
        for (std::int64_t lvl = 1; lvl <= std::min<std::int64_t>(column_norm_cap, budget); ++lvl)
            for (const auto& e : elements_of_norm(r, lvl)) alphabet.push_back(e);
        if (alphabet.empty()) continue;
        for (const auto& col : generate_columns(r, n, alphabet, budget)) {
            bool fits = true;
            for (int v = 0; v < n && fits; ++v) {
                const std::int64_t w = norm_of(col[v]);
                if (w && degs[v] + w > 4) fits = false;
            }
            if (!fits) continue;
            HermitianMatrix B = extend(A, VertexAddition{col, x});
            if (is_connected(B) && is_cyclotomic_matrix(B)) return false;
        }
    }
    return true;
}

std::vector<HermitianMatrix> list_seeds(const std::string& search_name) {
    auto g = [](const std::string& n) { return as_ring(build_graph(n), Ring::Gaussian); };
    auto e = [](const std::string& n) { return as_ring(build_graph(n), Ring::Eisenstein); };
    if (search_name == "weight2-zi") return {g("WH4")};
    if (search_name == "weight2-zw") return {build_graph("WH4w")};
    if (search_name == "weight2-charged-zi") return {g("WH2"), g("WH3")};
    if (search_name == "triple-charged-triangle-zi") return {g("TC1"), g("TC2")};
    if (search_name == "triple-charged-triangle-zw") return {e("TC1"), e("TC2")};
    if (search_name == "single-charged-triangle-zi") return {g("SC1")};
    if (search_name == "single-charged-triangle-zw") return {e("SC1"), build_graph("SC2")};
    if (search_name == "uncharged-triangle-zi") return {g("UT1"), build_graph("UT2g")};
    if (search_name == "uncharged-triangle-zw") return {e("UT1"), build_graph("UT2e")};
    if (search_name == "double-charged-triangle-zi") return {g("DC1"), build_graph("DC2")};
    if (search_name == "double-charged-triangle-zw") return {e("DC1")};
    if (search_name == "uncharged-trianglefree-zi")
        return {g("UTF1"), g("UTF2"), g("UTF3"), g("UTF4"), build_graph("UTF5g"), build_graph("UTF6g")};
    if (search_name == "uncharged-trianglefree-zw")
        return {e("UTF1"), e("UTF2"), e("UTF3"), e("UTF4"), build_graph("UTF5e"), build_graph("UTF6e")};
    if (search_name == "charged-trianglefree-zi") return {g("CP0"), g("CPP"), g("CPM")};
    if (search_name == "charged-trianglefree-zw") return {e("CP0"), e("CPP"), e("CPM")};
    if (search_name == "supersporadic-zi") return {g("YA1"), g("YA2"), g("YA3")};
    if (search_name == "supersporadic-zw") return {e("YA1"), e("YA2"), e("YA3")};
    throw UsageError("unknown registered search: " + search_name);
}

std::vector<std::string> seeded_search_names() {
    return {"weight2-zi",
            "weight2-zw",
            "weight2-charged-zi",
            "triple-charged-triangle-zi",
            "triple-charged-triangle-zw",
            "single-charged-triangle-zi",
            "single-charged-triangle-zw",
            "uncharged-triangle-zi",
            "uncharged-triangle-zw",
            "double-charged-triangle-zi",
            "double-charged-triangle-zw",
            "uncharged-trianglefree-zi",
            "uncharged-trianglefree-zw",
            "charged-trianglefree-zi",
            "charged-trianglefree-zw",
            "supersporadic-zi",
            "supersporadic-zw"};
}

}  // namespace catalog
}  // namespace cyclograph
