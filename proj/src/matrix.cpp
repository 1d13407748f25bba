#include "cyclograph/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cyclograph {

HermitianMatrix::HermitianMatrix(Ring ring, int n) : ring_(ring), n_(n) {
    if (n < 1) throw UsageError("matrix needs at least one vertex");
    if (n > kMaxVertices) throw CapacityError("matrix larger than " + std::to_string(kMaxVertices) + " vertices");
    entries_.assign(static_cast<size_t>(n) * n, make_elem(ring, 0, 0));
}

HermitianMatrix HermitianMatrix::from_entries(Ring ring, int n, std::vector<RingElement> entries) {
    HermitianMatrix A(ring, n);
    if (entries.size() != static_cast<size_t>(n) * n) throw UsageError("entry count does not match n*n");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const RingElement& e = entries[static_cast<size_t>(i) * n + j];
            if (e.ring != ring) throw UsageError("matrix entry from a different ring");
            if (i == j && e.b != 0) throw UsageError("diagonal entries must be rational integers");
            if (i < j && !(entries[static_cast<size_t>(j) * n + i] == conj(e)))
                throw UsageError("matrix is not Hermitian");
        }
    }
    A.entries_ = std::move(entries);
    return A;
}

void HermitianMatrix::set(int i, int j, const RingElement& v) {
    if (v.ring != ring_) throw UsageError("matrix entry from a different ring");
    if (i == j && v.b != 0) throw UsageError("diagonal entries must be rational integers");
    entries_[static_cast<size_t>(i) * n_ + j] = v;
    if (i != j) entries_[static_cast<size_t>(j) * n_ + i] = conj(v);
}

HermitianMatrix principal_submatrix(const HermitianMatrix& A, const std::vector<int>& keep) {
    if (keep.empty()) throw UsageError("principal_submatrix: empty vertex subset");
    const int m = static_cast<int>(keep.size());
    HermitianMatrix B(A.ring(), m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j) B.set(i, j, A.at(keep[i], keep[j]));
    return B;
}

bool is_connected(const HermitianMatrix& A) {
    const int n = A.size();
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (!seen[u] && u != v && !A.at(v, u).is_zero()) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

std::int64_t degree(const HermitianMatrix& A, int v, bool include_charge) {
    if (v < 0 || v >= A.size()) throw UsageError("degree: vertex out of range");
    std::int64_t d = 0;
    for (int u = 0; u < A.size(); ++u) {
        if (u == v && !include_charge) continue;
        d += norm_of(A.at(u, v));
    }
    return d;
}

HermitianMatrix extend(const HermitianMatrix& A, const VertexAddition& add) {
    const int n = A.size();
    if (static_cast<int>(add.column.size()) != n) throw UsageError("extend: column length must equal n");
    bool nonzero = false;
    for (const auto& c : add.column) nonzero |= !c.is_zero();
    if (!nonzero) throw UsageError("extend: addition column must be nonzero");
    HermitianMatrix B(A.ring(), n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) B.set(i, j, A.at(i, j));
    for (int i = 0; i < n; ++i) {
        if (add.column[i].ring != A.ring()) throw UsageError("extend: column entry from a different ring");
        B.set(i, n, add.column[i]);
    }
    B.set(n, n, make_elem(A.ring(), add.charge));
    return B;
}

std::int64_t max_offdiag_norm(const HermitianMatrix& A) {
    std::int64_t m = 0;
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < i; ++j) m = std::max(m, norm_of(A.at(i, j)));
    return m;
}

std::int64_t max_charge_abs(const HermitianMatrix& A) {
    std::int64_t m = 0;
    for (int v = 0; v < A.size(); ++v) m = std::max(m, std::abs(A.charge(v)));
    return m;
}

std::string to_text(const HermitianMatrix& A) {
    std::ostringstream os;
    os << "ring: " << ring_name(A.ring()) << "\n";
    os << "n: " << A.size() << "\n";
    for (int i = 0; i < A.size(); ++i) {
        for (int j = 0; j < A.size(); ++j) {
            if (j) os << ' ';
            os << to_string(A.at(i, j));
        }
        os << "\n";
    }
    return os.str();
}

HermitianMatrix matrix_from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string tag, ringword;
    if (!(is >> tag >> ringword) || tag != "ring:") throw UsageError("matrix file: expected 'ring: <name>'");
    const Ring ring = parse_ring(ringword);
    int n = 0;
    if (!(is >> tag >> n) || tag != "n:" || n < 1) throw UsageError("matrix file: expected 'n: <count>'");
    if (n > kMaxVertices) throw CapacityError("matrix file: n exceeds capacity");
    std::vector<RingElement> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    std::string tok;
    for (int k = 0; k < n * n; ++k) {
        if (!(is >> tok)) throw UsageError("matrix file: missing entries");
        entries.push_back(parse_element(ring, tok));
    }
    return HermitianMatrix::from_entries(ring, n, std::move(entries));
}

HermitianMatrix as_ring(const HermitianMatrix& A, Ring target) {
    if (A.ring() == target) return A;
    HermitianMatrix B(target, A.size());
    for (int i = 0; i < A.size(); ++i) {
        for (int j = 0; j <= i; ++j) {
            const RingElement& e = A.at(i, j);
            if (!e.is_real()) throw UsageError("as_ring: matrix has entries outside the rational integers");
            B.set(i, j, make_elem(target, e.a));
        }
    }
    return B;
}

}  // namespace cyclograph
