#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclograph/ring.hpp"

namespace cyclograph {

inline constexpr int kMaxVertices = 17;  // one above the search bound, so 16-vertex graphs can be tested for maximality

// An n x n conjugate-symmetric matrix over one of the three rings;
// equivalently a charged weighted graph. Diagonal entries (charges) are
// rational integers. Immutable in spirit: operations return fresh matrices.
class HermitianMatrix {
  public:
    HermitianMatrix(Ring ring, int n);

    // Validates Hermitian symmetry and real diagonal.
    static HermitianMatrix from_entries(Ring ring, int n, std::vector<RingElement> entries);

    int size() const { return n_; }
    Ring ring() const { return ring_; }

    const RingElement& at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }

    // Sets (i, j) and mirrors (j, i) = conj; diagonal values must be real.
    void set(int i, int j, const RingElement& v);

    std::int64_t charge(int v) const { return at(v, v).a; }

    friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

  private:
    Ring ring_;
    int n_;
    std::vector<RingElement> entries_;
};

// The column c and charge x specifying one new vertex of a supermatrix.
struct VertexAddition {
    std::vector<RingElement> column;
    std::int64_t charge = 0;
};

// Rows/columns restricted to `keep`, order preserved.
HermitianMatrix principal_submatrix(const HermitianMatrix& A, const std::vector<int>& keep);

// Connectivity of the underlying graph (edges where off-diagonal entries are nonzero).
bool is_connected(const HermitianMatrix& A);

// d_v = sum over u of |w(u,v)|^2. The diagonal term |w(v,v)|^2 is included by
// default; pass include_charge = false to sum over neighbours only.
std::int64_t degree(const HermitianMatrix& A, int v, bool include_charge = true);

// (n+1) x (n+1) supermatrix: last column = add.column over add.charge.
HermitianMatrix extend(const HermitianMatrix& A, const VertexAddition& add);

std::int64_t max_offdiag_norm(const HermitianMatrix& A);  // 0 when n = 1
std::int64_t max_charge_abs(const HermitianMatrix& A);

// File format: "ring: <name>" / "n: <int>" / n lines of n element tokens.
std::string to_text(const HermitianMatrix& A);
HermitianMatrix matrix_from_text(std::string_view text);

// Reinterpret a matrix with only rational-integer entries in another ring.
HermitianMatrix as_ring(const HermitianMatrix& A, Ring target);

}  // namespace cyclograph
