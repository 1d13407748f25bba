#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "cyclograph/matrix.hpp"

namespace cyclograph {

// Integer polynomial, coefficients ascending by degree, no trailing zeros
// (the zero polynomial has an empty coefficient vector).
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial constant(long v);
    static IntPolynomial from_int_coeffs(const std::vector<long>& ascending);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const mpz_class& coeff(int k) const;                            // 0 beyond degree
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    std::vector<mpz_class> c_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial derivative(const IntPolynomial& p);
mpz_class eval_at_int(const IntPolynomial& p, long x);

// Text format: ascending coefficients, whitespace separated.
std::string to_text(const IntPolynomial& p);
IntPolynomial poly_from_text(std::string_view text);

// chi_A(x) = det(xI - A), computed from exact power traces and Newton's
// identities. Throws ComputationError if an exactness check fails.
IntPolynomial char_poly(const HermitianMatrix& A);

// Independent route: evaluate det(xI - A) at x = 0..n by fraction-free
// Bareiss elimination over the ring, then Lagrange-interpolate.
IntPolynomial char_poly_interpolation(const HermitianMatrix& A);

// R(z) = z^n * chi(z + 1/z): substitutes the basis z^j + z^-j exactly.
// Output is palindromic of degree 2n for monic chi of degree n.
IntPolynomial reciprocal_transform(const IntPolynomial& chi);

// Number of distinct real roots of p in the closed interval [lo, hi],
// by exact Sturm sequences over the rationals.
int count_roots_in_interval(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi);

// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Yun decomposition: list of (factor, multiplicity), factors squarefree.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Every root of chi_A lies in [-2, 2]; decided exactly.
bool is_cyclotomic_matrix(const HermitianMatrix& A);

struct MahlerResult {
    double value = 1.0;
    double error_bound = 0.0;
    bool is_exactly_one = false;
};

// M(p) = |lead| * prod max(1, |root|). The value comes from Aberth-Ehrlich
// root finding on squarefree factors; is_exactly_one is decided exactly
// (trivial-factor peeling plus the inverse z+1/z transform and a Sturm count).
MahlerResult mahler_measure(const IntPolynomial& p);

MahlerResult mahler_of_matrix(const HermitianMatrix& A);

// Exact test: |lead| = 1 and all roots on or inside the unit circle
// (equivalently p is z^k times a product of cyclotomic polynomials).
bool mahler_is_one(const IntPolynomial& p);

// Pruning oracle for searches: published lower bounds on M(R_A) keyed on
// entry-size thresholds. Advisory; never replaces the exact tests.
std::optional<double> large_entry_reject(const HermitianMatrix& A);

}  // namespace cyclograph
