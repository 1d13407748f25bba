#include "cyclograph/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <sstream>

namespace cyclograph {

namespace {

const mpz_class kZero = 0;

std::vector<mpz_class> trimmed(std::vector<mpz_class> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// ---- exact arithmetic on a + b*theta with big components ----

struct BigElem {
    mpz_class a, b;
};

BigElem big_from(const RingElement& e) { return {mpz_class(e.a), mpz_class(e.b)}; }

BigElem big_add(const BigElem& x, const BigElem& y) { return {x.a + y.a, x.b + y.b}; }
BigElem big_sub(const BigElem& x, const BigElem& y) { return {x.a - y.a, x.b - y.b}; }

BigElem big_mul(Ring r, const BigElem& x, const BigElem& y) {
    switch (r) {
        case Ring::Rational: return {x.a * y.a, 0};
        case Ring::Gaussian: return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
        case Ring::Eisenstein: return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    throw ComputationError("unreachable ring kind");
}

BigElem big_conj(Ring r, const BigElem& x) {
    switch (r) {
        case Ring::Rational: return x;
        case Ring::Gaussian: return {x.a, -x.b};
        case Ring::Eisenstein: return {x.a + x.b, -x.b};
    }
    throw ComputationError("unreachable ring kind");
}

mpz_class big_norm(Ring r, const BigElem& x) {
    switch (r) {
        case Ring::Rational: return x.a * x.a;
        case Ring::Gaussian: return x.a * x.a + x.b * x.b;
        case Ring::Eisenstein: return x.a * x.a + x.a * x.b + x.b * x.b;
    }
    throw ComputationError("unreachable ring kind");
}

bool big_is_zero(const BigElem& x) { return x.a == 0 && x.b == 0; }

// Exact division in the ring; throws if the quotient is not integral.
BigElem big_divexact(Ring r, const BigElem& x, const BigElem& d) {
    const mpz_class nd = big_norm(r, d);
    if (nd == 0) throw ComputationError("division by zero ring element");
    const BigElem num = big_mul(r, x, big_conj(r, d));
    BigElem q;
    if (!mpz_divisible_p(num.a.get_mpz_t(), nd.get_mpz_t()) ||
        !mpz_divisible_p(num.b.get_mpz_t(), nd.get_mpz_t()))
        throw ComputationError("inexact division in quadratic ring");
    mpz_divexact(q.a.get_mpz_t(), num.a.get_mpz_t(), nd.get_mpz_t());
    mpz_divexact(q.b.get_mpz_t(), num.b.get_mpz_t(), nd.get_mpz_t());
    return q;
}

using BigMat = std::vector<BigElem>;  // row-major n*n

BigMat big_matrix(const HermitianMatrix& A) {
    const int n = A.size();
    BigMat M(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[static_cast<size_t>(i) * n + j] = big_from(A.at(i, j));
    return M;
}

BigMat big_matmul(Ring r, const BigMat& X, const BigMat& Y, int n) {
    BigMat Z(static_cast<size_t>(n) * n, BigElem{0, 0});
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const BigElem& x = X[static_cast<size_t>(i) * n + k];
            if (big_is_zero(x)) continue;
            for (int j = 0; j < n; ++j) {
                const BigElem& y = Y[static_cast<size_t>(k) * n + j];
                if (big_is_zero(y)) continue;
                Z[static_cast<size_t>(i) * n + j] =
                    big_add(Z[static_cast<size_t>(i) * n + j], big_mul(r, x, y));
            }
        }
    }
    return Z;
}

}  // namespace

// ---------------- IntPolynomial ----------------

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(trimmed(std::move(coeffs))) {}

IntPolynomial IntPolynomial::constant(long v) {
    return IntPolynomial(std::vector<mpz_class>{mpz_class(v)});
}

IntPolynomial IntPolynomial::from_int_coeffs(const std::vector<long>& ascending) {
    std::vector<mpz_class> c(ascending.begin(), ascending.end());
    return IntPolynomial(std::move(c));
}

const mpz_class& IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
}

const mpz_class& IntPolynomial::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<mpz_class> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(p.coeffs().size() + q.coeffs().size() - 1, 0);
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial derivative(const IntPolynomial& p) {
    if (p.degree() <= 0) return IntPolynomial();
    std::vector<mpz_class> c(p.coeffs().size() - 1);
    for (size_t i = 1; i < p.coeffs().size(); ++i) c[i - 1] = p.coeffs()[i] * static_cast<long>(i);
    return IntPolynomial(std::move(c));
}

mpz_class eval_at_int(const IntPolynomial& p, long x) {
    mpz_class acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

std::string to_text(const IntPolynomial& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ' ';
        os << p.coeffs()[i].get_str();
    }
    if (p.is_zero()) os << '0';
    return os.str();
}

IntPolynomial poly_from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::vector<mpz_class> c;
    std::string tok;
    while (is >> tok) {
        try {
            c.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw UsageError("bad polynomial coefficient: " + tok);
        }
    }
    if (c.empty()) throw UsageError("empty polynomial");
    return IntPolynomial(std::move(c));
}

// ---------------- characteristic polynomial ----------------

IntPolynomial char_poly(const HermitianMatrix& A) {
    const int n = A.size();
    const Ring r = A.ring();
    const BigMat base = big_matrix(A);
    std::vector<mpz_class> traces(n + 1);  // traces[k] = tr(A^k)
    BigMat power = base;
    for (int k = 1; k <= n; ++k) {
        BigElem t{0, 0};
        for (int i = 0; i < n; ++i) t = big_add(t, power[static_cast<size_t>(i) * n + i]);
        if (t.b != 0) throw ComputationError("trace of a Hermitian power is not a rational integer");
        traces[k] = t.a;
        if (k < n) power = big_matmul(r, power, base, n);
    }
    // Newton's identities: k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<mpz_class> e(n + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpz_class s = 0;
        for (int i = 1; i <= k; ++i) {
            if (i % 2 == 1)
                s += e[k - i] * traces[i];
            else
                s -= e[k - i] * traces[i];
        }
        if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(k)))
            throw ComputationError("Newton identity division is not exact");
        mpz_divexact_ui(e[k].get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(k));
    }
    std::vector<mpz_class> c(n + 1);
    for (int k = 0; k <= n; ++k) c[n - k] = (k % 2 == 0) ? e[k] : mpz_class(-e[k]);
    IntPolynomial chi{std::move(c)};
    if (!chi.is_monic()) throw ComputationError("characteristic polynomial is not monic");
    return chi;
}

namespace {

// det of an n x n matrix over the ring by fraction-free Bareiss elimination
// with row pivoting (the ring is an integral domain, so divisions are exact).
BigElem bareiss_det(Ring r, BigMat M, int n) {
    int sign = 1;
    BigElem prev{1, 0};
    for (int k = 0; k + 1 < n; ++k) {
        if (big_is_zero(M[static_cast<size_t>(k) * n + k])) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!big_is_zero(M[static_cast<size_t>(i) * n + k])) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return BigElem{0, 0};
            for (int j = 0; j < n; ++j)
                std::swap(M[static_cast<size_t>(k) * n + j], M[static_cast<size_t>(pivot) * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigElem t = big_sub(big_mul(r, M[static_cast<size_t>(k) * n + k], M[static_cast<size_t>(i) * n + j]),
                                    big_mul(r, M[static_cast<size_t>(i) * n + k], M[static_cast<size_t>(k) * n + j]));
                M[static_cast<size_t>(i) * n + j] = big_divexact(r, t, prev);
            }
            M[static_cast<size_t>(i) * n + k] = BigElem{0, 0};
        }
        prev = M[static_cast<size_t>(k) * n + k];
    }
    BigElem d = M[static_cast<size_t>(n - 1) * n + (n - 1)];
    if (sign < 0) d = big_sub(BigElem{0, 0}, d);
    return d;
}

}  // namespace

IntPolynomial char_poly_interpolation(const HermitianMatrix& A) {
    const int n = A.size();
    const Ring r = A.ring();
    // evaluate det(xI - A) at x = 0..n and Lagrange-interpolate
    std::vector<mpq_class> ys(n + 1);
    for (int x = 0; x <= n; ++x) {
        BigMat M = big_matrix(A);
        for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
            for (size_t j = 0; j < static_cast<size_t>(n); ++j) {
                BigElem& e = M[i * n + j];
                e.a = -e.a;
                e.b = -e.b;
                if (i == j) e.a += x;
            }
        }
        BigElem d = bareiss_det(r, std::move(M), n);
        if (d.b != 0) throw ComputationError("det(xI - A) is not a rational integer");
        ys[x] = mpq_class(d.a);
    }
    // Newton's divided differences, then expand
    std::vector<mpq_class> dd = ys;
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / mpq_class(level);
    std::vector<mpq_class> poly(n + 1, mpq_class(0));  // ascending
    std::vector<mpq_class> basis(n + 1, mpq_class(0)); // prod (x - j), ascending
    basis[0] = 1;
    int blen = 1;
    for (int k = 0; k <= n; ++k) {
        for (int i = 0; i < blen; ++i) poly[i] += dd[k] * basis[i];
        if (k < n) {
            // basis *= (x - k)
            for (int i = blen; i >= 1; --i) basis[i] = basis[i - 1] - mpq_class(k) * basis[i];
            basis[0] = -mpq_class(k) * basis[0];
            ++blen;
        }
    }
    std::vector<mpz_class> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        mpq_class q = poly[i];
        q.canonicalize();
        if (q.get_den() != 1) throw ComputationError("interpolated characteristic polynomial is not integral");
        c[i] = q.get_num();
    }
    IntPolynomial chi{std::move(c)};
    if (!chi.is_monic()) throw ComputationError("interpolated characteristic polynomial is not monic");
    return chi;
}

// ---------------- reciprocal transform ----------------

IntPolynomial reciprocal_transform(const IntPolynomial& chi) {
    if (chi.is_zero()) throw UsageError("reciprocal transform of the zero polynomial");
    if (!chi.is_monic()) throw UsageError("reciprocal transform expects a monic polynomial");
    const int n = chi.degree();
    // Represent x^k as sum_j s[j] * (z^j + z^-j) + u, exactly.
    std::vector<mpz_class> s(n + 2, 0);
    mpz_class u = 1;  // x^0 = 1
    std::vector<mpz_class> D(n + 1, 0);
    mpz_class U = 0;
    for (int k = 0; k <= n; ++k) {
        const mpz_class& ck = chi.coeff(k);
        if (ck != 0) {
            for (int j = 1; j <= n; ++j) D[j] += ck * s[j];
            U += ck * u;
        }
        if (k == n) break;
        std::vector<mpz_class> ns(n + 2, 0);
        ns[1] = u + s[2];
        for (int j = 2; j <= n + 1; ++j) ns[j] = s[j - 1] + (j + 1 <= n + 1 ? s[j + 1] : mpz_class(0));
        u = 2 * s[1];
        s = std::move(ns);
    }
    std::vector<mpz_class> R(2 * n + 1, 0);
    R[n] = U;
    for (int j = 1; j <= n; ++j) {
        R[n + j] += D[j];
        R[n - j] += D[j];
    }
    return IntPolynomial(std::move(R));
}

// ---------------- integer polynomial gcd machinery ----------------

namespace {

using ZV = std::vector<mpz_class>;  // ascending, trimmed

ZV zv(const IntPolynomial& p) { return p.coeffs(); }

mpz_class content_of(const ZV& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// divide by content; make leading coefficient positive
ZV primitive(ZV p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return p;
    mpz_class g = content_of(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

// remainder of p by q over Q, scaled to a primitive integer polynomial
// with the SAME SIGN as the true rational remainder (Sturm needs signs).
ZV signed_primitive_rem(const ZV& p, const ZV& q) {
    std::vector<mpq_class> r(p.begin(), p.end());
    const int dq = static_cast<int>(q.size()) - 1;
    const mpq_class qlead(q.back());
    while (static_cast<int>(r.size()) - 1 >= dq) {
        const int dr = static_cast<int>(r.size()) - 1;
        mpq_class f = r.back() / qlead;
        for (int i = 0; i <= dq; ++i) r[dr - dq + i] -= f * mpq_class(q[i]);
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
    }
    if (r.empty()) return {};
    // clear denominators (positive scale), then divide by positive content
    mpz_class lcmden = 1;
    for (auto& c : r) {
        c.canonicalize();
        mpz_lcm(lcmden.get_mpz_t(), lcmden.get_mpz_t(), c.get_den().get_mpz_t());
    }
    ZV out(r.size());
    for (size_t i = 0; i < r.size(); ++i) out[i] = mpz_class(r[i] * mpq_class(lcmden));
    mpz_class g = content_of(out);
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

ZV gcd_zv(ZV a, ZV b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZV r = signed_primitive_rem(a, b);
        a = std::move(b);
        b = primitive(std::move(r));
    }
    return a;
}

// exact division of integer polynomials (throws if not exact)
ZV divexact_zv(const ZV& p, const ZV& d) {
    if (d.empty()) throw ComputationError("polynomial division by zero");
    std::vector<mpq_class> r(p.begin(), p.end());
    const int dd = static_cast<int>(d.size()) - 1;
    const mpq_class dlead(d.back());
    std::vector<mpq_class> q(p.size() >= d.size() ? p.size() - d.size() + 1 : 0, mpq_class(0));
    while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
        const int dr = static_cast<int>(r.size()) - 1;
        mpq_class f = r.back() / dlead;
        q[dr - dd] = f;
        for (int i = 0; i <= dd; ++i) r[dr - dd + i] -= f * mpq_class(d[i]);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (!r.empty()) throw ComputationError("polynomial division is not exact");
    ZV out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        q[i].canonicalize();
        if (q[i].get_den() != 1) throw ComputationError("polynomial quotient is not integral");
        out[i] = q[i].get_num();
    }
    return out;
}

ZV derivative_zv(const ZV& p) {
    if (p.size() <= 1) return {};
    ZV d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    return d;
}

int sign_at(const ZV& p, const mpq_class& t) {
    mpq_class acc = 0;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) acc = acc * t + mpq_class(p[k]);
    return sgn(acc);
}

}  // namespace

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw UsageError("squarefree part of the zero polynomial");
    if (p.degree() == 0) return IntPolynomial::constant(1);
    ZV a = primitive(zv(p));
    ZV g = gcd_zv(a, derivative_zv(a));
    if (g.size() <= 1) return IntPolynomial(std::move(a));
    return IntPolynomial(primitive(divexact_zv(a, g)));
}

namespace {

ZV subtract_zv(const ZV& x, const ZV& y) {
    ZV out(std::max(x.size(), y.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    for (size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw UsageError("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<IntPolynomial, int>> out;
    ZV a = primitive(zv(p));
    if (a.size() <= 1) return out;
    // Yun's algorithm; constants are dropped, factors come out primitive
    ZV da = derivative_zv(a);
    ZV g = gcd_zv(a, da);
    if (g.size() <= 1) {
        out.emplace_back(IntPolynomial(std::move(a)), 1);
        return out;
    }
    ZV c = divexact_zv(a, g);
    ZV d = subtract_zv(divexact_zv(da, g), derivative_zv(c));
    int i = 1;
    while (c.size() > 1) {
        ZV f = gcd_zv(c, d);
        if (f.size() > 1) out.emplace_back(IntPolynomial(ZV(f)), i);
        c = divexact_zv(c, f);
        d = subtract_zv(divexact_zv(d, f), derivative_zv(c));
        ++i;
    }
    return out;
}

// ---------------- Sturm root counting ----------------

namespace {

std::vector<ZV> sturm_chain(const ZV& q) {
    std::vector<ZV> chain;
    chain.push_back(q);
    ZV d = primitive(derivative_zv(q));
    if (d.empty()) return chain;
    chain.push_back(d);
    while (true) {
        const ZV& f = chain[chain.size() - 2];
        const ZV& g = chain.back();
        ZV r = signed_primitive_rem(f, g);
        if (r.empty()) break;
        for (auto& cc : r) cc = -cc;
        chain.push_back(std::move(r));
        if (chain.back().size() == 1) break;
    }
    return chain;
}

int sign_changes(const std::vector<ZV>& chain, const mpq_class& t) {
    int changes = 0, prev = 0;
    for (const ZV& f : chain) {
        const int s = sign_at(f, t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// divide q (primitive) by (x - r), r a known rational root; primitive result
ZV deflate_root(const ZV& q, const mpq_class& r) {
    std::vector<mpq_class> work(q.begin(), q.end());
    std::vector<mpq_class> quot(work.size() - 1);
    mpq_class carry = 0;
    for (int i = static_cast<int>(work.size()) - 1; i >= 1; --i) {
        carry = work[i] + carry * r;
        quot[i - 1] = carry;
    }
    mpz_class lcmden = 1;
    for (auto& c : quot) {
        c.canonicalize();
        mpz_lcm(lcmden.get_mpz_t(), lcmden.get_mpz_t(), c.get_den().get_mpz_t());
    }
    ZV out(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) out[i] = mpz_class(quot[i] * mpq_class(lcmden));
    return primitive(std::move(out));
}

}  // namespace

int count_roots_in_interval(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
    if (p.is_zero()) throw UsageError("root counting on the zero polynomial");
    if (lo > hi) throw UsageError("root counting: lo > hi");
    ZV q = zv(squarefree_part(p));
    if (q.size() <= 1) return 0;
    int count = 0;
    if (sign_at(q, lo) == 0) {
        ++count;
        q = deflate_root(q, lo);
    }
    if (lo != hi && !q.empty() && q.size() > 1 && sign_at(q, hi) == 0) {
        ++count;
        q = deflate_root(q, hi);
    }
    if (lo == hi || q.size() <= 1) return count;
    const auto chain = sturm_chain(q);
    count += sign_changes(chain, lo) - sign_changes(chain, hi);
    return count;
}

bool is_cyclotomic_matrix(const HermitianMatrix& A) {
    // cheap exact rejection: every vertex degree is a diagonal entry of A^2,
    // so eigenvalues in [-2,2] force degree(v) <= 4
    for (int v = 0; v < A.size(); ++v)
        if (degree(A, v) > 4) return false;
    IntPolynomial sf = squarefree_part(char_poly(A));
    return count_roots_in_interval(sf, mpq_class(-2), mpq_class(2)) == sf.degree();
}

// ---------------- exact Mahler-one test ----------------

bool mahler_is_one(const IntPolynomial& p) {
    if (p.is_zero()) throw UsageError("Mahler measure of the zero polynomial");
    ZV c = zv(p);
    // strip z^k
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    c.assign(c.begin() + low, c.end());
    mpz_class lead = c.back();
    if (lead != 1 && lead != -1) return false;
    if (c.size() == 1) return true;
    if (c.front() != 1 && c.front() != -1) return false;
    // peel roots at +-1
    auto eval_pm = [&](long x) {
        mpz_class acc = 0;
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) acc = acc * x + c[k];
        return acc;
    };
    for (long root : {1L, -1L}) {
        while (c.size() > 1 && eval_pm(root) == 0) c = deflate_root(c, mpq_class(root));
    }
    if (c.size() == 1) return true;
    // roots all on the unit circle force a palindromic coefficient list
    ZV rev(c.rbegin(), c.rend());
    if (rev != c) return false;
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg % 2 != 0) throw ComputationError("palindromic polynomial of odd degree after peeling");
    const int m = deg / 2;
    // p(z) = z^m f(z + 1/z): f = c[m] + sum_{j>=1} c[m+j] V_j,
    // V_1 = x, V_2 = x^2 - 2, V_j = x V_{j-1} - V_{j-2}
    std::vector<mpz_class> f(m + 1, 0);
    f[0] = c[m];
    std::vector<mpz_class> Vprev = {2};      // V_0 = 2
    std::vector<mpz_class> Vcur = {0, 1};    // V_1 = x
    for (int j = 1; j <= m; ++j) {
        for (size_t i = 0; i < Vcur.size(); ++i) f[i] += c[m + j] * Vcur[i];
        if (j == m) break;
        std::vector<mpz_class> Vnext(Vcur.size() + 1, 0);
        for (size_t i = 0; i < Vcur.size(); ++i) Vnext[i + 1] = Vcur[i];
        for (size_t i = 0; i < Vprev.size(); ++i) Vnext[i] -= Vprev[i];
        Vprev = std::move(Vcur);
        Vcur = std::move(Vnext);
    }
    IntPolynomial fp{std::move(f)};
    IntPolynomial sf = squarefree_part(fp);
    return count_roots_in_interval(sf, mpq_class(-2), mpq_class(2)) == sf.degree();
}

// ---------------- Aberth-Ehrlich root finding ----------------

namespace {

struct RootBox {
    std::complex<double> z;
    double radius;
};

std::vector<RootBox> aberth_squarefree(const std::vector<double>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<RootBox> out;
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back({std::complex<double>(-a[0] / a[1], 0.0), 1e-15 * (1.0 + std::abs(a[0] / a[1]))});
        return out;
    }
    auto horner = [&](std::complex<double> z, std::complex<double>& p, std::complex<double>& dp) {
        p = a[n];
        dp = 0.0;
        for (int k = n - 1; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + a[k];
        }
    };
    double maxratio = 0.0;
    for (int k = 0; k < n; ++k) maxratio = std::max(maxratio, std::abs(a[k] / a[n]));
    const double R = 1.0 + maxratio;
    double r0 = std::pow(std::abs(a[0] / a[n]), 1.0 / n);
    r0 = std::min(std::max(r0, 0.25), R);
    std::vector<std::complex<double>> z(n);
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * M_PI * (i + 0.35) / n + 0.4;
        z[i] = std::polar(r0 * (1.0 + 0.02 * i / n), th);
    }
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> p, dp;
            horner(z[i], p, dp);
            if (std::abs(p) == 0.0) continue;
            std::complex<double> N = (dp != 0.0) ? p / dp : std::complex<double>(1e-3, 1e-3);
            std::complex<double> S = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) S += 1.0 / (z[i] - z[j]);
            std::complex<double> denom = 1.0 - N * S;
            std::complex<double> w = (std::abs(denom) > 1e-300) ? N / denom : N;
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    for (int i = 0; i < n; ++i) {
        std::complex<double> p, dp;
        horner(z[i], p, dp);
        std::complex<double> prod = a[n];
        for (int j = 0; j < n; ++j)
            if (j != i) prod *= (z[i] - z[j]);
        const double w = (std::abs(prod) > 1e-300) ? std::abs(p) / std::abs(prod) : 1e-6;
        out.push_back({z[i], n * w});
    }
    return out;
}

}  // namespace

MahlerResult mahler_measure(const IntPolynomial& p) {
    if (p.is_zero()) throw UsageError("Mahler measure of the zero polynomial");
    MahlerResult res;
    res.is_exactly_one = mahler_is_one(p);
    if (res.is_exactly_one) {
        res.value = 1.0;
        res.error_bound = 0.0;
        return res;
    }
    double value = std::abs(p.leading().get_d());
    double rel_err = 0.0;
    int total_deg = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        if (factor.degree() <= 0) continue;
        std::vector<double> a(factor.coeffs().size());
        for (size_t i = 0; i < a.size(); ++i) {
            a[i] = factor.coeffs()[i].get_d();
            if (!std::isfinite(a[i])) throw ComputationError("coefficients too large for double root finding");
        }
        for (const auto& box : aberth_squarefree(a)) {
            const double m = std::abs(box.z);
            for (int t = 0; t < mult; ++t) value *= std::max(1.0, m);
            rel_err += mult * box.radius / std::max(1.0, m);
            total_deg += mult;
        }
    }
    res.value = value;
    res.error_bound = value * std::min(1.0, rel_err) + 16.0 * std::numeric_limits<double>::epsilon() * value * std::max(1, total_deg);
    return res;
}

MahlerResult mahler_of_matrix(const HermitianMatrix& A) {
    if (is_cyclotomic_matrix(A)) return MahlerResult{1.0, 0.0, true};
    MahlerResult res = mahler_measure(reciprocal_transform(char_poly(A)));
    res.is_exactly_one = false;
    return res;
}

std::optional<double> large_entry_reject(const HermitianMatrix& A) {
    const std::int64_t w = max_offdiag_norm(A);
    const std::int64_t x = max_charge_abs(A);
    if (w > 4 || x > 2) return (std::sqrt(5.0) + 1.0) / 2.0;
    if (w >= 3 || x >= 2) return 1.556;
    return std::nullopt;
}

}  // namespace cyclograph
