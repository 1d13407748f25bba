#include "cyclograph/ring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace cyclograph {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("ring element addition overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("ring element subtraction overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("ring element multiplication overflow");
    return r;
}

void require_same_ring(const RingElement& x, const RingElement& y) {
    if (x.ring != y.ring) throw UsageError("ring mismatch between operands");
}

}  // namespace

const char* ring_name(Ring r) {
    switch (r) {
        case Ring::Rational: return "rational";
        case Ring::Gaussian: return "gaussian";
        case Ring::Eisenstein: return "eisenstein";
    }
    return "?";
}

Ring parse_ring(std::string_view s) {
    if (s == "rational") return Ring::Rational;
    if (s == "gaussian") return Ring::Gaussian;
    if (s == "eisenstein") return Ring::Eisenstein;
    throw UsageError("unknown ring: " + std::string(s));
}

RingElement make_elem(Ring r, std::int64_t a, std::int64_t b) {
    if (r == Ring::Rational && b != 0) throw UsageError("rational ring element with nonzero theta part");
    return RingElement{a, b, r};
}

RingElement add(const RingElement& x, const RingElement& y) {
    require_same_ring(x, y);
    return RingElement{checked_add(x.a, y.a), checked_add(x.b, y.b), x.ring};
}

RingElement sub(const RingElement& x, const RingElement& y) {
    require_same_ring(x, y);
    return RingElement{checked_sub(x.a, y.a), checked_sub(x.b, y.b), x.ring};
}

RingElement mul(const RingElement& x, const RingElement& y) {
    require_same_ring(x, y);
    const std::int64_t ac = checked_mul(x.a, y.a);
    const std::int64_t bd = checked_mul(x.b, y.b);
    const std::int64_t ad = checked_mul(x.a, y.b);
    const std::int64_t bc = checked_mul(x.b, y.a);
    switch (x.ring) {
        case Ring::Rational:
            return RingElement{ac, 0, x.ring};
        case Ring::Gaussian:  // theta^2 = -1
            return RingElement{checked_sub(ac, bd), checked_add(ad, bc), x.ring};
        case Ring::Eisenstein:  // theta^2 = theta - 1
            return RingElement{checked_sub(ac, bd), checked_add(checked_add(ad, bc), bd), x.ring};
    }
    throw ComputationError("unreachable ring kind");
}

RingElement neg(const RingElement& x) {
    return RingElement{checked_sub(0, x.a), checked_sub(0, x.b), x.ring};
}

RingElement conj(const RingElement& x) {
    switch (x.ring) {
        case Ring::Rational: return x;
        case Ring::Gaussian: return RingElement{x.a, checked_sub(0, x.b), x.ring};
        case Ring::Eisenstein: return RingElement{checked_add(x.a, x.b), checked_sub(0, x.b), x.ring};
    }
    throw ComputationError("unreachable ring kind");
}

std::int64_t norm_of(const RingElement& x) {
    const std::int64_t aa = checked_mul(x.a, x.a);
    const std::int64_t bb = checked_mul(x.b, x.b);
    switch (x.ring) {
        case Ring::Rational: return aa;
        case Ring::Gaussian: return checked_add(aa, bb);
        case Ring::Eisenstein: return checked_add(checked_add(aa, bb), checked_mul(x.a, x.b));
    }
    throw ComputationError("unreachable ring kind");
}

const std::vector<RingElement>& units(Ring r) {
    static const std::vector<RingElement> rational = {
        {1, 0, Ring::Rational}, {-1, 0, Ring::Rational}};
    static const std::vector<RingElement> gaussian = {
        {1, 0, Ring::Gaussian}, {0, 1, Ring::Gaussian}, {-1, 0, Ring::Gaussian}, {0, -1, Ring::Gaussian}};
    static const std::vector<RingElement> eisenstein = {
        {1, 0, Ring::Eisenstein},  {0, 1, Ring::Eisenstein},  {-1, 1, Ring::Eisenstein},
        {-1, 0, Ring::Eisenstein}, {0, -1, Ring::Eisenstein}, {1, -1, Ring::Eisenstein}};
    switch (r) {
        case Ring::Rational: return rational;
        case Ring::Gaussian: return gaussian;
        case Ring::Eisenstein: return eisenstein;
    }
    throw ComputationError("unreachable ring kind");
}

std::vector<RingElement> elements_of_norm(Ring r, std::int64_t k) {
    if (k < 0) throw UsageError("elements_of_norm: k must be nonnegative");
    std::vector<RingElement> out;
    if (k == 0) {
        out.push_back(make_elem(r, 0, 0));
        return out;
    }
    const std::int64_t bound = 2 * static_cast<std::int64_t>(std::ceil(std::sqrt(double(k)))) + 1;
    for (std::int64_t a = -bound; a <= bound; ++a) {
        const std::int64_t bmax = (r == Ring::Rational) ? 0 : bound;
        for (std::int64_t b = -bmax; b <= bmax; ++b) {
            RingElement e{a, b, r};
            if (norm_of(e) == k) out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end(), elem_less);
    return out;
}

bool elem_less(const RingElement& x, const RingElement& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

std::string to_string(const RingElement& x) {
    const char sym = (x.ring == Ring::Eisenstein) ? 'w' : 'i';
    if (x.b == 0) return std::to_string(x.a);
    std::string s;
    if (x.a != 0) s += std::to_string(x.a);
    if (x.b > 0 && x.a != 0) s += '+';
    if (x.b == -1)
        s += '-';
    else if (x.b != 1)
        s += std::to_string(x.b);
    s += sym;
    return s;
}

RingElement parse_element(Ring r, std::string_view tok) {
    if (tok.empty()) throw UsageError("empty ring element token");
    const char sym = (r == Ring::Eisenstein) ? 'w' : 'i';
    // split into up to two signed terms; the theta term ends with sym
    std::int64_t a = 0, b = 0;
    size_t pos = 0;
    bool any = false;
    while (pos < tok.size()) {
        int sign = 1;
        if (tok[pos] == '+') {
            ++pos;
        } else if (tok[pos] == '-') {
            sign = -1;
            ++pos;
        }
        size_t start = pos;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        bool has_digits = pos > start;
        std::int64_t mag = 0;
        if (has_digits) {
            for (size_t i = start; i < pos; ++i) mag = mag * 10 + (tok[i] - '0');
        }
        if (pos < tok.size() && tok[pos] == sym) {
            ++pos;
            if (r == Ring::Rational) throw UsageError("theta term in rational element: " + std::string(tok));
            b += sign * (has_digits ? mag : 1);
        } else {
            if (!has_digits) throw UsageError("cannot parse ring element: " + std::string(tok));
            a += sign * mag;
        }
        any = true;
    }
    if (!any) throw UsageError("cannot parse ring element: " + std::string(tok));
    return make_elem(r, a, b);
}

}  // namespace cyclograph
