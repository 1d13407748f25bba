#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclograph/errors.hpp"

namespace cyclograph {

// The three quadratic integer rings: Z, Z[i] (theta = i, theta^2 = -1) and
// Z[w] (theta = w = 1/2 + sqrt(-3)/2, theta^2 = theta - 1).
enum class Ring : std::uint8_t { Rational, Gaussian, Eisenstein };

const char* ring_name(Ring r);
Ring parse_ring(std::string_view s);  // "rational" | "gaussian" | "eisenstein"

// An element a + b*theta with exact 64-bit components. All arithmetic is
// overflow-checked; searched matrices keep |a|, |b| <= 2 so headroom is large.
struct RingElement {
    std::int64_t a = 0;
    std::int64_t b = 0;
    Ring ring = Ring::Rational;

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_real() const { return b == 0; }
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement make_elem(Ring r, std::int64_t a, std::int64_t b = 0);

RingElement add(const RingElement& x, const RingElement& y);
RingElement sub(const RingElement& x, const RingElement& y);
RingElement mul(const RingElement& x, const RingElement& y);
RingElement neg(const RingElement& x);
RingElement conj(const RingElement& x);
std::int64_t norm_of(const RingElement& x);

// Norm-1 elements: 4 for Gaussian, 6 for Eisenstein, 2 for Rational.
const std::vector<RingElement>& units(Ring r);

// The level set L_k = { x : x*conj(x) = k }, sorted by elem_less. Enumerates
// |a|, |b| <= ceil(2*sqrt(k)), which covers both norm forms.
std::vector<RingElement> elements_of_norm(Ring r, std::int64_t k);

// Total order used for canonical choices everywhere: (a, b) lexicographic.
bool elem_less(const RingElement& x, const RingElement& y);

// Text notation: "a", "a+bi", "a+bw" with signs, coefficient 1 elided
// (e.g. "-1+2w", "i", "3-2i"). Printer output always parses back exactly.
std::string to_string(const RingElement& x);
RingElement parse_element(Ring r, std::string_view tok);

}  // namespace cyclograph
