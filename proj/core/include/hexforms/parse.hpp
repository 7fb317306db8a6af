// Text grammars shared by the CLI and the structure-equation reader.
//   scalar:  signed terms, '*' and '/', '^' for powers, 'i' imaginary unit,
//            e.g. "2*a1*a11^2 - i*u2", "(1+i)*t/2"
//   form:    scalar-prefixed basis atoms e.g. "e123 - e156 + e246 - e345",
//            "2/t*e15", "0"
//   tuple:   "(e23,-e13,-e12,0,0,0)" one form per basis covector
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hexforms/kform.hpp"

namespace hexforms {

// Builds a ring, installing radical relations given as (name, square-text)
// pairs; squares are parsed in the same ring and may use earlier variables.
RingPtr make_ring(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& relations = {});

Frac parse_frac(const std::string& text, const RingPtr& ring);
Poly parse_poly(const std::string& text, const RingPtr& ring);

// expected_degree < 0 means "infer"; a bare 0 stays a zero form of the
// expected degree (or degree 0 when inferred).
KForm parse_form(const std::string& text, const RingPtr& ring, int expected_degree = -1);

std::array<KForm, kFrameDim> parse_structure_tuple(const std::string& text, const RingPtr& ring);

}  // namespace hexforms
