// Expression grammar for the two element families, plus seeded random
// elements for round-trip exercises.
//
// Shared conventions (matching the canonical renderers):
//   - products by `*` or juxtaposition, `^` for integer powers,
//   - scalar coefficients follow the scalar grammar of the owning domain
//     (numbers, named symbols, `i`, parentheses, `/`),
//   - sums with `+` and `-` at the top level.
//
// Sphere elements add the generators a, b, c, d, the function star(...), and
// the frame factors e+, e-, e+^e- (at most one per term; algebra letters
// written left of a frame factor are commuted across it, picking up the
// grading power of q).  Coordinate elements add the basis factors dx1..dx3;
// a repeated differential inside one term vanishes by antisymmetry.
//
// Syntax problems throw std::invalid_argument with the offending offset;
// violations of the frame grading throw std::domain_error.

#pragma once

#include <string_view>

#include "defcal/coordinate_calculus.hpp"
#include "defcal/rng.hpp"
#include "defcal/sphere_forms.hpp"

namespace defcal {

// Algebra-valued expression over the sphere scalar domain.
AlgElem parse_alg(std::string_view text);

// Frame-form expression; each frame coefficient must carry the grade that
// makes the total element grade zero (e+: -2, e-: +2, none/e+^e-: 0).
SphereForm parse_sphere_form(std::string_view text);

// Coordinate-form expression over dx1..dx<dim>.
CForm parse_cform(std::string_view text, int dim = 3);

// Seeded random elements whose rendered forms exercise the full grammar.
AlgElem sample_alg(SplitMix64& rng, int bound);
SphereForm sample_sphere_form(SplitMix64& rng, int bound);
CForm sample_cform(SplitMix64& rng, int dim = 3);

}  // namespace defcal
