#pragma once

#include <stdexcept>
#include <vector>

#include "cmreg/groebner.hpp"
#include "cmreg/module.hpp"

namespace cmreg {

// A graded module presented as the cokernel of a matrix.
using GradedPresentation = GradedMatrix;

// Raised when the filter-regular search runs out of candidates, typically
// over a small prime field.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an iterative saturation does not stabilize within its cap.
class SaturationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Presentation of S/I for homogeneous ideal generators (zeros are dropped).
GradedPresentation ideal_presentation(const RingPtr& ring,
                                      const std::vector<Polynomial>& generators);

// Matrix whose image is ker(m), with minimal generators ordered by degree.
GradedMatrix syzygy_kernel(const GradedMatrix& m);

// Minimal homogeneous generating subset, chosen greedily in degree order.
std::vector<ModuleVector> minimal_generators(const ModuleSpace& space,
                                             std::vector<ModuleVector> generators);

// Same cokernel, with no unit entries and no redundant relations.
GradedPresentation minimize_presentation(const GradedMatrix& m);

// Presentation of (im z + im b) / im b, where z and b share a target and
// the source of z indexes the generators.
GradedPresentation subquotient_presentation(const GradedMatrix& z,
                                            const GradedMatrix& b);

// Minimal generators (as matrix columns) of (im q :_F ideal) inside the
// target F of q.
GradedMatrix colon(const GradedMatrix& q, const std::vector<Polynomial>& ideal);

// im small is contained in im big (same target).
bool image_contains(const GradedMatrix& big, const GradedMatrix& small);

// Generators of the R_+-saturation of im p inside the target of p.
GradedMatrix saturation(const GradedPresentation& p, int max_steps = 64);

// Presentation of the R_+-torsion submodule of coker(p).
GradedPresentation torsion_submodule(const GradedPresentation& p, int max_steps = 64);

// Presentation of coker(p) / x coker(p).
GradedPresentation quotient_by_form(const GradedPresentation& p, const Polynomial& x);

// Presentation of (0 :_{coker p} x).
GradedPresentation annihilator_of_form(const GradedPresentation& p, const Polynomial& x);

// x is a non-zerodivisor on M / Gamma(M), M = coker(p). Requires x linear.
bool is_filter_regular(const Polynomial& x, const GradedPresentation& p);

// First linear form that is filter-regular on p and every companion:
// coordinate forms first, then combinations with coefficients in
// {1, ..., budget}. Throws SearchExhausted after `budget` rounds.
Polynomial find_filter_regular(const GradedPresentation& p,
                               const std::vector<GradedPresentation>& companions = {},
                               int search_budget = 4);

}  // namespace cmreg
