#pragma once

#include <vector>

#include "cmreg/polynomial.hpp"

namespace cmreg {

// Graded free module F = (+)_j S(-a_j): generator e_j lives in degree a_j.
struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
};

struct ModuleTerm {
  Monomial monomial;
  int component = 0;
  Scalar coefficient;
};

// Twisted free module together with a term order on its terms.
//
// Terms compare by block (higher block wins), then by degree
// deg(m) + twist[component], then by degrevlex on the monomial, then by
// component (lower index wins). With a single block this is the
// degree-then-term-over-position order; several blocks give an elimination
// order for syzygy and colon computations.
class ModuleSpace {
 public:
  ModuleSpace(RingPtr ring, std::vector<int> twists, std::vector<int> blocks = {});
  explicit ModuleSpace(const FreeModule& f) : ModuleSpace(f.ring, f.twists) {}

  const PolyRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  int rank() const { return static_cast<int>(twists_.size()); }
  const std::vector<int>& twists() const { return twists_; }
  int twist(int component) const { return twists_[component]; }
  int block(int component) const { return blocks_[component]; }

  int degree(const Monomial& m, int component) const {
    return m.degree() + twists_[component];
  }
  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const;
  int compare(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a.monomial, a.component, b.monomial, b.component);
  }

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  std::vector<int> blocks_;
};

// Element of a ModuleSpace: terms sorted by decreasing order with nonzero
// coefficients. The ordering is only meaningful relative to the space the
// vector was built in.
class ModuleVector {
 public:
  ModuleVector() = default;
  static ModuleVector from_terms(const ModuleSpace& space,
                                 std::vector<ModuleTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  std::vector<ModuleTerm>& mutable_terms() { return terms_; }
  const ModuleTerm& lead() const { return terms_.front(); }

  bool is_homogeneous(const ModuleSpace& space) const;
  // Degree of the leading term; requires a nonzero vector.
  int degree(const ModuleSpace& space) const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

 private:
  std::vector<ModuleTerm> terms_;
};

// f + c * m * g.
ModuleVector add_multiple(const ModuleSpace& space, const ModuleVector& f,
                          const Scalar& c, const Monomial& m,
                          const ModuleVector& g);
// Rescaled so that the leading coefficient is 1.
ModuleVector make_monic(const ModuleSpace& space, ModuleVector f);
ModuleVector scale(const ModuleSpace& space, const ModuleVector& f,
                   const Scalar& c);
ModuleVector multiply(const ModuleSpace& space, const Polynomial& p,
                      const ModuleVector& f);

// Homogeneous map between graded free modules: entry (r, c) is zero or
// homogeneous of degree source.twists[c] - target.twists[r], so the map has
// degree zero. Column c is the image of the c-th source generator.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  // Throws std::invalid_argument on shape mismatch, inhomogeneous entries,
  // or entries of the wrong degree.
  GradedMatrix(FreeModule target, FreeModule source,
               std::vector<Polynomial> entries_row_major);
  // Builds the matrix whose columns are the given vectors of `target`; the
  // source twists are the vector degrees (zero vectors are dropped).
  static GradedMatrix from_columns(const FreeModule& target,
                                   const ModuleSpace& space,
                                   const std::vector<ModuleVector>& columns);
  static GradedMatrix zero(const FreeModule& target, const FreeModule& source);
  static GradedMatrix identity(const FreeModule& f);

  const FreeModule& target() const { return target_; }
  const FreeModule& source() const { return source_; }
  const PolyRing& ring() const { return *target_.ring; }
  const RingPtr& ring_ptr() const { return target_.ring; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }
  const Polynomial& entry(int r, int c) const { return entries_[r * cols() + c]; }
  bool is_zero() const;

  // Column c as a vector in `space`, which must have rank rows().
  ModuleVector column(const ModuleSpace& space, int c) const;
  std::vector<ModuleVector> columns(const ModuleSpace& space) const;

 private:
  FreeModule target_;
  FreeModule source_;
  std::vector<Polynomial> entries_;
};

// a * b for composable maps (a.source == b.target).
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);

}  // namespace cmreg
