#pragma once

#include <set>
#include <utility>
#include <vector>

#include "cmreg/module.hpp"

namespace cmreg {

// Buchberger's algorithm for homogeneous submodules of a ModuleSpace.
//
// Generators and S-pairs are processed degree by degree, so the basis can be
// completed only as far as a query needs: after complete_through_degree(D)
// every element of degree <= D in the submodule reduces to zero. S-pairs are
// pruned by the coprime-leading-term criterion (rank-one spaces only, where it
// is valid) and by Buchberger's chain criterion.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(ModuleSpace space);

  const ModuleSpace& space() const { return space_; }

  // Throws std::invalid_argument for an inhomogeneous generator.
  void add_generator(ModuleVector g);
  void add_generators(const std::vector<ModuleVector>& gs) {
    for (const auto& g : gs) add_generator(g);
  }

  void complete();
  void complete_through_degree(int degree);

  // Full normal form; completes the basis through deg(f) first.
  ModuleVector normal_form(const ModuleVector& f);
  bool contains(const ModuleVector& f) { return normal_form(f).is_zero(); }

  // The basis in its current, possibly partial, state.
  const std::vector<ModuleVector>& elements() const { return basis_; }

  // Completes, then returns the reduced basis sorted by increasing leading
  // term. Unique for the submodule and the term order.
  std::vector<ModuleVector> reduced_basis();

  // Number of S-pairs reduced so far (for diagnostics and tests).
  long pairs_reduced() const { return pairs_reduced_; }

 private:
  struct Item {
    int degree;
    long sequence;
    bool is_pair;
    size_t first;   // generator index, or pair index i
    size_t second;  // pair index j
    friend bool operator<(const Item& a, const Item& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return a.sequence < b.sequence;
    }
  };

  ModuleVector reduce(ModuleVector f) const;
  const ModuleVector* find_reducer(const ModuleTerm& t) const;
  void insert_element(ModuleVector g);
  bool chain_criterion(size_t i, size_t j, const Monomial& lcm) const;
  void process(const Item& item);

  ModuleSpace space_;
  std::vector<ModuleVector> basis_;
  std::vector<ModuleVector> pending_generators_;
  std::set<Item> queue_;
  std::set<std::pair<size_t, size_t>> pending_pairs_;
  long sequence_ = 0;
  long pairs_reduced_ = 0;
};

// Reduced Groebner basis of the submodule generated by `generators`.
std::vector<ModuleVector> groebner_basis(const ModuleSpace& space,
                                         const std::vector<ModuleVector>& generators);

// Normal form of f with respect to the submodule generated by `generators`.
ModuleVector normal_form(const ModuleSpace& space, const ModuleVector& f,
                         const std::vector<ModuleVector>& generators);

}  // namespace cmreg
