#include "cmreg/groebner.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cmreg {

GroebnerBasis::GroebnerBasis(ModuleSpace space) : space_(std::move(space)) {}

void GroebnerBasis::add_generator(ModuleVector g) {
  if (g.is_zero()) return;
  if (!g.is_homogeneous(space_)) {
    throw std::invalid_argument("Groebner basis generators must be homogeneous");
  }
  const int degree = g.degree(space_);
  pending_generators_.push_back(std::move(g));
  queue_.insert(Item{degree, sequence_++, false, pending_generators_.size() - 1, 0});
}

void GroebnerBasis::complete() {
  complete_through_degree(std::numeric_limits<int>::max());
}

void GroebnerBasis::complete_through_degree(int degree) {
  while (!queue_.empty() && queue_.begin()->degree <= degree) {
    Item item = *queue_.begin();
    queue_.erase(queue_.begin());
    process(item);
  }
}

ModuleVector GroebnerBasis::normal_form(const ModuleVector& f) {
  if (f.is_zero()) return f;
  complete_through_degree(f.degree(space_));
  return reduce(f);
}

std::vector<ModuleVector> GroebnerBasis::reduced_basis() {
  complete();
  // Keep one element per minimal leading term.
  std::vector<ModuleVector> minimal;
  for (size_t k = 0; k < basis_.size(); ++k) {
    const ModuleTerm& lk = basis_[k].lead();
    bool redundant = false;
    for (size_t j = 0; j < basis_.size() && !redundant; ++j) {
      if (j == k) continue;
      const ModuleTerm& lj = basis_[j].lead();
      if (lj.component != lk.component || !lj.monomial.divides(lk.monomial)) continue;
      // Equal leading terms: keep the earliest.
      redundant = !(lj.monomial == lk.monomial) || j < k;
    }
    if (!redundant) minimal.push_back(basis_[k]);
  }
  std::vector<ModuleVector> out;
  out.reserve(minimal.size());
  for (size_t k = 0; k < minimal.size(); ++k) {
    // Tail-reduce against the other minimal elements; the lead stays.
    ModuleVector f = minimal[k];
    ModuleTerm lead = f.lead();
    f.mutable_terms().erase(f.mutable_terms().begin());
    GroebnerBasis others(space_);
    for (size_t j = 0; j < minimal.size(); ++j) {
      if (j != k) others.basis_.push_back(minimal[j]);
    }
    ModuleVector tail = others.reduce(std::move(f));
    auto& terms = tail.mutable_terms();
    terms.insert(terms.begin(), lead);
    out.push_back(std::move(tail));
  }
  std::sort(out.begin(), out.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return space_.compare(a.lead(), b.lead()) < 0;
  });
  return out;
}

const ModuleVector* GroebnerBasis::find_reducer(const ModuleTerm& t) const {
  for (const auto& g : basis_) {
    const ModuleTerm& l = g.lead();
    if (l.component == t.component && l.monomial.divides(t.monomial)) return &g;
  }
  return nullptr;
}

ModuleVector GroebnerBasis::reduce(ModuleVector f) const {
  const Field& k = space_.field();
  std::vector<ModuleTerm> done;
  while (!f.is_zero()) {
    const ModuleTerm t = f.lead();
    if (const ModuleVector* g = find_reducer(t)) {
      f = add_multiple(space_, f, k.neg(t.coefficient),
                       t.monomial.quotient(g->lead().monomial), *g);
    } else {
      done.push_back(t);
      f.mutable_terms().erase(f.mutable_terms().begin());
    }
  }
  ModuleVector out;
  out.mutable_terms() = std::move(done);
  return out;
}

void GroebnerBasis::insert_element(ModuleVector g) {
  g = make_monic(space_, std::move(g));
  const size_t index = basis_.size();
  const ModuleTerm& lead = g.lead();
  for (size_t i = 0; i < index; ++i) {
    const ModuleTerm& other = basis_[i].lead();
    if (other.component != lead.component) continue;
    if (space_.rank() == 1 && other.monomial.coprime(lead.monomial)) continue;
    Monomial lcm = other.monomial.lcm(lead.monomial);
    queue_.insert(Item{space_.degree(lcm, lead.component), sequence_++, true, i, index});
    pending_pairs_.insert({i, index});
  }
  basis_.push_back(std::move(g));
}

bool GroebnerBasis::chain_criterion(size_t i, size_t j, const Monomial& lcm) const {
  const int component = basis_[i].lead().component;
  for (size_t k = 0; k < basis_.size(); ++k) {
    if (k == i || k == j) continue;
    const ModuleTerm& l = basis_[k].lead();
    if (l.component != component || !l.monomial.divides(lcm)) continue;
    if (pending_pairs_.count({std::min(i, k), std::max(i, k)}) != 0) continue;
    if (pending_pairs_.count({std::min(j, k), std::max(j, k)}) != 0) continue;
    return true;
  }
  return false;
}

void GroebnerBasis::process(const Item& item) {
  ModuleVector candidate;
  if (!item.is_pair) {
    candidate = std::move(pending_generators_[item.first]);
  } else {
    const size_t i = item.first;
    const size_t j = item.second;
    pending_pairs_.erase({i, j});
    const Monomial lcm = basis_[i].lead().monomial.lcm(basis_[j].lead().monomial);
    if (chain_criterion(i, j, lcm)) return;
    const Field& k = space_.field();
    ModuleVector s = add_multiple(space_, ModuleVector(), 1,
                                  lcm.quotient(basis_[i].lead().monomial), basis_[i]);
    s = add_multiple(space_, s, k.from_integer(-1),
                     lcm.quotient(basis_[j].lead().monomial), basis_[j]);
    candidate = std::move(s);
    ++pairs_reduced_;
  }
  ModuleVector r = reduce(std::move(candidate));
  if (!r.is_zero()) insert_element(std::move(r));
}

std::vector<ModuleVector> groebner_basis(const ModuleSpace& space,
                                         const std::vector<ModuleVector>& generators) {
  GroebnerBasis gb(space);
  gb.add_generators(generators);
  return gb.reduced_basis();
}

ModuleVector normal_form(const ModuleSpace& space, const ModuleVector& f,
                         const std::vector<ModuleVector>& generators) {
  GroebnerBasis gb(space);
  gb.add_generators(generators);
  return gb.normal_form(f);
}

}  // namespace cmreg
