#include "cmreg/syzygy.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cmreg {

namespace {

// Restricts a vector of a larger space to components [first, first + rank),
// re-indexed from zero and rebuilt in `space`.
ModuleVector restrict_components(const ModuleSpace& space, const ModuleVector& v,
                                 int first) {
  std::vector<ModuleTerm> terms;
  for (const auto& t : v.terms()) {
    const int c = t.component - first;
    if (c >= 0 && c < space.rank()) terms.push_back(ModuleTerm{t.monomial, c, t.coefficient});
  }
  return ModuleVector::from_terms(space, std::move(terms));
}

std::vector<Polynomial> variables(const PolyRing& ring) {
  std::vector<Polynomial> out;
  for (int k = 0; k < ring.num_variables(); ++k) {
    out.push_back(Polynomial::monomial(ring, Monomial::variable(k)));
  }
  return out;
}

int linear_degree(const Polynomial& x) {
  auto d = x.homogeneous_degree();
  if (!d || *d != 1) throw std::invalid_argument("expected a nonzero linear form");
  return 1;
}

}  // namespace

GradedPresentation ideal_presentation(const RingPtr& ring,
                                      const std::vector<Polynomial>& generators) {
  FreeModule target{ring, {0}};
  ModuleSpace space(target);
  std::vector<ModuleVector> cols;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
    std::vector<ModuleTerm> terms;
    for (const auto& t : g.terms()) terms.push_back(ModuleTerm{t.monomial, 0, t.coefficient});
    cols.push_back(ModuleVector::from_terms(space, std::move(terms)));
  }
  return GradedMatrix::from_columns(target, space, cols);
}

GradedMatrix syzygy_kernel(const GradedMatrix& m) {
  const int r = m.rows();
  const int s = m.cols();
  std::vector<int> twists = m.target().twists;
  twists.insert(twists.end(), m.source().twists.begin(), m.source().twists.end());
  std::vector<int> blocks(r, 1);
  blocks.resize(r + s, 0);
  ModuleSpace augmented(m.ring_ptr(), twists, blocks);

  GroebnerBasis gb(augmented);
  for (int c = 0; c < s; ++c) {
    std::vector<ModuleTerm> terms;
    for (int row = 0; row < r; ++row) {
      for (const auto& t : m.entry(row, c).terms()) {
        terms.push_back(ModuleTerm{t.monomial, row, t.coefficient});
      }
    }
    terms.push_back(ModuleTerm{Monomial(), r + c, 1});
    gb.add_generator(ModuleVector::from_terms(augmented, std::move(terms)));
  }
  gb.complete();

  ModuleSpace source(m.source());
  std::vector<ModuleVector> kernel;
  for (const auto& g : gb.elements()) {
    // Under the elimination order a lead in the lower block means the whole
    // vector lies there, i.e. it is a syzygy.
    if (g.lead().component < r) continue;
    kernel.push_back(restrict_components(source, g, r));
  }
  kernel = minimal_generators(source, std::move(kernel));
  return GradedMatrix::from_columns(m.source(), source, kernel);
}

std::vector<ModuleVector> minimal_generators(const ModuleSpace& space,
                                             std::vector<ModuleVector> generators) {
  generators.erase(std::remove_if(generators.begin(), generators.end(),
                                  [](const ModuleVector& v) { return v.is_zero(); }),
                   generators.end());
  std::stable_sort(generators.begin(), generators.end(),
                   [&](const ModuleVector& a, const ModuleVector& b) {
                     return a.degree(space) < b.degree(space);
                   });
  GroebnerBasis gb(space);
  std::vector<ModuleVector> chosen;
  for (auto& g : generators) {
    if (gb.contains(g)) continue;
    gb.add_generator(g);
    chosen.push_back(std::move(g));
  }
  return chosen;
}

GradedPresentation minimize_presentation(const GradedMatrix& m) {
  const PolyRing& ring = m.ring();
  const Field& k = ring.field();
  std::vector<int> twists = m.target().twists;
  std::vector<std::vector<Polynomial>> cols(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < m.rows(); ++r) cols[c].push_back(m.entry(r, c));
  }

  for (;;) {
    int pc = -1;
    int pr = -1;
    for (size_t c = 0; c < cols.size() && pc < 0; ++c) {
      for (size_t r = 0; r < cols[c].size(); ++r) {
        if (cols[c][r].is_unit()) {
          pc = static_cast<int>(c);
          pr = static_cast<int>(r);
          break;
        }
      }
    }
    if (pc < 0) break;
    const Scalar u = cols[pc][pr].terms().front().coefficient;
    for (size_t l = 0; l < cols.size(); ++l) {
      if (static_cast<int>(l) == pc || cols[l][pr].is_zero()) continue;
      const Polynomial factor = scale(ring, cols[l][pr], k.neg(k.inv(u)));
      for (size_t r = 0; r < cols[l].size(); ++r) {
        if (cols[pc][r].is_zero()) continue;
        cols[l][r] = add(ring, cols[l][r], multiply(ring, factor, cols[pc][r]));
      }
    }
    cols.erase(cols.begin() + pc);
    for (auto& col : cols) col.erase(col.begin() + pr);
    twists.erase(twists.begin() + pr);
  }

  FreeModule target{m.ring_ptr(), twists};
  ModuleSpace space(target);
  std::vector<ModuleVector> vectors;
  for (const auto& col : cols) {
    std::vector<ModuleTerm> terms;
    for (size_t r = 0; r < col.size(); ++r) {
      for (const auto& t : col[r].terms()) {
        terms.push_back(ModuleTerm{t.monomial, static_cast<int>(r), t.coefficient});
      }
    }
    vectors.push_back(ModuleVector::from_terms(space, std::move(terms)));
  }
  return GradedMatrix::from_columns(target, space,
                                    minimal_generators(space, std::move(vectors)));
}

GradedPresentation subquotient_presentation(const GradedMatrix& z,
                                            const GradedMatrix& b) {
  if (!(z.target().twists == b.target().twists)) {
    throw std::invalid_argument("subquotient maps need a common target");
  }
  FreeModule source = z.source();
  source.twists.insert(source.twists.end(), b.source().twists.begin(),
                       b.source().twists.end());
  std::vector<Polynomial> entries;
  entries.reserve(z.rows() * source.rank());
  for (int r = 0; r < z.rows(); ++r) {
    for (int c = 0; c < z.cols(); ++c) entries.push_back(z.entry(r, c));
    for (int c = 0; c < b.cols(); ++c) entries.push_back(b.entry(r, c));
  }
  GradedMatrix stacked(z.target(), source, std::move(entries));
  GradedMatrix kernel = syzygy_kernel(stacked);

  ModuleSpace big(source);
  ModuleSpace generators(z.source());
  std::vector<ModuleVector> relations;
  for (const auto& v : kernel.columns(big)) {
    relations.push_back(restrict_components(generators, v, 0));
  }
  return minimize_presentation(GradedMatrix::from_columns(z.source(), generators, relations));
}

GradedMatrix colon(const GradedMatrix& q, const std::vector<Polynomial>& ideal) {
  const FreeModule& f = q.target();
  const int n = f.rank();
  std::vector<Polynomial> gens;
  std::vector<int> degrees;
  for (const auto& g : ideal) {
    if (g.is_zero()) continue;
    gens.push_back(g);
    degrees.push_back(*g.homogeneous_degree());
  }
  ModuleSpace fspace(f);
  if (gens.empty()) {
    // (Q : 0) is everything.
    return GradedMatrix::identity(f);
  }
  const int s = static_cast<int>(gens.size());
  // v -> (g_i v + q c_i)_i from F (+) F_Q^s to F^s, the i-th target copy
  // shifted down by deg g_i so the map has degree zero.
  FreeModule target{f.ring, {}};
  FreeModule source{f.ring, f.twists};
  for (int i = 0; i < s; ++i) {
    for (int t : f.twists) target.twists.push_back(t - degrees[i]);
  }
  for (int i = 0; i < s; ++i) {
    for (int t : q.source().twists) source.twists.push_back(t - degrees[i]);
  }
  const int rows = n * s;
  const int cols = source.rank();
  std::vector<Polynomial> entries(rows * cols);
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < n; ++k) entries[(i * n + k) * cols + k] = gens[i];
    for (int k = 0; k < n; ++k) {
      for (int c = 0; c < q.cols(); ++c) {
        entries[(i * n + k) * cols + n + i * q.cols() + c] = q.entry(k, c);
      }
    }
  }
  GradedMatrix big(target, source, std::move(entries));
  GradedMatrix kernel = syzygy_kernel(big);
  ModuleSpace kspace(source);
  std::vector<ModuleVector> out;
  for (const auto& v : kernel.columns(kspace)) {
    out.push_back(restrict_components(fspace, v, 0));
  }
  return GradedMatrix::from_columns(f, fspace, minimal_generators(fspace, std::move(out)));
}

bool image_contains(const GradedMatrix& big, const GradedMatrix& small) {
  ModuleSpace space(big.target());
  GroebnerBasis gb(space);
  gb.add_generators(big.columns(space));
  for (const auto& v : small.columns(space)) {
    if (!gb.contains(v)) return false;
  }
  return true;
}

GradedMatrix saturation(const GradedPresentation& p, int max_steps) {
  const std::vector<Polynomial> vars = variables(p.ring());
  GradedMatrix q = p;
  for (int step = 0; step < max_steps; ++step) {
    GradedMatrix next = colon(q, vars);
    if (image_contains(q, next)) return q;
    q = std::move(next);
  }
  throw SaturationCapExceeded("saturation did not stabilize within " +
                              std::to_string(max_steps) + " steps");
}

GradedPresentation torsion_submodule(const GradedPresentation& p, int max_steps) {
  return subquotient_presentation(saturation(p, max_steps), p);
}

GradedPresentation quotient_by_form(const GradedPresentation& p, const Polynomial& x) {
  const int dx = linear_degree(x);
  FreeModule source = p.source();
  for (int t : p.target().twists) source.twists.push_back(t + dx);
  const int cols = source.rank();
  std::vector<Polynomial> entries(p.rows() * cols);
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p.cols(); ++c) entries[r * cols + c] = p.entry(r, c);
    entries[r * cols + p.cols() + r] = x;
  }
  return minimize_presentation(GradedMatrix(p.target(), source, std::move(entries)));
}

GradedPresentation annihilator_of_form(const GradedPresentation& p, const Polynomial& x) {
  linear_degree(x);
  return subquotient_presentation(colon(p, {x}), p);
}

namespace {

bool regular_on_saturated(const Polynomial& x, const GradedMatrix& saturated) {
  if (saturated.rows() == 0) return true;
  return image_contains(saturated, colon(saturated, {x}));
}

}  // namespace

bool is_filter_regular(const Polynomial& x, const GradedPresentation& p) {
  linear_degree(x);
  if (p.rows() == 0) return true;
  return regular_on_saturated(x, saturation(p));
}

Polynomial find_filter_regular(const GradedPresentation& p,
                               const std::vector<GradedPresentation>& companions,
                               int search_budget) {
  const PolyRing& ring = p.ring();
  const Field& k = ring.field();
  const int n = ring.num_variables();
  std::vector<GradedMatrix> saturated;
  saturated.push_back(p.rows() == 0 ? p : saturation(p));
  for (const auto& c : companions) saturated.push_back(c.rows() == 0 ? c : saturation(c));

  std::set<std::vector<Scalar>> tried;
  auto attempt = [&](std::vector<long> coeffs, Polynomial& out) {
    std::vector<Scalar> key;
    std::vector<Term> terms;
    for (int v = 0; v < n; ++v) {
      key.push_back(k.from_integer(coeffs[v]));
      terms.push_back(Term{Monomial::variable(v), key.back()});
    }
    Polynomial x = Polynomial::from_terms(ring, std::move(terms));
    if (x.is_zero() || !tried.insert(key).second) return false;
    for (const auto& s : saturated) {
      if (!regular_on_saturated(x, s)) return false;
    }
    out = std::move(x);
    return true;
  };

  Polynomial found;
  for (int v = 0; v < n; ++v) {
    std::vector<long> coeffs(n, 0);
    coeffs[v] = 1;
    if (attempt(coeffs, found)) return found;
  }
  // Round r tries coefficient vectors in {0..r}^n whose largest entry is r,
  // in lexicographic order, capped to keep large rings tractable.
  constexpr long kMaxCandidates = 20000;
  long candidates = 0;
  for (int round = 1; round <= search_budget; ++round) {
    std::vector<long> coeffs(n, 0);
    for (;;) {
      int pos = n - 1;
      while (pos >= 0 && coeffs[pos] == round) coeffs[pos--] = 0;
      if (pos < 0) break;
      ++coeffs[pos];
      if (*std::max_element(coeffs.begin(), coeffs.end()) != round) continue;
      if (std::count(coeffs.begin(), coeffs.end(), 0L) >= n - 1) continue;
      if (++candidates > kMaxCandidates) break;
      if (attempt(coeffs, found)) return found;
    }
  }
  throw SearchExhausted("no filter-regular linear form found within the search budget over " +
                        k.to_string() + "; use a larger coefficient field");
}

}  // namespace cmreg
