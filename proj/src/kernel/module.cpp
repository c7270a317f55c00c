#include "cmreg/module.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cmreg {

ModuleSpace::ModuleSpace(RingPtr ring, std::vector<int> twists,
                         std::vector<int> blocks)
    : ring_(std::move(ring)), twists_(std::move(twists)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) blocks_.assign(twists_.size(), 0);
  if (blocks_.size() != twists_.size()) {
    throw std::invalid_argument("block list does not match rank");
  }
}

int ModuleSpace::compare(const Monomial& a, int ca, const Monomial& b,
                         int cb) const {
  if (blocks_[ca] != blocks_[cb]) return blocks_[ca] > blocks_[cb] ? 1 : -1;
  int da = a.degree() + twists_[ca];
  int db = b.degree() + twists_[cb];
  if (da != db) return da > db ? 1 : -1;
  int c = compare_degrevlex(a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

ModuleVector ModuleVector::from_terms(const ModuleSpace& space,
                                      std::vector<ModuleTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) {
              return space.compare(a, b) > 0;
            });
  ModuleVector out;
  const Field& k = space.field();
  for (auto& t : terms) {
    if (t.component < 0 || t.component >= space.rank()) {
      throw std::out_of_range("module term component out of range");
    }
    Scalar c = k.normalize(t.coefficient);
    if (!out.terms_.empty() && out.terms_.back().component == t.component &&
        out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coefficient = k.add(out.terms_.back().coefficient, c);
      if (Field::is_zero(out.terms_.back().coefficient)) out.terms_.pop_back();
    } else if (!Field::is_zero(c)) {
      out.terms_.push_back(ModuleTerm{t.monomial, t.component, c});
    }
  }
  return out;
}

bool ModuleVector::is_homogeneous(const ModuleSpace& space) const {
  if (terms_.empty()) return true;
  const int d = degree(space);
  return std::all_of(terms_.begin(), terms_.end(), [&](const ModuleTerm& t) {
    return space.degree(t.monomial, t.component) == d;
  });
}

int ModuleVector::degree(const ModuleSpace& space) const {
  if (terms_.empty()) throw std::logic_error("degree of zero vector");
  return space.degree(terms_.front().monomial, terms_.front().component);
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& s = a.terms_[k];
    const auto& t = b.terms_[k];
    if (s.component != t.component || !(s.monomial == t.monomial) ||
        s.coefficient != t.coefficient) {
      return false;
    }
  }
  return true;
}

ModuleVector add_multiple(const ModuleSpace& space, const ModuleVector& f,
                          const Scalar& c, const Monomial& m,
                          const ModuleVector& g) {
  const Field& k = space.field();
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  std::vector<ModuleTerm> out;
  out.reserve(ft.size() + gt.size());
  size_t i = 0;
  size_t j = 0;
  while (i < ft.size() || j < gt.size()) {
    if (j == gt.size()) {
      out.push_back(ft[i++]);
      continue;
    }
    Monomial gm = gt[j].monomial * m;
    int cmp = i == ft.size() ? -1 : space.compare(ft[i].monomial, ft[i].component,
                                                  gm, gt[j].component);
    if (cmp > 0) {
      out.push_back(ft[i++]);
    } else if (cmp < 0) {
      out.push_back(ModuleTerm{gm, gt[j].component, k.mul(c, gt[j].coefficient)});
      ++j;
    } else {
      Scalar s = k.add(ft[i].coefficient, k.mul(c, gt[j].coefficient));
      if (!Field::is_zero(s)) out.push_back(ModuleTerm{gm, gt[j].component, s});
      ++i;
      ++j;
    }
  }
  ModuleVector result;
  result.mutable_terms() = std::move(out);
  return result;
}

ModuleVector make_monic(const ModuleSpace& space, ModuleVector f) {
  if (f.is_zero()) return f;
  const Field& k = space.field();
  Scalar inv = k.inv(f.lead().coefficient);
  for (auto& t : f.mutable_terms()) t.coefficient = k.mul(t.coefficient, inv);
  return f;
}

ModuleVector scale(const ModuleSpace& space, const ModuleVector& f,
                   const Scalar& c) {
  const Field& k = space.field();
  if (Field::is_zero(k.normalize(c))) return {};
  ModuleVector out = f;
  for (auto& t : out.mutable_terms()) t.coefficient = k.mul(t.coefficient, c);
  return out;
}

ModuleVector multiply(const ModuleSpace& space, const Polynomial& p,
                      const ModuleVector& f) {
  ModuleVector acc;
  for (const auto& t : p.terms()) {
    acc = add_multiple(space, acc, t.coefficient, t.monomial, f);
  }
  return acc;
}

GradedMatrix::GradedMatrix(FreeModule target, FreeModule source,
                           std::vector<Polynomial> entries_row_major)
    : target_(std::move(target)),
      source_(std::move(source)),
      entries_(std::move(entries_row_major)) {
  if (!target_.ring) throw std::invalid_argument("matrix needs a ring");
  if (!source_.ring) source_.ring = target_.ring;
  if (static_cast<int>(entries_.size()) != rows() * cols()) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) {
      auto deg = entry(r, c).homogeneous_degree();
      if (deg && *deg != source_.twists[c] - target_.twists[r]) {
        throw std::invalid_argument(
            "entry (" + std::to_string(r) + "," + std::to_string(c) +
            ") has degree " + std::to_string(*deg) + ", expected " +
            std::to_string(source_.twists[c] - target_.twists[r]));
      }
    }
  }
}

GradedMatrix GradedMatrix::from_columns(const FreeModule& target,
                                        const ModuleSpace& space,
                                        const std::vector<ModuleVector>& columns) {
  FreeModule source{target.ring, {}};
  std::vector<std::vector<std::vector<Term>>> cells;
  for (const auto& v : columns) {
    if (v.is_zero()) continue;
    source.twists.push_back(v.degree(space));
    std::vector<std::vector<Term>> col(target.rank());
    for (const auto& t : v.terms()) {
      col[t.component].push_back(Term{t.monomial, t.coefficient});
    }
    cells.push_back(std::move(col));
  }
  const PolyRing& ring = *target.ring;
  std::vector<Polynomial> entries(target.rank() * cells.size());
  for (size_t c = 0; c < cells.size(); ++c) {
    for (int r = 0; r < target.rank(); ++r) {
      entries[r * cells.size() + c] = Polynomial::from_terms(ring, std::move(cells[c][r]));
    }
  }
  return GradedMatrix(target, source, std::move(entries));
}

GradedMatrix GradedMatrix::zero(const FreeModule& target, const FreeModule& source) {
  return GradedMatrix(target, source,
                      std::vector<Polynomial>(target.rank() * source.rank()));
}

GradedMatrix GradedMatrix::identity(const FreeModule& f) {
  std::vector<Polynomial> entries(f.rank() * f.rank());
  for (int k = 0; k < f.rank(); ++k) {
    entries[k * f.rank() + k] = Polynomial::constant(*f.ring, 1);
  }
  return GradedMatrix(f, f, std::move(entries));
}

bool GradedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

ModuleVector GradedMatrix::column(const ModuleSpace& space, int c) const {
  std::vector<ModuleTerm> terms;
  for (int r = 0; r < rows(); ++r) {
    for (const auto& t : entry(r, c).terms()) {
      terms.push_back(ModuleTerm{t.monomial, r, t.coefficient});
    }
  }
  return ModuleVector::from_terms(space, std::move(terms));
}

std::vector<ModuleVector> GradedMatrix::columns(const ModuleSpace& space) const {
  std::vector<ModuleVector> out;
  out.reserve(cols());
  for (int c = 0; c < cols(); ++c) out.push_back(column(space, c));
  return out;
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("maps do not compose");
  const PolyRing& ring = a.ring();
  std::vector<Polynomial> entries(a.rows() * b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      Polynomial acc;
      for (int k = 0; k < a.cols(); ++k) {
        acc = add(ring, acc, multiply(ring, a.entry(r, k), b.entry(k, c)));
      }
      entries[r * b.cols() + c] = std::move(acc);
    }
  }
  return GradedMatrix(a.target(), b.source(), std::move(entries));
}

}  // namespace cmreg
