#include "cmreg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>



namespace cmreg {

namespace {

const ExtendedInt kNegInf = ExtendedInt::neg_inf();
const ExtendedInt kPosInf = ExtendedInt::pos_inf();
const char* const kUnmet = "skipped: hypothesis unmet";

std::string idx(const std::string& family, const std::string& key, long v) {
  return family + "[" + key + "=" + std::to_string(v) + "]";
}

ExtendedInt reg_of(const AnalyzedModule& m) { return m.regularity(); }

// reg(K^i) of a profile; K^i = 0 gives -inf.
ExtendedInt reg_k(const CohomologyProfile& p, int i) {
  if (i < 0 || i > p.num_variables()) return kNegInf;
  return reg_of(p.deficiency(i));
}

long finite(const ExtendedInt& v) { return v.to_int64(); }

// Shared state of one verification run: profiles are computed lazily so a
// restricted --checks list only pays for what it uses.
class Verifier {
 public:
  Verifier(const VerifyInput& input, const VerifyOptions& options)
      : input_(input), options_(options) {
    for (const auto& f : options.families) {
      const auto& all = check_families();
      if (std::find(all.begin(), all.end(), f) == all.end()) {
        throw std::invalid_argument("unknown check family '" + f + "'");
      }
    }
    if (input.pair) {
      const ModulePair& pair = *input.pair;
      if (!(pair.submodule.target().twists == pair.ambient.target().twists)) {
        throw std::invalid_argument("submodule generators do not live in the ambient module");
      }
    }
    profile_ = std::make_shared<const CohomologyProfile>(input.module);
    window_ = options.window ? *options.window : profile_->default_window();
  }

  Report run() {
    Report report;
    report.description = input_.description;
    report.profile = profile_;
    report.window = window_;
    for (const auto& family : check_families()) {
      if (!options_.families.empty() && options_.families.count(family) == 0) continue;
      dispatch(family);
    }
    report.checks = std::move(checks_);
    if (filter_form_) report.filter_regular_form = to_string(input_.module.ring(), *filter_form_);
    return report;
  }

 private:
  const CohomologyProfile& M() const { return *profile_; }
  bool zero() const { return M().module().is_zero(); }
  int dprime() const { return M().num_variables(); }
  long dim() const { return zero() ? -1 : finite(M().dim()); }

  void add(BoundCheck c) { checks_.push_back(std::move(c)); }

  void dispatch(const std::string& f) {
    static const std::map<std::string, void (Verifier::*)()> table = {
        {"thm3.6", &Verifier::thm36},       {"cor3.7", &Verifier::cor37},
        {"thm4.2", &Verifier::thm42},       {"cor4.3", &Verifier::cor43},
        {"cor4.4", &Verifier::cor44},       {"cor4.6", &Verifier::cor46},
        {"rem4.7", &Verifier::rem47},       {"cor4.8", &Verifier::cor48},
        {"prop4.12", &Verifier::prop412},   {"cor4.13", &Verifier::cor413},
        {"cor4.14", &Verifier::cor414},     {"thm5.3", &Verifier::thm53},
        {"lemma3.1", &Verifier::lemma31},   {"lemma3.2", &Verifier::lemma32},
        {"lemma3.3", &Verifier::lemma33},   {"prop2.5", &Verifier::prop25},
        {"gendeg", &Verifier::gendeg},      {"serre", &Verifier::serre},
        {"reg-routes", &Verifier::reg_routes}, {"h0-duality", &Verifier::h0_duality},
        {"sandwich", &Verifier::sandwich},  {"qdeg", &Verifier::qdeg},
        {"diag-bound", &Verifier::diag_bound}};
    (this->*table.at(f))();
  }

  DiagonalVector actual_diagonal() const {
    DiagonalVector v;
    v.caps = M().diagonal();
    v.base_degree = M().beg().value();
    return v;
  }

  // --- Diagonal bounds -----------------------------------------------------

  void thm36() {
    const std::string ref = "reg(K^i(M)) <= F^i_d(d^0(0), ..., d^{d-1}(1-d), beg(M)), d = dim(M)";
    if (zero()) return add(skipped_check("thm3.6", ref, "skipped: zero module"));
    const DiagonalVector diag = actual_diagonal();
    for (int i = 0; i <= dim(); ++i) {
      add(evaluate_check(idx("thm3.6", "i", i), ref, "reg(K^" + std::to_string(i) + "(M))",
                         reg_k(M(), i), "F^" + std::to_string(i) + "_" + std::to_string(dim()),
                         ExtendedInt(diagonal_regularity_bound(i, diag)), Direction::kAtMost));
    }
  }

  void cor37() {
    const std::string ref = "reg(K^i(M)) <= F^i_d(x, y) when dim(M) <= d, d^j(-j) <= x_j, beg(M) >= y";
    if (zero()) return add(skipped_check("cor3.7", ref, "skipped: zero module"));
    DiagonalVector caps;
    if (options_.caps) {
      caps.caps = options_.caps->x;
      caps.base_degree = options_.caps->y;
    } else {
      // Actual diagonal padded by one zero: the padded dimension exercises
      // the dimension-monotonicity of F.
      caps = actual_diagonal();
      caps.caps.resize(std::max<long>(dim(), 0) + 1, 0);
    }
    const int d = caps.dimension();
    bool ok = d >= 1 && dim() <= d && M().beg() >= ExtendedInt(caps.base_degree);
    for (int j = 0; ok && j < d; ++j) {
      ok = caps.caps[j] >= 0 && M().d(j, -j) <= caps.caps[j];
    }
    if (!ok) return add(skipped_check("cor3.7", ref, kUnmet));
    for (int i = 0; i <= d; ++i) {
      add(evaluate_check(idx("cor3.7", "i", i), ref, "reg(K^" + std::to_string(i) + "(M))",
                         reg_k(M(), i), "F^" + std::to_string(i) + "_" + std::to_string(d) + "(caps)",
                         ExtendedInt(diagonal_regularity_bound(i, caps)), Direction::kAtMost));
    }
  }

  // --- Bounds through reg^2 ------------------------------------------------

  void thm42() {
    const std::string ref = "reg(K^i(M)) <= G^i_d(p, b, r), r >= reg^2(M), p >= p_M(r), b <= beg(M)";
    if (zero()) return add(skipped_check("thm4.2", ref, "skipped: zero module"));
    const ExtendedInt reg2 = M().reg(2);
    long r = reg2.is_finite() ? finite(reg2) : finite(M().beg());
    if (options_.r_override) {
      if (ExtendedInt(*options_.r_override) < reg2) return add(skipped_check("thm4.2", ref, kUnmet));
      r = *options_.r_override;
    }
    const mpq_class pr = M().module().hilbert_polynomial()(r);
    if (pr < 0) return add(skipped_check("thm4.2", ref, kUnmet));
    const mpz_class p = pr.get_num();
    const mpz_class b = M().beg().value();
    const int d = static_cast<int>(std::max<long>(dim(), 1));
    const int top = dim() == 0 ? 0 : d;
    for (int i = 0; i <= top; ++i) {
      add(evaluate_check(idx("thm4.2", "i", i), ref, "reg(K^" + std::to_string(i) + "(M))",
                         reg_k(M(), i),
                         "G^" + std::to_string(i) + "_" + std::to_string(d) + "(" + p.get_str() +
                             "," + b.get_str() + "," + std::to_string(r) + ")",
                         ExtendedInt(reg2_regularity_bound(i, d, p, b, r)), Direction::kAtMost));
    }
  }

  // Profiles of U, M and U/M for the pair checks.
  struct PairProfiles {
    std::shared_ptr<const CohomologyProfile> u, m, l;
  };

  const PairProfiles& pair() {
    if (pair_) return *pair_;
    const ModulePair& in = *input_.pair;
    PairProfiles p;
    p.u = std::make_shared<const CohomologyProfile>(in.ambient);
    GradedMatrix m_pres = subquotient_presentation(in.submodule, in.ambient);
    p.m = std::make_shared<const CohomologyProfile>(m_pres);
    FreeModule src = in.ambient.source();
    src.twists.insert(src.twists.end(), in.submodule.source().twists.begin(),
                      in.submodule.source().twists.end());
    std::vector<Polynomial> entries;
    for (int r = 0; r < in.ambient.rows(); ++r) {
      for (int c = 0; c < in.ambient.cols(); ++c) entries.push_back(in.ambient.entry(r, c));
      for (int c = 0; c < in.submodule.cols(); ++c) entries.push_back(in.submodule.entry(r, c));
    }
    p.l = std::make_shared<const CohomologyProfile>(
        GradedMatrix(in.ambient.target(), src, std::move(entries)));
    pair_ = std::move(p);
    return *pair_;
  }

  // max{reg(K^i(M)), reg(K^i(U/M))}.
  ExtendedInt pair_lhs(int i) {
    return max(reg_k(*pair().m, i), reg_k(*pair().l, i));
  }
  std::string pair_lhs_name(int i) const {
    const std::string k = "K^" + std::to_string(i);
    return "max(reg(" + k + "(M)), reg(" + k + "(U/M)))";
  }

  bool need_pair(const std::string& family, const std::string& ref, bool ideal_only) {
    if (!input_.pair) {
      add(skipped_check(family, ref, "skipped: no ambient/submodule pair"));
      return false;
    }
    if (ideal_only && !input_.pair->ideal_case) {
      add(skipped_check(family, ref, "skipped: requires U = R and an ideal M"));
      return false;
    }
    return true;
  }

  void cor43() {
    const std::string ref = "max(reg K^i(M), reg K^i(U/M)) <= G^i_d(p, b, r) for M in U, reg^2 <= r";
    if (!need_pair("cor4.3", ref, false)) return;
    const auto& pp = pair();
    if (pp.u->module().is_zero()) return add(skipped_check("cor4.3", ref, "skipped: zero ambient module"));
    const ExtendedInt bound = max(pp.u->reg(2), pp.m->reg(2));
    const long r = bound.is_finite() ? finite(bound) : finite(pp.u->beg());
    const mpq_class pr = pp.u->module().hilbert_polynomial()(r);
    if (pr < 0) return add(skipped_check("cor4.3", ref, kUnmet));
    const int d = static_cast<int>(std::max<long>(finite(pp.u->dim()), 1));
    const mpz_class b = pp.u->beg().value();
    for (int i = 0; i <= d; ++i) {
      add(evaluate_check(idx("cor4.3", "i", i), ref, pair_lhs_name(i), pair_lhs(i),
                         "G^" + std::to_string(i) + "_" + std::to_string(d) + "(" +
                             pr.get_num().get_str() + "," + b.get_str() + "," + std::to_string(r) + ")",
                         ExtendedInt(reg2_regularity_bound(i, d, pr.get_num(), b, r)),
                         Direction::kAtMost));
    }
  }

  void cor44() {
    const std::string ref = "max(reg K^i(a), reg K^i(R/a)) <= G^i_d(binom(m+r-1, r-1), 0, r)";
    if (!need_pair("cor4.4", ref, true)) return;
    const auto& pp = pair();
    const int d = dprime();
    const long r = std::max<long>(1, pp.m->reg(2).is_finite() ? finite(pp.m->reg(2)) : 1);
    for (int i = 0; i <= d; ++i) {
      add(evaluate_check(idx("cor4.4", "i", i), ref, pair_lhs_name(i), pair_lhs(i),
                         "gamma(m=" + std::to_string(d) + ",r=" + std::to_string(r) + ")",
                         ExtendedInt(ideal_deficiency_bound(i, d, d, r, 1)), Direction::kAtMost));
    }
  }

  // cor4.6 / cor4.8 are checked non-strictly: their proofs go through cor4.3,
  // and at i = 0 the bound is -b, attained whenever H^0 starts in degree b.
  void cor46() {
    const std::string ref = "max(reg K^i(M), reg K^i(U/M)) <= G^i_d(pi, b, rho + b) when gendeg(M) <= r, reg(U) < r";
    if (!need_pair("cor4.6", ref, false)) return;
    const auto& pp = pair();
    if (pp.u->module().is_zero()) return add(skipped_check("cor4.6", ref, "skipped: zero ambient module"));
    long r = finite(pp.u->module().regularity()) + 1;
    if (pp.m->gendeg() > ExtendedInt(r)) {
      add(skipped_check("cor4.6", ref,
                        std::string(kUnmet) + " (gendeg(M) = " + pp.m->gendeg().to_string() +
                            " > r = " + std::to_string(r) + ")"));
      // Retry at the smallest admissible r so the bound is still exercised.
      r = finite(pp.m->gendeg());
    }
    const int d = dprime();
    const long m = pp.u->module().resolution().base.rank();
    const mpz_class b = pp.u->beg().value();
    for (int i = 0; i <= d; ++i) {
      GendegBound g = submodule_gendeg_bound(i, d, m, 1, b, r);
      add(evaluate_check(idx("cor4.6", "i", i), ref, pair_lhs_name(i), pair_lhs(i),
                         "delta(m=" + std::to_string(m) + ",b=" + b.get_str() + ",r=" + std::to_string(r) + ")",
                         ExtendedInt(g.delta), Direction::kAtMost));
    }
  }

  void rem47() {
    const std::string ref = "max(reg K^i(a), reg K^i(R/a)) < G^i_d(binom(d+r-1, r-1), 0, r), r = (2 gendeg(a))^(2^d-2)";
    if (!need_pair("rem4.7", ref, true)) return;
    const auto& pp = pair();
    const int d = dprime();
    const bool proper = !pp.l->module().is_zero();
    const bool positive_height = proper && pp.l->dim() < ExtendedInt(d);
    if (d <= 1 || !positive_height || !pp.m->gendeg().is_finite()) {
      return add(skipped_check("rem4.7", ref, kUnmet));
    }
    const mpz_class g = pp.m->gendeg().value();
    for (int i = 2; i <= d; ++i) {
      IdealGendegBound b = ideal_gendeg_bound(i, d, g, 1);
      add(evaluate_check(idx("rem4.7", "i", i), ref, pair_lhs_name(i), pair_lhs(i),
                         "gamma(g=" + g.get_str() + ")", ExtendedInt(b.gamma), Direction::kLessThan));
    }
  }

  void cor48() {
    const std::string ref = "reg(K^i(N)) <= delta for a presentation F -> N, r = max(gendeg F + 1, gendeg ker)";
    if (zero()) return add(skipped_check("cor4.8", ref, "skipped: zero module"));
    const MinimalResolution& res = M().module().resolution();
    const FreeModule& f = res.base;
    const long beg_f = *std::min_element(f.twists.begin(), f.twists.end());
    const long gendeg_f = *std::max_element(f.twists.begin(), f.twists.end());
    long gendeg_ker = gendeg_f;  // no relations: r falls back to gendeg(F) + 1
    if (!res.differentials.empty()) {
      const auto& t = res.differentials.front().source().twists;
      gendeg_ker = *std::max_element(t.begin(), t.end());
    }
    const int d = dprime();
    for (int i = 0; i <= d; ++i) {
      add(evaluate_check(idx("cor4.8", "i", i), ref, "reg(K^" + std::to_string(i) + "(N))",
                         reg_k(M(), i),
                         "delta(m=" + std::to_string(f.rank()) + ",b=" + std::to_string(beg_f) +
                             ",gendeg F=" + std::to_string(gendeg_f) + ",gendeg ker=" +
                             std::to_string(gendeg_ker) + ")",
                         ExtendedInt(presentation_bound(i, d, f.rank(), 1, beg_f, gendeg_f, gendeg_ker)),
                         Direction::kAtMost));
    }
  }

  // --- Mumford-type bounds -------------------------------------------------

  struct Mumford {
    int d;
    long r;
    MumfordParameter param;
  };

  // prop4.12 data with r = reg(U) and m = length(U_r); nullopt with a
  // reason when the hypotheses fail.
  std::optional<Mumford> mumford(std::string& reason) {
    const auto& pp = pair();
    if (pp.u->module().is_zero() || pp.u->dim() <= ExtendedInt(1)) {
      reason = std::string(kUnmet) + " (dim(U) must exceed 1)";
      return std::nullopt;
    }
    Mumford out;
    out.d = static_cast<int>(finite(pp.u->dim()));
    out.r = finite(pp.u->module().regularity());
    const mpz_class m = pp.u->module().hilbert_function(static_cast<int>(out.r));
    if (m < 1) {
      reason = kUnmet;
      return std::nullopt;
    }
    const AnalyzedModule& l = pp.l->module();
    int h = out.d;
    HilbertCoefficients e;
    if (!l.is_zero()) {
      h = out.d - static_cast<int>(finite(l.dim()));
      e = hilbert_coefficients(l.hilbert_polynomial().compose_affine(1, out.r));
    }
    out.param = kernel_mumford_parameter(m, out.d, 1, h, e);
    return out;
  }

  void prop412() {
    const std::string ref_a = "reg^1(U/M) <= max{0, t-1} + r";
    const std::string ref_b = "reg^2(M) <= max{1, t} + r";
    if (!need_pair("prop4.12", ref_a, false)) return;
    std::string reason;
    auto mm = mumford(reason);
    if (!mm) return add(skipped_check("prop4.12", ref_a, reason));
    const auto& pp = pair();
    const std::string t = mm->param.t.get_str();
    add(evaluate_check("prop4.12[a]", ref_a, "reg^1(U/M)", pp.l->reg(1),
                       "max{0,t-1}+r (t=" + t + ",r=" + std::to_string(mm->r) + ")",
                       ExtendedInt(mm->param.reg1_offset + mm->r), Direction::kAtMost));
    add(evaluate_check("prop4.12[b]", ref_b, "reg^2(M)", pp.m->reg(2),
                       "max{1,t}+r (t=" + t + ",r=" + std::to_string(mm->r) + ")",
                       ExtendedInt(mm->param.reg2_offset + mm->r), Direction::kAtMost));
  }

  void cor413() {
    const std::string ref = "max(reg K^i(M), reg K^i(U/M)) <= G^i_d(p, b, max{1, t} + r)";
    if (!need_pair("cor4.13", ref, false)) return;
    std::string reason;
    auto mm = mumford(reason);
    if (!mm) return add(skipped_check("cor4.13", ref, reason));
    const auto& pp = pair();
    const mpq_class pr = pp.u->module().hilbert_polynomial()(mm->r);
    const mpz_class b = pp.u->beg().value();
    for (int i = 0; i <= mm->d; ++i) {
      add(evaluate_check(idx("cor4.13", "i", i), ref, pair_lhs_name(i), pair_lhs(i),
                         "G^" + std::to_string(i) + "_" + std::to_string(mm->d) + "(" +
                             pr.get_num().get_str() + "," + b.get_str() + ",max{1,t}+r)",
                         ExtendedInt(mumford_submodule_bound(i, mm->d, pr.get_num(), b,
                                                             mm->param.t, mm->r)),
                         Direction::kAtMost));
    }
  }

  void cor414() {
    const std::string ref = "max(reg K^i(a), reg K^i(R/a)) <= G^i_d(1, 0, max{1, t})";
    if (!need_pair("cor4.14", ref, true)) return;
    const int d = dprime();
    if (d <= 1) return add(skipped_check("cor4.14", ref, kUnmet));
    const auto& pp = pair();
    const AnalyzedModule& l = pp.l->module();
    int h = d;
    HilbertCoefficients e;
    if (!l.is_zero()) {
      h = d - static_cast<int>(finite(l.dim()));
      e = l.hilbert_coefficients();
    }
    const MumfordParameter param = kernel_mumford_parameter(1, d, 1, h, e);
    for (int i = 0; i <= d; ++i) {
      add(evaluate_check(idx("cor4.14", "i", i), ref, pair_lhs_name(i), pair_lhs(i),
                         "G^" + std::to_string(i) + "_" + std::to_string(d) + "(1,0,max{1,t}) (t=" +
                             param.t.get_str() + ")",
                         ExtendedInt(mumford_ideal_bound(i, d, param.t)), Direction::kAtMost));
    }
  }

  // --- Postulation ---------------------------------------------------------

  void thm53() {
    const std::string ref = "nu^i_M >= E^i_d(d^0(0), ..., d^{d-1}(1-d))";
    if (zero() || dim() < 1) return add(skipped_check("thm5.3", ref, "skipped: dim(M) < 1"));
    const std::vector<mpz_class> diag = M().diagonal();
    for (int i = 0; i < dim(); ++i) {
      add(evaluate_check(idx("thm5.3", "i", i), ref, "nu^" + std::to_string(i) + "_M", M().nu(i),
                         "E^" + std::to_string(i) + "_" + std::to_string(dim()),
                         ExtendedInt(postulation_lower_bound(i, diag)), Direction::kAtLeast));
    }
  }

  // --- Structural checks ---------------------------------------------------

  void lemma31() {
    const std::string ref = "depth(K^dim(M)(M)) >= min{2, dim(M)}";
    if (zero()) return add(skipped_check("lemma3.1", ref, "skipped: zero module"));
    add(evaluate_check("lemma3.1", ref, "depth(K^" + std::to_string(dim()) + "(M))",
                       M().deficiency(static_cast<int>(dim())).depth(), "min{2, dim(M)}",
                       ExtendedInt(std::min<long>(2, dim())), Direction::kAtLeast));
  }

  // Filter-regular form w.r.t. M and all K^j(M); nullopt after a failed search.
  const Polynomial* filter_form(std::string& reason) {
    if (!filter_searched_) {
      filter_searched_ = true;
      std::vector<GradedPresentation> companions;
      for (int j = 0; j <= dprime(); ++j) companions.push_back(M().deficiency(j).presentation());
      try {
        filter_form_ = find_filter_regular(M().module().presentation(), companions,
                                           options_.search_budget);
      } catch (const SearchExhausted& e) {
        filter_reason_ = std::string("skipped: ") + e.what();
      }
    }
    reason = filter_reason_;
    return filter_form_ ? &*filter_form_ : nullptr;
  }

  const CohomologyProfile& quotient_profile(const Polynomial& x) {
    if (!quotient_) {
      quotient_ = std::make_shared<const CohomologyProfile>(
          quotient_by_form(M().module().presentation(), x));
    }
    return *quotient_;
  }

  void lemma32() {
    const std::string ref =
        "length K^i(M/xM)_n = length (K^{i+1}/xK^{i+1})_{n+1} + length (0 :_{K^i} x)_n";
    std::string reason;
    const Polynomial* x = filter_form(reason);
    if (!x) return add(skipped_check("lemma3.2", ref, reason));
    const CohomologyProfile& q = quotient_profile(*x);
    const std::string window = "[" + std::to_string(window_.first) + "," + std::to_string(window_.second) + "]";
    for (int i = 0; i < dprime(); ++i) {
      AnalyzedModule lhs_mod = q.deficiency(i);
      AnalyzedModule quot(quotient_by_form(M().deficiency(i + 1).presentation(), *x));
      AnalyzedModule ann(annihilator_of_form(M().deficiency(i).presentation(), *x));
      long mismatches = 0;
      for (int n = window_.first; n <= window_.second; ++n) {
        if (lhs_mod.hilbert_function(n) != quot.hilbert_function(n + 1) + ann.hilbert_function(n)) {
          ++mismatches;
        }
      }
      add(evaluate_check(idx("lemma3.2", "i", i), ref, "mismatched degrees in " + window,
                         ExtendedInt(mismatches), "0", ExtendedInt(0), Direction::kEqual));
    }
  }

  void lemma33() {
    const std::string ref = "length K^{i+1}(M)_n <= sum_j binom(n-j-1, i-j) [sum_l binom(i-j, l) d^{i-l}(l-i)]";
    if (zero() || dim() < 1) return add(skipped_check("lemma3.3", ref, "skipped: dim(M) < 1"));
    const std::vector<mpz_class> diag = M().diagonal();
    for (int i = 0; i < dim(); ++i) {
      std::vector<mpz_class> caps(diag.begin(), diag.begin() + i + 1);
      // Report the degree with the least slack.
      const int hi = std::max(window_.second, i + 2);
      std::optional<std::pair<mpz_class, mpz_class>> worst;
      int worst_n = i;
      for (int n = std::max(i, window_.first); n <= hi; ++n) {
        mpz_class len = M().deficiency(i + 1).hilbert_function(n);
        mpz_class bound = deficiency_length_bound(i, n, caps);
        if (!worst || bound - len < worst->second - worst->first) {
          worst = {len, bound};
          worst_n = n;
        }
      }
      if (!worst) continue;
      add(evaluate_check(idx("lemma3.3", "i", i), ref,
                         "length K^" + std::to_string(i + 1) + "(M)_" + std::to_string(worst_n) +
                             " (tightest n in [" + std::to_string(std::max(i, window_.first)) + "," +
                             std::to_string(hi) + "])",
                         ExtendedInt(worst->first), "bound", ExtendedInt(worst->second),
                         Direction::kAtMost));
    }
  }

  void diag_bound() {
    const std::string ref = "d^i_M(n) <= sum_j binom(-n-j-1, i-j) [sum_l binom(i-j, l) x_{i-l}], n <= -i";
    if (zero() || dim() < 1) return add(skipped_check("diag-bound", ref, "skipped: dim(M) < 1"));
    const std::vector<mpz_class> diag = M().diagonal();
    for (int i = 0; i < dim(); ++i) {
      std::vector<mpz_class> caps(diag.begin(), diag.begin() + i + 1);
      const int lo = std::min(window_.first, -i - 2);
      std::optional<std::pair<mpz_class, mpz_class>> worst;
      int worst_n = -i;
      for (int n = lo; n <= -i; ++n) {
        mpz_class v = M().d(i, n);
        mpz_class bound = diagonal_cohomology_bound(i, n, caps);
        if (!worst || bound - v < worst->second - worst->first) {
          worst = {v, bound};
          worst_n = n;
        }
      }
      add(evaluate_check(idx("diag-bound", "i", i), ref,
                         "d^" + std::to_string(i) + "_M(" + std::to_string(worst_n) +
                             ") (tightest n in [" + std::to_string(lo) + "," + std::to_string(-i) + "])",
                         ExtendedInt(worst->first), "bound", ExtendedInt(worst->second),
                         Direction::kAtMost));
    }
  }

  void prop25() {
    const std::string ref = "reg(M) <= m + h^0_M(m), m >= max(reg(M/xM), gendeg(0 :_M x))";
    std::string reason;
    if (zero()) return add(skipped_check("prop2.5", ref, "skipped: zero module"));
    const Polynomial* x = filter_form(reason);
    if (!x) return add(skipped_check("prop2.5", ref, reason));
    const CohomologyProfile& q = quotient_profile(*x);
    AnalyzedModule ann(annihilator_of_form(M().module().presentation(), *x));
    const ExtendedInt m_e = max(q.module().regularity(), ann.gendeg());
    if (!m_e.is_finite()) return add(skipped_check("prop2.5", ref, kUnmet));
    const long m = finite(m_e);
    add(evaluate_check("prop2.5", ref, "reg(M)", M().reg(),
                       "m + h^0_M(m) (m=" + std::to_string(m) + ")",
                       ExtendedInt(mpz_class(m + M().h(0, static_cast<int>(m)))), Direction::kAtMost));
  }

  void sandwich() {
    const std::string ref = "reg^1(M) <= reg(M/xM) <= reg(M)";
    std::string reason;
    if (zero()) return add(skipped_check("sandwich", ref, "skipped: zero module"));
    const Polynomial* x = filter_form(reason);
    if (!x) return add(skipped_check("sandwich", ref, reason));
    const ExtendedInt mid = quotient_profile(*x).module().regularity();
    add(evaluate_check("sandwich[lower]", ref, "reg^1(M)", M().reg(1), "reg(M/xM)", mid,
                       Direction::kAtMost));
    add(evaluate_check("sandwich[upper]", ref, "reg(M/xM)", mid, "reg(M)", M().reg(),
                       Direction::kAtMost));
  }

  void gendeg() {
    const std::string ref = "gendeg(M) <= reg(M)";
    add(evaluate_check("gendeg", ref, "gendeg(M)", M().gendeg(), "reg(M)", M().reg(),
                       Direction::kAtMost));
  }

  void serre() {
    const std::string ref = "p_M(n) = sum_i (-1)^i d^i_M(n) = length M_n - sum_j (-1)^j h^j_M(n)";
    long mismatches = 0;
    const RationalPolynomial& p = M().module().hilbert_polynomial();
    for (int n = window_.first; n <= window_.second; ++n) {
      mpz_class via_h = M().module().hilbert_function(n);
      mpz_class via_d = 0;
      for (int j = 0; j <= dprime(); ++j) {
        via_h += (j % 2 == 0 ? -1 : 1) * M().h(j, n);
        if (j < dprime()) via_d += (j % 2 == 0 ? 1 : -1) * M().d(j, n);
      }
      if (mpq_class(via_h) != p(n) || mpq_class(via_d) != p(n)) ++mismatches;
    }
    add(evaluate_check("serre", ref,
                       "mismatched degrees in [" + std::to_string(window_.first) + "," +
                           std::to_string(window_.second) + "]",
                       ExtendedInt(mismatches), "0", ExtendedInt(0), Direction::kEqual));
  }

  void reg_routes() {
    const std::string ref = "max{j - i : beta_ij != 0} = sup{a_i(M) + i}";
    add(evaluate_check("reg-routes", ref, "reg via Betti", M().module().regularity(),
                       "reg via a-invariants", M().reg(), Direction::kEqual));
  }

  void h0_duality() {
    const std::string ref = "h^0_M(n) = length Gamma(M)_n";
    AnalyzedModule gamma(torsion_submodule(M().module().presentation()));
    long mismatches = 0;
    for (int n = window_.first; n <= window_.second; ++n) {
      if (M().h(0, n) != gamma.hilbert_function(n)) ++mismatches;
    }
    add(evaluate_check("h0-duality", ref,
                       "mismatched degrees in [" + std::to_string(window_.first) + "," +
                           std::to_string(window_.second) + "]",
                       ExtendedInt(mismatches), "0", ExtendedInt(0), Direction::kEqual));
  }

  void qdeg() {
    const std::string ref = "deg(q^i_M) <= i";
    for (int i = 0; i < dprime(); ++i) {
      add(evaluate_check(idx("qdeg", "i", i), ref, "deg(q^" + std::to_string(i) + ")",
                         M().q(i).is_zero() ? kNegInf : ExtendedInt(M().q(i).degree()),
                         std::to_string(i), ExtendedInt(i), Direction::kAtMost));
    }
  }

  const VerifyInput& input_;
  const VerifyOptions& options_;
  std::shared_ptr<const CohomologyProfile> profile_;
  std::pair<int, int> window_;
  std::vector<BoundCheck> checks_;
  std::optional<PairProfiles> pair_;
  bool filter_searched_ = false;
  std::optional<Polynomial> filter_form_;
  std::string filter_reason_;
  std::shared_ptr<const CohomologyProfile> quotient_;
};

}  // namespace

ExtendedInt BoundCheck::margin() const {
  if (status == CheckStatus::kSkipped) return ExtendedInt(0);
  if (lhs == rhs) return ExtendedInt(0);
  return direction == Direction::kAtLeast ? lhs - rhs : rhs - lhs;
}

ModulePair ideal_pair(const RingPtr& ring, const std::vector<Polynomial>& generators) {
  return ModulePair{ideal_presentation(ring, {}), ideal_presentation(ring, generators), true};
}

BoundCheck evaluate_check(std::string id, std::string ref, std::string lhs_name,
                          ExtendedInt lhs, std::string rhs_name, ExtendedInt rhs,
                          Direction direction) {
  BoundCheck c;
  c.id = std::move(id);
  c.ref = std::move(ref);
  c.lhs_name = std::move(lhs_name);
  c.lhs = std::move(lhs);
  c.rhs_name = std::move(rhs_name);
  c.rhs = std::move(rhs);
  c.direction = direction;
  bool ok = false;
  switch (direction) {
    case Direction::kAtMost: ok = c.lhs <= c.rhs; break;
    case Direction::kLessThan: ok = c.lhs < c.rhs; break;
    case Direction::kAtLeast: ok = c.lhs >= c.rhs; break;
    case Direction::kEqual: ok = c.lhs == c.rhs; break;
  }
  c.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  return c;
}

BoundCheck skipped_check(std::string id, std::string ref, std::string reason) {
  BoundCheck c;
  c.id = std::move(id);
  c.ref = std::move(ref);
  c.status = CheckStatus::kSkipped;
  c.note = std::move(reason);
  return c;
}

const std::vector<std::string>& check_families() {
  static const std::vector<std::string> families = {
      "thm3.6",   "cor3.7",   "thm4.2",   "cor4.3",     "cor4.4",     "cor4.6",
      "rem4.7",   "cor4.8",   "prop4.12", "cor4.13",    "cor4.14",    "thm5.3",
      "lemma3.1", "lemma3.2", "lemma3.3", "diag-bound", "prop2.5",    "sandwich",
      "gendeg",   "serre",    "reg-routes", "h0-duality", "qdeg"};
  return families;
}

bool Report::any_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.failed(); });
}

Report verify(const VerifyInput& input, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Verifier v(input, options);
  Report report = v.run();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cmreg
