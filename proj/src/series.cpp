#include "modseries/series.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "modseries/error.hpp"
#include "modseries/hom.hpp"

namespace modseries {

namespace {

std::string at(std::size_t i, const NormalSeries& s) {
  std::string out = "index " + std::to_string(i);
  if (i < s.labels.size()) out += " (label " + to_string(s.labels[i]) + ")";
  return out;
}

void require_finite_labels(const NormalSeries& s) {
  for (const Ordinal& l : s.labels)
    if (!l.is_finite())
      throw Error(ErrorKind::unsupported_input,
                  "transfinite label " + to_string(l) + " on a concrete series");
}

std::vector<Submodule> submodules(const NormalSeries& s) {
  std::vector<Submodule> out;
  out.reserve(s.length());
  for (std::size_t i = 0; i < s.length(); ++i) out.push_back(s.term(i));
  return out;
}

std::vector<SubspaceBasis> dedup_chain(const std::vector<SubspaceBasis>& raw,
                                       std::vector<std::optional<std::size_t>>& factor_index) {
  std::vector<SubspaceBasis> terms{raw.front()};
  factor_index.assign(raw.size() - 1, std::nullopt);
  for (std::size_t k = 0; k + 1 < raw.size(); ++k) {
    if (raw[k + 1].dim() == raw[k].dim()) continue;
    factor_index[k] = terms.size() - 1;
    terms.push_back(raw[k + 1]);
  }
  return terms;
}

}  // namespace

NormalSeries NormalSeries::with_finite_labels(ModuleRep parent, std::vector<SubspaceBasis> terms) {
  std::vector<Ordinal> labels;
  labels.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) labels.push_back(Ordinal::finite(i + 1));
  return NormalSeries{std::move(parent), std::move(terms), std::move(labels)};
}

ValidationReport validate_normal_series(const NormalSeries& s) {
  ValidationReport report;
  const ModuleRep& rep = s.parent;
  if (s.terms.empty()) {
    report.fail("endpoint", "series has no terms");
    return report;
  }
  if (s.labels.size() != s.terms.size())
    report.fail("labels", std::to_string(s.labels.size()) + " labels for " +
                              std::to_string(s.terms.size()) + " terms");

  bool shapes_ok = true;
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (s.terms[i].field() != rep.field() || s.terms[i].ambient_dim() != rep.dim()) {
      report.fail("ambient", "term at " + at(i, s) + " does not live in the module");
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return report;

  if (!s.terms.front().is_zero()) report.fail("endpoint", "first term is not the zero submodule");
  if (!s.terms.back().is_full()) report.fail("endpoint", "last term is not the whole module");

  for (std::size_t i = 0; i < s.length(); ++i)
    if (!is_submodule(rep, s.terms[i]))
      report.fail("submodule", "term at " + at(i, s) + " is not stable under the generators");

  for (std::size_t i = 0; i + 1 < s.length(); ++i)
    if (!(s.terms[i + 1].contains(s.terms[i]) && s.terms[i + 1].dim() > s.terms[i].dim()))
      report.fail("strictness", "term at " + at(i, s) + " is not strictly contained in the next term");

  if (s.labels.size() == s.terms.size()) {
    if (!(s.labels.front() == Ordinal::finite(1)))
      report.fail("labels", "first label is " + to_string(s.labels.front()) + ", expected 1");
    for (std::size_t i = 0; i + 1 < s.labels.size(); ++i)
      if (!(s.labels[i] < s.labels[i + 1]))
        report.fail("labels", "labels not strictly increasing at " + at(i + 1, s));
    // At a limit label the term must be the union of all earlier terms; for
    // an ascending chain of subspaces that union is their sum.
    for (std::size_t i = 1; i < s.labels.size(); ++i) {
      if (!is_limit(s.labels[i])) continue;
      SubspaceBasis before = SubspaceBasis::zero(rep.field(), rep.dim());
      for (std::size_t k = 0; k < i; ++k) before = subspace_sum(before, s.terms[k]);
      if (!(before == s.terms[i]))
        report.fail("limit", "term at limit " + at(i, s) + " is not the union of the earlier terms");
    }
  }
  return report;
}

void require_valid(const NormalSeries& s) {
  ValidationReport report = validate_normal_series(s);
  if (!report.ok()) {
    const Issue& first = report.issues.front();
    throw Error(ErrorKind::series_validation, first.clause + ": " + first.message);
  }
}

NormalSeries composition_series(const ModuleRep& rep, const SearchOptions& opts) {
  std::vector<SubspaceBasis> terms{SubspaceBasis::zero(rep.field(), rep.dim())};
  Submodule current = Submodule::zero(rep);
  while (current.dim() < rep.dim()) {
    QuotientRep q = quotient(rep, current);
    Submodule bottom = minimal_submodule(q.quotient, opts);
    // Preimage of the simple bottom of V / V_i.
    SubspaceBasis lifted = image(q.section, bottom.basis());
    current = Submodule(rep, subspace_sum(current.basis(), lifted));
    terms.push_back(current.basis());
  }
  return NormalSeries::with_finite_labels(rep, std::move(terms));
}

FactorList factors(const NormalSeries& s) {
  require_valid(s);
  FactorList out;
  out.reserve(s.length() - 1);
  for (std::size_t i = 0; i + 1 < s.length(); ++i) out.push_back(subquotient(s.term(i + 1), s.term(i)));
  return out;
}

RefinementCheck is_refinement(const NormalSeries& fine, const NormalSeries& coarse) {
  if (!(fine.parent == coarse.parent)) throw Error(ErrorKind::precondition, "parent mismatch");
  RefinementCheck result;
  std::size_t next = 0;
  for (const SubspaceBasis& term : coarse.terms) {
    auto it = std::find(fine.terms.begin() + static_cast<std::ptrdiff_t>(next), fine.terms.end(), term);
    if (it == fine.terms.end()) {
      result.injection.clear();
      return result;
    }
    const auto index = static_cast<std::size_t>(it - fine.terms.begin());
    result.injection.push_back(index);
    next = index + 1;
  }
  result.refines = true;
  return result;
}

ButterflyResult zassenhaus_witness(const Submodule& u_outer, const Submodule& u,
                                   const Submodule& w_outer, const Submodule& w) {
  const ModuleRep& rep = u_outer.parent();
  if (!(u.parent() == rep) || !(w_outer.parent() == rep) || !(w.parent() == rep))
    throw Error(ErrorKind::precondition, "parent mismatch");
  if (!u_outer.contains(u)) throw Error(ErrorKind::precondition, "nesting violated: U not inside Ũ");
  if (!w_outer.contains(w)) throw Error(ErrorKind::precondition, "nesting violated: W not inside W̃");

  const Submodule common = submodule_intersect(u_outer, w_outer);
  const Submodule m = submodule_sum(u, submodule_intersect(u_outer, w));
  const Submodule n = submodule_sum(w, submodule_intersect(w_outer, u));
  Subquotient left = subquotient(submodule_sum(u, common), m);
  Subquotient right = subquotient(submodule_sum(w, common), n);

  // Both quotients are images of the common domain Ũ∩W̃.
  const Mat domain = common.basis().inclusion();
  const Mat phi = left.projection * domain;
  const Mat psi = right.projection * domain;
  const SubspaceBasis expected_kernel =
      subspace_sum(submodule_intersect(w_outer, u).basis(), submodule_intersect(u_outer, w).basis());
  const SubspaceBasis ker_phi = image(domain, kernel_basis(phi));
  const SubspaceBasis ker_psi = image(domain, kernel_basis(psi));
  if (!(ker_phi == expected_kernel) || !(ker_psi == expected_kernel))
    throw Error(ErrorKind::internal, "butterfly kernels disagree");

  const std::size_t q = phi.rows();
  if (psi.rows() != q) throw Error(ErrorKind::internal, "butterfly quotients differ in dimension");

  // T = ψ ∘ (right inverse of φ); well defined because the kernels agree.
  std::vector<Vec> lifts;
  lifts.reserve(q);
  for (std::size_t k = 0; k < q; ++k) {
    Vec e(q, 0);
    e[k] = 1;
    std::optional<Vec> x = solve(phi, e);
    if (!x) throw Error(ErrorKind::internal, "butterfly projection is not surjective");
    lifts.push_back(std::move(*x));
  }
  const Mat right_inverse = Mat::from_columns(rep.field(), phi.cols(), lifts);
  Mat t = psi * right_inverse;
  if (t * phi != psi || !verify_witness(t, left.factor.quotient, right.factor.quotient))
    throw Error(ErrorKind::internal, "butterfly witness failed verification");

  return ButterflyResult{std::move(left), std::move(right), IsoWitness{std::move(t)}, expected_kernel};
}

SchreierResult schreier_refine(const NormalSeries& s, const NormalSeries& t) {
  if (!(s.parent == t.parent)) throw Error(ErrorKind::precondition, "parent mismatch");
  require_valid(s);
  require_valid(t);
  require_finite_labels(s);
  require_finite_labels(t);

  const std::vector<Submodule> v = submodules(s);
  const std::vector<Submodule> w = submodules(t);
  const std::size_t n = v.size();
  const std::size_t m = w.size();

  // Raw chains, repeats included. Factor (i, j) of the first chain sits at
  // position i*(m-1) + j; factor (j, i) of the second at j*(n-1) + i.
  std::vector<SubspaceBasis> raw_s{v.front().basis()};
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 1; j < m; ++j)
      raw_s.push_back(submodule_sum(v[i], submodule_intersect(v[i + 1], w[j])).basis());
  std::vector<SubspaceBasis> raw_t{w.front().basis()};
  for (std::size_t j = 0; j + 1 < m; ++j)
    for (std::size_t i = 1; i < n; ++i)
      raw_t.push_back(submodule_sum(w[j], submodule_intersect(w[j + 1], v[i])).basis());

  std::vector<std::optional<std::size_t>> index_s;
  std::vector<std::optional<std::size_t>> index_t;
  std::vector<SubspaceBasis> terms_s = dedup_chain(raw_s, index_s);
  std::vector<SubspaceBasis> terms_t = dedup_chain(raw_t, index_t);

  SeriesPairing pairing;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const std::optional<std::size_t> a = index_s[i * (m - 1) + j];
      const std::optional<std::size_t> b = index_t[j * (n - 1) + i];
      if (a.has_value() != b.has_value())
        throw Error(ErrorKind::internal, "interpolated factors differ in dimension");
      if (!a) continue;
      ButterflyResult butterfly = zassenhaus_witness(v[i + 1], v[i], w[j + 1], w[j]);
      pairing.pairs.push_back({*a, *b, std::move(butterfly.witness)});
    }

  return SchreierResult{NormalSeries::with_finite_labels(s.parent, std::move(terms_s)),
                        NormalSeries::with_finite_labels(t.parent, std::move(terms_t)),
                        std::move(pairing)};
}

JordanHolderResult jordan_holder_check(const NormalSeries& s, const NormalSeries& t,
                                       const SearchOptions& opts) {
  if (!(s.parent == t.parent)) throw Error(ErrorKind::precondition, "parent mismatch");
  const FactorList fs = factors(s);
  const FactorList ft = factors(t);
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!is_simple(fs[i].factor.quotient, opts))
      throw Error(ErrorKind::series_validation,
                  "factor not simple at index " + std::to_string(i) + " of the first series");
  for (std::size_t i = 0; i < ft.size(); ++i)
    if (!is_simple(ft[i].factor.quotient, opts))
      throw Error(ErrorKind::series_validation,
                  "factor not simple at index " + std::to_string(i) + " of the second series");

  // Classes keyed by a representative factor; members listed per series.
  struct IsoClass {
    const ModuleRep* representative;
    bool from_first;
    std::size_t rep_index;
    std::vector<std::size_t> in_first;
    std::vector<std::size_t> in_second;
  };
  std::vector<IsoClass> classes;
  auto classify = [&](const FactorList& list, bool first) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      const ModuleRep& q = list[i].factor.quotient;
      auto it = std::find_if(classes.begin(), classes.end(), [&](const IsoClass& c) {
        return simple_isomorphism(*c.representative, q).has_value();
      });
      if (it == classes.end()) {
        classes.push_back(IsoClass{&q, first, i, {}, {}});
        it = classes.end() - 1;
      }
      (first ? it->in_first : it->in_second).push_back(i);
    }
  };
  classify(fs, true);
  classify(ft, false);

  for (const IsoClass& c : classes)
    if (c.in_first.size() != c.in_second.size())
      return ClassMismatch{c.representative->dim(), c.in_first.size(), c.in_second.size(),
                           c.from_first, c.rep_index};

  SeriesPairing pairing;
  for (const IsoClass& c : classes)
    for (std::size_t k = 0; k < c.in_first.size(); ++k) {
      const std::size_t a = c.in_first[k];
      const std::size_t b = c.in_second[k];
      std::optional<IsoWitness> iso = simple_isomorphism(fs[a].factor.quotient, ft[b].factor.quotient);
      if (!iso) throw Error(ErrorKind::internal, "class members are not isomorphic");
      pairing.pairs.push_back({a, b, std::move(*iso)});
    }
  std::sort(pairing.pairs.begin(), pairing.pairs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return pairing;
}

bool is_unrefinable(const NormalSeries& s, const SearchOptions& opts) {
  require_valid(s);
  require_finite_labels(s);
  const FactorList fs = factors(s);
  return std::all_of(fs.begin(), fs.end(),
                     [&](const Subquotient& f) { return is_simple(f.factor.quotient, opts); });
}

}  // namespace modseries
