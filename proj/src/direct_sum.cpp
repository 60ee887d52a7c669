#include "modseries/direct_sum.hpp"

#include <string>
#include <utility>

#include "modseries/error.hpp"
#include "modseries/hom.hpp"

namespace modseries {

namespace {

constexpr std::uint64_t kTailLimit = 16;

std::string part_name(std::size_t i) { return "part " + std::to_string(i); }

}  // namespace

SumDecomposition::SumDecomposition(ModuleRep total, std::vector<ModuleRep> parts,
                                   std::vector<Mat> embeddings)
    : total_(std::move(total)), parts_(std::move(parts)), embeddings_(std::move(embeddings)) {
  if (parts_.empty()) throw Error(ErrorKind::precondition, "a decomposition needs at least one part");
  if (parts_.size() != embeddings_.size())
    throw Error(ErrorKind::shape, std::to_string(parts_.size()) + " parts but " +
                                      std::to_string(embeddings_.size()) + " embeddings");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const ModuleRep& part = parts_[i];
    const Mat& e = embeddings_[i];
    if (part.field() != total_.field()) throw Error(ErrorKind::field, part_name(i) + " over a different field");
    if (part.gen_count() != total_.gen_count())
      throw Error(ErrorKind::shape, part_name(i) + " has " + std::to_string(part.gen_count()) +
                                        " generators, expected " + std::to_string(total_.gen_count()));
    if (part.dim() == 0) throw Error(ErrorKind::precondition, part_name(i) + " is the zero module");
    if (e.rows() != total_.dim() || e.cols() != part.dim() || rank(e) != part.dim() ||
        !intertwines(e, part.gens(), total_.gens()))
      throw Error(ErrorKind::precondition, "embedding of " + part_name(i) + " is not an injective module map");
  }
  const std::vector<Submodule> imgs = images();
  std::size_t dims = 0;
  for (const Submodule& s : imgs) dims += s.dim();
  if (!is_direct(imgs) || dims != total_.dim())
    throw Error(ErrorKind::precondition, "embedded parts do not form a direct sum of the whole module");
}

std::vector<Submodule> SumDecomposition::images() const {
  std::vector<Submodule> out;
  out.reserve(embeddings_.size());
  for (const Mat& e : embeddings_) out.emplace_back(total_, SubspaceBasis::row_space(e.transpose()));
  return out;
}

SumDecomposition external_direct_sum(std::span<const ModuleRep> parts, const SearchOptions& opts) {
  if (parts.empty()) throw Error(ErrorKind::precondition, "a direct sum needs at least one part");
  const FieldSpec field = parts.front().field();
  const std::size_t k = parts.front().gen_count();
  std::size_t total_dim = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].field() != field) throw Error(ErrorKind::field, part_name(i) + " over a different field");
    if (parts[i].gen_count() != k)
      throw Error(ErrorKind::shape, part_name(i) + " has " + std::to_string(parts[i].gen_count()) +
                                        " generators, expected " + std::to_string(k));
    total_dim += parts[i].dim();
  }

  std::vector<Mat> gens(k, Mat(field, total_dim, total_dim));
  std::vector<Mat> embeddings;
  std::size_t offset = 0;
  for (const ModuleRep& part : parts) {
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t r = 0; r < part.dim(); ++r)
        for (std::size_t c = 0; c < part.dim(); ++c) gens[g](offset + r, offset + c) = part.gens()[g](r, c);
    Mat e(field, total_dim, part.dim());
    for (std::size_t c = 0; c < part.dim(); ++c) e(offset + c, c) = 1;
    embeddings.push_back(std::move(e));
    offset += part.dim();
  }

  SumDecomposition dec(ModuleRep(field, total_dim, std::move(gens)),
                       std::vector<ModuleRep>(parts.begin(), parts.end()), std::move(embeddings));
  const std::vector<Submodule> imgs = dec.images();
  for (std::size_t i = 0; i < imgs.size(); ++i)
    if (!is_isomorphic(restrict_to(imgs[i]), parts[i], opts))
      throw Error(ErrorKind::internal, "embedded image of " + part_name(i) + " is not isomorphic to it");
  return dec;
}

SumDecomposition internal_decomposition(const ModuleRep& total, std::span<const Submodule> parts) {
  std::vector<ModuleRep> modules;
  std::vector<Mat> embeddings;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].parent() == total))
      throw Error(ErrorKind::precondition, part_name(i) + " is not a submodule of the given module");
    modules.push_back(restrict_to(parts[i]));
    embeddings.push_back(parts[i].basis().inclusion());
  }
  return SumDecomposition(total, std::move(modules), std::move(embeddings));
}

NormalSeries canonical_sum_series(const SumDecomposition& dec, const SearchOptions& opts) {
  const ModuleRep& total = dec.total();
  std::vector<SubspaceBasis> terms{SubspaceBasis::zero(total.field(), total.dim())};
  for (const Submodule& img : dec.images()) terms.push_back(subspace_sum(terms.back(), img.basis()));
  NormalSeries series = NormalSeries::with_finite_labels(total, std::move(terms));

  const FactorList fs = factors(series);
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!is_isomorphic(fs[i].factor.quotient, dec.parts()[i], opts))
      throw Error(ErrorKind::internal, "factor " + std::to_string(i) + " of the sum series is not isomorphic to " +
                                           part_name(i));
  return series;
}

JordanHolderResult uniqueness_check(const SumDecomposition& a, const SumDecomposition& b,
                                    const SearchOptions& opts) {
  if (!(a.total() == b.total()))
    throw Error(ErrorKind::precondition, "decompositions of different modules");
  const auto require_simple_parts = [&](const SumDecomposition& d, const char* which) {
    for (std::size_t i = 0; i < d.parts().size(); ++i)
      if (!is_simple(d.parts()[i], opts))
        throw Error(ErrorKind::precondition, part_name(i) + " of the " + which + " decomposition is not simple");
  };
  require_simple_parts(a, "first");
  require_simple_parts(b, "second");
  return jordan_holder_check(canonical_sum_series(a, opts), canonical_sum_series(b, opts), opts);
}

bool symbolic_iso(const SymbolicSumSeries& a, const SymbolicSumSeries& b) {
  if (a.label != b.label)
    throw Error(ErrorKind::incomparable_label, "labels '" + a.label + "' and '" + b.label + "' differ");
  return cardinality(a.length) == cardinality(b.length);
}

SymbolicSeriesReport validate_symbolic_series(const SymbolicSumSeries& s, const SearchOptions& opts) {
  SymbolicSeriesReport report;
  if (s.length.is_zero()) {
    report.validation.fail("length", "length must be at least 1");
    return report;
  }
  if (s.model) {
    bool simple = false;
    try {
      simple = is_simple(*s.model, opts);
    } catch (const Error& e) {
      report.validation.fail("model", std::string("simplicity of the bound model undecided: ") + e.what());
    }
    if (!simple && report.validation.ok())
      report.validation.fail("model", "bound model for '" + s.label + "' is not simple");
  }

  // length = base + k with base zero or a limit and k finite.
  std::vector<OrdinalTerm> base_terms = s.length.terms();
  std::uint64_t k = 0;
  if (!base_terms.empty() && base_terms.back().exponent.is_zero()) {
    k = base_terms.back().coefficient;
    base_terms.pop_back();
  }
  const Ordinal base = Ordinal::from_terms(std::move(base_terms));
  report.has_limit_stage = !base.is_zero();

  auto label_at = [&](std::uint64_t offset) { return add(base, Ordinal::finite(offset)); };
  const std::uint64_t first = base.is_zero() ? 1 : 0;  // offset of the first listed label
  const std::uint64_t count = k - first + 1;
  auto push = [&](std::uint64_t offset) {
    Ordinal label = label_at(offset);
    const LabelKind kind = is_limit(label) ? LabelKind::limit : LabelKind::successor;
    report.tail.emplace_back(std::move(label), kind);
  };
  if (count <= kTailLimit) {
    for (std::uint64_t o = first; o <= k; ++o) push(o);
  } else {
    for (std::uint64_t o = first; o < first + kTailLimit / 2; ++o) push(o);
    for (std::uint64_t o = k - kTailLimit / 2 + 1; o <= k; ++o) push(o);
  }

  if (report.has_limit_stage)
    report.validation.notes.push_back(
        "each limit stage is the direct sum over all smaller indices, hence the union of the earlier stages");
  return report;
}

SumDecomposition materialize(const SymbolicSumSeries& s, const SearchOptions& opts) {
  if (!s.model) throw Error(ErrorKind::precondition, "label '" + s.label + "' has no bound model");
  if (!s.length.is_finite())
    throw Error(ErrorKind::unsupported_input, "length " + to_string(s.length) + " cannot be materialized");
  const std::vector<ModuleRep> copies(s.length.finite_value(), *s.model);
  return external_direct_sum(copies, opts);
}

}  // namespace modseries
