#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modseries/module.hpp"
#include "modseries/ordinal.hpp"
#include "modseries/report.hpp"
#include "modseries/series.hpp"

namespace modseries {

/// total = ⊕ parts, with embeddings[i] (total.dim × parts[i].dim) carrying
/// part i onto its image.
class SumDecomposition {
 public:
  /// Checks that every embedding is an injective intertwiner and that the
  /// images form a direct sum filling the whole module.
  SumDecomposition(ModuleRep total, std::vector<ModuleRep> parts, std::vector<Mat> embeddings);

  const ModuleRep& total() const noexcept { return total_; }
  const std::vector<ModuleRep>& parts() const noexcept { return parts_; }
  const std::vector<Mat>& embeddings() const noexcept { return embeddings_; }
  std::vector<Submodule> images() const;

 private:
  ModuleRep total_;
  std::vector<ModuleRep> parts_;
  std::vector<Mat> embeddings_;
};

/// Block-diagonal sum; each embedded image is checked isomorphic to its part.
SumDecomposition external_direct_sum(std::span<const ModuleRep> parts, const SearchOptions& opts = {});

/// Internal decomposition of `total` into the given submodules, each part
/// presented in the coordinates of its canonical basis.
SumDecomposition internal_decomposition(const ModuleRep& total, std::span<const Submodule> parts);

/// W_1 = {0}, W_{i+1} = W_i + image(part i); each factor is verified
/// isomorphic to its part in input order.
NormalSeries canonical_sum_series(const SumDecomposition& dec, const SearchOptions& opts = {});

/// Both decompositions must split the same module into simple parts.
JordanHolderResult uniqueness_check(const SumDecomposition& a, const SumDecomposition& b,
                                    const SearchOptions& opts = {});

/// ⊕_{α<length} U for one simple module U named by `label`. Only the
/// ordinal length is tracked; `model` optionally binds U concretely.
struct SymbolicSumSeries {
  Ordinal length;
  std::string label;
  std::optional<ModuleRep> model;
};

/// Isomorphic iff the lengths have equal cardinality.
bool symbolic_iso(const SymbolicSumSeries& a, const SymbolicSumSeries& b);

enum class LabelKind { successor, limit };

struct SymbolicSeriesReport {
  ValidationReport validation;
  /// Labels from the last limit label (or 1) up to the length, with their
  /// kinds. Long finite runs are elided in the middle.
  std::vector<std::pair<Ordinal, LabelKind>> tail;
  bool has_limit_stage = false;
};

SymbolicSeriesReport validate_symbolic_series(const SymbolicSumSeries& s, const SearchOptions& opts = {});

/// Concrete n·U for a finite length and a bound model.
SumDecomposition materialize(const SymbolicSumSeries& s, const SearchOptions& opts = {});

}  // namespace modseries
