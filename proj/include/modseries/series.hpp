#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "modseries/module.hpp"
#include "modseries/ordinal.hpp"
#include "modseries/report.hpp"

namespace modseries {

/// Ascending chain {0} = V_1 ⊊ V_2 ⊊ ... ⊊ V_n = V with ordinal labels.
/// Terms are raw subspaces so that malformed chains can be represented and
/// reported; validate_normal_series checks every structural clause.
struct NormalSeries {
  ModuleRep parent;
  std::vector<SubspaceBasis> terms;
  std::vector<Ordinal> labels;

  /// Labels 1, 2, ..., n.
  static NormalSeries with_finite_labels(ModuleRep parent, std::vector<SubspaceBasis> terms);

  std::size_t length() const noexcept { return terms.size(); }
  Submodule term(std::size_t i) const { return Submodule(parent, terms[i]); }

  friend bool operator==(const NormalSeries&, const NormalSeries&) = default;
};

/// Factor i is terms[i+1] / terms[i].
using FactorList = std::vector<Subquotient>;

/// Bijection between the factors of two series; witnesses[k] maps factor
/// pairs[k].first of the first series onto factor pairs[k].second of the
/// second, in factor coordinates.
struct SeriesPairing {
  struct Pair {
    std::size_t first;
    std::size_t second;
    IsoWitness witness;
  };
  std::vector<Pair> pairs;
};

struct RefinementCheck {
  bool refines = false;
  std::vector<std::size_t> injection;  // coarse index -> fine index
};

struct ButterflyResult {
  Subquotient left;   // (U + Ũ∩W̃) / (U + Ũ∩W)
  Subquotient right;  // (W + W̃∩Ũ) / (W + W̃∩U)
  IsoWitness witness;
  SubspaceBasis common_kernel;  // (W̃∩U) + (Ũ∩W) inside Ũ∩W̃
};

struct SchreierResult {
  NormalSeries first;
  NormalSeries second;
  SeriesPairing pairing;
};

/// An isomorphism class of simple factors whose multiplicities differ.
struct ClassMismatch {
  std::size_t factor_dim = 0;
  std::size_t count_first = 0;
  std::size_t count_second = 0;
  bool representative_in_first = true;
  std::size_t representative = 0;  // factor index in the series named above
};

using JordanHolderResult = std::variant<SeriesPairing, ClassMismatch>;

ValidationReport validate_normal_series(const NormalSeries& s);
/// Throws a series_validation error carrying the first failed clause.
void require_valid(const NormalSeries& s);

NormalSeries composition_series(const ModuleRep& rep, const SearchOptions& opts = {});
FactorList factors(const NormalSeries& s);
RefinementCheck is_refinement(const NormalSeries& fine, const NormalSeries& coarse);

/// Builds and verifies the isomorphism between the two sandwiched quotients
/// through the common domain Ũ∩W̃. Requires u ⊆ u_outer and w ⊆ w_outer.
ButterflyResult zassenhaus_witness(const Submodule& u_outer, const Submodule& u,
                                   const Submodule& w_outer, const Submodule& w);

/// Interpolates V_i + (V_{i+1} ∩ W_j) and W_j + (W_{j+1} ∩ V_i), drops
/// repeated terms, and certifies each surviving factor pair.
SchreierResult schreier_refine(const NormalSeries& s, const NormalSeries& t);

/// Both inputs must be composition series; a non-simple factor raises a
/// series_validation error.
JordanHolderResult jordan_holder_check(const NormalSeries& s, const NormalSeries& t,
                                       const SearchOptions& opts = {});

bool is_unrefinable(const NormalSeries& s, const SearchOptions& opts = {});

}  // namespace modseries
