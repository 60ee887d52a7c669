#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "modseries/matrix.hpp"
#include "modseries/report.hpp"
#include "modseries/subspace.hpp"

namespace modseries {

enum class VectorOrder { ascending, descending };

/// Knobs for the searches that fall back to sampling once p^dim grows past
/// max_enum. Every randomized path draws from a generator seeded with `seed`.
struct SearchOptions {
  std::uint64_t max_enum = 4096;
  std::uint64_t seed = 0;
  std::size_t trials = 512;
  // Enumeration order for vectors, and the direction of the lexicographic
  // tie-break in minimal_submodule.
  VectorOrder order = VectorOrder::ascending;
};

/// p^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::size_t e);

/// Unchecked module description, as read from a file.
struct RawMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> entries;
};

struct ModuleData {
  std::uint64_t p = 0;
  std::size_t dim = 0;
  std::vector<RawMatrix> gens;
};

/// Reports every structural defect of the description. Bilinearity and
/// associativity of the action hold automatically once the generators are
/// well-formed square matrices over GF(p); the report notes this.
ValidationReport validate_module(const ModuleData& data);

/// A left module over the algebra generated by `gens` inside End(GF(p)^dim).
/// No generator has to act as the identity. Copies share the same immutable
/// storage.
class ModuleRep {
 public:
  ModuleRep(FieldSpec field, std::size_t dim, std::vector<Mat> gens);
  /// Throws the first issue reported by validate_module.
  static ModuleRep from_data(const ModuleData& data);

  const FieldSpec& field() const noexcept { return data_->field; }
  std::size_t dim() const noexcept { return data_->dim; }
  const std::vector<Mat>& gens() const noexcept { return data_->gens; }
  std::size_t gen_count() const noexcept { return data_->gens.size(); }

  friend bool operator==(const ModuleRep& a, const ModuleRep& b);

 private:
  struct Data {
    FieldSpec field;
    std::size_t dim;
    std::vector<Mat> gens;
  };
  std::shared_ptr<const Data> data_;
};

/// A generator-stable subspace of its parent.
class Submodule {
 public:
  /// Throws invalid_submodule when the basis is not generator-stable.
  Submodule(ModuleRep parent, SubspaceBasis basis);

  static Submodule zero(const ModuleRep& parent);
  static Submodule full(const ModuleRep& parent);

  const ModuleRep& parent() const noexcept { return parent_; }
  const SubspaceBasis& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.dim(); }
  bool contains(const Submodule& other) const { return basis_.contains(other.basis_); }

  friend bool operator==(const Submodule&, const Submodule&) = default;

 private:
  ModuleRep parent_;
  SubspaceBasis basis_;
};

/// parent / divisor. Quotient coordinates are the non-pivot coordinates of
/// the divisor's canonical basis, in increasing order.
struct QuotientRep {
  ModuleRep parent;
  Submodule divisor;
  ModuleRep quotient;
  Mat projection;  // quotient.dim × parent.dim
  Mat section;     // parent.dim × quotient.dim, coset representatives
};

/// outer / inner for nested submodules of a common parent, with maps to and
/// from the parent's coordinates.
struct Subquotient {
  Submodule outer;
  Submodule inner;
  QuotientRep factor;  // factor.parent is the action restricted to outer
  Mat projection;      // factor dim × parent dim, valid on vectors of outer
  Mat lift;            // parent dim × factor dim
};

struct IsoWitness {
  Mat matrix;  // maps source coordinates to target coordinates
};

bool is_submodule(const ModuleRep& rep, const SubspaceBasis& s);

/// Smallest generator-stable subspace containing the seeds.
Submodule spin(const ModuleRep& rep, const std::vector<Vec>& seeds);

QuotientRep quotient(const ModuleRep& rep, const Submodule& w);
Subquotient subquotient(const Submodule& outer, const Submodule& inner);

/// The action on a submodule in the coordinates of its canonical basis.
ModuleRep restrict_to(const Submodule& s);

Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersect(const Submodule& a, const Submodule& b);
bool is_direct(std::span<const Submodule> parts);

bool is_simple(const ModuleRep& rep, const SearchOptions& opts = {});

/// Within the enumeration bound: a nonzero submodule of least dimension, ties
/// broken by the lexicographic order of canonical bases (least for ascending,
/// greatest for descending). Above the bound a sampled descent returns a
/// simple submodule, or throws a resource error.
Submodule minimal_submodule(const ModuleRep& rep, const SearchOptions& opts = {});

std::vector<Mat> hom_space(const ModuleRep& src, const ModuleRep& dst);

/// An invertible intertwiner src → dst, or nullopt when none exists. Throws
/// a resource error when the hom space is too large to search exhaustively
/// and sampling finds nothing.
std::optional<IsoWitness> is_isomorphic(const ModuleRep& src, const ModuleRep& dst,
                                        const SearchOptions& opts = {});

/// Schur's lemma shortcut; both modules must be simple.
std::optional<IsoWitness> simple_isomorphism(const ModuleRep& src, const ModuleRep& dst);

/// Invertible and intertwining.
bool verify_witness(const Mat& t, const ModuleRep& src, const ModuleRep& dst);

}  // namespace modseries
