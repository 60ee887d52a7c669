#include "modseries/module.hpp"

#include <deque>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "modseries/error.hpp"
#include "modseries/hom.hpp"

namespace modseries {

namespace {

Vec decode_vector(std::uint64_t index, std::uint64_t p, std::size_t dim) {
  Vec v(dim, 0);
  for (std::size_t i = dim; i-- > 0;) {
    v[i] = static_cast<Scalar>(index % p);
    index /= p;
  }
  return v;
}

// One representative per line: first nonzero coordinate equal to 1.
bool is_normalized(const Vec& v) {
  for (Scalar e : v)
    if (e != 0) return e == 1;
  return false;
}

// Visits the normalized nonzero vectors of GF(p)^dim in lexicographic order
// (or its reverse) until visit returns false.
template <typename Visit>
void for_each_line(std::uint64_t p, std::size_t dim, VectorOrder order, Visit&& visit) {
  const std::uint64_t total = saturating_pow(p, dim);
  for (std::uint64_t k = 1; k < total; ++k) {
    const std::uint64_t index = order == VectorOrder::ascending ? k : total - k;
    Vec v = decode_vector(index, p, dim);
    if (!is_normalized(v)) continue;
    if (!visit(v)) return;
  }
}

Vec random_nonzero_vector(std::mt19937_64& rng, const FieldSpec& f, std::size_t dim) {
  for (;;) {
    Vec v(dim);
    for (Scalar& e : v) e = static_cast<Scalar>(rng() % f.modulus());
    if (!is_zero_vector(v)) return v;
  }
}

void require_same_parent(const Submodule& a, const Submodule& b) {
  if (!(a.parent() == b.parent())) throw Error(ErrorKind::precondition, "parent mismatch");
}

bool preferred(const SubspaceBasis& candidate, const SubspaceBasis& best, VectorOrder order) {
  if (candidate.dim() != best.dim()) return candidate.dim() < best.dim();
  return order == VectorOrder::ascending ? lex_less(candidate, best) : lex_less(best, candidate);
}

Mat combine(const std::vector<Mat>& basis, const Vec& coeffs) {
  Mat t = basis.front().scaled(coeffs[0]);
  for (std::size_t i = 1; i < basis.size(); ++i)
    if (coeffs[i] != 0) t = t + basis[i].scaled(coeffs[i]);
  return t;
}

}  // namespace

std::uint64_t saturating_pow(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p)
      return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

ValidationReport validate_module(const ModuleData& data) {
  ValidationReport report;
  const bool field_ok = is_prime(data.p) && data.p < (std::uint64_t{1} << 31);
  if (!is_prime(data.p))
    report.fail("field", "modulus not prime");
  else if (!field_ok)
    report.fail("field", "modulus " + std::to_string(data.p) + " exceeds 2^31");

  for (std::size_t g = 0; g < data.gens.size(); ++g) {
    const RawMatrix& m = data.gens[g];
    const std::string name = "generator " + std::to_string(g);
    if (m.rows != m.cols) {
      report.fail("shape", name + " is " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                               ", not square");
      continue;
    }
    if (m.rows != data.dim) {
      report.fail("shape", name + " is " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                               ", expected " + std::to_string(data.dim) + "x" +
                               std::to_string(data.dim));
      continue;
    }
    if (m.entries.size() != m.rows * m.cols) {
      report.fail("shape", name + " has " + std::to_string(m.entries.size()) + " entries, expected " +
                               std::to_string(m.rows * m.cols));
      continue;
    }
    if (!field_ok) continue;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
      const std::int64_t e = m.entries[i];
      if (e < 0 || static_cast<std::uint64_t>(e) >= data.p) {
        report.fail("range", name + " entry (" + std::to_string(i / m.cols) + "," +
                                 std::to_string(i % m.cols) + ") = " + std::to_string(e) +
                                 " not in [0, " + std::to_string(data.p) + ")");
        break;
      }
    }
  }
  if (report.ok())
    report.notes.push_back(
        "action by square matrices over a prime field: additivity in the vector and in the algebra "
        "element, associativity and scalar compatibility hold automatically");
  return report;
}

ModuleRep::ModuleRep(FieldSpec field, std::size_t dim, std::vector<Mat> gens) {
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].field() != field)
      throw Error(ErrorKind::field, "generator " + std::to_string(g) + " over a different field");
    if (gens[g].rows() != dim || gens[g].cols() != dim)
      throw Error(ErrorKind::shape, "generator " + std::to_string(g) + " is " +
                                        std::to_string(gens[g].rows()) + "x" +
                                        std::to_string(gens[g].cols()) + ", expected " +
                                        std::to_string(dim) + "x" + std::to_string(dim));
  }
  data_ = std::make_shared<const Data>(Data{field, dim, std::move(gens)});
}

ModuleRep ModuleRep::from_data(const ModuleData& data) {
  ValidationReport report = validate_module(data);
  if (!report.ok()) {
    const Issue& first = report.issues.front();
    const ErrorKind kind = first.clause == "field"   ? ErrorKind::field
                           : first.clause == "range" ? ErrorKind::range
                                                     : ErrorKind::shape;
    throw Error(kind, first.message);
  }
  FieldSpec field(data.p);
  std::vector<Mat> gens;
  gens.reserve(data.gens.size());
  for (const RawMatrix& m : data.gens) {
    std::vector<Scalar> entries(m.entries.begin(), m.entries.end());
    gens.emplace_back(field, m.rows, m.cols, std::move(entries));
  }
  return ModuleRep(field, data.dim, std::move(gens));
}

bool operator==(const ModuleRep& a, const ModuleRep& b) {
  if (a.data_ == b.data_) return true;
  return a.field() == b.field() && a.dim() == b.dim() && a.gens() == b.gens();
}

Submodule::Submodule(ModuleRep parent, SubspaceBasis basis)
    : parent_(std::move(parent)), basis_(std::move(basis)) {
  if (!is_submodule(parent_, basis_))
    throw Error(ErrorKind::invalid_submodule, "subspace is not stable under the generators");
}

Submodule Submodule::zero(const ModuleRep& parent) {
  return Submodule(parent, SubspaceBasis::zero(parent.field(), parent.dim()));
}

Submodule Submodule::full(const ModuleRep& parent) {
  return Submodule(parent, SubspaceBasis::full(parent.field(), parent.dim()));
}

bool is_submodule(const ModuleRep& rep, const SubspaceBasis& s) {
  if (s.field() != rep.field()) throw Error(ErrorKind::field, "subspace over a different field");
  if (s.ambient_dim() != rep.dim())
    throw Error(ErrorKind::shape, "subspace of ambient dimension " + std::to_string(s.ambient_dim()) +
                                      " in a module of dimension " + std::to_string(rep.dim()));
  for (const Mat& a : rep.gens())
    for (const Vec& w : s.rows())
      if (!s.contains(a.apply(w))) return false;
  return true;
}

Submodule spin(const ModuleRep& rep, const std::vector<Vec>& seeds) {
  const FieldSpec& f = rep.field();
  EchelonBuilder builder(f, rep.dim());
  std::deque<Vec> pending;
  for (const Vec& s : seeds) {
    if (s.size() != rep.dim())
      throw Error(ErrorKind::shape, "seed of length " + std::to_string(s.size()) +
                                        " in a module of dimension " + std::to_string(rep.dim()));
    for (Scalar e : s)
      if (e >= f.modulus())
        throw Error(ErrorKind::range, "seed entry " + std::to_string(e) + " not in [0, " +
                                          std::to_string(f.modulus()) + ")");
    pending.push_back(s);
  }
  while (!pending.empty() && builder.dim() < rep.dim()) {
    Vec added = builder.add(pending.front());
    pending.pop_front();
    if (added.empty()) continue;
    for (const Mat& a : rep.gens()) pending.push_back(a.apply(added));
  }
  return Submodule(rep, builder.finish());
}

QuotientRep quotient(const ModuleRep& rep, const Submodule& w) {
  if (!(w.parent() == rep) && !is_submodule(rep, w.basis()))
    throw Error(ErrorKind::invalid_submodule, "divisor is not stable under the generators");
  const FieldSpec& f = rep.field();
  const std::size_t d = rep.dim();
  const SubspaceBasis& basis = w.basis();

  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : basis.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t q = free_cols.size();

  Mat projection(f, q, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec e(d, 0);
    e[j] = 1;
    Vec r = basis.reduce(e);
    for (std::size_t k = 0; k < q; ++k) projection(k, j) = r[free_cols[k]];
  }
  Mat section(f, d, q);
  for (std::size_t k = 0; k < q; ++k) section(free_cols[k], k) = 1;

  std::vector<Mat> induced;
  induced.reserve(rep.gen_count());
  for (const Mat& a : rep.gens()) {
    Mat bar = projection * a * section;
    if (projection * a != bar * projection)
      throw Error(ErrorKind::internal, "induced action does not intertwine the projection");
    induced.push_back(std::move(bar));
  }
  Submodule divisor = w.parent() == rep ? w : Submodule(rep, basis);
  return QuotientRep{rep, std::move(divisor), ModuleRep(f, q, std::move(induced)),
                     std::move(projection), std::move(section)};
}

ModuleRep restrict_to(const Submodule& s) {
  const Mat coords = s.basis().coordinate_map();
  const Mat incl = s.basis().inclusion();
  std::vector<Mat> gens;
  gens.reserve(s.parent().gen_count());
  for (const Mat& a : s.parent().gens()) gens.push_back(coords * a * incl);
  return ModuleRep(s.parent().field(), s.dim(), std::move(gens));
}

Subquotient subquotient(const Submodule& outer, const Submodule& inner) {
  require_same_parent(outer, inner);
  if (!outer.contains(inner))
    throw Error(ErrorKind::precondition, "inner submodule not contained in outer");
  ModuleRep restricted = restrict_to(outer);
  std::vector<Vec> inner_coords;
  inner_coords.reserve(inner.dim());
  for (const Vec& r : inner.basis().rows()) inner_coords.push_back(outer.basis().coordinates(r));
  Submodule inner_restricted(
      restricted, SubspaceBasis::span(restricted.field(), restricted.dim(), inner_coords));
  QuotientRep factor = quotient(restricted, inner_restricted);
  Mat projection = factor.projection * outer.basis().coordinate_map();
  Mat lift = outer.basis().inclusion() * factor.section;
  return Subquotient{outer, inner, std::move(factor), std::move(projection), std::move(lift)};
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  require_same_parent(a, b);
  SubspaceBasis s = subspace_sum(a.basis(), b.basis());
  if (!is_submodule(a.parent(), s))
    throw Error(ErrorKind::internal, "sum of submodules is not stable");
  return Submodule(a.parent(), std::move(s));
}

Submodule submodule_intersect(const Submodule& a, const Submodule& b) {
  require_same_parent(a, b);
  SubspaceBasis s = subspace_intersect(a.basis(), b.basis());
  if (!is_submodule(a.parent(), s))
    throw Error(ErrorKind::internal, "intersection of submodules is not stable");
  return Submodule(a.parent(), std::move(s));
}

bool is_direct(std::span<const Submodule> parts) {
  if (parts.empty()) return true;
  SubspaceBasis total = parts.front().basis();
  std::size_t dims = parts.front().dim();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    require_same_parent(parts.front(), parts[i]);
    total = subspace_sum(total, parts[i].basis());
    dims += parts[i].dim();
  }
  return total.dim() == dims;
}

bool is_simple(const ModuleRep& rep, const SearchOptions& opts) {
  if (rep.dim() == 0) throw Error(ErrorKind::degenerate_input, "the zero module is not simple");
  if (rep.dim() == 1) return true;
  const std::uint64_t p = rep.field().modulus();
  if (saturating_pow(p, rep.dim()) <= opts.max_enum) {
    bool simple = true;
    for_each_line(p, rep.dim(), opts.order, [&](const Vec& v) {
      simple = spin(rep, {v}).dim() == rep.dim();
      return simple;
    });
    return simple;
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t)
    if (spin(rep, {random_nonzero_vector(rng, rep.field(), rep.dim())}).dim() < rep.dim())
      return false;
  throw Error(ErrorKind::resource, "simplicity undecided: " + std::to_string(opts.trials) +
                                       " random spins all generated the whole module and p^dim "
                                       "exceeds the enumeration bound " +
                                       std::to_string(opts.max_enum));
}

Submodule minimal_submodule(const ModuleRep& rep, const SearchOptions& opts) {
  if (rep.dim() == 0) throw Error(ErrorKind::degenerate_input, "the zero module has no nonzero submodule");
  if (rep.dim() == 1) return Submodule::full(rep);
  const std::uint64_t p = rep.field().modulus();

  if (saturating_pow(p, rep.dim()) <= opts.max_enum) {
    std::optional<Submodule> best;
    for_each_line(p, rep.dim(), opts.order, [&](const Vec& v) {
      // A line inside a one-dimensional best spins to exactly that line.
      if (best && best->dim() == 1 && best->basis().contains(v)) return true;
      Submodule s = spin(rep, {v});
      if (!best || preferred(s.basis(), best->basis(), opts.order)) best = std::move(s);
      return true;
    });
    return *best;
  }

  std::mt19937_64 rng(opts.seed);
  std::optional<Submodule> best;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    Submodule s = spin(rep, {random_nonzero_vector(rng, rep.field(), rep.dim())});
    if (!best || preferred(s.basis(), best->basis(), opts.order)) best = std::move(s);
    if (best->dim() == 1) break;
  }
  if (best->dim() == rep.dim())
    throw Error(ErrorKind::resource, "no proper submodule found in " + std::to_string(opts.trials) +
                                         " random spins and p^dim exceeds the enumeration bound " +
                                         std::to_string(opts.max_enum));
  // Descend into the smallest proper submodule seen; a minimal submodule of
  // it is a minimal submodule of rep.
  Submodule inner = minimal_submodule(restrict_to(*best), opts);
  return Submodule(rep, image(best->basis().inclusion(), inner.basis()));
}

std::vector<Mat> hom_space(const ModuleRep& src, const ModuleRep& dst) {
  if (src.field() != dst.field()) throw Error(ErrorKind::field, "modules over different fields");
  return hom_space(src.field(), src.dim(), src.gens(), dst.dim(), dst.gens());
}

bool verify_witness(const Mat& t, const ModuleRep& src, const ModuleRep& dst) {
  if (t.rows() != dst.dim() || t.cols() != src.dim()) return false;
  return is_invertible(t) && intertwines(t, src.gens(), dst.gens());
}

namespace {

void require_comparable(const ModuleRep& src, const ModuleRep& dst) {
  if (src.field() != dst.field())
    throw Error(ErrorKind::precondition, "modules over different fields");
  if (src.gen_count() != dst.gen_count())
    throw Error(ErrorKind::precondition, "generator counts " + std::to_string(src.gen_count()) +
                                             " and " + std::to_string(dst.gen_count()) + " differ");
}

IsoWitness checked(Mat t, const ModuleRep& src, const ModuleRep& dst) {
  if (!verify_witness(t, src, dst))
    throw Error(ErrorKind::internal, "isomorphism witness failed verification");
  return IsoWitness{std::move(t)};
}

}  // namespace

std::optional<IsoWitness> is_isomorphic(const ModuleRep& src, const ModuleRep& dst,
                                        const SearchOptions& opts) {
  require_comparable(src, dst);
  if (src.dim() != dst.dim()) return std::nullopt;
  if (src.dim() == 0) return IsoWitness{Mat(src.field(), 0, 0)};
  const std::vector<Mat> basis = hom_space(src, dst);
  if (basis.empty()) return std::nullopt;
  // For simple modules every nonzero intertwiner is invertible, so the first
  // basis element already decides.
  for (const Mat& t : basis)
    if (is_invertible(t)) return checked(t, src, dst);

  const std::uint64_t p = src.field().modulus();
  const std::uint64_t tuples = saturating_pow(p, basis.size());
  if (tuples <= opts.max_enum) {
    for (std::uint64_t k = 1; k < tuples; ++k) {
      const std::uint64_t index = opts.order == VectorOrder::ascending ? k : tuples - k;
      Mat t = combine(basis, decode_vector(index, p, basis.size()));
      if (is_invertible(t)) return checked(std::move(t), src, dst);
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    Mat t = combine(basis, random_nonzero_vector(rng, src.field(), basis.size()));
    if (is_invertible(t)) return checked(std::move(t), src, dst);
  }
  throw Error(ErrorKind::resource, "isomorphism undecided: hom space of dimension " +
                                       std::to_string(basis.size()) + " has no invertible element in " +
                                       std::to_string(opts.trials) + " samples");
}

std::optional<IsoWitness> simple_isomorphism(const ModuleRep& src, const ModuleRep& dst) {
  require_comparable(src, dst);
  if (src.dim() != dst.dim()) return std::nullopt;
  if (src.dim() == 0) return IsoWitness{Mat(src.field(), 0, 0)};
  const std::vector<Mat> basis = hom_space(src, dst);
  if (basis.empty()) return std::nullopt;
  if (!is_invertible(basis.front()))
    throw Error(ErrorKind::internal, "singular nonzero intertwiner between modules assumed simple");
  return checked(basis.front(), src, dst);
}

}  // namespace modseries
