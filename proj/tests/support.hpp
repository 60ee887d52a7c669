#pragma once

// Shared fixtures for the test binaries: random module generators and a
// brute-force model of GF(p)^d as explicit point sets. The oracle side never
// calls into the echelon code, so agreement between the two is meaningful.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "modseries/module.hpp"

namespace modseries::test {

inline Mat random_mat(std::mt19937_64& rng, FieldSpec f, std::size_t rows, std::size_t cols) {
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Scalar>(rng() % f.modulus());
  return m;
}

inline Mat random_invertible(std::mt19937_64& rng, FieldSpec f, std::size_t n) {
  for (;;) {
    Mat m = random_mat(rng, f, n, n);
    if (is_invertible(m)) return m;
  }
}

// Random generators tend to give simple modules, so most draws are conjugated
// block-triangular or block-diagonal matrices to get a richer lattice.
inline ModuleRep random_module(std::mt19937_64& rng, std::uint64_t p, std::size_t dim, std::size_t gens) {
  const FieldSpec f(p);
  const int shape = static_cast<int>(rng() % 3);
  std::size_t cut = dim == 0 ? 0 : rng() % (dim + 1);
  std::vector<Mat> out;
  const Mat c = dim ? random_invertible(rng, f, dim) : Mat(f, 0, 0);
  const Mat ci = dim ? *inverse(c) : Mat(f, 0, 0);
  for (std::size_t g = 0; g < gens; ++g) {
    Mat m = random_mat(rng, f, dim, dim);
    if (shape == 1) {
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t col = 0; col < r; ++col) m(r, col) = 0;
    } else if (shape == 2) {
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t col = 0; col < dim; ++col)
          if ((r < cut) != (col < cut)) m(r, col) = 0;
    }
    if (shape != 0) m = c * m * ci;
    out.push_back(std::move(m));
  }
  return ModuleRep(f, dim, std::move(out));
}

// Vectors are indexed in base p with the first coordinate most significant,
// so index order is lexicographic order.
inline std::uint64_t index_of(const Vec& v, std::uint64_t p) {
  std::uint64_t i = 0;
  for (Scalar x : v) i = i * p + x;
  return i;
}

inline Vec vector_at(std::uint64_t i, std::uint64_t p, std::size_t d) {
  Vec v(d);
  for (std::size_t k = d; k-- > 0;) {
    v[k] = static_cast<Scalar>(i % p);
    i /= p;
  }
  return v;
}

using PointSet = std::vector<bool>;

struct Space {
  std::uint64_t p;
  std::size_t d;
  std::uint64_t size;  // p^d

  std::vector<Vec> table;  // decoded vectors, by index

  Space(std::uint64_t p_, std::size_t d_) : p(p_), d(d_), size(saturating_pow(p_, d_)) {
    table.reserve(size);
    for (std::uint64_t i = 0; i < size; ++i) table.push_back(vector_at(i, p, d));
  }

  const Vec& at(std::uint64_t i) const { return table[i]; }
  std::uint64_t index(const Vec& v) const { return index_of(v, p); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t scale) const {
    const Vec &x = at(a), &y = at(b);
    std::uint64_t i = 0;
    for (std::size_t k = 0; k < d; ++k) i = i * p + (x[k] + scale * y[k]) % p;
    return i;
  }

  PointSet zero() const {
    PointSet s(size, false);
    s[0] = true;
    return s;
  }

  // Adds v and all its combinations with the current members.
  void adjoin(PointSet& s, std::uint64_t v) const {
    if (s[v]) return;
    std::vector<std::uint64_t> members;
    for (std::uint64_t i = 0; i < size; ++i)
      if (s[i]) members.push_back(i);
    for (std::uint64_t m : members)
      for (std::uint64_t c = 1; c < p; ++c) s[add(m, v, c)] = true;
  }

  // Smallest set closed under addition, scaling and every generator.
  PointSet stable_closure(PointSet s, const ModuleRep& rep) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::uint64_t i = 0; i < size; ++i) {
        if (!s[i]) continue;
        const Vec& v = at(i);
        for (const Mat& g : rep.gens()) {
          const std::uint64_t j = index(g.apply(v));
          if (!s[j]) {
            adjoin(s, j);
            changed = true;
          }
        }
      }
    }
    return s;
  }

  PointSet closure_of(const std::vector<Vec>& seeds, const ModuleRep& rep) const {
    PointSet s = zero();
    for (const Vec& v : seeds) adjoin(s, index(v));
    return stable_closure(std::move(s), rep);
  }

  bool is_stable(const PointSet& s, const ModuleRep& rep) const {
    for (std::uint64_t i = 0; i < size; ++i)
      if (s[i])
        for (const Mat& g : rep.gens())
          if (!s[index(g.apply(at(i)))]) return false;
    return true;
  }

  std::uint64_t count(const PointSet& s) const {
    std::uint64_t n = 0;
    for (bool b : s) n += b;
    return n;
  }

  std::size_t dim_of(const PointSet& s) const {
    std::size_t k = 0;
    for (std::uint64_t n = count(s); n > 1; n /= p) ++k;
    return k;
  }

  // Every member of the span, enumerated from the basis rows directly.
  PointSet points(const SubspaceBasis& b) const {
    PointSet s = zero();
    for (const Vec& r : b.rows()) adjoin(s, index(r));
    return s;
  }

  SubspaceBasis basis_of(const PointSet& s) const {
    std::vector<Vec> vs;
    for (std::uint64_t i = 1; i < size; ++i)
      if (s[i]) vs.push_back(at(i));
    return SubspaceBasis::span(FieldSpec(p), d, vs);
  }

  // The whole submodule lattice: start at zero and repeatedly take the stable
  // closure of a known submodule plus one outside vector.
  std::vector<PointSet> stable_lattice(const ModuleRep& rep) const {
    std::set<PointSet> seen;
    std::vector<PointSet> queue{stable_closure(zero(), rep)};
    seen.insert(queue.front());
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const PointSet cur = queue[q];
      for (std::uint64_t v = 1; v < size; ++v) {
        if (cur[v]) continue;
        PointSet next = cur;
        adjoin(next, v);
        next = stable_closure(std::move(next), rep);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
    return queue;
  }
};

inline Vec unit(std::size_t d, std::size_t i) {
  Vec v(d, 0);
  v[i] = 1;
  return v;
}

}  // namespace modseries::test
