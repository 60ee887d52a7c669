#include "modseries/hom.hpp"

#include <string>

#include "modseries/error.hpp"
#include "modseries/subspace.hpp"

namespace modseries {

std::vector<Mat> hom_space(FieldSpec field, std::size_t src_dim, std::span<const Mat> src_gens,
                           std::size_t dst_dim, std::span<const Mat> dst_gens) {
  if (src_gens.size() != dst_gens.size())
    throw Error(ErrorKind::shape, "generator counts " + std::to_string(src_gens.size()) + " and " +
                                      std::to_string(dst_gens.size()) + " differ");
  const std::size_t m = dst_dim;
  const std::size_t n = src_dim;
  const std::size_t unknowns = m * n;
  if (unknowns == 0) return {};

  // Unknown T(r, c) sits at column r*n + c; one equation per (generator, r, c).
  Mat system(field, src_gens.size() * unknowns, unknowns);
  for (std::size_t g = 0; g < src_gens.size(); ++g) {
    const Mat& a = src_gens[g];
    const Mat& b = dst_gens[g];
    if (a.rows() != n || a.cols() != n || b.rows() != m || b.cols() != m)
      throw Error(ErrorKind::shape, "generator " + std::to_string(g) + " has the wrong shape");
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t eq = g * unknowns + r * n + c;
        // (T·A)(r, c) = Σ_k T(r, k) A(k, c)
        for (std::size_t k = 0; k < n; ++k)
          system(eq, r * n + k) = field.add(system(eq, r * n + k), a(k, c));
        // (B·T)(r, c) = Σ_k B(r, k) T(k, c)
        for (std::size_t k = 0; k < m; ++k)
          system(eq, k * n + c) = field.sub(system(eq, k * n + c), b(r, k));
      }
  }

  SubspaceBasis solutions = kernel_basis(system);
  std::vector<Mat> basis;
  basis.reserve(solutions.dim());
  for (const Vec& v : solutions.rows()) basis.emplace_back(field, m, n, v);
  return basis;
}

bool intertwines(const Mat& t, std::span<const Mat> src_gens, std::span<const Mat> dst_gens) {
  if (src_gens.size() != dst_gens.size()) return false;
  for (std::size_t i = 0; i < src_gens.size(); ++i)
    if (t * src_gens[i] != dst_gens[i] * t) return false;
  return true;
}

}  // namespace modseries
