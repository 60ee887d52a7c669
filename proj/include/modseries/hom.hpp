#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "modseries/matrix.hpp"

namespace modseries {

/// Basis of the intertwiner space {T : T·src_gens[i] = dst_gens[i]·T for all i}.
/// T is dst_dim × src_dim. With no generators every linear map qualifies.
std::vector<Mat> hom_space(FieldSpec field, std::size_t src_dim, std::span<const Mat> src_gens,
                           std::size_t dst_dim, std::span<const Mat> dst_gens);

/// True when t·src_gens[i] == dst_gens[i]·t for every i.
bool intertwines(const Mat& t, std::span<const Mat> src_gens, std::span<const Mat> dst_gens);

}  // namespace modseries
