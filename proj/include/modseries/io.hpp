#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modseries/module.hpp"
#include "modseries/series.hpp"

namespace modseries::io {

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored everywhere.
//
//   modrep p=<p> dim=<d> gens=<k>      then k blocks of d rows of d entries
//   subspace dim=<r>                   then r basis rows of d entries
//   series terms=<n>                   then n blocks:
//   term label=<ordinal> dim=<r>       followed by r basis rows

ModuleData parse_module_data(std::string_view text);
/// parse_module_data followed by validation; structural issues throw.
ModuleRep parse_module(std::string_view text);
std::string render_module(const ModuleRep& rep);

/// All `subspace` blocks in the text, in order. Rows must be independent.
std::vector<SubspaceBasis> parse_subspaces(std::string_view text, FieldSpec field, std::size_t ambient_dim);
std::string render_subspace(const SubspaceBasis& s);

NormalSeries parse_series(std::string_view text, const ModuleRep& parent);
std::string render_series(const NormalSeries& s);

std::string render_matrix(const Mat& m);

std::string read_file(const std::string& path);

}  // namespace modseries::io
