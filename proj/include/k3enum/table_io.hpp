#ifndef K3ENUM_TABLE_IO_HPP
#define K3ENUM_TABLE_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "k3enum/curvecounts.hpp"
#include "k3enum/lattice.hpp"

namespace k3enum {

// Tables: {"kind", "g_max", "first_column", "last_column", "entries": [[rational, ...] per genus]}
// with rationals in the [num, den] string form of rational_to_json.
nlohmann::json table_to_json(const BpsTable& t);
nlohmann::json table_to_json(const DivisibleBpsTable& t);
nlohmann::json table_to_json(const GwPotentialTable& t);

/// Throw std::invalid_argument on malformed input or a kind mismatch.
BpsTable bps_table_from_json(const nlohmann::json& j);
DivisibleBpsTable divisible_table_from_json(const nlohmann::json& j);
GwPotentialTable gw_table_from_json(const nlohmann::json& j);

/// Header "g\h<TAB>0<TAB>1...", one row per genus, empty cells for g > h.
std::string table_to_tsv(const BpsTable& t);
BpsTable bps_table_from_tsv(const std::string& text);

nlohmann::json pairs_table_to_json(const PairsEulerTable& t);
PairsEulerTable pairs_table_from_json(const nlohmann::json& j);
/// Header "h\n<TAB>(1-h_max)...n_max", empty cells for n < 1 - h.
std::string pairs_table_to_tsv(const PairsEulerTable& t);

// {"rank": r, "gram": [[int, ...], ...]}
nlohmann::json lattice_to_json(const GramLattice& l);
GramLattice lattice_from_json(const nlohmann::json& j);

// {"base": [[...]], "gram": [[...]], "embedding": [[...]]}
nlohmann::json overlattice_to_json(const OverlatticeDatum& o);
OverlatticeDatum overlattice_from_json(const nlohmann::json& j);

nlohmann::json int_matrix_to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

}  // namespace k3enum

#endif  // K3ENUM_TABLE_IO_HPP
