#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

#include "tropgroups/components.hpp"
#include "tropgroups/matrix.hpp"
#include "tropgroups/permgroups.hpp"
#include "tropgroups/stabilizer.hpp"

namespace tropgroups {

using Json = nlohmann::ordered_json;

// Text rows or {"rows": r, "cols": c, "entries": [[...], ...]} with string scalars.
TropMatrix parse_matrix(std::string_view text);
TropMatrix read_matrix_file(const std::string& path);
TropMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const TropMatrix& a);

// {"vertices": n, "edges": [[i, j, colour], ...]} gives a complete digraph
// (unlisted pairs share one extra colour); {"omega": n, "theta": m, "edges":
// ...} a bipartite digraph with missing edges.  Vertices are 1-indexed and
// colours are integers or strings.
using GraphSpec = std::variant<ColouredDigraph, BipartiteDigraph>;
GraphSpec graph_from_json(const Json& j);

std::string read_file(const std::string& path);
// FNV-1a 64-bit, as 16 hex digits.
std::string fnv1a64(std::string_view bytes);

Json perm_group_to_json(const PermGroup& g);
// Indices are reported through `row_keep`/`col_keep` when given, so they
// refer to the matrix before reduction.
Json partition_to_json(const ComponentPartition& p, const Reduction* labels = nullptr);
Json description_to_json(const GroupDescription& d);

}  // namespace tropgroups
