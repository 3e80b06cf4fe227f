#pragma once

// Matrices shipped with the library, addressed as "builtin:NAME".

#include <string>
#include <string_view>
#include <vector>

#include "braidloc/matrix.hpp"

namespace braidloc {

/// Names accepted after "builtin:" (uqsl2_m also takes "?q=LITERAL").
std::vector<std::string> builtin_names();

/// The stored JSON text of a builtin; throws InvalidArgument for unknown names.
const std::string& builtin_json(std::string_view name);

/// Resolves "dye4", "inf9", "loc6", "level2", "uqsl2_m" or "uqsl2_m?q=z16^1".
SqMatrix builtin_matrix(std::string_view name, Backend backend = Backend::Exact);

/// The U_q sl2 R-matrix [[q,0,0,0],[0,0,1,0],[0,q,q-1,0],[0,0,0,q]].
SqMatrix uqsl2_matrix(const CycNum& q);

/// "builtin:NAME" or a path to a JSON matrix file.
SqMatrix load_matrix(const std::string& source, Backend backend = Backend::Exact);

}  // namespace braidloc
