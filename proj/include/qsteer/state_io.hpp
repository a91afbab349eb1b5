#pragma once

#include <iosfwd>
#include <string>

#include "qsteer/density_matrix.hpp"

namespace qsteer {

/// JSON document {"dimA": n, "dimB": m, "re": [[...]], "im": [[...]]},
/// row-major, A-major ordering. "im" may be omitted for real matrices.
BipartiteState read_state(std::istream& in);
BipartiteState read_state_file(const std::string& path);
void write_state(std::ostream& out, const BipartiteState& state);

}  // namespace qsteer
