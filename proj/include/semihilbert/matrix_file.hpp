#pragma once

// MatrixFile documents: {"rows": r, "cols": c, "data": [[re, im], ...]} with
// data in row-major order. Numbers are written with 17 significant digits so
// a write/read round trip is exact.

#include <filesystem>
#include <string>

#include "semihilbert/types.hpp"

namespace semihilbert {

ComplexMatrix parse_matrix_json(const std::string& text);
std::string format_matrix_json(const ComplexMatrix& m);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

/// %.17g, the format every numeric CLI output uses.
std::string format_number(double value);

}  // namespace semihilbert
