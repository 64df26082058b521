#include "semihilbert/matrix_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semihilbert/error.hpp"

namespace semihilbert {

namespace {

double finite_number(const nlohmann::json& value, const char* what) {
  if (!value.is_number()) throw Error(ErrorKind::Parse, std::string(what) + " is not a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw Error(ErrorKind::Parse, std::string(what) + " is not finite");
  return x;
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

ComplexMatrix parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("data"))
    throw Error(ErrorKind::Parse, "matrix file needs rows, cols and data");
  if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer())
    throw Error(ErrorKind::Parse, "rows and cols must be integers");
  const auto rows = doc["rows"].get<long long>();
  const auto cols = doc["cols"].get<long long>();
  if (rows < 1 || cols < 1) throw Error(ErrorKind::Parse, "rows and cols must be positive");
  const auto& data = doc["data"];
  if (!data.is_array() || static_cast<long long>(data.size()) != rows * cols)
    throw Error(ErrorKind::Parse, "data must hold rows * cols entries");

  ComplexMatrix m(rows, cols);
  for (long long k = 0; k < rows * cols; ++k) {
    const auto& entry = data[static_cast<std::size_t>(k)];
    if (!entry.is_array() || entry.size() != 2) throw Error(ErrorKind::Parse, "entries must be [re, im] pairs");
    m(k / cols, k % cols) = Complex(finite_number(entry[0], "real part"), finite_number(entry[1], "imaginary part"));
  }
  return m;
}

std::string format_matrix_json(const ComplexMatrix& m) {
  std::ostringstream out;
  out << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"data\": [";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i + j > 0) out << ", ";
      out << '[' << format_number(m(i, j).real()) << ", " << format_number(m(i, j).imag()) << ']';
    }
  out << "]}\n";
  return out.str();
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_json(buffer.str());
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
  out << format_matrix_json(m);
  if (!out) throw Error(ErrorKind::Parse, "write failed for " + path.string());
}

}  // namespace semihilbert
