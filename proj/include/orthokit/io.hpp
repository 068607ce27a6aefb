#ifndef ORTHOKIT_IO_HPP
#define ORTHOKIT_IO_HPP

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "orthokit/core.hpp"

namespace orthokit {

// Map file schema, complex form:
//   { "dim_h": m, "dim_k": n,
//     "linear_part":     [[[re, im], ...], ...],   // n rows of m entries
//     "antilinear_part": [[[re, im], ...], ...] }
// Alternative real form, converted on input:
//   { "real_matrix": [[...], ...] }                 // 2n rows of 2m numbers
// Exactly one of the two forms must be present. Numbers round-trip exactly
// (shortest round-trippable decimals on output).

namespace detail {

inline nlohmann::json matrix_to_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols; ++c)
      row.push_back({m.at(r, c).real(), m.at(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows,
                                std::size_t cols, const std::string& key) {
  if (!j.is_array() || j.size() != rows)
    throw FormatError("map file: " + key + " must have " +
                      std::to_string(rows) + " rows");
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw FormatError("map file: " + key + " row " + std::to_string(r) +
                        " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& entry = row[c];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number())
        throw FormatError("map file: " + key + " entries must be [re, im]");
      m.at(r, c) = Complex{entry[0].get<double>(), entry[1].get<double>()};
    }
  }
  return m;
}

}  // namespace detail

inline nlohmann::json map_to_json(const RealLinearMap& a) {
  return nlohmann::json{{"dim_h", a.dim_h()},
                        {"dim_k", a.dim_k()},
                        {"linear_part", detail::matrix_to_json(a.linear_part())},
                        {"antilinear_part",
                         detail::matrix_to_json(a.antilinear_part())}};
}

inline RealLinearMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("map file: top level must be an object");
  const bool complex_form = j.contains("linear_part") || j.contains("antilinear_part");
  const bool real_form_given = j.contains("real_matrix");
  if (complex_form && real_form_given)
    throw FormatError(
        "map file: give either linear_part/antilinear_part or real_matrix, "
        "not both");
  if (!complex_form && !real_form_given)
    throw FormatError("map file: no map data found");

  if (real_form_given) {
    const auto& rows = j["real_matrix"];
    if (!rows.is_array() || rows.empty() || !rows[0].is_array())
      throw FormatError("map file: real_matrix must be a 2D array");
    RMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (!rows[r].is_array() || rows[r].size() != m.cols)
        throw FormatError("map file: real_matrix rows have unequal lengths");
      for (std::size_t c = 0; c < m.cols; ++c) {
        if (!rows[r][c].is_number())
          throw FormatError("map file: real_matrix entries must be numbers");
        m.at(r, c) = rows[r][c].get<double>();
      }
    }
    if (m.rows % 2 != 0 || m.cols % 2 != 0)
      throw FormatError("map file: real_matrix must have even dimensions");
    RealLinearMap a = from_real_form(m);
    if (j.contains("dim_h") && j["dim_h"].get<std::size_t>() != a.dim_h())
      throw FormatError("map file: dim_h disagrees with real_matrix shape");
    if (j.contains("dim_k") && j["dim_k"].get<std::size_t>() != a.dim_k())
      throw FormatError("map file: dim_k disagrees with real_matrix shape");
    return a;
  }

  if (!j.contains("dim_h") || !j.contains("dim_k") ||
      !j["dim_h"].is_number_unsigned() || !j["dim_k"].is_number_unsigned())
    throw FormatError("map file: dim_h and dim_k are required");
  const auto m = j["dim_h"].get<std::size_t>();
  const auto n = j["dim_k"].get<std::size_t>();
  if (m == 0 || n == 0) throw FormatError("map file: dimensions must be >= 1");
  if (!j.contains("linear_part") || !j.contains("antilinear_part"))
    throw FormatError("map file: both linear_part and antilinear_part are required");
  return RealLinearMap(
      detail::matrix_from_json(j["linear_part"], n, m, "linear_part"),
      detail::matrix_from_json(j["antilinear_part"], n, m, "antilinear_part"));
}

inline RealLinearMap load_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("cannot parse " + path.string() + ": " + e.what());
  }
  return map_from_json(j);
}

inline void save_map(const std::filesystem::path& path, const RealLinearMap& a) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out << map_to_json(a).dump(2) << "\n";
}

}  // namespace orthokit

#endif  // ORTHOKIT_IO_HPP
