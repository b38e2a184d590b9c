#include "necklace/json_io.hpp"

#include "necklace/errors.hpp"

namespace necklace {

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["dim"] = m.dim();
  j["entries"] = m.to_strings();
  return j;
}

Matrix matrix_from_json(const Json& j) {
  try {
    size_t d = j.at("dim").get<size_t>();
    auto rows = j.at("entries").get<std::vector<std::vector<std::string>>>();
    if (rows.size() != d) throw ConfigParseError("matrix has " + std::to_string(rows.size()) + " rows, dim " + std::to_string(d));
    for (auto& r : rows)
      if (r.size() != d) throw ConfigParseError("matrix row length differs from dim");
    return Matrix::parse_rows(rows);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigParseError(std::string("matrix JSON: ") + e.what());
  } catch (const ParseError& e) {
    throw ConfigParseError(e.what());
  }
}

Json closure_to_json(const ClosureResult& r) {
  Json j;
  j["order"] = r.order;
  j["generator_count"] = r.generator_count;
  j["wall_time"] = r.wall_time;
  j["complete"] = r.complete;
  j["resumed"] = r.resumed;
  return j;
}

}  // namespace necklace
