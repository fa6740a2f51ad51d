#include "coxeter/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coxeter/error.hpp"

namespace coxeter {

namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

}  // namespace

SystemDocument parse_system(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) parse_error("document must be an object");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) {
    parse_error("\"rank\" must be an integer");
  }
  if (!doc.contains("m") || !doc["m"].is_array()) parse_error("\"m\" must be an array of rows");

  const auto rank = doc["rank"].get<long long>();
  const auto& rows = doc["m"];
  if (rank < 0 || static_cast<std::size_t>(rank) != rows.size()) {
    parse_error("\"rank\" is " + std::to_string(rank) + " but \"m\" has " +
                std::to_string(rows.size()) + " rows");
  }
  std::vector<std::vector<int>> raw;
  raw.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) parse_error("row " + std::to_string(i) + " of \"m\" is not an array");
    auto& row = raw.emplace_back();
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const auto& v = rows[i][j];
      if (!v.is_number_integer()) {
        parse_error("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") is not an integer");
      }
      const auto value = v.get<long long>();
      if (value < 0 || value > 1'000'000) {
        parse_error("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") is out of range");
      }
      row.push_back(static_cast<int>(value));
    }
  }

  std::optional<CoxeterMatrix> matrix;
  try {
    matrix = validate_matrix(raw);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string(to_string(e.code())) + ": " + e.what());
  }

  std::vector<std::string> names;
  if (doc.contains("names")) {
    const auto& list = doc["names"];
    if (!list.is_array()) parse_error("\"names\" must be an array of strings");
    for (const auto& n : list) {
      if (!n.is_string()) parse_error("\"names\" must be an array of strings");
      names.push_back(n.get<std::string>());
    }
    if (names.size() != matrix->rank()) {
      throw Error(ErrorCode::ValidationError, "\"names\" has " + std::to_string(names.size()) +
                                                  " entries, expected " +
                                                  std::to_string(matrix->rank()));
    }
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
      throw Error(ErrorCode::ValidationError, "\"names\" entries must be distinct");
    }
  }
  return SystemDocument{std::move(*matrix), std::move(names)};
}

SystemDocument load_system(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_system(text);
}

SystemDocument load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  return load_system(in);
}

Word parse_word(std::string_view text, const SystemDocument& doc) {
  std::istringstream in{std::string(text)};
  Word out;
  std::string token;
  while (in >> token) {
    if (auto it = std::find(doc.names.begin(), doc.names.end(), token); it != doc.names.end()) {
      out.push_back(static_cast<Generator>(it - doc.names.begin()));
      continue;
    }
    if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit) || token.size() > 3) {
      parse_error("bad generator \"" + token + "\"");
    }
    const int value = std::stoi(token);
    if (value >= static_cast<int>(doc.matrix.rank())) {
      throw Error(ErrorCode::IndexOutOfRange, "generator " + token + " is not below rank " +
                                                  std::to_string(doc.matrix.rank()));
    }
    out.push_back(static_cast<Generator>(value));
  }
  return out;
}

GeneratorSet parse_subset(std::string_view text, const SystemDocument& doc) {
  return support(parse_word(text, doc));
}

}  // namespace coxeter
