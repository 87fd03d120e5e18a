#include "qpd/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qpd/error.hpp"

namespace qpd {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

Rational value_of(const Json& v, const std::string& key) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) {
      return v.is_number_unsigned() ? Rational(mpz_class(std::to_string(v.get<std::uint64_t>())))
                                    : Rational(mpz_class(std::to_string(v.get<std::int64_t>())));
    }
    if (v.is_number_float()) return rational_from_decimal(v.get<double>());
  } catch (const Error& e) {
    parse_error("entry \"" + key + "\": " + e.what());
  }
  parse_error("entry \"" + key + "\": value must be a number or a \"p/q\" string");
}

}  // namespace

AnyQuartic parse_tensor_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("top level must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "dim" && key != "order" && key != "entries") parse_error("unknown key \"" + key + "\"");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) parse_error("\"dim\" must be the integer 2 or 3");
  const auto dim = doc["dim"].get<std::int64_t>();
  if (dim != 2 && dim != 3) parse_error("\"dim\" must be 2 or 3, got " + std::to_string(dim));
  if (doc.contains("order") && (!doc["order"].is_number_integer() || doc["order"].get<std::int64_t>() != 4)) {
    parse_error("\"order\" must be 4");
  }
  if (!doc.contains("entries") || !doc["entries"].is_object()) parse_error("\"entries\" must be an object");

  std::vector<IndexedEntry> entries;
  for (const auto& [key, value] : doc["entries"].items()) {
    MultiIndex index;
    try {
      index = MultiIndex::parse_key(key, static_cast<int>(dim));
    } catch (const Error& e) {
      parse_error("entry \"" + key + "\": " + e.what());
    }
    std::vector<int> tuple{index[0], index[1], index[2], index[3]};
    entries.push_back({std::move(tuple), value_of(value, key)});
  }
  return build_tensor(static_cast<int>(dim), entries);
}

AnyQuartic load_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_tensor_json(buffer.str());
}

std::string tensor_to_json(const AnyQuartic& tensor) {
  Json doc;
  doc["dim"] = dimension_of(tensor);
  doc["order"] = 4;
  Json entries = Json::object();
  std::visit(
      [&](const auto& t) {
        constexpr int Dim = std::decay_t<decltype(t)>::kDim;
        const auto& indices = canonical_indices<Dim>();
        for (std::size_t k = 0; k < indices.size(); ++k) {
          entries[indices[k].key()] = to_string(t.coefficients()[k]);
        }
      },
      tensor);
  doc["entries"] = std::move(entries);
  return doc.dump(2);
}

}  // namespace qpd
