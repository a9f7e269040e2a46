#pragma once

// Validator for the JSON Schema keywords the report schema uses: type, enum,
// const, properties, required, additionalProperties (boolean), items,
// minItems, maxItems, minimum, maximum and local $ref into $defs.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace mroc {

class SchemaValidator {
 public:
  explicit SchemaValidator(nlohmann::json schema) : root_(std::move(schema)) {}

  /// Empty result means the document conforms.
  std::vector<std::string> validate(const nlohmann::json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  const nlohmann::json& resolve(const nlohmann::json& schema) const {
    if (!schema.is_object() || !schema.contains("$ref")) return schema;
    const auto ref = schema.at("$ref").get<std::string>();
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("unsupported $ref " + ref);
    return resolve(root_.at("$defs").at(ref.substr(prefix.size())));
  }

  static bool type_matches(const std::string& type, const nlohmann::json& v) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    if (type == "number") return v.is_number();
    if (type == "integer") {
      if (v.is_number_integer()) return true;
      if (!v.is_number_float()) return false;
      const double d = v.get<double>();
      return d == static_cast<double>(static_cast<long long>(d));
    }
    return false;
  }

  void check(const nlohmann::json& raw, const nlohmann::json& v, const std::string& path,
             std::vector<std::string>& errors) const {
    const auto& s = resolve(raw);
    if (s.is_boolean()) {
      if (!s.get<bool>()) errors.push_back(path + ": not allowed");
      return;
    }
    if (s.contains("type")) {
      const auto& t = s.at("type");
      bool ok = false;
      if (t.is_string()) ok = type_matches(t.get<std::string>(), v);
      else for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), v);
      if (!ok) {
        errors.push_back(path + ": expected type " + t.dump());
        return;
      }
    }
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s.at("enum")) found = found || e == v;
      if (!found) errors.push_back(path + ": value not in enum");
    }
    if (s.contains("const") && s.at("const") != v) errors.push_back(path + ": expected " + s.at("const").dump());
    if (v.is_number()) {
      const double d = v.get<double>();
      if (s.contains("minimum") && d < s.at("minimum").get<double>()) errors.push_back(path + ": below minimum");
      if (s.contains("maximum") && d > s.at("maximum").get<double>()) errors.push_back(path + ": above maximum");
    }
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& key : s.at("required"))
          if (!v.contains(key.get<std::string>()))
            errors.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
      const bool closed = s.contains("additionalProperties") && s.at("additionalProperties").is_boolean() &&
                          !s.at("additionalProperties").get<bool>();
      for (const auto& [key, value] : v.items()) {
        if (s.contains("properties") && s.at("properties").contains(key))
          check(s.at("properties").at(key), value, path + "." + key, errors);
        else if (closed)
          errors.push_back(path + ": unexpected key '" + key + "'");
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s.at("minItems").get<std::size_t>())
        errors.push_back(path + ": too few items");
      if (s.contains("maxItems") && v.size() > s.at("maxItems").get<std::size_t>())
        errors.push_back(path + ": too many items");
      if (s.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
          check(s.at("items"), v[i], path + "[" + std::to_string(i) + "]", errors);
    }
  }

  nlohmann::json root_;
};

}  // namespace mroc
