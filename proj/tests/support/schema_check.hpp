#pragma once

// Subset of JSON Schema draft-07 used by schemas/: type, const, enum, properties,
// required, additionalProperties (false), items, minItems, minimum, oneOf, and local
// $ref into #/definitions.

#include <string>
#include <vector>

#include <json.hpp>

namespace schema_check {

using Json = nlohmann::ordered_json;

class Validator {
 public:
  explicit Validator(Json root) : root_(std::move(root)) {}

  /// Empty when `doc` is valid; otherwise one message per violation found.
  std::vector<std::string> validate(const Json& doc) const {
    std::vector<std::string> errs;
    check(root_, doc, "$", errs);
    return errs;
  }

 private:
  static bool type_matches(const std::string& t, const Json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer() || (v.is_number_float() && v.get<double>() == static_cast<long long>(v.get<double>()));
    if (t == "number") return v.is_number();
    return false;
  }

  const Json& resolve(const std::string& ref) const {
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
    return root_.at("definitions").at(ref.substr(prefix.size()));
  }

  void check(const Json& s, const Json& v, const std::string& path, std::vector<std::string>& errs) const {
    if (s.contains("$ref")) {
      check(resolve(s.at("$ref").get<std::string>()), v, path, errs);
      return;
    }
    if (s.contains("type")) {
      const Json& t = s.at("type");
      bool ok = false;
      if (t.is_string()) ok = type_matches(t.get<std::string>(), v);
      for (const auto& alt : t.is_array() ? t : Json::array()) ok = ok || type_matches(alt.get<std::string>(), v);
      if (!ok) {
        errs.push_back(path + ": expected type " + t.dump());
        return;
      }
    }
    if (s.contains("const") && s.at("const") != v) errs.push_back(path + ": expected " + s.at("const").dump());
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s.at("enum")) found = found || e == v;
      if (!found) errs.push_back(path + ": value " + v.dump() + " not in enum");
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s.at("minimum").get<double>()) {
      errs.push_back(path + ": below minimum");
    }
    if (s.contains("oneOf")) {
      int matches = 0;
      for (const auto& branch : s.at("oneOf")) {
        std::vector<std::string> sub;
        check(branch, v, path, sub);
        if (sub.empty()) ++matches;
      }
      if (matches != 1) errs.push_back(path + ": matches " + std::to_string(matches) + " oneOf branches");
    }
    if (v.is_object()) {
      for (const auto& r : s.value("required", Json::array())) {
        if (!v.contains(r.get<std::string>())) errs.push_back(path + ": missing " + r.get<std::string>());
      }
      const Json props = s.value("properties", Json::object());
      for (const auto& [k, sub] : v.items()) {
        if (props.contains(k)) {
          check(props.at(k), sub, path + "." + k, errs);
        } else if (s.contains("additionalProperties") && s.at("additionalProperties") == false) {
          errs.push_back(path + ": unexpected property " + k);
        }
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s.at("minItems").get<std::size_t>()) errs.push_back(path + ": too few items");
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) check(s.at("items"), v[i], path + "[" + std::to_string(i) + "]", errs);
      }
    }
  }

  Json root_;
};

}  // namespace schema_check
