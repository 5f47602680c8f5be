#include "symstab/schema.hpp"

#include <fstream>
#include <regex>
#include <stdexcept>

#include "symstab/certificates.hpp"

namespace symstab {

namespace {

bool has_type(const nlohmann::json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  throw std::invalid_argument("schema: unknown type " + type);
}

class Validator {
 public:
  explicit Validator(const nlohmann::json& root) : root_(root) {}

  void run(const nlohmann::json& v, const nlohmann::json& s, const std::string& path) {
    if (s.is_boolean()) {
      if (!s.get<bool>()) fail(path, "not allowed");
      return;
    }
    if (s.contains("$ref")) {
      run(v, resolve(s["$ref"].get<std::string>()), path);
      return;
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) {
        fail(path, "expected type " + s["type"].dump());
        return;
      }
    }
    if (s.contains("const") && v != s["const"]) fail(path, "expected " + s["const"].dump());
    if (s.contains("enum")) {
      bool found = false;
      for (auto& e : s["enum"]) found = found || e == v;
      if (!found) fail(path, "value not in enum");
    }
    if (s.contains("pattern") && v.is_string() &&
        !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
      fail(path, "string does not match " + s["pattern"].get<std::string>());
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
      fail(path, "below minimum");
    if (v.is_object()) object(v, s, path);
    if (v.is_array() && s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) run(v[i], s["items"], path + "/" + std::to_string(i));
    if (s.contains("anyOf")) {
      bool any = false;
      for (auto& alt : s["anyOf"]) {
        Validator sub(root_);
        sub.run(v, alt, path);
        if (sub.errors.empty()) {
          any = true;
          break;
        }
      }
      if (!any) fail(path, "matches no alternative");
    }
  }

  std::vector<std::string> errors;

 private:
  void object(const nlohmann::json& v, const nlohmann::json& s, const std::string& path) {
    if (s.contains("required"))
      for (auto& key : s["required"])
        if (!v.contains(key.get<std::string>())) fail(path, "missing " + key.get<std::string>());
    const nlohmann::json empty = nlohmann::json::object();
    const nlohmann::json& props = s.contains("properties") ? s["properties"] : empty;
    for (auto& [key, value] : v.items()) {
      if (props.contains(key))
        run(value, props[key], path + "/" + key);
      else if (s.contains("additionalProperties"))
        run(value, s["additionalProperties"], path + "/" + key);
    }
  }

  const nlohmann::json& resolve(const std::string& ref) {
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("schema: unsupported reference " + ref);
    const std::string name = ref.substr(prefix.size());
    if (!root_.contains("definitions") || !root_["definitions"].contains(name))
      throw std::invalid_argument("schema: unknown definition " + name);
    return root_["definitions"][name];
  }

  void fail(const std::string& path, const std::string& message) {
    errors.push_back((path.empty() ? "/" : path) + ": " + message);
  }

  const nlohmann::json& root_;
};

}  // namespace

std::vector<std::string> validate_json(const nlohmann::json& instance, const nlohmann::json& schema) {
  Validator v(schema);
  v.run(instance, schema, "");
  return v.errors;
}

const nlohmann::json& report_schema() {
  static const nlohmann::json schema = [] {
    const std::string path = data_directory() + "/schema/reports.schema.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return nlohmann::json::parse(in);
  }();
  return schema;
}

std::vector<std::string> validate_report(const nlohmann::json& instance) {
  const nlohmann::json& schema = report_schema();
  if (!instance.is_object() || !instance.contains("report") || !instance["report"].is_string()) return {"/: missing report kind"};
  const std::string kind = instance["report"].get<std::string>();
  if (!schema["definitions"].contains(kind)) return {"/report: unknown kind " + kind};
  Validator v(schema);
  v.run(instance, schema["definitions"][kind], "");
  return v.errors;
}

}  // namespace symstab
