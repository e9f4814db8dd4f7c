#include "gintail/schema.hpp"

#include <fstream>

#include "json.hpp"

namespace gintail {

namespace {

using nlohmann::json;

bool type_matches(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "number") return doc.is_number();
  if (type == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

bool check(const json& doc, const json& schema, const std::string& where,
           std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = where + ": " + msg;
    return false;
  };

  if (schema.contains("type") && !type_matches(doc, schema["type"].get<std::string>()))
    return fail("expected type " + schema["type"].get<std::string>());

  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"])
      if (v == doc) found = true;
    if (!found) return fail("value not in enum");
  }

  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!doc.contains(key.get<std::string>()))
          return fail("missing required key '" + key.get<std::string>() + "'");
      }
    }
    const json props = schema.value("properties", json::object());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (props.contains(it.key())) {
        if (!check(it.value(), props[it.key()], where + "/" + it.key(), error)) return false;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        return fail("unexpected key '" + it.key() + "'");
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_object()) {
        if (!check(it.value(), schema["additionalProperties"], where + "/" + it.key(), error))
          return false;
      }
    }
  }

  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (!check(doc[i], schema["items"], where + "[" + std::to_string(i) + "]", error))
        return false;
    }
  }
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

bool validate_json(const std::string& doc_text, const std::string& schema_text,
                   std::string* error) {
  json doc, schema;
  try {
    doc = json::parse(doc_text);
    schema = json::parse(schema_text);
  } catch (const std::exception& e) {
    if (error) *error = std::string("parse error: ") + e.what();
    return false;
  }
  return check(doc, schema, "#", error);
}

bool validate_json_file(const std::string& doc_path, const std::string& schema_path,
                        std::string* error) {
  return validate_json(slurp(doc_path), slurp(schema_path), error);
}

}  // namespace gintail
