#pragma once

#include <string>

namespace gintail {

// Structural JSON-schema check covering the subset the shipped schemas use:
// type, properties, required, items, enum, additionalProperties. Returns true
// when `doc_text` conforms to `schema_text`; otherwise false with a short
// message in *error.
bool validate_json(const std::string& doc_text, const std::string& schema_text,
                   std::string* error = nullptr);

bool validate_json_file(const std::string& doc_path, const std::string& schema_path,
                        std::string* error = nullptr);

}  // namespace gintail
