// Small helper used by the CLI end-to-end test: validates a JSON document
// (or every line of a .jsonl file with --lines) against a schema file.
// Exit 0 when valid, 1 otherwise.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "gintail/schema.hpp"

int main(int argc, char** argv) {
  bool lines = false;
  const char* doc = nullptr;
  const char* schema = nullptr;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--lines") == 0)
      lines = true;
    else if (!doc)
      doc = argv[i];
    else
      schema = argv[i];
  }
  if (!doc || !schema) {
    std::fprintf(stderr, "usage: schema_check [--lines] <doc.json> <schema.json>\n");
    return 2;
  }
  std::ifstream schema_in(schema);
  const std::string schema_text((std::istreambuf_iterator<char>(schema_in)),
                                std::istreambuf_iterator<char>());
  std::string err;
  if (!lines) {
    std::ifstream doc_in(doc);
    const std::string doc_text((std::istreambuf_iterator<char>(doc_in)),
                               std::istreambuf_iterator<char>());
    if (!gintail::validate_json(doc_text, schema_text, &err)) {
      std::fprintf(stderr, "invalid: %s\n", err.c_str());
      return 1;
    }
    return 0;
  }
  std::ifstream doc_in(doc);
  std::string line;
  int n = 0;
  while (std::getline(doc_in, line)) {
    if (line.empty()) continue;
    ++n;
    if (!gintail::validate_json(line, schema_text, &err)) {
      std::fprintf(stderr, "invalid line %d: %s\n", n, err.c_str());
      return 1;
    }
  }
  return n > 0 ? 0 : 1;
}
