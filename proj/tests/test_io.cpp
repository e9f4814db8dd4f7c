#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "gintail/manifest.hpp"
#include "gintail/schema.hpp"

using namespace gintail;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}
}  // namespace

TEST_CASE("manifest round trip") {
  RunManifest m;
  m.command = "mc-walk";
  m.parameters = {{"L", "5"}, {"samples", "1000"}};
  m.seed = 42;
  m.worker_count = 2;
  m.versions = {{"gintail", "0.1.0"}};
  m.started = iso8601_utc_now();
  m.finished = iso8601_utc_now();
  m.outputs = {"walk.jsonl"};
  m.argv = {"gintail", "mc-walk", "--l", "5"};

  const std::string text = manifest_to_json(m);
  const RunManifest back = manifest_from_json(text);
  CHECK(back.command == m.command);
  CHECK(back.parameters == m.parameters);
  CHECK(back.seed == m.seed);
  CHECK(back.worker_count == m.worker_count);
  CHECK(back.outputs == m.outputs);
  CHECK(back.argv == m.argv);

  const std::string path = "manifest_roundtrip_test.json";
  save_manifest(m, path);
  const RunManifest loaded = load_manifest(path);
  CHECK(loaded.seed == m.seed);
  std::remove(path.c_str());
}

TEST_CASE("manifest validates against its shipped schema") {
  RunManifest m;
  m.command = "constants";
  m.parameters = {{"cutoff", "1000"}};
  m.seed = 0;
  m.worker_count = 1;
  m.versions = {{"gintail", "0.1.0"}};
  m.started = iso8601_utc_now();
  m.finished = iso8601_utc_now();
  m.outputs = {"constants.json"};
  m.argv = {"gintail", "constants"};

  const std::string schema = slurp(std::string(GINTAIL_SOURCE_DIR) + "/schemas/manifest.schema.json");
  REQUIRE(!schema.empty());
  std::string err;
  CHECK(validate_json(manifest_to_json(m), schema, &err));
  CHECK(err.empty());
}

TEST_CASE("schema validator catches missing and mistyped fields") {
  const std::string schema = R"({
    "type": "object",
    "required": ["name", "count"],
    "properties": {
      "name": {"type": "string"},
      "count": {"type": "integer"},
      "tags": {"type": "array", "items": {"type": "string"}}
    }
  })";
  std::string err;
  CHECK(validate_json(R"({"name": "x", "count": 3, "tags": ["a"]})", schema, &err));
  CHECK_FALSE(validate_json(R"({"name": "x"})", schema, &err));
  CHECK(err.find("count") != std::string::npos);
  CHECK_FALSE(validate_json(R"({"name": 1, "count": 3})", schema, &err));
  CHECK_FALSE(validate_json(R"({"name": "x", "count": 3, "tags": [1]})", schema, &err));
}

TEST_CASE("strict schemas reject unexpected keys") {
  const std::string schema = R"({
    "type": "object",
    "required": ["a"],
    "properties": {"a": {"type": "number"}},
    "additionalProperties": false
  })";
  std::string err;
  CHECK(validate_json(R"({"a": 1.5})", schema, &err));
  CHECK_FALSE(validate_json(R"({"a": 1.5, "b": 2})", schema, &err));
}
