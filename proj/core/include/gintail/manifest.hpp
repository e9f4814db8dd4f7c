#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gintail {

// Record of one CLI run: the exact invocation, resolved parameters, and the
// files it produced. Re-running the recorded argv reproduces every listed
// numeric output bit for bit (counter-based RNG contract).
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  unsigned worker_count = 0;
  std::map<std::string, std::string> versions;
  std::string started;   // ISO-8601 UTC
  std::string finished;
  std::vector<std::string> outputs;
  std::vector<std::string> argv;
};

std::string manifest_to_json(const RunManifest& m, int indent = 2);
RunManifest manifest_from_json(const std::string& text);

void save_manifest(const RunManifest& m, const std::string& path);
RunManifest load_manifest(const std::string& path);

std::string iso8601_utc_now();

}  // namespace gintail
