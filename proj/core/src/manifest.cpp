#include "gintail/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "gintail/errors.hpp"
#include "json.hpp"

namespace gintail {

using nlohmann::json;

std::string manifest_to_json(const RunManifest& m, int indent) {
  json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  j["seed"] = m.seed;
  j["worker_count"] = m.worker_count;
  j["versions"] = m.versions;
  j["started"] = m.started;
  j["finished"] = m.finished;
  j["outputs"] = m.outputs;
  j["argv"] = m.argv;
  return j.dump(indent);
}

RunManifest manifest_from_json(const std::string& text) {
  const json j = json::parse(text);
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.worker_count = j.at("worker_count").get<unsigned>();
  m.versions = j.at("versions").get<std::map<std::string, std::string>>();
  m.started = j.at("started").get<std::string>();
  m.finished = j.at("finished").get<std::string>();
  m.outputs = j.at("outputs").get<std::vector<std::string>>();
  m.argv = j.at("argv").get<std::vector<std::string>>();
  return m;
}

void save_manifest(const RunManifest& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("save_manifest: cannot open " + path);
  out << manifest_to_json(m) << "\n";
}

RunManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("load_manifest: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return manifest_from_json(text);
}

std::string iso8601_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace gintail
