#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace feq {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Provenance block embedded in every report: the command, its inputs, the
/// effective configuration, the seed, and wall time.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  nlohmann::json config = nlohmann::json::object();
  uint64_t seed = 0;
  double timing_ms = 0.0;

  nlohmann::json to_json() const {
    return nlohmann::json{{"command", command}, {"inputs", inputs},        {"config", config},
                          {"seed", seed},       {"version", kArtifactVersion}, {"timing_ms", timing_ms}};
  }
};

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace feq
