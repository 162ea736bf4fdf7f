#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace escobar::cli {

std::string sha256_hex(const std::string& bytes);

// Accompanies every output file as <output>.manifest.json.
class RunManifest {
 public:
  RunManifest(std::string command, std::vector<std::string> arguments);

  void set_config(nlohmann::json config) { config_ = std::move(config); }
  void set_seed(std::uint64_t seed) { seed_ = seed; has_seed_ = true; }
  void add_input(const std::filesystem::path& path, const std::string& contents);

  nlohmann::json to_json() const;

  // Writes `contents` to `path` and the manifest next to it; an empty path means stdout.
  void emit(const std::filesystem::path& path, const std::string& contents) const;

 private:
  std::string command_;
  std::vector<std::string> arguments_;
  nlohmann::json config_ = nlohmann::json::object();
  std::uint64_t seed_ = 0;
  bool has_seed_ = false;
  nlohmann::json inputs_ = nlohmann::json::array();
  std::chrono::steady_clock::time_point started_ = std::chrono::steady_clock::now();
};

}  // namespace escobar::cli
