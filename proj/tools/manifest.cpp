#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "escobar/error.hpp"

namespace escobar::cli {

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

RunManifest::RunManifest(std::string command, std::vector<std::string> arguments)
    : command_(std::move(command)), arguments_(std::move(arguments)) {}

void RunManifest::add_input(const std::filesystem::path& path, const std::string& contents) {
  inputs_.push_back({{"path", path.string()}, {"sha256", sha256_hex(contents)}});
}

nlohmann::json RunManifest::to_json() const {
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
  nlohmann::json doc{{"tool", "escobar"},
                     {"version", ESCOBAR_VERSION},
                     {"command", command_},
                     {"arguments", arguments_},
                     {"config", config_},
                     {"inputs", inputs_},
                     {"wall_clock_seconds", seconds}};
  doc["seed"] = has_seed_ ? nlohmann::json(seed_) : nlohmann::json(nullptr);
  return doc;
}

void RunManifest::emit(const std::filesystem::path& path, const std::string& contents) const {
  if (path.empty()) {
    std::cout << contents << std::flush;
    return;
  }
  auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error(ErrorCode::kParse, "cannot write " + p.string());
  };
  write(path, contents);
  nlohmann::json doc = to_json();
  doc["output"] = {{"path", path.string()}, {"sha256", sha256_hex(contents)}};
  write(path.string() + ".manifest.json", doc.dump(2) + "\n");
}

}  // namespace escobar::cli
