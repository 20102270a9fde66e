#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

namespace symforms {

/// 64-bit FNV-1a digest as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

/// Content-addressed store of JSON payloads, one file per key. Each file
/// records the format version, the key and a checksum of the payload; reads
/// and writes hold a shared/exclusive flock on the directory's lock file.
class ExpansionCache {
 public:
  static constexpr int kFormatVersion = 1;

  enum class Status { hit, miss, stale, corrupt };
  struct Lookup {
    Status status = Status::miss;
    nlohmann::json payload;
    std::string detail;
  };

  explicit ExpansionCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(std::string_view key) const;

  Lookup load(std::string_view key) const;
  void store(std::string_view key, const nlohmann::json& payload) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace symforms
