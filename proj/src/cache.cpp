#include "symforms/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "symforms/error.hpp"

namespace symforms {

namespace {

class DirLock {
 public:
  DirLock(const std::filesystem::path& dir, int mode) {
    fd_ = ::open((dir / ".lock").c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ >= 0) ::flock(fd_, mode);
  }
  ~DirLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExpansionCache::ExpansionCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::InvalidArgument, "cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path ExpansionCache::path_for(std::string_view key) const {
  return dir_ / (fnv1a_hex(std::string(key) + "|v" + std::to_string(kFormatVersion)) + ".json");
}

ExpansionCache::Lookup ExpansionCache::load(std::string_view key) const {
  const auto path = path_for(key);
  DirLock lock(dir_, LOCK_SH);
  std::ifstream in(path);
  if (!in) return {Status::miss, nullptr, ""};
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc = nlohmann::json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("payload") || !doc.contains("checksum"))
    return {Status::corrupt, nullptr, "unreadable cache entry " + path.string()};
  if (doc.value("format_version", 0) != kFormatVersion) return {Status::stale, nullptr, "format version changed"};
  if (doc.value("key", std::string()) != key) return {Status::corrupt, nullptr, "key mismatch in " + path.string()};
  if (doc["checksum"] != fnv1a_hex(doc["payload"].dump()))
    return {Status::corrupt, nullptr, "checksum mismatch in " + path.string()};
  return {Status::hit, doc["payload"], ""};
}

void ExpansionCache::store(std::string_view key, const nlohmann::json& payload) const {
  const auto path = path_for(key);
  nlohmann::json doc{{"format_version", kFormatVersion},
                     {"key", std::string(key)},
                     {"checksum", fnv1a_hex(payload.dump())},
                     {"payload", payload}};
  DirLock lock(dir_, LOCK_EX);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump();
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace symforms
