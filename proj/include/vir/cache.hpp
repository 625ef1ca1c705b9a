#pragma once

#include "vir/verma.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace vir {

/// Hex SHA-256 digest.
std::string sha256_hex(const std::string& data);

/// On-disk store of exact Gram matrices. Each (c, h, level) maps to one JSON
/// document named by the SHA-256 of "gram|c|h|level"; files are written to a
/// temporary name in the same directory and renamed into place.
class GramCache : public GramProvider {
 public:
  explicit GramCache(std::filesystem::path directory);

  RationalMatrix gram(const VermaParams<Rational>& params, int level) override;

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path path_for(const VermaParams<Rational>& params, int level) const;
  static std::string key(const VermaParams<Rational>& params, int level);

  int hits() const { return hits_; }
  int misses() const { return misses_; }

 private:
  std::optional<GramMatrix> load(const VermaParams<Rational>& params, int level) const;
  void store(const GramMatrix& g) const;

  std::filesystem::path directory_;
  std::mutex mutex_;
  int hits_ = 0;
  int misses_ = 0;
};

/// Name of the only environment variable the tool reads.
inline constexpr const char* kCacheDirEnv = "VIR_CACHE_DIR";

/// The explicit directory if given, otherwise the environment override.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& explicit_dir);

}  // namespace vir
