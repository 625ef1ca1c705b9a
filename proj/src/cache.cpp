#include "vir/cache.hpp"

#include "vir/errors.hpp"
#include "vir/serialize.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <unistd.h>

namespace vir {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::Internal, "SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

GramCache::GramCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) fail(ErrorKind::Domain, "cannot create cache directory " + directory_.string() + ": " + ec.message());
}

std::string GramCache::key(const VermaParams<Rational>& params, int level) {
  return sha256_hex("gram|" + to_fraction_string(params.c) + "|" + to_fraction_string(params.h) + "|" +
                    std::to_string(level));
}

std::filesystem::path GramCache::path_for(const VermaParams<Rational>& params, int level) const {
  return directory_ / ("gram-" + key(params, level) + ".json");
}

std::optional<GramMatrix> GramCache::load(const VermaParams<Rational>& params, int level) const {
  std::ifstream in(path_for(params, level));
  if (!in) return std::nullopt;
  try {
    const Json doc = Json::parse(in);
    GramMatrix g = gram_from_json(document_payload(doc, "gram"));
    if (g.params == params && g.level == level) return g;
  } catch (const std::exception&) {
    // Unreadable entries are recomputed and overwritten.
  }
  return std::nullopt;
}

void GramCache::store(const GramMatrix& g) const {
  static std::atomic<unsigned> counter{0};
  const auto target = path_for(g.params, g.level);
  const auto temp = target.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(temp, std::ios::trunc);
    out << document("gram", to_json(g)).dump() << '\n';
    if (!out) {
      std::filesystem::remove(temp);
      fail(ErrorKind::Domain, "cannot write cache file " + temp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp);
    fail(ErrorKind::Domain, "cannot move cache file into place: " + ec.message());
  }
}

RationalMatrix GramCache::gram(const VermaParams<Rational>& params, int level) {
  if (auto g = load(params, level)) {
    std::lock_guard lock(mutex_);
    ++hits_;
    return std::move(g->entries);
  }
  GramMatrix g{params, level, gram_matrix(params, level)};
  store(g);
  std::lock_guard lock(mutex_);
  ++misses_;
  return std::move(g.entries);
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return std::filesystem::path(*explicit_dir);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace vir
