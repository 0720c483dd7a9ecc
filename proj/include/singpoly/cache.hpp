#ifndef SINGPOLY_CACHE_HPP
#define SINGPOLY_CACHE_HPP

#include "singpoly/jack.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace singpoly {

inline constexpr const char* kCacheVersion = "singpoly-cache-1";

// On-disk store of JackPoly results keyed by (α, N, basis). With paranoid set,
// loaded entries are rejected unless their eigen-equations hold.
class ZetaCache {
public:
  explicit ZetaCache(std::filesystem::path dir, bool paranoid = false);

  static std::string key(const Composition& alpha, int N, Basis basis);
  static std::uint64_t fnv1a(const std::string& s);

  std::optional<JackPoly> load(const Composition& alpha, int N, Basis basis) const;
  void store(const JackPoly& z) const;
  JackPoly get(const Composition& alpha, int N, Basis basis) const;

  const std::filesystem::path& dir() const noexcept { return dir_; }

private:
  std::filesystem::path file_for(const std::string& key) const;
  std::filesystem::path dir_;
  bool paranoid_;
};

} // namespace singpoly

#endif
