#include "singpoly/cache.hpp"

#include "singpoly/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace singpoly {

ZetaCache::ZetaCache(std::filesystem::path dir, bool paranoid) : dir_(std::move(dir)), paranoid_(paranoid) {
  std::filesystem::create_directories(dir_);
}

std::string ZetaCache::key(const Composition& alpha, int N, Basis basis) {
  return std::string(kCacheVersion) + "|" + alpha.with_ambient(N).to_string() + "|" + std::to_string(N) + "|" +
         (basis == Basis::x_monic ? "x" : "p");
}

std::uint64_t ZetaCache::fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path ZetaCache::file_for(const std::string& key) const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / (std::string(buf) + ".json");
}

std::optional<JackPoly> ZetaCache::load(const Composition& alpha, int N, Basis basis) const {
  const std::string k = key(alpha, N, basis);
  std::ifstream in(file_for(k));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("key").get<std::string>() != k) return std::nullopt;
    JackPoly z = jack_from_json(j.at("zeta"));
    if (paranoid_ && !verify_eigen(z)) return std::nullopt;
    return z;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ZetaCache::store(const JackPoly& z) const {
  const std::string k = key(z.alpha, z.N, z.basis);
  const auto path = file_for(k);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << Json{{"key", k}, {"zeta", to_json(z)}}.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

JackPoly ZetaCache::get(const Composition& alpha, int N, Basis basis) const {
  if (auto z = load(alpha, N, basis)) return *z;
  JackPoly z = basis == Basis::x_monic ? zeta_x(alpha, N) : zeta_p(alpha, N);
  store(z);
  return z;
}

} // namespace singpoly
