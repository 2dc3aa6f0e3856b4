#include "bosonic/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "json.hpp"

namespace bosonic {

namespace fs = std::filesystem;
using nlohmann::json;

std::string default_cache_dir() {
  const char* env = std::getenv(kCacheDirEnv);
  return env ? std::string(env) : std::string();
}

std::string slice_cache_path(const std::string& dir, const CartanDatum& cd, const RootVec& weight) {
  std::string name = cd.name() + "_w";
  for (int a : weight) name += "_" + std::to_string(a);
  return (fs::path(dir) / (name + ".json")).string();
}

std::optional<std::vector<NodeWord>> load_slice_pivots(const std::string& dir, const CartanDatum& cd,
                                                       const RootVec& weight, std::size_t word_count) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(slice_cache_path(dir, cd, weight));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("format_version").get<int>() != kCacheFormatVersion) return std::nullopt;
    if (j.at("type").get<std::string>() != cd.name()) return std::nullopt;
    if (j.at("min_d").get<int>() != 1 || j.at("variable").get<std::string>() != "v=q^(1/2)") return std::nullopt;
    if (j.at("weight").get<RootVec>() != weight) return std::nullopt;
    if (j.at("words").size() != word_count) return std::nullopt;
    std::vector<NodeWord> pivots;
    for (const auto& p : j.at("pivots")) {
      NodeWord w;
      for (int c : p.get<std::vector<int>>()) {
        if (c < 1 || c > cd.rank()) return std::nullopt;
        w.push_back(static_cast<char>(c));
      }
      pivots.push_back(w);
    }
    return pivots;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

namespace {

std::vector<int> as_ints(const NodeWord& w) { return {w.begin(), w.end()}; }

}  // namespace

void save_slice_basis(const std::string& dir, const CartanDatum& cd, const SliceBasis& basis) {
  if (dir.empty()) return;
  try {
    fs::create_directories(dir);
    json j;
    j["format_version"] = kCacheFormatVersion;
    j["type"] = cd.name();
    j["min_d"] = 1;
    j["variable"] = "v=q^(1/2)";
    j["weight"] = basis.weight;
    json words = json::array();
    for (const auto& w : basis.words) words.push_back(as_ints(w));
    j["words"] = std::move(words);
    json pivots = json::array();
    for (const auto& w : basis.pivots) pivots.push_back(as_ints(w));
    j["pivots"] = std::move(pivots);
    json gram = json::array();
    for (const auto& row : basis.gram) {
      json r = json::array();
      for (const auto& e : row) r.push_back(e.to_string());
      gram.push_back(std::move(r));
    }
    j["pivot_gram"] = std::move(gram);

    std::string target = slice_cache_path(dir, cd, basis.weight);
    std::random_device rd;
    std::string tmp = target + ".tmp" + std::to_string(rd());
    {
      std::ofstream out(tmp);
      out << j.dump() << "\n";
      if (!out) {
        fs::remove(tmp);
        return;
      }
    }
    fs::rename(tmp, target);
  } catch (const std::exception&) {
  }
}

}  // namespace bosonic
