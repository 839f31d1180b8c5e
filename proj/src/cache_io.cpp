#include "rootmult/cache_io.hpp"

#include "rootmult/character.hpp"
#include "rootmult/number_theory.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace rootmult {

namespace {

std::string cache_dir_from_env() {
    const char* dir = std::getenv(kCacheDirEnvVar);
    return dir == nullptr ? std::string() : std::string(dir);
}

}  // namespace

void load_caches_from_dir(const std::string& dir) {
    std::ifstream stirling(std::filesystem::path(dir) / "stirling.tsv");
    if (stirling) stirling_cache_load(stirling);
    std::ifstream characters(std::filesystem::path(dir) / "characters.tsv");
    if (characters) character_memo_load(characters);
}

void save_caches_to_dir(const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream stirling(std::filesystem::path(dir) / "stirling.tsv");
    stirling_cache_save(stirling);
    std::ofstream characters(std::filesystem::path(dir) / "characters.tsv");
    character_memo_save(characters);
}

std::string load_caches_from_env() {
    std::string dir = cache_dir_from_env();
    if (!dir.empty()) load_caches_from_dir(dir);
    return dir;
}

std::string save_caches_to_env() {
    std::string dir = cache_dir_from_env();
    if (!dir.empty()) save_caches_to_dir(dir);
    return dir;
}

}  // namespace rootmult
