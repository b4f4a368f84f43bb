#pragma once

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "omega/errors.hpp"
#include "omega/sha256.hpp"

namespace omega {

// Content-addressed result cache: key = sha256 of the canonical request
// description, value = the exact bytes the command printed.  A hit must be
// byte-identical to a fresh computation, so values are stored verbatim and
// writes go through a temp file + atomic rename (concurrent readers and a
// single writer per key are fine).
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    // Resolution order: explicit flag, OMEGA_CACHE_DIR, platform cache dir.
    static ResultCache resolve(const std::string& flag_value) {
        if (!flag_value.empty()) return ResultCache(flag_value);
        if (const char* env = std::getenv("OMEGA_CACHE_DIR"); env && *env)
            return ResultCache(env);
        if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
            return ResultCache(std::filesystem::path(xdg) / "omega");
        if (const char* home = std::getenv("HOME"); home && *home)
            return ResultCache(std::filesystem::path(home) / ".cache" / "omega");
        return ResultCache(std::filesystem::temp_directory_path() / "omega-cache");
    }

    const std::filesystem::path& directory() const { return dir_; }

    std::optional<std::string> lookup(const std::string& key_hash) const {
        std::ifstream in(path_for(key_hash), std::ios::binary);
        if (!in) return std::nullopt;
        std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return data;
    }

    void store(const std::string& key_hash, const std::string& value) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) throw InternalError("cache: cannot create " + dir_.string() + ": " + ec.message());
        auto final_path = path_for(key_hash);
        auto tmp_path = final_path;
        tmp_path += ".tmp." + std::to_string(static_cast<unsigned long>(::getpid()));
        {
            std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
            if (!out) throw InternalError("cache: cannot write " + tmp_path.string());
            out.write(value.data(), static_cast<std::streamsize>(value.size()));
        }
        std::filesystem::rename(tmp_path, final_path, ec);
        if (ec) {
            std::filesystem::remove(tmp_path);
            throw InternalError("cache: rename failed: " + ec.message());
        }
    }

private:
    std::filesystem::path path_for(const std::string& key_hash) const {
        return dir_ / (key_hash + ".json");
    }

    std::filesystem::path dir_;
};

}  // namespace omega
