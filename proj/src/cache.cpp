#include "kron/cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kron {

namespace fs = std::filesystem;
using nlohmann::json;

std::string cache_dir_from_env() {
    const char* env = std::getenv("KRON_CACHE_DIR");
    if (env == nullptr) return ".kron-cache";
    return env;  // may be "", meaning disabled
}

JsonlCache::JsonlCache(std::string dir, std::string filename) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::cerr << "warning: cache directory '" << dir << "' not usable (" << ec.message()
                  << "); proceeding without cache\n";
        return;
    }
    path_ = (fs::path(dir) / filename).string();
    enabled_ = true;
}

void JsonlCache::load() {
    loaded_ = true;
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    size_t bad = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            data_[j.at("key").get<std::string>()] = j.at("value").get<std::string>();
        } catch (const std::exception&) {
            ++bad;
        }
    }
    if (bad > 0)
        std::cerr << "warning: skipped " << bad << " corrupted cache line(s) in " << path_ << "\n";
}

std::optional<std::string> JsonlCache::get(const std::string& key) {
    if (!enabled_) return std::nullopt;
    if (!loaded_) load();
    auto it = data_.find(key);
    if (it == data_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void JsonlCache::put(const std::string& key, const std::string& value) {
    if (!enabled_) return;
    if (!loaded_) load();
    auto [it, inserted] = data_.emplace(key, value);
    if (!inserted) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        std::cerr << "warning: cache file '" << path_ << "' not writable; disabling cache\n";
        enabled_ = false;
        return;
    }
    json j{{"key", key}, {"value", value}};
    out << j.dump() << "\n";
}

CharCache::CharCache(const std::string& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::cerr << "warning: cache directory '" << dir << "' not usable (" << ec.message()
                  << "); proceeding without character cache\n";
        return;
    }
    path_ = (fs::path(dir) / "characters.jsonl").string();
    enabled_ = true;
}

void CharCache::load() {
    loaded_ = true;
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    size_t bad = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            auto lam = j.at("lambda").get<std::vector<int>>();
            auto mu = j.at("mu").get<std::vector<int>>();
            data_[{std::move(lam), std::move(mu)}] = j.at("value").get<std::string>();
        } catch (const std::exception&) {
            ++bad;
        }
    }
    if (bad > 0)
        std::cerr << "warning: skipped " << bad << " corrupted cache line(s) in " << path_ << "\n";
}

std::optional<Int> CharCache::get(const Partition& lambda, const Partition& mu) {
    if (!enabled_) return std::nullopt;
    if (!loaded_) load();
    auto it = data_.find({lambda.parts(), mu.parts()});
    if (it == data_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return parse_int(it->second);
}

void CharCache::put(const Partition& lambda, const Partition& mu, const Int& value) {
    if (!enabled_) return;
    if (!loaded_) load();
    auto [it, inserted] = data_.emplace(std::make_pair(lambda.parts(), mu.parts()), to_dec(value));
    if (!inserted) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        std::cerr << "warning: cache file '" << path_ << "' not writable; disabling cache\n";
        enabled_ = false;
        return;
    }
    json j{{"m", lambda.size()},
           {"lambda", lambda.parts()},
           {"mu", mu.parts()},
           {"value", to_dec(value)}};
    out << j.dump() << "\n";
}

std::string CoeffCache::key_of(const PartitionTuple& tuple) {
    // k plays no role in the value of g(lambda); keying on the tuple alone
    // maximizes reuse across commands
    return "g|m" + std::to_string(tuple.size()) + "|" + tuple.to_string();
}

std::optional<Int> CoeffCache::get(const PartitionTuple& tuple) {
    auto v = store_.get(key_of(tuple));
    if (!v) return std::nullopt;
    return parse_int(*v);
}

void CoeffCache::put(const PartitionTuple& tuple, const Int& value) {
    store_.put(key_of(tuple), to_dec(value));
}

namespace {
std::string partial_key(const std::string& key, int first_part,
                        const std::vector<uint64_t>& primes) {
    std::ostringstream os;
    os << "partial|" << key << "|p" << first_part << "|";
    for (uint64_t p : primes) os << p << ",";
    return os.str();
}
}  // namespace

std::optional<std::vector<uint64_t>> PartialsCache::get(const std::string& key, int first_part,
                                                        const std::vector<uint64_t>& primes) {
    auto v = store_.get(partial_key(key, first_part, primes));
    if (!v) return std::nullopt;
    std::vector<uint64_t> out;
    std::istringstream is(*v);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoull(tok));
    }
    if (out.size() != primes.size()) return std::nullopt;
    return out;
}

void PartialsCache::put(const std::string& key, int first_part,
                        const std::vector<uint64_t>& primes,
                        const std::vector<uint64_t>& residues) {
    std::ostringstream os;
    for (uint64_t r : residues) os << r << ",";
    store_.put(partial_key(key, first_part, primes), os.str());
}

}  // namespace kron
