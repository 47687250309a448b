#pragma once

#include "kron/ints.hpp"
#include "kron/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kron {

/// Cache directory from KRON_CACHE_DIR; empty string disables caching,
/// unset falls back to ".kron-cache". An unwritable directory warns once
/// and disables persistence.
std::string cache_dir_from_env();

/// Append-only JSON-lines store. Corrupted lines are skipped with a warning.
class JsonlCache {
public:
    JsonlCache() = default;  // disabled
    JsonlCache(std::string dir, std::string filename);

    bool enabled() const { return enabled_; }
    std::optional<std::string> get(const std::string& key);
    void put(const std::string& key, const std::string& value);
    size_t hits() const { return hits_; }
    size_t misses() const { return misses_; }

private:
    void load();
    bool enabled_ = false;
    bool loaded_ = false;
    std::string path_;
    std::map<std::string, std::string> data_;
    size_t hits_ = 0;
    size_t misses_ = 0;
};

/// Disk cache of single character values chi^lambda(mu), stored as
/// append-only JSON-lines records {m, lambda, mu, value}.
class CharCache {
public:
    CharCache() = default;
    explicit CharCache(const std::string& dir);

    std::optional<Int> get(const Partition& lambda, const Partition& mu);
    void put(const Partition& lambda, const Partition& mu, const Int& value);
    size_t hits() const { return hits_; }
    size_t misses() const { return misses_; }

private:
    void load();
    bool enabled_ = false;
    bool loaded_ = false;
    std::string path_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::string> data_;
    size_t hits_ = 0;
    size_t misses_ = 0;
};

/// Cache of finished Kronecker coefficients, keyed by the normalized tuple.
class CoeffCache {
public:
    CoeffCache() = default;
    explicit CoeffCache(const std::string& dir) : store_(dir, "coefficients.jsonl") {}

    static std::string key_of(const PartitionTuple& tuple);
    std::optional<Int> get(const PartitionTuple& tuple);
    void put(const PartitionTuple& tuple, const Int& value);
    JsonlCache& store() { return store_; }

private:
    JsonlCache store_;
};

/// Checkpoint records for long class sums: per (tuple, prime-set, first part)
/// partial residue vectors.
class PartialsCache {
public:
    PartialsCache() = default;
    explicit PartialsCache(const std::string& dir) : store_(dir, "partials.jsonl") {}

    std::optional<std::vector<uint64_t>> get(const std::string& key, int first_part,
                                             const std::vector<uint64_t>& primes);
    void put(const std::string& key, int first_part, const std::vector<uint64_t>& primes,
             const std::vector<uint64_t>& residues);

private:
    JsonlCache store_;
};

}  // namespace kron
