#include "kron/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kron {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[j]++;
    return Partition(std::move(conj));
}

Partition Partition::complement(int rows, int width) const {
    if (length() > rows) throw std::invalid_argument("partition does not fit rectangle (rows)");
    std::vector<int> out(rows);
    for (int i = 0; i < rows; ++i) {
        int p = part(rows - i);
        if (p > width) throw std::invalid_argument("partition does not fit rectangle (width)");
        out[i] = width - p;
    }
    return Partition(std::move(out));
}

int Partition::count_parts_equal(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Int Partition::dimension_sn() const {
    int m = size();
    Int hooks = 1;
    Partition conj = conjugate();
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j)
            hooks *= (parts_[i] - j) + (conj.parts()[j] - i) - 1;
    Int f = factorial(static_cast<unsigned>(m));
    if (f % hooks != 0) throw std::logic_error("hook length formula: non-exact division");
    return f / hooks;
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        size_t a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) {
            cur.clear();
            return;
        }
        size_t b = cur.find_last_not_of(" \t");
        parts.push_back(std::stoi(cur.substr(a, b - a + 1)));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    return Partition(std::move(parts));
}

PartitionTuple::PartitionTuple(std::vector<Partition> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("partition tuple must be nonempty");
    int m = entries_[0].size();
    for (const auto& p : entries_)
        if (p.size() != m) throw std::invalid_argument("partition tuple entries must have equal sizes");
}

int PartitionTuple::size() const { return entries_[0].size(); }

int PartitionTuple::max_part() const {
    int mx = 0;
    for (const auto& p : entries_) mx = std::max(mx, p.part(1));
    return mx;
}

int PartitionTuple::max_length() const {
    int mx = 0;
    for (const auto& p : entries_) mx = std::max(mx, p.length());
    return mx;
}

std::string PartitionTuple::to_string() const {
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ';';
        out += entries_[i].to_string();
    }
    return out;
}

PartitionTuple PartitionTuple::parse(const std::string& text) {
    std::vector<Partition> entries;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            entries.push_back(Partition::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    entries.push_back(Partition::parse(cur));
    return PartitionTuple(std::move(entries));
}

namespace {
void partitions_rec(int m, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (max_len == 0) return;
    for (int first = std::min(m, max_part); first >= 1; --first) {
        cur.push_back(first);
        partitions_rec(m - first, first, max_len - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int m, int max_part, int max_len) {
    if (m < 0) throw std::invalid_argument("partitions_of: negative size");
    if (max_part < 0) max_part = m;
    if (max_len < 0) max_len = m;
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(m, max_part, max_len, cur, out);
    return out;
}

}  // namespace kron
