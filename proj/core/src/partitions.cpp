#include "dunkl/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing: " + to_string());
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_.front(), 0);
  for (int row : parts_)
    for (int j = 0; j < row; ++j) ++conj[j];
  return Partition(std::move(conj));
}

std::vector<int> Partition::padded(int n) const {
  if (length() > n)
    throw DomainError("partition " + to_string() + " has more than " +
                      std::to_string(n) + " parts");
  std::vector<int> out(parts_);
  out.resize(n, 0);
  return out;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  // FNV-1a over the parts
  std::size_t h = 1469598103934665603ull;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e37;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void enumerate_into(int remaining, int largest, int slots, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  // the remaining slots must be able to hold `remaining` with parts ≤ first
  const int lowest = (remaining + slots - 1) / slots;
  for (int first = std::min(remaining, largest); first >= lowest; --first) {
    prefix.push_back(first);
    enumerate_into(remaining - first, first, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m, int max_parts) {
  if (max_parts < 1) throw DomainError("max_parts must be at least 1");
  if (m < 0) throw DomainError("partition weight must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  prefix.reserve(max_parts);
  enumerate_into(m, m, max_parts, prefix, out);
  return out;
}

std::uint64_t count_partitions(int m, int max_parts) {
  if (max_parts < 1) throw DomainError("max_parts must be at least 1");
  if (m < 0) throw DomainError("partition weight must be nonnegative");
  const int k_max = std::min(max_parts, std::max(m, 1));
  // row k holds p(·, ≤k parts); p(w, ≤k) = p(w, ≤k−1) + p(w−k, ≤k)
  std::vector<std::uint64_t> row(m + 1, 0);
  row[0] = 1;
  for (int k = 1; k <= k_max; ++k)
    for (int w = k; w <= m; ++w) row[w] += row[w - k];
  return row[m];
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return {};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw DomainError("empty partition entry in '" + text + "'");
    const std::string trimmed = item.substr(first, last - first + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (ec != std::errc{} || ptr != trimmed.data() + trimmed.size())
      throw DomainError("partition entry '" + trimmed + "' is not an integer");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

}  // namespace dunkl
