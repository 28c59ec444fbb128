#include "betti_table.hpp"

namespace monres {

void BettiTable::add(int hdeg, const Monomial& mdeg, std::int64_t count) {
  if (count == 0) return;
  auto key = std::make_pair(hdeg, mdeg);
  auto it = entries.find(key);
  if (it == entries.end()) {
    entries.emplace(std::move(key), count);
  } else {
    it->second += count;
    if (it->second == 0) entries.erase(it);
  }
}

std::int64_t BettiTable::at(int hdeg, const Monomial& mdeg) const {
  auto it = entries.find(std::make_pair(hdeg, mdeg));
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::pd() const {
  int max_hdeg = -1;
  for (const auto& [key, count] : entries) {
    if (count != 0 && key.first > max_hdeg) max_hdeg = key.first;
  }
  return max_hdeg;
}

std::vector<std::int64_t> BettiTable::totals() const {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(pd() + 1), 0);
  for (const auto& [key, count] : entries) {
    sums[static_cast<std::size_t>(key.first)] += count;
  }
  return sums;
}

}  // namespace monres
