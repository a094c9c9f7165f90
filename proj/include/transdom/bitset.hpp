#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <vector>

namespace transdom {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline Bitset bitset_of(std::size_t n, const std::vector<int>& members) {
  Bitset b(n);
  for (int v : members) b.set(static_cast<std::size_t>(v));
  return b;
}

inline std::vector<int> members_of(const Bitset& b) {
  std::vector<int> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace transdom
