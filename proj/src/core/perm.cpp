#include "hopfop/core/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopfop {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i + 1);
  return q;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Perm c(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm block_permutation(const Perm& sigma, std::span<const int> block_sizes) {
  const std::size_t n = sigma.size();
  if (block_sizes.size() != n) throw std::invalid_argument("block_permutation: size mismatch");
  std::vector<int> source_offset(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) source_offset[j + 1] = source_offset[j] + block_sizes[j];
  Perm out;
  out.reserve(source_offset[n]);
  for (std::size_t j = 0; j < n; ++j) {
    auto src = sigma[j] - 1;
    for (int o = 0; o < block_sizes[src]; ++o) out.push_back(source_offset[src] + o + 1);
  }
  return out;
}

Perm block_product(std::span<const Perm> blocks) {
  Perm out;
  int offset = 0;
  for (const auto& b : blocks) {
    for (int v : b) out.push_back(v + offset);
    offset += static_cast<int>(b.size());
  }
  return out;
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || n < k) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int parts) {
    if (parts == 1) {
      cur.push_back(remaining);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int first = 1; first <= remaining - (parts - 1); ++first) {
      cur.push_back(first);
      rec(remaining - first, parts - 1);
      cur.pop_back();
    }
  };
  rec(n, k);
  return out;
}

void for_each_index_tuple(std::span<const std::size_t> sizes,
                          const std::function<void(std::span<const std::size_t>)>& f) {
  for (auto s : sizes)
    if (s == 0) return;
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (;;) {
    f(idx);
    std::size_t j = 0;
    while (j < idx.size()) {
      if (++idx[j] < sizes[j]) break;
      idx[j] = 0;
      ++j;
    }
    if (j == idx.size()) return;
  }
}

std::string perm_to_string(const Perm& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

}  // namespace hopfop
