#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hopfop {

/// Permutation of {1..n} in one-line notation: p[i-1] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm inverse(const Perm& p);
/// (a ∘ b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
bool is_permutation(const Perm& p);

/// All permutations of {1..n} in lexicographic order.
std::vector<Perm> all_permutations(int n);

/// Block permutation σ̂ on m_1+…+m_n points: position o of block j of the
/// target is sent to position o of block σ(j) of the source, i.e.
/// σ̂(offset_j + o) = offset'_{σ(j)} + o where the target blocks have sizes
/// m_{σ(1)},…,m_{σ(n)} and the source blocks sizes m_1,…,m_n.
Perm block_permutation(const Perm& sigma, std::span<const int> block_sizes);

/// σ_1 × … × σ_k acting blockwise.
Perm block_product(std::span<const Perm> blocks);

/// Ordered compositions of n into exactly k positive parts.
std::vector<std::vector<int>> compositions(int n, int k);

/// Calls f on every tuple (i_1..i_k) with 0 <= i_j < sizes[j].
void for_each_index_tuple(std::span<const std::size_t> sizes,
                          const std::function<void(std::span<const std::size_t>)>& f);

std::string perm_to_string(const Perm& p);

}  // namespace hopfop
