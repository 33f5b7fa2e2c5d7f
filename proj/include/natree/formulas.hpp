#pragma once

#include <utility>
#include <vector>

#include "natree/arith.hpp"
#include "natree/nat.hpp"
#include "natree/perms.hpp"
#include "natree/poly.hpp"
#include "natree/trees.hpp"

namespace natree {

/// |LV|! |RV|! / (prod over left children of EL * prod over right children of ER).
Integer hook_formula(const BinaryTree& tree);

/// (sigma_L, sigma_R): postfix readings of the left labels (left subtree,
/// right subtree, vertex) and of the right labels (right subtree first).
std::pair<Permutation, Permutation> sigma_readings(const Nat& t);

enum class Statistic { Inv, Imaj };
int statistic(const Permutation& sigma, Statistic s);

/// q_L^{S(sigma_L)} q_R^{S(sigma_R)}
ParamPoly weight(const Nat& t, Statistic s);

/// [n]_q = 1 + q + ... + q^{n-1}
ParamPoly q_int(int n, Param q);
ParamPoly q_factorial(int n, Param q);
/// Zero when k > n or k < 0.
ParamPoly q_binomial(int n, int k, Param q);
/// x (x+1) ... (x+n-1)
ParamPoly rising_factorial(const ParamPoly& x, int n);

/// [LV]_{qL}! [RV]_{qR}! / (prod [EL]_{qL} * prod [ER]_{qR}), divided exactly.
ParamPoly q_hook_formula(const BinaryTree& tree);

Integer stirling2(int n, int k);
/// Set partitions of {1..n} into k blocks, q marking the elements other
/// than n in the block of n.
ParamPoly stirling2_q(int n, int k, Param q);

/// sum_p (p-1)! (alpha+beta)^{(p-1)} S_alpha(i,p) S_beta(j,p)
ParamPoly count_by_size(int i, int j);
/// The p-th term of count_by_size.
ParamPoly count_by_size_and_hook_ab(int i, int j, int p);
/// (p-1)! p! S(i,p) S(j,p)
Integer count_by_size_and_hook(int i, int j, int p);

/// All uv with std(u) = sigma followed by m+1 and std(v) = mu, ordered by
/// the value set of u (lexicographic).
std::vector<Permutation> bsg(const Permutation& sigma, const Permutation& mu);

/// w_i(M) = 1 + number of vertices whose direction contains i.
std::vector<int> dk_geometric_size(const DKTree& tree);
/// prod (w_i - 1)! / prod over children U and i in dir(U) of E_i(U).
Integer dk_hook_formula(const DKTree& tree);

}  // namespace natree
