#pragma once

#include <utility>
#include <vector>

#include "natree/nat.hpp"
#include "natree/perms.hpp"
#include "natree/trees.hpp"

namespace natree {

/// Border edges of a w_L x w_R rectangle: the bottom edge of column c is
/// numbered c, the east edge of row r is w_R + (w_L - 1 - r), so rows are
/// numbered upwards from the bottom one.
int column_edge(int w_l, int w_r, int c);
int row_edge(int w_l, int w_r, int r);

struct ZigzagTrace {
  int start = 0;
  std::vector<std::pair<int, int>> points;  // (row, column) visited in order
  int end = 0;
};

/// Path of the zigzag leaving border edge `edge`. With keep_first_column
/// false, column 0 is ignored (the construction behind phi).
ZigzagTrace zigzag_trace(const Nat& t, int edge, bool keep_first_column);

/// Permutation of size w_L + w_R - 1 whose excedances are exactly 1..w_R-1.
Permutation phi(const Nat& t);
/// Single cycle on 0..w_L+w_R-1, returned as the word starting at 0.
std::vector<int> psi(const Nat& t);
/// The word 0 m_1 ... m_k: cycles of sigma by decreasing maximum, each
/// ending with its maximum.
std::vector<int> psi_word_from_phi(const Permutation& sigma);

TwoColouredCycle recolour(const std::vector<int>& cycle_word, int w_l, int w_r);
/// Inverse of recolour; the word starts at 0 (the symbol b_j).
std::vector<int> uncolour(const TwoColouredCycle& c);

/// NAT of size w_L x w_R with psi(T) equal to the given cycle.
Nat psi_inverse(const std::vector<int>& cycle_word, int w_l, int w_r);
Nat psi_inverse(const TwoColouredCycle& c);
/// NAT with phi(T) = sigma; the size is read off the excedance count.
Nat phi_inverse(const Permutation& sigma);

/// phi(psi_inverse(c)).
Permutation theta(const TwoColouredCycle& c);
/// Pair swap of the blocks strictly between b_j and r_1 when their number
/// is even; identity otherwise.
TwoColouredCycle omega(const TwoColouredCycle& c);
/// CE statistic of sigma (size i+j-1, excedances exactly 1..j-1): one plus
/// the number of u <= j-1 whose image is a red symbol other than r_1, i.e.
/// sigma(u) > j. This is the form under which hook and CE agree.
int ce(const Permutation& sigma, int i, int j);
/// |{u <= j-1 : sigma(u) > i}| + 1. Equal to ce() when i = j only.
int ce_as_displayed(const Permutation& sigma, int i, int j);

/// Binary trees with n vertices to ordered trees with n edges.
OrderedTree zeta(const BinaryTree& tree);
/// Inverse of zeta; the single-vertex tree goes to EmptyLeft.
BinaryTree zeta_inverse(const OrderedTree& tree);

}  // namespace natree
