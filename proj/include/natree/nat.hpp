#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "natree/trees.hpp"

namespace natree {

/// Labelled binary tree. labels[v] is the left label of v when v is a left
/// child and its right label when v is a right child; the root is stored as
/// 0 and carries the implicit pair (w_L, w_R).
class Nat {
 public:
  Nat() = default;  // the empty NAT of shape EmptyLeft
  /// No validation; see validate_nat.
  Nat(BinaryTree shape, std::vector<int> labels);

  static Nat from_shape_kind(BinaryTree::Kind kind);
  /// Inverse of to_string().
  static Nat parse(std::string_view text);
  /// Builds a NAT from (path, label) pairs, one per non-root vertex; the
  /// last letter of a path decides the label's side.
  static Nat from_paths(const std::vector<std::pair<std::string, int>>& labelled);
  /// (path, label) pairs in preorder.
  std::vector<std::pair<std::string, int>> to_paths() const;

  const BinaryTree& shape() const { return shape_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  bool empty() const { return shape_.empty(); }
  std::size_t size() const { return shape_.size(); }
  int w_l() const;
  int w_r() const;

  /// Shape string with each non-root vertex prefixed by its label,
  /// e.g. "(r1(,),b1(,))". Empty NATs print like their shapes.
  std::string to_string() const;

  friend bool operator==(const Nat&, const Nat&) = default;

 private:
  BinaryTree shape_;
  std::vector<int> labels_;
};

struct Violation {
  std::string condition;     // "left-labels", "right-labels", "left-decreasing", ...
  std::vector<int> vertices; // offending vertices
  std::string message;
};

std::vector<Violation> validate_nat(const BinaryTree& shape, const std::vector<int>& labels);
inline std::vector<Violation> validate_nat(const Nat& t) { return validate_nat(t.shape(), t.labels()); }
/// Throws InputError listing the violations.
void require_valid(const Nat& t);

/// NAT(B), built by splitting at the root and merging the sub-NATs under all
/// label subsets (lexicographic order).
std::vector<Nat> enumerate_nats_of_shape(const BinaryTree& shape);
/// All NATs of geometric size w_L x w_R.
std::vector<Nat> enumerate_nats_by_size(int w_l, int w_r);
/// All shapes with w_L-1 left and w_R-1 right children.
std::vector<BinaryTree> shapes_of_size(int w_l, int w_r);

/// Standardized left and right sub-NATs.
std::pair<Nat, Nat> split(const Nat& t);
/// Inverse of split: `left_to_l` lists the left labels of the result that go
/// to the left sub-NAT (|LV(T_L)|+1 of them), `right_to_l` the right labels
/// (|RV(T_L)| of them). Both must be increasing.
Nat merge(const Nat& tl, const Nat& tr, const std::vector<int>& left_to_l,
          const std::vector<int>& right_to_l);

/// Point set with root (0,0); x is the row (left-label axis) and y the
/// column (right-label axis).
struct GeometricNat {
  int w_l = 0;
  int w_r = 0;
  std::vector<std::pair<int, int>> points;  // sorted
  friend bool operator==(const GeometricNat&, const GeometricNat&) = default;
};

GeometricNat nat_to_geometric(const Nat& t);
/// Point order of `points` is irrelevant; throws InputError naming the
/// violated condition ("root", "pattern", "parent" or "gap").
Nat geometric_to_nat(const GeometricNat& g);
/// Coordinates of every vertex, indexed like the vertices of t.
std::vector<std::pair<int, int>> vertex_points(const Nat& t);

struct NatStats {
  int lo = 0;
  int ro = 0;
  int hook = 0;
  int w_l = 0;
  int w_r = 0;
};
NatStats nat_stats(const Nat& t);

}  // namespace natree
