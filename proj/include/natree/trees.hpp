#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace natree {

/// Unlabelled binary tree. There are two trees of size 0, EmptyLeft and
/// EmptyRight; inside a non-empty tree a missing child is simply absent.
///
/// Vertices are stored in preorder, so vertex 0 is the root and every
/// subtree occupies a contiguous index range.
class BinaryTree {
 public:
  enum class Kind : std::uint8_t { EmptyLeft, EmptyRight, Node };
  static constexpr int kAbsent = -1;

  struct Vertex {
    int left = kAbsent;
    int right = kAbsent;
    int parent = kAbsent;
    bool is_left_child = false;  // only meaningful when parent != kAbsent
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };

  BinaryTree() = default;  // EmptyLeft

  static BinaryTree empty_left();
  static BinaryTree empty_right();
  static BinaryTree leaf();
  /// Root with the given children. std::nullopt and both empty trees mean
  /// "no child on that side".
  static BinaryTree node(const std::optional<BinaryTree>& left,
                         const std::optional<BinaryTree>& right);
  /// Builds a tree from explicit child links. `links[i]` holds the
  /// (left, right) children of input vertex i (kAbsent when missing).
  /// On return `preorder_of[i]` is the index input vertex i received.
  static BinaryTree from_links(const std::vector<std::pair<int, int>>& links, int root,
                               std::vector<int>* preorder_of = nullptr);
  /// Inverse of to_string().
  static BinaryTree parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool empty() const { return kind_ != Kind::Node; }
  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool is_left_child(int v) const;
  bool is_right_child(int v) const;

  /// Number of vertices in the subtree rooted at v.
  std::size_t subtree_size(int v) const;
  /// Subtree rooted at v, re-indexed.
  BinaryTree subtree(int v) const;
  /// Root's left subtree; EmptyLeft when absent (or when this tree is empty).
  BinaryTree left_tree() const;
  /// Root's right subtree; EmptyRight when absent.
  BinaryTree right_tree() const;
  BinaryTree mirror() const;

  /// Root-to-vertex path over {L, R}; the root is "".
  std::string path(int v) const;
  /// Vertex reached by `path`, or kAbsent.
  int find(std::string_view path) const;

  /// "(left,right)" with absent children written as nothing, so a single
  /// vertex is "(,)". The empty trees print as "empty_left"/"empty_right".
  std::string to_string() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  void append(const BinaryTree& sub, int parent, bool as_left);

  Kind kind_ = Kind::EmptyLeft;
  std::vector<Vertex> vertices_;
};

/// All shapes with n vertices: by left-subtree size ascending, then by the
/// canonical order of the left and right subtrees. n = 0 gives
/// [EmptyLeft, EmptyRight].
std::vector<BinaryTree> enumerate_binary_trees(int n);

/// (|LV|, |RV|), with LV(EmptyLeft) = RV(EmptyRight) = -1.
std::pair<int, int> lv_rv(const BinaryTree& tree);

struct BranchStats {
  int lo = 0;  // non-root vertices on the leftmost branch
  int ro = 0;  // non-root vertices on the rightmost branch
  friend bool operator==(const BranchStats&, const BranchStats&) = default;
};
BranchStats branch_stats(const BinaryTree& tree);

struct HookPartition {
  std::vector<std::vector<int>> blocks;  // each block starts with its root
  std::vector<int> roots;
  std::size_t count() const { return blocks.size(); }
};

/// Partition into hooks: take the root, its leftmost and rightmost
/// branches, then recurse on each remaining subtree.
HookPartition hook_partition(const BinaryTree& tree);
int hook_count(const BinaryTree& tree);

/// Subtree side counts at a non-root vertex U: el = left vertices in the
/// subtree of U (U included if it is a left child), er likewise.
struct SubtreeCount {
  int vertex = 0;
  int el = 0;
  int er = 0;
};
std::vector<SubtreeCount> subtree_counts(const BinaryTree& tree);

/// Plane rooted tree.
struct OrderedTree {
  std::vector<OrderedTree> children;

  std::size_t vertex_count() const;
  std::size_t edge_count() const { return vertex_count() - 1; }
  bool is_leaf() const { return children.empty(); }
  /// Nested parentheses, one pair per vertex: a root with two leaves is "(()())".
  std::string to_string() const;
  static OrderedTree parse(std::string_view text);

  friend bool operator==(const OrderedTree&, const OrderedTree&) = default;
};

/// Vertices having at least one child that is a leaf.
int childleaf_count(const OrderedTree& tree);
std::vector<OrderedTree> enumerate_ordered_trees(int edges);

/// A k-subset of {1..d}.
class Direction {
 public:
  Direction(int d, const std::vector<int>& members);
  static Direction from_mask(int d, std::uint32_t mask);
  /// "1,3"
  static Direction parse(int d, std::string_view text);

  int d() const { return d_; }
  int k() const;
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  std::vector<int> members() const;
  std::string to_string() const;

  friend bool operator==(const Direction&, const Direction&) = default;
  /// Lexicographic on the sorted member lists.
  friend std::strong_ordering operator<=>(const Direction& a, const Direction& b);

 private:
  Direction() = default;
  int d_ = 0;
  std::uint32_t mask_ = 0;
};

/// All (d,k)-directions in lexicographic order.
std::vector<Direction> all_directions(int d, int k);
void check_dk(int d, int k);

/// Tree whose children are indexed by (d,k)-directions. Size-0 trees are
/// EmptyDK(direction), one per direction. Vertices are stored in preorder
/// with children visited in direction order.
class DKTree {
 public:
  struct Vertex {
    int parent = -1;
    std::optional<Direction> direction;                // from the parent
    std::vector<std::pair<Direction, int>> children;  // sorted by direction
  };

  static DKTree empty(int d, int k, const Direction& direction);
  static DKTree leaf(int d, int k);
  static DKTree node(int d, int k, std::vector<std::pair<Direction, DKTree>> children);
  static DKTree parse(int d, int k, std::string_view text);

  int d() const { return d_; }
  int k() const { return k_; }
  bool empty() const { return vertices_.empty(); }
  const std::optional<Direction>& empty_direction() const { return empty_direction_; }
  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Child of v in `direction`, or -1.
  int child(int v, const Direction& direction) const;
  DKTree subtree(int v) const;

  /// Directions from the root separated by '/', e.g. "1,3/2"; root is "".
  std::string path(int v) const;
  int find(std::string_view path) const;
  /// "[1:[],3:[2:[]]]"-style nesting; empty trees print as "empty{1,3}".
  std::string to_string() const;

  friend bool operator==(const DKTree& a, const DKTree& b);

 private:
  void append(const DKTree& sub, int parent, const Direction& dir);

  int d_ = 2;
  int k_ = 1;
  std::optional<Direction> empty_direction_;
  std::vector<Vertex> vertices_;
};

std::vector<DKTree> enumerate_dk_trees(int d, int k, int n);

/// The (2,1)-tree with the same shape: {1} is left, {2} is right.
DKTree to_dk_tree(const BinaryTree& tree);
BinaryTree to_binary_tree(const DKTree& tree);

}  // namespace natree
