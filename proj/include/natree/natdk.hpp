#pragma once

#include <optional>
#include <string>
#include <vector>

#include "natree/nat.hpp"
#include "natree/trees.hpp"

namespace natree {

/// One coordinate per axis; nullopt is the placeholder.
using DKLabel = std::vector<std::optional<int>>;

/// Labelled (d,k)-ary tree. The root label is not free data: the constructor
/// replaces labels[0] by the geometric size of the shape.
class DKNat {
 public:
  DKNat(DKTree shape, std::vector<DKLabel> labels);

  /// Builds from (path, label) pairs for the non-root vertices; a label is
  /// written "3,.,1" with '.' for the placeholder.
  static DKNat from_paths(int d, int k, const std::vector<std::pair<std::string, std::string>>& labelled);
  std::vector<std::pair<std::string, std::string>> to_paths() const;

  const DKTree& shape() const { return shape_; }
  int d() const { return shape_.d(); }
  int k() const { return shape_.k(); }
  std::size_t size() const { return shape_.size(); }
  const std::vector<DKLabel>& labels() const { return labels_; }
  const DKLabel& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }

  /// Shape string with labels in front of each vertex, e.g.
  /// "(3,2,2)[{1}(1,.,.)[]{2}(.,1,.)[]]".
  std::string to_string() const;

  friend bool operator==(const DKNat&, const DKNat&) = default;

 private:
  DKTree shape_;
  std::vector<DKLabel> labels_;
};

std::string label_to_string(const DKLabel& label);
DKLabel parse_label(int d, std::string_view text);

/// Conditions "direction", "decreasing", "distinct" and "interval".
std::vector<Violation> validate_dknat(const DKNat& t);
void require_valid(const DKNat& t);

std::vector<int> geometric_size(const DKNat& t);
/// Placeholders filled from the nearest ancestor that sets the coordinate.
std::vector<std::vector<int>> complete_labels(const DKNat& t);

struct DKGeometric {
  int d = 2;
  int k = 1;
  std::vector<int> box;
  std::vector<std::vector<int>> points;  // sorted

  friend bool operator==(const DKGeometric&, const DKGeometric&) = default;
};

DKGeometric dknat_to_geometric(const DKNat& t);
/// Throws InputError naming the first failed condition (1 box, 2 root,
/// 3 cone type, 4 hyperplanes, 5 affine comparability).
DKNat geometric_to_dknat(const DKGeometric& g);

/// Refuses d > 6 or box volume above 10^6.
void check_dk_scale(int d, const std::vector<int>& box);

/// NAT(M) by recursive merge over label subsets; order follows the
/// lexicographic subset choice axis by axis.
std::vector<DKNat> enumerate_dknats_of_shape(const DKTree& shape);

/// The (2,1) tree and labels read as an ordinary NAT, and back.
Nat to_nat(const DKNat& t);
DKNat to_dknat(const Nat& t);

}  // namespace natree
