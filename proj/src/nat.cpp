#include "natree/nat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "natree/arith.hpp"

namespace natree {

namespace {

constexpr int kAbsent = BinaryTree::kAbsent;

// Increasing k-subsets of {1..n} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  if (k < 0 || k > n) return;
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) s[static_cast<std::size_t>(a)] = a + 1;
  while (true) {
    f(s);
    int a = k - 1;
    while (a >= 0 && s[static_cast<std::size_t>(a)] == n - k + a + 1) --a;
    if (a < 0) return;
    ++s[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < k; ++b) s[static_cast<std::size_t>(b)] = s[static_cast<std::size_t>(b - 1)] + 1;
  }
}

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> c;
  std::size_t at = 0;
  for (int v = 1; v <= n; ++v) {
    if (at < s.size() && s[at] == v) ++at;
    else c.push_back(v);
  }
  return c;
}

std::vector<int> standardize_values(const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int v : values)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return out;
}

}  // namespace

Nat::Nat(BinaryTree shape, std::vector<int> labels) : shape_(std::move(shape)), labels_(std::move(labels)) {
  if (labels_.size() != shape_.size())
    throw InputError("label count " + std::to_string(labels_.size()) + " does not match tree size " +
                     std::to_string(shape_.size()));
}

Nat Nat::from_shape_kind(BinaryTree::Kind kind) {
  switch (kind) {
    case BinaryTree::Kind::EmptyLeft: return Nat(BinaryTree::empty_left(), {});
    case BinaryTree::Kind::EmptyRight: return Nat(BinaryTree::empty_right(), {});
    case BinaryTree::Kind::Node: return Nat(BinaryTree::leaf(), {0});
  }
  return Nat();
}

int Nat::w_l() const {
  if (shape_.kind() == BinaryTree::Kind::EmptyLeft) return 0;
  if (shape_.kind() == BinaryTree::Kind::EmptyRight) return 1;
  return lv_rv(shape_).first + 1;
}

int Nat::w_r() const {
  if (shape_.kind() == BinaryTree::Kind::EmptyLeft) return 1;
  if (shape_.kind() == BinaryTree::Kind::EmptyRight) return 0;
  return lv_rv(shape_).second + 1;
}

std::string Nat::to_string() const {
  if (empty()) return shape_.to_string();
  std::string out;
  std::function<void(int)> rec = [&](int v) {
    if (v != 0) out += (shape_.is_left_child(v) ? 'r' : 'b') + std::to_string(label(v));
    out.push_back('(');
    if (shape_.vertex(v).left != kAbsent) rec(shape_.vertex(v).left);
    out.push_back(',');
    if (shape_.vertex(v).right != kAbsent) rec(shape_.vertex(v).right);
    out.push_back(')');
  };
  rec(0);
  return out;
}

Nat Nat::parse(std::string_view text) {
  if (text == "empty_left") return from_shape_kind(BinaryTree::Kind::EmptyLeft);
  if (text == "empty_right") return from_shape_kind(BinaryTree::Kind::EmptyRight);
  auto fail = [&]() -> void { throw InputError("cannot parse NAT: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  std::vector<std::pair<int, int>> links;
  std::vector<int> raw;
  std::function<int(char)> rec = [&](char side) -> int {
    int lab = 0;
    if (side != 0) {
      if (pos >= text.size() || text[pos] != side) fail();
      ++pos;
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start || pos - start > 9) fail();
      lab = std::stoi(std::string(text.substr(start, pos - start)));
    }
    if (pos >= text.size() || text[pos] != '(') fail();
    ++pos;
    const int me = static_cast<int>(links.size());
    links.emplace_back(kAbsent, kAbsent);
    raw.push_back(lab);
    if (pos < text.size() && text[pos] != ',') {
      const int l = rec('r');
      links[static_cast<std::size_t>(me)].first = l;
    }
    if (pos >= text.size() || text[pos] != ',') fail();
    ++pos;
    if (pos < text.size() && text[pos] != ')') {
      const int r = rec('b');
      links[static_cast<std::size_t>(me)].second = r;
    }
    if (pos >= text.size() || text[pos] != ')') fail();
    ++pos;
    return me;
  };
  rec(0);
  if (pos != text.size()) fail();
  std::vector<int> order;
  BinaryTree shape = BinaryTree::from_links(links, 0, &order);
  std::vector<int> labels(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) labels[static_cast<std::size_t>(order[i])] = raw[i];
  return Nat(std::move(shape), std::move(labels));
}

Nat Nat::from_paths(const std::vector<std::pair<std::string, int>>& labelled) {
  std::map<std::string, int> by_path{{"", 0}};
  for (const auto& [path, lab] : labelled) {
    if (path.empty()) throw InputError("the root has no stored label");
    if (path.find_first_not_of("LR") != std::string::npos) throw InputError("bad vertex path '" + path + "'");
    if (!by_path.emplace(path, lab).second) throw InputError("repeated vertex path '" + path + "'");
  }
  std::vector<std::string> paths;
  for (const auto& [path, lab] : by_path) paths.push_back(path);
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < paths.size(); ++i) id[paths[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> links(paths.size(), {kAbsent, kAbsent});
  for (std::size_t i = 1; i < paths.size(); ++i) {
    const std::string parent = paths[i].substr(0, paths[i].size() - 1);
    auto it = id.find(parent);
    if (it == id.end()) throw InputError("vertex '" + paths[i] + "' has no parent vertex");
    auto& link = links[static_cast<std::size_t>(it->second)];
    (paths[i].back() == 'L' ? link.first : link.second) = static_cast<int>(i);
  }
  std::vector<int> order;
  BinaryTree shape = BinaryTree::from_links(links, id.at(""), &order);
  std::vector<int> labels(paths.size(), 0);
  for (std::size_t i = 0; i < paths.size(); ++i) labels[static_cast<std::size_t>(order[i])] = by_path.at(paths[i]);
  return Nat(std::move(shape), std::move(labels));
}

std::vector<std::pair<std::string, int>> Nat::to_paths() const {
  std::vector<std::pair<std::string, int>> out;
  for (int v = 1; v < static_cast<int>(size()); ++v) out.emplace_back(shape_.path(v), label(v));
  return out;
}

std::vector<Violation> validate_nat(const BinaryTree& shape, const std::vector<int>& labels) {
  std::vector<Violation> out;
  if (labels.size() != shape.size()) {
    out.push_back({"label-count", {}, "label count does not match tree size"});
    return out;
  }
  if (shape.empty()) return out;
  const auto [nl, nr] = lv_rv(shape);
  if (labels[0] != 0) out.push_back({"root-label", {0}, "the root carries no stored label"});
  // Label sets.
  for (int side = 0; side < 2; ++side) {
    const bool left = side == 0;
    const int count = left ? nl : nr;
    std::map<int, std::vector<int>> seen;
    for (int v = 1; v < static_cast<int>(shape.size()); ++v)
      if (shape.is_left_child(v) == left) seen[labels[static_cast<std::size_t>(v)]].push_back(v);
    const std::string cond = left ? "left-labels" : "right-labels";
    for (const auto& [lab, vs] : seen) {
      if (lab < 1 || lab > count)
        out.push_back({cond, vs, "label " + std::to_string(lab) + " outside 1.." + std::to_string(count)});
      else if (vs.size() > 1)
        out.push_back({cond, vs, "label " + std::to_string(lab) + " used more than once"});
    }
  }
  // Ancestor-decreasing, checked against the nearest same-side ancestor.
  for (int v = 1; v < static_cast<int>(shape.size()); ++v) {
    const bool left = shape.is_left_child(v);
    int u = shape.vertex(v).parent;
    while (u != kAbsent && u != 0 && shape.is_left_child(u) != left) u = shape.vertex(u).parent;
    if (u == kAbsent || u == 0) continue;
    if (labels[static_cast<std::size_t>(u)] <= labels[static_cast<std::size_t>(v)])
      out.push_back({left ? "left-decreasing" : "right-decreasing", {u, v},
                     "ancestor " + shape.path(u) + " has label " + std::to_string(labels[static_cast<std::size_t>(u)]) +
                         " not greater than descendant " + shape.path(v) + " with " +
                         std::to_string(labels[static_cast<std::size_t>(v)])});
  }
  return out;
}

void require_valid(const Nat& t) {
  const auto violations = validate_nat(t);
  if (violations.empty()) return;
  std::string msg = "invalid NAT:";
  for (const auto& v : violations) msg += " [" + v.condition + "] " + v.message + ";";
  throw InputError(msg);
}

Nat merge(const Nat& tl, const Nat& tr, const std::vector<int>& left_to_l,
          const std::vector<int>& right_to_l) {
  if (tl.shape().kind() == BinaryTree::Kind::EmptyRight || tr.shape().kind() == BinaryTree::Kind::EmptyLeft)
    throw InputError("merge expects a left part of shape EmptyLeft or non-empty, and a right part of shape "
                     "EmptyRight or non-empty");
  const int nl = tl.w_l() + tr.w_l() - 1;
  const int nr = tl.w_r() + tr.w_r() - 1;
  if (static_cast<int>(left_to_l.size()) != tl.w_l() || static_cast<int>(right_to_l.size()) != tl.w_r() - 1)
    throw InputError("merge: label subset sizes do not match the left part");
  for (const auto* s : {&left_to_l, &right_to_l}) {
    const int n = s == &left_to_l ? nl : nr;
    for (std::size_t a = 0; a < s->size(); ++a)
      if ((*s)[a] < 1 || (*s)[a] > n || (a > 0 && (*s)[a] <= (*s)[a - 1]))
        throw InputError("merge: label subsets must be increasing and in range");
  }
  const std::vector<int> left_to_r = complement(nl, left_to_l);
  const std::vector<int> right_to_r = complement(nr, right_to_l);
  BinaryTree shape = BinaryTree::node(tl.empty() ? std::nullopt : std::optional(tl.shape()),
                                      tr.empty() ? std::nullopt : std::optional(tr.shape()));
  std::vector<int> labels{0};
  auto relabel = [&](const Nat& part, const std::vector<int>& lefts, const std::vector<int>& rights,
                     bool part_is_left) {
    for (int v = 0; v < static_cast<int>(part.size()); ++v) {
      if (v == 0) labels.push_back(part_is_left ? lefts.back() : rights.back());
      else if (part.shape().is_left_child(v)) labels.push_back(lefts[static_cast<std::size_t>(part.label(v) - 1)]);
      else labels.push_back(rights[static_cast<std::size_t>(part.label(v) - 1)]);
    }
  };
  relabel(tl, left_to_l, right_to_l, true);
  relabel(tr, left_to_r, right_to_r, false);
  return Nat(std::move(shape), std::move(labels));
}

std::pair<Nat, Nat> split(const Nat& t) {
  if (t.empty()) throw InputError("cannot split an empty NAT");
  auto part = [&](int sub, BinaryTree::Kind empty_kind) {
    if (sub == kAbsent) return Nat::from_shape_kind(empty_kind);
    BinaryTree shape = t.shape().subtree(sub);
    const std::size_t n = shape.size();
    std::vector<int> lefts, rights;
    for (std::size_t v = 1; v < n; ++v)
      (shape.vertices()[v].is_left_child ? lefts : rights).push_back(t.label(sub + static_cast<int>(v)));
    lefts = standardize_values(lefts);
    rights = standardize_values(rights);
    std::vector<int> labels{0};
    std::size_t il = 0, ir = 0;
    for (std::size_t v = 1; v < n; ++v)
      labels.push_back(shape.vertices()[v].is_left_child ? lefts[il++] : rights[ir++]);
    return Nat(std::move(shape), std::move(labels));
  };
  return {part(t.shape().vertex(0).left, BinaryTree::Kind::EmptyLeft),
          part(t.shape().vertex(0).right, BinaryTree::Kind::EmptyRight)};
}

std::vector<Nat> enumerate_nats_of_shape(const BinaryTree& shape) {
  if (shape.empty()) return {Nat::from_shape_kind(shape.kind())};
  const std::vector<Nat> lefts = enumerate_nats_of_shape(shape.left_tree());
  const std::vector<Nat> rights = enumerate_nats_of_shape(shape.right_tree());
  const auto [nl, nr] = lv_rv(shape);
  const int a = lefts.front().w_l();
  const int b = lefts.front().w_r() - 1;
  std::vector<Nat> out;
  for (const Nat& tl : lefts)
    for (const Nat& tr : rights)
      for_each_subset(nl, a, [&](const std::vector<int>& sl) {
        for_each_subset(nr, b, [&](const std::vector<int>& sr) { out.push_back(merge(tl, tr, sl, sr)); });
      });
  return out;
}

std::vector<BinaryTree> shapes_of_size(int w_l, int w_r) {
  if (w_l < 1 || w_r < 1) throw InputError("geometric size must be at least 1x1");
  std::vector<BinaryTree> out;
  for (auto& b : enumerate_binary_trees(w_l + w_r - 1))
    if (lv_rv(b) == std::pair(w_l - 1, w_r - 1)) out.push_back(std::move(b));
  return out;
}

std::vector<Nat> enumerate_nats_by_size(int w_l, int w_r) {
  std::vector<Nat> out;
  for (const auto& b : shapes_of_size(w_l, w_r)) {
    auto part = enumerate_nats_of_shape(b);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<std::pair<int, int>> vertex_points(const Nat& t) {
  require_valid(t);
  const BinaryTree& s = t.shape();
  const int wl = t.w_l(), wr = t.w_r();
  std::vector<int> rowlab(s.size()), collab(s.size());
  std::vector<std::pair<int, int>> pts(s.size());
  for (int v = 0; v < static_cast<int>(s.size()); ++v) {
    const auto& x = s.vertex(v);
    if (x.parent == kAbsent) {
      rowlab[0] = wl;
      collab[0] = wr;
    } else if (x.is_left_child) {
      rowlab[static_cast<std::size_t>(v)] = t.label(v);
      collab[static_cast<std::size_t>(v)] = collab[static_cast<std::size_t>(x.parent)];
    } else {
      rowlab[static_cast<std::size_t>(v)] = rowlab[static_cast<std::size_t>(x.parent)];
      collab[static_cast<std::size_t>(v)] = t.label(v);
    }
    pts[static_cast<std::size_t>(v)] = {wl - rowlab[static_cast<std::size_t>(v)], wr - collab[static_cast<std::size_t>(v)]};
  }
  return pts;
}

GeometricNat nat_to_geometric(const Nat& t) {
  if (t.empty()) throw InputError("the empty NATs have no point set");
  GeometricNat g;
  g.w_l = t.w_l();
  g.w_r = t.w_r();
  g.points = vertex_points(t);
  std::sort(g.points.begin(), g.points.end());
  return g;
}

Nat geometric_to_nat(const GeometricNat& g) {
  std::set<std::pair<int, int>> pts;
  for (const auto& p : g.points) {
    if (p.first < 0 || p.second < 0) throw InputError("geometric NAT: negative coordinate");
    if (!pts.insert(p).second) throw InputError("geometric NAT: repeated point");
  }
  if (!pts.count({0, 0})) throw InputError("geometric NAT violates condition 1 (root): (0,0) missing");
  int rows = 0, cols = 0;
  for (const auto& [x, y] : pts) {
    rows = std::max(rows, x + 1);
    cols = std::max(cols, y + 1);
  }
  std::vector<bool> row_used(static_cast<std::size_t>(rows)), col_used(static_cast<std::size_t>(cols));
  for (const auto& [x, y] : pts) {
    row_used[static_cast<std::size_t>(x)] = true;
    col_used[static_cast<std::size_t>(y)] = true;
  }
  for (int x = 0; x < rows; ++x)
    if (!row_used[static_cast<std::size_t>(x)])
      throw InputError("geometric NAT violates condition 3 (gap): empty row " + std::to_string(x));
  for (int y = 0; y < cols; ++y)
    if (!col_used[static_cast<std::size_t>(y)])
      throw InputError("geometric NAT violates condition 3 (gap): empty column " + std::to_string(y));
  if ((g.w_l != 0 || g.w_r != 0) && (g.w_l != rows || g.w_r != cols))
    throw InputError("geometric NAT: dimensions do not match the point set");

  const std::vector<std::pair<int, int>> list(pts.begin(), pts.end());
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> links(list.size(), {kAbsent, kAbsent});
  std::vector<int> is_left(list.size(), 0);
  // Nearest point above in each column / to the left in each row.
  std::map<int, int> last_in_col, last_in_row;
  std::vector<int> above(list.size(), kAbsent), before(list.size(), kAbsent);
  for (std::size_t i = 0; i < list.size(); ++i) {  // sorted by (row, col)
    const auto [x, y] = list[i];
    if (auto it = last_in_col.find(y); it != last_in_col.end()) above[i] = it->second;
    if (auto it = last_in_row.find(x); it != last_in_row.end()) before[i] = it->second;
    last_in_col[y] = static_cast<int>(i);
    last_in_row[x] = static_cast<int>(i);
  }
  const int root = index.at({0, 0});
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (static_cast<int>(i) == root) continue;
    const auto [x, y] = list[i];
    const std::string where = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    if (above[i] != kAbsent && before[i] != kAbsent)
      throw InputError("geometric NAT violates condition 2 (pattern): point " + where +
                       " has points both above and to its left");
    if (above[i] == kAbsent && before[i] == kAbsent)
      throw InputError("geometric NAT violates condition 2 (parent): point " + where +
                       " has no point above or to its left");
    if (above[i] != kAbsent) {
      links[static_cast<std::size_t>(above[i])].first = static_cast<int>(i);
      is_left[i] = 1;
    } else {
      links[static_cast<std::size_t>(before[i])].second = static_cast<int>(i);
    }
  }
  std::vector<int> order;
  BinaryTree shape = BinaryTree::from_links(links, root, &order);
  std::vector<int> labels(list.size(), 0);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (static_cast<int>(i) == root) continue;
    labels[static_cast<std::size_t>(order[i])] = is_left[i] ? rows - list[i].first : cols - list[i].second;
  }
  Nat t(std::move(shape), std::move(labels));
  require_valid(t);
  return t;
}

NatStats nat_stats(const Nat& t) {
  if (t.empty()) throw InputError("statistics of an empty NAT");
  require_valid(t);
  const BranchStats b = branch_stats(t.shape());
  return {b.lo, b.ro, hook_count(t.shape()), t.w_l(), t.w_r()};
}

}  // namespace natree
