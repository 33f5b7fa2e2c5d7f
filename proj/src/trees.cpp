#include "natree/trees.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "natree/arith.hpp"

namespace natree {

namespace {

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
  throw InputError("cannot parse " + std::string(what) + ": '" + std::string(text) + "'");
}

}  // namespace

// ---------------------------------------------------------------- BinaryTree

BinaryTree BinaryTree::empty_left() { return BinaryTree(); }

BinaryTree BinaryTree::empty_right() {
  BinaryTree t;
  t.kind_ = Kind::EmptyRight;
  return t;
}

BinaryTree BinaryTree::leaf() {
  BinaryTree t;
  t.kind_ = Kind::Node;
  t.vertices_.push_back(Vertex{});
  return t;
}

void BinaryTree::append(const BinaryTree& sub, int parent, bool as_left) {
  const int offset = static_cast<int>(vertices_.size());
  for (const Vertex& v : sub.vertices_) {
    Vertex c = v;
    if (c.left != kAbsent) c.left += offset;
    if (c.right != kAbsent) c.right += offset;
    if (c.parent != kAbsent) c.parent += offset;
    vertices_.push_back(c);
  }
  Vertex& root = vertices_[static_cast<std::size_t>(offset)];
  root.parent = parent;
  root.is_left_child = as_left;
  Vertex& p = vertices_[static_cast<std::size_t>(parent)];
  (as_left ? p.left : p.right) = offset;
}

BinaryTree BinaryTree::node(const std::optional<BinaryTree>& left,
                            const std::optional<BinaryTree>& right) {
  BinaryTree t = leaf();
  if (left && !left->empty()) t.append(*left, 0, true);
  if (right && !right->empty()) t.append(*right, 0, false);
  return t;
}

BinaryTree BinaryTree::from_links(const std::vector<std::pair<int, int>>& links, int root,
                                  std::vector<int>* preorder_of) {
  const int n = static_cast<int>(links.size());
  if (root < 0 || root >= n) throw InputError("tree root out of range");
  std::vector<int> order(static_cast<std::size_t>(n), kAbsent);
  BinaryTree t;
  t.kind_ = Kind::Node;
  // Iterative preorder; the stack holds (input vertex, parent index, is_left).
  struct Item { int v; int parent; bool left; };
  std::vector<Item> stack{{root, kAbsent, false}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.v < 0 || it.v >= n) throw InputError("tree link out of range");
    if (order[static_cast<std::size_t>(it.v)] != kAbsent) throw InputError("tree links contain a cycle");
    const int idx = static_cast<int>(t.vertices_.size());
    order[static_cast<std::size_t>(it.v)] = idx;
    Vertex vx;
    vx.parent = it.parent;
    vx.is_left_child = it.left;
    t.vertices_.push_back(vx);
    if (it.parent != kAbsent) {
      Vertex& p = t.vertices_[static_cast<std::size_t>(it.parent)];
      (it.left ? p.left : p.right) = idx;
    }
    const auto [l, r] = links[static_cast<std::size_t>(it.v)];
    if (r != kAbsent) stack.push_back({r, idx, false});
    if (l != kAbsent) stack.push_back({l, idx, true});
  }
  if (preorder_of) *preorder_of = std::move(order);
  return t;
}

bool BinaryTree::is_left_child(int v) const {
  const Vertex& x = vertex(v);
  return x.parent != kAbsent && x.is_left_child;
}

bool BinaryTree::is_right_child(int v) const {
  const Vertex& x = vertex(v);
  return x.parent != kAbsent && !x.is_left_child;
}

std::size_t BinaryTree::subtree_size(int v) const {
  // Preorder: the subtree ends where the next vertex outside it begins.
  std::size_t count = 0;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++count;
    const Vertex& x = vertex(u);
    if (x.left != kAbsent) stack.push_back(x.left);
    if (x.right != kAbsent) stack.push_back(x.right);
  }
  return count;
}

BinaryTree BinaryTree::subtree(int v) const {
  const std::size_t n = subtree_size(v);
  BinaryTree t;
  t.kind_ = Kind::Node;
  t.vertices_.assign(vertices_.begin() + v, vertices_.begin() + v + static_cast<long>(n));
  for (Vertex& x : t.vertices_) {
    if (x.left != kAbsent) x.left -= v;
    if (x.right != kAbsent) x.right -= v;
    if (x.parent != kAbsent) x.parent -= v;
  }
  t.vertices_[0].parent = kAbsent;
  t.vertices_[0].is_left_child = false;
  return t;
}

BinaryTree BinaryTree::left_tree() const {
  if (empty() || vertices_[0].left == kAbsent) return empty_left();
  return subtree(vertices_[0].left);
}

BinaryTree BinaryTree::right_tree() const {
  if (empty() || vertices_[0].right == kAbsent) return empty_right();
  return subtree(vertices_[0].right);
}

BinaryTree BinaryTree::mirror() const {
  if (kind_ == Kind::EmptyLeft) return empty_right();
  if (kind_ == Kind::EmptyRight) return empty_left();
  std::vector<std::pair<int, int>> links;
  for (const Vertex& x : vertices_) links.emplace_back(x.right, x.left);
  return from_links(links, 0);
}

std::string BinaryTree::path(int v) const {
  std::string p;
  for (int u = v; vertex(u).parent != kAbsent; u = vertex(u).parent)
    p.push_back(vertex(u).is_left_child ? 'L' : 'R');
  std::reverse(p.begin(), p.end());
  return p;
}

int BinaryTree::find(std::string_view path) const {
  if (empty()) return kAbsent;
  int v = 0;
  for (char c : path) {
    if (c == 'L') v = vertex(v).left;
    else if (c == 'R') v = vertex(v).right;
    else throw InputError("bad path character in '" + std::string(path) + "'");
    if (v == kAbsent) return kAbsent;
  }
  return v;
}

std::string BinaryTree::to_string() const {
  if (kind_ == Kind::EmptyLeft) return "empty_left";
  if (kind_ == Kind::EmptyRight) return "empty_right";
  std::string out;
  std::function<void(int)> rec = [&](int v) {
    out.push_back('(');
    if (vertex(v).left != kAbsent) rec(vertex(v).left);
    out.push_back(',');
    if (vertex(v).right != kAbsent) rec(vertex(v).right);
    out.push_back(')');
  };
  rec(0);
  return out;
}

BinaryTree BinaryTree::parse(std::string_view text) {
  if (text == "empty_left") return empty_left();
  if (text == "empty_right") return empty_right();
  std::size_t pos = 0;
  std::vector<std::pair<int, int>> links;
  std::function<int()> rec = [&]() -> int {
    if (pos >= text.size() || text[pos] != '(') parse_fail("binary tree", text);
    ++pos;
    const int me = static_cast<int>(links.size());
    links.emplace_back(kAbsent, kAbsent);
    if (pos < text.size() && text[pos] == '(') {
      const int l = rec();
      links[static_cast<std::size_t>(me)].first = l;
    }
    if (pos >= text.size() || text[pos] != ',') parse_fail("binary tree", text);
    ++pos;
    if (pos < text.size() && text[pos] == '(') {
      const int r = rec();
      links[static_cast<std::size_t>(me)].second = r;
    }
    if (pos >= text.size() || text[pos] != ')') parse_fail("binary tree", text);
    ++pos;
    return me;
  };
  rec();
  if (pos != text.size()) parse_fail("binary tree", text);
  return from_links(links, 0);
}

std::vector<BinaryTree> enumerate_binary_trees(int n) {
  if (n < 0) throw InputError("tree size must be non-negative");
  if (n == 0) return {BinaryTree::empty_left(), BinaryTree::empty_right()};
  // by_size[m] holds the non-empty shapes of size m; index 0 means "absent".
  std::vector<std::vector<std::optional<BinaryTree>>> by_size(static_cast<std::size_t>(n));
  by_size[0].push_back(std::nullopt);
  for (int m = 1; m <= n; ++m) {
    std::vector<std::optional<BinaryTree>> level;
    for (int l = 0; l < m; ++l)
      for (const auto& lt : by_size[static_cast<std::size_t>(l)])
        for (const auto& rt : by_size[static_cast<std::size_t>(m - 1 - l)])
          level.emplace_back(BinaryTree::node(lt, rt));
    if (m == n) {
      std::vector<BinaryTree> out;
      out.reserve(level.size());
      for (auto& t : level) out.push_back(std::move(*t));
      return out;
    }
    by_size[static_cast<std::size_t>(m)] = std::move(level);
  }
  return {};
}

std::pair<int, int> lv_rv(const BinaryTree& tree) {
  if (tree.kind() == BinaryTree::Kind::EmptyLeft) return {-1, 0};
  if (tree.kind() == BinaryTree::Kind::EmptyRight) return {0, -1};
  int l = 0, r = 0;
  for (std::size_t v = 1; v < tree.size(); ++v) (tree.vertices()[v].is_left_child ? l : r)++;
  return {l, r};
}

BranchStats branch_stats(const BinaryTree& tree) {
  if (tree.empty()) throw InputError("branch statistics of an empty tree");
  BranchStats s;
  for (int v = tree.vertex(0).left; v != BinaryTree::kAbsent; v = tree.vertex(v).left) ++s.lo;
  for (int v = tree.vertex(0).right; v != BinaryTree::kAbsent; v = tree.vertex(v).right) ++s.ro;
  return s;
}

HookPartition hook_partition(const BinaryTree& tree) {
  if (tree.empty()) throw InputError("no hooks in empty tree");
  HookPartition hp;
  std::vector<int> pending{0};
  while (!pending.empty()) {
    const int root = pending.front();
    pending.erase(pending.begin());
    std::vector<int> block{root};
    for (int v = tree.vertex(root).left; v != BinaryTree::kAbsent; v = tree.vertex(v).left) {
      block.push_back(v);
      if (tree.vertex(v).right != BinaryTree::kAbsent) pending.push_back(tree.vertex(v).right);
    }
    for (int v = tree.vertex(root).right; v != BinaryTree::kAbsent; v = tree.vertex(v).right) {
      block.push_back(v);
      if (tree.vertex(v).left != BinaryTree::kAbsent) pending.push_back(tree.vertex(v).left);
    }
    hp.roots.push_back(root);
    hp.blocks.push_back(std::move(block));
  }
  return hp;
}

int hook_count(const BinaryTree& tree) { return static_cast<int>(hook_partition(tree).count()); }

std::vector<SubtreeCount> subtree_counts(const BinaryTree& tree) {
  std::vector<SubtreeCount> out;
  if (tree.empty()) return out;
  const int n = static_cast<int>(tree.size());
  std::vector<int> el(static_cast<std::size_t>(n), 0), er(static_cast<std::size_t>(n), 0);
  // Reverse preorder visits children before parents.
  for (int v = n - 1; v >= 0; --v) {
    const auto& x = tree.vertex(v);
    if (x.parent != BinaryTree::kAbsent) {
      (x.is_left_child ? el : er)[static_cast<std::size_t>(v)] += 1;
      el[static_cast<std::size_t>(x.parent)] += el[static_cast<std::size_t>(v)];
      er[static_cast<std::size_t>(x.parent)] += er[static_cast<std::size_t>(v)];
    }
  }
  for (int v = 1; v < n; ++v)
    out.push_back({v, el[static_cast<std::size_t>(v)], er[static_cast<std::size_t>(v)]});
  return out;
}

// --------------------------------------------------------------- OrderedTree

std::size_t OrderedTree::vertex_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.vertex_count();
  return n;
}

std::string OrderedTree::to_string() const {
  std::string s = "(";
  for (const auto& c : children) s += c.to_string();
  s += ')';
  return s;
}

OrderedTree OrderedTree::parse(std::string_view text) {
  std::size_t pos = 0;
  std::function<OrderedTree()> rec = [&]() {
    if (pos >= text.size() || text[pos] != '(') parse_fail("ordered tree", text);
    ++pos;
    OrderedTree t;
    while (pos < text.size() && text[pos] == '(') t.children.push_back(rec());
    if (pos >= text.size() || text[pos] != ')') parse_fail("ordered tree", text);
    ++pos;
    return t;
  };
  OrderedTree t = rec();
  if (pos != text.size()) parse_fail("ordered tree", text);
  return t;
}

int childleaf_count(const OrderedTree& tree) {
  int n = 0;
  bool has_leaf = false;
  for (const auto& c : tree.children) {
    if (c.is_leaf()) has_leaf = true;
    n += childleaf_count(c);
  }
  return n + (has_leaf ? 1 : 0);
}

std::vector<OrderedTree> enumerate_ordered_trees(int edges) {
  if (edges < 0) throw InputError("edge count must be non-negative");
  // Forests of m vertices: first tree of size s (1..m), then the rest.
  std::vector<std::vector<std::vector<OrderedTree>>> forests(static_cast<std::size_t>(edges) + 1);
  forests[0] = {{}};
  std::vector<std::vector<OrderedTree>> trees(static_cast<std::size_t>(edges) + 2);
  for (int m = 1; m <= edges; ++m) {
    // trees of size s <= m need forests of size s-1 < m, already built.
    for (int s = 1; s <= m; ++s) {
      if (trees[static_cast<std::size_t>(s)].empty())
        for (const auto& f : forests[static_cast<std::size_t>(s - 1)])
          trees[static_cast<std::size_t>(s)].push_back(OrderedTree{f});
    }
    auto& out = forests[static_cast<std::size_t>(m)];
    for (int s = 1; s <= m; ++s)
      for (const auto& first : trees[static_cast<std::size_t>(s)])
        for (const auto& rest : forests[static_cast<std::size_t>(m - s)]) {
          std::vector<OrderedTree> f{first};
          f.insert(f.end(), rest.begin(), rest.end());
          out.push_back(std::move(f));
        }
  }
  std::vector<OrderedTree> result;
  for (const auto& f : forests[static_cast<std::size_t>(edges)]) result.push_back(OrderedTree{f});
  return result;
}

// ----------------------------------------------------------------- Direction

void check_dk(int d, int k) {
  if (d < 1 || d > 31 || k < 1 || k > d)
    throw InputError("invalid (d,k) = (" + std::to_string(d) + "," + std::to_string(k) + ")");
}

Direction::Direction(int d, const std::vector<int>& members) : d_(d) {
  if (d < 1 || d > 31) throw InputError("invalid dimension " + std::to_string(d));
  if (members.empty()) throw InputError("a direction needs at least one coordinate");
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a] < 1 || members[a] > d) throw InputError("direction coordinate out of range");
    if (a > 0 && members[a] <= members[a - 1]) throw InputError("direction coordinates must increase");
    mask_ |= 1u << (members[a] - 1);
  }
}

Direction Direction::from_mask(int d, std::uint32_t mask) {
  if (d < 1 || d > 31 || mask == 0 || (mask >> d) != 0) throw InputError("invalid direction mask");
  Direction dir;
  dir.d_ = d;
  dir.mask_ = mask;
  return dir;
}

Direction Direction::parse(int d, std::string_view text) {
  std::string_view s = text;
  if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  std::vector<int> members;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    const std::string part(s.substr(pos, end - pos));
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      parse_fail("direction", text);
    members.push_back(std::stoi(part));
    pos = end + 1;
  }
  return Direction(d, members);
}

int Direction::k() const { return std::popcount(mask_); }

std::vector<int> Direction::members() const {
  std::vector<int> m;
  for (int i = 1; i <= d_; ++i)
    if (contains(i)) m.push_back(i);
  return m;
}

std::string Direction::to_string() const {
  std::string s;
  for (int i : members()) {
    if (!s.empty()) s += ',';
    s += std::to_string(i);
  }
  return s;
}

std::strong_ordering operator<=>(const Direction& a, const Direction& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  const auto ma = a.members(), mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::vector<Direction> all_directions(int d, int k) {
  check_dk(d, k);
  std::vector<Direction> out;
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask)
    if (std::popcount(mask) == k) out.push_back(Direction::from_mask(d, mask));
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------------------- DKTree

DKTree DKTree::empty(int d, int k, const Direction& direction) {
  check_dk(d, k);
  if (direction.d() != d || direction.k() != k) throw InputError("direction does not match (d,k)");
  DKTree t;
  t.d_ = d;
  t.k_ = k;
  t.empty_direction_ = direction;
  return t;
}

DKTree DKTree::leaf(int d, int k) {
  check_dk(d, k);
  DKTree t;
  t.d_ = d;
  t.k_ = k;
  t.vertices_.push_back(Vertex{});
  return t;
}

void DKTree::append(const DKTree& sub, int parent, const Direction& dir) {
  const int offset = static_cast<int>(vertices_.size());
  for (const Vertex& v : sub.vertices_) {
    Vertex c = v;
    if (c.parent != -1) c.parent += offset;
    for (auto& ch : c.children) ch.second += offset;
    vertices_.push_back(std::move(c));
  }
  vertices_[static_cast<std::size_t>(offset)].parent = parent;
  vertices_[static_cast<std::size_t>(offset)].direction = dir;
  vertices_[static_cast<std::size_t>(parent)].children.emplace_back(dir, offset);
}

DKTree DKTree::node(int d, int k, std::vector<std::pair<Direction, DKTree>> children) {
  DKTree t = leaf(d, k);
  std::sort(children.begin(), children.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t a = 0; a < children.size(); ++a) {
    const auto& [dir, sub] = children[a];
    if (dir.d() != d || dir.k() != k) throw InputError("direction does not match (d,k)");
    if (a > 0 && children[a - 1].first == dir) throw InputError("repeated child direction");
    if (sub.d() != d || sub.k() != k) throw InputError("subtree (d,k) mismatch");
    if (sub.empty()) continue;
    t.append(sub, 0, dir);
  }
  return t;
}

int DKTree::child(int v, const Direction& direction) const {
  for (const auto& [dir, c] : vertex(v).children)
    if (dir == direction) return c;
  return -1;
}

DKTree DKTree::subtree(int v) const {
  std::vector<std::pair<Direction, DKTree>> kids;
  for (const auto& [dir, c] : vertex(v).children) kids.emplace_back(dir, subtree(c));
  return node(d_, k_, std::move(kids));
}

std::string DKTree::path(int v) const {
  std::vector<std::string> parts;
  for (int u = v; vertex(u).parent != -1; u = vertex(u).parent)
    parts.push_back(vertex(u).direction->to_string());
  std::string p;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!p.empty()) p += '/';
    p += *it;
  }
  return p;
}

int DKTree::find(std::string_view path) const {
  if (empty()) return -1;
  int v = 0;
  std::size_t pos = 0;
  while (pos < path.size()) {
    std::size_t end = path.find('/', pos);
    if (end == std::string_view::npos) end = path.size();
    v = child(v, Direction::parse(d_, path.substr(pos, end - pos)));
    if (v == -1) return -1;
    pos = end + 1;
  }
  return v;
}

std::string DKTree::to_string() const {
  if (empty()) return "empty{" + empty_direction_->to_string() + "}";
  std::string out;
  std::function<void(int)> rec = [&](int v) {
    out.push_back('[');
    for (const auto& [dir, c] : vertex(v).children) {
      out += '{' + dir.to_string() + '}';
      rec(c);
    }
    out.push_back(']');
  };
  rec(0);
  return out;
}

DKTree DKTree::parse(int d, int k, std::string_view text) {
  check_dk(d, k);
  if (text.starts_with("empty{") && text.ends_with("}"))
    return empty(d, k, Direction::parse(d, text.substr(6, text.size() - 7)));
  std::size_t pos = 0;
  std::function<DKTree()> rec = [&]() {
    if (pos >= text.size() || text[pos] != '[') parse_fail("(d,k) tree", text);
    ++pos;
    std::vector<std::pair<Direction, DKTree>> kids;
    while (pos < text.size() && text[pos] == '{') {
      const std::size_t close = text.find('}', pos);
      if (close == std::string_view::npos) parse_fail("(d,k) tree", text);
      Direction dir = Direction::parse(d, text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      kids.emplace_back(dir, rec());
    }
    if (pos >= text.size() || text[pos] != ']') parse_fail("(d,k) tree", text);
    ++pos;
    return node(d, k, std::move(kids));
  };
  DKTree t = rec();
  if (pos != text.size()) parse_fail("(d,k) tree", text);
  return t;
}

bool operator==(const DKTree& a, const DKTree& b) {
  return a.d_ == b.d_ && a.k_ == b.k_ && a.empty_direction_ == b.empty_direction_ &&
         a.to_string() == b.to_string();
}

std::vector<DKTree> enumerate_dk_trees(int d, int k, int n) {
  check_dk(d, k);
  if (n < 0) throw InputError("tree size must be non-negative");
  const auto dirs = all_directions(d, k);
  if (n == 0) {
    std::vector<DKTree> out;
    for (const auto& dir : dirs) out.push_back(DKTree::empty(d, k, dir));
    return out;
  }
  // by_size[m] holds the non-empty shapes; size 0 is represented by one
  // placeholder meaning "no child".
  std::vector<std::vector<std::optional<DKTree>>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[0].emplace_back();
  const std::size_t nd = dirs.size();
  for (int m = 1; m <= n; ++m) {
    auto& level = by_size[static_cast<std::size_t>(m)];
    // Size vectors over the directions, lexicographic, summing to m-1.
    std::vector<int> sizes(nd, 0);
    std::function<void(std::size_t, int)> over_sizes = [&](std::size_t at, int left) {
      if (at + 1 == nd) {
        sizes[at] = left;
        // Cartesian product of the subtree lists.
        std::vector<std::size_t> idx(nd, 0);
        while (true) {
          std::vector<std::pair<Direction, DKTree>> kids;
          for (std::size_t a = 0; a < nd; ++a) {
            const auto& opt = by_size[static_cast<std::size_t>(sizes[a])][idx[a]];
            if (opt) kids.emplace_back(dirs[a], *opt);
          }
          level.emplace_back(DKTree::node(d, k, std::move(kids)));
          std::size_t a = nd;
          while (a > 0) {
            --a;
            if (++idx[a] < by_size[static_cast<std::size_t>(sizes[a])].size()) break;
            idx[a] = 0;
            if (a == 0) return;
          }
          if (nd == 0) return;
        }
      }
      for (int s = 0; s <= left; ++s) {
        sizes[at] = s;
        over_sizes(at + 1, left - s);
      }
    };
    over_sizes(0, m - 1);
  }
  std::vector<DKTree> out;
  for (auto& t : by_size[static_cast<std::size_t>(n)]) out.push_back(std::move(*t));
  return out;
}

DKTree to_dk_tree(const BinaryTree& tree) {
  const Direction one(2, {1}), two(2, {2});
  if (tree.kind() == BinaryTree::Kind::EmptyLeft) return DKTree::empty(2, 1, one);
  if (tree.kind() == BinaryTree::Kind::EmptyRight) return DKTree::empty(2, 1, two);
  std::function<DKTree(int)> rec = [&](int v) {
    std::vector<std::pair<Direction, DKTree>> kids;
    if (tree.vertex(v).left != BinaryTree::kAbsent) kids.emplace_back(one, rec(tree.vertex(v).left));
    if (tree.vertex(v).right != BinaryTree::kAbsent) kids.emplace_back(two, rec(tree.vertex(v).right));
    return DKTree::node(2, 1, std::move(kids));
  };
  return rec(0);
}

BinaryTree to_binary_tree(const DKTree& tree) {
  if (tree.d() != 2 || tree.k() != 1) throw InputError("only (2,1)-trees are binary trees");
  if (tree.empty())
    return tree.empty_direction()->contains(1) ? BinaryTree::empty_left() : BinaryTree::empty_right();
  const Direction one(2, {1}), two(2, {2});
  std::vector<std::pair<int, int>> links;
  for (std::size_t v = 0; v < tree.size(); ++v)
    links.emplace_back(tree.child(static_cast<int>(v), one), tree.child(static_cast<int>(v), two));
  return BinaryTree::from_links(links, 0);
}

}  // namespace natree
