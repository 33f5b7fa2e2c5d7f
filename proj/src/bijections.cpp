#include "natree/bijections.hpp"

#include <algorithm>
#include <functional>

#include "natree/arith.hpp"

namespace natree {

namespace {

struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<char>> cell;  // cell[r][c] != 0 when (r,c) is a point
};

Grid grid_of(const Nat& t) {
  if (t.empty()) throw InputError("the empty NATs have no zigzag");
  Grid g;
  g.rows = t.w_l();
  g.cols = t.w_r();
  g.cell.assign(static_cast<std::size_t>(g.rows), std::vector<char>(static_cast<std::size_t>(g.cols), 0));
  for (const auto& [r, c] : vertex_points(t)) g.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
  return g;
}

bool at(const Grid& g, int r, int c) { return g.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0; }

// Follows one zigzag; first_col is 0 for psi and 1 for phi.
ZigzagTrace walk(const Grid& g, int edge, int first_col) {
  const int wl = g.rows, wr = g.cols;
  ZigzagTrace tr;
  tr.start = edge;
  int r = 0, c = 0;
  bool moving_down;
  if (edge < wr) {
    c = edge;
    r = 0;
    while (r < wl && !at(g, r, c)) ++r;
    if (r == wl) throw InputError("empty column in NAT grid");
    moving_down = false;
  } else {
    r = wl - 1 - (edge - wr);
    c = first_col;
    while (c < wr && !at(g, r, c)) ++c;
    if (c == wr) {
      tr.end = edge;
      return tr;
    }
    moving_down = true;
  }
  tr.points.emplace_back(r, c);
  while (true) {
    if (moving_down) {
      int nr = r + 1;
      while (nr < wl && !at(g, nr, c)) ++nr;
      if (nr == wl) {
        tr.end = column_edge(wl, wr, c);
        return tr;
      }
      r = nr;
    } else {
      int nc = c + 1;
      while (nc < wr && !at(g, r, nc)) ++nc;
      if (nc == wr) {
        tr.end = row_edge(wl, wr, r);
        return tr;
      }
      c = nc;
    }
    tr.points.emplace_back(r, c);
    moving_down = !moving_down;
  }
}

}  // namespace

int column_edge(int, int, int c) { return c; }
int row_edge(int w_l, int w_r, int r) { return w_r + (w_l - 1 - r); }

ZigzagTrace zigzag_trace(const Nat& t, int edge, bool keep_first_column) {
  const Grid g = grid_of(t);
  const int lo = keep_first_column ? 0 : 1;
  if (edge < lo || edge >= g.rows + g.cols) throw InputError("border edge out of range");
  return walk(g, edge, lo);
}

Permutation phi(const Nat& t) {
  const Grid g = grid_of(t);
  const int n = g.rows + g.cols - 1;
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) v[static_cast<std::size_t>(e - 1)] = walk(g, e, 1).end;
  return Permutation(std::move(v));
}

std::vector<int> psi(const Nat& t) {
  const Grid g = grid_of(t);
  const int n = g.rows + g.cols;
  std::vector<int> next(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) next[static_cast<std::size_t>(e)] = walk(g, e, 0).end;
  std::vector<int> word{0};
  for (int x = next[0]; x != 0; x = next[static_cast<std::size_t>(x)]) word.push_back(x);
  if (static_cast<int>(word.size()) != n) throw InputError("zigzag map is not a single cycle");
  return word;
}

std::vector<int> psi_word_from_phi(const Permutation& sigma) {
  auto cycles = sigma.cycles();
  for (auto& c : cycles) {
    const auto m = std::max_element(c.begin(), c.end());
    std::rotate(c.begin(), m + 1, c.end());
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.back() > b.back(); });
  std::vector<int> word{0};
  for (const auto& c : cycles) word.insert(word.end(), c.begin(), c.end());
  return word;
}

TwoColouredCycle recolour(const std::vector<int>& cycle_word, int w_l, int w_r) {
  if (w_l < 1 || w_r < 1) throw InputError("geometric size must be at least 1x1");
  if (static_cast<int>(cycle_word.size()) != w_l + w_r)
    throw InputError("cycle length does not match the geometric size");
  cycle_word_map(cycle_word);  // validates
  std::vector<Symbol> s;
  for (int i : cycle_word)
    s.push_back(i < w_r ? Symbol{Colour::Blue, w_r - i} : Symbol{Colour::Red, i - w_r + 1});
  return TwoColouredCycle(w_l, w_r, std::move(s));
}

std::vector<int> uncolour(const TwoColouredCycle& c) {
  const int wr = c.blues();
  std::vector<int> w;
  for (const Symbol& s : c.symbols()) w.push_back(s.colour == Colour::Blue ? wr - s.index : s.index + wr - 1);
  const auto zero = std::find(w.begin(), w.end(), 0);
  if (zero == w.end()) throw InputError("coloured cycle has no blue symbol");
  std::rotate(w.begin(), zero, w.end());
  return w;
}

Nat psi_inverse(const std::vector<int>& cycle_word, int w_l, int w_r) {
  if (w_l < 1 || w_r < 1) throw InputError("geometric size must be at least 1x1");
  const int rows = w_l, cols = w_r;
  if (static_cast<int>(cycle_word.size()) != rows + cols)
    throw InputError("cycle length does not match the geometric size");
  const std::vector<int> dest = cycle_word_map(cycle_word);
  for (int e = 0; e < rows + cols; ++e)
    if ((dest[static_cast<std::size_t>(e)] > e) != (e < cols))
      throw InputError("cycle is not in the image of psi: excedances must be exactly 0.." + std::to_string(cols - 1));

  // Pipe-dream search: every point is an elbow (a pipe from above turns
  // right, one from the left turns down), every empty cell a crossing.
  // Cells are decided row by row; down[c] is the destination of the pipe
  // travelling down column c.
  auto row_of = [&](int edge) { return rows + cols - 1 - edge; };
  auto ok_right = [&](int d, int r, int c) {  // pipe leaving (r,c) to the right
    if (c == cols - 1) return d >= cols && row_of(d) == r;
    return d < cols ? d >= c + 1 : row_of(d) >= r;
  };
  auto ok_down = [&](int d, int r, int c) {  // pipe leaving (r,c) downwards
    if (r == rows - 1) return d == c;
    return d < cols ? d >= c : row_of(d) >= r + 1;
  };
  std::vector<int> down(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c) down[static_cast<std::size_t>(c)] = dest[static_cast<std::size_t>(c)];
  std::vector<char> col_has(static_cast<std::size_t>(cols), 0);
  std::vector<std::pair<int, int>> points;

  std::function<bool(int, int, int, bool)> place = [&](int r, int c, int h, bool row_has) -> bool {
    if (c == cols) {
      if (!row_has) return false;
      if (r + 1 == rows) return true;
      return place(r + 1, 0, dest[static_cast<std::size_t>(row_edge(rows, cols, r + 1))], false);
    }
    const int t = down[static_cast<std::size_t>(c)];
    const bool col = col_has[static_cast<std::size_t>(c)] != 0;
    const bool last_row = r + 1 == rows;
    const bool can_point = (r == 0 && c == 0) || (col != row_has);
    const bool must_point = (r == 0 && c == 0) || (last_row && !col);
    // Elbow.
    if (can_point && ok_right(t, r, c) && ok_down(h, r, c)) {
      down[static_cast<std::size_t>(c)] = h;
      col_has[static_cast<std::size_t>(c)] = 1;
      points.emplace_back(r, c);
      if (place(r, c + 1, t, true)) return true;
      points.pop_back();
      col_has[static_cast<std::size_t>(c)] = col ? 1 : 0;
      down[static_cast<std::size_t>(c)] = t;
    }
    // Crossing.
    if (!must_point && ok_right(h, r, c) && ok_down(t, r, c))
      if (place(r, c + 1, h, row_has)) return true;
    return false;
  };
  if (!place(0, 0, dest[static_cast<std::size_t>(row_edge(rows, cols, 0))], false))
    throw InputError("cycle is not in the image of psi");
  GeometricNat g;
  g.w_l = rows;
  g.w_r = cols;
  g.points = points;
  Nat t = geometric_to_nat(g);
  if (psi(t) != cycle_word) throw InputError("cycle is not in the image of psi");
  return t;
}

Nat psi_inverse(const TwoColouredCycle& c) {
  if (auto bad = validate_2cbd(c)) throw InputError("not block decreasing: " + *bad);
  return psi_inverse(uncolour(c), c.reds(), c.blues());
}

Nat phi_inverse(const Permutation& sigma) {
  if (sigma.size() < 1) throw InputError("phi is defined on permutations of size at least 1");
  const int exc = static_cast<int>(excedance_profile(sigma).size());
  if (!has_excedance_prefix(sigma, exc))
    throw InputError("permutation excedances are not an initial segment of positions");
  const int w_r = exc + 1;
  const int w_l = sigma.size() + 1 - w_r;
  Nat t = psi_inverse(psi_word_from_phi(sigma), w_l, w_r);
  if (phi(t) != sigma) throw InputError("permutation is not in the image of phi");
  return t;
}

Permutation theta(const TwoColouredCycle& c) { return phi(psi_inverse(c)); }

TwoColouredCycle omega(const TwoColouredCycle& c) {
  const auto& s = c.symbols();
  if (c.reds() == 0 || c.blues() == 0) return c;
  const auto r1 = std::find(s.begin(), s.end(), Symbol{Colour::Red, 1});
  // Maximal single-colour blocks strictly between b_j (position 0) and r_1.
  std::vector<std::vector<Symbol>> blocks;
  for (auto it = s.begin() + 1; it != r1; ++it) {
    if (blocks.empty() || blocks.back().back().colour != it->colour) blocks.emplace_back();
    blocks.back().push_back(*it);
  }
  if (blocks.size() % 2 == 1) return c;
  for (std::size_t a = 0; a + 1 < blocks.size(); a += 2) std::swap(blocks[a], blocks[a + 1]);
  std::vector<Symbol> out{s.front()};
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), r1, s.end());
  return TwoColouredCycle(c.reds(), c.blues(), std::move(out));
}

namespace {

int ce_count(const Permutation& sigma, int i, int j, int threshold) {
  if (i < 1 || j < 1 || sigma.size() != i + j - 1) throw InputError("CE needs a permutation of size i+j-1");
  if (!has_excedance_prefix(sigma, j - 1))
    throw InputError("CE needs excedances exactly at 1.." + std::to_string(j - 1));
  int n = 1;
  for (int u = 1; u <= j - 1; ++u) n += sigma(u) > threshold;
  return n;
}

}  // namespace

// Values above j are the red symbols r2..ri.
int ce(const Permutation& sigma, int i, int j) { return ce_count(sigma, i, j, j); }

int ce_as_displayed(const Permutation& sigma, int i, int j) { return ce_count(sigma, i, j, i); }

namespace {

// zeta of the subtree rooted at v. With a left branch, its deepest vertex u
// is cut off: zeta(right subtree of u) receives zeta(rest) as a last child.
OrderedTree zeta_at(const BinaryTree& b, int v) {
  if (v == BinaryTree::kAbsent) return OrderedTree{};
  if (b.vertex(v).left != BinaryTree::kAbsent) {
    int u = b.vertex(v).left;
    while (b.vertex(u).left != BinaryTree::kAbsent) u = b.vertex(u).left;
    OrderedTree out = zeta_at(b, b.vertex(u).right);
    // The rest: rebuild the subtree of v without u.
    std::vector<std::pair<int, int>> links(b.size(), {BinaryTree::kAbsent, BinaryTree::kAbsent});
    for (int x = 0; x < static_cast<int>(b.size()); ++x) links[static_cast<std::size_t>(x)] = {b.vertex(x).left, b.vertex(x).right};
    links[static_cast<std::size_t>(b.vertex(u).parent)].first = BinaryTree::kAbsent;
    const BinaryTree rest = BinaryTree::from_links(links, v);
    out.children.push_back(zeta_at(rest, 0));
    return out;
  }
  OrderedTree out;
  for (int x = b.vertex(v).right; x != BinaryTree::kAbsent; x = b.vertex(x).right)
    out.children.push_back(zeta_at(b, b.vertex(x).left));
  out.children.push_back(OrderedTree{});
  return out;
}

std::optional<BinaryTree> zeta_inv_opt(const OrderedTree& o) {
  if (o.is_leaf()) return std::nullopt;
  if (o.children.back().is_leaf()) {
    // Right branch below the root, each vertex carrying a left subtree.
    std::optional<BinaryTree> chain;
    for (std::size_t a = o.children.size() - 1; a-- > 0;)
      chain = BinaryTree::node(zeta_inv_opt(o.children[a]), chain);
    return BinaryTree::node(std::nullopt, chain);
  }
  const std::optional<BinaryTree> rest = zeta_inv_opt(o.children.back());
  OrderedTree front = o;
  front.children.pop_back();
  const std::optional<BinaryTree> a = zeta_inv_opt(front);
  // Hang a new vertex, with right subtree a, below the leftmost branch of rest.
  std::vector<std::pair<int, int>> links;
  for (const auto& x : rest->vertices()) links.emplace_back(x.left, x.right);
  int u = 0;
  while (links[static_cast<std::size_t>(u)].first != BinaryTree::kAbsent) u = links[static_cast<std::size_t>(u)].first;
  const int nv = static_cast<int>(links.size());
  links[static_cast<std::size_t>(u)].first = nv;
  links.emplace_back(BinaryTree::kAbsent, BinaryTree::kAbsent);
  if (a) {
    const int offset = static_cast<int>(links.size());
    for (const auto& x : a->vertices())
      links.emplace_back(x.left == BinaryTree::kAbsent ? BinaryTree::kAbsent : x.left + offset,
                         x.right == BinaryTree::kAbsent ? BinaryTree::kAbsent : x.right + offset);
    links[static_cast<std::size_t>(nv)].second = offset;
  }
  return BinaryTree::from_links(links, 0);
}

}  // namespace

OrderedTree zeta(const BinaryTree& tree) {
  if (tree.empty()) return OrderedTree{};
  return zeta_at(tree, 0);
}

BinaryTree zeta_inverse(const OrderedTree& tree) {
  auto b = zeta_inv_opt(tree);
  return b ? *b : BinaryTree::empty_left();
}

}  // namespace natree
