#include "natree/natdk.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "natree/arith.hpp"
#include "natree/formulas.hpp"

namespace natree {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// All m-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(at(m));
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == m) {
      out.push_back(pick);
      return;
    }
    for (int v = from; v <= n - (m - pos) + 1; ++v) {
      pick[at(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace

DKNat::DKNat(DKTree shape, std::vector<DKLabel> labels) : shape_(std::move(shape)), labels_(std::move(labels)) {
  if (shape_.empty()) throw InputError("a (d,k) NAT needs a non-empty shape");
  if (labels_.size() != shape_.size()) throw InputError("one label per vertex");
  for (auto& l : labels_)
    if (static_cast<int>(l.size()) != shape_.d()) throw InputError("labels must have d coordinates");
  const auto w = dk_geometric_size(shape_);
  labels_[0].assign(w.begin(), w.end());
}

std::string label_to_string(const DKLabel& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ',';
    out += label[i] ? std::to_string(*label[i]) : ".";
  }
  return out;
}

DKLabel parse_label(int d, std::string_view text) {
  DKLabel out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string part(text.substr(pos, end - pos));
    if (part == ".") {
      out.emplace_back(std::nullopt);
    } else {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad label coordinate '" + part + "'");
      out.emplace_back(std::stoi(part));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (static_cast<int>(out.size()) != d) throw InputError("label '" + std::string(text) + "' needs d coordinates");
  return out;
}

DKNat DKNat::from_paths(int d, int k, const std::vector<std::pair<std::string, std::string>>& labelled) {
  // Rebuild the shape from the paths, then place the labels.
  std::function<DKTree(const std::string&)> build = [&](const std::string& prefix) {
    std::map<Direction, bool> kids;
    for (const auto& [path, label] : labelled) {
      if (path.size() <= prefix.size() || path.compare(0, prefix.size(), prefix) != 0) continue;
      std::string rest = path.substr(prefix.size());
      if (!prefix.empty()) {
        if (rest.front() != '/') continue;
        rest.erase(0, 1);
      }
      kids[Direction::parse(d, rest.substr(0, rest.find('/')))] = true;
    }
    std::vector<std::pair<Direction, DKTree>> children;
    for (const auto& [dir, unused] : kids)
      children.emplace_back(dir, build(prefix.empty() ? dir.to_string() : prefix + "/" + dir.to_string()));
    return DKTree::node(d, k, std::move(children));
  };
  DKTree shape = build("");
  if (shape.size() != labelled.size() + 1) throw InputError("paths must list each non-root vertex once");
  std::vector<DKLabel> labels(shape.size(), DKLabel(at(d)));
  for (const auto& [path, label] : labelled) {
    const int v = shape.find(path);
    if (v <= 0) throw InputError("bad vertex path '" + path + "'");
    labels[at(v)] = parse_label(d, label);
  }
  return DKNat(std::move(shape), std::move(labels));
}

std::vector<std::pair<std::string, std::string>> DKNat::to_paths() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t v = 1; v < size(); ++v)
    out.emplace_back(shape_.path(static_cast<int>(v)), label_to_string(labels_[v]));
  return out;
}

std::string DKNat::to_string() const {
  std::string out;
  std::function<void(int)> rec = [&](int v) {
    out += '(' + label_to_string(label(v)) + ")[";
    for (const auto& [dir, c] : shape_.vertex(v).children) {
      out += '{' + dir.to_string() + '}';
      rec(c);
    }
    out += ']';
  };
  rec(0);
  return out;
}

std::vector<Violation> validate_dknat(const DKNat& t) {
  std::vector<Violation> out;
  const DKTree& s = t.shape();
  const int d = t.d(), n = static_cast<int>(t.size());
  for (int v = 1; v < n; ++v) {
    const Direction& dir = *s.vertex(v).direction;
    for (int i = 1; i <= d; ++i) {
      const bool set = t.label(v)[at(i - 1)].has_value();
      if (set != dir.contains(i)) {
        out.push_back({"direction", {v}, "vertex " + s.path(v) + " has label (" + label_to_string(t.label(v)) +
                                            ") but index {" + dir.to_string() + "}"});
        break;
      }
    }
  }
  for (int v = 1; v < n; ++v)
    for (int u = s.vertex(v).parent; u != -1; u = s.vertex(u).parent)
      for (int i = 0; i < d; ++i) {
        const auto& a = t.label(u)[at(i)];
        const auto& b = t.label(v)[at(i)];
        if (a && b && *a <= *b)
          out.push_back({"decreasing", {u, v},
                         "coordinate " + std::to_string(i + 1) + " does not decrease from '" + s.path(u) +
                             "' to '" + s.path(v) + "'"});
      }
  for (int i = 0; i < d; ++i) {
    std::map<int, std::vector<int>> seen;
    for (int v = 0; v < n; ++v)
      if (const auto& c = t.label(v)[at(i)]) seen[*c].push_back(v);
    for (const auto& [value, vs] : seen)
      if (vs.size() > 1)
        out.push_back({"distinct", vs,
                       "coordinate " + std::to_string(i + 1) + " value " + std::to_string(value) + " repeats"});
    int expect = 1;
    for (const auto& [value, vs] : seen) {
      if (value != expect) {
        out.push_back({"interval", {},
                       "coordinate " + std::to_string(i + 1) + " values do not form 1.." +
                           std::to_string(static_cast<int>(seen.size()))});
        break;
      }
      ++expect;
    }
  }
  return out;
}

void require_valid(const DKNat& t) {
  const auto violations = validate_dknat(t);
  if (violations.empty()) return;
  std::string msg = "invalid (d,k) NAT:";
  for (const auto& v : violations) msg += " [" + v.condition + "] " + v.message + ";";
  throw InputError(msg);
}

std::vector<int> geometric_size(const DKNat& t) { return dk_geometric_size(t.shape()); }

std::vector<std::vector<int>> complete_labels(const DKNat& t) {
  std::vector<std::vector<int>> out(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) {
    const int parent = t.shape().vertex(static_cast<int>(v)).parent;
    for (int i = 0; i < t.d(); ++i) {
      const auto& c = t.labels()[v][at(i)];
      out[v].push_back(c ? *c : out[at(parent)][at(i)]);  // parents precede children
    }
  }
  return out;
}

void check_dk_scale(int d, const std::vector<int>& box) {
  if (d > 6) throw ResourceError("dimension " + std::to_string(d) + " is above the limit 6");
  double volume = 1;
  for (int w : box) volume *= std::max(w, 1);
  if (volume > 1e6) throw ResourceError("box volume is above the limit 10^6");
}

DKGeometric dknat_to_geometric(const DKNat& t) {
  require_valid(t);
  DKGeometric g{t.d(), t.k(), geometric_size(t), complete_labels(t)};
  check_dk_scale(g.d, g.box);
  std::sort(g.points.begin(), g.points.end());
  return g;
}

DKNat geometric_to_dknat(const DKGeometric& g) {
  check_dk(g.d, g.k);
  if (static_cast<int>(g.box.size()) != g.d) throw InputError("box needs d sides");
  check_dk_scale(g.d, g.box);
  const int d = g.d;
  std::set<std::vector<int>> pts;
  for (const auto& p : g.points) {
    if (static_cast<int>(p.size()) != d) throw InputError("points need d coordinates");
    if (!pts.insert(p).second) throw InputError("repeated point");
  }
  auto fail = [](int condition, const std::string& what) {
    throw InputError("condition " + std::to_string(condition) + " fails: " + what);
  };
  auto show = [](const std::vector<int>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  };
  for (const auto& p : pts)
    for (int i = 0; i < d; ++i)
      if (p[at(i)] < 1 || p[at(i)] > g.box[at(i)]) fail(1, "point " + show(p) + " lies outside the box");
  if (!pts.count(g.box)) fail(2, "the root " + show(g.box) + " is missing");

  const auto dirs = all_directions(d, g.k);
  auto in_cone = [&](const std::vector<int>& p, const Direction& dir, const std::vector<int>& q) {
    for (int i = 1; i <= d; ++i) {
      const int a = p[at(i - 1)], b = q[at(i - 1)];
      if (dir.contains(i) ? b < a : b != a) return false;
    }
    return true;
  };
  // Type and parent: the nearest other point in the unique non-trivial cone.
  std::map<std::vector<int>, std::pair<Direction, std::vector<int>>> parent;
  for (const auto& p : pts) {
    if (p == g.box) continue;
    std::optional<Direction> type;
    std::vector<int> nearest;
    for (const auto& dir : dirs) {
      std::vector<int> best;
      int best_sum = 0;
      for (const auto& q : pts) {
        if (q == p || !in_cone(p, dir, q)) continue;
        int sum = 0;
        for (int x : q) sum += x;
        if (best.empty() || sum < best_sum) best = q, best_sum = sum;
      }
      if (best.empty()) continue;
      if (type) fail(3, "point " + show(p) + " has two cone directions");
      type = dir;
      nearest = best;
    }
    if (!type) fail(3, "point " + show(p) + " has no cone direction");
    parent.emplace(p, std::make_pair(*type, nearest));
  }
  for (int i = 1; i <= d; ++i)
    for (int l = 1; l < g.box[at(i - 1)]; ++l) {
      int hits = 0;
      for (const auto& [p, info] : parent)
        if (info.first.contains(i) && p[at(i - 1)] == l) ++hits;
      if (hits != 1)
        fail(4, "hyperplane x" + std::to_string(i) + "=" + std::to_string(l) + " holds " + std::to_string(hits) +
                    " points of a type containing " + std::to_string(i));
    }
  for (const auto& dir : dirs)
    for (auto a = pts.begin(); a != pts.end(); ++a)
      for (auto b = std::next(a); b != pts.end(); ++b) {
        bool same_space = true;
        int greater = 0, smaller = 0;
        for (int i = 1; i <= d; ++i) {
          const int x = (*a)[at(i - 1)], y = (*b)[at(i - 1)];
          if (!dir.contains(i)) same_space = same_space && x == y;
          else if (x > y) ++greater;
          else if (x < y) ++smaller;
        }
        if (same_space && greater != g.k && smaller != g.k)
          fail(5, "points " + show(*a) + " and " + show(*b) + " are not comparable along {" + dir.to_string() + "}");
      }

  std::map<std::vector<int>, std::vector<std::pair<Direction, std::vector<int>>>> kids;
  for (const auto& [p, info] : parent) {
    auto& list = kids[info.second];
    for (const auto& [dir, q] : list)
      if (dir == info.first) fail(3, "point " + show(info.second) + " has two children of type {" + dir.to_string() + "}");
    list.emplace_back(info.first, p);
  }
  std::size_t reached = 0;
  std::function<DKTree(const std::vector<int>&)> build = [&](const std::vector<int>& p) {
    ++reached;
    std::vector<std::pair<Direction, DKTree>> children;
    for (const auto& [dir, q] : kids[p]) children.emplace_back(dir, build(q));
    return DKTree::node(d, g.k, std::move(children));
  };
  DKTree shape = build(g.box);
  if (reached != pts.size()) fail(3, "parent links do not reach the root");
  std::vector<DKLabel> labels(shape.size(), DKLabel(at(d)));
  std::function<void(int, const std::vector<int>&)> place = [&](int v, const std::vector<int>& p) {
    if (v != 0) {
      const Direction& dir = *shape.vertex(v).direction;
      for (int i = 1; i <= d; ++i)
        if (dir.contains(i)) labels[at(v)][at(i - 1)] = p[at(i - 1)];
    }
    for (const auto& [dir, q] : kids[p]) place(shape.child(v, dir), q);
  };
  place(0, g.box);
  DKNat t(std::move(shape), std::move(labels));
  require_valid(t);
  if (geometric_size(t) != g.box) fail(1, "the box is not the geometric size");
  return t;
}

std::vector<DKNat> enumerate_dknats_of_shape(const DKTree& shape) {
  if (shape.empty()) throw InputError("enumeration needs a non-empty shape");
  const int d = shape.d();
  check_dk_scale(d, dk_geometric_size(shape));
  check_resource(static_cast<long>(shape.size()), "tree size");
  const auto& root = shape.vertex(0);
  if (root.children.empty()) return {DKNat(shape, {DKLabel(at(d))})};

  // Sub-NATs of each child, with their offsets in the preorder arena.
  struct Part {
    Direction dir;
    int offset;
    std::vector<DKNat> nats;
    std::vector<int> counts;  // i-labels contributed to the parent, per axis
  };
  std::vector<Part> parts;
  for (const auto& [dir, c] : root.children) {
    const DKTree sub = shape.subtree(c);
    const auto w = dk_geometric_size(sub);
    std::vector<int> counts;
    for (int i = 1; i <= d; ++i) counts.push_back(w[at(i - 1)] - 1 + (dir.contains(i) ? 1 : 0));
    parts.push_back({dir, c, enumerate_dknats_of_shape(sub), counts});
  }
  const auto w = dk_geometric_size(shape);

  // Per axis: ordered distributions of {1..w_i-1} among the parts.
  std::vector<std::vector<std::vector<std::vector<int>>>> splits(at(d));
  for (int i = 0; i < d; ++i) {
    std::vector<std::vector<int>> current;
    std::function<void(std::size_t, std::vector<int>)> rec = [&](std::size_t a, std::vector<int> pool) {
      if (a == parts.size()) {
        splits[at(i)].push_back(current);
        return;
      }
      const int m = parts[a].counts[at(i)];
      for (const auto& pick : subsets(static_cast<int>(pool.size()), m)) {
        std::vector<int> chosen, rest;
        std::size_t next = 0;
        for (std::size_t j = 0; j < pool.size(); ++j) {
          if (next < pick.size() && pick[next] == static_cast<int>(j) + 1) {
            chosen.push_back(pool[j]);
            ++next;
          } else {
            rest.push_back(pool[j]);
          }
        }
        current.push_back(chosen);
        rec(a + 1, rest);
        current.pop_back();
      }
    };
    std::vector<int> pool;
    for (int l = 1; l < w[at(i)]; ++l) pool.push_back(l);
    rec(0, pool);
  }

  std::vector<DKNat> out;
  std::vector<std::size_t> choice(parts.size(), 0), axis(at(d), 0);
  std::function<void(std::size_t)> over_subnats = [&](std::size_t a) {
    if (a < parts.size()) {
      for (choice[a] = 0; choice[a] < parts[a].nats.size(); ++choice[a]) over_subnats(a + 1);
      return;
    }
    std::function<void(int)> over_axes = [&](int i) {
      if (i < d) {
        for (axis[at(i)] = 0; axis[at(i)] < splits[at(i)].size(); ++axis[at(i)]) over_axes(i + 1);
        return;
      }
      std::vector<DKLabel> labels(shape.size(), DKLabel(at(d)));
      for (std::size_t p = 0; p < parts.size(); ++p) {
        const DKNat& sub = parts[p].nats[choice[p]];
        for (std::size_t v = 0; v < sub.size(); ++v) {
          DKLabel l = sub.labels()[v];
          if (v == 0)
            for (int j = 1; j <= d; ++j)
              if (!parts[p].dir.contains(j)) l[at(j - 1)].reset();
          for (int j = 0; j < d; ++j)
            if (l[at(j)]) l[at(j)] = splits[at(j)][axis[at(j)]][p][at(*l[at(j)] - 1)];
          labels[at(parts[p].offset) + v] = std::move(l);
        }
      }
      out.emplace_back(shape, std::move(labels));
    };
    over_axes(0);
  };
  over_subnats(0);
  return out;
}

Nat to_nat(const DKNat& t) {
  if (t.d() != 2 || t.k() != 1) throw InputError("only (2,1) NATs are ordinary NATs");
  std::vector<int> labels(t.size(), 0);
  for (std::size_t v = 1; v < t.size(); ++v) {
    const auto& l = t.labels()[v];
    labels[v] = l[0] ? *l[0] : *l[1];
  }
  return Nat(to_binary_tree(t.shape()), std::move(labels));
}

DKNat to_dknat(const Nat& t) {
  if (t.empty()) throw InputError("a (d,k) NAT needs a non-empty shape");
  const BinaryTree& s = t.shape();
  std::vector<DKLabel> labels(s.size(), DKLabel(2));
  for (std::size_t v = 1; v < s.size(); ++v)
    labels[v][s.is_left_child(static_cast<int>(v)) ? 0 : 1] = t.label(static_cast<int>(v));
  return DKNat(to_dk_tree(s), std::move(labels));
}

}  // namespace natree
