#include "natree/json_io.hpp"

#include <fstream>
#include <sstream>

#include "natree/arith.hpp"

namespace natree {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("malformed document: " + what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) bad(std::string("\"") + name + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(const BinaryTree& tree) {
  if (tree.kind() == BinaryTree::Kind::EmptyLeft) return "empty_left";
  if (tree.kind() == BinaryTree::Kind::EmptyRight) return "empty_right";
  std::function<Json(int)> rec = [&](int v) {
    const auto& x = tree.vertex(v);
    Json node = Json::object();
    node["left"] = x.left == BinaryTree::kAbsent ? Json(nullptr) : rec(x.left);
    node["right"] = x.right == BinaryTree::kAbsent ? Json(nullptr) : rec(x.right);
    return node;
  };
  return rec(0);
}

BinaryTree binary_from_json(const Json& j) {
  if (j == "empty_left") return BinaryTree::empty_left();
  if (j == "empty_right") return BinaryTree::empty_right();
  std::function<BinaryTree(const Json&)> rec = [&](const Json& n) {
    if (!n.is_object()) bad("binary node must be an object");
    for (const auto& [key, value] : n.items())
      if (key != "left" && key != "right") bad("unknown binary node key \"" + key + "\"");
    std::optional<BinaryTree> l, r;
    if (n.contains("left") && !n["left"].is_null()) l = rec(n["left"]);
    if (n.contains("right") && !n["right"].is_null()) r = rec(n["right"]);
    return BinaryTree::node(l, r);
  };
  return rec(j);
}

Json to_json(const OrderedTree& tree) {
  Json kids = Json::array();
  for (const auto& c : tree.children) kids.push_back(to_json(c));
  return Json{{"children", kids}};
}

OrderedTree ordered_from_json(const Json& j) {
  const Json& kids = field(j, "children");
  if (!kids.is_array()) bad("\"children\" must be an array");
  OrderedTree t;
  for (const auto& c : kids) t.children.push_back(ordered_from_json(c));
  return t;
}

Json to_json(const DKTree& tree) {
  if (tree.empty()) return Json{{"empty", tree.empty_direction()->to_string()}};
  std::function<Json(int)> rec = [&](int v) {
    Json kids = Json::object();
    for (const auto& [dir, c] : tree.vertex(v).children) kids[dir.to_string()] = rec(c);
    return Json{{"children", kids}};
  };
  return rec(0);
}

DKTree dk_from_json(int d, int k, const Json& j) {
  check_dk(d, k);
  if (j.is_object() && j.contains("empty")) {
    if (!j["empty"].is_string()) bad("\"empty\" must be a direction string");
    return DKTree::empty(d, k, Direction::parse(d, j["empty"].get<std::string>()));
  }
  const Json& kids = field(j, "children");
  if (!kids.is_object()) bad("(d,k) children must be an object keyed by direction");
  std::vector<std::pair<Direction, DKTree>> children;
  for (const auto& [key, value] : kids.items()) {
    const Direction dir = Direction::parse(d, key);
    if (dir.k() != k) bad("direction {" + key + "} does not have k elements");
    children.emplace_back(dir, dk_from_json(d, k, value));
  }
  return DKTree::node(d, k, std::move(children));
}

Json labels_to_json(const Nat& t) {
  Json out = Json::object();
  for (const auto& [path, label] : t.to_paths()) out[path] = label;
  return out;
}

Json labels_to_json(const DKNat& t) {
  Json out = Json::object();
  for (std::size_t v = 1; v < t.size(); ++v) {
    Json tuple = Json::array();
    for (const auto& c : t.labels()[v]) tuple.push_back(c ? Json(*c) : Json(nullptr));
    out[t.shape().path(static_cast<int>(v))] = tuple;
  }
  return out;
}

Json to_json(const ParamPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back(Json{{"monomial", monomial_to_string(it->first)}, {"coeff", to_string(it->second)}});
  return out;
}

ParamPoly poly_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array of terms");
  ParamPoly out;
  for (const auto& term : j) {
    const Json& m = field(term, "monomial");
    const Json& c = field(term, "coeff");
    if (!m.is_string() || !c.is_string()) bad("polynomial terms hold strings");
    Monomial mono{};
    const std::string text = m.get<std::string>();
    if (text != "1") {
      std::stringstream ss(text);
      std::string factor;
      while (std::getline(ss, factor, '*')) {
        const auto caret = factor.find('^');
        const auto p = param_from_name(factor.substr(0, caret));
        if (!p) bad("unknown parameter in \"" + text + "\"");
        mono[static_cast<std::size_t>(*p)] =
            static_cast<std::uint16_t>(caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1)));
      }
    }
    out += ParamPoly::term(mono, parse_rational(c.get<std::string>()));
  }
  return out;
}

Json to_json(const Permutation& sigma) {
  Json cycles = Json::array();
  for (const auto& c : sigma.cycles()) cycles.push_back(c);
  return Json{{"one_line", sigma.one_line()}, {"cycles", cycles}};
}

Json to_json(const TruncSeries& s) {
  std::vector<std::pair<TruncSeries::Exponent, const ParamPoly*>> sorted;
  for (const auto& [e, c] : s.terms()) sorted.emplace_back(e, &c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int ta = 0, tb = 0;
    for (int x : a.first) ta += x;
    for (int x : b.first) tb += x;
    return ta < tb;
  });
  Json out = Json::array();
  for (const auto& [e, c] : sorted) out.push_back(Json{{"exponent", e}, {"coeff", to_json(*c)}});
  return out;
}

TreeDocument document_from_json(const Json& j) {
  const Json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) bad("\"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();
  const Json& shape = field(j, "shape");
  if (kind == "binary") return binary_from_json(shape);
  if (kind == "ordered") return ordered_from_json(shape);
  if (kind == "dk") return dk_from_json(int_field(j, "d"), int_field(j, "k"), shape);
  if (kind == "nat") {
    const BinaryTree tree = binary_from_json(shape);
    const Json& labels = field(j, "labels");
    if (!labels.is_object()) bad("\"labels\" must map paths to integers");
    std::vector<int> values(tree.size(), 0);
    std::vector<bool> seen(tree.size(), false);
    for (const auto& [path, value] : labels.items()) {
      const int v = tree.find(path);
      if (v == BinaryTree::kAbsent || v == 0) bad("label path \"" + path + "\" is not a non-root vertex");
      if (!value.is_number_integer()) bad("label of \"" + path + "\" must be an integer");
      values[static_cast<std::size_t>(v)] = value.get<int>();
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t v = 1; v < tree.size(); ++v)
      if (!seen[v]) bad("vertex \"" + tree.path(static_cast<int>(v)) + "\" has no label");
    return Nat(tree, std::move(values));
  }
  if (kind == "dknat") {
    const int d = int_field(j, "d"), k = int_field(j, "k");
    DKTree tree = dk_from_json(d, k, shape);
    if (tree.empty()) bad("a (d,k) NAT needs a non-empty shape");
    const Json& labels = field(j, "labels");
    if (!labels.is_object()) bad("\"labels\" must map paths to tuples");
    std::vector<DKLabel> values(tree.size(), DKLabel(static_cast<std::size_t>(d)));
    std::vector<bool> seen(tree.size(), false);
    for (const auto& [path, value] : labels.items()) {
      const int v = tree.find(path);
      if (v <= 0) bad("label path \"" + path + "\" is not a non-root vertex");
      if (!value.is_array() || static_cast<int>(value.size()) != d) bad("label of \"" + path + "\" needs d entries");
      for (int i = 0; i < d; ++i) {
        const Json& c = value[static_cast<std::size_t>(i)];
        if (c.is_null()) continue;
        if (!c.is_number_integer()) bad("label entries are integers or null");
        values[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = c.get<int>();
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t v = 1; v < tree.size(); ++v)
      if (!seen[v]) bad("vertex \"" + tree.path(static_cast<int>(v)) + "\" has no label");
    return DKNat(std::move(tree), std::move(values));
  }
  bad("unknown kind \"" + kind + "\"");
}

Json document_to_json(const TreeDocument& doc) {
  struct Visitor {
    Json operator()(const BinaryTree& t) const { return Json{{"kind", "binary"}, {"shape", to_json(t)}}; }
    Json operator()(const OrderedTree& t) const { return Json{{"kind", "ordered"}, {"shape", to_json(t)}}; }
    Json operator()(const DKTree& t) const {
      return Json{{"kind", "dk"}, {"d", t.d()}, {"k", t.k()}, {"shape", to_json(t)}};
    }
    Json operator()(const Nat& t) const {
      return Json{{"kind", "nat"}, {"shape", to_json(t.shape())}, {"labels", labels_to_json(t)}};
    }
    Json operator()(const DKNat& t) const {
      return Json{{"kind", "dknat"}, {"d", t.d()}, {"k", t.k()}, {"shape", to_json(t.shape())},
                  {"labels", labels_to_json(t)}};
    }
  };
  return std::visit(Visitor{}, doc);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

TreeDocument read_document(const std::string& path) { return document_from_json(read_json_file(path)); }

}  // namespace natree
