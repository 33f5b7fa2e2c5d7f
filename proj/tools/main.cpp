// natree: counting, bijections, series and histograms for non-ambiguous trees.
#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "natree/bijections.hpp"
#include "natree/formulas.hpp"
#include "natree/json_io.hpp"
#include "natree/natdk.hpp"
#include "natree/series.hpp"

using namespace natree;

namespace {

// Exhaustive work is refused above this many objects.
const Integer kEnumerationLimit = 2000000;

void guard(const Integer& objects, const std::string& what) {
  if (objects > kEnumerationLimit)
    throw ResourceError(what + ": " + to_string(objects) + " objects exceed the enumeration limit " +
                        to_string(kEnumerationLimit));
}

std::pair<int, int> parse_size(const std::string& text) {
  const auto x = text.find('x');
  int i = 0, j = 0;
  try {
    if (x == std::string::npos) throw InputError("");
    std::size_t a = 0, b = 0;
    i = std::stoi(text.substr(0, x), &a);
    j = std::stoi(text.substr(x + 1), &b);
    if (a != x || b != text.size() - x - 1) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("size must look like IxJ, got '" + text + "'");
  }
  if (i < 1 || j < 1) throw InputError("size sides must be positive");
  return {i, j};
}

std::pair<int, int> parse_dim(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("dimension must look like d,k");
  try {
    const int d = std::stoi(text.substr(0, comma)), k = std::stoi(text.substr(comma + 1));
    check_dk(d, k);
    return {d, k};
  } catch (const std::invalid_argument&) {
    throw InputError("dimension must look like d,k, got '" + text + "'");
  }
}

Json count_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(to_string(n));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Nat> nats_of_size(int i, int j) {
  check_resource(i + j - 1, "tree size");
  guard(count_by_size(i, j).evaluate_all(1).get_num(), "NATs of size " + std::to_string(i) + "x" + std::to_string(j));
  return enumerate_nats_by_size(i, j);
}

Integer catalan(int n) { return binomial(2 * static_cast<unsigned>(n), static_cast<unsigned>(n)) / (n + 1); }

// ------------------------------------------------------------------ count

struct CountArgs {
  std::string size, shape, dim;
  bool alpha = false, beta = false, q = false, enumerate = false;
  int hook = 0;
};

void run_count(const CountArgs& a) {
  Json out = Json::object();
  if (!a.shape.empty()) {
    const TreeDocument doc = read_document(a.shape);
    if (const auto* b = std::get_if<BinaryTree>(&doc); b || std::holds_alternative<Nat>(doc)) {
      const BinaryTree shape = b ? *b : std::get<Nat>(doc).shape();
      if (shape.empty()) throw InputError("hook formulas need a non-empty shape");
      out["shape"] = shape.to_string();
      out["count"] = count_json(hook_formula(shape));
      if (a.q) out["q_count"] = to_json(q_hook_formula(shape));
      if (a.enumerate) {
        check_resource(static_cast<long>(shape.size()), "tree size");
        guard(hook_formula(shape), "NAT(B)");
        out["enumerated"] = static_cast<long>(enumerate_nats_of_shape(shape).size());
      }
    } else if (const auto* m = std::get_if<DKTree>(&doc); m || std::holds_alternative<DKNat>(doc)) {
      const DKTree shape = m ? *m : std::get<DKNat>(doc).shape();
      if (shape.empty()) throw InputError("hook formulas need a non-empty shape");
      check_dk_scale(shape.d(), dk_geometric_size(shape));
      out["shape"] = shape.to_string();
      out["count"] = count_json(dk_hook_formula(shape));
      if (a.enumerate) {
        check_resource(static_cast<long>(shape.size()), "tree size");
        guard(dk_hook_formula(shape), "NAT(M)");
        out["enumerated"] = static_cast<long>(enumerate_dknats_of_shape(shape).size());
      }
    } else {
      throw InputError("count --shape needs a binary, nat, dk or dknat document");
    }
    emit(out);
    return;
  }
  if (a.size.empty()) throw InputError("count needs --size or --shape");
  if (!a.dim.empty()) {
    const auto [d, k] = parse_dim(a.dim);
    if (d > 6) throw ResourceError("dimension above 6 is outside desk scale");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(a.size, &used);
      if (used != a.size.size() || n < 1) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("with --dim, --size is a vertex count");
    }
    check_resource(n, "tree size");
    Integer total = 0;
    const auto shapes = enumerate_dk_trees(d, k, n);
    for (const auto& m : shapes) total += dk_hook_formula(m);
    out["dim"] = {d, k};
    out["vertices"] = n;
    out["shapes"] = static_cast<long>(shapes.size());
    out["count"] = count_json(total);
    emit(out);
    return;
  }
  const auto [i, j] = parse_size(a.size);
  if (i > 200 || j > 200) throw ResourceError("sizes above 200 are outside desk scale");
  out["size"] = {i, j};
  auto restrict = [&](ParamPoly p) {
    if (!a.alpha) p = p.substitute(Param::alpha, 1);
    if (!a.beta) p = p.substitute(Param::beta, 1);
    return p;
  };
  if (a.hook > 0) {
    out["hook"] = a.hook;
    if (a.alpha || a.beta) out["count"] = to_json(restrict(count_by_size_and_hook_ab(i, j, a.hook)));
    else out["count"] = count_json(count_by_size_and_hook(i, j, a.hook));
  } else if (a.alpha || a.beta) {
    out["count"] = to_json(restrict(count_by_size(i, j)));
  } else {
    out["count"] = count_json(count_by_size(i, j).evaluate_all(1).get_num());
  }
  if (a.enumerate) {
    long n = 0;
    for (const auto& t : nats_of_size(i, j))
      if (a.hook == 0 || nat_stats(t).hook == a.hook) ++n;
    out["enumerated"] = n;
  }
  emit(out);
}

// -------------------------------------------------------------- bijection

struct BijectionArgs {
  std::string which, file, cycle;
  bool roundtrip = false, all = false;
  int max_size = 0, size = 0;
};

Json phi_json(const Nat& t, bool roundtrip) {
  const Permutation sigma = phi(t);
  Json out{{"size", {t.w_l(), t.w_r()}}, {"permutation", to_json(sigma)}, {"cycle_string", sigma.cycle_string()}};
  if (roundtrip) out["roundtrip"] = phi_inverse(sigma) == t;
  return out;
}

Json psi_json(const Nat& t, bool roundtrip) {
  const auto word = psi(t);
  const TwoColouredCycle c = recolour(word, t.w_l(), t.w_r());
  Json out{{"size", {t.w_l(), t.w_r()}}, {"cycle", word}, {"cycle_string", cycle_word_string(word)},
           {"coloured", c.to_string()}, {"blue_blocks", blue_blocks(c)}, {"hook", nat_stats(t).hook}};
  if (roundtrip) out["roundtrip"] = psi_inverse(word, t.w_l(), t.w_r()) == t;
  return out;
}

Json theta_json(const TwoColouredCycle& c, bool roundtrip) {
  if (auto why = validate_2cbd(c)) throw InputError("not block decreasing: " + *why);
  const Permutation sigma = theta(c);
  const TwoColouredCycle w = omega(c);
  const Permutation sigma_w = theta(w);
  Json out{{"cycle", c.to_string()},
           {"permutation", to_json(sigma)},
           {"omega", w.to_string()},
           {"theta_omega", to_json(sigma_w)},
           {"blue_blocks", blue_blocks(c)},
           {"ce_theta_omega", ce(sigma_w, c.reds(), c.blues())}};
  if (roundtrip) {
    const Nat t = phi_inverse(sigma);
    out["roundtrip"] = recolour(psi(t), t.w_l(), t.w_r()) == c;
  }
  return out;
}

Json zeta_json(const BinaryTree& b, bool roundtrip) {
  const OrderedTree o = zeta(b);
  Json out{{"binary", b.to_string()}, {"ordered", o.to_string()}, {"hook", b.empty() ? 0 : hook_count(b)},
           {"childleaf", childleaf_count(o)}};
  if (roundtrip) out["roundtrip"] = zeta_inverse(o) == b;
  return out;
}

// Exhaustive verification up to max_size vertices.
Json verify_all(const std::string& which, int max_size) {
  check_resource(max_size, "tree size");
  long checked = 0;
  bool ok = true;
  if (which == "zeta") {
    for (int n = 1; n <= max_size; ++n) {
      guard(catalan(n), "binary trees");
      std::set<std::string> images;
      for (const auto& b : enumerate_binary_trees(n)) {
        const OrderedTree o = zeta(b);
        ok = ok && zeta_inverse(o) == b && static_cast<int>(o.edge_count()) == n &&
             hook_count(b) == childleaf_count(o) && images.insert(o.to_string()).second;
        ++checked;
      }
    }
    return Json{{"ok", ok}, {"checked", checked}};
  }
  for (int n = 1; n <= max_size; ++n)
    for (int i = 1; i <= n; ++i) {
      const int j = n + 1 - i;
      std::set<std::string> images;
      for (const auto& t : nats_of_size(i, j)) {
        if (which == "phi") {
          const Permutation s = phi(t);
          ok = ok && phi_inverse(s) == t && has_excedance_prefix(s, j - 1) && images.insert(s.to_string()).second;
        } else if (which == "psi") {
          const auto w = psi(t);
          const TwoColouredCycle c = recolour(w, i, j);
          ok = ok && psi_inverse(w, i, j) == t && !validate_2cbd(c) && images.insert(c.to_string()).second;
        } else {
          const TwoColouredCycle c = recolour(psi(t), i, j);
          const Permutation s = theta(c);
          ok = ok && phi_inverse(s) == t && images.insert(s.to_string()).second;
        }
        ++checked;
      }
    }
  return Json{{"ok", ok}, {"checked", checked}};
}

void run_bijection(const BijectionArgs& a) {
  if (a.max_size > 0) {
    emit(verify_all(a.which, a.max_size));
    return;
  }
  if (a.which == "zeta" && a.size > 0) {
    check_resource(a.size, "tree size");
    Json list = Json::array();
    for (int n = a.all ? 1 : a.size; n <= a.size; ++n) {
      guard(catalan(n), "binary trees");
      for (const auto& b : enumerate_binary_trees(n)) list.push_back(zeta_json(b, a.roundtrip));
    }
    emit(Json{{"pairs", list}});
    return;
  }
  if (a.which == "theta" && !a.cycle.empty()) {
    emit(theta_json(TwoColouredCycle::parse(a.cycle), a.roundtrip));
    return;
  }
  if (a.file.empty()) throw InputError("bijection needs an input file, --size (zeta), --cycle (theta) or --max-size");
  const TreeDocument doc = read_document(a.file);
  if (a.which == "zeta") {
    const auto* b = std::get_if<BinaryTree>(&doc);
    if (!b) throw InputError("zeta needs a binary document");
    emit(zeta_json(*b, a.roundtrip));
    return;
  }
  const auto* t = std::get_if<Nat>(&doc);
  if (!t) throw InputError(a.which + " needs a nat document");
  require_valid(*t);
  if (t->empty()) throw InputError(a.which + " needs a non-empty NAT");
  if (a.which == "phi") emit(phi_json(*t, a.roundtrip));
  else if (a.which == "psi") emit(psi_json(*t, a.roundtrip));
  else emit(theta_json(recolour(psi(*t), t->w_l(), t->w_r()), a.roundtrip));
}

// ----------------------------------------------------------------- series

struct SeriesArgs {
  std::string which;
  int order = 6, d = 3, k = 1;
  bool diff = false, csv = false;
};

Rational max_abs_coefficient(const TruncSeries& s) {
  Rational best = 0;
  for (const auto& [e, c] : s.terms())
    for (const auto& [m, r] : c.terms()) best = std::max(best, Rational(abs(r)));
  return best;
}

// Weighted sum over NATs with w_L + w_R - 2 <= order of
// alpha^LO beta^RO z^hook x^{w_L-1} y^{w_R-1} / ((w_L-1)! (w_R-1)!).
TruncSeries enumerated_hook_gf(int order) {
  TruncSeries s(2, order);
  for (int i = 1; i <= order + 1; ++i)
    for (int j = 1; i + j - 2 <= order; ++j)
      for (const auto& t : nats_of_size(i, j)) {
        const NatStats st = nat_stats(t);
        Monomial m = make_monomial({{Param::alpha, st.lo}, {Param::beta, st.ro}, {Param::z, st.hook}});
        s.add_to_coeff({i - 1, j - 1},
                       ParamPoly::term(m, Rational(1) / Rational(factorial(i - 1) * factorial(j - 1))));
      }
  return s;
}

Integer factorial_power(int n, int d) {
  Integer out = 1;
  for (int i = 0; i < d; ++i) out *= factorial(static_cast<unsigned>(n));
  return out;
}

TruncSeries dd_closed(int d, int order) {
  TruncSeries s(d, order);
  for (int n = 0; n * d <= order; ++n)
    s.add_to_coeff(TruncSeries::Exponent(static_cast<std::size_t>(d), n),
                   ParamPoly(Rational(1) / Rational(factorial_power(n, d))));
  return s;
}

void print_csv(const TruncSeries& s, const std::vector<std::string>& names, const std::string& label) {
  std::cout << "series";
  for (const auto& n : names) std::cout << "," << n;
  std::cout << ",coeff\n";
  for (const auto& row : to_json(s)) {
    std::cout << label;
    for (const auto& e : row["exponent"]) std::cout << "," << e.get<int>();
    std::ostringstream coeff;
    bool first = true;
    for (const auto& term : row["coeff"]) {
      if (!first) coeff << " + ";
      first = false;
      const std::string m = term["monomial"], c = term["coeff"];
      if (m == "1") coeff << c;
      else if (c == "1") coeff << m;
      else coeff << c << "*" << m;
    }
    std::cout << ",\"" << coeff.str() << "\"\n";
  }
}

void run_series(const SeriesArgs& a) {
  check_order(a.order);
  std::vector<std::string> names{"x", "y"};
  TruncSeries s(1, 0);
  std::optional<TruncSeries> closed, second;
  if (a.which == "N") {
    s = solve_N(a.order);
    closed = closed_N(a.order);
  } else if (a.which == "M") {
    s = solve_M(a.order);
    closed = closed_M(a.order);
  } else if (a.which == "N_ab") {
    s = solve_N_ab(a.order);
    closed = closed_N_ab(a.order);
  } else if (a.which == "hookgf") {
    s = closed_hook_gf(a.order);
    if (a.diff) closed = enumerated_hook_gf(a.order);
  } else if (a.which == "Ndk") {
    check_dk(a.d, a.k);
    s = solve_N_dk(a.d, a.k, a.order);
    names.clear();
    for (int i = 1; i <= a.d; ++i) names.push_back("x" + std::to_string(i));
    if (a.d == 2 && a.k == 1) closed = closed_N(a.order);
    else if (a.d == a.k) closed = dd_closed(a.d, a.order);
    else if (a.diff) throw InputError("no closed form for (d,k) = (" + std::to_string(a.d) + "," + std::to_string(a.k) + ")");
  } else if (a.which == "BpOp") {
    auto [b, o] = solve_Bp_Op(a.order);
    s = b;
    second = o;
    closed = o;
    names = {"x"};
  } else {
    throw InputError("unknown series '" + a.which + "'");
  }
  if (a.csv) {
    print_csv(s, names, second ? "Bp" : a.which);
    if (second) {
      std::cout << "\n";
      print_csv(*second, names, "Op");
    }
    return;
  }
  Json out{{"series", a.which}, {"order", a.order}, {"variables", names}};
  if (a.which == "Ndk") out["dim"] = {a.d, a.k};
  if (second) {
    out["Bp"] = to_json(s);
    out["Op"] = to_json(*second);
  } else {
    out["coefficients"] = to_json(s);
  }
  if (a.diff && closed) out["difference"] = to_string(max_abs_coefficient(s - *closed));
  emit(out);
}

// -------------------------------------------------------------- histogram

struct HistogramArgs {
  std::string size, stat;
  int binary_size = 0, ordered_edges = 0;
};

void run_histogram(const HistogramArgs& a) {
  std::map<int, Integer> hist;
  if (a.binary_size > 0) {
    if (a.stat != "hook") throw InputError("binary trees support --stat hook");
    check_resource(a.binary_size, "tree size");
    guard(catalan(a.binary_size), "binary trees");
    for (const auto& b : enumerate_binary_trees(a.binary_size)) ++hist[hook_count(b)];
  } else if (a.ordered_edges > 0) {
    if (a.stat != "childleaf") throw InputError("ordered trees support --stat childleaf");
    check_resource(a.ordered_edges, "tree size");
    guard(catalan(a.ordered_edges), "ordered trees");
    for (const auto& o : enumerate_ordered_trees(a.ordered_edges)) ++hist[childleaf_count(o)];
  } else {
    if (a.size.empty()) throw InputError("histogram needs --size, --binary-size or --ordered-edges");
    const auto [i, j] = parse_size(a.size);
    if (a.stat != "hook" && a.stat != "ce" && a.stat != "lo" && a.stat != "ro")
      throw InputError("NAT histograms support --stat hook|ce|lo|ro");
    for (const auto& t : nats_of_size(i, j)) {
      const NatStats st = nat_stats(t);
      int value = st.hook;
      if (a.stat == "lo") value = st.lo;
      if (a.stat == "ro") value = st.ro;
      if (a.stat == "ce") {
        const TwoColouredCycle w = omega(recolour(psi(t), i, j));
        value = ce(theta(w), w.reds(), w.blues());
      }
      ++hist[value];
    }
  }
  std::cout << a.stat << ",count\n";
  for (const auto& [v, n] : hist) std::cout << v << "," << to_string(n) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-ambiguous trees: counting, bijections, series and histograms"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count NATs of a size or of a shape");
  c->add_option("--size", count.size, "IxJ geometric size, or a vertex count with --dim");
  c->add_option("--shape", count.shape, "Tree document (binary, nat, dk or dknat)");
  c->add_flag("--alpha", count.alpha, "Keep alpha (left branch) in the count");
  c->add_flag("--beta", count.beta, "Keep beta (right branch) in the count");
  c->add_option("--hook", count.hook, "Restrict to NATs with this many hooks")->check(CLI::PositiveNumber);
  c->add_option("--dim", count.dim, "d,k for (d,k) NATs");
  c->add_flag("--q", count.q, "Also give the q-hook formula of the shape");
  c->add_flag("--enumerate", count.enumerate, "Also count by exhaustive enumeration");

  BijectionArgs bij;
  auto* b = app.add_subcommand("bijection", "Apply phi, psi, theta or zeta");
  b->add_option("which", bij.which)->required()->check(CLI::IsMember({"phi", "psi", "theta", "zeta"}));
  b->add_option("file", bij.file, "Input document");
  b->add_option("--cycle", bij.cycle, "2-coloured cycle for theta, e.g. \"(b2 r1 b1)\"");
  b->add_flag("--verify-roundtrip", bij.roundtrip, "Check the inverse map");
  b->add_option("--max-size", bij.max_size, "Verify exhaustively up to this many vertices")->check(CLI::PositiveNumber);
  b->add_option("--size", bij.size, "zeta: binary trees with this many vertices")->check(CLI::PositiveNumber);
  b->add_flag("--all", bij.all, "zeta: all sizes from 1 to --size");

  SeriesArgs ser;
  auto* s = app.add_subcommand("series", "Expand a generating series");
  s->add_option("which", ser.which)->required()->check(CLI::IsMember({"N", "M", "N_ab", "hookgf", "Ndk", "BpOp"}));
  s->add_option("--order", ser.order, "Total degree truncation");
  s->add_option("--d", ser.d, "Dimension d for Ndk");
  s->add_option("--k", ser.k, "Direction size k for Ndk");
  s->add_flag("--diff-against-closed-form", ser.diff, "Report the largest coefficient difference");
  s->add_flag("--csv", ser.csv, "CSV coefficient table");

  HistogramArgs hist;
  auto* h = app.add_subcommand("histogram", "Statistic histogram as CSV");
  h->add_option("--size", hist.size, "IxJ geometric size");
  h->add_option("--stat", hist.stat, "hook, ce, lo, ro, or childleaf")->required();
  h->add_option("--binary-size", hist.binary_size, "Binary trees with n vertices")->check(CLI::PositiveNumber);
  h->add_option("--ordered-edges", hist.ordered_edges, "Ordered trees with n edges")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*c) run_count(count);
    else if (*b) run_bijection(bij);
    else if (*s) run_series(ser);
    else run_histogram(hist);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
