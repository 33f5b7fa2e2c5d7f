#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "natree/natdk.hpp"
#include "natree/nat.hpp"
#include "natree/perms.hpp"
#include "natree/poly.hpp"
#include "natree/series.hpp"
#include "natree/trees.hpp"

namespace natree {

using Json = nlohmann::ordered_json;

/// Binary nodes are {"left": node|null, "right": node|null}; the empty
/// trees are the strings "empty_left" and "empty_right".
Json to_json(const BinaryTree& tree);
BinaryTree binary_from_json(const Json& j);

/// {"children": [node, ...]}
Json to_json(const OrderedTree& tree);
OrderedTree ordered_from_json(const Json& j);

/// {"children": {"1,3": node, ...}}, or {"empty": "1,3"}.
Json to_json(const DKTree& tree);
DKTree dk_from_json(int d, int k, const Json& j);

/// Labels as a path -> integer map over the non-root vertices.
Json labels_to_json(const Nat& t);
/// Labels as a path -> array map, null for the placeholder.
Json labels_to_json(const DKNat& t);

Json to_json(const ParamPoly& p);
ParamPoly poly_from_json(const Json& j);
Json to_json(const Permutation& sigma);
/// Coefficient table: [{"exponent": [..], "coeff": poly}, ...] by degree.
Json to_json(const TruncSeries& s);

using TreeDocument = std::variant<BinaryTree, OrderedTree, DKTree, Nat, DKNat>;

/// Documents carry "kind" and "shape"; "nat" and "dknat" add "labels",
/// "dk" and "dknat" add "d" and "k". Throws InputError on malformed input.
TreeDocument document_from_json(const Json& j);
Json document_to_json(const TreeDocument& doc);
TreeDocument read_document(const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace natree
