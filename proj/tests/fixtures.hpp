#pragma once

#include <string>

#include "natree/json_io.hpp"

namespace fixtures {

inline natree::Nat figure_nat(const std::string& name) {
  return std::get<natree::Nat>(natree::read_document(std::string(NATREE_DATA_DIR) + "/figures/" + name));
}

inline natree::BinaryTree figure_tree(const std::string& name) {
  return std::get<natree::BinaryTree>(natree::read_document(std::string(NATREE_DATA_DIR) + "/figures/" + name));
}

}  // namespace fixtures
