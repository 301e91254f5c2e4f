#pragma once

// Models shared across test cases, built once per process.

#include <memory>
#include <sstream>

#include "dpar/model.hpp"
#include "dpar/strength.hpp"
#include "support.hpp"

namespace dpar::testing {

inline const std::vector<std::string>& rockyou_lines() {
  static const auto lines = read_lines(DPAR_TEST_DATA "/rockyou-75.txt");
  return lines;
}

/// Scorer over the bundled list with every line counted once.
inline const Scorer& rockyou_scorer() {
  static const Scorer scorer = [] {
    std::string text;
    for (const auto& l : rockyou_lines()) text += l + "\n";
    std::istringstream in(text);
    auto model = std::make_shared<const Model>(train(in, L33tTable::default_table()).model);
    return Scorer(model, L33tTable::default_table());
  }();
  return scorer;
}

}  // namespace dpar::testing
