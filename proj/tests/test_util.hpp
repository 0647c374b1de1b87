#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "lamptree/errors.hpp"

namespace testutil {

// Error code raised by a callable, or nullopt when it returns normally.
template <class F>
std::optional<lamptree::errc> code_of(F&& f) {
  try {
    std::forward<F>(f)();
    return std::nullopt;
  } catch (const lamptree::error& e) {
    return e.code();
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace testutil
