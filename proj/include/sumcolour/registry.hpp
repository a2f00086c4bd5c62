#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "sumcolour/product.hpp"

namespace sumcolour {

/// A named colouring of vectors. Ids look like "gamma72:k=2,m=1".
struct Colouring {
  std::string id;
  std::string name;
  std::map<std::string, std::uint64_t> params;
  std::size_t dim = 0;         // required vector length, 0 = any
  std::uint32_t colours = 1;   // values lie in [0, colours)
  std::function<std::uint32_t(const QVec&)> eval;

  std::uint32_t operator()(const QVec& x) const;
};

/// Registered names: band (k, m), gamma72 (k, m), tau144 (k), psiW (n, seed), identity.
/// Throws UnknownColouring for anything else, InvalidArgument for bad parameters.
Colouring resolve_colouring(std::string_view id);

/// "a/b" for one coordinate, or "(a/b, c/d, ...)" / "[...]" for several.
QVec parse_qvec(std::string_view text);
std::string format_qvec(const QVec& x);

}  // namespace sumcolour
