#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumcolour/product.hpp"

namespace sumcolour {

/// kX: all k-multisets of X; FSk: only k-subsets of distinct elements.
enum class SumMode { kX, FSk };

std::string to_string(SumMode mode);
SumMode parse_sum_mode(std::string_view text);

struct Ground {
  unsigned height = 1;
  std::size_t dim = 1;

  friend bool operator==(const Ground&, const Ground&) = default;
};

/// max(|a|, b) of a reduced rational a/b.
Integer height(const Rational& q);

/// All vectors with coordinates a/b, |a| <= H, 1 <= b <= H, sorted by vector
/// height (max over coordinates) and then lexicographically.
std::vector<QVec> enumerate_ground(unsigned H, std::size_t dim);

bool in_ground(const QVec& x, const Ground& g);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

std::string to_string(SearchStatus status);
SearchStatus parse_search_status(std::string_view text);

struct SearchOptions {
  std::string colouring;
  SumMode mode = SumMode::kX;
  std::uint64_t k = 2;
  Ground ground;
  std::size_t max_size = 1;
  std::uint64_t budget = 1'000'000;  // node expansions (element-add attempts)
  unsigned threads = 1;
};

/// Largest monochromatic set found, with the options that produced it.
struct SearchCert {
  std::string colouring;
  SumMode mode = SumMode::kX;
  std::uint64_t k = 2;
  Ground ground;
  std::size_t max_size = 1;
  std::uint64_t budget = 0;
  std::vector<QVec> witness;
  std::uint32_t colour = 0;
  bool exhaustive = false;
  SearchStatus status = SearchStatus::Exhausted;

  friend bool operator==(const SearchCert&, const SearchCert&) = default;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::size_t best_size = 0;
  std::uint64_t nodes = 0;
  SearchCert cert;
};

/// Every k-sum that X must keep inside one colour class, in a fixed order.
std::vector<QVec> required_sums(const std::vector<QVec>& X, SumMode mode, std::uint64_t k);

/// Branch and bound over (target colour, first element). Results do not
/// depend on `threads`. Throws UnknownColouring, InvalidArgument.
SearchResult search_mono(const SearchOptions& options);

}  // namespace sumcolour
