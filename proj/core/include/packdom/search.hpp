#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "packdom/graph.hpp"

namespace packdom {

enum class SearchMode {
  /// Connected subcubic graphs with i = 3 rho.
  tight3,
  /// Connected subcubic graphs with gamma > 2 rho.
  conj2rho,
  /// Random connected graphs with maximum degree four; i > Delta rho.
  delta4,
};

std::optional<SearchMode> parse_search_mode(std::string_view name);
std::string to_string(SearchMode mode);

struct SearchOptions {
  SearchMode mode = SearchMode::tight3;
  std::size_t max_n = 8;
  std::uint64_t seed = 1;
  /// Number of sampled graphs for delta4; unused by the exhaustive modes.
  std::size_t budget = 1000;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t workers = 0;
};

struct SearchHit {
  std::string graph6;
  std::size_t order = 0;
  std::size_t max_degree = 0;
  std::size_t rho = 0;
  std::size_t gamma = 0;
  std::size_t i = 0;
  std::optional<std::string> catalog_name;
};

struct SearchReport {
  SearchMode mode = SearchMode::tight3;
  std::size_t max_n = 0;
  std::uint64_t seed = 0;
  std::size_t examined = 0;
  /// Graphs satisfying the mode's predicate.
  std::vector<SearchHit> hits;
  /// conj2rho only: catalog graphs h1, wagner and petersen, which match the
  /// predicate and are listed separately.
  std::vector<SearchHit> excluded;
};

/// Exhaustive modes walk n = 1..max_n in canonical order; delta4 samples
/// `budget` graphs with n drawn from [2, max_n]. Results are aggregated in
/// input order whatever the worker count.
SearchReport run_search(const SearchOptions& options);

}  // namespace packdom
