#include "packdom/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "packdom/errors.hpp"
#include "packdom/generators.hpp"
#include "packdom/io.hpp"
#include "packdom/packing.hpp"
#include "packdom/random.hpp"

namespace packdom {

std::optional<SearchMode> parse_search_mode(std::string_view name) {
  for (auto m : {SearchMode::tight3, SearchMode::conj2rho, SearchMode::delta4}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::tight3: return "tight3";
    case SearchMode::conj2rho: return "conj2rho";
    case SearchMode::delta4: return "delta4";
  }
  return "?";
}

namespace {

struct Verdict {
  bool hit = false;
  bool excluded = false;
  SearchHit data;
};

/// Evaluates `work(i)` for i in [0, count) on a pool of threads; results are
/// stored by index so the output order never depends on scheduling.
template <typename Fn>
std::vector<Verdict> fan_out(std::size_t count, std::size_t workers, Fn work) {
  std::vector<Verdict> out(count);
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

SearchHit describe(const Graph& g) {
  SearchHit h;
  h.graph6 = format_graph6(g);
  h.order = g.order();
  h.max_degree = g.max_degree();
  h.rho = packing_number_bruteforce(g);
  h.gamma = dom_number_bruteforce(g);
  h.i = idom_number_bruteforce(g);
  h.catalog_name = identify(g);
  return h;
}

}  // namespace

SearchReport run_search(const SearchOptions& options) {
  SearchReport report;
  report.mode = options.mode;
  report.max_n = options.max_n;
  report.seed = options.seed;

  std::vector<Graph> graphs;
  if (options.mode == SearchMode::delta4) {
    if (options.max_n > OracleLimits{}.max_vertices) {
      throw GuardExceeded("delta4 sampling is limited to " +
                          std::to_string(OracleLimits{}.max_vertices) + " vertices");
    }
    if (options.max_n < 2) throw InvalidInput("delta4 needs max-n >= 2");
    Rng rng(options.seed);
    for (std::size_t k = 0; k < options.budget; ++k) {
      const auto n = 2 + rng.below(options.max_n - 1);
      graphs.push_back(random_connected_bounded_degree(n, 4, rng.next()));
    }
  } else {
    if (options.max_n > kMaxEnumerationOrder) {
      throw GuardExceeded("exhaustive search is limited to " +
                          std::to_string(kMaxEnumerationOrder) + " vertices");
    }
    for (std::size_t n = 1; n <= options.max_n; ++n) {
      auto level = enumerate_connected_subcubic(n);
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
  }
  report.examined = graphs.size();

  auto verdicts = fan_out(graphs.size(), options.workers, [&](std::size_t i) {
    const Graph& g = graphs[i];
    Verdict v;
    v.data = describe(g);
    const auto& d = v.data;
    switch (options.mode) {
      case SearchMode::tight3:
        v.hit = d.i == 3 * d.rho;
        break;
      case SearchMode::conj2rho:
        if (d.gamma > 2 * d.rho) {
          const bool exempt = d.catalog_name && *d.catalog_name != "k33";
          v.excluded = exempt;
          v.hit = !exempt;
        }
        break;
      case SearchMode::delta4:
        v.hit = d.i > d.max_degree * d.rho;
        break;
    }
    return v;
  });
  for (auto& v : verdicts) {
    if (v.hit) report.hits.push_back(std::move(v.data));
    if (v.excluded) report.excluded.push_back(std::move(v.data));
  }
  return report;
}

}  // namespace packdom
