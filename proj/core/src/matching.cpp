#include "packdom/matching.hpp"

#include <deque>
#include <limits>

#include "packdom/errors.hpp"

namespace packdom {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

BipartiteMatcher::BipartiteMatcher(std::size_t left, std::size_t right)
    : right_count_(right), adj_(left) {}

void BipartiteMatcher::add_edge(std::size_t l, std::size_t r) {
  if (l >= adj_.size() || r >= right_count_) {
    throw InvalidInput("bipartite edge out of range");
  }
  adj_[l].push_back(r);
}

bool BipartiteMatcher::layer() {
  std::deque<std::size_t> queue;
  bool reached_free = false;
  for (std::size_t l = 0; l < adj_.size(); ++l) {
    if (mate_left_[l] == kNone) {
      level_[l] = 0;
      queue.push_back(l);
    } else {
      level_[l] = kNone;
    }
  }
  while (!queue.empty()) {
    std::size_t l = queue.front();
    queue.pop_front();
    for (std::size_t r : adj_[l]) {
      std::size_t next = mate_right_[r];
      if (next == kNone) {
        reached_free = true;
      } else if (level_[next] == kNone) {
        level_[next] = level_[l] + 1;
        queue.push_back(next);
      }
    }
  }
  return reached_free;
}

bool BipartiteMatcher::augment(std::size_t l) {
  for (std::size_t r : adj_[l]) {
    std::size_t next = mate_right_[r];
    if (next == kNone || (level_[next] == level_[l] + 1 && augment(next))) {
      mate_left_[l] = r;
      mate_right_[r] = l;
      return true;
    }
  }
  level_[l] = kNone;
  return false;
}

std::size_t BipartiteMatcher::solve() {
  mate_left_.assign(adj_.size(), kNone);
  mate_right_.assign(right_count_, kNone);
  level_.assign(adj_.size(), kNone);
  std::size_t size = 0;
  while (layer()) {
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (mate_left_[l] == kNone && augment(l)) ++size;
    }
  }
  return size;
}

std::optional<std::size_t> BipartiteMatcher::mate_of_left(std::size_t l) const {
  if (l >= mate_left_.size() || mate_left_[l] == kNone) return std::nullopt;
  return mate_left_[l];
}

std::optional<std::size_t> BipartiteMatcher::mate_of_right(std::size_t r) const {
  if (r >= mate_right_.size() || mate_right_[r] == kNone) return std::nullopt;
  return mate_right_[r];
}

}  // namespace packdom
