#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hypergraph.hpp"
#include "loose.hpp"

namespace hyperloose {

enum class SearchStatus { found, none, unknown };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::unknown: return "unknown";
  }
  return "?";
}

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<T> value;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
};

// Depth-first construction of a loose path window by window. The sequence
// starts with `prefix` (which must end at a joint) and terminates in `end`;
// for cycles `end` is prefix.front() and is not repeated.
struct PathQuery {
  const Hypergraph* g = nullptr;
  VertexList prefix;
  Vertex end = 0;
  bool cycle = false;
  std::vector<char> allowed;   // vertices usable after the prefix (end excluded)
  std::vector<char> required;  // allowed vertices the path must contain
  std::size_t exact_order = 0; // 0 = any order
  bool spanning = false;       // every allowed vertex must be used
  std::function<bool(const VertexList&)> accept;
  // Orders candidate windows; lexicographic when unset.
  bool prefer_required = false;
  std::uint64_t budget = 1'000'000;
};

namespace detail {

struct BudgetHit {};

class PathSearcher {
 public:
  explicit PathSearcher(const PathQuery& q) : q_(q), g_(*q.g), k_(g_.k()) {}

  SearchResult<VertexList> run() {
    SearchResult<VertexList> out;
    const std::size_t n = g_.n();
    used_.assign(n, 0);
    for (Vertex v : q_.prefix) used_[v] = 1;
    seq_ = q_.prefix;
    std::size_t free_allowed = 0;
    missing_ = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!q_.allowed[v] || used_[v] || v == q_.end) continue;
      ++free_allowed;
      if (!q_.required.empty() && q_.required[v]) ++missing_;
    }
    order_ = q_.exact_order;
    if (q_.spanning) order_ = q_.prefix.size() + free_allowed + (q_.cycle ? 0 : 1);
    if (order_ != 0) {
      std::size_t base = q_.cycle ? order_ : order_ - 1;
      if (base % (k_ - 1) != 0 || order_ < q_.prefix.size() + (q_.cycle ? k_ - 1 : 1)) return out;
      total_windows_ = base / (k_ - 1);
    } else {
      total_windows_ = (q_.prefix.size() - 1 + free_allowed + 1) / (k_ - 1);
    }
    done_windows_ = (q_.prefix.size() - 1) / (k_ - 1);
    try {
      bool ok = step();
      out.status = ok ? SearchStatus::found : SearchStatus::none;
      if (ok) out.value = seq_;
    } catch (BudgetHit&) {
      out.status = SearchStatus::unknown;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  bool is_free(Vertex v) const { return q_.allowed[v] && !used_[v] && v != q_.end; }
  bool is_required(Vertex v) const { return !q_.required.empty() && q_.required[v]; }

  void tick() {
    if (++nodes_ > q_.budget) throw BudgetHit{};
  }

  // Every free vertex must still lie on a usable edge, and the free vertices
  // must be connected to the current joint and to the terminal through them.
  bool feasible(Vertex cur) {
    const std::size_t n = g_.n();
    auto avail = [&](Vertex v) { return is_free(v) || v == cur || v == q_.end; };
    auto usable = [&](EdgeId e) {
      for (Vertex v : g_.edge(e))
        if (!avail(v)) return false;
      return true;
    };
    mark_.assign(n, 0);
    std::vector<Vertex> stack{cur};
    mark_[cur] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g_.incident(v)) {
        if (!usable(e)) continue;
        for (Vertex w : g_.edge(e))
          if (!mark_[w]) {
            mark_[w] = 1;
            if (w != q_.end) stack.push_back(w);
          }
      }
    }
    if (!mark_[q_.end]) return false;
    for (Vertex v = 0; v < n; ++v)
      if (is_free(v) && !mark_[v]) return false;
    return true;
  }

  struct Move {
    EdgeId edge;
    Vertex next;
    int score;
  };

  bool finish_ok() {
    if (missing_ != 0) return false;
    return !q_.accept || q_.accept(seq_);
  }

  bool try_last(Vertex cur) {
    // Window {cur, k-2 free vertices, end}.
    for (EdgeId e : g_.incident(cur)) {
      auto ev = g_.edge(e);
      if (!std::binary_search(ev.begin(), ev.end(), q_.end)) continue;
      bool ok = true;
      for (Vertex v : ev)
        if (v != cur && v != q_.end && !is_free(v)) ok = false;
      if (!ok) continue;
      tick();
      std::size_t mark = seq_.size();
      std::size_t gained = 0;
      for (Vertex v : ev)
        if (v != cur && v != q_.end) {
          seq_.push_back(v);
          used_[v] = 1;
          gained += is_required(v);
        }
      if (!q_.cycle) seq_.push_back(q_.end);
      missing_ -= gained;
      bool done = finish_ok();
      missing_ += gained;
      if (done) return true;
      for (std::size_t i = mark; i < seq_.size(); ++i)
        if (seq_[i] != q_.end) used_[seq_[i]] = 0;
      seq_.resize(mark);
    }
    return false;
  }

  bool step() {
    Vertex cur = seq_.back();
    bool fixed = order_ != 0;
    if (fixed && done_windows_ + 1 == total_windows_) return try_last(cur);
    if (!fixed) {
      if (missing_ <= k_ - 2 && try_last(cur)) return true;
      if (done_windows_ + 2 > total_windows_) return false;
    }
    std::vector<Move> moves;
    for (EdgeId e : g_.incident(cur)) {
      auto ev = g_.edge(e);
      bool ok = true;
      int score = 0;
      for (Vertex v : ev) {
        if (v == cur) continue;
        if (!is_free(v)) {
          ok = false;
          break;
        }
        score += is_required(v);
      }
      if (!ok) continue;
      for (Vertex b : ev)
        if (b != cur) moves.push_back({e, b, score});
    }
    if (q_.prefer_required)
      std::stable_sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) { return a.score > b.score; });
    for (const Move& mv : moves) {
      tick();
      std::size_t mark = seq_.size();
      for (Vertex v : g_.edge(mv.edge))
        if (v != cur && v != mv.next) seq_.push_back(v);
      seq_.push_back(mv.next);
      for (std::size_t i = mark; i < seq_.size(); ++i) used_[seq_[i]] = 1;
      missing_ -= static_cast<std::size_t>(mv.score);
      ++done_windows_;
      bool ok = !q_.spanning || feasible(mv.next);
      if (ok && step()) return true;
      --done_windows_;
      missing_ += static_cast<std::size_t>(mv.score);
      for (std::size_t i = mark; i < seq_.size(); ++i) used_[seq_[i]] = 0;
      seq_.resize(mark);
    }
    return false;
  }

  const PathQuery& q_;
  const Hypergraph& g_;
  std::size_t k_;
  std::vector<char> used_, mark_;
  VertexList seq_;
  std::size_t missing_ = 0;
  std::size_t order_ = 0;
  std::size_t total_windows_ = 0;
  std::size_t done_windows_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline SearchResult<VertexList> search_path(const PathQuery& q) {
  require(q.g != nullptr && !q.prefix.empty(), ErrorKind::invalid_query, "search needs a host and a start");
  require(q.g->k() >= 2, ErrorKind::invalid_query, "uniformity below 2");
  require((q.prefix.size() - 1) % (q.g->k() - 1) == 0, ErrorKind::invalid_query, "prefix must end at a joint");
  return detail::PathSearcher(q).run();
}

}  // namespace hyperloose
