#pragma once

// Exact cover by Algorithm X on dancing links.
//
// Columns are the universe items 0..n-1, rows are candidate subsets. Column
// choice is deterministic: fewest remaining rows first, lowest index on ties;
// rows of a column are tried in insertion order. With rows inserted in
// lexicographic order the first solution found is therefore reproducible.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cobweb {

class ExactCover {
 public:
  explicit ExactCover(std::size_t columns) : column_count_(columns) {
    // node 0 is the root header, nodes 1..columns the column headers
    nodes_.resize(columns + 1);
    for (std::size_t c = 0; c <= columns; ++c) {
      Node& h = nodes_[c];
      h.left = c == 0 ? columns : c - 1;
      h.right = c == columns ? 0 : c + 1;
      h.up = h.down = c;
      h.column = c;
    }
    sizes_.assign(columns + 1, 0);
  }

  std::size_t column_count() const { return column_count_; }
  std::size_t row_count() const { return row_heads_.size(); }

  /// Adds a candidate row; `columns` must be distinct and < column_count().
  /// Returns the row id.
  std::size_t add_row(std::span<const std::size_t> columns) {
    const std::size_t row = row_heads_.size();
    std::size_t first = kNone;
    for (std::size_t col : columns) {
      if (col >= column_count_) throw std::out_of_range("ExactCover::add_row: column out of range");
      const std::size_t header = col + 1;
      const std::size_t id = nodes_.size();
      Node node;
      node.column = header;
      node.row = row;
      node.up = nodes_[header].up;
      node.down = header;
      if (first == kNone) {
        first = id;
        node.left = node.right = id;
      } else {
        node.left = nodes_[first].left;
        node.right = first;
      }
      nodes_.push_back(node);
      nodes_[nodes_[id].up].down = id;
      nodes_[header].up = id;
      if (id != first) {
        nodes_[nodes_[id].left].right = id;
        nodes_[first].left = id;
      }
      ++sizes_[header];
    }
    row_heads_.push_back(first);
    return row;
  }

  /// First exact cover in the deterministic search order, as row ids.
  std::optional<std::vector<std::size_t>> solve_first() {
    std::vector<std::size_t> partial;
    std::optional<std::vector<std::size_t>> found;
    search(partial, [&](const std::vector<std::size_t>& rows) {
      found = rows;
      return false;
    });
    return found;
  }

  /// Number of exact covers, stopping early once `limit` is reached.
  std::uint64_t count_all(std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) {
    std::vector<std::size_t> partial;
    std::uint64_t count = 0;
    search(partial, [&](const std::vector<std::size_t>&) { return ++count < limit; });
    return count;
  }

  /// Search nodes visited by the last call; useful for diagnostics.
  std::uint64_t nodes_visited() const { return visited_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Node {
    std::size_t left = 0, right = 0, up = 0, down = 0;
    std::size_t column = 0;
    std::size_t row = kNone;
  };

  void cover(std::size_t c) {
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
      for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
        nodes_[nodes_[j].down].up = nodes_[j].up;
        nodes_[nodes_[j].up].down = nodes_[j].down;
        --sizes_[nodes_[j].column];
      }
    }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
      for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
        ++sizes_[nodes_[j].column];
        nodes_[nodes_[j].down].up = j;
        nodes_[nodes_[j].up].down = j;
      }
    }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
  }

  // Returns false when the visitor asked to stop.
  template <typename Visitor>
  bool search(std::vector<std::size_t>& partial, Visitor&& visit) {
    if (partial.empty()) visited_ = 0;
    ++visited_;
    if (nodes_[0].right == 0) return visit(partial);

    std::size_t best = kNone;
    for (std::size_t c = nodes_[0].right; c != 0; c = nodes_[c].right) {
      if (best == kNone || sizes_[c] < sizes_[best]) best = c;
    }
    if (sizes_[best] == 0) return true;

    bool keep_going = true;
    cover(best);
    for (std::size_t r = nodes_[best].down; r != best && keep_going; r = nodes_[r].down) {
      partial.push_back(nodes_[r].row);
      for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
      keep_going = search(partial, visit);
      for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
      partial.pop_back();
    }
    uncover(best);
    return keep_going;
  }

  std::size_t column_count_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> row_heads_;
  std::uint64_t visited_ = 0;
};

}  // namespace cobweb
