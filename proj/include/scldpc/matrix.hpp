#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scldpc {

// Thrown on bad user-supplied parameters or malformed input files. The CLI
// maps this to exit code 2; everything else (I/O failures etc.) maps to 3.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense 0/1 matrix, row-major. Used for protograph-scale objects (a few
// hundred rows at most); lifted parity-check matrices use SparseBinaryMatrix.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw validation_error("matrix dims must be non-negative");
  }
  BinaryMatrix(int rows, int cols, const std::vector<uint8_t>& entries)
      : rows_(rows), cols_(cols), data_(entries) {
    if (data_.size() != static_cast<size_t>(rows) * cols)
      throw validation_error("entry count does not match matrix dims");
    for (uint8_t v : data_)
      if (v > 1) throw validation_error("binary matrix entries must be 0 or 1");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint8_t get(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, uint8_t v) { data_[static_cast<size_t>(r) * cols_ + c] = v; }

  int row_weight(int r) const {
    int w = 0;
    for (int c = 0; c < cols_; ++c) w += get(r, c);
    return w;
  }
  int col_weight(int c) const {
    int w = 0;
    for (int r = 0; r < rows_; ++r) w += get(r, c);
    return w;
  }
  long long weight() const {
    long long w = 0;
    for (uint8_t v : data_) w += v;
    return w;
  }

  bool operator==(const BinaryMatrix&) const = default;

  // Parses rows like "0 1 1" or "011"; used by tests and file I/O.
  static BinaryMatrix from_rows(const std::vector<std::string>& rows);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<uint8_t> data_;
};

// Ternary partition entry: circulant goes to H0, to H1, or is removed (X).
enum class PEntry : uint8_t { H0 = 0, H1 = 1, X = 2 };

class TernaryMatrix {
 public:
  TernaryMatrix() = default;
  TernaryMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, PEntry::H0) {
    if (rows < 0 || cols < 0) throw validation_error("matrix dims must be non-negative");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PEntry get(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, PEntry v) { data_[static_cast<size_t>(r) * cols_ + c] = v; }

  bool operator==(const TernaryMatrix&) const = default;

  // Parses rows of {0,1,X} tokens, e.g. "0 1 X" or "01X".
  static TernaryMatrix from_rows(const std::vector<std::string>& rows);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<PEntry> data_;
};

// Bipartite adjacency view: rows are check nodes, columns are variable nodes.
// Adjacency lists are kept sorted ascending.
struct SparseBinaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int32_t>> row_adj;
  std::vector<std::vector<int32_t>> col_adj;

  SparseBinaryMatrix() = default;
  SparseBinaryMatrix(int r, int c) : rows(r), cols(c), row_adj(r), col_adj(c) {}

  void add_edge(int r, int c) {
    row_adj[r].push_back(c);
    col_adj[c].push_back(r);
  }
  void sort_adjacency();
  size_t edge_count() const {
    size_t e = 0;
    for (const auto& a : row_adj) e += a.size();
    return e;
  }
  bool get(int r, int c) const;

  static SparseBinaryMatrix from_dense(const BinaryMatrix& m);
  BinaryMatrix to_dense() const;
};

}  // namespace scldpc
