#include "scldpc/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace scldpc {

namespace {

// Accepts "0 1 1" (token per entry) and "011" (one char per entry).
std::vector<char> row_symbols(const std::string& line) {
  std::vector<char> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok.size() == 1) {
      out.push_back(tok[0]);
    } else {
      for (char ch : tok) out.push_back(ch);
    }
  }
  return out;
}

}  // namespace

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
  std::vector<std::vector<char>> parsed;
  for (const auto& line : rows) parsed.push_back(row_symbols(line));
  if (parsed.empty()) throw validation_error("matrix needs at least one row");
  size_t cols = parsed[0].size();
  BinaryMatrix m(static_cast<int>(parsed.size()), static_cast<int>(cols));
  for (size_t r = 0; r < parsed.size(); ++r) {
    if (parsed[r].size() != cols) throw validation_error("ragged matrix rows");
    for (size_t c = 0; c < cols; ++c) {
      char ch = parsed[r][c];
      if (ch != '0' && ch != '1') throw validation_error("binary matrix entries must be 0 or 1");
      m.set(static_cast<int>(r), static_cast<int>(c), ch == '1' ? 1 : 0);
    }
  }
  return m;
}

TernaryMatrix TernaryMatrix::from_rows(const std::vector<std::string>& rows) {
  std::vector<std::vector<char>> parsed;
  for (const auto& line : rows) parsed.push_back(row_symbols(line));
  if (parsed.empty()) throw validation_error("matrix needs at least one row");
  size_t cols = parsed[0].size();
  TernaryMatrix m(static_cast<int>(parsed.size()), static_cast<int>(cols));
  for (size_t r = 0; r < parsed.size(); ++r) {
    if (parsed[r].size() != cols) throw validation_error("ragged matrix rows");
    for (size_t c = 0; c < cols; ++c) {
      PEntry v;
      switch (parsed[r][c]) {
        case '0': v = PEntry::H0; break;
        case '1': v = PEntry::H1; break;
        case 'X': case 'x': v = PEntry::X; break;
        default: throw validation_error("partition entries must be 0, 1 or X");
      }
      m.set(static_cast<int>(r), static_cast<int>(c), v);
    }
  }
  return m;
}

void SparseBinaryMatrix::sort_adjacency() {
  for (auto& a : row_adj) std::sort(a.begin(), a.end());
  for (auto& a : col_adj) std::sort(a.begin(), a.end());
}

bool SparseBinaryMatrix::get(int r, int c) const {
  const auto& a = row_adj[r];
  return std::binary_search(a.begin(), a.end(), c);
}

SparseBinaryMatrix SparseBinaryMatrix::from_dense(const BinaryMatrix& m) {
  SparseBinaryMatrix s(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) s.add_edge(r, c);
  return s;  // dense scan emits sorted order already
}

BinaryMatrix SparseBinaryMatrix::to_dense() const {
  BinaryMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c : row_adj[r]) m.set(r, c, 1);
  return m;
}

}  // namespace scldpc
