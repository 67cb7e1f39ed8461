#include "scldpc/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace scldpc {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write file: " + path);
  out << content;
  if (!out) throw validation_error("write failed: " + path);
}

namespace {

struct MatrixText {
  int gamma_c = -1, gamma_l = -1;
  std::vector<std::string> rows;
};

// Strips comments/blanks, parses the header, and collects row tokens with
// whitespace removed (entries may be spaced out or contiguous).
MatrixText parse_matrix_text(const std::string& text) {
  MatrixText out;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string stripped;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) stripped.push_back(ch);
    if (stripped.empty()) continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string tok;
      while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw validation_error("matrix header must be gamma_c=<n> gamma_l=<n>");
        std::string key = tok.substr(0, eq);
        int val;
        try {
          val = std::stoi(tok.substr(eq + 1));
        } catch (const std::exception&) {
          throw validation_error("bad integer in matrix header: " + tok);
        }
        if (key == "gamma_c") out.gamma_c = val;
        else if (key == "gamma_l") out.gamma_l = val;
        else throw validation_error("unknown matrix header key: " + key);
      }
      if (out.gamma_c < 0 || out.gamma_l < 0)
        throw validation_error("matrix header must set gamma_c and gamma_l");
      have_header = true;
    } else {
      out.rows.push_back(stripped);
    }
  }
  if (!have_header) throw validation_error("missing matrix header");
  if (out.rows.empty()) throw validation_error("matrix has no rows");
  return out;
}

}  // namespace

std::string format_protograph(const Protograph& b) {
  std::ostringstream out;
  out << "gamma_c=" << b.gamma_c() << " gamma_l=" << b.gamma_l() << "\n";
  for (int i = 0; i < b.matrix().rows(); ++i) {
    for (int j = 0; j < b.matrix().cols(); ++j) {
      if (j) out << ' ';
      out << int(b.matrix().get(i, j));
    }
    out << "\n";
  }
  return out.str();
}

Protograph parse_protograph(const std::string& text) {
  MatrixText mt = parse_matrix_text(text);
  for (const std::string& row : mt.rows)
    for (char ch : row)
      if (ch != '0' && ch != '1')
        throw validation_error("protograph entries must be 0 or 1");
  return Protograph(BinaryMatrix::from_rows(mt.rows), mt.gamma_c, mt.gamma_l);
}

std::string format_partition(const PartitionMatrix& p) {
  std::ostringstream out;
  out << "gamma_c=" << p.gamma_c() << " gamma_l=" << p.gamma_l() << "\n";
  for (int i = 0; i < p.matrix().rows(); ++i) {
    for (int j = 0; j < p.matrix().cols(); ++j) {
      if (j) out << ' ';
      PEntry e = p.matrix().get(i, j);
      out << (e == PEntry::H0 ? '0' : e == PEntry::H1 ? '1' : 'X');
    }
    out << "\n";
  }
  return out.str();
}

PartitionMatrix parse_partition(const std::string& text) {
  MatrixText mt = parse_matrix_text(text);
  return PartitionMatrix(TernaryMatrix::from_rows(mt.rows), mt.gamma_c, mt.gamma_l);
}

nlohmann::json protograph_to_json(const Protograph& b) {
  nlohmann::json j;
  j["gamma_c"] = b.gamma_c();
  j["gamma_l"] = b.gamma_l();
  j["kappa"] = b.kappa();
  std::vector<std::string> rows;
  for (int i = 0; i < b.matrix().rows(); ++i) {
    std::string row;
    for (int c = 0; c < b.matrix().cols(); ++c) row.push_back(b.matrix().get(i, c) ? '1' : '0');
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Protograph protograph_from_json(const nlohmann::json& j) {
  std::vector<std::string> rows = j.at("rows").get<std::vector<std::string>>();
  return Protograph(BinaryMatrix::from_rows(rows), j.at("gamma_c").get<int>(),
                    j.at("gamma_l").get<int>());
}

nlohmann::json partition_to_json(const PartitionMatrix& p) {
  nlohmann::json j;
  j["gamma_c"] = p.gamma_c();
  j["gamma_l"] = p.gamma_l();
  j["kappa"] = p.matrix().cols();
  std::vector<std::string> rows;
  for (int i = 0; i < p.matrix().rows(); ++i) {
    std::string row;
    for (int c = 0; c < p.matrix().cols(); ++c) {
      PEntry e = p.matrix().get(i, c);
      row.push_back(e == PEntry::H0 ? '0' : e == PEntry::H1 ? '1' : 'X');
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

PartitionMatrix partition_from_json(const nlohmann::json& j) {
  std::vector<std::string> rows = j.at("rows").get<std::vector<std::string>>();
  return PartitionMatrix(TernaryMatrix::from_rows(rows), j.at("gamma_c").get<int>(),
                         j.at("gamma_l").get<int>());
}

std::string to_alist(const SparseBinaryMatrix& h) {
  std::ostringstream out;
  int m = h.rows, n = h.cols;
  size_t max_col = 0, max_row = 0;
  for (const auto& adj : h.col_adj) max_col = std::max(max_col, adj.size());
  for (const auto& adj : h.row_adj) max_row = std::max(max_row, adj.size());
  out << n << ' ' << m << "\n" << max_col << ' ' << max_row << "\n";
  for (int c = 0; c < n; ++c) out << h.col_adj[c].size() << (c + 1 < n ? ' ' : '\n');
  for (int r = 0; r < m; ++r) out << h.row_adj[r].size() << (r + 1 < m ? ' ' : '\n');
  for (int c = 0; c < n; ++c) {
    for (size_t k = 0; k < max_col; ++k) {
      if (k) out << ' ';
      out << (k < h.col_adj[c].size() ? h.col_adj[c][k] + 1 : 0);
    }
    out << "\n";
  }
  for (int r = 0; r < m; ++r) {
    for (size_t k = 0; k < max_row; ++k) {
      if (k) out << ' ';
      out << (k < h.row_adj[r].size() ? h.row_adj[r][k] + 1 : 0);
    }
    out << "\n";
  }
  return out.str();
}

SparseBinaryMatrix parse_alist(const std::string& text) {
  std::istringstream in(text);
  long long n, m, max_col, max_row;
  if (!(in >> n >> m >> max_col >> max_row)) throw validation_error("truncated alist header");
  if (n < 1 || m < 1) throw validation_error("alist dimensions must be positive");
  std::vector<long long> col_deg(n), row_deg(m);
  for (long long c = 0; c < n; ++c)
    if (!(in >> col_deg[c])) throw validation_error("truncated alist column degrees");
  for (long long r = 0; r < m; ++r)
    if (!(in >> row_deg[r])) throw validation_error("truncated alist row degrees");
  SparseBinaryMatrix h(static_cast<int>(m), static_cast<int>(n));
  for (long long c = 0; c < n; ++c) {
    for (long long k = 0; k < max_col; ++k) {
      long long r;
      if (!(in >> r)) throw validation_error("truncated alist column list");
      if (r == 0) continue;
      if (r < 1 || r > m) throw validation_error("alist row index out of range");
      h.add_edge(static_cast<int>(r - 1), static_cast<int>(c));
    }
    if (static_cast<long long>(h.col_adj[c].size()) != col_deg[c])
      throw validation_error("alist column degree mismatch");
  }
  // The row lists duplicate the column lists; validate degrees against them.
  for (long long r = 0; r < m; ++r)
    for (long long k = 0; k < max_row; ++k) {
      long long c;
      if (!(in >> c)) throw validation_error("truncated alist row list");
      if (c < 0 || c > n) throw validation_error("alist column index out of range");
    }
  h.sort_adjacency();
  for (long long r = 0; r < m; ++r)
    if (static_cast<long long>(h.row_adj[r].size()) != row_deg[r])
      throw validation_error("alist row degree mismatch");
  return h;
}

nlohmann::json code_geometry_json(const LiftedCode& code) {
  nlohmann::json j;
  j["p"] = code.p;
  j["gamma_c"] = code.gamma_c;
  j["gamma_l"] = code.gamma_l;
  j["kappa"] = code.kappa;
  j["coupling_length"] = code.coupling_length;
  j["memory"] = code.memory;
  j["rows"] = code.h.rows;
  j["cols"] = code.h.cols;
  j["design_rate"] = code.design_rate();
  return j;
}

LiftedCode lifted_code_from_parts(const SparseBinaryMatrix& h, const nlohmann::json& geometry) {
  LiftedCode code;
  code.h = h;
  code.p = geometry.at("p").get<int>();
  code.gamma_c = geometry.at("gamma_c").get<int>();
  code.gamma_l = geometry.at("gamma_l").get<int>();
  code.kappa = geometry.at("kappa").get<int>();
  code.coupling_length = geometry.at("coupling_length").get<int>();
  code.memory = geometry.at("memory").get<int>();
  if (geometry.at("rows").get<int>() != h.rows || geometry.at("cols").get<int>() != h.cols)
    throw validation_error("geometry does not match the parity-check matrix");
  return code;
}

uint64_t fnv1a64(const std::string& data) {
  uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : data) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

nlohmann::json make_manifest(const std::string& command, uint64_t seed,
                             const nlohmann::json& params) {
  nlohmann::json j;
  j["tool"] = "scldpc";
  j["command"] = command;
  j["seed"] = seed;
  j["params"] = params;
  return j;
}

std::string manifest_hash_hex(const nlohmann::json& manifest) {
  uint64_t h = fnv1a64(manifest.dump());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string ber_csv(const std::vector<BerPoint>& points, const std::string& mode,
                    const std::string& code_id, const std::string& manifest_hash) {
  std::ostringstream out;
  out << "# manifest=" << manifest_hash << "\n";
  out << "snr_db,ber,fer,frames,bit_errors,frame_errors,std_err,mode,code_id\n";
  out.precision(12);
  for (const BerPoint& p : points)
    out << p.snr_db << ',' << p.ber << ',' << p.fer << ',' << p.frames << ',' << p.bit_errors
        << ',' << p.frame_errors << ',' << p.std_err << ',' << mode << ',' << code_id << "\n";
  return out.str();
}

}  // namespace scldpc
