#include "k3enum/table_io.hpp"

#include <sstream>
#include <stdexcept>

#include "k3enum/series_json.hpp"

namespace k3enum {

namespace {

using nlohmann::json;

json generic_to_json(const GenusTable& t, const char* kind) {
  json entries = json::array();
  for (int g = 0; g <= t.g_max(); ++g) {
    json row = json::array();
    for (int c = t.first_column(); c <= t.last_column(); ++c) row.push_back(rational_to_json(t(g, c)));
    entries.push_back(std::move(row));
  }
  return json{{"kind", kind},
              {"g_max", t.g_max()},
              {"first_column", t.first_column()},
              {"last_column", t.last_column()},
              {"entries", std::move(entries)}};
}

template <typename Table>
Table generic_from_json(const json& j, const char* kind, int first_column) {
  try {
    if (!j.is_object()) throw std::invalid_argument("table JSON must be an object");
    if (j.contains("kind") && j.at("kind").get<std::string>() != kind) {
      throw std::invalid_argument("expected a table of kind " + std::string(kind) + ", got " + j.at("kind").get<std::string>());
    }
    const int g_max = j.at("g_max").get<int>();
    const int last = j.at("last_column").get<int>();
    if (j.contains("first_column") && j.at("first_column").get<int>() != first_column) {
      throw std::invalid_argument("table of kind " + std::string(kind) + " must start at column " + std::to_string(first_column));
    }
    Table t(g_max, last);
    const json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != g_max + 1) {
      throw std::invalid_argument("table needs g_max + 1 rows");
    }
    for (int g = 0; g <= g_max; ++g) {
      const json& row = entries.at(static_cast<std::size_t>(g));
      if (!row.is_array() || static_cast<int>(row.size()) != last - first_column + 1) {
        throw std::invalid_argument("table row " + std::to_string(g) + " has the wrong length");
      }
      for (int c = first_column; c <= last; ++c) t(g, c) = rational_from_json(row.at(static_cast<std::size_t>(c - first_column)));
    }
    return t;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

json table_to_json(const BpsTable& t) { return generic_to_json(t, "bps"); }
json table_to_json(const DivisibleBpsTable& t) { return generic_to_json(t, "divisible_bps"); }
json table_to_json(const GwPotentialTable& t) { return generic_to_json(t, "gw_potential"); }

BpsTable bps_table_from_json(const json& j) { return generic_from_json<BpsTable>(j, "bps", 0); }
DivisibleBpsTable divisible_table_from_json(const json& j) {
  return generic_from_json<DivisibleBpsTable>(j, "divisible_bps", 1);
}
GwPotentialTable gw_table_from_json(const json& j) { return generic_from_json<GwPotentialTable>(j, "gw_potential", 1); }

std::string table_to_tsv(const BpsTable& t) {
  std::ostringstream out;
  out << "g\\h";
  for (int h = 0; h <= t.h_max(); ++h) out << '\t' << h;
  out << '\n';
  for (int g = 0; g <= t.g_max(); ++g) {
    out << g;
    for (int h = 0; h <= t.h_max(); ++h) {
      out << '\t';
      if (g <= h) out << t(g, h);
    }
    out << '\n';
  }
  return out.str();
}

BpsTable bps_table_from_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty TSV table");
  const auto header = split(line, '\t');
  if (header.empty() || header[0] != "g\\h") throw std::invalid_argument("TSV header must start with g\\h");
  const int h_max = static_cast<int>(header.size()) - 2;
  for (int h = 0; h <= h_max; ++h) {
    if (header[static_cast<std::size_t>(h + 1)] != std::to_string(h)) throw std::invalid_argument("TSV header columns must be 0, 1, ...");
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(split(line, '\t'));
  }
  BpsTable t(static_cast<int>(rows.size()) - 1, h_max);
  for (int g = 0; g < static_cast<int>(rows.size()); ++g) {
    const auto& row = rows[static_cast<std::size_t>(g)];
    if (static_cast<int>(row.size()) != h_max + 2 || row[0] != std::to_string(g)) {
      throw std::invalid_argument("malformed TSV row " + std::to_string(g));
    }
    for (int h = 0; h <= h_max; ++h) {
      const std::string& cell = row[static_cast<std::size_t>(h + 1)];
      if (cell.empty()) {
        if (g <= h) throw std::invalid_argument("empty TSV cell at g <= h");
        continue;
      }
      t(g, h) = Rational::parse(cell);
    }
  }
  return t;
}

json pairs_table_to_json(const PairsEulerTable& t) {
  json rows = json::array();
  for (int h = 0; h <= t.h_max(); ++h) {
    json values = json::array();
    for (int n = 1 - h; n <= t.n_max(); ++n) values.push_back(t.at(n, h).get_str());
    rows.push_back(json{{"h", h}, {"n_min", 1 - h}, {"values", std::move(values)}});
  }
  return json{{"kind", "pairs_euler"}, {"h_max", t.h_max()}, {"n_max", t.n_max()}, {"rows", std::move(rows)}};
}

PairsEulerTable pairs_table_from_json(const json& j) {
  try {
    PairsEulerTable t(j.at("h_max").get<int>(), j.at("n_max").get<int>());
    for (const json& row : j.at("rows")) {
      const int h = row.at("h").get<int>();
      int n = row.at("n_min").get<int>();
      for (const json& v : row.at("values")) t.set(n++, h, Integer(v.get<std::string>()));
    }
    return t;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed pairs table JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("pairs table entry outside its window: ") + e.what());
  }
}

std::string pairs_table_to_tsv(const PairsEulerTable& t) {
  std::ostringstream out;
  out << "h\\n";
  for (int n = 1 - t.h_max(); n <= t.n_max(); ++n) out << '\t' << n;
  out << '\n';
  for (int h = 0; h <= t.h_max(); ++h) {
    out << h;
    for (int n = 1 - t.h_max(); n <= t.n_max(); ++n) {
      out << '\t';
      if (n >= 1 - h) out << t.at(n, h).get_str();
    }
    out << '\n';
  }
  return out.str();
}

json int_matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix int_matrix_from_json(const json& j) {
  try {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j.at(0).size());
    IntMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      const json& row = j.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw std::invalid_argument("matrix rows differ in length");
      for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = row.at(static_cast<std::size_t>(c)).get<std::int64_t>();
    }
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed integer matrix: ") + e.what());
  }
}

json lattice_to_json(const GramLattice& l) { return json{{"rank", l.rank()}, {"gram", int_matrix_to_json(l.gram())}}; }

GramLattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gram")) throw std::invalid_argument("lattice JSON needs a \"gram\" entry");
  GramLattice l(int_matrix_from_json(j.at("gram")));
  if (j.contains("rank") && j.at("rank") != l.rank()) throw std::invalid_argument("lattice rank does not match the Gram matrix");
  return l;
}

json overlattice_to_json(const OverlatticeDatum& o) {
  json coset = json::array();
  for (auto c : o.coset) coset.push_back(c);
  return json{{"base", int_matrix_to_json(o.base_gram)},
              {"gram", int_matrix_to_json(o.gram)},
              {"embedding", int_matrix_to_json(o.embedding)},
              {"index", o.index},
              {"discriminant", o.discriminant.get_str()},
              {"coset", std::move(coset)}};
}

OverlatticeDatum overlattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("gram") || !j.contains("embedding")) {
    throw std::invalid_argument("overlattice JSON needs \"base\", \"gram\" and \"embedding\"");
  }
  return make_overlattice(GramLattice(int_matrix_from_json(j.at("base"))), int_matrix_from_json(j.at("gram")),
                          int_matrix_from_json(j.at("embedding")));
}

}  // namespace k3enum
