#include "betti/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace betti {

using nlohmann::json;

TableFormat parse_format(const std::string& name) {
  if (name == "text") return TableFormat::text;
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw std::invalid_argument("format must be text, csv or json, got '" + name + "'");
}

static bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

MonomialIdeal read_ideal_text(std::istream& in, std::optional<int> n_override) {
  std::vector<std::string> lines;
  std::string line;
  int n = n_override.value_or(0);
  while (std::getline(in, line)) {
    if (blank_or_comment(line)) continue;
    // infer the ring size from variable tokens before parsing properly
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      if (line[i] != 'x' || !std::isdigit(static_cast<unsigned char>(line[i + 1]))) continue;
      std::size_t j = i + 1;
      long idx = 0;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])) && idx < 1000000)
        idx = idx * 10 + (line[j++] - '0');
      n = std::max(n, static_cast<int>(idx));
    }
    lines.push_back(line);
  }
  std::vector<Monomial> gens;
  gens.reserve(lines.size());
  for (const auto& l : lines) gens.push_back(parse_monomial(l, n));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal read_ideal_json(const std::string& text) {
  json j = json::parse(text);
  const int n = j.at("n").get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("generators")) {
    Exponents e(n);
    if (static_cast<int>(g.size()) != n)
      throw std::invalid_argument("generator exponent vector length differs from n");
    for (int i = 0; i < n; ++i) e[i] = g.at(i).get<std::int32_t>();
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

static std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MonomialIdeal read_ideal_file(const std::string& path, std::optional<int> n_override) {
  const std::string text = slurp(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return read_ideal_json(text);
  std::istringstream in(text);
  return read_ideal_text(in, n_override);
}

static Face face_from_labels(const std::vector<int>& labels_1based) {
  std::vector<int> mem;
  mem.reserve(labels_1based.size());
  for (int v : labels_1based) {
    if (v < 1) throw std::invalid_argument("vertices are 1-based");
    mem.push_back(v - 1);
  }
  std::sort(mem.begin(), mem.end());
  if (std::adjacent_find(mem.begin(), mem.end()) != mem.end())
    throw std::invalid_argument("repeated vertex in a face");
  return Face(std::move(mem));
}

NonfaceComplex read_nonfaces_json(const std::string& text) {
  json j = json::parse(text);
  const int n = j.at("n").get<int>();
  std::vector<Face> nonfaces;
  for (const auto& f : j.at("nonfaces")) nonfaces.push_back(face_from_labels(f.get<std::vector<int>>()));
  return make_nonface_complex(n, std::move(nonfaces));
}

NonfaceComplex read_nonfaces_file(const std::string& path) {
  return read_nonfaces_json(slurp(path));
}

NonfaceComplex read_graph_file(const std::string& path, std::optional<int> n_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::pair<int, int>> edges;
  int n = n_override.value_or(0);
  std::string line;
  while (std::getline(in, line)) {
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    int u = 0, v = 0;
    if (!(ss >> u >> v)) throw std::invalid_argument("bad edge line: '" + line + "'");
    std::string rest;
    if (ss >> rest) throw std::invalid_argument("bad edge line: '" + line + "'");
    if (u < 1 || v < 1) throw std::invalid_argument("vertices are 1-based");
    n = std::max({n, u, v});
    edges.emplace_back(u - 1, v - 1);
  }
  return clique_nonfaces(n, edges);
}

std::string render_table(const BettiTable& t, TableFormat fmt) {
  const int pd = t.projdim();
  const std::int64_t reg = t.regularity();
  if (fmt == TableFormat::csv) {
    std::ostringstream out;
    out << "strand";
    for (int i = 0; i <= pd; ++i) out << ',' << i;
    out << '\n';
    for (std::int64_t j = 0; j <= reg; ++j) {
      out << j;
      for (int i = 0; i <= pd; ++i) out << ',' << t.beta(i, i + j);
      out << '\n';
    }
    return out.str();
  }
  if (fmt == TableFormat::json) {
    json strands = json::array();
    for (std::int64_t j = 0; j <= reg; ++j) {
      json row = json::array();
      for (int i = 0; i <= pd; ++i) row.push_back(t.beta(i, i + j));
      strands.push_back(std::move(row));
    }
    json out{{"projdim", pd}, {"regularity", reg}, {"strands", std::move(strands)}};
    return out.dump();
  }
  // text: a total row, then one row per strand with '.' for zero
  std::vector<std::string> labels;
  labels.push_back("total:");
  for (std::int64_t j = 0; j <= reg; ++j) labels.push_back(std::to_string(j) + ":");
  std::size_t lw = 0;
  for (const auto& l : labels) lw = std::max(lw, l.size());
  std::vector<std::vector<std::string>> cells(reg + 2);
  for (int i = 0; i <= pd; ++i) cells[0].push_back(std::to_string(t.total(i)));
  for (std::int64_t j = 0; j <= reg; ++j)
    for (int i = 0; i <= pd; ++i) {
      const std::int64_t v = t.beta(i, i + j);
      cells[j + 1].push_back(v == 0 ? "." : std::to_string(v));
    }
  std::vector<std::size_t> cw(pd + 1, 0);
  for (const auto& row : cells)
    for (int i = 0; i <= pd; ++i) cw[i] = std::max(cw[i], row[i].size());
  std::ostringstream out;
  for (std::size_t rix = 0; rix < cells.size(); ++rix) {
    out << labels[rix] << std::string(lw - labels[rix].size(), ' ');
    for (int i = 0; i <= pd; ++i)
      out << ' ' << std::string(cw[i] - cells[rix][i].size(), ' ') << cells[rix][i];
    out << '\n';
  }
  return out.str();
}

BettiTable parse_table(const std::string& text, TableFormat fmt) {
  if (fmt == TableFormat::json) {
    json j = json::parse(text);
    const auto& strands = j.at("strands");
    const Eigen::Index rows = std::max<Eigen::Index>(1, strands.size());
    Eigen::Index cols = 1;
    for (const auto& row : strands) cols = std::max<Eigen::Index>(cols, row.size());
    BettiTable t(rows, cols);
    for (Eigen::Index jx = 0; jx < static_cast<Eigen::Index>(strands.size()); ++jx)
      for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(strands[jx].size()); ++i)
        t.raw()(jx, i) = strands[jx][i].get<std::int64_t>();
    return t;
  }
  if (fmt == TableFormat::csv) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty csv table");
    std::vector<std::vector<std::int64_t>> rows;
    while (std::getline(in, line)) {
      if (blank_or_comment(line)) continue;
      std::vector<std::int64_t> row;
      std::istringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) row.push_back(std::stoll(cell));
      if (row.size() < 2) throw std::invalid_argument("bad csv table row: '" + line + "'");
      rows.push_back(std::move(row));
    }
    Eigen::Index cols = 1, strands = 1;
    for (const auto& row : rows) {
      cols = std::max<Eigen::Index>(cols, row.size() - 1);
      strands = std::max<Eigen::Index>(strands, row[0] + 1);
    }
    BettiTable t(strands, cols);
    for (const auto& row : rows)
      for (std::size_t i = 1; i < row.size(); ++i) t.raw()(row[0], i - 1) = row[i];
    return t;
  }
  throw std::invalid_argument("text tables are not parseable; use csv or json");
}

std::string render_multigraded(const MultigradedBetti& mg, TableFormat fmt) {
  if (fmt == TableFormat::json) {
    json entries = json::array();
    for (const auto& [key, count] : mg.entries())
      entries.push_back(json{{"i", key.first}, {"deg", key.second}, {"count", count}});
    return json{{"entries", std::move(entries)}}.dump();
  }
  std::ostringstream out;
  if (fmt == TableFormat::csv) {
    out << "i,deg,count\n";
    for (const auto& [key, count] : mg.entries()) {
      out << key.first << ',';
      for (std::size_t t = 0; t < key.second.size(); ++t) out << (t ? " " : "") << key.second[t];
      out << ',' << count << '\n';
    }
    return out.str();
  }
  for (const auto& [key, count] : mg.entries()) {
    out << "i=" << key.first << " deg=(";
    for (std::size_t t = 0; t < key.second.size(); ++t) out << (t ? "," : "") << key.second[t];
    out << ") count=" << count << '\n';
  }
  return out.str();
}

std::string render_homology(const std::vector<std::int64_t>& dims, TableFormat fmt) {
  if (fmt == TableFormat::json) {
    json out{{"first_dimension", -1}, {"dims", dims}};
    return out.dump();
  }
  std::ostringstream out;
  if (fmt == TableFormat::csv) {
    out << "dim,betti\n";
    for (std::size_t s = 0; s < dims.size(); ++s)
      out << (static_cast<int>(s) - 1) << ',' << dims[s] << '\n';
    return out.str();
  }
  for (std::size_t s = 0; s < dims.size(); ++s)
    out << "H~_" << (static_cast<int>(s) - 1) << " = " << dims[s] << '\n';
  return out.str();
}

std::string render_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "n=" << ideal.n_vars() << "; I = (";
  for (int k = 0; k < ideal.n_generators(); ++k)
    out << (k ? ", " : "") << to_string(ideal.generator(k));
  out << ')';
  return out.str();
}

}  // namespace betti
