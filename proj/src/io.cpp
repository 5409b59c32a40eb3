#include "monoidkit/io.hpp"

#include <fstream>
#include <sstream>

namespace monoidkit {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

FiniteMonoid parse_monoid_text(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  std::vector<std::string> labels;
  bool have_n = false;
  std::vector<Elem> table;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (blank(line)) continue;
    if (!have_n) {
      std::istringstream is(line);
      std::string key;
      std::getline(is, key, '=');
      if (key != "n") throw ValidationError("expected 'n=<order>' on first line");
      if (!(is >> n) || n == 0) throw ValidationError("bad order in 'n=' line");
      have_n = true;
      continue;
    }
    if (line.rfind("labels=", 0) == 0) {
      labels = split(line.substr(7), ',');
      if (labels.size() != n) throw ValidationError("label count does not match order");
      continue;
    }
    std::istringstream is(line);
    long v;
    while (is >> v) {
      if (v < 0) throw ValidationError("negative table entry");
      table.push_back(static_cast<Elem>(v));
    }
  }
  if (!have_n) throw ValidationError("missing 'n=<order>' line");
  if (table.size() != n * n)
    throw ValidationError("expected " + std::to_string(n * n) + " table entries, got " +
                          std::to_string(table.size()));
  FiniteMonoid m(n, std::move(table), std::move(labels));
  validate_or_throw(m);
  return m;
}

FiniteMonoid parse_monoid_text(const std::string& text) {
  std::istringstream is(text);
  return parse_monoid_text(is);
}

std::string write_monoid_text(const FiniteMonoid& m) {
  std::ostringstream os;
  const std::size_t n = m.order();
  os << "n=" << n << "\n";
  if (!m.labels().empty()) {
    os << "labels=";
    for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << m.labels()[i];
    os << "\n";
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) os << (y ? " " : "") << m.at(x, y);
    os << "\n";
  }
  return os.str();
}

FiniteMonoid monoid_from_json(const nlohmann::json& j) {
  const std::size_t n = j.at("order").get<std::size_t>();
  std::vector<Elem> table;
  table.reserve(n * n);
  for (const auto& row : j.at("table"))
    for (const auto& v : row) table.push_back(v.get<Elem>());
  std::vector<std::string> labels;
  if (j.contains("labels") && !j["labels"].is_null())
    labels = j["labels"].get<std::vector<std::string>>();
  FiniteMonoid m(n, std::move(table), std::move(labels));
  validate_or_throw(m);
  return m;
}

nlohmann::json monoid_to_json(const FiniteMonoid& m) {
  nlohmann::json j;
  const std::size_t n = m.order();
  j["order"] = n;
  if (!m.labels().empty()) j["labels"] = m.labels();
  auto rows = nlohmann::json::array();
  for (Elem x = 0; x < n; ++x) {
    auto row = nlohmann::json::array();
    for (Elem y = 0; y < n; ++y) row.push_back(m.at(x, y));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

FiniteMonoid load_monoid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json j;
    in >> j;
    return monoid_from_json(j);
  }
  return parse_monoid_text(in);
}

void save_monoid_file(const FiniteMonoid& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
    out << monoid_to_json(m).dump(2) << "\n";
  else
    out << write_monoid_text(m);
}

}  // namespace monoidkit
