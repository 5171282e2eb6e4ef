#include "etalab/job.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "etalab/errors.hpp"
#include "etalab/parse.hpp"

namespace etalab {

namespace {

struct Item {
  std::string text;
  int line = 0;
  int column = 0;
};

struct Entry {
  std::string key;
  int line = 0;
  int column = 0;
  std::vector<std::vector<Item>> rows;  // comma-separated items per row

  std::vector<Item> items() const {
    std::vector<Item> all;
    for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    return all;
  }
};

struct Section {
  std::string kind;  // ring, module, job
  std::string name;
  int line = 0;
  std::vector<Entry> entries;

  const Entry* find(const std::string& key) const {
    for (const auto& e : entries)
      if (e.key == key) return &e;
    return nullptr;
  }
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

/// Splits one row of text (starting at 1-based column col) at commas.
std::vector<Item> split_items(const std::string& text, int line, int col) {
  std::vector<Item> items;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k < text.size() && text[k] != ',') continue;
    std::size_t a = start, b = k;
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    if (a == b) {
      if (!(k == text.size() && items.empty() && start == 0))
        throw ParseError(line, col + static_cast<int>(a), "empty list item");
    } else {
      items.push_back({text.substr(a, b - a), line, col + static_cast<int>(a)});
    }
    start = k + 1;
  }
  return items;
}

/// Adds the rows of a value fragment (rows separated by ';').
void add_rows(Entry& e, const std::string& text, int line, int col) {
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k < text.size() && text[k] != ';') continue;
    auto row = split_items(text.substr(start, k - start), line, col + static_cast<int>(start));
    if (!row.empty()) e.rows.push_back(std::move(row));
    start = k + 1;
  }
}

std::vector<Section> lex(std::string_view text) {
  std::vector<Section> sections;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t last = line.find_last_not_of(" \t");
    const int col = static_cast<int>(first) + 1;
    if (line[first] == '[') {
      if (line[last] != ']') throw ParseError(line_no, static_cast<int>(last) + 1, "expected ']'");
      std::string inner = line.substr(first + 1, last - first - 1);
      std::vector<std::string> words;
      std::size_t k = 0;
      while (k < inner.size()) {
        while (k < inner.size() && std::isspace(static_cast<unsigned char>(inner[k]))) ++k;
        std::size_t b = k;
        while (k < inner.size() && !std::isspace(static_cast<unsigned char>(inner[k]))) ++k;
        if (b < k) words.push_back(inner.substr(b, k - b));
      }
      Section s;
      s.line = line_no;
      if (words.size() == 1 && (words[0] == "ring" || words[0] == "job")) {
        s.kind = words[0];
      } else if (words.size() == 2 && words[0] == "module") {
        if (!is_identifier(words[1])) throw ParseError(line_no, col + 1, "bad module name '" + words[1] + "'");
        s.kind = "module";
        s.name = words[1];
      } else {
        throw ParseError(line_no, col, "unknown section '" + inner + "'; expected [ring], [module NAME] or [job]");
      }
      sections.push_back(std::move(s));
    } else if (auto eq = line.find('='); eq != std::string::npos) {
      if (sections.empty()) throw ParseError(line_no, col, "entry outside of any section");
      std::string key = line.substr(first, eq - first);
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
      if (!is_identifier(key)) throw ParseError(line_no, col, "bad key '" + key + "'");
      if (sections.back().find(key)) throw ParseError(line_no, col, "duplicate key '" + key + "'");
      Entry e;
      e.key = key;
      e.line = line_no;
      e.column = col;
      add_rows(e, line.substr(eq + 1), line_no, static_cast<int>(eq) + 2);
      sections.back().entries.push_back(std::move(e));
    } else if (first > 0 && !sections.empty() && !sections.back().entries.empty()) {
      add_rows(sections.back().entries.back(), line, line_no, 1);
    } else {
      throw ParseError(line_no, col, "expected 'key = value', a continuation line or a section header");
    }
    if (end == text.size()) break;
  }
  return sections;
}

Item single(const Entry& e) {
  auto items = e.items();
  if (items.size() != 1)
    throw ParseError(e.line, e.column, "'" + e.key + "' takes exactly one value");
  return items.front();
}

int parse_int(const Item& it, int min) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(it.text, &used);
  } catch (const std::exception&) {
    throw ParseError(it.line, it.column, "expected an integer, found '" + it.text + "'");
  }
  if (used != it.text.size()) throw ParseError(it.line, it.column, "expected an integer, found '" + it.text + "'");
  if (v < min) throw ParseError(it.line, it.column, "value must be at least " + std::to_string(min));
  return v;
}

void check_keys(const Section& s, std::initializer_list<const char*> allowed) {
  for (const auto& e : s.entries)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return e.key == k; }))
      throw ParseError(e.line, e.column, "unknown key '" + e.key + "' in [" + s.kind + "]");
}

RationalPolynomial poly(const Item& it, const std::vector<std::string>& vars) {
  return parse_polynomial(it.text, vars, it.line, it.column);
}

template <class Fn>
auto at_line(int line, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const HomogeneityError& e) {
    throw HomogeneityError("line " + std::to_string(line) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, 1, e.what());
  }
}

}  // namespace

Task parse_task(const std::string& name) {
  static const std::map<std::string, Task> tasks{{"check", Task::Check},   {"hilbert", Task::Hilbert},
                                                 {"tor", Task::Tor},       {"eta", Task::Eta},
                                                 {"genfun", Task::GenFun}, {"rigidity", Task::Rigidity},
                                                 {"report", Task::Report}};
  auto it = tasks.find(name);
  if (it == tasks.end())
    throw std::invalid_argument("unknown task '" + name +
                                "'; expected check, hilbert, tor, eta, genfun, rigidity or report");
  return it->second;
}

std::string to_string(Task t) {
  switch (t) {
    case Task::Check: return "check";
    case Task::Hilbert: return "hilbert";
    case Task::Tor: return "tor";
    case Task::Eta: return "eta";
    case Task::GenFun: return "genfun";
    case Task::Rigidity: return "rigidity";
    case Task::Report: return "report";
  }
  return "report";
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + name + "'; expected json, csv or text");
}

const GradedPresentation& JobSpec::module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.label == name) return m;
  if (name == "R") return builtin_R_;
  if (name == "k") return builtin_k_;
  throw std::out_of_range("unknown module '" + name + "'");
}

bool JobSpec::has_module(const std::string& name) const {
  return name == "R" || name == "k" ||
         std::any_of(modules.begin(), modules.end(), [&](const auto& m) { return m.label == name; });
}

JobSpec JobSpec::with_field(const FieldSpec& field) const {
  JobSpec j = *this;
  j.ring = ring.with_field(field);
  return j;
}

JobSpec parse_job(std::string_view text) {
  const auto sections = lex(text);
  JobSpec job;
  const Section* ring = nullptr;
  const Section* jobsec = nullptr;
  for (const auto& s : sections) {
    if (s.kind == "ring") {
      if (ring) throw ParseError(s.line, 1, "duplicate [ring] block");
      ring = &s;
    } else if (s.kind == "job") {
      if (jobsec) throw ParseError(s.line, 1, "duplicate [job] block");
      jobsec = &s;
    }
  }
  if (!ring) throw ParseError(1, 1, "missing [ring] block");

  check_keys(*ring, {"field", "vars", "relations"});
  FieldSpec field = FieldSpec::rationals();
  if (const Entry* e = ring->find("field")) {
    const Item& it = single(*e);
    try {
      field = FieldSpec::parse(it.text);
    } catch (const std::exception& ex) {
      throw ParseError(it.line, it.column, ex.what());
    }
  }
  const Entry* vars_entry = ring->find("vars");
  if (!vars_entry) throw ParseError(ring->line, 1, "[ring] needs 'vars'");
  std::vector<std::string> vars;
  for (const auto& it : vars_entry->items()) {
    if (!is_identifier(it.text)) throw ParseError(it.line, it.column, "bad variable name '" + it.text + "'");
    vars.push_back(it.text);
  }
  std::vector<RationalPolynomial> relations;
  if (const Entry* e = ring->find("relations"))
    for (const auto& it : e->items()) relations.push_back(poly(it, vars));
  const int ring_line = ring->find("relations") ? ring->find("relations")->line : vars_entry->line;
  job.ring = at_line(ring_line, [&] { return RingDescriptor::make(field, vars, relations); });
  job.builtin_R_ = GradedPresentation::free("R", {0});
  job.builtin_k_ = GradedPresentation::residue_field(job.ring.v(), "k");

  for (const auto& s : sections) {
    if (s.kind != "module") continue;
    if (s.name == "R" || s.name == "k") throw ParseError(s.line, 1, "module name '" + s.name + "' is reserved");
    if (job.has_module(s.name)) throw ParseError(s.line, 1, "module '" + s.name + "' is declared twice");
    check_keys(s, {"gens", "rels", "ideal", "sum"});
    const Entry* gens = s.find("gens");
    const Entry* rels = s.find("rels");
    const Entry* ideal = s.find("ideal");
    const Entry* sum = s.find("sum");
    const int forms = (gens || rels ? 1 : 0) + (ideal ? 1 : 0) + (sum ? 1 : 0);
    if (forms != 1)
      throw ParseError(s.line, 1, "module " + s.name + " needs exactly one of 'gens'/'rels', 'ideal' or 'sum'");
    if (ideal) {
      std::vector<RationalPolynomial> gs;
      for (const auto& it : ideal->items()) gs.push_back(poly(it, job.ring.variables));
      job.modules.push_back(
          at_line(ideal->line, [&] { return GradedPresentation::cyclic(s.name, job.ring.v(), gs); }));
    } else if (sum) {
      auto items = sum->items();
      if (items.size() < 2) throw ParseError(sum->line, sum->column, "'sum' needs at least two modules");
      for (const auto& it : items)
        if (!job.has_module(it.text))
          throw ParseError(it.line, it.column, "unknown module '" + it.text + "' (declare it earlier)");
      GradedPresentation acc = job.module(items[0].text);
      for (std::size_t k = 1; k < items.size(); ++k) acc = direct_sum(acc, job.module(items[k].text));
      acc.label = s.name;
      job.modules.push_back(std::move(acc));
    } else {
      if (!gens) throw ParseError(rels->line, rels->column, "module " + s.name + " has 'rels' but no 'gens'");
      std::vector<int> twists;
      for (const auto& it : gens->items()) twists.push_back(parse_int(it, 0));
      if (twists.empty()) throw ParseError(gens->line, gens->column, "'gens' is empty");
      std::vector<std::vector<RationalPolynomial>> columns;
      if (rels) {
        // rows of the displayed matrix: one per generator, one entry per relation
        if (rels->rows.size() != twists.size())
          throw ParseError(rels->line, rels->column,
                           "'rels' has " + std::to_string(rels->rows.size()) + " rows but there are " +
                               std::to_string(twists.size()) + " generators");
        const std::size_t ncols = rels->rows.front().size();
        for (const auto& row : rels->rows)
          if (row.size() != ncols)
            throw ParseError(row.front().line, row.front().column,
                             "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(ncols));
        columns.assign(ncols, {});
        for (const auto& row : rels->rows)
          for (std::size_t c = 0; c < ncols; ++c) columns[c].push_back(poly(row[c], job.ring.variables));
      }
      try {
        job.modules.push_back(GradedPresentation::make(s.name, twists, columns));
      } catch (const HomogeneityError& e) {
        if (!rels || e.relation() < 0) throw HomogeneityError("line " + std::to_string(gens->line) + ": " + e.what());
        const Item& it = rels->rows[e.row()][e.relation()];
        throw HomogeneityError("line " + std::to_string(it.line) + ", column " + std::to_string(it.column) + ": " +
                                   e.what(),
                               e.relation(), e.row());
      }
    }
  }

  if (jobsec) {
    check_keys(*jobsec, {"task", "pair", "J", "D", "format", "out"});
    if (const Entry* e = jobsec->find("task")) {
      const Item& it = single(*e);
      try {
        job.task = parse_task(it.text);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(it.line, it.column, ex.what());
      }
    }
    if (const Entry* e = jobsec->find("pair")) {
      auto items = e->items();
      if (items.size() != 2) throw ParseError(e->line, e->column, "'pair' takes two module names");
      for (const auto& it : items)
        if (!job.has_module(it.text)) throw ParseError(it.line, it.column, "unknown module '" + it.text + "'");
      job.pair = {items[0].text, items[1].text};
    }
    if (const Entry* e = jobsec->find("J")) job.J = parse_int(single(*e), 1);
    if (const Entry* e = jobsec->find("D")) job.D = parse_int(single(*e), 0);
    if (const Entry* e = jobsec->find("format")) {
      const Item& it = single(*e);
      try {
        job.format = parse_format(it.text);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(it.line, it.column, ex.what());
      }
    }
    if (const Entry* e = jobsec->find("out")) job.out = single(*e).text;
  }
  return job;
}

}  // namespace etalab
