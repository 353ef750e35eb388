#include "minimax/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minimax {

namespace {

struct TokenLine {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize(std::string_view text) {
  std::vector<TokenLine> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    TokenLine tl{number, {}};
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) tl.tokens.push_back(std::move(tok));
    if (!tl.tokens.empty()) lines.push_back(std::move(tl));
    start = end + 1;
  }
  return lines;
}

int parse_int(const TokenLine& line, const std::string& tok,
              const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("expected ") + what + ", got '" +
                                      tok + "'");
  }
}

Weight parse_weight(const TokenLine& line, const std::string& tok) {
  auto w = Weight::parse(tok);
  if (!w) throw ParseError(line.number, "bad weight literal '" + tok + "'");
  return *w;
}

}  // namespace

ParsedProblem parse_problem(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const TokenLine& {
    if (at >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       std::string("unexpected end of file, expected ") +
                           what);
    return lines[at];
  };

  {
    const auto& header = need("'minimax-problem' header");
    if (header.tokens != std::vector<std::string>{"minimax-problem"})
      throw ParseError(header.number, "expected 'minimax-problem' header");
    ++at;
  }

  ParsedProblem result;
  auto read_count = [&](const char* key) {
    const auto& line = need(key);
    if (line.tokens.size() != 2 || line.tokens[0] != key)
      throw ParseError(line.number, std::string("expected '") + key + " N'");
    int v = parse_int(line, line.tokens[1], key);
    if (v < 1) throw ParseError(line.number, std::string(key) + " must be positive");
    ++at;
    return v;
  };
  result.problem.num_objects = read_count("objects");
  result.problem.num_labels = read_count("labels");

  while (at < lines.size() && (lines[at].tokens[0] == "object-names" ||
                               lines[at].tokens[0] == "label-names")) {
    const auto& line = lines[at];
    bool objects = line.tokens[0] == "object-names";
    std::size_t expected = objects
                               ? static_cast<std::size_t>(
                                     result.problem.num_objects)
                               : static_cast<std::size_t>(
                                     result.problem.num_labels);
    if (line.tokens.size() != expected + 1)
      throw ParseError(line.number, "name map has wrong length");
    auto& target = objects ? result.object_names : result.label_names;
    target.assign(line.tokens.begin() + 1, line.tokens.end());
    ++at;
  }

  const int k = result.problem.num_labels;
  while (at < lines.size()) {
    const auto& head = lines[at];
    if (head.tokens[0] != "scope")
      throw ParseError(head.number, "expected 'scope <ids...>'");
    if (head.tokens.size() < 2)
      throw ParseError(head.number, "scope needs at least one object id");
    ScopeTable table;
    for (std::size_t i = 1; i < head.tokens.size(); ++i) {
      int id = parse_int(head, head.tokens[i], "object id");
      if (id < 0 || id >= result.problem.num_objects)
        throw ParseError(head.number, "object id out of range");
      table.scope.objects.push_back(id);
    }
    for (std::size_t i = 0; i + 1 < table.scope.objects.size(); ++i)
      if (table.scope.objects[i] >= table.scope.objects[i + 1])
        throw ParseError(head.number, "scope ids must be strictly increasing");
    ++at;

    std::uint64_t expected = pow_saturated(k, table.scope.size());
    if (expected > (1u << 24))
      throw ParseError(head.number, "table too large");
    table.values.assign(expected, Weight::bottom());
    std::vector<bool> seen(expected, false);
    while (true) {
      const auto& line = need("table entry or 'end'");
      if (line.tokens.size() == 1 && line.tokens[0] == "end") {
        for (std::size_t e = 0; e < seen.size(); ++e)
          if (!seen[e])
            throw ParseError(line.number,
                             "incomplete table (" +
                                 std::to_string(std::count(seen.begin(),
                                                           seen.end(), true)) +
                                 " of " + std::to_string(expected) +
                                 " entries)");
        ++at;
        break;
      }
      if (line.tokens.size() != table.scope.size() + 1)
        throw ParseError(line.number, "entry needs one label per scope object "
                                      "plus a weight");
      std::size_t idx = 0;
      for (std::size_t i = 0; i < table.scope.size(); ++i) {
        int l = parse_int(line, line.tokens[i], "label");
        if (l < 0 || l >= k)
          throw ParseError(line.number, "label out of range");
        idx = idx * k + static_cast<std::size_t>(l);
      }
      if (seen[idx]) throw ParseError(line.number, "duplicate table entry");
      seen[idx] = true;
      table.values[idx] = parse_weight(line, line.tokens.back());
      ++at;
    }
    result.problem.tables.push_back(std::move(table));
  }

  merge_duplicate_scopes(result.problem);
  if (auto errors = validate(result.problem); !errors.empty())
    throw ParseError(1, errors.front());
  return result;
}

std::string serialize_problem(const GeneralProblem& p,
                              const std::vector<std::string>& object_names,
                              const std::vector<std::string>& label_names) {
  GeneralProblem canon = p;
  merge_duplicate_scopes(canon);
  std::sort(canon.tables.begin(), canon.tables.end(),
            [](const ScopeTable& a, const ScopeTable& b) {
              return a.scope.objects < b.scope.objects;
            });

  std::ostringstream out;
  out << "minimax-problem\n";
  out << "objects " << canon.num_objects << "\n";
  out << "labels " << canon.num_labels << "\n";
  if (!object_names.empty()) {
    out << "object-names";
    for (const auto& n : object_names) out << ' ' << n;
    out << "\n";
  }
  if (!label_names.empty()) {
    out << "label-names";
    for (const auto& n : label_names) out << ' ' << n;
    out << "\n";
  }
  for (const auto& table : canon.tables) {
    out << "scope";
    for (int id : table.scope.objects) out << ' ' << id;
    out << "\n";
    Labeling x(table.scope.size(), 0);
    std::size_t e = 0;
    do {
      for (Label l : x) out << l << ' ';
      out << table.values[e].to_string() << "\n";
      ++e;
    } while (next_labeling(x, canon.num_labels));
    out << "end\n";
  }
  return out.str();
}

std::string serialize_solution(const SolutionSet& sol,
                               const std::vector<std::string>& object_names,
                               const std::vector<std::string>& label_names,
                               const std::optional<FilterReport>& filter) {
  std::ostringstream out;
  out << "minimax-solution\n";
  out << "status "
      << (sol.status == Status::Accepted ? "accepted" : "declined") << "\n";
  out << "d " << sol.entries.size() << "\n";
  for (std::size_t r = 0; r < sol.entries.size(); ++r) {
    out << "sol " << (r + 1) << ' ' << sol.entries[r].value.to_string();
    for (Label l : sol.entries[r].labeling) out << ' ' << l;
    out << "\n";
  }
  if (filter) {
    out << "filter " << filter->constraint.label << ':'
        << filter->constraint.max_count << ' ';
    if (filter->rank)
      out << "rank " << *filter->rank << "\n";
    else
      out << "none\n";
  }
  if (sol.entries.empty()) return out.str();

  // Aligned human-readable table, names when available.
  std::size_t n = sol.entries.front().labeling.size();
  std::vector<std::string> headers{"rank", "objective"};
  for (std::size_t i = 0; i < n; ++i)
    headers.push_back(i < object_names.size() ? object_names[i]
                                              : "x" + std::to_string(i));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < sol.entries.size(); ++r) {
    std::vector<std::string> row{std::to_string(r + 1),
                                 sol.entries[r].value.to_string()};
    for (Label l : sol.entries[r].labeling)
      row.push_back(static_cast<std::size_t>(l) < label_names.size()
                        ? label_names[l]
                        : std::to_string(l));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    out << '#';
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << ' ';
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  };
  emit(headers);
  for (const auto& row : rows) emit(row);
  return out.str();
}

ParsedOperator parse_operator(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const TokenLine& {
    if (at >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       std::string("unexpected end of file, expected ") +
                           what);
    return lines[at];
  };
  {
    const auto& header = need("'minimax-operator' header");
    if (header.tokens != std::vector<std::string>{"minimax-operator"})
      throw ParseError(header.number, "expected 'minimax-operator' header");
    ++at;
  }
  auto read_count = [&](const char* key) {
    const auto& line = need(key);
    if (line.tokens.size() != 2 || line.tokens[0] != key)
      throw ParseError(line.number, std::string("expected '") + key + " N'");
    int v = parse_int(line, line.tokens[1], key);
    if (v < 1)
      throw ParseError(line.number, std::string(key) + " must be positive");
    ++at;
    return v;
  };
  ParsedOperator result;
  result.num_objects = read_count("objects");
  result.op.num_labels = read_count("labels");
  const int k = result.op.num_labels;
  const std::size_t cells = static_cast<std::size_t>(k) * k * k;
  result.op.tables.assign(result.num_objects, {});

  for (int obj = 0; obj < result.num_objects; ++obj) {
    const auto& head = need("'object <id>'");
    if (head.tokens.size() != 2 || head.tokens[0] != "object" ||
        parse_int(head, head.tokens[1], "object id") != obj)
      throw ParseError(head.number,
                       "expected 'object " + std::to_string(obj) + "'");
    ++at;
    auto& table = result.op.tables[obj];
    table.reserve(cells);
    while (table.size() < cells) {
      const auto& line = need("operator table values");
      if (line.tokens.size() == 1 && line.tokens[0] == "end")
        throw ParseError(line.number, "operator table incomplete");
      for (const auto& tok : line.tokens) {
        int v = parse_int(line, tok, "label");
        if (v < 0 || v >= k) throw ParseError(line.number, "label out of range");
        if (table.size() == cells)
          throw ParseError(line.number, "too many operator table values");
        table.push_back(v);
      }
      ++at;
    }
    const auto& fin = need("'end'");
    if (fin.tokens.size() != 1 || fin.tokens[0] != "end")
      throw ParseError(fin.number, "expected 'end'");
    ++at;
  }
  if (at != lines.size())
    throw ParseError(lines[at].number, "trailing content");
  return result;
}

std::string serialize_operator(const NonUniformOperator& op) {
  std::ostringstream out;
  out << "minimax-operator\n";
  out << "objects " << op.tables.size() << "\n";
  out << "labels " << op.num_labels << "\n";
  const int k = op.num_labels;
  for (std::size_t obj = 0; obj < op.tables.size(); ++obj) {
    out << "object " << obj << "\n";
    for (Label a = 0; a < k; ++a) {
      for (Label b = 0; b < k; ++b) {
        for (Label c = 0; c < k; ++c) {
          out << op.tables[obj][(static_cast<std::size_t>(a) * k + b) * k + c];
          out << (c + 1 == k ? "" : " ");
        }
        out << "\n";
      }
    }
    out << "end\n";
  }
  return out.str();
}

namespace {

// splitmix64; fixed algorithm so instances are identical on every platform.
struct DeterministicRng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

Weight draw_weight(DeterministicRng& rng, const InstanceGenSpec& spec) {
  const std::uint64_t scale = 1'000'000'000;
  std::uint64_t pb = static_cast<std::uint64_t>(
      std::llround(spec.p_bottom * static_cast<double>(scale)));
  std::uint64_t pt = static_cast<std::uint64_t>(
      std::llround(spec.p_top * static_cast<double>(scale)));
  std::uint64_t r = rng.below(scale);
  if (r < pb) return Weight::bottom();
  if (r < pb + pt) return Weight::top();
  std::uint64_t range =
      static_cast<std::uint64_t>(spec.value_hi - spec.value_lo) + 1;
  return Weight::finite(spec.value_lo +
                        static_cast<std::int64_t>(rng.below(range)));
}

}  // namespace

GeneralProblem generate_instance(const InstanceGenSpec& spec) {
  if (spec.num_objects < 1 || spec.num_labels < 1 ||
      spec.value_lo > spec.value_hi)
    throw std::invalid_argument("bad instance spec");
  DeterministicRng rng{spec.seed ^ 0xda3e39cb94b95bdbULL};

  GeneralProblem p;
  p.num_objects = spec.num_objects;
  p.num_labels = spec.num_labels;
  const int k = spec.num_labels;

  switch (spec.family) {
    case StructureFamily::PairwiseComplete: {
      for (int i = 0; i < spec.num_objects; ++i)
        for (int j = i + 1; j < spec.num_objects; ++j) {
          ScopeTable table;
          table.scope.objects = {i, j};
          std::size_t cells = static_cast<std::size_t>(k) * k;
          table.values.reserve(cells);
          for (std::size_t e = 0; e < cells; ++e)
            table.values.push_back(draw_weight(rng, spec));
          p.tables.push_back(std::move(table));
        }
      break;
    }
    case StructureFamily::RandomScopes: {
      if (spec.scope_order < 1 || spec.scope_order > spec.num_objects)
        throw std::invalid_argument("scope order out of range");
      for (int s = 0; s < spec.scope_count; ++s) {
        std::vector<int> ids;
        while (static_cast<int>(ids.size()) < spec.scope_order) {
          int id = static_cast<int>(rng.below(spec.num_objects));
          if (std::find(ids.begin(), ids.end(), id) == ids.end())
            ids.push_back(id);
        }
        std::sort(ids.begin(), ids.end());
        ScopeTable table;
        table.scope.objects = std::move(ids);
        std::uint64_t cells = pow_saturated(k, spec.scope_order);
        table.values.reserve(cells);
        for (std::uint64_t e = 0; e < cells; ++e)
          table.values.push_back(draw_weight(rng, spec));
        p.tables.push_back(std::move(table));
      }
      merge_duplicate_scopes(p);
      break;
    }
    case StructureFamily::Clustering: {
      p.num_labels = 2;
      DissimilarityMatrix m(spec.num_objects);
      for (int s = 0; s < spec.num_objects; ++s)
        for (int t = s + 1; t < spec.num_objects; ++t)
          m.set(s, t, draw_weight(rng, spec));
      p = to_general(clustering_to_problem(m));
      break;
    }
  }
  return p;
}

}  // namespace minimax
