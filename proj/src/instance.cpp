#include <cctype>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

#include "relkummer/cli.hpp"
#include "relkummer/errors.hpp"

namespace relkummer {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Cursor over one line; columns are 1-based.
struct LineCursor {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  std::size_t column() const { return pos + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void skip_space() {
    while (!done() && is_space(text[pos])) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, column()); }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Drops a trailing comment, ignoring '#' inside double quotes.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (quoted && line[i] == '\\') {
      ++i;
      continue;
    }
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::uint64_t parse_unsigned(std::string_view value, std::size_t line, std::size_t column) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(value) + "'", line, column);
  }
  return out;
}

std::string parse_quoted(LineCursor& cur) {
  cur.expect('"');
  std::string out;
  while (!cur.done() && cur.peek() != '"') {
    if (cur.peek() == '\\') {
      ++cur.pos;
      if (cur.done()) break;
    }
    out += cur.text[cur.pos++];
  }
  if (cur.done()) cur.fail("unterminated string");
  ++cur.pos;
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  InstanceFile inst;
  bool seen_p = false, seen_l = false, seen_field = false, seen_generators = false;
  std::vector<std::string> seen_keys;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (end == text.size() && raw.empty()) break;
    ++line_no;
    const std::string_view line = strip_comment(raw);
    if (trim(line).empty()) continue;
    const std::size_t eq = line.find('=');
    const std::size_t key_col = line.find_first_not_of(" \t") + 1;
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, key_col);
    const std::string key(trim(line.substr(0, eq)));
    std::size_t value_col = eq + 2;
    while (value_col <= line.size() && is_space(line[value_col - 1])) ++value_col;
    const std::string_view value = trim(line.substr(eq + 1));
    if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end()) {
      throw ParseError("duplicate key '" + key + "'", line_no, key_col);
    }
    seen_keys.push_back(key);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", line_no, value_col);

    if (key == "p") {
      inst.p = static_cast<std::uint32_t>(parse_unsigned(value, line_no, value_col));
      seen_p = true;
    } else if (key == "l") {
      inst.l = static_cast<std::uint32_t>(parse_unsigned(value, line_no, value_col));
      seen_l = true;
    } else if (key == "field") {
      inst.field = std::string(value);
      inst.field_position = {line_no, value_col};
      seen_field = true;
    } else if (key == "zeta") {
      inst.zeta = std::string(value);
      inst.zeta_position = {line_no, value_col};
    } else if (key == "seed") {
      inst.seed = parse_unsigned(value, line_no, value_col);
    } else if (key == "label") {
      LineCursor cur{line, line_no, value_col - 1};
      inst.label = parse_quoted(cur);
      cur.skip_space();
      if (!cur.done()) cur.fail("unexpected text after label");
    } else if (key == "generators") {
      LineCursor cur{line, line_no, value_col - 1};
      cur.expect('[');
      cur.skip_space();
      inst.generators_line = line_no;
      if (cur.peek() == ']') {
        ++cur.pos;
      } else {
        while (true) {
          cur.skip_space();
          inst.generator_columns.push_back(cur.column() + 1);
          inst.generators.push_back(parse_quoted(cur));
          cur.skip_space();
          if (cur.peek() == ',') {
            ++cur.pos;
            continue;
          }
          cur.expect(']');
          break;
        }
      }
      cur.skip_space();
      if (!cur.done()) cur.fail("unexpected text after generator list");
      seen_generators = true;
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, key_col);
    }
  }
  const std::size_t last = line_no == 0 ? 1 : line_no;
  if (!seen_p) throw ParseError("missing key 'p'", last, 1);
  if (!seen_l) throw ParseError("missing key 'l'", last, 1);
  if (!seen_field) throw ParseError("missing key 'field'", last, 1);
  if (!seen_generators) throw ParseError("missing key 'generators'", last, 1);
  return inst;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string print_instance(const InstanceFile& inst) {
  std::ostringstream out;
  if (inst.label) out << "label = " << quote(*inst.label) << "\n";
  out << "p = " << inst.p << "\n";
  out << "l = " << inst.l << "\n";
  out << "field = " << inst.field << "\n";
  if (inst.zeta) out << "zeta = " << *inst.zeta << "\n";
  if (inst.seed) out << "seed = " << *inst.seed << "\n";
  out << "generators = [";
  for (std::size_t i = 0; i < inst.generators.size(); ++i) {
    if (i > 0) out << ", ";
    out << quote(inst.generators[i]);
  }
  out << "]\n";
  return out.str();
}

std::shared_ptr<const GaloisField> parse_field_spec(std::string_view text, std::size_t line,
                                                    std::size_t column) {
  static const std::regex kSpec(
      R"(^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*(?:[,;]?\s*modulus\s*=\s*\[([^\]]*)\])?\s*$)");
  std::cmatch m;
  if (!std::regex_match(text.data(), text.data() + text.size(), m, kSpec)) {
    throw ParseError("field must be GF(r) or GF(r^m), optionally with modulus=[...], got '" +
                         std::string(text) + "'",
                     line, column);
  }
  const auto r = parse_unsigned(m.str(1), line, column);
  const auto deg = m[2].matched ? parse_unsigned(m.str(2), line, column) : 1;
  if (r > 0xffffffffULL || deg > 64) throw UnsupportedInstance("field GF(" + m.str(1) + ") is too large");
  std::vector<std::uint32_t> modulus;
  if (m[3].matched) {
    const std::size_t mod_col = column + static_cast<std::size_t>(m.position(3));
    std::stringstream ss(m.str(3));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto c = parse_unsigned(trim(item), line, mod_col);
      if (c >= r) throw ParseError("modulus coefficient " + std::to_string(c) + " is not reduced mod " +
                                       std::to_string(r), line, mod_col);
      modulus.push_back(static_cast<std::uint32_t>(c));
    }
  }
  return std::make_shared<const GaloisField>(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(deg),
                                             std::move(modulus));
}

LoadedInstance load_instance(const InstanceFile& inst) {
  LoadedInstance out;
  const auto field = parse_field_spec(inst.field, inst.field_position.first, inst.field_position.second);
  std::optional<FieldElement> zeta;
  if (inst.zeta) {
    try {
      zeta = parse_field_literal(*inst.zeta, *field);
    } catch (const std::exception& e) {
      throw ParseError(std::string("zeta: ") + e.what(), inst.zeta_position.first, inst.zeta_position.second);
    }
  }
  out.ctx = make_context(inst.p, inst.l, field, zeta);
  out.seed = inst.seed.value_or(0);
  for (std::size_t i = 0; i < inst.generators.size(); ++i) {
    const std::size_t line = inst.generators_line;
    try {
      out.generators.push_back(parse_ratfunc(inst.generators[i], out.ctx, out.seed, line));
    } catch (const ParseError& e) {
      // rebase the column from the expression to the file line
      const std::size_t base = i < inst.generator_columns.size() ? inst.generator_columns[i] - 1 : 0;
      std::string what = e.what();
      what = what.substr(0, what.rfind(" at "));
      throw ParseError("generator " + std::to_string(i + 1) + ": " + what, e.line(), base + e.column());
    } catch (const DomainError& e) {
      throw UnsupportedInstance("generator " + std::to_string(i + 1) + " '" + inst.generators[i] +
                                "': " + e.what());
    }
  }
  return out;
}

}  // namespace relkummer
