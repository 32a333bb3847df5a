#include "affbraid/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <utility>
#include <vector>

#include <json.hpp>

#include "affbraid/errors.hpp"

namespace affbraid {

namespace {

struct Token {
  std::string text;
  int line = 1;
  int column = 1;
};

// Splits on blanks, remembering where each token started.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1, column = 1;
  Token current;
  bool open = false;
  for (const char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      if (open) {
        tokens.push_back(std::move(current));
        current = {};
        open = false;
      }
      if (c == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      continue;
    }
    if (!open) {
      current.line = line;
      current.column = column;
      open = true;
    }
    current.text.push_back(c);
    ++column;
  }
  if (open) tokens.push_back(std::move(current));
  return tokens;
}

bool parse_int(const std::string& text, int* out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  if (begin == end) return false;
  const auto result = std::from_chars(begin, end, *out);
  return result.ec == std::errc{} && result.ptr == end;
}

// "B5" or "B5:" -> 5
std::optional<int> parse_strand_header(const std::string& text) {
  if (text.size() < 2 || text[0] != 'B') return std::nullopt;
  std::string digits = text.substr(1);
  if (!digits.empty() && digits.back() == ':') digits.pop_back();
  int value = 0;
  if (!parse_int(digits, &value)) return std::nullopt;
  return value;
}

// "s3" -> +3, "s3^-1" -> -3
std::optional<int> parse_symbolic_letter(const std::string& text) {
  if (text.size() < 2 || text[0] != 's') return std::nullopt;
  std::string body = text.substr(1);
  int sign = 1;
  const std::size_t caret = body.find('^');
  if (caret != std::string::npos) {
    if (body.substr(caret) != "^-1") return std::nullopt;
    body = body.substr(0, caret);
    sign = -1;
  }
  int index = 0;
  if (!parse_int(body, &index) || index <= 0) return std::nullopt;
  return sign * index;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

double parse_double_field(const std::string& field, int line, int column) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  if (begin != end && *begin == '+') ++begin;
  double value = 0.0;
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end || begin == end) {
    throw ParseError("expected a number, got \"" + field + "\"", line, column);
  }
  return value;
}

// comma-split with the 1-based start column of every field
std::vector<std::pair<std::string, int>> split_csv_line(
    const std::string& line) {
  std::vector<std::pair<std::string, int>> fields;
  std::string current;
  int start = 1, column = 1;
  for (const char c : line) {
    if (c == ',') {
      fields.emplace_back(std::move(current), start);
      current.clear();
      start = column + 1;
    } else if (c != '\r') {
      current.push_back(c);
    }
    ++column;
  }
  fields.emplace_back(std::move(current), start);
  return fields;
}

ToleranceOverrides tolerances_from_json(const nlohmann::json& object) {
  ToleranceOverrides tol;
  const auto read = [&object](const char* name, std::optional<double>* slot) {
    if (!object.contains(name)) return;
    if (!object[name].is_number()) {
      throw InputError(std::string("tolerance ") + name + " must be a number");
    }
    const double value = object[name].get<double>();
    if (value <= 0.0) {
      throw InputError(std::string("tolerance ") + name +
                       " must be positive");
    }
    *slot = value;
  };
  read("eps_sep", &tol.eps_sep);
  read("eps_rank", &tol.eps_rank);
  read("eps_close", &tol.eps_close);
  return tol;
}

}  // namespace

std::string format_braid_word(const BraidWord& word) {
  std::string out = "B" + std::to_string(word.strands()) + ":";
  for (const int letter : word.letters()) {
    out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

BraidWord parse_braid_word(const std::string& text, int default_strands) {
  const std::vector<Token> tokens = tokenize(text);
  std::size_t next = 0;
  int strands = default_strands;
  bool fixed = default_strands > 0;
  if (!tokens.empty()) {
    if (const auto header = parse_strand_header(tokens[0].text)) {
      strands = *header;
      fixed = true;
      next = 1;
      if (strands < 2) {
        throw ParseError("strand count must be at least 2, got " +
                             std::to_string(strands),
                         tokens[0].line, tokens[0].column);
      }
    }
  }
  std::vector<int> letters;
  int largest = 0;
  for (; next < tokens.size(); ++next) {
    const Token& token = tokens[next];
    int letter = 0;
    if (const auto symbolic = parse_symbolic_letter(token.text)) {
      letter = *symbolic;
    } else if (!parse_int(token.text, &letter)) {
      throw ParseError("expected a crossing letter, got \"" + token.text +
                           "\"",
                       token.line, token.column);
    }
    if (letter == 0) {
      throw ParseError("crossing letters cannot be 0", token.line,
                       token.column);
    }
    const int magnitude = letter > 0 ? letter : -letter;
    if (fixed && magnitude >= strands) {
      throw ParseError("letter " + std::to_string(letter) +
                           " needs at least " + std::to_string(magnitude + 1) +
                           " strands, but the word has " +
                           std::to_string(strands),
                       token.line, token.column);
    }
    largest = std::max(largest, magnitude);
    letters.push_back(letter);
  }
  if (!fixed) strands = std::max(2, largest + 1);
  return BraidWord(strands, std::move(letters));
}

std::string format_normal_form(const GarsideNormalForm& nf) {
  std::string out = "D^" + std::to_string(nf.infimum());
  for (const PermutationBraid& factor : nf.factors()) {
    out += " |";
    for (int i = 1; i <= factor.strands(); ++i) {
      out += ' ';
      out += std::to_string(factor.permutation().image(i));
    }
  }
  return out;
}

GarsideNormalForm parse_normal_form(const std::string& text,
                                    int fallback_strands) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty normal form", 1, 1);
  int infimum = 0;
  const std::string& head = tokens[0].text;
  if (head.size() < 3 || head[0] != 'D' || head[1] != '^' ||
      !parse_int(head.substr(2), &infimum)) {
    throw ParseError("expected a twist power like D^2, got \"" + head + "\"",
                     tokens[0].line, tokens[0].column);
  }
  std::vector<std::vector<int>> images(1);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i].text == "|") {
      if (!images.back().empty()) images.emplace_back();
      continue;
    }
    int value = 0;
    if (!parse_int(tokens[i].text, &value)) {
      throw ParseError("expected a permutation image, got \"" +
                           tokens[i].text + "\"",
                       tokens[i].line, tokens[i].column);
    }
    images.back().push_back(value);
  }
  if (images.back().empty()) images.pop_back();

  std::vector<PermutationBraid> factors;
  for (const auto& sequence : images) {
    factors.emplace_back(Permutation(sequence));
  }
  int strands = fallback_strands;
  if (!factors.empty()) strands = factors.front().strands();
  if (strands < 2) {
    throw ParseError(
        "a factor-free normal form does not carry its strand count", 1, 1);
  }
  return GarsideNormalForm(strands, infimum, std::move(factors));
}

std::string format_free_word(const FreeWord& word) {
  std::string out;
  for (const int letter : word.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

FreeWord parse_free_word(const std::string& text) {
  std::vector<int> letters;
  for (const Token& token : tokenize(text)) {
    int letter = 0;
    if (!parse_int(token.text, &letter)) {
      throw ParseError("expected a signed generator index, got \"" +
                           token.text + "\"",
                       token.line, token.column);
    }
    letters.push_back(letter);
  }
  return FreeWord(std::move(letters));
}

std::string format_trajectory_csv(const LoopTrajectory& loop) {
  const int k = loop.point_count();
  std::string out = "t";
  for (int i = 1; i <= k; ++i) {
    out += ",x" + std::to_string(i) + ",y" + std::to_string(i);
  }
  out += '\n';
  for (std::size_t t = 0; t < loop.frames.size(); ++t) {
    out += std::to_string(t);
    for (const Point& p : loop.frames[t].points) {
      out += ',';
      out += format_double(p.x);
      out += ',';
      out += format_double(p.y);
    }
    out += '\n';
  }
  return out;
}

TrajectoryFile parse_trajectory_csv(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (const char c : text) {
    if (c == '\n') {
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  if (lines.empty()) throw ParseError("empty trajectory file", 1, 1);

  const auto header = split_csv_line(lines[0]);
  if (header[0].first != "t") {
    throw ParseError("trajectory header must start with t", 1,
                     header[0].second);
  }
  if (header.size() < 3 || header.size() % 2 == 0) {
    throw ParseError(
        "trajectory header needs x and y columns for every point", 1, 1);
  }
  const int k = static_cast<int>((header.size() - 1) / 2);
  for (int i = 1; i <= k; ++i) {
    const auto& [x_label, x_col] = header[std::size_t(2 * i - 1)];
    const auto& [y_label, y_col] = header[std::size_t(2 * i)];
    if (x_label != "x" + std::to_string(i)) {
      throw ParseError("expected column x" + std::to_string(i) + ", got \"" +
                           x_label + "\"",
                       1, x_col);
    }
    if (y_label != "y" + std::to_string(i)) {
      throw ParseError("expected column y" + std::to_string(i) + ", got \"" +
                           y_label + "\"",
                       1, y_col);
    }
  }

  TrajectoryFile file;
  double previous_t = 0.0;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    if (lines[row].empty() ||
        lines[row].find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const auto fields = split_csv_line(lines[row]);
    const int line_number = static_cast<int>(row) + 1;
    if (fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) +
                           " fields, got " + std::to_string(fields.size()),
                       line_number, 1);
    }
    const double t = parse_double_field(fields[0].first, line_number,
                                        fields[0].second);
    if (!file.loop.frames.empty() && t <= previous_t) {
      throw ParseError("time values must increase, but " +
                           fields[0].first + " follows " +
                           format_double(previous_t),
                       line_number, fields[0].second);
    }
    previous_t = t;
    Configuration frame;
    frame.points.resize(std::size_t(k));
    for (int i = 0; i < k; ++i) {
      const auto& [x_text, x_col] = fields[std::size_t(2 * i + 1)];
      const auto& [y_text, y_col] = fields[std::size_t(2 * i + 2)];
      frame.points[std::size_t(i)] = {
          parse_double_field(x_text, line_number, x_col),
          parse_double_field(y_text, line_number, y_col)};
    }
    file.loop.frames.push_back(std::move(frame));
  }
  return file;
}

std::string format_trajectory_json(const LoopTrajectory& loop) {
  nlohmann::json object;
  object["k"] = loop.point_count();
  nlohmann::json frames = nlohmann::json::array();
  for (const Configuration& frame : loop.frames) {
    nlohmann::json points = nlohmann::json::array();
    for (const Point& p : frame.points) {
      points.push_back({p.x, p.y});
    }
    frames.push_back(std::move(points));
  }
  object["frames"] = std::move(frames);
  return object.dump();
}

TrajectoryFile parse_trajectory_json(const std::string& text) {
  nlohmann::json object;
  try {
    object = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    // rebuild line/column from the byte offset the library reports
    int line = 1, column = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < error.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("trajectory is not well-formed", line, column);
  }
  if (!object.is_object() || !object.contains("k") ||
      !object.contains("frames")) {
    throw InputError("a trajectory object needs k and frames members");
  }
  if (!object["k"].is_number_integer()) {
    throw InputError("k must be an integer");
  }
  const int k = object["k"].get<int>();
  if (k < 1) throw InputError("k must be at least 1");
  if (!object["frames"].is_array()) {
    throw InputError("frames must be an array");
  }
  TrajectoryFile file;
  for (const auto& frame_json : object["frames"]) {
    if (!frame_json.is_array() || static_cast<int>(frame_json.size()) != k) {
      throw InputError("every frame needs exactly k point pairs");
    }
    Configuration frame;
    frame.points.reserve(std::size_t(k));
    for (const auto& point_json : frame_json) {
      if (!point_json.is_array() || point_json.size() != 2 ||
          !point_json[0].is_number() || !point_json[1].is_number()) {
        throw InputError("every point needs the form [x, y]");
      }
      frame.points.push_back(
          {point_json[0].get<double>(), point_json[1].get<double>()});
    }
    file.loop.frames.push_back(std::move(frame));
  }
  if (object.contains("tolerances")) {
    if (!object["tolerances"].is_object()) {
      throw InputError("tolerances must be an object");
    }
    file.tolerances = tolerances_from_json(object["tolerances"]);
  }
  return file;
}

TrajectoryFile parse_trajectory(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return parse_trajectory_json(text);
  }
  return parse_trajectory_csv(text);
}

std::string format_presentation_text(const Presentation& p) {
  std::string out = "generators:";
  for (const auto& [i, j] : p.generators) {
    out += " A_" + std::to_string(i) + "_" + std::to_string(j);
  }
  out += '\n';
  for (const auto& relator : p.relators) {
    out += "relator:";
    for (const int g : relator) out += ' ' + std::to_string(g);
    out += '\n';
  }
  return out;
}

std::string format_presentation_json(const Presentation& p) {
  nlohmann::json object;
  object["strands"] = p.strands;
  nlohmann::json generators = nlohmann::json::array();
  for (const auto& [i, j] : p.generators) {
    generators.push_back({i, j});
  }
  object["generators"] = std::move(generators);
  object["relators"] = p.relators;
  object["center_relator_index"] = p.center_relator_index;
  return object.dump();
}

}  // namespace affbraid
