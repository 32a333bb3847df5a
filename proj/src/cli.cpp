#include "affbraid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "affbraid/braid_word.hpp"
#include "affbraid/center_quotient.hpp"
#include "affbraid/errors.hpp"
#include "affbraid/free_group.hpp"
#include "affbraid/garside.hpp"
#include "affbraid/text_io.hpp"

namespace affbraid::cli {
namespace {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string read_stream(std::istream& stream) {
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw InputError("cannot open " + path);
  return read_stream(stream);
}

/// Everything a subcommand needs.  Tolerances are kept in layers because a
/// trajectory file may override the config file while flags beat both.
struct Context {
  RunConfig config;            // fully merged settings, flags included
  Tolerances base_tolerances;  // defaults plus config file only
  ToleranceOverrides flag_tolerances;
  int default_strands = 0;  // 0 means infer from headerless words
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  bool structured() const { return config.format == "structured"; }
};

std::string load_input(Context& ctx, const std::string& path) {
  if (path == "-") return read_stream(*ctx.in);
  return read_file(path);
}

Tolerances tolerances_for(const Context& ctx, const TrajectoryFile& file) {
  return ctx.flag_tolerances.applied_to(
      file.tolerances.applied_to(ctx.base_tolerances));
}

TraceOptions trace_options_for(const Context& ctx, const TrajectoryFile& file) {
  TraceOptions options;
  options.tolerances = tolerances_for(ctx, file);
  options.direction = ctx.config.direction;
  options.max_subdivision_depth = ctx.config.subdivision_depth;
  return options;
}

SummitOptions summit_options_for(const Context& ctx) {
  return SummitOptions{static_cast<std::size_t>(ctx.config.summit_cap)};
}

void warn_small_strands(Context& ctx, int strands) {
  *ctx.err << "warning: with " << strands
           << " strands the quotient arithmetic is exact, but its reading as"
              " loop classes of planar configurations needs at least 5 points\n";
}

std::string verdict_name(LoopVerdict verdict) {
  switch (verdict) {
    case LoopVerdict::AffineSpanning:
      return "affine-spanning";
    case LoopVerdict::DistinctOnly:
      return "distinct-only";
    case LoopVerdict::Invalid:
      break;
  }
  return "invalid";
}

int cmd_trace(Context& ctx, const std::string& path) {
  const TrajectoryFile file = parse_trajectory(load_input(ctx, path));
  const BraidWord word = trace(file.loop, trace_options_for(ctx, file));
  if (ctx.structured()) {
    nlohmann::json doc;
    doc["strands"] = word.strands();
    doc["letters"] = word.letters();
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << format_braid_word(word) << "\n";
  }
  return 0;
}

int cmd_nf(Context& ctx, const std::vector<std::string>& words) {
  for (const std::string& text : words) {
    const GarsideNormalForm nf =
        normal_form(parse_braid_word(text, ctx.default_strands));
    if (ctx.structured()) {
      nlohmann::json factors = nlohmann::json::array();
      for (const PermutationBraid& factor : nf.factors()) {
        factors.push_back(factor.permutation().images());
      }
      nlohmann::json doc;
      doc["strands"] = nf.strands();
      doc["infimum"] = nf.infimum();
      doc["factors"] = std::move(factors);
      *ctx.out << doc.dump() << "\n";
    } else {
      *ctx.out << format_normal_form(nf) << "\n";
    }
  }
  return 0;
}

int cmd_eq(Context& ctx, const std::string& first, const std::string& second) {
  const BraidWord a = parse_braid_word(first, ctx.default_strands);
  const BraidWord b = parse_braid_word(second, ctx.default_strands);
  const bool equal = words_equal(a, b);
  if (ctx.structured()) {
    nlohmann::json doc;
    doc["equal"] = equal;
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << (equal ? "equal" : "different") << "\n";
  }
  return 0;
}

int cmd_conj(Context& ctx, const std::string& first,
             const std::string& second) {
  const BraidWord a = parse_braid_word(first, ctx.default_strands);
  const BraidWord b = parse_braid_word(second, ctx.default_strands);
  const ConjugacyResult result =
      conjugate_in_braid_group(a, b, true, summit_options_for(ctx));
  if (ctx.structured()) {
    nlohmann::json doc;
    doc["conjugate"] = result.conjugate;
    doc["witness"] = result.witness
                         ? nlohmann::json(format_braid_word(*result.witness))
                         : nlohmann::json(nullptr);
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << (result.conjugate ? "conjugate" : "not conjugate") << "\n";
    if (result.witness) {
      *ctx.out << "witness: " << format_braid_word(*result.witness) << "\n";
    }
  }
  return 0;
}

int cmd_qeq(Context& ctx, const std::string& first, const std::string& second) {
  const CosetClass x = make_class(parse_braid_word(first, ctx.default_strands));
  const CosetClass y =
      make_class(parse_braid_word(second, ctx.default_strands));
  if (x.small_strand_caveat()) warn_small_strands(ctx, x.strands());
  const bool equal = cosets_equal(x, y);
  if (ctx.structured()) {
    nlohmann::json doc;
    doc["equal"] = equal;
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << (equal ? "equal" : "different") << "\n";
  }
  return 0;
}

int cmd_qconj(Context& ctx, const std::string& first,
              const std::string& second) {
  const CosetClass x = make_class(parse_braid_word(first, ctx.default_strands));
  const CosetClass y =
      make_class(parse_braid_word(second, ctx.default_strands));
  if (x.small_strand_caveat()) warn_small_strands(ctx, x.strands());
  const bool conjugate = cosets_conjugate(x, y, summit_options_for(ctx));
  if (ctx.structured()) {
    nlohmann::json doc;
    doc["conjugate"] = conjugate;
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << (conjugate ? "conjugate" : "not conjugate") << "\n";
  }
  return 0;
}

int cmd_homotopic(Context& ctx, const std::string& first_path,
                  const std::string& second_path) {
  if (first_path == "-" && second_path == "-") {
    throw InputError("standard input can supply only one of the two loops");
  }
  const TrajectoryFile first = parse_trajectory(load_input(ctx, first_path));
  const TrajectoryFile second = parse_trajectory(load_input(ctx, second_path));
  if (first.loop.point_count() != second.loop.point_count()) {
    throw InputError("the loops move different numbers of points: " +
                     std::to_string(first.loop.point_count()) + " vs " +
                     std::to_string(second.loop.point_count()));
  }
  const BraidWord a = trace(first.loop, trace_options_for(ctx, first));
  const BraidWord b = trace(second.loop, trace_options_for(ctx, second));
  const CosetClass x = make_class(a);
  const CosetClass y = make_class(b);
  if (x.small_strand_caveat()) warn_small_strands(ctx, x.strands());
  const bool same = cosets_equal(x, y);
  const std::string nf_a = format_normal_form(normal_form(a));
  const std::string nf_b = format_normal_form(normal_form(b));
  if (ctx.structured()) {
    nlohmann::json doc;
    doc["homotopic"] = same;
    doc["normal_forms"] = {nf_a, nf_b};
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << (same ? "homotopic" : "not homotopic") << "\n";
    *ctx.out << "trace 1: " << nf_a << "\n";
    *ctx.out << "trace 2: " << nf_b << "\n";
  }
  return 0;
}

int cmd_presentation(Context& ctx, int strands) {
  const Presentation presentation = emit_presentation(strands);
  if (ctx.structured()) {
    *ctx.out << format_presentation_json(presentation) << "\n";
  } else {
    *ctx.out << format_presentation_text(presentation);
  }
  return 0;
}

int cmd_free_reduce(Context& ctx, const std::string& text) {
  const FreeWord word = parse_free_word(text);
  if (ctx.structured()) {
    nlohmann::json doc;
    doc["letters"] = word.letters();
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << format_free_word(word) << "\n";
  }
  return 0;
}

int cmd_free_conj(Context& ctx, const std::string& first,
                  const std::string& second) {
  const bool conjugate =
      free_conjugate(parse_free_word(first), parse_free_word(second));
  if (ctx.structured()) {
    nlohmann::json doc;
    doc["conjugate"] = conjugate;
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << (conjugate ? "conjugate" : "not conjugate") << "\n";
  }
  return 0;
}

int cmd_validate(Context& ctx, const std::string& path) {
  const TrajectoryFile file = parse_trajectory(load_input(ctx, path));
  const ValidationReport report = validate(file.loop, tolerances_for(ctx, file));
  if (ctx.structured()) {
    nlohmann::json frames = nlohmann::json::array();
    for (const FrameReport& frame : report.frames) {
      nlohmann::json entry;
      entry["separation"] = frame.separation_margin;
      entry["collinearity"] = frame.collinearity_margin;
      frames.push_back(std::move(entry));
    }
    nlohmann::json doc;
    doc["verdict"] = verdict_name(report.verdict);
    doc["frames"] = std::move(frames);
    doc["closure_residual"] = report.closure_residual;
    doc["problems"] = report.problems;
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << verdict_name(report.verdict) << "\n";
    *ctx.out << "frames: " << report.frames.size() << "\n";
    for (std::size_t i = 0; i < report.frames.size(); ++i) {
      *ctx.out << "frame " << (i + 1) << ": separation "
               << format_double(report.frames[i].separation_margin)
               << ", collinearity "
               << format_double(report.frames[i].collinearity_margin) << "\n";
    }
    *ctx.out << "closure residual: " << format_double(report.closure_residual)
             << "\n";
    for (const std::string& problem : report.problems) {
      *ctx.out << "problem: " << problem << "\n";
    }
  }
  return 0;
}

int cmd_rotation(Context& ctx, int strands, int samples) {
  const LoopTrajectory loop = rotation_loop(strands, samples);
  if (ctx.structured()) {
    *ctx.out << format_trajectory_json(loop) << "\n";
  } else {
    *ctx.out << format_trajectory_csv(loop);
  }
  return 0;
}

double config_number(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number()) {
    throw InputError("config setting \"" + key + "\" must be a number");
  }
  return value.get<double>();
}

int config_integer(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_integer()) {
    throw InputError("config setting \"" + key + "\" must be an integer");
  }
  return value.get<int>();
}

}  // namespace

void RunConfig::validate() const {
  if (!(tolerances.eps_sep > 0.0) || !(tolerances.eps_rank > 0.0) ||
      !(tolerances.eps_close > 0.0)) {
    throw InputError("tolerances must be positive");
  }
  if (!std::isfinite(direction)) {
    throw InputError("the projection direction must be a finite angle");
  }
  if (subdivision_depth < 1) {
    throw InputError("the subdivision depth must be at least 1");
  }
  if (summit_cap < 1) {
    throw InputError("the summit set cap must be at least 1");
  }
  if (format != "text" && format != "structured") {
    throw InputError("format must be \"text\" or \"structured\", not \"" +
                     format + "\"");
  }
}

RunConfig parse_config(const std::string& json_text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& error) {
    int line = 1;
    int column = 1;
    const std::size_t stop =
        error.byte > 0 ? std::min(json_text.size(), error.byte - 1)
                       : std::size_t{0};
    for (std::size_t i = 0; i < stop; ++i) {
      if (json_text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw affbraid::ParseError("config file is not valid JSON", line, column);
  }
  if (!document.is_object()) {
    throw InputError("a config file must hold a JSON object");
  }
  RunConfig config;
  for (const auto& [key, value] : document.items()) {
    if (key == "eps_sep") {
      config.tolerances.eps_sep = config_number(value, key);
    } else if (key == "eps_rank") {
      config.tolerances.eps_rank = config_number(value, key);
    } else if (key == "eps_close") {
      config.tolerances.eps_close = config_number(value, key);
    } else if (key == "direction") {
      config.direction = config_number(value, key);
    } else if (key == "subdivision_depth") {
      config.subdivision_depth = config_integer(value, key);
    } else if (key == "summit_cap") {
      config.summit_cap = config_integer(value, key);
    } else if (key == "format") {
      if (!value.is_string()) {
        throw InputError("config setting \"format\" must be a string");
      }
      config.format = value.get<std::string>();
    } else {
      throw InputError("config has no setting named \"" + key + "\"");
    }
  }
  config.validate();
  return config;
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"loops of labeled planar points, their braid words, and the"
               " classes those words cut out"};
  app.name("affbraid");
  app.require_subcommand(1);

  std::string config_path;
  std::optional<double> flag_eps_sep;
  std::optional<double> flag_eps_rank;
  std::optional<double> flag_eps_close;
  std::optional<double> flag_direction;
  std::optional<int> flag_depth;
  std::optional<int> flag_cap;
  std::optional<std::string> flag_format;
  std::optional<int> flag_strands;

  app.add_option("--config", config_path, "JSON file with default settings");
  app.add_option("--eps-sep", flag_eps_sep,
                 "smallest allowed distance between two points");
  app.add_option("--eps-rank", flag_eps_rank,
                 "smallest centered singular value counted as affinely"
                 " spanning");
  app.add_option("--eps-close", flag_eps_close,
                 "largest allowed gap between the first and last frame");
  app.add_option("--direction", flag_direction,
                 "projection angle in radians used to read crossings");
  app.add_option("--depth", flag_depth,
                 "how often a segment may be halved to separate simultaneous"
                 " crossings");
  app.add_option("--cap", flag_cap,
                 "largest summit set explored during conjugacy search");
  app.add_option("--format", flag_format, "output style: text or structured");
  app.add_option("--strands", flag_strands,
                 "strand count assumed for headerless braid words");

  auto* trace_cmd = app.add_subcommand(
      "trace", "read a closed loop of configurations, print its braid word");
  std::string trace_path = "-";
  trace_cmd->add_option("file", trace_path,
                        "trajectory (CSV or JSON), - for standard input");

  auto* nf_cmd =
      app.add_subcommand("nf", "print left greedy normal forms of braid words");
  std::vector<std::string> nf_words;
  nf_cmd->add_option("word", nf_words, "braid words")->required();

  auto* eq_cmd =
      app.add_subcommand("eq", "decide whether two braid words are equal");
  std::string eq_first;
  std::string eq_second;
  eq_cmd->add_option("first", eq_first, "braid word")->required();
  eq_cmd->add_option("second", eq_second, "braid word")->required();

  auto* conj_cmd = app.add_subcommand(
      "conj", "decide conjugacy of two braid words, with a witness");
  std::string conj_first;
  std::string conj_second;
  conj_cmd->add_option("first", conj_first, "braid word")->required();
  conj_cmd->add_option("second", conj_second, "braid word")->required();

  auto* qeq_cmd = app.add_subcommand(
      "qeq", "decide equality of braid words modulo the full twist");
  std::string qeq_first;
  std::string qeq_second;
  qeq_cmd->add_option("first", qeq_first, "pure braid word")->required();
  qeq_cmd->add_option("second", qeq_second, "pure braid word")->required();

  auto* qconj_cmd = app.add_subcommand(
      "qconj", "decide conjugacy of braid words modulo the full twist");
  std::string qconj_first;
  std::string qconj_second;
  qconj_cmd->add_option("first", qconj_first, "pure braid word")->required();
  qconj_cmd->add_option("second", qconj_second, "pure braid word")->required();

  auto* homotopic_cmd = app.add_subcommand(
      "homotopic", "decide whether two loops of configurations deform into"
                   " one another");
  std::string homotopic_first;
  std::string homotopic_second;
  homotopic_cmd->add_option("first", homotopic_first, "trajectory file")
      ->required();
  homotopic_cmd->add_option("second", homotopic_second, "trajectory file")
      ->required();

  auto* presentation_cmd = app.add_subcommand(
      "presentation", "print generators and relators of the loop class group");
  int presentation_strands = 0;
  presentation_cmd->add_option("--k", presentation_strands, "number of points")
      ->required();

  auto* free_reduce_cmd = app.add_subcommand(
      "free-reduce", "cancel a word over the rank 11 free generators");
  std::string free_reduce_word;
  free_reduce_cmd->add_option("word", free_reduce_word, "free word")
      ->required();

  auto* free_conj_cmd = app.add_subcommand(
      "free-conj", "decide conjugacy of two free words");
  std::string free_conj_first;
  std::string free_conj_second;
  free_conj_cmd->add_option("first", free_conj_first, "free word")->required();
  free_conj_cmd->add_option("second", free_conj_second, "free word")
      ->required();

  auto* validate_cmd = app.add_subcommand(
      "validate", "report margins, closure and the verdict of a trajectory");
  std::string validate_path = "-";
  validate_cmd->add_option("file", validate_path,
                           "trajectory (CSV or JSON), - for standard input");

  auto* rotation_cmd = app.add_subcommand(
      "rotation", "emit the full turn of a generic base configuration");
  int rotation_strands = 0;
  int rotation_samples = 0;
  rotation_cmd->add_option("--k", rotation_strands, "number of points")
      ->required();
  rotation_cmd->add_option("--samples", rotation_samples,
                           "number of frames, at least 8 per point")
      ->required();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args);
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) config = parse_config(read_file(config_path));
    const Tolerances base_tolerances = config.tolerances;
    ToleranceOverrides flag_tolerances;
    flag_tolerances.eps_sep = flag_eps_sep;
    flag_tolerances.eps_rank = flag_eps_rank;
    flag_tolerances.eps_close = flag_eps_close;
    config.tolerances = flag_tolerances.applied_to(base_tolerances);
    if (flag_direction) config.direction = *flag_direction;
    if (flag_depth) config.subdivision_depth = *flag_depth;
    if (flag_cap) config.summit_cap = *flag_cap;
    if (flag_format) config.format = *flag_format;
    config.validate();
    if (flag_strands && *flag_strands < 2) {
      throw InputError("the strand count must be at least 2");
    }

    Context ctx;
    ctx.config = std::move(config);
    ctx.base_tolerances = base_tolerances;
    ctx.flag_tolerances = flag_tolerances;
    ctx.default_strands = flag_strands.value_or(0);
    ctx.in = &in;
    ctx.out = &out;
    ctx.err = &err;

    if (trace_cmd->parsed()) return cmd_trace(ctx, trace_path);
    if (nf_cmd->parsed()) return cmd_nf(ctx, nf_words);
    if (eq_cmd->parsed()) return cmd_eq(ctx, eq_first, eq_second);
    if (conj_cmd->parsed()) return cmd_conj(ctx, conj_first, conj_second);
    if (qeq_cmd->parsed()) return cmd_qeq(ctx, qeq_first, qeq_second);
    if (qconj_cmd->parsed()) return cmd_qconj(ctx, qconj_first, qconj_second);
    if (homotopic_cmd->parsed()) {
      return cmd_homotopic(ctx, homotopic_first, homotopic_second);
    }
    if (presentation_cmd->parsed()) {
      return cmd_presentation(ctx, presentation_strands);
    }
    if (free_reduce_cmd->parsed()) {
      return cmd_free_reduce(ctx, free_reduce_word);
    }
    if (free_conj_cmd->parsed()) {
      return cmd_free_conj(ctx, free_conj_first, free_conj_second);
    }
    if (validate_cmd->parsed()) return cmd_validate(ctx, validate_path);
    if (rotation_cmd->parsed()) {
      return cmd_rotation(ctx, rotation_strands, rotation_samples);
    }
    return 2;
  } catch (const affbraid::ParseError& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const InputError& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& error) {
    err << "error: " << error.what() << "\n";
    return 3;
  } catch (const TraceError& error) {
    err << "error: " << error.what() << "\n";
    return 4;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  }
}

}  // namespace affbraid::cli
