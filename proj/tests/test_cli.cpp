#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "affbraid/braid_word.hpp"
#include "affbraid/cli.hpp"
#include "affbraid/garside.hpp"
#include "affbraid/loop_tracer.hpp"
#include "affbraid/text_io.hpp"
#include "helpers.hpp"

using namespace affbraid;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args,
                  const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliResult result;
  result.exit_code = cli::run(args, in, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

// Scratch file that cleans up after itself; commands that want a real path
// rather than standard input read from these.
struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("affbraid_cli_case_" + std::to_string(++counter) + ".txt");
    std::ofstream stream(path, std::ios::binary);
    stream << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};

// Two points orbit each other counterclockwise once while three bystanders
// sit far to the right; the traced word is the first band generator.
LoopTrajectory pair_swap_loop(int samples) {
  LoopTrajectory loop;
  for (int t = 0; t <= samples; ++t) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(t) / samples;
    Configuration frame;
    frame.points = {{std::cos(angle), std::sin(angle)},
                    {-std::cos(angle), -std::sin(angle)},
                    {4.0, 0.3},
                    {6.0, -0.4},
                    {8.0, 0.2}};
    loop.frames.push_back(frame);
  }
  loop.frames.back() = loop.frames.front();
  return loop;
}

// A two point trajectory whose endpoints differ by 1e-6, so whether it
// counts as closed depends entirely on eps_close.
const char* const kNearlyClosedJson =
    R"({"k": 2, "frames": [[[0.0, 0.0], [2.0, 2.0]], [[1e-06, 0.0], [2.0, 2.0]]]})";

const char* const kNearlyClosedJsonWithOverride =
    R"({"k": 2, "frames": [[[0.0, 0.0], [2.0, 2.0]], [[1e-06, 0.0], [2.0, 2.0]]],
        "tolerances": {"eps_close": 0.001}})";

}  // namespace

TEST_CASE("equality command renders verdicts for equal and different words") {
  const CliResult braid_relation = run_cli({"eq", "B3: 1 2 1", "B3: 2 1 2"});
  CHECK(braid_relation.exit_code == 0);
  CHECK(braid_relation.out == "equal\n");
  CHECK(braid_relation.err.empty());

  const CliResult different = run_cli({"eq", "B3: 1", "B3: 2"});
  CHECK(different.exit_code == 0);
  CHECK(different.out == "different\n");

  const CliResult structured =
      run_cli({"--format", "structured", "eq", "B3: 1", "B3: 2"});
  CHECK(structured.exit_code == 0);
  CHECK(structured.out == "{\"equal\":false}\n");
}

TEST_CASE("normal form command prints one line per word") {
  const CliResult lines = run_cli({"nf", "B3: 1 2 1", "1 -1"});
  CHECK(lines.exit_code == 0);
  CHECK(lines.out == "D^1\nD^0\n");

  const CliResult structured =
      run_cli({"--format", "structured", "nf", "B3: 1 2"});
  CHECK(structured.exit_code == 0);
  CHECK(structured.out == "{\"factors\":[[3,1,2]],\"infimum\":0,\"strands\":3}\n");

  const CliResult padded = run_cli({"nf", "--strands", "5", "1"});
  CHECK(padded.exit_code == 0);
  CHECK(padded.out == "D^0 | 2 1 3 4 5\n");
}

TEST_CASE("conjugacy command reports a witness that actually conjugates") {
  const CliResult shifted = run_cli({"conj", "B4: 1 2", "B4: 2 3"});
  CHECK(shifted.exit_code == 0);
  REQUIRE(shifted.out.substr(0, 10) == "conjugate\n");
  const std::string witness_line = shifted.out.substr(10);
  REQUIRE(witness_line.substr(0, 9) == "witness: ");
  const BraidWord witness =
      parse_braid_word(witness_line.substr(9, witness_line.size() - 10));
  const BraidWord a = parse_braid_word("B4: 1 2");
  const BraidWord b = parse_braid_word("B4: 2 3");
  CHECK(words_equal(compose(compose(witness, a), inverse(witness)), b));

  const CliResult structured =
      run_cli({"--format", "structured", "conj", "B4: 1 2", "B4: 2 3"});
  CHECK(structured.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(structured.out);
  CHECK(doc.at("conjugate") == true);
  const BraidWord json_witness =
      parse_braid_word(doc.at("witness").get<std::string>());
  CHECK(words_equal(compose(compose(json_witness, a), inverse(json_witness)), b));

  const CliResult negative = run_cli({"conj", "B3: 1", "B3: 1 1"});
  CHECK(negative.exit_code == 0);
  CHECK(negative.out == "not conjugate\n");
}

TEST_CASE("quotient commands collapse the full twist and warn below 5 strands") {
  const CliResult collapsed = run_cli({"qeq", "B3: 1 2 1 1 2 1", "B3:"});
  CHECK(collapsed.exit_code == 0);
  CHECK(collapsed.out == "equal\n");
  CHECK(collapsed.err.find("warning:") != std::string::npos);
  CHECK(collapsed.err.find("3 strands") != std::string::npos);

  const CliResult quiet = run_cli({"qeq", "B5: 1 1", "B5: 1 1"});
  CHECK(quiet.exit_code == 0);
  CHECK(quiet.out == "equal\n");
  CHECK(quiet.err.empty());

  const CliResult bands = run_cli({"qconj", "B5: 1 1", "B5: 2 2"});
  CHECK(bands.exit_code == 0);
  CHECK(bands.out == "conjugate\n");

  const CliResult separated = run_cli({"qconj", "B5: 1 1", "B5: 1 1 1 1"});
  CHECK(separated.exit_code == 0);
  CHECK(separated.out == "not conjugate\n");
}

TEST_CASE("rotation output pipes into trace and yields the full twist") {
  const CliResult emitted = run_cli({"rotation", "--k", "5", "--samples", "720"});
  REQUIRE(emitted.exit_code == 0);
  REQUIRE(emitted.out.substr(0, 2) == "t,");

  const CliResult traced = run_cli({"trace"}, emitted.out);
  REQUIRE(traced.exit_code == 0);
  const BraidWord word = parse_braid_word(traced.out);
  CHECK(word.strands() == 5);
  CHECK(is_pure(word));
  CHECK(exponent_sum(word) == 20);
  CHECK(words_equal(word, full_twist(5)));

  const CliResult structured =
      run_cli({"--format", "structured", "rotation", "--k", "3", "--samples", "24"});
  REQUIRE(structured.exit_code == 0);
  const TrajectoryFile file = parse_trajectory(structured.out);
  const LoopTrajectory reference = rotation_loop(3, 24);
  REQUIRE(file.loop.frames.size() == reference.frames.size());
  CHECK(file.loop.point_count() == 3);
  CHECK(file.loop.frames[0].points[0].x == reference.frames[0].points[0].x);
  CHECK(file.loop.frames[0].points[0].y == reference.frames[0].points[0].y);
}

TEST_CASE("homotopic command compares loops modulo the full twist") {
  const LoopTrajectory rotation = rotation_loop(5, 120);
  const TempFile rotation_file(format_trajectory_csv(rotation));
  const std::string stationary =
      format_trajectory_csv(testgen::stationary_loop(rotation.frames.front(), 40));

  const CliResult same = run_cli({"homotopic", rotation_file.str(), "-"},
                                 stationary);
  CHECK(same.exit_code == 0);
  REQUIRE(same.out.substr(0, 10) == "homotopic\n");
  CHECK(same.out.find("trace 1: D^2\n") != std::string::npos);
  CHECK(same.out.find("trace 2: D^0\n") != std::string::npos);

  const TempFile band_file(format_trajectory_csv(pair_swap_loop(64)));
  const CliResult different =
      run_cli({"homotopic", band_file.str(), "-"}, stationary);
  CHECK(different.exit_code == 0);
  CHECK(different.out.substr(0, 14) == "not homotopic\n");

  const CliResult structured = run_cli(
      {"--format", "structured", "homotopic", rotation_file.str(), "-"},
      stationary);
  CHECK(structured.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(structured.out);
  CHECK(doc.at("homotopic") == true);
  CHECK(doc.at("normal_forms").at(0).get<std::string>() == "D^2");
  CHECK(doc.at("normal_forms").at(1).get<std::string>() == "D^0");

  const CliResult both_stdin = run_cli({"homotopic", "-", "-"});
  CHECK(both_stdin.exit_code == 2);
}

TEST_CASE("free group commands reduce and compare words") {
  const CliResult reduced = run_cli({"free-reduce", "3 -3 5 11 -11 -5 2"});
  CHECK(reduced.exit_code == 0);
  CHECK(reduced.out == "2\n");

  const CliResult annihilated = run_cli({"free-reduce", "3 -3 5 -5"});
  CHECK(annihilated.exit_code == 0);
  CHECK(annihilated.out == "\n");

  const CliResult dash_leading = run_cli({"free-reduce", "-1 1 2"});
  CHECK(dash_leading.exit_code == 0);
  CHECK(dash_leading.out == "2\n");

  const CliResult after_marker = run_cli({"free-reduce", "--", "-1 1 2"});
  CHECK(after_marker.exit_code == 0);
  CHECK(after_marker.out == "2\n");

  const CliResult cyclic = run_cli({"free-conj", "1 2", "2 1"});
  CHECK(cyclic.exit_code == 0);
  CHECK(cyclic.out == "conjugate\n");

  const CliResult commutator = run_cli(
      {"--format", "structured", "free-conj", "1 1 2 2", "1 2 1 2"});
  CHECK(commutator.exit_code == 0);
  CHECK(commutator.out == "{\"conjugate\":false}\n");

  const CliResult out_of_range = run_cli({"free-reduce", "12"});
  CHECK(out_of_range.exit_code == 2);
}

TEST_CASE("presentation command emits both renderings") {
  const CliResult text = run_cli({"presentation", "--k", "3"});
  CHECK(text.exit_code == 0);
  CHECK(text.out ==
        "generators: A_1_2 A_1_3 A_2_3\n"
        "relator: -1 2 1 2 3 -2 -3 -2\n"
        "relator: -1 3 1 2 -3 -2\n"
        "relator: 1 2 3\n");

  const CliResult structured =
      run_cli({"--format", "structured", "presentation", "--k", "3"});
  CHECK(structured.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(structured.out);
  CHECK(doc.at("strands") == 3);
  CHECK(doc.at("center_relator_index") == 2);
  CHECK(doc.at("relators").size() == 3);

  const CliResult too_small = run_cli({"presentation", "--k", "1"});
  CHECK(too_small.exit_code == 2);
}

TEST_CASE("validate command reports margins and never fails the process") {
  const CliResult emitted = run_cli({"rotation", "--k", "3", "--samples", "24"});
  const CliResult report = run_cli({"validate"}, emitted.out);
  CHECK(report.exit_code == 0);
  REQUIRE(report.out.substr(0, 16) == "affine-spanning\n");
  CHECK(report.out.find("frames: 25\n") != std::string::npos);
  CHECK(report.out.find("closure residual: 0\n") != std::string::npos);
  CHECK(report.out.find("frame 1: separation ") != std::string::npos);

  // Open polyline: still a report and exit 0, the verdict carries the news.
  const std::string open_loop = "t,x1,y1\n0,0,0\n1,1,1\n";
  const CliResult invalid = run_cli({"validate"}, open_loop);
  CHECK(invalid.exit_code == 0);
  CHECK(invalid.out.substr(0, 8) == "invalid\n");
  CHECK(invalid.out.find("problem: ") != std::string::npos);

  const CliResult structured =
      run_cli({"--format", "structured", "validate"}, emitted.out);
  CHECK(structured.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(structured.out);
  CHECK(doc.at("verdict") == "affine-spanning");
  CHECK(doc.at("frames").size() == 25);
  CHECK(doc.at("closure_residual") == 0.0);
  CHECK(doc.at("problems").empty());
}

TEST_CASE("exit codes separate bad input, resource limits and trace failures") {
  const CliResult unparsable = run_cli({"eq", "B3: x", "B3:"});
  CHECK(unparsable.exit_code == 2);
  CHECK(unparsable.err.substr(0, 7) == "error: ");

  const CliResult impure = run_cli({"qeq", "B3: 1", "B3:"});
  CHECK(impure.exit_code == 2);
  CHECK(impure.err.find("pure") != std::string::npos);

  const CliResult mismatched = run_cli({"conj", "B3: 1", "B4: 1"});
  CHECK(mismatched.exit_code == 2);

  const CliResult capped = run_cli({"conj", "--cap", "1", "B4: 1", "B4: 2"});
  CHECK(capped.exit_code == 3);
  CHECK(capped.err.find("cap") != std::string::npos);

  const CliResult open_loop =
      run_cli({"trace"}, "t,x1,y1,x2,y2\n0,0,0,2,2\n1,1,0,2,2\n");
  CHECK(open_loop.exit_code == 4);
  CHECK(open_loop.err.find("not closed") != std::string::npos);

  const CliResult empty_input = run_cli({"trace"}, "");
  CHECK(empty_input.exit_code == 2);

  const CliResult unknown = run_cli({"frobnicate"});
  CHECK(unknown.exit_code == 2);

  const CliResult bare = run_cli({});
  CHECK(bare.exit_code == 2);

  const CliResult help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
  CHECK(help.out.find("Subcommands") != std::string::npos);

  const CliResult bad_strands = run_cli({"nf", "--strands", "1", "1"});
  CHECK(bad_strands.exit_code == 2);
  const CliResult bad_depth = run_cli({"trace", "--depth", "0"});
  CHECK(bad_depth.exit_code == 2);
  const CliResult bad_cap = run_cli({"eq", "--cap", "0", "B3: 1", "B3: 1"});
  CHECK(bad_cap.exit_code == 2);
  const CliResult bad_format =
      run_cli({"--format", "sideways", "eq", "B3: 1", "B3: 1"});
  CHECK(bad_format.exit_code == 2);
  CHECK(bad_format.err.find("format") != std::string::npos);
}

TEST_CASE("tolerance precedence runs defaults, config file, file, flags") {
  // Without help the 1e-6 closure gap is fatal.
  const CliResult defaults = run_cli({"trace"}, kNearlyClosedJson);
  CHECK(defaults.exit_code == 4);

  // A config file can widen the closure tolerance.
  const TempFile config("{\"eps_close\": 0.001}");
  const CliResult via_config =
      run_cli({"--config", config.str(), "trace"}, kNearlyClosedJson);
  CHECK(via_config.exit_code == 0);
  CHECK(via_config.out == "B2:\n");

  // A flag beats the config file.
  const CliResult flag_beats_config =
      run_cli({"--config", config.str(), "--eps-close", "1e-9", "trace"},
              kNearlyClosedJson);
  CHECK(flag_beats_config.exit_code == 4);

  // The trajectory file itself can carry the override.
  const CliResult via_file = run_cli({"trace"}, kNearlyClosedJsonWithOverride);
  CHECK(via_file.exit_code == 0);
  CHECK(via_file.out == "B2:\n");

  // And the file beats a stricter config file.
  const TempFile strict_config("{\"eps_close\": 1e-12}");
  const CliResult file_beats_config =
      run_cli({"--config", strict_config.str(), "trace"},
              kNearlyClosedJsonWithOverride);
  CHECK(file_beats_config.exit_code == 0);

  // But a flag still beats the file.
  const CliResult flag_beats_file =
      run_cli({"--eps-close", "1e-9", "trace"}, kNearlyClosedJsonWithOverride);
  CHECK(flag_beats_file.exit_code == 4);
}

TEST_CASE("config files reject unknown keys and wrong shapes") {
  const TempFile misspelled("{\"eps_clos\": 0.001}");
  const CliResult unknown_key =
      run_cli({"--config", misspelled.str(), "eq", "B3: 1", "B3: 1"});
  CHECK(unknown_key.exit_code == 2);
  CHECK(unknown_key.err.find("eps_clos") != std::string::npos);

  const TempFile not_object("[1, 2]");
  CHECK(run_cli({"--config", not_object.str(), "eq", "B3: 1", "B3: 1"})
            .exit_code == 2);

  const TempFile bad_type("{\"direction\": \"north\"}");
  const CliResult wrong_type =
      run_cli({"--config", bad_type.str(), "eq", "B3: 1", "B3: 1"});
  CHECK(wrong_type.exit_code == 2);
  CHECK(wrong_type.err.find("direction") != std::string::npos);

  const TempFile malformed("{\n  \"eps_sep\": oops\n}");
  const CliResult syntax =
      run_cli({"--config", malformed.str(), "eq", "B3: 1", "B3: 1"});
  CHECK(syntax.exit_code == 2);
  CHECK(syntax.err.find("line 2") != std::string::npos);

  const CliResult missing =
      run_cli({"--config", "/definitely/not/here.json", "eq", "B3: 1", "B3: 1"});
  CHECK(missing.exit_code == 2);

  // A config file can switch the output format, and the flag wins over it.
  const TempFile structured_config("{\"format\": \"structured\"}");
  const CliResult from_config =
      run_cli({"--config", structured_config.str(), "eq", "B3: 1", "B3: 1"});
  CHECK(from_config.out == "{\"equal\":true}\n");
  const CliResult overridden =
      run_cli({"--config", structured_config.str(), "--format", "text", "eq",
               "B3: 1", "B3: 1"});
  CHECK(overridden.out == "equal\n");
}

TEST_CASE("repeated runs are byte identical") {
  const std::vector<std::string> conj_args = {"--format", "structured", "conj",
                                              "B4: 1 2", "B4: 2 3"};
  const CliResult first = run_cli(conj_args);
  const CliResult second = run_cli(conj_args);
  CHECK(first.exit_code == second.exit_code);
  CHECK(first.out == second.out);
  CHECK(first.err == second.err);

  const std::vector<std::string> rotation_args = {"rotation", "--k", "4",
                                                  "--samples", "48"};
  const CliResult third = run_cli(rotation_args);
  const CliResult fourth = run_cli(rotation_args);
  CHECK(third.out == fourth.out);
}
