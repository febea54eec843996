// Command-line front end. Talks to the library exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "antilin/antilin.h"

namespace {

constexpr int kExitInput = 2;

struct Options {
  std::uint64_t seed = 42;
  double tolerance = 1e-10;
  int trials = 100;
  int threads = 1;
  std::vector<std::string> dims;
  std::string out;
  bool entangled = false;
  std::vector<std::string> files;
};

class Failure {
 public:
  Failure(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

struct CString {
  char* p = nullptr;
  ~CString() { al_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct State {
  al_state* p = nullptr;
  ~State() { al_state_free(p); }
};

[[noreturn]] void fail_status(al_status s) { throw Failure(al_exit_code(s), al_last_error()); }

void check(al_status s) {
  if (s != AL_OK) fail_status(s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kExitInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Re-serializes a state file, so malformed input is rejected before it is
/// spliced into a larger document.
std::string canonical_state(const std::string& path) {
  State st;
  check(al_state_from_json(read_file(path).c_str(), &st.p));
  CString text;
  check(al_state_to_json(st.p, &text.p));
  return text.str();
}

/// Accepts "2,3,4", "2..4" and repeated values.
std::vector<std::size_t> parse_dims(const std::vector<std::string>& items) {
  std::vector<std::size_t> out;
  const auto number = [](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    long long v = -1;
    try {
      v = std::stoll(s, &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos != s.size() || v < 1) throw Failure(kExitInput, "invalid dimension \"" + s + "\"");
    return static_cast<std::size_t>(v);
  };
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      const auto dots = part.find("..");
      if (dots == std::string::npos) {
        out.push_back(number(part));
        continue;
      }
      const std::size_t lo = number(part.substr(0, dots));
      const std::size_t hi = number(part.substr(dots + 2));
      if (hi < lo) throw Failure(kExitInput, "empty dimension range \"" + part + "\"");
      for (std::size_t d = lo; d <= hi; ++d) out.push_back(d);
    }
  }
  return out;
}

void emit(const Options& opt, const std::string& json) {
  if (opt.out.empty()) {
    std::cout << json;
    std::cout.flush();
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f || !(f << json)) throw Failure(kExitInput, "cannot write " + opt.out);
}

int finish(const Options& opt, al_status s, const CString& json, const CString& summary) {
  if (s != AL_OK && s != AL_ERR_TOLERANCE_EXCEEDED) fail_status(s);
  const std::string message = s == AL_OK ? "" : al_last_error();
  emit(opt, json.str());
  std::cerr << summary.str();
  if (s != AL_OK) {
    std::cerr << "error: " << message << "\n";
    return al_exit_code(s);
  }
  return 0;
}

int run_report(const Options& opt, const char* command, const std::string& input) {
  CString json, summary;
  const al_status s = al_report(command, input.c_str(), opt.tolerance, &json.p, &summary.p);
  return finish(opt, s, json, summary);
}

void expect_files(const Options& opt, std::size_t lo, std::size_t hi, const char* usage) {
  if (opt.files.size() < lo || opt.files.size() > hi) throw Failure(kExitInput, std::string("usage: ") + usage);
}

int cmd_single(const Options& opt, const char* command) {
  expect_files(opt, 1, 1, (std::string(command) + " FILE").c_str());
  return run_report(opt, command, read_file(opt.files[0]));
}

int cmd_pair(const Options& opt, const char* command, const char* first, const char* second) {
  expect_files(opt, 1, 2,
               (std::string(command) + " FILE | " + command + " " + first + "_FILE " + second + "_FILE").c_str());
  if (opt.files.size() == 1) return run_report(opt, command, read_file(opt.files[0]));
  const std::string doc = std::string("{\"") + first + "\":" + canonical_state(opt.files[0]) + ",\"" + second +
                          "\":" + canonical_state(opt.files[1]) + "}";
  return run_report(opt, command, doc);
}

int cmd_verify(const Options& opt) {
  al_verify_config cfg = al_verify_defaults();
  const std::vector<std::size_t> dims = parse_dims(opt.dims);
  cfg.seed = opt.seed;
  cfg.tolerance = opt.tolerance;
  cfg.trials = opt.trials;
  cfg.threads = opt.threads;
  if (!dims.empty()) {
    cfg.dims = dims.data();
    cfg.n_dims = dims.size();
  }
  CString json, summary;
  const al_status s = al_verify(&cfg, &json.p, &summary.p);
  return finish(opt, s, json, summary);
}

int cmd_random(const Options& opt) {
  std::vector<std::size_t> dims = parse_dims(opt.dims);
  if (dims.empty()) dims = {2, 2};
  if (dims.size() == 1) dims.push_back(dims[0]);
  if (dims.size() != 2) throw Failure(kExitInput, "random takes --dims DIM_A,DIM_B");
  State st;
  check(al_state_random(dims[0], dims[1], opt.seed, opt.entangled ? 1 : 0, &st.p));
  CString text;
  check(al_state_to_json(st.p, &text.p));
  emit(opt, text.str() + "\n");
  std::cerr << "random: " << dims[0] << "x" << dims[1] << " state, seed " << opt.seed
            << (opt.entangled ? ", completely entangled" : "") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Antilinear EPR maps, teleportation channels and modular operators"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("--tolerance", opt.tolerance, "Residual tolerance; limits scale with tolerance / 1e-10")
      ->check(CLI::PositiveNumber);
  app.add_option("--trials", opt.trials, "Number of random trials")->check(CLI::PositiveNumber);
  app.add_option("--dims", opt.dims, "Dimensions: comma list or range such as 2..4")->delimiter(',');
  app.add_option("--out", opt.out, "Write the JSON report to this file instead of stdout");
  app.add_option("--threads", opt.threads, "Worker threads for verify")->check(CLI::PositiveNumber);
  app.add_flag("--entangled", opt.entangled, "random: draw a completely entangled state");

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"epr", "EPR maps, reductions and polar parts of a state (FILE)"},
      {"teleport", "Teleportation map from a channel FILE or PSI_FILE PHI_FILE"},
      {"luders", "Luders channel from FILE with psis or projection, phi_bc, optional nu"},
      {"chain", "Four-stage chain from FILE with stages"},
      {"modular", "Tomita operators from FILE with phi, psi or PHI_FILE PSI_FILE"},
      {"verify", "Run every identity over seeded random instances"},
      {"random", "Draw a seeded random state"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    if (std::string(s.name) != "verify" && std::string(s.name) != "random") {
      sub->add_option("files", opt.files, "Input JSON files");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "verify") return cmd_verify(opt);
    if (command == "random") return cmd_random(opt);
    if (command == "teleport") return cmd_pair(opt, "teleport", "psi_ab", "phi_bc");
    if (command == "modular") return cmd_pair(opt, "modular", "phi", "psi");
    return cmd_single(opt, command.c_str());
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message() << "\n";
    return f.code();
  }
}
