// Command-line front end. Everything goes through the C API in monres.h;
// this file only handles argument parsing, input loading, and exit codes.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monres.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // mismatch, falsified invariant, internal
constexpr int kExitUsage = 2;     // bad flags, malformed input, domain errors
constexpr int kExitResource = 3;  // face cap or retry budget exceeded

int exit_code_for(monres_status status) {
  switch (status) {
    case MONRES_OK: return kExitOk;
    case MONRES_ERR_RESOURCE: return kExitResource;
    case MONRES_ERR_USAGE:
    case MONRES_ERR_PARSE:
    case MONRES_ERR_DOMAIN: return kExitUsage;
    case MONRES_ERR_INTERNAL:
    case MONRES_ERR_MISMATCH:
    default: return kExitFailure;
  }
}

int report(monres_status status) {
  if (status != MONRES_OK) {
    std::cerr << "error: " << monres_last_error() << "\n";
  }
  return exit_code_for(status);
}

void flush_diagnostics() {
  const char* diag = monres_last_diagnostics();
  if (diag != nullptr && diag[0] != '\0') {
    std::cerr << "warning: " << diag << "\n";
  }
}

// The positional ideal argument is a path when it names a readable file,
// "-" for stdin, and inline text otherwise.
std::string load_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(arg);
  if (file.good()) {
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }
  return arg;
}

struct IdealHandle {
  monres_ideal* ptr = nullptr;
  ~IdealHandle() { monres_ideal_free(ptr); }
};

struct OutputString {
  char* ptr = nullptr;
  ~OutputString() { monres_free(ptr); }
};

int parse_ideal_arg(const std::string& arg, IdealHandle& ideal) {
  monres_status status =
      monres_ideal_parse(load_input(arg).c_str(), &ideal.ptr);
  if (status != MONRES_OK) return report(status);
  flush_diagnostics();
  return kExitOk;
}

int emit(monres_status status, const OutputString& out) {
  if (out.ptr != nullptr) std::cout << out.ptr;
  return report(status);
}

int format_code(const std::string& name) {
  if (name == "text") return MONRES_FORMAT_TEXT;
  if (name == "json") return MONRES_FORMAT_JSON;
  return MONRES_FORMAT_DOT;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multigraded Betti numbers of monomial ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(monres_version()));

  std::string ideal_arg;
  std::string method = "decompose";
  std::string field = "Q";
  std::string format = "text";
  std::uint64_t seed = 0;
  int max_gens = 20;
  int count = 100;
  int vars = 4;
  int max_exp = 4;
  bool artinian = false;
  bool almost_generic = false;
  int semidominant = 0;
  bool tree = false;
  std::string mdeg;
  std::string conjecture;

  auto add_common = [&](CLI::App* cmd, bool with_ideal) {
    if (with_ideal) {
      cmd->add_option("ideal", ideal_arg,
                      "ideal: inline text, a file path, or - for stdin");
    }
    cmd->add_option("--method", method, "decompose, oracle, or cancel")
        ->check(CLI::IsMember({"decompose", "oracle", "cancel"}));
    cmd->add_option("--field", field, "Q or Fp:<prime>");
    cmd->add_option("--format", format, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--seed", seed, "pivot order / campaign seed");
    cmd->add_option("--max-gens", max_gens, "generator cap (2^q faces)")
        ->check(CLI::Range(1, 20));
  };
  auto add_random = [&](CLI::App* cmd) {
    cmd->add_option("--count", count, "number of random instances");
    cmd->add_option("--vars", vars, "variable count bound");
    cmd->add_option("--max-exp", max_exp, "exponent bound");
    cmd->add_flag("--artinian", artinian, "restrict to Artinian ideals");
    cmd->add_flag("--almost-generic", almost_generic,
                  "restrict to almost generic ideals");
    cmd->add_option("--semidominant", semidominant,
                    "restrict to exactly this many nondominant generators");
  };

  auto* cmd_classify = app.add_subcommand(
      "classify", "dominance classification of the generators");
  add_common(cmd_classify, true);

  auto* cmd_betti =
      app.add_subcommand("betti", "multigraded Betti numbers of S/M");
  add_common(cmd_betti, true);

  auto* cmd_pd = app.add_subcommand("pd", "projective dimension of S/M");
  add_common(cmd_pd, true);

  auto* cmd_scarf = app.add_subcommand("scarf", "Scarf complex face list");
  add_common(cmd_scarf, true);
  cmd_scarf->add_option(
      "--mdeg", mdeg,
      "restrict the full Taylor face lattice to this multidegree instead");

  auto* cmd_decompose =
      app.add_subcommand("decompose", "structural decomposition");
  add_common(cmd_decompose, true);
  cmd_decompose->add_flag("--tree", tree, "full recursive decomposition tree");

  auto* cmd_verify = app.add_subcommand(
      "verify",
      "compare the three methods (random campaign without an ideal)");
  add_common(cmd_verify, true);
  add_random(cmd_verify);

  auto* cmd_fuzz = app.add_subcommand(
      "fuzz", "randomized falsification search for the conjectures");
  cmd_fuzz->add_option("conjecture", conjecture, "C1, C2, or C3 (default all)")
      ->check(CLI::IsMember({"C1", "C2", "C3"}));
  add_common(cmd_fuzz, false);
  add_random(cmd_fuzz);
  auto* cmd_conjectures = app.add_subcommand("conjectures", "alias for fuzz");
  cmd_conjectures->add_option("conjecture", conjecture, "C1, C2, or C3")
      ->check(CLI::IsMember({"C1", "C2", "C3"}));
  add_common(cmd_conjectures, false);
  add_random(cmd_conjectures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  monres_options options{};
  options.method = method.c_str();
  options.field = field.c_str();
  options.seed = seed;
  options.max_generators = max_gens;
  options.format = format_code(format);

  monres_random_params random_params{};
  random_params.vars = vars;
  random_params.max_gens = max_gens;
  random_params.max_exp = max_exp;
  random_params.count = count;
  random_params.artinian = artinian ? 1 : 0;
  random_params.almost_generic = almost_generic ? 1 : 0;
  random_params.semidominant = semidominant;

  auto need_ideal = [&](IdealHandle& ideal) -> int {
    if (ideal_arg.empty()) {
      std::cerr << "error: this command needs an ideal\n";
      return kExitUsage;
    }
    return parse_ideal_arg(ideal_arg, ideal);
  };

  if (cmd_classify->parsed()) {
    IdealHandle ideal;
    if (int code = need_ideal(ideal); code != kExitOk) return code;
    OutputString out;
    return emit(monres_classify(ideal.ptr, options.format, &out.ptr), out);
  }
  if (cmd_betti->parsed()) {
    IdealHandle ideal;
    if (int code = need_ideal(ideal); code != kExitOk) return code;
    OutputString out;
    return emit(monres_betti(ideal.ptr, &options, &out.ptr), out);
  }
  if (cmd_pd->parsed()) {
    IdealHandle ideal;
    if (int code = need_ideal(ideal); code != kExitOk) return code;
    int pd = 0;
    monres_status status = monres_pd(ideal.ptr, &options, &pd);
    if (status != MONRES_OK) return report(status);
    if (options.format == MONRES_FORMAT_JSON) {
      std::cout << "{\n  \"pd\": " << pd << "\n}\n";
    } else {
      std::cout << pd << "\n";
    }
    return kExitOk;
  }
  if (cmd_scarf->parsed()) {
    IdealHandle ideal;
    if (int code = need_ideal(ideal); code != kExitOk) return code;
    OutputString out;
    return emit(monres_scarf(ideal.ptr, &options,
                             mdeg.empty() ? nullptr : mdeg.c_str(), &out.ptr),
                out);
  }
  if (cmd_decompose->parsed()) {
    IdealHandle ideal;
    if (int code = need_ideal(ideal); code != kExitOk) return code;
    OutputString out;
    return emit(monres_decompose(ideal.ptr, &options, tree ? 1 : 0, &out.ptr),
                out);
  }
  if (cmd_verify->parsed()) {
    if (!ideal_arg.empty()) {
      IdealHandle ideal;
      if (int code = parse_ideal_arg(ideal_arg, ideal); code != kExitOk) {
        return code;
      }
      OutputString out;
      return emit(monres_verify(ideal.ptr, &options, &out.ptr), out);
    }
    OutputString out;
    return emit(monres_verify_random(&random_params, &options, &out.ptr), out);
  }
  if (cmd_fuzz->parsed() || cmd_conjectures->parsed()) {
    std::vector<std::string> which;
    if (conjecture.empty()) {
      which = {"C1", "C2", "C3"};
    } else {
      which = {conjecture};
    }
    std::vector<std::string> documents;
    for (const auto& name : which) {
      OutputString out;
      monres_status status =
          monres_fuzz(name.c_str(), &random_params, count, &options, &out.ptr);
      if (status != MONRES_OK) return report(status);
      documents.emplace_back(out.ptr);
    }
    if (options.format == MONRES_FORMAT_JSON && documents.size() > 1) {
      std::cout << "[\n";
      for (std::size_t i = 0; i < documents.size(); ++i) {
        std::string doc = documents[i];
        while (!doc.empty() && doc.back() == '\n') doc.pop_back();
        std::cout << doc << (i + 1 < documents.size() ? ",\n" : "\n");
      }
      std::cout << "]\n";
    } else {
      for (const auto& doc : documents) std::cout << doc;
    }
    return kExitOk;
  }
  return kExitUsage;
}
