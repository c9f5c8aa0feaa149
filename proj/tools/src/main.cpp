#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qnss_cli/commands.hpp"

namespace {

// Writes next to the target and renames, so readers never see a partial file.
bool write_atomically(const std::string& path, const std::string& data) {
  std::filesystem::path tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!(out << data)) return false;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

}  // namespace

int main(int argc, char** argv) {
  using qnss::cli::Flags;
  CLI::App app{"Exact left-ideal membership and vanishing decisions over quaternion and matrix polynomial rings"};
  app.set_version_flag("--version", "qnss 0.1.0");

  std::string command;
  std::string file;
  std::string output;
  Flags flags;
  std::string cache;

  const auto& names = qnss::cli::command_names();
  app.add_option("command", command, "gb, member, nss-decide, nss-certify, verify-cert, embed, decompose, "
                                     "witness-check, intersect, sample")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("file", file, "Problem file (JSON certificate or envelope for verify-cert)")->required();
  app.add_option("--order", flags.order, "Monomial order: grevlex, lex, grevlex-top, lex-top")->capture_default_str();
  app.add_option("--degree-cap", flags.degree_cap, "S-pair degree cap")->capture_default_str();
  app.add_option("--probes", flags.probes, "Seeded dense probes after the coordinate probes")->capture_default_str();
  app.add_option("--trials", flags.trials, "Sample points for witness search")->capture_default_str();
  app.add_option("--seed", flags.seed, "Random seed")->capture_default_str();
  app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--cache", cache, "Directory for Groebner basis dumps");
  app.add_flag("--timings", flags.timings, "Include wall-clock timings");
  app.add_option("-o,--output", output, "Write the result to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : qnss::cli::kUsageError;
  }
  if (!cache.empty()) flags.cache_dir = cache;

  qnss::cli::Envelope env;
  try {
    env = qnss::cli::run_file(command, file, flags);
  } catch (const std::exception& e) {
    std::cerr << "qnss: " << e.what() << "\n";
    return qnss::cli::kInternalError;
  }
  const std::string rendered = qnss::cli::render(env, flags.format);
  if (!output.empty()) {
    if (!write_atomically(output, rendered)) {
      std::cerr << "qnss: cannot write '" << output << "'\n";
      return qnss::cli::kUsageError;
    }
  } else {
    std::fwrite(rendered.data(), 1, rendered.size(), stdout);
    std::fflush(stdout);
  }
  return env.exit_code;
}
