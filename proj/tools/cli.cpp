#include "cli.hpp"

#include "qbank/bank.hpp"
#include "qbank/error.hpp"
#include "qbank/file_io.hpp"
#include "qbank/maintenance.hpp"
#include "qbank/moodle_xml.hpp"
#include "qbank/preview.hpp"
#include "qbank/stats.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <optional>
#include <ostream>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

namespace qbank::cli {

namespace fs = std::filesystem;

namespace {

struct BuildArgs
{
  std::string script;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::vector<std::string> script_args;
};

struct StatsArgs
{
  std::string bank;
  std::uint64_t media_limit = kDefaultMediaWarnBytes;
};

struct PreviewArgs
{
  std::string bank;
  std::optional<std::string> out;
  std::optional<std::string> inline_math;
};

struct MaintainArgs
{
  std::string bank;
  std::optional<std::string> out;
  bool no_backup = false;
  bool allow_drop = false;
  // replace-text
  std::string from;
  std::string to;
  bool regex = false;
  // set-penalty
  double penalty = 0.0;
};

// Temporary file removed on scope exit; used to collect a child's output.
class CaptureFile
{
public:
  CaptureFile()
  {
    std::string pattern = (fs::temp_directory_path() / "qbank-capture-XXXXXX").string();
    m_fd = ::mkstemp(pattern.data());
    if (m_fd < 0) {
      throw IoError(pattern, std::strerror(errno));
    }
    m_path = pattern;
  }
  ~CaptureFile()
  {
    ::close(m_fd);
    ::unlink(m_path.c_str());
  }
  CaptureFile(const CaptureFile&) = delete;
  CaptureFile& operator=(const CaptureFile&) = delete;

  int fd() const { return m_fd; }
  std::string contents() const { return read_file(m_path); }

private:
  int m_fd = -1;
  std::string m_path;
};

int run_build(const BuildArgs& args, std::ostream& out, std::ostream& err)
{
  if (::access(args.script.c_str(), X_OK) != 0) {
    err << "error: " << args.script << ": not an executable script\n";
    return kScriptOrParseError;
  }
  std::optional<fs::path> target;
  if (args.out) {
    target = fs::absolute(*args.out);
  }

  CaptureFile child_out;
  CaptureFile child_err;
  pid_t pid = ::fork();
  if (pid < 0) {
    err << "error: cannot start " << args.script << ": " << std::strerror(errno) << '\n';
    return kScriptOrParseError;
  }
  if (pid == 0) {
    ::dup2(child_out.fd(), STDOUT_FILENO);
    ::dup2(child_err.fd(), STDERR_FILENO);
    if (args.seed) {
      ::setenv(kSeedEnv, std::to_string(*args.seed).c_str(), 1);
    }
    if (target) {
      ::setenv(kOutputEnv, target->c_str(), 1);
    }
    std::vector<char*> argv;
    std::string script = args.script;
    argv.push_back(script.data());
    std::vector<std::string> rest = args.script_args;
    for (auto& a : rest) {
      argv.push_back(a.data());
    }
    argv.push_back(nullptr);
    ::execv(script.c_str(), argv.data());
    std::fprintf(stderr, "cannot execute %s: %s\n", script.c_str(), std::strerror(errno));
    ::_exit(127);
  }

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0) {
    if (errno != EINTR) {
      err << "error: waiting for " << args.script << ": " << std::strerror(errno) << '\n';
      return kScriptOrParseError;
    }
  }
  out << child_out.contents();
  err << child_err.contents();

  if (WIFSIGNALED(status)) {
    err << "error: " << args.script << " terminated by signal " << WTERMSIG(status) << '\n';
    return kScriptOrParseError;
  }
  if (WEXITSTATUS(status) != 0) {
    err << "error: " << args.script << " exited with status " << WEXITSTATUS(status) << '\n';
    return kScriptOrParseError;
  }
  if (target) {
    if (!fs::exists(*target)) {
      err << "error: " << args.script << " did not write " << target->string() << " (missing close()?)\n";
      return kScriptOrParseError;
    }
    auto bank = parse_bank(read_file(*target), [&err](const Warning& w) { err << "WARN: " << w.message << '\n'; });
    out << "wrote " << target->string() << " (" << bank.size() << " questions)\n";
  }
  return kSuccess;
}

QuestionBank load_bank(const std::string& path, std::ostream& err)
{
  return parse_bank(read_file(path), [&err](const Warning& w) { err << "WARN: " << w.message << '\n'; });
}

int run_stats(const StatsArgs& args, std::ostream& out, std::ostream& err)
{
  auto bank = load_bank(args.bank, err);
  auto stats = compute_stats(bank.content(), args.media_limit);
  out << format_stats(stats);
  for (const auto& w : stats.warnings) {
    err << "WARN: " << w << '\n';
  }
  return kSuccess;
}

int run_preview(const PreviewArgs& args, std::ostream& out, std::ostream& err)
{
  auto bank = load_bank(args.bank, err);
  PreviewOptions options;
  options.title = fs::path(args.bank).filename().string();
  if (args.inline_math) {
    options.inline_math_script = *args.inline_math;
  }
  fs::path target = args.out ? fs::path(*args.out) : make_temp_preview_path();
  render_preview(bank.content(), target, options);
  out << target.string() << '\n';
  return kSuccess;
}

int run_maintain(const MaintainArgs& args, const std::string& op, std::ostream& out, std::ostream& err)
{
  auto bank = load_bank(args.bank, err);
  if (!bank.warnings().empty() && !args.allow_drop) {
    err << "error: " << bank.warnings().size()
        << " item(s) could not be read and would be dropped on rewrite; pass --allow-drop to proceed\n";
    return kScriptOrParseError;
  }

  std::size_t changed = 0;
  try {
    if (op == "replace-text") {
      changed = args.regex ? replace_regex(bank, args.from, args.to) : replace_text(bank, args.from, args.to);
    } else {
      changed = set_wrong_penalty(bank, args.penalty);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string xml = serialize_bank(bank);
  fs::path target = args.out ? fs::path(*args.out) : fs::path(args.bank);
  if (!args.out && !args.no_backup) {
    err << "backup: " << backup_file(args.bank).string() << '\n';
  }
  write_file_atomic(target, xml);
  out << changed << '\n';
  return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Build, inspect, preview and maintain Moodle XML question banks", "qbank"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Run an authoring script with an injected seed and output path");
  build_cmd->add_option("script", build.script, "Authoring program linked against libqbank")->required();
  build_cmd->add_option("--seed", build.seed, "Seed for every bank the script creates (default: $QBANK_SEED)");
  build_cmd->add_option("--out", build.out, "Output XML path, overriding the script's");
  build_cmd->add_option("script_args", build.script_args, "Arguments passed to the script (after --)");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print question counts and embedded media size");
  stats_cmd->add_option("bank", stats.bank, "Moodle XML file")->required();
  stats_cmd->add_option("--media-limit", stats.media_limit, "Per-question embedded media warning threshold (bytes)");

  PreviewArgs preview;
  auto* preview_cmd = app.add_subcommand("preview", "Render an XML bank to a standalone HTML page");
  preview_cmd->add_option("bank", preview.bank, "Moodle XML file")->required();
  preview_cmd->add_option("--out", preview.out, "HTML output path (default: a new temporary file)");
  preview_cmd->add_option("--inline-math", preview.inline_math, "Local math renderer script to inline");

  MaintainArgs maintain;
  auto* maintain_cmd = app.add_subcommand("maintain", "Apply a bulk edit to an XML bank");
  maintain_cmd->add_option("bank", maintain.bank, "Moodle XML file")->required();
  maintain_cmd->require_subcommand(1);
  maintain_cmd->fallthrough();
  maintain_cmd->add_option("--out", maintain.out, "Write here instead of editing in place");
  maintain_cmd->add_flag("--no-backup", maintain.no_backup, "Skip the timestamped .bak copy for in-place edits");
  maintain_cmd->add_flag("--allow-drop", maintain.allow_drop, "Rewrite even if unsupported questions are dropped");

  auto* replace_cmd = maintain_cmd->add_subcommand("replace-text", "Replace text in every question");
  replace_cmd->add_option("old", maintain.from, "Text to find")->required();
  replace_cmd->add_option("new", maintain.to, "Replacement")->required();
  replace_cmd->add_flag("--regex", maintain.regex, "Treat OLD as an ECMAScript regular expression");

  auto* penalty_cmd = maintain_cmd->add_subcommand("set-penalty", "Set every wrong-choice fraction");
  penalty_cmd->add_option("fraction", maintain.penalty, "Percentage in [-100, 0]")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*build_cmd) {
      return run_build(build, out, err);
    }
    if (*stats_cmd) {
      return run_stats(stats, out, err);
    }
    if (*preview_cmd) {
      return run_preview(preview, out, err);
    }
    return run_maintain(maintain, *replace_cmd ? "replace-text" : "set-penalty", out, err);
  } catch (const ParseError& e) {
    err << "error: parse error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kScriptOrParseError;
}

} // namespace qbank::cli
