#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "divisor_forge/script/interpreter.hpp"
#include "divisor_forge/script/parser.hpp"

using namespace dforge::script;

namespace {

void emit(const Output& o, bool json) {
  if (json)
    std::cout << o.json.dump() << '\n';
  else
    std::cout << o.text << '\n';
  std::cout.flush();
}

void report(std::string_view source, std::string_view name, Loc loc, const std::string& message, int code,
            bool json) {
  if (json) {
    nlohmann::json err = {{"line", loc.line}, {"column", loc.column}, {"message", message}, {"exit_code", code}};
    std::cout << nlohmann::json{{"error", err}}.dump() << '\n';
  }
  std::cerr << formatDiagnostic(source, name, loc, message);
}

int runFile(const std::string& path, bool json, bool graded) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "divisor-forge: cannot read " << path << '\n';
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string source = buffer.str();

  Script script;
  try {
    script = parseScript(source);
  } catch (const ParseError& e) {
    report(source, path, e.loc(), e.what(), 1, json);
    return 1;
  }
  Session session(graded);
  for (auto& statement : script.statements) {
    try {
      if (auto o = session.execute(statement)) emit(*o, json);
    } catch (const ScriptError& e) {
      report(source, path, e.loc(), e.what(), e.exitCode(), json);
      return e.exitCode();
    }
  }
  return 0;
}

// A statement is complete once the buffer, comments aside, ends in ';'.
bool complete(const std::string& buffer) {
  std::string stripped;
  std::istringstream lines(buffer);
  for (std::string line; std::getline(lines, line);) {
    auto cut = std::min(line.find('#'), line.find("//"));
    stripped += line.substr(0, cut);
  }
  auto last = stripped.find_last_not_of(" \t\r\n");
  return last != std::string::npos && stripped[last] == ';';
}

int repl(bool json, bool graded) {
  const bool interactive = isatty(STDIN_FILENO);
  Session session(graded);
  std::string buffer;
  int status = 0;
  size_t consumed = 0;  // lines before the buffer, so locations stay absolute
  auto prompt = [&] {
    if (interactive) std::cout << (buffer.empty() ? "df> " : "... ") << std::flush;
  };
  prompt();
  for (std::string line; std::getline(std::cin, line); prompt()) {
    buffer += line + '\n';
    if (!complete(buffer)) continue;
    // Padding with the earlier line breaks keeps reported lines absolute.
    std::string source = std::string(consumed, '\n') + buffer;
    consumed += static_cast<size_t>(std::count(buffer.begin(), buffer.end(), '\n'));
    buffer.clear();
    try {
      for (auto& statement : parseScript(source).statements)
        if (auto o = session.execute(statement)) emit(*o, json);
    } catch (const ParseError& e) {
      report(source, "<stdin>", e.loc(), e.what(), 1, json);
      status = 1;
    } catch (const ScriptError& e) {
      report(source, "<stdin>", e.loc(), e.what(), e.exitCode(), json);
      status = e.exitCode();
    }
  }
  if (interactive) std::cout << '\n';
  return interactive ? 0 : status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil divisors on normal graded domains"};
  app.require_subcommand(1);

  std::string script;
  bool json = false, graded = false;
  auto* run = app.add_subcommand("run", "Run a script");
  run->add_option("script", script, "Script file")->required();
  run->add_flag("--json", json, "Emit one JSON record per output line");
  run->add_flag("--graded", graded, "Default graded=true for checks and divisorOf");

  auto* interactive = app.add_subcommand("repl", "Read statements from standard input");
  interactive->add_flag("--json", json, "Emit one JSON record per output line");
  interactive->add_flag("--graded", graded, "Default graded=true for checks and divisorOf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (*run) return runFile(script, json, graded);
  return repl(json, graded);
}
