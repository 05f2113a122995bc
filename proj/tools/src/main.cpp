#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using qvl::Json;

struct Failure {
  int code;
  std::string kind;
  std::string message;
  Json extra = Json::object();
};

int report(bool json, const std::string& command, const Failure& f) {
  if (json) {
    Json err = {{"kind", f.kind}, {"message", f.message}};
    err.update(f.extra);
    std::cout << Json{{"command", command}, {"ok", false}, {"exit_code", f.code}, {"error", err}}
                     .dump(2)
              << "\n";
  } else {
    std::cerr << "qvl: " << f.kind << " error: " << f.message << "\n";
  }
  return f.code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qvl::cli;
  CLI::App app{"Exact computations with bound quiver algebras and their varieties", "qvl"};
  bool json = false;
  app.add_flag("--json", json, "Print a JSON report");
  app.require_subcommand(1);
  const auto commands = register_commands(app);
  for (const auto& c : commands) {
    c.app->add_flag("--json", json, "Print a JSON report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qvl: usage error: " << e.what() << "\n";
    return kUsage;
  }

  for (const auto& c : commands) {
    if (!c.app->parsed()) continue;
    const std::string name = c.app->get_name();
    try {
      const Outcome out = c.run();
      if (json) {
        std::cout << Json{{"command", name},
                          {"ok", out.exit_code == kOk},
                          {"exit_code", out.exit_code},
                          {"result", out.result}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << out.text;
      }
      return out.exit_code;
    } catch (const UsageError& e) {
      return report(json, name, {kUsage, "usage", e.what()});
    } catch (const IoError& e) {
      return report(json, name, {kIo, "io", e.what()});
    } catch (const qvl::ParseError& e) {
      return report(json, name,
                    {kSyntax, "syntax", e.what(), {{"line", e.line()}, {"column", e.column()}}});
    } catch (const qvl::SemanticError& e) {
      return report(json, name, {kSemantic, "semantic", e.what()});
    } catch (const qvl::BudgetExceeded& e) {
      return report(json, name, {kBudget, "budget", e.what()});
    } catch (const qvl::ValidationError& e) {
      return report(json, name, {kCheckFailed, "validation", e.what()});
    } catch (const Json::exception& e) {
      return report(json, name, {kSemantic, "semantic", e.what()});
    }
  }
  return kUsage;
}
