#pragma once

#include <functional>
#include <string>
#include <vector>

#include "loaders.hpp"

namespace CLI {
class App;
}

namespace qvl::cli {

struct Outcome {
  Json result = Json::object();
  std::string text;
  int exit_code = kOk;
};

struct Command {
  CLI::App* app = nullptr;
  std::function<Outcome()> run;
};

std::vector<Command> register_commands(CLI::App& app);

}  // namespace qvl::cli
