// hamvf: batch front-end. Reads a config file, runs every (or the selected) method
// and prints the expression listing; the CSV table goes wherever [output] csv points.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamvf/hamvf.h"

namespace {

struct SpecDeleter {
  void operator()(hamvf_spec* spec) const { hamvf_spec_free(spec); }
};
using SpecPtr = std::unique_ptr<hamvf_spec, SpecDeleter>;

void write_stdout(const char* text, size_t length, void*) { std::fwrite(text, 1, length, stdout); }
void write_stderr(const char* text, size_t length, void*) { std::fwrite(text, 1, length, stderr); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy-analysis series solver for Volterra-Fredholm integro-differential equations"};
  std::string config_path;
  std::vector<std::string> only;
  bool check = false;
  app.add_option("config", config_path, "Run configuration file")->required();
  app.add_option("--only", only, "Run only the method with this label (repeatable, or comma separated)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->delimiter(',');
  app.add_flag("--check", check, "Parse and validate the config without solving");
  app.set_version_flag("--version", std::string(hamvf_version()));
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "hamvf: cannot read '" << config_path << "'\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  hamvf_spec* raw = nullptr;
  if (hamvf_spec_parse(text.data(), text.size(), &raw) != HAMVF_OK) {
    std::cerr << config_path << ": " << hamvf_last_error() << "\n";
    return 2;
  }
  SpecPtr spec(raw);

  if (!only.empty()) {
    std::vector<const char*> labels;
    for (const auto& label : only) labels.push_back(label.c_str());
    if (hamvf_spec_select(spec.get(), labels.data(), labels.size()) != HAMVF_OK) {
      std::cerr << config_path << ": " << hamvf_last_error() << "\n";
      return 2;
    }
  }

  if (check) {
    for (size_t i = 0; i < hamvf_spec_method_count(spec.get()); ++i) {
      std::cout << "ok " << hamvf_spec_method_label(spec.get(), i) << "\n";
    }
    return 0;
  }

  switch (hamvf_execute(spec.get(), write_stdout, write_stderr, nullptr)) {
    case HAMVF_OK: return 0;
    case HAMVF_E_CONFIG: return 2;
    case HAMVF_E_SOLVER: return 3;
    default:
      std::cerr << "hamvf: " << hamvf_last_error() << "\n";
      return 3;
  }
}
