#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ftors/report.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return static_cast<bool>(in) || in.eof();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion classes, Ext-pairs and covers for path algebras of acyclic quivers over F_p"};
  app.require_subcommand(1);

  ftors::RunConfig config;
  std::string input_path;
  std::string out_path;
  const std::map<std::string, ftors::OutputFormat> formats{
      {"text", ftors::OutputFormat::Text}, {"json", ftors::OutputFormat::Json}, {"dot", ftors::OutputFormat::Dot}};

  const std::vector<std::pair<std::string, std::string>> commands{
      {"classify", "Dynkin/Euclidean/wild type and predicted lattice status"},
      {"knit", "Auslander-Reiten quiver of a Dynkin quiver"},
      {"tors", "torsion classes, covers and lattice check"},
      {"extpair", "certified Ext-pair for a non-Dynkin quiver"},
      {"nocover", "bounded no-cover evidence for an Ext-pair"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input_path, "quiver file")->required();
    sub->add_option("--prime", config.prime, "field characteristic")->capture_default_str();
    sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
    sub->add_option("--dim-bound", config.dim_bound, "total dimension bound")->capture_default_str();
    sub->add_option("--loewy-bound", config.loewy_bound, "relative Loewy length bound")->capture_default_str();
    sub->add_option("--format", config.format, "text, json or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ftors::kExitBadInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string text;
  if (!read_file(input_path, text)) {
    std::cerr << "cannot read " << input_path << "\n";
    return ftors::kExitIo;
  }

  const ftors::Report report = ftors::run_subcommand(command, text, config);
  if (!report.message.empty()) std::cerr << report.message << "\n";
  if (!report.body.empty()) {
    if (out_path.empty()) {
      std::cout << report.body;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << report.body;
      out.close();
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return ftors::kExitIo;
      }
    }
  }
  return report.exit_code;
}
