#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "ftors/report.hpp"

using namespace ftors;

namespace {

RunConfig with_format(OutputFormat f) {
  RunConfig c;
  c.format = f;
  return c;
}

}  // namespace

TEST_CASE("classify predictions") {
  const RunConfig text;
  const Report a3 = run_subcommand("classify", "vertices 3; arrow 1 2; arrow 2 3", text);
  CHECK(a3.exit_code == kExitOk);
  CHECK(a3.body.find("Dynkin A3; rep-finite; 3 simples; f-tors is a lattice") != std::string::npos);
  const Report kron = run_subcommand("classify", "vertices 2; arrow 1 2; arrow 1 2", text);
  CHECK(kron.body.find("2 simples; f-tors is a lattice") != std::string::npos);
  const Report tri = run_subcommand("classify", "vertices 3; arrow 1 2; arrow 2 3; arrow 1 3", text);
  CHECK(tri.body.find("tame; 3 simples; f-tors is NOT a lattice") != std::string::npos);
}

TEST_CASE("tors on A2 as JSON") {
  const Report r = run_subcommand("tors", "vertices 2; arrow 1 2", with_format(OutputFormat::Json));
  REQUIRE(r.exit_code == kExitOk);
  const auto j = nlohmann::json::parse(r.body);
  CHECK(j.at("classes").size() == 5);
  CHECK(j.at("lattice").at("lattice_ok") == true);
}

TEST_CASE("knit DOT on A2") {
  const Report r = run_subcommand("knit", "vertices 2; arrow 1 2", with_format(OutputFormat::Dot));
  REQUIRE(r.exit_code == kExitOk);
  CHECK(r.body.rfind("digraph ar_quiver", 0) == 0);
}

TEST_CASE("exit codes") {
  const RunConfig text;
  CHECK(run_subcommand("knit", "vertices 2; arrow 1 2; arrow 2 1", text).exit_code == kExitBadInput);
  CHECK(run_subcommand("knit", "not a quiver", text).exit_code == kExitBadInput);
  CHECK(run_subcommand("knit", "vertices 2; arrow 1 2; arrow 1 2", text).exit_code == kExitBadInput);
  const Report nc = run_subcommand("nocover", "vertices 2; arrow 1 2", text);
  CHECK(nc.exit_code == kExitBadInput);
  CHECK(nc.message == "no Ext-cycles in finite type");
  CHECK(run_subcommand("tors", "vertices 3; arrow 1 2; arrow 2 3; arrow 1 3", text).exit_code == kExitBadInput);
  CHECK(run_subcommand("frobnicate", "vertices 1", text).exit_code == kExitBadInput);
  RunConfig bad;
  bad.prime = 6;
  CHECK(run_subcommand("classify", "vertices 1", bad).exit_code == kExitBadInput);
  bad.prime = 5;
  bad.dim_bound = 0;
  CHECK(run_subcommand("classify", "vertices 1", bad).exit_code == kExitBadInput);
  CHECK(run_subcommand("extpair", "vertices 3; arrow 1 2; arrow 2 3; arrow 1 3", with_format(OutputFormat::Dot))
            .exit_code == kExitBadInput);
}

TEST_CASE("extpair on the double-single quiver") {
  const Report r = run_subcommand("extpair", "vertices 3; arrow 1 2; arrow 1 2; arrow 2 3",
                                  with_format(OutputFormat::Json));
  REQUIRE(r.exit_code == kExitOk);
  const auto j = nlohmann::json::parse(r.body);
  CHECK(j.at("construction") == "double-single");
  CHECK(j.at("verified") == true);
}
