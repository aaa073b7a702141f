// f2fix <command> --endo "a->...;b->..." [--word W] [--z Z] [--k K]
//       [--max-p N] [--max-len N] [--oracle-len N] [--format text|json]

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "f2fix/cli.hpp"

int main(int argc, char** argv) {
  using namespace f2fix::cli;

  CLI::App app{"Fixed subgroups of endomorphisms of the free group F(a,b)"};
  app.require_subcommand(1, 1);

  Request     req;
  std::string format = "text";

  auto add = [&](std::string const& name, std::string const& about, bool endo,
                 bool instance, bool oracle) {
    auto* sub = app.add_subcommand(name, about);
    if (endo) {
      sub->add_option("--endo", req.endo, "endomorphism, e.g. \"a->a;b->baba^2\"");
    }
    if (instance) {
      sub->add_option("--word", req.word, "the word P");
      sub->add_option("--z", req.z, "the image Z of b");
      sub->add_option("--k", req.k, "exponent of a");
    }
    if (oracle) {
      sub->add_option("--oracle-len", req.oracle_len, "maximum word length")
          ->check(CLI::Range(0, 14));
    }
    sub->add_option("--max-p", req.budget.max_p, "power budget of the identity search")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-len", req.budget.max_len, "word-length budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  add("classify", "non-injective, automorphism or non-surjective monomorphism", true, false, false);
  add("fix", "basis of the fixed subgroup", true, false, false);
  add("stable-image", "basis of the stable image", true, false, false);
  add("mofix", "maximal outer fixed points up to inversion", true, false, false);
  add("twisted", "solve P = phi_Z(W) a^k W^-1 for W", false, true, false);
  add("solve-conjugator", "solve P = phi_Z(W) a^k W^-1 for W and k", false, true, false);
  add("oracle-fix", "fixed words up to --oracle-len by enumeration", true, false, true);
  add("oracle-mofix", "outer fixed classes up to --oracle-len by enumeration", true, false, true);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }
  req.command = app.get_subcommands().front()->get_name();
  req.format  = format == "json" ? Format::Json : Format::Text;

  Response resp = run(req);
  (resp.exit_code == exit_input_error ? std::cerr : std::cout) << resp.output;
  return resp.exit_code;
}
