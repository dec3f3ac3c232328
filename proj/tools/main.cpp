#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "diffgb/cli.hpp"

namespace {

struct Options {
  diffgb::RunConfig cfg;
  int weight_bound = 0;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--out", o.cfg.out, "write the report here instead of stdout");
  sub->add_flag("--check", o.cfg.check, "cross-verify against independent routes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated differential Groebner bases and partition identities"};
  app.require_subcommand(1);

  Options id, gb, wit, ser, par;

  auto* identity = app.add_subcommand("identity", "check a partition identity over a range of n");
  identity->add_option("--name", id.cfg.name, "rr, rrnm1, rrnm2 or twocolor")->required();
  identity->add_option("--range", id.cfg.range, "values of n, a..b");
  identity->add_option("--j", id.cfg.j, "twocolor parameter, a or a..b");
  identity->add_option("--k", id.cfg.k, "rrnm2 parameter, a or a..b");
  identity->add_flag("--shifted", id.cfg.shifted, "twocolor with every part >= j");
  add_common(identity, id);

  auto* gbc = app.add_subcommand("gb", "truncated Groebner basis of [x1^2] or [x1 y1]");
  gbc->add_option("--ideal", gb.cfg.ideal, "x2 or xy");
  gbc->add_option("--order", gb.cfg.order, "wlex or wrevlex");
  gbc->add_option("--weight-bound", gb.weight_bound, "W >= 2 (default 9 for x2, 8 for xy)");
  add_common(gbc, gb);

  auto* witness = app.add_subcommand("witness", "F-family chain and the x3^4 witness");
  wit.cfg.k = "6";
  witness->add_option("--k", wit.cfg.k, "depth of the F-family chain");
  add_common(witness, wit);

  auto* series = app.add_subcommand("series", "print a truncated q-series");
  series->add_option("--name", ser.cfg.name, "hnl, hk, rr_sum, node, partition, two_color_left, ab")->required();
  series->add_option("--order-n", ser.cfg.series_order, "truncation order N");
  series->add_option("--n", ser.cfg.n);
  series->add_option("--l", ser.cfg.l);
  series->add_option("--i", ser.cfg.i);
  series->add_option("--j", ser.cfg.j);
  series->add_option("--k", ser.cfg.k);
  add_common(series, ser);

  auto* parts = app.add_subcommand("partitions", "list the partitions of n in a family");
  parts->add_option("--name", par.cfg.name,
                    "unrestricted, gap2, mod5_14, minpart_maxsize, size_le_smallest, two_color_left, two_color_right")
      ->required();
  parts->add_option("--n", par.cfg.n);
  parts->add_option("--l", par.cfg.l);
  parts->add_option("--s", par.cfg.s);
  parts->add_option("--j", par.cfg.j);
  parts->add_option("--k", par.cfg.k);
  parts->add_flag("--shifted", par.cfg.shifted);
  add_common(parts, par);

  CLI11_PARSE(app, argc, argv);

  Options* chosen = nullptr;
  if (identity->parsed()) chosen = &id;
  if (gbc->parsed()) chosen = &gb;
  if (witness->parsed()) chosen = &wit;
  if (series->parsed()) chosen = &ser;
  if (parts->parsed()) chosen = &par;
  diffgb::RunConfig cfg = chosen->cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  if (gbc->parsed() && gbc->count("--weight-bound")) cfg.weight_bound = gb.weight_bound;

  try {
    const diffgb::Report rep = diffgb::run(cfg);
    const std::string text = rep.render(cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw std::runtime_error("cannot write " + cfg.out);
      f << text;
      std::cout << (rep.pass ? "PASS" : "FAIL") << " -> " << cfg.out << "\n";
    }
    return rep.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
