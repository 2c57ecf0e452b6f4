// hookblock: command-line access to the p-hook block computations.
//
// Every command prints one JSON envelope
//   {"command": ..., "params": {...}, "result": ..., "version": ...}
// unless a TSV/text format is requested. Exit status: 0 success,
// 1 verification failure, 2 usage error.

#include "hookblock/hookblock.hpp"
#include "hookblock/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using hookblock::Int;
using hookblock::Json;
using hookblock::Partition;

constexpr const char *kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options
{
  std::string partition;
  Int n = 0;
  Int r = 0;
  Int p = 0;
  std::string format = "json";
  std::string suite = "all";
  bool ledger = false;
  bool rank_only = false;
};

void print_envelope(const std::string &command, Json params, Json result)
{
  Json envelope = {{"command", command},
                   {"params", std::move(params)},
                   {"result", std::move(result)},
                   {"version", kVersion}};
  std::cout << envelope.dump(2) << '\n';
}

std::size_t dimension(Int n)
{
  if(n < 1)
    throw std::invalid_argument("--n must be at least 1");
  return static_cast<std::size_t>(n);
}

int run_blocks(const Options &o)
{
  hookblock::require_prime(o.p);
  const auto blocks = hookblock::block_partition(dimension(o.n), o.r, o.p);
  if(o.format == "tsv")
    {
      for(const auto &block : blocks)
        {
          std::cout << block.d;
          for(const Partition &lambda : block.members)
            std::cout << '\t' << lambda.to_string();
          std::cout << '\n';
        }
      return kExitOk;
    }
  // This payload is flat: {"n","r","p","blocks"}.
  Json result = {{"n", o.n}, {"r", o.r}, {"p", o.p},
                 {"blocks", hookblock::to_json(blocks)}};
  print_envelope("blocks", {{"n", o.n}, {"r", o.r}, {"p", o.p}}, result);
  return kExitOk;
}

int run_char(const Options &o, bool simple)
{
  const Partition lambda = Partition::parse(o.partition);
  const std::size_t n = dimension(o.n);
  Json params = {{"partition", lambda.to_string()}, {"n", o.n}};
  hookblock::CharacterElement ch(n);
  if(simple)
    {
      hookblock::require_prime(o.p);
      params["p"] = o.p;
      const Int i = hookblock::hook_index(lambda, o.p);
      const Int top = hookblock::hook_range_top(o.p, n);
      if(i < 0 || i > top)
        throw std::invalid_argument(
          "simple characters are known here only for p-hooks (p-i,1^i) with "
          "0 <= i <= min(n-1,p-1) = "
          + std::to_string(top) + "; " + lambda.to_string() + " is not one");
      ch = hookblock::hook_simple_character(o.p, n, i);
    }
  else
    ch = hookblock::weyl_character(lambda, n);
  print_envelope(simple ? "char simple" : "char weyl", params,
                 {{"mults", hookblock::to_json(ch)}, {"dim", ch.dim()}});
  return kExitOk;
}

int run_jantzen(const Options &o)
{
  const Partition lambda = Partition::parse(o.partition);
  const auto sum = hookblock::jantzen_sum(lambda, dimension(o.n), o.p);
  Json result
    = {{"terms", hookblock::to_json(sum.terms)},
       {"character",
        hookblock::to_json(hookblock::to_character(sum.terms,
                                                   hookblock::Virtual::allowed))}};
  if(o.ledger)
    result["ledger"] = hookblock::jantzen_ledger_json(sum);
  print_envelope("jantzen",
                 {{"partition", lambda.to_string()}, {"n", o.n}, {"p", o.p}},
                 result);
  return kExitOk;
}

int run_mullineux(const Options &o)
{
  hookblock::require_prime(o.p);
  const Partition lambda = Partition::parse(o.partition);
  const Partition image = hookblock::mullineux(lambda, o.p);
  print_envelope("mullineux", {{"partition", lambda.to_string()}, {"p", o.p}},
                 image.to_string());
  return kExitOk;
}

int run_gram(const Options &o)
{
  hookblock::require_prime(o.p);
  const Partition lambda = Partition::parse(o.partition);
  const hookblock::IntMatrix gram = hookblock::gram_matrix(lambda);
  Json result = {{"dimension", gram.rows()},
                 {"rank_mod_p", hookblock::rank_mod_p(gram, o.p)},
                 {"rank_rational", hookblock::rank_rational(gram)},
                 {"p_regular", hookblock::is_p_regular(lambda, o.p)}};
  if(!o.rank_only)
    result["matrix"] = hookblock::to_json(gram);
  print_envelope("gram", {{"partition", lambda.to_string()}, {"p", o.p}},
                 result);
  return kExitOk;
}

int run_decompose(const Options &o)
{
  const std::size_t n = dimension(o.n);
  const auto d = hookblock::hook_decomposition_matrix(n, o.p);
  const auto recip = hookblock::reciprocity_table(n, o.p);
  if(o.format == "tsv")
    {
      std::cout << hookblock::to_tsv(d.rows, d.cols, d.entries) << '\n'
                << hookblock::to_tsv(d.cols, d.rows, recip);
      return kExitOk;
    }
  print_envelope("decompose", {{"n", o.n}, {"p", o.p}},
                 {{"decomposition", hookblock::to_json(d)},
                  {"reciprocity", hookblock::to_json(recip)},
                  {"cartan", hookblock::to_json(hookblock::cartan_matrix(n, o.p))}});
  return kExitOk;
}

int run_diagrams(const Options &o)
{
  const std::size_t n = dimension(o.n);
  Json modules = Json::array();
  for(Int i = 1; i <= hookblock::hook_range_top(o.p, n); ++i)
    {
      const auto module = hookblock::projective_diagram(i, n, o.p);
      const std::string self = hookblock::hook_partition(o.p, i).to_string();
      Json nablas = Json::array();
      for(const Partition &label : module.nabla_factors)
        nablas.push_back(label.to_string());
      modules.push_back({{"i", i},
                         {"projective", self},
                         {"injective", self},
                         {"tilting", module.tilting_label.to_string()},
                         {"nabla_factors", nablas},
                         {"diagram", hookblock::to_json(module.diagram)}});
    }
  Json tilting = Json::array();
  for(const auto &record : hookblock::tilting_injective_labels(n, o.p))
    tilting.push_back({{"i", record.i},
                       {"hook", record.hook.to_string()},
                       {"conjugate", record.conjugate_hook.to_string()},
                       {"mullineux", record.mullineux_image.to_string()},
                       {"status", record.passed ? "PASS" : "FAIL"}});
  print_envelope("diagrams", {{"n", o.n}, {"p", o.p}},
                 {{"projectives", modules}, {"tilting_labels", tilting}});
  return kExitOk;
}

int run_brauer_tree(const Options &o)
{
  Json diagrams = Json::array();
  for(const auto &diagram : hookblock::principal_block_diagrams(o.p))
    diagrams.push_back(hookblock::to_json(diagram));
  print_envelope("brauer-tree", {{"p", o.p}},
                 {{"tree", hookblock::to_json(hookblock::brauer_tree(o.p))},
                  {"projectives", diagrams}});
  return kExitOk;
}

int run_verify(const Options &o)
{
  const Int n = o.n > 0 ? o.n : o.p;
  const auto reports = hookblock::run_verify(o.p, dimension(n), o.suite);
  bool all = true;
  for(const auto &report : reports)
    all = all && report.passed();
  if(o.format == "text")
    {
      for(const auto &report : reports)
        {
          if(report.skipped)
            {
              std::cout << "SKIP " << report.suite << ": " << report.skip_reason
                        << '\n';
              continue;
            }
          for(const auto &check : report.checks)
            std::cout << (check.passed ? "PASS " : "FAIL ") << report.suite
                      << ": " << check.name
                      << (check.detail.empty() ? "" : " [" + check.detail + "]")
                      << '\n';
        }
    }
  else
    {
      Json result = Json::array();
      for(const auto &report : reports)
        result.push_back(hookblock::to_json(report));
      print_envelope("verify", {{"n", n}, {"p", o.p}, {"suite", o.suite}},
                     {{"reports", result}, {"status", all ? "PASS" : "FAIL"}});
    }
  return all ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Computations in the p-hook block of the Schur algebra S(n,p)"};
  app.require_subcommand(1);
  Options o;

  auto *blocks = app.add_subcommand("blocks", "Blocks of S(n,r) by Donkin's "
                                              "criterion");
  blocks->add_option("--n", o.n, "dimension n")->required();
  blocks->add_option("--r", o.r, "degree r")->required();
  blocks->add_option("--p", o.p, "characteristic p")->required();
  blocks->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));

  auto *chars = app.add_subcommand("char", "Characters of Weyl and simple "
                                           "modules");
  chars->require_subcommand(1);
  auto *weyl = chars->add_subcommand("weyl", "ch Delta(lambda)");
  auto *simple = chars->add_subcommand("simple", "ch L(lambda) for a p-hook");
  for(auto *sub : {weyl, simple})
    {
      sub->add_option("--partition", o.partition, "e.g. 4,1")->required();
      sub->add_option("--n", o.n)->required();
    }
  weyl->add_option("--p", o.p, "ignored for Weyl characters");
  simple->add_option("--p", o.p)->required();

  auto *jantzen = app.add_subcommand("jantzen", "Jantzen sum of a Weyl module");
  jantzen->add_option("--partition", o.partition)->required();
  jantzen->add_option("--n", o.n)->required();
  jantzen->add_option("--p", o.p)->required();
  jantzen->add_flag("--ledger", o.ledger, "include the root-by-root terms");

  auto *mull = app.add_subcommand("mullineux", "Mullineux map");
  mull->add_option("--partition", o.partition)->required();
  mull->add_option("--p", o.p)->required();

  auto *gram = app.add_subcommand("gram", "Gram matrix of a Specht module");
  gram->add_option("--partition", o.partition)->required();
  gram->add_option("--p", o.p)->required();
  gram->add_flag("--rank-only", o.rank_only);

  auto *decompose = app.add_subcommand("decompose", "Hook decomposition matrix");
  decompose->add_option("--n", o.n)->required();
  decompose->add_option("--p", o.p)->required();
  decompose->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));

  auto *diagrams = app.add_subcommand("diagrams", "Projective/injective/tilting "
                                                  "hook modules");
  diagrams->add_option("--n", o.n)->required();
  diagrams->add_option("--p", o.p)->required();

  auto *tree = app.add_subcommand("brauer-tree", "Brauer tree of k Sigma_p");
  tree->add_option("--p", o.p)->required();

  auto *verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--p", o.p)->required();
  verify->add_option("--n", o.n, "defaults to p");
  verify->add_option("--suite", o.suite)
    ->check(CLI::IsMember({"theorem", "lemmaA", "lemmaB", "peel", "bridge",
                           "deletion", "all"}));
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  try
    {
      app.parse(argc, argv);
    }
  catch(const CLI::ParseError &e)
    {
      const int code = app.exit(e);
      return code == 0 ? kExitOk : kExitUsage;
    }

  try
    {
      if(*blocks)
        return run_blocks(o);
      if(*weyl)
        return run_char(o, false);
      if(*simple)
        return run_char(o, true);
      if(*jantzen)
        return run_jantzen(o);
      if(*mull)
        return run_mullineux(o);
      if(*gram)
        return run_gram(o);
      if(*decompose)
        return run_decompose(o);
      if(*diagrams)
        return run_diagrams(o);
      if(*tree)
        return run_brauer_tree(o);
      if(*verify)
        return run_verify(o);
    }
  catch(const hookblock::CrossCheckFailure &e)
    {
      std::cerr << "verification failure: " << e.what() << '\n';
      return kExitVerifyFailed;
    }
  catch(const std::exception &e)
    {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  return kExitUsage;
}
