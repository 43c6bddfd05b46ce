#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fsig/criteria.hpp"
#include "fsig/invariants.hpp"
#include "fsig/presentation.hpp"
#include "fsig/report.hpp"
#include "fsig/version.hpp"

namespace {

struct Options {
  std::string file;
  int emax = 2;
  long long tmax = 8;
  int window = 2;
  std::string epsilon = "1e-3";
  std::string order = "grevlex";
  long long term_budget = 2'000'000;
  std::string format = "table";
  int e = 1;
  long long t = 2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fsig::validation_error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require_sop(const fsig::LoadedPresentation& lp, const std::string& cmd) {
  if (lp.sop.empty())
    throw fsig::validation_error(
        "command '" + cmd + "' needs a system of parameters: add 'sop = ...' "
        "lines to the presentation");
}

void require_reduced(const fsig::LoadedPresentation& lp, const std::string& cmd) {
  if (!lp.ring.reduced())
    throw fsig::validation_error(
        "command '" + cmd + "' interprets lengths as Frobenius splitting "
        "data, which is only meaningful for reduced rings; the presentation "
        "must attest 'reduced = true'");
}

int run(const std::string& cmd, const Options& opt) {
  std::string text = read_file(opt.file);
  fsig::Rational epsilon = fsig::Rational::parse_decimal(opt.epsilon);
  fsig::MonomialOrder::Kind kind = opt.order == "lex"
                                       ? fsig::MonomialOrder::Kind::lex
                                       : fsig::MonomialOrder::Kind::grevlex;
  fsig::LoadedPresentation lp =
      fsig::load_presentation(text, kind, opt.term_budget);
  fsig::SplittingPolicy policy{opt.tmax, opt.window};

  fsig::ReportContext ctx;
  ctx.command = cmd;
  ctx.format = opt.format;
  ctx.name = lp.file.name;
  ctx.digest = fsig::digest_string(text);
  ctx.ring = &lp.ring;
  ctx.emax = opt.emax;
  ctx.tmax = opt.tmax;
  ctx.window = opt.window;
  ctx.epsilon = epsilon;
  ctx.order = opt.order;
  ctx.term_budget = opt.term_budget;
  if (cmd == "oracle-aq" || cmd == "bigpowers") ctx.e = opt.e;
  if (cmd == "bigpowers") ctx.t = opt.t;

  if (cmd == "aq") {
    require_reduced(lp, cmd);
    require_sop(lp, cmd);
    fsig::IrreducibleFamily fam = fsig::build_family(lp.ring, lp.sop);
    std::vector<fsig::SplittingNumber> sns;
    bool all_stable = true;
    for (int e = 1; e <= opt.emax; ++e) {
      sns.push_back(fsig::splitting_number(lp.ring, fam, e, policy));
      all_stable = all_stable && sns.back().stabilized;
    }
    std::cout << fsig::render_aq(ctx, sns);
    return all_stable ? 0 : 5;
  }
  if (cmd == "fsig") {
    require_reduced(lp, cmd);
    require_sop(lp, cmd);
    fsig::IrreducibleFamily fam = fsig::build_family(lp.ring, lp.sop);
    fsig::FSignatureReport rep =
        fsig::fsignature_sequence(lp.ring, fam, opt.emax, epsilon, policy);
    std::cout << fsig::render_fsig(ctx, rep);
    return 0;
  }
  if (cmd == "hk") {
    std::cout << fsig::render_hk(ctx,
                                 fsig::hilbert_kunz_sequence(lp.ring, opt.emax));
    return 0;
  }
  if (cmd == "sdim") {
    require_reduced(lp, cmd);
    require_sop(lp, cmd);
    fsig::IrreducibleFamily fam = fsig::build_family(lp.ring, lp.sop);
    fsig::FSignatureReport rep =
        fsig::fsignature_sequence(lp.ring, fam, opt.emax, epsilon, policy);
    fsig::sdim_estimate(rep);  // enforces the two-row precondition
    std::cout << fsig::render_sdim(ctx, rep);
    return 0;
  }
  if (cmd == "fpure") {
    bool fp = fsig::fedder_fpure(lp.ring);
    std::string criterion = lp.ring.relations().empty()
                                ? "regular"
                                : (lp.ring.relations().size() == 1 ? "principal"
                                                                   : "general");
    std::cout << fsig::render_fpure(ctx, fp, criterion);
    return 0;
  }
  if (cmd == "sfr") {
    require_reduced(lp, cmd);
    if (!lp.c)
      throw fsig::validation_error(
          "command 'sfr' needs a witness candidate: add a 'c = ...' line to "
          "the presentation");
    auto w = fsig::glassbrenner_sfr(lp.ring, *lp.c, opt.emax);
    std::cout << fsig::render_sfr(ctx, w, opt.emax);
    return 0;
  }
  if (cmd == "oracle-aq") {
    require_reduced(lp, cmd);
    if (lp.ring.relations().size() != 1)
      throw fsig::validation_error(
          "command 'oracle-aq' needs a hypersurface presentation (exactly one "
          "relation)");
    long long q = fsig::detail::checked_prime_power(lp.ring.p(), opt.e);
    long long a = fsig::hypersurface_splitting_number(
        lp.ring.ambient(), lp.ring.relations()[0], opt.e);
    std::cout << fsig::render_oracle_aq(ctx, opt.e, q, a);
    return 0;
  }
  if (cmd == "bigpowers") {
    require_reduced(lp, cmd);
    require_sop(lp, cmd);
    fsig::IrreducibleFamily fam = fsig::build_family(lp.ring, lp.sop);
    fsig::BigPowersCheck bp =
        fsig::big_powers_check(lp.ring, fam, opt.e, opt.t, policy);
    std::cout << fsig::render_bigpowers(ctx, bp);
    return 0;
  }
  if (cmd == "classify") {
    require_reduced(lp, cmd);
    std::optional<std::vector<fsig::Poly>> sop;
    if (!lp.sop.empty()) sop = lp.sop;
    fsig::Evidence ev =
        fsig::classify(lp.ring, sop, lp.c, opt.emax, epsilon, policy);
    std::cout << fsig::render_classify(ctx, ev);
    return 0;
  }
  throw fsig::usage_error("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Frobenius splitting numbers, F-signature sequences, and "
      "Hilbert-Kunz estimates for quotients of polynomial rings over F_p"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fsig::kToolName) + " " +
                                        fsig::kVersion);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_e, bool with_t) {
    sub->add_option("file", opt.file, "ring presentation file")->required();
    sub->add_option("--emax", opt.emax, "largest Frobenius exponent")
        ->capture_default_str()
        ->check(CLI::Range(1, 12));
    sub->add_option("--tmax", opt.tmax, "largest family index tried")
        ->capture_default_str()
        ->check(CLI::Range(1LL, 64LL));
    sub->add_option("--window", opt.window,
                    "consecutive equal lengths required to stabilize")
        ->capture_default_str()
        ->check(CLI::Range(1, 16));
    sub->add_option("--epsilon", opt.epsilon,
                    "positivity threshold (exact rational or decimal)")
        ->capture_default_str();
    sub->add_option("--order", opt.order, "monomial order for basis computations")
        ->capture_default_str()
        ->check(CLI::IsMember({"grevlex", "lex"}));
    sub->add_option("--term-budget", opt.term_budget,
                    "polynomial term budget for multiplications")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", opt.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"table", "json", "csv"}));
    if (with_e)
      sub->add_option("--e", opt.e, "Frobenius exponent for this command")
          ->capture_default_str()
          ->check(CLI::Range(1, 12));
    if (with_t)
      sub->add_option("--t", opt.t, "family index for this command")
          ->capture_default_str()
          ->check(CLI::Range(1LL, 64LL));
  };

  add_common(app.add_subcommand(
                 "aq", "splitting number a_q by the stabilized family lengths"),
             false, false);
  add_common(app.add_subcommand(
                 "fsig", "F-signature sequence s_e = a_q / q^(d+alpha)"),
             false, false);
  add_common(app.add_subcommand("hk", "Hilbert-Kunz lengths and ratios"), false,
             false);
  add_common(app.add_subcommand("sdim", "s-dimension estimate from the s_e trend"),
             false, false);
  add_common(app.add_subcommand("fpure", "exact F-purity decision"), false, false);
  add_common(app.add_subcommand(
                 "sfr", "strong F-regularity witness search for hypersurfaces"),
             false, false);
  add_common(app.add_subcommand(
                 "oracle-aq", "a_q by the direct hypersurface length formula"),
             true, false);
  add_common(app.add_subcommand(
                 "bigpowers", "containment of the family colon in m^[q/q0]"),
             true, true);
  add_common(app.add_subcommand(
                 "classify", "joint F-purity / witness / signature coherence"),
             false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, opt);
  } catch (const fsig::parse_error& e) {
    std::cerr << "error: " << opt.file << ":" << e.what() << "\n";
    return 2;
  } catch (const fsig::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const fsig::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
