// coxcat: exact Coxeter-Catalan combinatorics of Coxeter flag varieties.
//
// Subcommands: enumerate, sortable, verify, export, cohomology, charts.
// All machine output is JSON with a "schema": "coxcat/1" field; exit code 0
// on success, 1 on any theorem-check failure, 2 on usage errors.

#include "coxcat/json_io.hpp"
#include "coxcat/parallel.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace coxcat;

namespace {

struct CommonOpts {
  std::string type = "A";
  int rank = 2;
  std::string coxeter;      // comma separated; 1-based for A, 0-based otherwise
  std::string lambda;       // comma separated rationals, ambient coordinates
  std::string out;
  uint32_t prime = 10007;
  int trials = 100;
  uint64_t seed = 42;
};

void add_common(CLI::App* app, CommonOpts& o, bool with_sampling = false) {
  app->add_option("--type", o.type, "group type: A, B, C, or D")->capture_default_str();
  app->add_option("--rank", o.rank, "rank n")->capture_default_str();
  app->add_option("--coxeter", o.coxeter,
                  "Coxeter word, comma separated simple indices "
                  "(1..n for type A, 0..n-1 for B/C/D)");
  app->add_option("--lambda", o.lambda, "regular dominant weight override (ambient coords)");
  app->add_option("--out", o.out, "write output to this file instead of stdout");
  if (with_sampling) {
    app->add_option("--prime", o.prime, "finite-field modulus")->capture_default_str();
    app->add_option("--trials", o.trials, "samples per cell")->capture_default_str();
    app->add_option("--seed", o.seed, "root RNG seed")->capture_default_str();
  }
}

std::vector<int> parse_word(const CommonOpts& o, GroupType t, int rank) {
  std::vector<int> word;
  if (o.coxeter.empty()) {
    for (int i = rank - 1; i >= 0; --i) word.push_back(i);  // appendix-style default
    return word;
  }
  std::istringstream is(o.coxeter);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    int v = std::stoi(tok);
    if (t == GroupType::A) v -= 1;  // user-facing indices are 1-based in type A
    word.push_back(v);
  }
  return word;
}

GroupType parse_type(const CommonOpts& o) { return type_from_name(o.type); }

void check_rank_bounds(GroupType t, int rank) {
  int cap = (t == GroupType::A) ? 7 : 4;
  int lo = (t == GroupType::D) ? 2 : 1;
  if (rank < lo || rank > cap)
    throw CLI::ValidationError("--rank", "rank out of the supported range for this type");
}

std::optional<QVec> parse_lambda(const CommonOpts& o) {
  if (o.lambda.empty()) return std::nullopt;
  QVec v;
  std::istringstream is(o.lambda);
  std::string tok;
  while (std::getline(is, tok, ',')) v.push_back(Rat(tok));
  for (auto& x : v) x.canonicalize();
  return v;
}

VerifyContext make_context(const CommonOpts& o, bool with_sampling = false) {
  GroupType t = parse_type(o);
  check_rank_bounds(t, o.rank);
  auto lam = parse_lambda(o);
  VerifyContext ctx(t, o.rank, parse_word(o, t, o.rank), lam ? &*lam : nullptr);
  if (with_sampling) {
    if (!is_prime_u32(o.prime)) throw CLI::ValidationError("--prime", "modulus must be prime");
    ctx.prime = o.prime;
    ctx.trials = o.trials;
    ctx.seed = o.seed;
  }
  return ctx;
}

int emit(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot open output file " + o.out);
    f << text << "\n";
  }
  return 0;
}

int emit(const CommonOpts& o, const Json& j) { return emit(o, j.dump(2)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Coxeter-Catalan combinatorics of Coxeter flag varieties"};
  app.require_subcommand(1);

  // ----- enumerate -----
  auto* enumerate = app.add_subcommand("enumerate", "enumerate groups and lattices");
  enumerate->require_subcommand(1);
  CommonOpts eo;
  auto* en_weyl = enumerate->add_subcommand("weyl", "all Weyl group elements");
  auto* en_cox = enumerate->add_subcommand("coxeter", "all Coxeter elements");
  auto* en_nc = enumerate->add_subcommand("nc", "the noncrossing partition lattice NC(W,c)");
  add_common(en_weyl, eo);
  add_common(en_cox, eo);
  add_common(en_nc, eo);

  // ----- sortable -----
  auto* sortable = app.add_subcommand("sortable", "c-sorting data for one element");
  CommonOpts so;
  std::string element_str;
  add_common(sortable, so);
  sortable->add_option("--element", element_str, "one-line form, comma separated")->required();

  // ----- verify -----
  auto* verify = app.add_subcommand("verify", "run theorem verification suites");
  CommonOpts vo;
  std::string suite = "all";
  add_common(verify, vo, true);
  verify->add_option("suite", suite,
                     "one of: all, " + [] {
                       std::string s;
                       for (const auto& n : suite_names()) s += n + " ";
                       return s;
                     }());

  // ----- export -----
  auto* exportc = app.add_subcommand("export", "serialize objects");
  exportc->require_subcommand(1);
  CommonOpts xo;
  std::string format = "json";
  std::string bottom, top;
  auto* ex_rs = exportc->add_subcommand("rootsystem", "root system datum");
  auto* ex_nc = exportc->add_subcommand("nc", "NC(W,c) with Hasse diagram");
  auto* ex_iv = exportc->add_subcommand("interval", "a Bruhat interval");
  auto* ex_cx = exportc->add_subcommand("complex", "the moment complex");
  for (auto* sc : {ex_rs, ex_nc, ex_iv, ex_cx}) add_common(sc, xo);
  for (auto* sc : {ex_nc, ex_iv, ex_cx})
    sc->add_option("--format", format, "json, dot, or off (complex only)")
        ->capture_default_str();
  ex_iv->add_option("--bottom", bottom, "one-line form")->required();
  ex_iv->add_option("--top", top, "one-line form")->required();

  // ----- cohomology -----
  auto* coh = app.add_subcommand("cohomology", "GKM cohomology computations");
  coh->require_subcommand(1);
  CommonOpts co;
  auto* coh_betti = coh->add_subcommand("betti", "Betti numbers of the Coxeter flag variety");
  auto* coh_schub = coh->add_subcommand("schubert", "equivariant Schubert classes on Cay(W,T)");
  auto* coh_dual = coh->add_subcommand("duality", "Coxeter Schubert (duality) classes");
  for (auto* sc : {coh_betti, coh_schub, coh_dual}) add_common(sc, co);

  // ----- charts -----
  auto* charts = app.add_subcommand("charts", "finite-field matrix models");
  charts->require_subcommand(1);
  CommonOpts ho;
  std::string cell;
  auto* ch_sample = charts->add_subcommand("sample", "Pluecker-vanishing sampling sweep");
  auto* ch_show = charts->add_subcommand("show", "print a cell pattern");
  add_common(ch_sample, ho, true);
  add_common(ch_show, ho);
  ch_show->add_option("--cell", cell, "one-line form of a noncrossing element")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (en_weyl->parsed()) {
      VerifyContext ctx = make_context(eo);
      return emit(eo, weyl_json(ctx.w));
    }
    if (en_cox->parsed()) {
      VerifyContext ctx = make_context(eo);
      return emit(eo, coxeter_elements_json(ctx.w));
    }
    if (en_nc->parsed()) {
      VerifyContext ctx = make_context(eo);
      return emit(eo, nc_json(ctx));
    }
    if (sortable->parsed()) {
      VerifyContext ctx = make_context(so);
      int e = ctx.w.index_of(ctx.rs.parse_one_line(element_str));
      return emit(so, sortable_json(ctx, e));
    }
    if (verify->parsed()) {
      VerifyContext ctx = make_context(vo, true);
      std::vector<SuiteReport> reports;
      if (suite == "all") {
        reports = verify_all(ctx);
      } else {
        auto* fn = suite_by_name(suite);
        if (!fn) throw CLI::ValidationError("suite", "unknown suite name");
        reports.push_back(fn(ctx));
      }
      Json j = suites_json(reports);
      emit(vo, j);
      return j["ok"].get<bool>() ? 0 : 1;
    }
    if (ex_rs->parsed()) {
      VerifyContext ctx = make_context(xo);
      return emit(xo, root_system_json(ctx.rs));
    }
    if (ex_nc->parsed()) {
      VerifyContext ctx = make_context(xo);
      if (format == "dot") return emit(xo, hasse_dot(ctx.w, ctx.nc.kreweras));
      return emit(xo, nc_json(ctx));
    }
    if (ex_iv->parsed()) {
      VerifyContext ctx = make_context(xo);
      int b = ctx.w.index_of(ctx.rs.parse_one_line(bottom));
      int t = ctx.w.index_of(ctx.rs.parse_one_line(top));
      BruhatInterval iv = bruhat_interval(ctx.w, b, t);
      if (format == "dot") return emit(xo, hasse_dot(ctx.w, iv.poset));
      return emit(xo, interval_json(ctx.w, iv.poset));
    }
    if (ex_cx->parsed()) {
      VerifyContext ctx = make_context(xo);
      MomentComplex mc = build_moment_complex(ctx.cam, ctx.lambda);
      if (format == "dot") return emit(xo, complex_dot(ctx, mc));
      if (format == "off") return emit(xo, complex_off(ctx, mc));
      return emit(xo, complex_json(ctx, mc));
    }
    if (coh_betti->parsed()) {
      VerifyContext ctx = make_context(co);
      return emit(co, betti_json(ctx));
    }
    if (coh_schub->parsed()) {
      VerifyContext ctx = make_context(co);
      return emit(co, schubert_json(ctx));
    }
    if (coh_dual->parsed()) {
      VerifyContext ctx = make_context(co);
      return emit(co, duality_json(ctx));
    }
    if (ch_sample->parsed()) {
      VerifyContext ctx = make_context(ho, true);
      PluckerReport rep = verify_plucker_vanishing(ctx.w, ctx.nc, ctx.prime, ctx.trials, ctx.seed);
      Json j = plucker_report_json(rep);
      emit(ho, j);
      return rep.ok() ? 0 : 1;
    }
    if (ch_show->parsed()) {
      VerifyContext ctx = make_context(ho);
      int u = ctx.w.index_of(ctx.rs.parse_one_line(cell));
      return emit(ho, pattern_show(ctx, u));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const coxcat_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
