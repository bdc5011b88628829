// Command-line front end: catalog listing, descriptor ingestion, indicator
// and invariant computations, and the verifier suites.
//
// Exit codes: 0 success, 2 invariant violation, 3 resource guard, 4 input
// error.  Stdout carries the (deterministic) JSON or CSV report; timings
// and logs go to stderr.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hopfind/catalog.hpp"
#include "hopfind/verify.hpp"

using namespace hopfind;

namespace {

struct GlobalOpts {
  std::string algebra;
  unsigned long seed = kDefaultSeed;
  long max_terms = kMaxSweedlerTerms;
  long exp_cap = 0;
  long precision_bits = 64;
  std::string format = "json";
};

HopfAlg load_algebra(const GlobalOpts& g) {
  if (!g.algebra.empty() && g.algebra[0] == '@') {
    std::ifstream in(g.algebra.substr(1));
    if (!in) throw parse_error("cannot open descriptor file " + g.algebra.substr(1));
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw parse_error(std::string("descriptor parse error: ") + e.what());
    }
    return algebra_from_json(j);
  }
  return algebra_by_key(g.algebra);
}

void emit(const RunReport& rep, const std::string& format, const std::string& csv_body) {
  if (format == "csv") {
    std::cout << csv_body;
  } else {
    std::cout << rep.to_json().dump(2) << "\n";
  }
  std::cerr << "elapsed: " << rep.elapsed_seconds << " s\n";
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::group_algebra: return "group_algebra";
    case Provenance::dual_group: return "dual_group";
    case Provenance::smash: return "smash";
    case Provenance::drinfeld_double: return "double";
  }
  return "?";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with semisimple Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  if (const char* env = std::getenv("HOPF_SEED")) g.seed = std::strtoul(env, nullptr, 10);
  app.add_option("--seed", g.seed, "seed for the randomized character-table splitting");
  app.add_option("--max-terms", g.max_terms, "sparse term guard for iterated coproducts");
  app.add_option("--exp-cap", g.exp_cap, "exponent scan cap (default dim^2)");
  app.add_option("--precision-bits", g.precision_bits, "interval precision floor")
      ->check(CLI::Range(32L, kPrecisionCap));
  app.add_option("--format", g.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* cmd_catalog = app.add_subcommand("catalog", "list the built-in algebras");
  cmd_catalog->fallthrough();

  auto* cmd_ind = app.add_subcommand("indicators", "indicator table over the irreducibles");
  cmd_ind->fallthrough();
  long m_max = 6;
  std::string k_policy = "one";
  cmd_ind->add_option("--algebra", g.algebra, "catalog key or @descriptor.json")->required();
  cmd_ind->add_option("--m", m_max, "largest m in the table");
  cmd_ind->add_option("--k-policy", k_policy, "one (k=1) or coprime (all coprime k)")
      ->check(CLI::IsMember({"one", "coprime"}));

  auto* cmd_exp = app.add_subcommand("exponent", "exponent of the algebra or of a character");
  cmd_exp->fallthrough();
  std::string char_sel;
  cmd_exp->add_option("--algebra", g.algebra, "catalog key or @descriptor.json")->required();
  cmd_exp->add_option("--char", char_sel, "character selector i<N> or dim<D>");

  auto* cmd_order = app.add_subcommand("order", "order and multiplicity of a character");
  cmd_order->fallthrough();
  cmd_order->add_option("--algebra", g.algebra, "catalog key or @descriptor.json")->required();
  cmd_order->add_option("--char", char_sel, "character selector i<N> or dim<D>")->required();

  auto* cmd_index = app.add_subcommand("index", "fusion analysis of a character");
  cmd_index->fallthrough();
  std::string dot_file;
  cmd_index->add_option("--algebra", g.algebra, "catalog key or @descriptor.json")->required();
  cmd_index->add_option("--char", char_sel, "character selector i<N> or dim<D>")->required();
  cmd_index->add_option("--dot", dot_file, "write the fusion digraph in dot format");

  auto* cmd_verify = app.add_subcommand("verify", "run a verifier suite");
  cmd_verify->fallthrough();
  std::string suite = "all";
  cmd_verify->add_option("suite", suite,
                         "sweedler|integral|indicators|galois|cauchy|divisibility|fusion|double|all");
  cmd_verify->add_option("--algebra", g.algebra, "catalog key or @descriptor.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    RunReport rep;
    rep.seed = g.seed;

    if (cmd_catalog->parsed()) {
      rep.command = "catalog";
      json list = json::array();
      for (const CatalogEntry& e : catalog())
        list.push_back({{"name", e.name}, {"notes", e.notes}, {"descriptor", e.descriptor}});
      rep.outputs = {{"entries", list}};
      std::ostringstream csv;
      csv << "name,notes\n";
      for (const CatalogEntry& e : catalog()) csv << e.name << ",\"" << e.notes << "\"\n";
      rep.elapsed_seconds = elapsed();
      emit(rep, g.format, csv.str());
      return 0;
    }

    if (cmd_ind->parsed()) {
      rep.command = "indicators";
      rep.inputs = {{"algebra", g.algebra}, {"m", m_max}, {"k_policy", k_policy}};
      HopfAlg h = load_algebra(g);
      CharRing ring = simple_characters(h, g.seed);
      IndicatorContext ctx;
      NuOptions nopt;
      nopt.ctx = &ctx;
      nopt.max_terms = g.max_terms;
      json rows = json::array();
      std::ostringstream csv;
      csv << "character,degree,m,k,value,is_integer\n";
      for (long c = 0; c < ring.size(); ++c) {
        for (long m = 1; m <= m_max; ++m)
          for (long k = 1; k <= (k_policy == "coprime" ? m : 1L); ++k) {
            if (igcd(m, k) != 1) continue;
            IndicatorReport ir = nu(ring.irreducibles[c], m, k, nopt);
            std::string val = to_string(ir.value);
            json row = {{"character", "i" + std::to_string(c)},
                        {"degree", ring.degrees[c]},
                        {"m", m},
                        {"k", k},
                        {"value", val},
                        {"is_integer", ir.integrality.has_value()},
                        {"routes", ir.routes_used}};
            if (ir.integrality) row["integer_value"] = ir.integrality->get_si();
            rows.push_back(std::move(row));
            csv << "i" << c << "," << ring.degrees[c] << "," << m << "," << k << "," << val << ","
                << (ir.integrality ? "yes" : "no") << "\n";
          }
      }
      rep.outputs = {{"algebra_dim", h.dim()},
                     {"provenance", provenance_name(h.provenance())},
                     {"indicators", rows}};
      rep.elapsed_seconds = elapsed();
      emit(rep, g.format, csv.str());
      return 0;
    }

    if (cmd_exp->parsed()) {
      rep.command = "exponent";
      rep.inputs = {{"algebra", g.algebra}, {"char", char_sel}};
      HopfAlg h = load_algebra(g);
      if (char_sel.empty()) {
        ExponentReport er = algebra_exponent(h, g.exp_cap, g.seed);
        rep.outputs = {{"target", "algebra"},
                       {"exponent", er.value},
                       {"route", er.route},
                       {"bound_used", er.bound_used}};
      } else {
        CharRing ring = simple_characters(h, g.seed);
        long c = select_character(ring, char_sel);
        auto mod = try_explicit_module(h, ring.irreducibles[c]);
        ExponentReport er =
            exponent_of(ring.irreducibles[c], g.exp_cap, mod ? &*mod : nullptr);
        rep.outputs = {{"target", "i" + std::to_string(c)},
                       {"exponent", er.value},
                       {"route", er.route},
                       {"bound_used", er.bound_used}};
      }
      rep.elapsed_seconds = elapsed();
      std::ostringstream csv;
      csv << "target,exponent\n" << rep.outputs["target"].get<std::string>() << ","
          << rep.outputs["exponent"].get<long>() << "\n";
      emit(rep, g.format, csv.str());
      return 0;
    }

    if (cmd_order->parsed()) {
      rep.command = "order";
      rep.inputs = {{"algebra", g.algebra}, {"char", char_sel}};
      HopfAlg h = load_algebra(g);
      CharRing ring = simple_characters(h, g.seed);
      long c = select_character(ring, char_sel);
      auto [ord, mult] = order_and_multiplicity(ring, ring.irreducibles[c]);
      rep.outputs = {{"character", "i" + std::to_string(c)},
                     {"degree", ring.degrees[c]},
                     {"ord", ord},
                     {"mult", mult}};
      rep.elapsed_seconds = elapsed();
      std::ostringstream csv;
      csv << "character,degree,ord,mult\n"
          << "i" << c << "," << ring.degrees[c] << "," << ord << "," << mult << "\n";
      emit(rep, g.format, csv.str());
      return 0;
    }

    if (cmd_index->parsed()) {
      rep.command = "index";
      rep.inputs = {{"algebra", g.algebra}, {"char", char_sel}};
      HopfAlg h = load_algebra(g);
      CharRing ring = simple_characters(h, g.seed);
      long c = select_character(ring, char_sel);
      FusionAnalysis fa = analyze(ring, ring.irreducibles[c]);
      auto gv = gv_group(h, ring, ring.irreducibles[c], fa, g.seed);
      json mat = json::array();
      for (long i = 0; i < fa.matrix.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < fa.matrix.cols(); ++j)
          row.push_back(fa.matrix(i, j).get_num().get_si());
        mat.push_back(std::move(row));
      }
      json blocks = json::array();
      for (const auto& b : fa.blocks) blocks.push_back(b);
      rep.outputs = {{"character", "i" + std::to_string(c)},
                     {"matrix", mat},
                     {"reachable", fa.reachable},
                     {"indecomposable_on_reachable", fa.indecomposable_on_reachable},
                     {"blocks", blocks},
                     {"perron", fa.perron},
                     {"index", fa.index}};
      if (gv) rep.outputs["gv_order"] = *gv;
      if (!dot_file.empty()) {
        std::ofstream dot(dot_file);
        dot << fusion_digraph_dot(ring, fa);
      }
      rep.elapsed_seconds = elapsed();
      std::ostringstream csv;
      csv << "character,perron,index\n"
          << "i" << c << "," << fa.perron << "," << fa.index << "\n";
      emit(rep, g.format, csv.str());
      return 0;
    }

    if (cmd_verify->parsed()) {
      rep.command = "verify";
      rep.inputs = {{"algebra", g.algebra}, {"suite", suite}};
      HopfAlg h = load_algebra(g);
      VerifyOptions vopt;
      vopt.seed = g.seed;
      vopt.max_terms = g.max_terms;
      vopt.exp_cap = g.exp_cap;
      auto results = verify_suite(suite, h, vopt);
      bool all_pass = true;
      json checks = json::array();
      std::ostringstream csv;
      csv << "check,pass,detail\n";
      for (const CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        csv << "\"" << r.name << "\"," << (r.pass ? "pass" : "FAIL") << ",\"" << r.detail
            << "\"\n";
      }
      rep.outputs = {{"suite", suite}, {"all_pass", all_pass}, {"checks", checks}};
      rep.elapsed_seconds = elapsed();
      emit(rep, g.format, csv.str());
      return all_pass ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return exit_code_for(e);
  }
  return 4;
}
