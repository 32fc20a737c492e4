#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "roofbasis/crystal.hpp"
#include "roofbasis/fock.hpp"
#include "roofbasis/integer_set.hpp"
#include "roofbasis/io.hpp"
#include "roofbasis/roof.hpp"
#include "roofbasis/verify.hpp"

using nlohmann::json;

namespace rb = roofbasis;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream ofs(path);
  if (!ofs) throw std::invalid_argument("cannot open output file: " + path);
  ofs << content;
}

struct RoofOpts {
  std::string set;
  std::string dot;
  bool with_ceiling = false;
};

int cmd_roof(const RoofOpts& o, bool as_json) {
  const rb::IntegerSet j = rb::parse_set(o.set);
  const rb::RoofResult rr = rb::roof(j);
  const rb::ReducedWord word = rb::reduced_word_from_extremal(rr.stable);
  rb::IntegerSet ceil;
  if (o.with_ceiling) ceil = rb::ceiling(j);
  const bool agree = !o.with_ceiling || ceil == rr.stable;

  if (!o.dot.empty()) write_file(o.dot, rb::dot_chain(j, rr.steps));

  if (as_json) {
    json doc;
    doc["input"] = rb::set_to_json(j);
    json trace = json::array();
    for (const rb::UpStep& s : rr.steps) trace.push_back(json::array({s.p, s.q}));
    doc["trace"] = trace;
    doc["steps"] = rr.steps.size();
    doc["roof"] = rb::set_to_json(rr.stable);
    doc["word"] = word.letters;
    doc["word_length"] = word.letters.size();
    if (o.with_ceiling) {
      doc["ceiling"] = rb::set_to_json(ceil);
      doc["agree"] = agree;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "input: " << rb::format_set(j) << "\n";
    std::cout << "trace:";
    if (rr.steps.empty()) std::cout << " (empty)";
    for (const rb::UpStep& s : rr.steps) std::cout << " (" << s.p << "," << s.q << ")";
    std::cout << "\n";
    std::cout << "steps: " << rr.steps.size() << "\n";
    std::cout << "roof: " << rb::format_set(rr.stable) << "\n";
    std::cout << "word: " << rb::format_word(word) << "\n";
    std::cout << "word length: " << word.letters.size() << "\n";
    if (o.with_ceiling) {
      std::cout << "ceiling: " << rb::format_set(ceil) << "\n";
      std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
    }
  }
  return agree ? 0 : 2;
}

struct CeilingOpts {
  std::string set;
  bool chain = false;
};

int cmd_ceiling(const CeilingOpts& o, bool as_json) {
  const rb::IntegerSet j = rb::parse_set(o.set);
  std::vector<rb::CeilingStep> chain;
  const rb::IntegerSet c = rb::ceiling_with_chain(j, chain);
  if (as_json) {
    json doc;
    doc["input"] = rb::set_to_json(j);
    doc["ceiling"] = rb::set_to_json(c);
    if (o.chain) {
      json steps = json::array();
      for (const rb::CeilingStep& s : chain)
        steps.push_back(json{{"r", s.r}, {"next", rb::set_to_json(s.next)}});
      doc["chain"] = steps;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "input: " << rb::format_set(j) << "\n";
    if (o.chain)
      for (const rb::CeilingStep& s : chain)
        std::cout << "strip at r=" << s.r << " -> " << rb::format_set(s.next) << "\n";
    std::cout << "ceiling: " << rb::format_set(c) << "\n";
  }
  return 0;
}

struct DemazureOpts {
  std::string word;
  bool word_given = false;
  int n = 0;
  long long m = 0;
  std::string extremal;
  bool extremal_given = false;
  std::string mode = "both";
  std::string dot;
  std::string contains;
};

int cmd_demazure(const DemazureOpts& o, bool as_json) {
  if (o.word_given == o.extremal_given)
    throw std::invalid_argument("demazure: give exactly one of --word or --extremal");

  rb::ReducedWord word;
  rb::IntegerSet kw;
  long long m = 0;
  if (o.word_given) {
    if (o.n < 2) throw std::invalid_argument("demazure: --word requires --n >= 2");
    word = rb::parse_word(o.n, o.word);
    if (!rb::word_is_reduced(word)) throw std::invalid_argument("demazure: word is not reduced");
    m = o.m;
    kw = rb::weyl_apply(word, rb::lowest_set(o.n, m));
  } else {
    kw = rb::parse_set(o.extremal);
    if (!rb::is_stable(kw)) throw std::invalid_argument("demazure: extremal set is not stable");
    m = rb::order_of(kw);
    word = rb::reduced_word_from_extremal(kw);
  }

  const bool want_td = o.mode == "top-down" || o.mode == "both";
  const bool want_bu = o.mode == "bottom-up" || o.mode == "both";

  if (!o.contains.empty()) {
    const rb::IntegerSet probe = rb::parse_set(o.contains);
    bool in_td = false, in_bu = false;
    if (want_td) in_td = rb::demazure_member_top_down(word, probe);
    if (want_bu) in_bu = rb::member(probe, kw);
    const bool mismatch = want_td && want_bu && in_td != in_bu;
    const bool verdict = want_td ? in_td : in_bu;
    if (as_json) {
      json doc{{"word", word.letters}, {"extremal", rb::set_to_json(kw)},
               {"probe", rb::set_to_json(probe)}, {"contains", verdict}};
      if (mismatch) doc["mismatch"] = true;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "contains: " << (verdict ? "true" : "false") << "\n";
      if (mismatch) std::cout << "mismatch: generators disagree on membership\n";
    }
    return mismatch ? 2 : 0;
  }

  std::vector<rb::IntegerSet> td, bu;
  if (want_td) td = rb::demazure_top_down(word, m);
  if (want_bu) bu = rb::demazure_bottom_up(kw);
  bool mismatch = false;
  if (want_td && want_bu && td != bu) mismatch = true;
  const std::vector<rb::IntegerSet>& elems = want_td ? td : bu;

  if (!o.dot.empty()) write_file(o.dot, rb::dot_crystal(elems));

  if (as_json) {
    json doc;
    doc["word"] = word.letters;
    doc["extremal"] = rb::set_to_json(kw);
    doc["mode"] = o.mode;
    doc["count"] = elems.size();
    json arr = json::array();
    for (const rb::IntegerSet& x : elems) arr.push_back(rb::set_to_json(x));
    doc["elements"] = arr;
    if (want_td && want_bu) doc["agree"] = !mismatch;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "word: " << rb::format_word(word) << "\n";
    std::cout << "extremal: " << rb::format_set(kw) << "\n";
    std::cout << "elements: " << elems.size() << "\n";
    for (const rb::IntegerSet& x : elems) std::cout << rb::format_set(x) << "\n";
    if (want_td && want_bu)
      std::cout << "agree: " << (mismatch ? "no" : "yes") << "\n";
  }
  return mismatch ? 2 : 0;
}

struct ExpandOpts {
  std::string set;
  bool divided = false;
  long long mod = 0;
};

int cmd_expand(const ExpandOpts& o, bool as_json) {
  const rb::IntegerSet j = rb::parse_set(o.set);
  rb::FockVector v = o.divided ? rb::divided_vector(j) : rb::standard_vector(j);
  if (o.mod != 0) v = rb::mod_p_reduce(v, o.mod);
  if (as_json) {
    json doc;
    doc["input"] = rb::set_to_json(j);
    doc["divided"] = o.divided;
    if (o.mod != 0) doc["mod"] = o.mod;
    doc["terms"] = rb::fock_to_json(v);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << rb::term_dump(v);
  }
  return 0;
}

struct CoeffOpts {
  std::string set_j;
  std::string set_k;
};

int cmd_coeff(const CoeffOpts& o, bool as_json) {
  const rb::IntegerSet j = rb::parse_set(o.set_j);
  const rb::IntegerSet k = rb::parse_set(o.set_k);
  const rb::FockVector v = rb::standard_vector(j);
  const rb::Coeff c = rb::coefficient(v, k);
  if (as_json) {
    json doc{{"j", rb::set_to_json(j)}, {"k", rb::set_to_json(k)}, {"coefficient", c.str()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << c << "\n";
  }
  return 0;
}

struct VerifyOpts {
  std::string suite;
  int n = 0;
  long long m = 0;
  long long height = 6;
  int len = 6;
  int jobs = 1;
};

int cmd_verify(const VerifyOpts& o, bool as_json) {
  std::vector<rb::SweepReport> reports;
  const bool custom = o.n >= 2;
  const std::vector<rb::SuiteSpec> suites =
      custom ? std::vector<rb::SuiteSpec>{{o.n, o.m, o.height}} : rb::default_suites();

  const bool run_rc = o.suite == "roof-ceiling" || o.suite == "all";
  const bool run_tri = o.suite == "triangular" || o.suite == "all";
  const bool run_ui = o.suite == "upinv" || o.suite == "all";
  const bool run_ch = o.suite == "character" || o.suite == "all";
  if (!run_rc && !run_tri && !run_ui && !run_ch)
    throw std::invalid_argument("verify: unknown suite '" + o.suite + "'");

  for (const rb::SuiteSpec& s : suites) {
    if (run_rc) reports.push_back(rb::sweep_roof_ceiling(s, o.jobs));
    if (run_tri) reports.push_back(rb::sweep_triangular(s, o.jobs));
    if (run_ui) reports.push_back(rb::sweep_upinv(s, o.jobs));
  }
  if (run_ch) {
    if (custom) {
      reports.push_back(rb::sweep_character(o.n, o.m, o.len, o.jobs));
    } else {
      reports.push_back(rb::sweep_character(2, 0, o.len, o.jobs));
      reports.push_back(rb::sweep_character(3, 0, o.len, o.jobs));
    }
  }

  bool clean = true;
  for (const rb::SweepReport& r : reports) clean = clean && r.ok();

  if (as_json) {
    json arr = json::array();
    for (const rb::SweepReport& r : reports) {
      arr.push_back(json{{"suite", r.suite},
                         {"cases", r.cases},
                         {"failures", r.failures},
                         {"seconds", r.seconds},
                         {"info", r.info},
                         {"notes", r.notes}});
    }
    std::cout << json{{"reports", arr}, {"ok", clean}}.dump(2) << "\n";
  } else {
    for (const rb::SweepReport& r : reports) std::cout << rb::format_report(r);
    std::cout << "verify: " << (clean ? "PASS" : "FAIL") << "\n";
  }
  return clean ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"roof/ceiling combinatorics over semi-infinite integer sets"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "mirror the output as a single JSON document");

  RoofOpts roof_opts;
  CLI::App* roof = app.add_subcommand("roof", "trace the raising chain to the stable closure");
  roof->fallthrough();
  roof->add_option("set", roof_opts.set, "set literal n=<n>;<=<t>;<e1>,...")->required();
  roof->add_option("--dot", roof_opts.dot, "write the chain as a DOT digraph");
  roof->add_flag("--ceiling", roof_opts.with_ceiling,
                 "also compute the independent ceiling and compare");

  CeilingOpts ceiling_opts;
  CLI::App* ceiling = app.add_subcommand("ceiling", "minimal stable set above the input");
  ceiling->fallthrough();
  ceiling->add_option("set", ceiling_opts.set, "set literal")->required();
  ceiling->add_flag("--chain", ceiling_opts.chain, "print the strip-and-reflect recursion");

  DemazureOpts demazure_opts;
  CLI::App* demazure = app.add_subcommand("demazure", "generate or probe a word's crystal");
  demazure->fallthrough();
  demazure->add_option("--word", demazure_opts.word, "reduced word, e.g. 2,1,0");
  demazure->add_option("--n", demazure_opts.n, "modulus for --word");
  demazure->add_option("--m", demazure_opts.m, "order for --word (default 0)");
  demazure->add_option("--extremal", demazure_opts.extremal, "stable set literal");
  demazure->add_option("--mode", demazure_opts.mode, "top-down | bottom-up | both")
      ->check(CLI::IsMember({"top-down", "bottom-up", "both"}));
  demazure->add_option("--dot", demazure_opts.dot, "write the crystal graph as DOT");
  demazure->add_option("--contains", demazure_opts.contains,
                       "membership probe only, no generation");

  ExpandOpts expand_opts;
  CLI::App* expand = app.add_subcommand("expand", "wedge expansion of the standard vector");
  expand->fallthrough();
  expand->add_option("set", expand_opts.set, "set literal")->required();
  expand->add_flag("--divided", expand_opts.divided, "divided form, leading coefficient +-1");
  expand->add_option("--mod", expand_opts.mod, "reduce coefficients modulo a prime");

  CoeffOpts coeff_opts;
  CLI::App* coeff = app.add_subcommand("coeff", "one coefficient of a standard vector");
  coeff->fallthrough();
  coeff->add_option("j", coeff_opts.set_j, "expanded set literal")->required();
  coeff->add_option("k", coeff_opts.set_k, "coefficient at this set literal")->required();

  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "exhaustive invariant sweeps");
  verify->fallthrough();
  verify->add_option("suite", verify_opts.suite, "roof-ceiling | triangular | character | upinv | all")
      ->required()
      ->check(CLI::IsMember({"roof-ceiling", "triangular", "character", "upinv", "all"}));
  verify->add_option("--n", verify_opts.n, "modulus; omit to run the default suite list");
  verify->add_option("--m", verify_opts.m, "order (default 0)");
  verify->add_option("--height", verify_opts.height, "height bound (default 6)");
  verify->add_option("--len", verify_opts.len, "word length bound for character (default 6)");
  verify->add_option("--jobs", verify_opts.jobs, "parallel workers (default 1, serial)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(roof)) return cmd_roof(roof_opts, as_json);
    if (app.got_subcommand(ceiling)) return cmd_ceiling(ceiling_opts, as_json);
    if (app.got_subcommand(demazure)) {
      demazure_opts.word_given = demazure->count("--word") > 0;
      demazure_opts.extremal_given = demazure->count("--extremal") > 0;
      return cmd_demazure(demazure_opts, as_json);
    }
    if (app.got_subcommand(expand)) return cmd_expand(expand_opts, as_json);
    if (app.got_subcommand(coeff)) return cmd_coeff(coeff_opts, as_json);
    if (app.got_subcommand(verify)) return cmd_verify(verify_opts, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
