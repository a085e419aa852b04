// Command-line surface: word evaluation, verification of the printed
// computations, quotient queries and Nielsen graph experiments.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error,
// 3 degree overflow, 4 cap exceeded, 5 non-generating seed.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>

#include "gsn/catalog.hpp"
#include "gsn/group.hpp"
#include "gsn/nielsen.hpp"
#include "gsn/verify.hpp"
#include "gsn/words.hpp"

using nlohmann::json;

namespace {

constexpr long long kDefaultDegreeLimit = 59049;  // 3^10

std::string data_dir() {
  if (const char* env = std::getenv("GSN_DATA_DIR")) return env;
#ifdef GSN_DEFAULT_DATA_DIR
  return GSN_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

std::ostream& open_output(const std::string& out_path, std::ofstream& file) {
  if (out_path.empty()) return std::cout;
  std::string path = out_path;
  if (const char* dir = std::getenv("GSN_OUTPUT_DIR"); dir && path.front() != '/')
    path = std::string(dir) + "/" + path;
  file.open(path);
  if (!file) {
    std::cerr << "cannot open output file: " << path << "\n";
    std::exit(1);
  }
  return file;
}

void guard_degree(int p, int depth, long long limit) {
  long long n = 1;
  for (int i = 0; i < depth; ++i) {
    n *= p;
    if (n > limit) {
      std::cerr << "degree p^depth exceeds limit " << limit
                << " (raise with --max-degree)\n";
      std::exit(3);
    }
  }
}

gsn::ElemPtr parse_or_die(const std::string& word, const gsn::TreeParams& params) {
  try {
    return gsn::parse_word(word, params);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    std::exit(2);
  }
}

gsn::ScenarioPair parse_pair(const std::string& text, const gsn::TreeParams& params) {
  auto semi = text.find(';');
  if (semi == std::string::npos) {
    std::cerr << "pair syntax is \"<word> ; <word>\"\n";
    std::exit(2);
  }
  gsn::ScenarioPair pr;
  pr.label = "(" + text + ")";
  pr.u = parse_or_die(text.substr(0, semi), params);
  pr.v = parse_or_die(text.substr(semi + 1), params);
  return pr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computation engine for groups acting on rooted trees"};
  app.require_subcommand(1);
  // let global flags such as --format appear after the subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands(nullptr)) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };

  long long degree_limit = kDefaultDegreeLimit;
  app.add_option("--max-degree", degree_limit, "largest allowed p^depth")->capture_default_str();

  std::string format = "text";
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  std::string out_path;
  app.add_option("--out", out_path, "write the report to this file (GSN_OUTPUT_DIR-relative)");
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for exhaustive exploration");
  bool deterministic = false;
  app.add_flag("--deterministic", deterministic, "force single-threaded deterministic runs");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a word to a level permutation");
  std::string eval_word;
  int eval_p = 3, eval_depth = 4;
  eval->add_option("word", eval_word)->required();
  eval->add_option("--p", eval_p);
  eval->add_option("--depth", eval_depth);

  // verify paper
  auto* verify = app.add_subcommand("verify", "re-run the printed computations");
  verify->add_subcommand("paper", "golden suite of every printed computation");

  // quotient
  auto* quotient = app.add_subcommand("quotient", "congruence quotient queries");
  auto* q_order = quotient->add_subcommand("order", "group order via stabilizer chain");
  auto* q_proj = quotient->add_subcommand("project-check", "tower compatibility on random words");
  int q_p = 3, q_depth = 1, q_samples = 100;
  unsigned q_seed = 12345;
  for (auto* sc : {q_order, q_proj}) {
    sc->add_option("--p", q_p);
    sc->add_option("--depth", q_depth);
  }
  q_proj->add_option("--samples", q_samples);
  q_proj->add_option("--seed", q_seed);

  // nielsen
  auto* nielsen = app.add_subcommand("nielsen", "Nielsen graph experiments");
  auto* n_explore = nielsen->add_subcommand("explore", "exhaustive component count");
  auto* n_certify = nielsen->add_subcommand("certify", "cycle-type distinctness certificate");
  auto* n_sep = nielsen->add_subcommand("separation", "first separating level of two pairs");
  std::string group_desc = "abelian:5,5", moves_desc = "nielsen";
  int n_k = 2;
  std::size_t n_cap = 1000000;
  n_explore->add_option("--group", group_desc);
  n_explore->add_option("--k", n_k);
  n_explore->add_option("--moves", moves_desc)->check(CLI::IsMember({"nielsen", "ac"}));
  n_explore->add_option("--cap", n_cap);
  std::string pair_a, pair_b;
  int c_p = 3, c_depth = 4;
  std::string c_group;
  n_certify->add_option("--pairA", pair_a)->required();
  n_certify->add_option("--pairB", pair_b)->required();
  n_certify->add_option("--p", c_p);
  n_certify->add_option("--depth", c_depth);
  n_certify->add_option("--group", c_group, "quotient descriptor, alternative to --p/--depth");
  int s_p = 3, s_k = 3, s_j = 4, s_maxdepth = 6;
  n_sep->add_option("--p", s_p);
  n_sep->add_option("--k", s_k);
  n_sep->add_option("--j", s_j);
  n_sep->add_option("--maxdepth", s_maxdepth);
  n_sep->add_option("--pairA", pair_a);
  n_sep->add_option("--pairB", pair_b);

  allow_fallthrough(&app);
  CLI11_PARSE(app, argc, argv);
  if (deterministic) threads = 1;

  std::ofstream out_file;
  std::ostream& out = open_output(out_path, out_file);

  try {
    if (*eval) {
      guard_degree(eval_p, eval_depth, degree_limit);
      gsn::TreeParams params{eval_p};
      gsn::ElemPtr e = parse_or_die(eval_word, params);
      gsn::Evaluator ev(params);
      gsn::Permutation perm = ev.evaluate(e, eval_depth);
      gsn::CycleType t = gsn::cycle_type(perm);
      if (format == "json") {
        out << json{{"word", eval_word},
                    {"p", eval_p},
                    {"depth", eval_depth},
                    {"degree", perm.degree()},
                    {"permutation", gsn::format_cycles(perm)},
                    {"cycle_type", gsn::format_cycle_type(t)}}
                   .dump(2)
            << "\n";
      } else {
        out << gsn::format_cycles(perm) << "\n";
        out << "cycle type: " << gsn::format_cycle_type(t) << "\n";
      }
      return 0;
    }

    if (*verify) {
      gsn::VerifySuite suite = gsn::run_verify_suite(data_dir());
      if (format == "json")
        out << suite.to_json().dump(2) << "\n";
      else
        out << suite.to_text();
      return suite.pass ? 0 : 1;
    }

    if (*q_order) {
      guard_degree(q_p, q_depth, degree_limit);
      auto h = gsn::GroupHandle::quotient(q_p, q_depth);
      if (format == "json")
        out << json{{"group", h->descriptor()}, {"order", h->order().str()}}.dump(2) << "\n";
      else
        out << "order(" << h->descriptor() << ") = " << h->order() << "\n";
      return 0;
    }

    if (*q_proj) {
      guard_degree(q_p, q_depth + 1, degree_limit);
      gsn::TreeParams params{q_p};
      gsn::Evaluator ev(params);
      std::mt19937 rng(q_seed);
      std::uniform_int_distribution<int> letter(0, 3);
      std::uniform_int_distribution<int> len(1, 12);
      int ok = 0;
      for (int s = 0; s < q_samples; ++s) {
        std::vector<gsn::Gen> letters;
        int L = len(rng);
        for (int i = 0; i < L; ++i) letters.push_back(static_cast<gsn::Gen>(letter(rng)));
        gsn::GeneratorWord w = gsn::reduce(letters);
        gsn::Permutation lower = ev.evaluate(w, q_depth);
        gsn::Permutation upper = ev.evaluate(w, q_depth + 1);
        if (gsn::project(upper, q_p, q_depth) == lower) ++ok;
      }
      bool pass = ok == q_samples;
      if (format == "json")
        out << json{{"p", q_p}, {"depth", q_depth}, {"samples", q_samples},
                    {"compatible", ok}, {"pass", pass}}
                   .dump(2)
            << "\n";
      else
        out << ok << "/" << q_samples << " samples compatible\n";
      return pass ? 0 : 1;
    }

    if (*n_explore) {
      auto h = gsn::GroupHandle::parse(group_desc);
      if (h->kind() == gsn::GroupHandle::Kind::Quotient)
        guard_degree(h->p(), h->depth(), degree_limit);
      gsn::MoveSet ms = moves_desc == "ac" ? gsn::MoveSet::andrews_curtis(n_k, {})
                                           : gsn::MoveSet::nielsen(n_k);
      gsn::ComponentReport r;
      try {
        r = gsn::explore_exhaustive(h, n_k, ms, n_cap, threads);
      } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return 4;
      }
      if (format == "json")
        out << r.to_json(h).dump(2) << "\n";
      else {
        out << "group " << r.group << ", moves " << r.moveset << "\n";
        out << "generating " << n_k << "-tuples: " << r.total_generating << "\n";
        out << "components: " << r.components.size() << "\n";
        for (const auto& c : r.components) {
          out << "  size " << c.size;
          if (c.fp) out << "  fingerprint " << gsn::format_cycle_type(*c.fp);
          out << "\n";
        }
      }
      return 0;
    }

    if (*n_certify) {
      if (!c_group.empty()) {
        auto h = gsn::GroupHandle::parse(c_group);
        if (h->kind() != gsn::GroupHandle::Kind::Quotient) {
          std::cerr << "certify needs a quotient group\n";
          return 2;
        }
        c_p = h->p();
        c_depth = h->depth();
      }
      guard_degree(c_p, c_depth, degree_limit);
      gsn::TreeParams params{c_p};
      gsn::Certificate c = gsn::certify_distinct(parse_pair(pair_a, params),
                                                 parse_pair(pair_b, params), params, c_depth);
      if (format == "json")
        out << c.to_json().dump(2) << "\n";
      else
        out << c.to_text();
      return 0;
    }

    if (*n_sep) {
      guard_degree(s_p, s_maxdepth, degree_limit);
      gsn::TreeParams params{s_p};
      gsn::ScenarioPair A =
          pair_a.empty() ? gsn::pair_x_yzn(s_k, params) : parse_pair(pair_a, params);
      gsn::ScenarioPair B =
          pair_b.empty() ? gsn::pair_x_yzn(s_j, params) : parse_pair(pair_b, params);
      std::optional<int> d = gsn::separation_depth(A, B, params, s_maxdepth);
      // an observation record: absence of separation decides nothing
      if (format == "json") {
        json j{{"pairA", A.label}, {"pairB", B.label}, {"p", s_p}, {"maxdepth", s_maxdepth}};
        if (d)
          j["separating_depth"] = *d;
        else
          j["separating_depth"] = nullptr;
        j["verdict"] = d ? "separated" : "inconclusive";
        out << j.dump(2) << "\n";
      } else {
        out << "pairs " << A.label << " vs " << B.label << ": ";
        if (d)
          out << "cycle types separate at depth " << *d << "\n";
        else
          out << "no separation up to depth " << s_maxdepth << " (inconclusive)\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    std::cerr << what << "\n";
    if (what.find("non-generating seed") != std::string::npos) return 5;
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::string what = e.what();
    std::cerr << what << "\n";
    if (what.find("CapExceeded") != std::string::npos) return 4;
    return 1;
  }
  return 0;
}
