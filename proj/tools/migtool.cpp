#include "mig/errors.hpp"
#include "mig/ops.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

void emit(const std::string &text, const std::string &out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    mig::write_text_file(out, text);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Multiple-interval reduction toolkit"};
  app.require_subcommand(1);

  mig::GenRequest gen;
  std::string gen_planted = "random", gen_out;
  auto *cmd_gen = app.add_subcommand("gen", "Generate a colored graph or a red/blue instance");
  cmd_gen->add_option("kind", gen.kind, "colored or rb")->required()->check(CLI::IsMember({"colored", "rb"}));
  cmd_gen->add_option("--n", gen.n, "Vertices (reds for rb)")->required();
  cmd_gen->add_option("--k", gen.k, "Colors")->required();
  cmd_gen->add_option("--blues", gen.blues, "Blue vertices (rb only)");
  cmd_gen->add_option("--p", gen.p, "Edge probability")->capture_default_str();
  cmd_gen->add_option("--planted", gen_planted, "yes, no or random")
      ->check(CLI::IsMember({"yes", "no", "random"}))
      ->capture_default_str();
  cmd_gen->add_option("--seed", gen.seed, "Random seed")->required();
  cmd_gen->add_option("--out", gen_out, "Output file")->required();

  std::string red_name, red_in, red_out;
  std::optional<std::size_t> red_d, red_k;
  auto *cmd_reduce = app.add_subcommand("reduce", "Build a reduction bundle from a source instance");
  cmd_reduce->add_option("name", red_name, "Reduction name")->required()->check(CLI::IsMember(mig::reduction_names()));
  cmd_reduce->add_option("--in", red_in, "Source document")->required();
  cmd_reduce->add_option("--out", red_out, "Bundle output file")->required();
  cmd_reduce->add_option("--d", red_d, "Distance (distance builders)");
  cmd_reduce->add_option("--k", red_k, "Clique size (graph sources)");

  mig::SolveRequest sol;
  std::string sol_in, sol_variant = "plain";
  std::optional<std::size_t> sol_l, sol_d;
  auto *cmd_solve = app.add_subcommand("solve", "Run an exact oracle on a document");
  cmd_solve->add_option("problem", sol.problem, "Problem name")->required()->check(
      CLI::IsMember(mig::solve_problem_names()));
  cmd_solve->add_option("--in", sol_in, "Graph, colored, rb, family or bundle document")->required();
  cmd_solve->add_option("--k", sol.k, "Solution size")->required();
  cmd_solve->add_option("--l", sol_l, "Separated side size");
  cmd_solve->add_option("--d", sol_d, "Distance");
  cmd_solve->add_option("--variant", sol_variant, "plain, connected, independent or clique")
      ->check(CLI::IsMember({"plain", "connected", "independent", "clique"}))
      ->capture_default_str();
  cmd_solve->add_flag("--exact", sol.exact, "Require size exactly k (domset)");
  cmd_solve->add_flag("--complement", sol.complement, "Pose the question on the complement");

  std::string ver_name, ver_report;
  mig::VerifyOptions ver;
  std::optional<std::size_t> ver_d;
  bool ver_timings = false;
  auto *cmd_verify = app.add_subcommand("verify", "Check a reduction's equivalence on randomized trials");
  cmd_verify->add_option("name", ver_name, "Reduction or cutting variant")->required()->check(
      CLI::IsMember(mig::verify_names()));
  cmd_verify->add_option("--trials", ver.trials, "Randomized trials")->required();
  cmd_verify->add_option("--seed", ver.seed, "First seed")->required();
  cmd_verify->add_option("--report", ver_report, "Report output file");
  cmd_verify->add_option("--d", ver_d, "Fixed distance for the distance reductions");
  cmd_verify->add_flag("--timings", ver_timings, "Include per-trial timings in the report");

  std::string ren_in, ren_format, ren_out;
  int ren_density = 0;
  auto *cmd_render = app.add_subcommand("render", "Draw a family as ascii or svg");
  cmd_render->add_option("--in", ren_in, "Family or bundle document")->required();
  cmd_render->add_option("--format", ren_format, "ascii or svg")->required()->check(CLI::IsMember({"ascii", "svg"}));
  cmd_render->add_option("--out", ren_out, "Output file")->required();
  cmd_render->add_option("--density", ren_density, "Characters or pixels per unit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_gen) {
      gen.planted = mig::planted_from_string(gen_planted);
      mig::write_text_file(gen_out, mig::dump_json(mig::generate_document(gen)));
    } else if (*cmd_reduce) {
      const auto b = mig::reduce_by_name(red_name, mig::read_json_file(red_in), red_d, red_k);
      mig::write_text_file(red_out, mig::dump_json(mig::to_json(b)));
      std::cout << b.name << ": " << b.member_count() << " members, k' = " << b.param("k_prime") << "\n";
    } else if (*cmd_solve) {
      sol.l = sol_l;
      sol.d = sol_d;
      sol.variant = mig::dom_variant_from_string(sol_variant);
      const auto j = mig::solve_document(sol, mig::read_json_file(sol_in));
      std::cout << mig::dump_json(j);
      return j["status"] == "exhausted" ? 3 : 0;
    } else if (*cmd_verify) {
      ver.d = ver_d;
      const auto rep = mig::verify_reduction(ver_name, ver);
      if (!ver_report.empty())
        mig::write_text_file(ver_report, mig::dump_json(mig::to_json(rep, ver_timings)));
      std::cout << ver_name << ": " << (rep.pass() ? "PASS" : "FAIL") << " " << rep.agreeing() << "/"
                << rep.trials.size() << " agreeing, " << rep.exhausted() << " exhausted, " << rep.failed_checks()
                << " failed checks\n";
      for (const auto &t : rep.trials)
        if (!t.passed())
          std::cout << "  failing trial seed=" << t.seed << " " << t.origin
                    << (t.error.empty() ? "" : " (" + t.error + ")") << "\n";
      return rep.pass() ? 0 : 1;
    } else if (*cmd_render) {
      emit(mig::render_document(mig::read_json_file(ren_in), mig::render_format_from_string(ren_format), ren_density),
           ren_out);
    }
  } catch (const mig::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
