#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "letterplace/letterplace.hpp"

namespace {

lp::Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lp::ParseError("cannot open poset file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return lp::Poset::parse(text.str());
}

std::vector<lp::FieldSpec> to_fields(const std::vector<std::uint32_t>& chars) {
  std::vector<lp::FieldSpec> out;
  for (auto c : chars) out.emplace_back(c);
  if (out.empty()) out.emplace_back(0);
  return out;
}

lp::BettiTable compute_table(const std::string& engine, int n, const lp::Poset& p,
                             const lp::FieldSpec& k) {
  std::string pick = engine;
  if (pick == "auto") pick = p.is_rooted_forest() ? "tree" : "strand";
  if (pick == "tree") return lp::betti_table_tree(n, p);
  if (pick == "strand") return lp::betti_table_fast(n, p, k);
  if (pick == "oracle") return lp::betti_table_oracle(n, p, k);
  throw CLI::ValidationError("--engine", "unknown engine: " + pick);
}

void emit_multigraded(std::ostream& out, const std::string& engine, int n, const lp::Poset& p,
                      const lp::FieldSpec& k) {
  std::string pick = engine;
  if (pick == "auto") pick = "strand";
  lp::enumerate_multidegrees(n, p, lp::Prune::chains, [&](const lp::Multidegree& r) {
    std::map<int, long long> betas;
    if (pick == "oracle")
      betas = lp::beta_R_oracle(n, p, r, k);
    else
      betas = lp::beta_R_strand(n, p, r, k);
    for (auto& [i, b] : betas)
      out << i << " | " << lp::render_multidegree(p, r) << " | " << b << "\n";
  });
}

int run(int argc, char** argv) {
  CLI::App app{"Betti numbers of letterplace ideals of finite posets"};
  app.require_subcommand(1);

  std::string file;
  int n = 2;
  std::string engine = "auto";
  std::uint32_t characteristic = 0;
  std::vector<std::uint32_t> chars;
  std::string format = "text";
  std::string convention = "ideal";
  bool multigraded = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "poset file")->required();
    cmd->add_option("-n", n, "letterplace index n")->check(CLI::PositiveNumber);
  };

  auto* gens = app.add_subcommand("gens", "print the monomial generators of L(n,P)");
  add_common(gens);

  auto* betti = app.add_subcommand("betti", "print the graded Betti table");
  add_common(betti);
  betti->add_option("--engine", engine, "auto|oracle|strand|tree");
  betti->add_option("--char", characteristic, "field characteristic (0 or a prime)");
  betti->add_option("--format", format, "text|csv|json");
  betti->add_option("--convention", convention, "ideal|quotient");
  betti->add_flag("--multigraded", multigraded, "emit per-multidegree lines instead");

  auto* multibetti = app.add_subcommand("multibetti", "print multigraded Betti numbers");
  add_common(multibetti);
  multibetti->add_option("--engine", engine, "oracle|strand (default oracle)");
  multibetti->add_option("--char", characteristic, "field characteristic");

  auto* check = app.add_subcommand("check", "run the cross-validation suite");
  add_common(check);
  check->add_option("--char,--chars", chars, "field characteristics to compare")
      ->delimiter(',');
  std::vector<std::string> engines;
  check->add_option("--engine", engines, "engines to compare (default: all applicable)")
      ->delimiter(',');

  auto* info = app.add_subcommand("info", "print invariants of L(n,P)");
  add_common(info);

  CLI11_PARSE(app, argc, argv);

  lp::Poset p = load_poset(file);

  if (gens->parsed()) {
    for (auto& m : lp::lp_generators(n, p))
      std::cout << lp::lp_monomial_string(p, m) << "\n";
    return 0;
  }

  if (betti->parsed()) {
    lp::FieldSpec k(characteristic);
    if (multigraded) {
      emit_multigraded(std::cout, engine, n, p, k);
      return 0;
    }
    lp::BettiTable t = compute_table(engine, n, p, k)
                           .converted(convention == "quotient" ? lp::Convention::quotient
                                                               : lp::Convention::ideal);
    if (format == "csv")
      std::cout << lp::render_table_csv(t);
    else if (format == "json")
      std::cout << lp::render_table_json(t);
    else
      std::cout << lp::render_table_text(t);
    return 0;
  }

  if (multibetti->parsed()) {
    lp::FieldSpec k(characteristic);
    emit_multigraded(std::cout, engine == "auto" ? "oracle" : engine, n, p, k);
    return 0;
  }

  if (check->parsed()) {
    lp::CheckOptions opt;
    opt.fields = to_fields(chars);
    opt.engines = engines;
    lp::Report rep = lp::run_checks(n, p, opt);
    std::cout << rep.render();
    int fails = rep.failures();
    std::cout << (fails == 0 ? "all checks passed" : std::to_string(fails) + " check(s) FAILED")
              << "\n";
    return fails == 0 ? 0 : 1;
  }

  if (info->parsed()) {
    auto mult = lp::multiplicity(n, p);
    int c = p.width();
    std::cout << "elements:        " << p.size() << "\n"
              << "width:           " << c << "\n"
              << "codimension:     " << p.size() << "\n"
              << "regularity:      " << c * (n - 1) + 1 << "\n"
              << "multiplicity:    " << mult.value << "  (bounds " << mult.lower << " .. "
              << mult.upper << ")\n"
              << "level:           " << (p.all_maximal_antichains_same_size() ? "yes" : "no")
              << "\n"
              << "generators:      " << p.count_multichains(n) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lp::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
