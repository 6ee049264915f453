// Command-line front end.  Exit codes: 0 success, 1 failed check or
// exhausted budget, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rees/rees.hpp"

using namespace rees;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ScrollSpec spec_from_flag(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const Error& e) {
    throw UsageError(std::string("-n ") + text + ": " + e.what());
  }
}

Target target_from_flag(const std::string& s) { return s == "fiber" ? Target::Fiber : Target::Rees; }

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("--out " + out + ": cannot open for writing");
  f << j.dump(2) << "\n";
}

std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError("--indices " + s + ": expected comma-separated integers");
    }
  }
  return out;
}

// ---- gen ----

struct GenArgs {
  std::string partition, target = "rees", family, indices, presentation = "m", emit = "text";
};

int run_gen(const GenArgs& a) {
  const ScrollRing r(spec_from_flag(a.partition));
  GeneratorSet<Rational> gens = generators<Rational>(r, target_from_flag(a.target));
  if (!a.family.empty()) {
    Family f{};
    try {
      f = parse_family(a.family);
    } catch (const Error& e) {
      throw UsageError("--family " + a.family + ": " + e.what());
    }
    std::erase_if(gens.items, [&](const auto& g) { return g.family != f; });
    if (!a.indices.empty()) {
      const auto idx = parse_indices(a.indices);
      gens.items = {{f, idx, signed_generator<Rational>(r, f, idx)}};
      if (gens.items[0].poly.is_zero()) throw Error(Errc::BadIndices, "repeated indices give the zero relation");
    }
  } else if (!a.indices.empty()) {
    throw UsageError("--indices requires --family");
  }
  const OrderContext ctx(r);
  json lms = json::array();
  for (const auto& g : gens.items) lms.push_back(to_text(*r.universe(), leading_monomial(ctx, g.poly)));
  if (a.presentation == "x") gens = to_x_presentation(r, gens);

  if (a.emit == "json") {
    json items = generators_to_json<Rational>(nullptr, gens);
    for (std::size_t k = 0; k < items.size(); ++k) items[k]["leading_monomial"] = lms[k];
    emit({{"partition", r.spec().to_string()},
          {"target", a.target},
          {"presentation", a.presentation},
          {"generators", items}},
         "");
  } else {
    for (const auto& g : gens.items) std::cout << g.label() << ": " << to_text(g.poly) << "\n";
  }
  return 0;
}

// ---- gb ----

struct GbArgs {
  std::string partition, target = "fiber", out;
};

int run_gb(const GbArgs& a, unsigned jobs, std::size_t budget) {
  const ScrollRing r(spec_from_flag(a.partition));
  const OrderContext ctx(r);
  const auto gens = generators<Rational>(r, target_from_flag(a.target));
  GbOptions o;
  o.jobs = jobs;
  o.budget = budget;
  o.tags = family_tags(gens);
  const GbReport rep = is_groebner(ctx, gens.polys(), o);
  json j = gb_to_json(rep, [&](std::size_t k) { return gens.items[k].label(); });
  j["partition"] = r.spec().to_string();
  j["target"] = a.target;
  j["generators"] = gens.items.size();
  emit(j, a.out);
  return rep.is_gb ? 0 : 1;
}

// ---- complex ----

struct ComplexArgs {
  std::string partition, method = "clique", emit = "json";
};

int run_facets(const ComplexArgs& a, std::size_t budget) {
  const ScrollRing r(spec_from_flag(a.partition));
  if (a.method == "formula") {
    if (a.emit == "json") throw UsageError("--method formula only supports --emit count");
    std::cout << facet_count_formula(r.spec()).get_str() << "\n";
    return 0;
  }
  FacetOptions opt;
  opt.budget = budget;
  const auto facets = a.method == "tree" ? facets_tree(r, opt) : facets_clique(r, opt);
  if (a.emit == "count")
    std::cout << facets.size() << "\n";
  else
    std::cout << faces_to_json(facets).dump() << "\n";
  return 0;
}

// ---- hilbert ----

struct HilbertArgs {
  std::string harness, input, order = "grlex";
  int nvars = 0;
};

int run_hilbert(const HilbertArgs& a, std::size_t budget) {
  if (a.harness.empty() == a.input.empty()) throw UsageError("hilbert: give exactly one of --case or --input");
  HilbertSeries hs;
  if (!a.harness.empty()) {
    const std::string& c = a.harness;
    if (c.size() < 2 || (c[0] != 'G' && c[0] != 'M' && c[0] != 'L') || (c[1] != '4' && c[1] != '5'))
      throw UsageError("--case " + c + ": expected G4, G5, M4, M5, L4:<k> or L5:<k>");
    const int m = c[1] - '0';
    const auto u = harness_universe(m);
    const int nv = static_cast<int>(u->size());
    if (c[0] == 'G') {
      if (c.size() != 2) throw UsageError("--case " + c + ": G takes no order index");
      hs = hs_of_ideal(GradedLex{}, harness_G(u, m), nv, budget ? budget : 1000000);
    } else if (c[0] == 'M') {
      if (c.size() != 2) throw UsageError("--case " + c + ": M takes no order index");
      hs = hs_monomial(harness_M(u, m), nv);
    } else {
      const auto orders = admissible_orders(m);
      if (c.size() < 4 || c[2] != ':') throw UsageError("--case " + c + ": L needs an order index, e.g. L5:3");
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(c.substr(3), &used);
        if (used != c.size() - 3) throw std::invalid_argument(c);
      } catch (const std::logic_error&) {
        throw UsageError("--case " + c + ": bad order index");
      }
      if (k >= orders.size()) throw UsageError("--case " + c + ": order index must be below " + std::to_string(orders.size()));
      hs = hs_monomial(harness_L(u, m, orders[k]), nv);
    }
  } else {
    std::ifstream f(a.input);
    if (!f) throw UsageError("--input " + a.input + ": cannot open");
    json j;
    try {
      j = json::parse(f);
    } catch (const json::parse_error& e) {
      throw UsageError("--input " + a.input + ": " + e.what());
    }
    if (!j.is_array()) throw UsageError("--input " + a.input + ": expected an array of polynomials");
    auto vars = json_variables(j);
    std::sort(vars.begin(), vars.end());
    const auto u = std::make_shared<const Universe>(vars);
    std::vector<QPoly> polys;
    for (const auto& p : j) polys.push_back(poly_from_json(u, p));
    std::erase_if(polys, [](const QPoly& p) { return p.is_zero(); });
    const int nv = a.nvars ? a.nvars : static_cast<int>(vars.size());
    if (nv < static_cast<int>(vars.size())) throw UsageError("--nvars is smaller than the number of variables used");
    const std::size_t b = budget ? budget : 1000000;
    hs = a.order == "grevlex" ? hs_of_ideal(GradedRevLex{}, polys, nv, b) : hs_of_ideal(GradedLex{}, polys, nv, b);
  }
  std::cout << json(hs.numerator).dump() << "\n";
  return 0;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite = "all", depth = "fast", out;
  std::vector<std::string> partitions;
  int max_c = 0;
};

int run_verify(const VerifyArgs& a, unsigned jobs, std::size_t budget) {
  const Suite s = parse_suite(a.suite);
  std::vector<ScrollSpec> specs;
  for (const auto& p : a.partitions) specs.push_back(spec_from_flag(p));
  if (a.max_c > 0)
    for (auto& sp : partitions_up_to(a.max_c)) specs.push_back(std::move(sp));
  if (specs.empty() && s != Suite::Prop48) throw UsageError("verify --suite " + a.suite + ": needs -n or --max-c");
  VerifyOptions o;
  o.depth = a.depth == "slow" ? Depth::Slow : Depth::Fast;
  o.jobs = jobs;
  o.budget = budget;
  const VerificationReport rep = run_suite(s, specs, o);
  emit(report_to_json(rep), a.out);
  return rep.passed() ? 0 : 1;
}

// ---- order-dump ----

int run_order_dump(const std::string& partition, const std::string& fmt) {
  const ScrollRing r(spec_from_flag(partition));
  const OrderContext ctx(r);
  if (fmt == "json") {
    emit({{"partition", r.spec().to_string()},
          {"matrix_M", matrix_to_json(r.matrix_m())},
          {"matrix_X", matrix_to_json(r.matrix_x())},
          {"tau", r.tau().forward_table()},
          {"variables", order_table_to_json(ctx)}},
         "");
  } else {
    std::cout << dump_text(r.spec(), r.matrix_m()) << "\n" << dump_variables(ctx);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees algebras and special fiber rings of rational normal scrolls"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  std::size_t budget = 0;
  app.add_option("--jobs", jobs, "worker threads for S-pair reduction")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", budget, "cap on S-pairs or faces; 0 means unlimited");

  const std::vector<std::string> targets{"fiber", "rees"};

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "print defining equations");
  g->add_option("-n,--partition", gen.partition, "scroll degrees, e.g. 1,2,2,3")->required();
  g->add_option("--target", gen.target)->check(CLI::IsMember(targets));
  g->add_option("--family", gen.family, "L, M, P or Q");
  g->add_option("--indices", gen.indices, "one generator, e.g. 1,2,3,4 (needs --family)");
  g->add_option("--presentation", gen.presentation, "m (T variables) or x (Y variables)")
      ->check(CLI::IsMember({"m", "x"}));
  g->add_option("--emit", gen.emit)->check(CLI::IsMember({"text", "json"}));

  GbArgs gb;
  auto* gbc = app.add_subcommand("gb", "Buchberger criterion for the generators");
  gbc->add_option("-n,--partition", gb.partition)->required();
  gbc->add_option("--target", gb.target)->check(CLI::IsMember(targets));
  gbc->add_option("--out", gb.out, "write JSON here instead of stdout");

  ComplexArgs cx;
  auto* cplx = app.add_subcommand("complex", "initial complex");
  cplx->require_subcommand(1);
  auto* facets = cplx->add_subcommand("facets", "enumerate facets");
  facets->add_option("-n,--partition", cx.partition)->required();
  facets->add_option("--method", cx.method)->check(CLI::IsMember({"clique", "tree", "formula"}));
  facets->add_option("--emit", cx.emit)->check(CLI::IsMember({"json", "count"}));

  HilbertArgs hb;
  auto* hil = app.add_subcommand("hilbert", "Hilbert series numerator over (1-t)^nvars");
  hil->add_option("--case", hb.harness, "G4, G5, M4, M5, L4:<k>, L5:<k>");
  hil->add_option("--input", hb.input, "JSON file with an array of polynomials");
  hil->add_option("--order", hb.order)->check(CLI::IsMember({"grlex", "grevlex"}));
  hil->add_option("--nvars", hb.nvars, "ambient variable count for --input");

  VerifyArgs vf;
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", vf.suite)
      ->check(CLI::IsMember({"lm", "syzygies", "prop48", "fiber-gb", "rees-gb", "complex", "kernel", "all"}));
  ver->add_option("--depth", vf.depth)->check(CLI::IsMember({"fast", "slow"}));
  ver->add_option("-n,--partition", vf.partitions, "repeatable");
  ver->add_option("--max-c", vf.max_c, "add every partition with c up to this value");
  ver->add_option("--out", vf.out);

  std::string od_partition, od_emit = "text";
  auto* od = app.add_subcommand("order-dump", "matrix M and the variable order");
  od->add_option("-n,--partition", od_partition)->required();
  od->add_option("--emit", od_emit)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*g) return run_gen(gen);
    if (*gbc) return run_gb(gb, jobs, budget);
    if (*facets) return run_facets(cx, budget);
    if (*hil) return run_hilbert(hb, budget);
    if (*ver) return run_verify(vf, jobs, budget);
    if (*od) return run_order_dump(od_partition, od_emit);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::PairBudgetExceeded:
      case Errc::BoundExceeded:
      case Errc::ConstraintViolated:
        return 1;
      default:
        return 2;
    }
  }
  return 2;
}
