#include <borel/decompose.hpp>
#include <borel/duality.hpp>
#include <borel/errors.hpp>
#include <borel/homology.hpp>
#include <borel/polarize.hpp>
#include <borel/text.hpp>
#include <borel/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace borel;

enum Exit { kOk = 0, kInput = 1, kPrecondition = 2, kCrossCheck = 3 };

struct Options {
  bool json = false;
  std::optional<std::size_t> vars;
  std::optional<std::size_t> cols;
  std::string ideal;
  std::string decompose_method = "borel";
  std::string betti_method = "ek";
  std::string lc_method = "dual";
  bool witness = false;
  bool decompose = false;
  bool from_components = false;
  std::uint64_t seed = 42;
  std::size_t trials = 200;
};

std::string read_argument(const std::string& arg) {
  if (arg != "-") return arg;
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

MonomialIdeal load(const Options& o) {
  auto parsed = parse_ideal(read_argument(o.ideal), o.vars);
  if (parsed.reduced) std::cerr << "warning: redundant generators were removed\n";
  return parsed.ideal;
}

GridIdeal load_grid(const Options& o) {
  auto parsed = parse_grid_ideal(read_argument(o.ideal), o.vars, o.cols);
  if (parsed.reduced) std::cerr << "warning: redundant generators were removed\n";
  return parsed.ideal;
}

Document grid_document(const GridIdeal& grid) {
  auto doc = document_for(grid.flat());
  doc.n = grid.rows();
  doc.d = grid.cols();
  return doc;
}

void emit(const Options& o, const Document& doc, const std::string& text) {
  if (o.json)
    std::cout << to_json(doc);
  else
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::vector<IrreducibleComponent> parse_components(const std::string& text) {
  std::vector<IrreducibleComponent> out;
  std::size_t pos = 0;
  while (true) {
    pos = text.find('(', pos);
    if (pos == std::string::npos) break;
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced parenthesis", 1, pos + 1);
    std::vector<Exponent> a;
    std::stringstream items(text.substr(pos + 1, close - pos - 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        const long long v = std::stoll(item);
        if (v < 1) throw ParseError("component entries must be positive", 1, pos + 1);
        a.push_back(static_cast<Exponent>(v));
      } catch (const std::logic_error&) {
        throw ParseError("expected an integer in component", 1, pos + 1);
      }
    }
    out.emplace_back(std::move(a));
    pos = close + 1;
  }
  if (out.empty()) throw ParseError("expected components such as (1,2); (2,1,1)", 1, 1);
  return out;
}

int cmd_check(const Options& o) {
  if (o.from_components) {
    const auto comps = irredundant(parse_components(read_argument(o.ideal)));
    std::size_t n = 1;
    for (const auto& a : comps) n = std::max(n, a.t());
    n = o.vars.value_or(n);
    const bool ok = right_shift_check(comps, n);
    const auto ideal = intersect_components(comps, n);
    auto doc = document_for(ideal);
    doc.components = component_rows(comps);
    emit(o, doc, "ideal: " + to_string(ideal) + "\nright-shift: " + (ok ? "yes" : "no") +
                     "\nstrongly stable: " + (is_strongly_stable(ideal) ? "yes" : "no"));
    return ok ? kOk : kPrecondition;
  }
  const auto ideal = load(o);
  const bool ok = is_strongly_stable(ideal);
  emit(o, document_for(ideal), std::string("strongly stable: ") + (ok ? "yes" : "no"));
  return ok ? kOk : kPrecondition;
}

int cmd_bpol(const Options& o, bool standard) {
  const auto ideal = load(o);
  const auto grid = standard ? stdpol_ideal(ideal, o.cols) : bpol_ideal(ideal, o.cols);
  emit(o, grid_document(grid), to_string(grid));
  return kOk;
}

int cmd_depolarize(const Options& o) {
  const auto ideal = depolarize(load_grid(o));
  emit(o, document_for(ideal), to_string(ideal));
  return kOk;
}

int cmd_transpose(const Options& o) {
  const auto grid = transpose(load_grid(o));
  emit(o, grid_document(grid), to_string(grid, 'y'));
  return kOk;
}

int cmd_dual(const Options& o) {
  const auto ideal = load(o);
  const auto dual = star_dual(ideal, o.cols);
  std::string text = to_string(dual, 'y');
  bool ok = true;
  if (o.witness) {
    const auto lhs = bpol_ideal(dual, ideal.ambient());
    const auto rhs = star_dual_witness(ideal, o.cols);
    ok = lhs == rhs;
    text += "\nb-pol(I*) = " + to_string(lhs, 'y') + "\n(b-pol(I)^dual)^t = " +
            to_string(rhs, 'y') + "\nidentity: " + (ok ? "holds" : "FAILS");
  }
  emit(o, document_for(dual, ideal.ambient()), text);
  return ok ? kOk : kCrossCheck;
}

int cmd_decompose(const Options& o) {
  const auto ideal = load(o);
  Document doc = document_for(ideal, o.cols);
  std::string text;
  if (o.decompose_method == "borel") {
    const auto e = decompose_strongly_stable(ideal);
    doc.components = component_rows(e);
    text = to_string(std::span(e));
  } else if (o.decompose_method == "psi") {
    const auto grid = bpol_decomposition(decompose_strongly_stable(ideal));
    doc.components = component_rows(grid);
    text = to_string(std::span(grid));
  } else {
    const auto comps = decompose_oracle(ideal);
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& c : comps) {
      std::vector<std::size_t> row(ideal.ambient(), 0);
      for (const auto& [v, e] : c.powers()) row[v - 1] = e;
      rows.push_back(std::move(row));
    }
    doc.components = std::move(rows);
    text = to_string(std::span(comps));
  }
  emit(o, doc, text);
  return kOk;
}

int cmd_sigma(const Options& o) {
  const auto ideal = load(o);
  const auto sigma = sigma_ideal(ideal, o.cols);
  auto doc = document_for(sigma);
  std::string text = to_string(sigma);
  if (o.decompose) {
    const auto comps = sigma_decomposition(decompose_strongly_stable(ideal));
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& c : comps) {
      std::vector<std::size_t> row;
      for (const auto& [v, e] : c.powers()) row.push_back(v);
      rows.push_back(std::move(row));
    }
    doc.components = std::move(rows);
    text += "\ncomponents: " + to_string(std::span(comps));
  }
  emit(o, doc, text);
  return kOk;
}

int cmd_betti(const Options& o) {
  const auto ideal = load(o);
  auto doc = document_for(ideal, o.cols);
  doc.betti = o.betti_method == "oracle" ? betti_oracle(ideal) : ek_betti(ideal);
  emit(o, doc, to_string(*doc.betti));
  return kOk;
}

int cmd_lc(const Options& o) {
  const auto ideal = load(o);
  const auto n = ideal.ambient();
  auto doc = document_for(ideal, o.cols);
  const auto via_components = [&] {
    return lc_series_via_components(decompose_strongly_stable(ideal), n);
  };
  const auto via_gamma = [&] {
    return lc_series_via_gamma(bpol_decomposition(decompose_strongly_stable(ideal)), n);
  };
  if (o.lc_method == "components") {
    doc.lc = via_components();
  } else if (o.lc_method == "gamma") {
    doc.lc = via_gamma();
  } else {
    doc.lc = lc_series_via_dual(ideal, o.cols);
    if (o.lc_method == "all" && (*doc.lc != via_components() || *doc.lc != via_gamma())) {
      std::cerr << "error: the three local cohomology formulas disagree\n";
      return kCrossCheck;
    }
  }
  emit(o, doc, to_string(*doc.lc));
  return kOk;
}

int cmd_adeg(const Options& o) {
  const auto ideal = load(o);
  const auto e = decompose_strongly_stable(ideal);
  const auto a = adeg(e, ideal.ambient());
  std::ostringstream text;
  for (const auto& [i, v] : a.strata) text << "adeg_" << i << " = " << v << '\n';
  text << "total = " << a.total << "\ndeg = " << a.degree << '\n';
  auto doc = document_for(ideal, o.cols);
  doc.components = component_rows(e);
  emit(o, doc, text.str());
  return a.degree == degree_from_hilbert_series(ideal) ? kOk : kCrossCheck;
}

int cmd_canonical(const Options& o) {
  const auto ideal = load(o);
  const auto gens = canonical_generators(ideal, o.cols);
  const std::size_t cols = o.cols.value_or(default_columns(ideal));
  const GridIdeal omega(ideal.ambient(), cols, gens);
  emit(o, grid_document(omega), to_string(omega));
  return kOk;
}

int cmd_verify(const Options& o) {
  CorpusSpec spec;
  spec.seed = o.seed;
  spec.trials = o.trials;
  if (o.vars) spec.max_vars = *o.vars;
  if (o.cols) spec.max_cols = *o.cols;
  spec.min_vars = std::min(spec.min_vars, spec.max_vars);
  spec.min_cols = std::min(spec.min_cols, spec.max_cols);
  const auto report = run_suite(spec);
  if (o.json) {
    std::cout << report.to_json();
  } else {
    for (const auto& [name, tally] : report.properties) {
      std::cout << name << ": " << tally.passed << " passed, " << tally.failed << " failed, "
                << tally.skipped << " skipped\n";
      if (tally.counterexample)
        std::cout << "  first counterexample: " << *tally.counterexample << '\n';
    }
    std::cout << (report.ok() ? "all properties hold" : "FAILURES") << " over " << report.trials
              << " trials\n";
  }
  return report.ok() ? kOk : kCrossCheck;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BOREL_DUAL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed BOREL_DUAL_SEED\n";
    }
  }
  return 42;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly stable ideals, alternative polarization and Alexander duality"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  o.seed = default_seed();
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--vars", o.vars, "Number of variables (rows of the grid)");
  app.add_option("--cols", o.cols, "Grid width d (default: largest generator degree)");

  const auto with_ideal = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("ideal", o.ideal, "Ideal such as \"x1^2, x1*x2\" or - for stdin")->required();
    return sub;
  };

  auto* check = with_ideal("check", "Test strong stability");
  check->add_flag("--from-components", o.from_components,
                  "Read components \"(a1,...); ...\" and apply the right-shift test");
  auto* bpol = with_ideal("bpol", "Alternative polarization");
  auto* pol = with_ideal("pol", "Standard polarization");
  auto* depol = with_ideal("depolarize", "Collapse x{i}_{j} to x{i}");
  auto* tr = with_ideal("transpose", "x{i}_{j} -> y{j}_{i}");
  auto* dual = with_ideal("dual", "Strongly stable dual I*");
  dual->add_flag("--witness", o.witness, "Also print both sides of the grid identity");
  auto* dec = with_ideal("decompose", "Irreducible decomposition");
  dec->add_option("--method", o.decompose_method, "borel | oracle | psi")
      ->check(CLI::IsMember({"borel", "oracle", "psi"}))
      ->capture_default_str();
  auto* sigma = with_ideal("sigma", "Squarefree shift I^sigma");
  sigma->add_flag("--decompose", o.decompose, "Also print its components");
  auto* betti = with_ideal("betti", "Graded Betti numbers");
  betti->add_option("--method", o.betti_method, "ek | oracle")
      ->check(CLI::IsMember({"ek", "oracle"}))
      ->capture_default_str();
  auto* lc = with_ideal("lc", "Local cohomology Hilbert series");
  lc->add_option("--method", o.lc_method, "dual | components | gamma | all")
      ->check(CLI::IsMember({"dual", "components", "gamma", "all"}))
      ->capture_default_str();
  auto* ad = with_ideal("adeg", "Arithmetic degrees");
  auto* canon = with_ideal("canonical", "Generators of the canonical module of b-pol");
  auto* verify = app.add_subcommand("verify", "Randomized cross-check suite");
  verify->add_option("--seed", o.seed, "Random seed (default $BOREL_DUAL_SEED or 42)");
  verify->add_option("--trials", o.trials, "Number of random ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (bpol->parsed()) return cmd_bpol(o, false);
    if (pol->parsed()) return cmd_bpol(o, true);
    if (depol->parsed()) return cmd_depolarize(o);
    if (tr->parsed()) return cmd_transpose(o);
    if (dual->parsed()) return cmd_dual(o);
    if (dec->parsed()) return cmd_decompose(o);
    if (sigma->parsed()) return cmd_sigma(o);
    if (betti->parsed()) return cmd_betti(o);
    if (lc->parsed()) return cmd_lc(o);
    if (ad->parsed()) return cmd_adeg(o);
    if (canon->parsed()) return cmd_canonical(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCrossCheck;
  }
  return kInput;
}
