#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramcoh/verifier.hpp"

using namespace ramcoh;

namespace {

std::string join(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

// "2,2,1" or "[2,2,1]"; coefficients may themselves be lists: "[[0,-1],2,1]".
std::vector<TowerCoefficient> parse_poly(const std::string& text) {
  std::string t = text;
  if (t.empty() || t.front() != '[') t = "[" + t + "]";
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(t);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(ErrorCode::ConfigError, "cannot parse coefficient list \"" + text + "\"");
  }
  std::vector<TowerCoefficient> out;
  for (const auto& c : j) {
    if (c.is_array())
      out.push_back(c.get<std::vector<long>>());
    else if (c.is_number_integer())
      out.push_back({c.get<long>()});
    else
      throw Error(ErrorCode::ConfigError, "bad coefficient in \"" + text + "\"");
  }
  return out;
}

int run_verify(const std::string& config, const std::string& out, const VerifyOptions& opts) {
  const auto corpus = load_corpus(config);
  std::vector<EntryReport> reports;
  for (const auto& entry : corpus) {
    reports.push_back(verify_entry(entry, opts));
    const auto& r = reports.back();
    std::cout << r.label << ": ";
    if (r.error_code) {
      std::cout << "error " << r.error_message << "\n";
      continue;
    }
    std::cout << "N=" << r.precision << " e=" << r.e << " f=" << r.f << " t=" << r.t << " w=" << r.w;
    for (const auto& c : r.checks) std::cout << " " << c.name.substr(0, 2) << "=" << to_string(c.status);
    if (!r.expected_match) std::cout << " (invariants differ from expected)";
    std::cout << "\n";
  }
  std::ofstream os(out);
  if (!os) throw Error(ErrorCode::ConfigError, "cannot write " + out);
  os << report_to_json(reports).dump(2) << "\n";
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const EntryReport& r) { return r.passed(); });
  std::cout << "report written to " << out << (ok ? "; all checks pass\n" : "; some checks failed\n");
  return ok ? 0 : 1;
}

int run_h1(TowerSpec spec, int level, std::optional<int> precision, const VerifyOptions& opts) {
  VerifyOptions o = opts;
  o.max_level = std::max(level, 2);
  const int n = precision ? *precision : choose_precision(spec, o);
  auto g = GaloisGroup::compute(LocalField::build(spec, 8));
  const int s = default_margin(*g);
  g = GaloisGroup::compute(LocalField::build(spec, n + s));
  const auto m = UnitQuotientModule::build(g, level, n);
  const auto h = CohomologyGroup::compute(m->module());
  const auto deep = UnitQuotientModule::build(g, level, n + s);
  const auto hd = CohomologyGroup::compute(deep->module());
  const IntMatrix ind = induced_map(natural_map(*deep, *m), *hd, *h);
  std::vector<IntVector> cols;
  for (std::size_t c = 0; c < ind.cols(); ++c) cols.push_back(ind.column(c));
  const FgSubgroup image(h->presentation(), cols);

  const auto m0 = UnitQuotientModule::build(g, 0, n);
  const auto h0 = CohomologyGroup::compute(m0->module());
  const CohomologyClass f = h0->class_of(fundamental_cocycle(*m0));

  const LocalField& L = g->field();
  std::cout << "field: p=" << L.prime().get_str() << " e=" << L.ramification_index() << " f=" << L.residue_degree()
            << " t=" << g->tame_index() << " w=" << g->wild_index() << " breaks=[";
  const auto br = g->breaks();
  for (std::size_t i = 0; i < br.size(); ++i) std::cout << (i ? ", " : "") << br[i];
  std::cout << "]\n";
  std::cout << "H^1(G, U^" << level << "/U^" << n << ") invariant factors: " << join(h->invariant_factors()) << "\n";
  std::cout << "image from U^" << level << "/U^" << n + s << " invariant factors: " << join(image.invariant_factors())
            << "\n";
  std::cout << "order of [f] in H^1(G, U^0/U^" << n << "): " << f.order().get_str() << "\n";
  if (level > 0) {
    const IntMatrix to0 = induced_map(natural_map(*deep, *m0), *hd, *h0);
    std::vector<IntVector> c0;
    for (std::size_t c = 0; c < to0.cols(); ++c) c0.push_back(to0.column(c));
    const FgSubgroup in0(h0->presentation(), c0);
    Int k = 1;
    while (!in0.contains((f * k).coords())) ++k;
    std::cout << "image in H^1(G, U^0/U^" << n << "): order " << in0.order().get_str() << ", smallest power of [f] in it: "
              << k.get_str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of principal unit filtrations of local fields"};
  app.require_subcommand(1);
  VerifyOptions opts;

  auto* verify = app.add_subcommand("verify", "Run the theorem checks over a corpus and write a JSON report");
  std::string config, out;
  std::optional<int> precision;
  verify->add_option("--config", config, "Corpus file (JSON)")->required();
  verify->add_option("--out", out, "Report path")->required();
  verify->add_option("--precision", precision, "Fix N instead of searching for it");
  verify->add_option("--max-level", opts.max_level, "Highest filtration level i")->check(CLI::Range(2, 12));
  verify->add_option("--brute-force-budget", opts.brute_force_budget, "Enumeration limit for the oracle");
  verify->add_option("--seed", opts.seed, "Seed for the random unit multipliers");

  auto* h1 = app.add_subcommand("h1", "H^1(G, U^i/U^N) for a single field");
  std::int64_t p = 0;
  std::vector<std::string> eisenstein;
  std::string unramified;
  int level = 0;
  std::optional<int> h1_precision;
  h1->add_option("--p", p, "Prime")->required();
  h1->add_option("--eisenstein", eisenstein, "Eisenstein polynomial, lowest degree first (repeat for a tower)")
      ->allow_extra_args(false);
  h1->add_option("--unramified", unramified, "Residue polynomial over F_p, lowest degree first");
  h1->add_option("--level", level, "Filtration level i")->required()->check(CLI::NonNegativeNumber);
  h1->add_option("--precision", h1_precision, "N");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      opts.precision = precision;
      return run_verify(config, out, opts);
    }
    TowerSpec spec;
    spec.p = p;
    if (!unramified.empty())
      for (const auto& c : parse_poly(unramified)) spec.unramified_poly.push_back(c.at(0));
    for (const auto& e : eisenstein) spec.eisenstein_polys.push_back(parse_poly(e));
    return run_h1(spec, level, h1_precision, opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
