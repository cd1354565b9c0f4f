#include "ramcoh/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ramcoh/brute_force.hpp"

namespace ramcoh {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------- config

namespace {

[[noreturn]] void config_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ConfigError, path + ": " + what);
}

std::int64_t get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) config_error(path, "expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::vector<long> get_int_list(const json& j, const std::string& path) {
  if (!j.is_array()) config_error(path, "expected a list of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) config_error(path, std::string("missing field \"") + key + "\"");
  return obj[key];
}

CorpusEntry parse_entry(const json& j, const std::string& path) {
  if (!j.is_object()) config_error(path, "expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "label" && key != "p" && key != "unramified_poly" && key != "eisenstein_polys" && key != "expected")
      config_error(path, "unknown field \"" + key + "\"");
  CorpusEntry e;
  const json& label = require(j, "label", path);
  if (!label.is_string()) config_error(path + ".label", "expected a string");
  e.label = label.get<std::string>();
  e.spec.p = get_int(require(j, "p", path), path + ".p");
  if (j.contains("unramified_poly") && !j["unramified_poly"].is_null())
    for (long c : get_int_list(j["unramified_poly"], path + ".unramified_poly")) e.spec.unramified_poly.push_back(c);
  if (j.contains("eisenstein_polys")) {
    const json& polys = j["eisenstein_polys"];
    const std::string pp = path + ".eisenstein_polys";
    if (!polys.is_array()) config_error(pp, "expected a list of polynomials");
    for (std::size_t k = 0; k < polys.size(); ++k) {
      const std::string kp = pp + "[" + std::to_string(k) + "]";
      if (!polys[k].is_array()) config_error(kp, "expected a coefficient list");
      std::vector<TowerCoefficient> poly;
      for (std::size_t c = 0; c < polys[k].size(); ++c) {
        const json& coeff = polys[k][c];
        const std::string cp = kp + "[" + std::to_string(c) + "]";
        if (coeff.is_array())
          poly.push_back(get_int_list(coeff, cp));
        else
          poly.push_back({static_cast<long>(get_int(coeff, cp))});
      }
      e.spec.eisenstein_polys.push_back(std::move(poly));
    }
  }
  if (j.contains("expected") && !j["expected"].is_null()) {
    const json& x = j["expected"];
    const std::string xp = path + ".expected";
    if (!x.is_object()) config_error(xp, "expected an object");
    ExpectedInvariants inv;
    inv.e = static_cast<int>(get_int(require(x, "e", xp), xp + ".e"));
    inv.f = static_cast<int>(get_int(require(x, "f", xp), xp + ".f"));
    inv.t = static_cast<int>(get_int(require(x, "t", xp), xp + ".t"));
    inv.w = static_cast<int>(get_int(require(x, "w", xp), xp + ".w"));
    for (long b : get_int_list(require(x, "breaks", xp), xp + ".breaks")) inv.breaks.push_back(static_cast<int>(b));
    e.expected = inv;
  }
  return e;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < err.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ConfigError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + err.what());
  }
  if (!doc.is_object()) config_error("<root>", "expected an object with an \"entries\" list");
  const json& entries = require(doc, "entries", "<root>");
  if (!entries.is_array()) config_error("entries", "expected a list");
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < entries.size(); ++i) out.push_back(parse_entry(entries[i], "entries[" + std::to_string(i) + "]"));
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_corpus(ss.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, path + ": " + std::string(e.what()).substr(std::string("ConfigError: ").size()));
  }
}

// ---------------------------------------------------------------- FiltrationCohomology

FiltrationCohomology::FiltrationCohomology(std::shared_ptr<const GaloisGroup> g, int precision, int margin,
                                           int max_level)
    : galois_(std::move(g)), precision_(precision), margin_(margin), max_level_(max_level) {
  for (int i = 0; i <= max_level_; ++i) {
    modules_.push_back(UnitQuotientModule::build(galois_, i, precision_));
    h1_.push_back(CohomologyGroup::compute(modules_.back()->module()));
    deep_modules_.push_back(UnitQuotientModule::build(galois_, i, precision_ + margin_));
    deep_h1_.push_back(CohomologyGroup::compute(deep_modules_.back()->module()));
  }
}

IntMatrix FiltrationCohomology::induced(int i, int j) const {
  return induced_map(natural_map(deep_module(i), module(j)), deep_cohomology(i), cohomology(j));
}

FgSubgroup FiltrationCohomology::stable_image(int i, int j) const {
  const IntMatrix m = induced(i, j);
  std::vector<IntVector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return FgSubgroup(cohomology(j).presentation(), cols);
}

CohomologyClass FiltrationCohomology::fundamental_class() const {
  return cohomology(0).class_of(fundamental_cocycle(module(0)));
}

// ---------------------------------------------------------------- checks

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::HypothesisNotMet: return "hypothesis-not-met";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "C1_units_cyclic_order_e",     "C2_level1_order_w",        "C3_theta_maps",
      "C4_residue_vanishing",        "C5_level2_generated_by_f_pt", "C6_higher_levels_coincide",
      "C7_uniformizer_independence",
  };
  return names;
}

const CheckRecord& EntryReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error(ErrorCode::ConfigError, "no check named " + name);
}

bool EntryReport::passed() const {
  if (!expected_match) return false;
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
}

namespace {

ojson int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ojson factors_json(const IntVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

IntVector expected_factors(int order) { return order > 1 ? IntVector{Int(order)} : IntVector{}; }

FgSubgroup cyclic_subgroup(const CohomologyClass& c) {
  return FgSubgroup(c.parent().presentation(), {c.coords()});
}

CheckRecord check_c1(const FiltrationCohomology& fc) {
  CheckRecord r;
  const GaloisGroup& g = fc.galois();
  const int e = g.field().ramification_index();
  const FgSubgroup img = fc.stable_image(0, 0);
  const CohomologyClass f = fc.fundamental_class();
  const bool generates = img == cyclic_subgroup(f);
  r.computed = {{"invariant_factors", factors_json(img.invariant_factors())},
                {"order_of_f", int_json(f.order())},
                {"f_generates", generates},
                {"finite_level_invariant_factors", factors_json(fc.cohomology(0).invariant_factors())}};
  r.expected = {{"invariant_factors", factors_json(expected_factors(e))}, {"order_of_f", e}, {"f_generates", true}};
  const bool ok = img.invariant_factors() == expected_factors(e) && f.order() == e && generates;
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckRecord check_c2(const FiltrationCohomology& fc) {
  CheckRecord r;
  const GaloisGroup& g = fc.galois();
  const int t = g.tame_index(), w = g.wild_index();
  const FgSubgroup own = fc.stable_image(1, 1);
  const FgSubgroup in0 = fc.stable_image(1, 0);
  const bool equals = in0 == cyclic_subgroup(fc.fundamental_class() * Int(t));
  r.computed = {{"order", int_json(own.order())},
                {"image_in_level_0_order", int_json(in0.order())},
                {"image_equals_f_power_t", equals},
                {"finite_level_invariant_factors", factors_json(fc.cohomology(1).invariant_factors())}};
  r.expected = {{"order", w}, {"image_in_level_0_order", w}, {"image_equals_f_power_t", true}, {"t", t}};
  r.status = own.order() == w && in0.order() == w && equals ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

std::int64_t multiplicative_order(std::int64_t log, std::int64_t q1) { return q1 / std::gcd(log, q1); }

CheckRecord check_c3(const GaloisGroup& g) {
  CheckRecord r;
  const FiniteGroup& grp = g.group();
  const FiniteField& k = g.field().residue_field();
  const std::int64_t q1 = k.order() - 1;
  bool all_ok = true;

  // Equal values exactly on G_{i+1}-cosets of G_i.
  auto coset_test = [&](int i) {
    const std::vector<int> gi = g.ramification_subgroup(i);
    const std::vector<int> next = g.ramification_subgroup(i + 1);
    bool injective = true, constant = true;
    for (int s : gi)
      for (int u : gi) {
        const bool same_coset = std::binary_search(next.begin(), next.end(), grp.mul(grp.inverse(s), u));
        const bool same_value = g.theta(i, s) == g.theta(i, u);
        if (same_value && !same_coset) injective = false;
        if (same_coset && !same_value) constant = false;
      }
    return std::pair{injective, constant};
  };

  const std::vector<int> g0 = g.inertia();
  std::set<ResidueElement> image;
  std::int64_t max_order = 1;
  for (int s : g0) {
    const ResidueElement v = g.theta(0, s);
    image.insert(v);
    max_order = std::max(max_order, multiplicative_order(k.discrete_log(v), q1));
  }
  const auto [inj0, const0] = coset_test(0);
  all_ok = all_ok && inj0 && const0 && max_order == g.tame_index() &&
           static_cast<int>(image.size()) == g.tame_index();

  ojson per_level = ojson::array();
  for (int i = 1; i <= std::max(g.max_break(), 0); ++i) {
    if (g.ramification_subgroup(i).size() == 1) break;
    const auto [inj, cst] = coset_test(i);
    const auto br = g.breaks();
    const bool is_break = std::find(br.begin(), br.end(), i) != br.end();
    per_level.push_back({{"i", i}, {"is_break", is_break}, {"injective", inj}, {"constant_on_cosets", cst}});
    all_ok = all_ok && inj && cst;
  }
  r.computed = {{"theta0_image_size", image.size()},
                {"theta0_image_order", max_order},
                {"theta0_injective", inj0},
                {"theta0_constant_on_cosets", const0},
                {"levels", per_level}};
  r.expected = {{"theta0_image_size", g.tame_index()},
                {"theta0_image_order", g.tame_index()},
                {"theta0_injective", true},
                {"injective_at_breaks", true},
                {"constant_on_cosets", true}};
  r.status = all_ok ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckRecord check_c4(const GaloisGroup& g) {
  CheckRecord r;
  const FiniteField& k = g.field().residue_field();
  const auto mult = CohomologyGroup::compute(residue_galois_multiplicative_module(k));
  const auto add = CohomologyGroup::compute(residue_galois_additive_module(k));
  const auto over_g = CohomologyGroup::compute(residue_multiplicative_module(g));
  r.computed = {{"gal_residue_multiplicative", factors_json(mult->invariant_factors())},
                {"gal_residue_additive", factors_json(add->invariant_factors())},
                {"G_residue_multiplicative", factors_json(over_g->invariant_factors())}};
  r.expected = {{"gal_residue_multiplicative", ojson::array()}, {"gal_residue_additive", ojson::array()}};
  r.status = mult->order() == 1 && add->order() == 1 ? CheckStatus::Pass : CheckStatus::Fail;
  if (over_g->order() != 1) r.note = "H^1(G, residue units) is nonzero; only the Gal(lambda/kappa) groups are asserted";
  return r;
}

// G_1 strictly larger than G_2; with G_1 = G_2 != 1 the level-2 statements are report-only.
bool level_two_hypothesis(const GaloisGroup& g) {
  return g.ramification_subgroup(1).size() > g.ramification_subgroup(2).size();
}

ojson brute_force_level_two(const FiltrationCohomology& fc, const FgSubgroup& engine_image,
                            std::uint64_t budget, bool& agrees) {
  ojson out;
  agrees = true;
  try {
    const BruteForceH1 m2(fc.module(2).module(), budget);
    const bool same = m2.invariant_factors() == fc.cohomology(2).invariant_factors();
    out["invariant_factors"] = factors_json(m2.invariant_factors());
    out["invariant_factors_agree"] = same;
    const BruteForceH1 deep(fc.deep_module(2).module(), budget);
    const BruteForceH1 m1(fc.module(1).module(), budget);
    const auto ids = m1.image_of(deep, natural_map(fc.deep_module(2), fc.module(1)));
    const bool same_image = Int(static_cast<unsigned long>(ids.size())) == engine_image.order();
    out["image_order"] = ids.size();
    out["image_order_agrees"] = same_image;
    agrees = same && same_image;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    out["skipped"] = e.what();
  }
  return out;
}

CheckRecord check_c5(const FiltrationCohomology& fc, const VerifyOptions& opts) {
  CheckRecord r;
  const GaloisGroup& g = fc.galois();
  const int p = static_cast<int>(g.field().prime().get_si());
  const int t = g.tame_index(), w = g.wild_index();
  const FgSubgroup img = fc.stable_image(2, 1);
  if (level_two_hypothesis(g)) {
    const FgSubgroup in0 = fc.stable_image(2, 0);
    const bool equals = in0 == cyclic_subgroup(fc.fundamental_class() * Int(p * t));
    r.computed = {{"order", int_json(img.order())},
                  {"image_in_level_0_equals_f_power_pt", equals},
                  {"finite_level_invariant_factors", factors_json(fc.cohomology(2).invariant_factors())}};
    r.expected = {{"order", w / p}, {"image_in_level_0_equals_f_power_pt", true}};
    r.status = img.order() == w / p && equals ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
  }
  r.status = CheckStatus::HypothesisNotMet;
  r.computed = {{"hypothesis", w == 1 ? "G_1 trivial" : "G_1 = G_2"},
                {"order", int_json(img.order())},
                {"finite_level_invariant_factors", factors_json(fc.cohomology(2).invariant_factors())}};
  r.expected = {{"order", w > 1 ? ojson(w / p) : ojson(nullptr)}};
  if (w > 1) {
    bool agrees = true;
    r.computed["brute_force"] = brute_force_level_two(fc, img, opts.brute_force_budget, agrees);
    if (!agrees) {
      r.status = CheckStatus::Fail;
      r.note = "brute-force oracle disagrees with the linear-algebra engine";
    } else if (img.order() != w / p) {
      r.note = "computed order differs from the w/p prediction";
    }
  }
  return r;
}

CheckRecord check_c6(const FiltrationCohomology& fc) {
  CheckRecord r;
  const GaloisGroup& g = fc.galois();
  const FgSubgroup base = fc.stable_image(2, 1);
  bool coincide = true;
  ojson orders = ojson::object();
  for (int i = 2; i <= fc.max_level(); ++i) {
    const FgSubgroup img = fc.stable_image(i, 1);
    orders[std::to_string(i)] = int_json(img.order());
    coincide = coincide && img == base;
  }
  r.computed = {{"image_orders", orders}, {"coincide", coincide}};
  r.expected = {{"coincide", true}};
  if (g.wild_index() > 1 && !level_two_hypothesis(g)) {
    r.status = CheckStatus::HypothesisNotMet;
    r.computed["hypothesis"] = "G_1 = G_2";
  } else {
    r.status = coincide ? CheckStatus::Pass : CheckStatus::Fail;
  }
  return r;
}

CheckRecord check_c7(const FiltrationCohomology& fc, const VerifyOptions& opts) {
  CheckRecord r;
  const LocalField& L = fc.galois().field();
  std::mt19937_64 rng(opts.seed);
  const CohomologyClass f = fc.fundamental_class();
  bool all_equal = true;
  ojson classes = ojson::array();
  for (int k = 0; k < opts.random_units; ++k) {
    const FieldElement u = L.random_unit(rng);
    const CohomologyClass c = fc.cohomology(0).class_of(fundamental_cocycle(fc.module(0), u));
    classes.push_back(factors_json(c.coords()));
    all_equal = all_equal && c == f;
  }
  r.computed = {{"multipliers", opts.random_units}, {"class_of_f", factors_json(f.coords())},
                {"classes", classes}, {"all_equal", all_equal}};
  r.expected = {{"all_equal", true}};
  r.status = all_equal ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

template <class F>
CheckRecord guarded(const std::string& name, int precision, F&& body) {
  CheckRecord r;
  try {
    r = body();
  } catch (const Error& e) {
    r.status = CheckStatus::Fail;
    r.note = e.what();
  }
  r.name = name;
  r.precision = precision;
  return r;
}

}  // namespace

int precision_floor(const GaloisGroup& g, int max_level) { return std::max(g.max_break(), 0) + max_level + 4; }

int default_margin(const GaloisGroup& g) {
  return 2 * (std::max(g.max_break(), 0) + 1) + g.field().ramification_index();
}

namespace {

std::shared_ptr<const GaloisGroup> probe_galois(const TowerSpec& spec) {
  for (int n = 8;; n *= 2) {
    try {
      return GaloisGroup::compute(LocalField::build(spec, n));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted || n >= 64) throw;
    }
  }
}

}  // namespace

int choose_precision(const TowerSpec& spec, const VerifyOptions& opts) {
  const auto probe = probe_galois(spec);
  const int floor = precision_floor(*probe, opts.max_level);
  const int top = floor + opts.precision_search_steps + opts.stabilization_step;
  const auto g = GaloisGroup::compute(LocalField::build(spec, top));
  std::map<std::pair<int, int>, IntVector> cache;
  auto factors = [&](int i, int n) {
    const auto key = std::pair{i, n};
    if (!cache.count(key))
      cache[key] = CohomologyGroup::compute(UnitQuotientModule::build(g, i, n)->module())->invariant_factors();
    return cache[key];
  };
  for (int n = floor; n <= floor + opts.precision_search_steps; ++n) {
    bool stable = true;
    for (int i = 0; i <= opts.max_level && stable; ++i)
      stable = factors(i, n) == factors(i, n + opts.stabilization_step);
    if (stable) return n;
  }
  throw Error(ErrorCode::NoStabilization, "H^1(U^i/U^N) did not stabilize for N in [" + std::to_string(floor) + ", " +
                                              std::to_string(floor + opts.precision_search_steps) + "]");
}

std::vector<CheckRecord> run_checks(std::shared_ptr<const GaloisGroup> g, int precision, int margin,
                                    const VerifyOptions& opts) {
  if (opts.max_level < 2)
    throw Error(ErrorCode::LevelMismatch, "max level must be at least 2, got " + std::to_string(opts.max_level));
  const FiltrationCohomology fc(g, precision, margin, opts.max_level);
  const auto& names = check_names();
  std::vector<CheckRecord> out;
  out.push_back(guarded(names[0], precision, [&] { return check_c1(fc); }));
  out.push_back(guarded(names[1], precision, [&] { return check_c2(fc); }));
  out.push_back(guarded(names[2], precision, [&] { return check_c3(*g); }));
  out.push_back(guarded(names[3], precision, [&] { return check_c4(*g); }));
  out.push_back(guarded(names[4], precision, [&] { return check_c5(fc, opts); }));
  out.push_back(guarded(names[5], precision, [&] { return check_c6(fc); }));
  out.push_back(guarded(names[6], precision, [&] { return check_c7(fc, opts); }));
  return out;
}

EntryReport verify_entry(const CorpusEntry& entry, const VerifyOptions& opts) {
  EntryReport rep;
  rep.label = entry.label;
  rep.expected = entry.expected;
  try {
    const auto probe = probe_galois(entry.spec);
    rep.e = probe->field().ramification_index();
    rep.f = probe->field().residue_degree();
    rep.t = probe->tame_index();
    rep.w = probe->wild_index();
    rep.breaks = probe->breaks();
    if (entry.expected) {
      const auto& x = *entry.expected;
      rep.expected_match = x.e == rep.e && x.f == rep.f && x.t == rep.t && x.w == rep.w && x.breaks == rep.breaks;
    }
    rep.precision = opts.precision ? *opts.precision : choose_precision(entry.spec, opts);
    rep.margin = default_margin(*probe);
    const int step = opts.stabilization_step;
    const auto g = GaloisGroup::compute(LocalField::build(entry.spec, rep.precision + rep.margin + 2 * step));
    rep.checks = run_checks(g, rep.precision, rep.margin, opts);
    const auto again = run_checks(g, rep.precision + step, rep.margin + step, opts);
    for (std::size_t c = 0; c < rep.checks.size(); ++c) {
      CheckRecord& r = rep.checks[c];
      const bool unchanged = r.status == again[c].status;
      r.stabilization = {{"precision", rep.precision + step},
                         {"margin", rep.margin + step},
                         {"status", to_string(again[c].status)},
                         {"computed", again[c].computed},
                         {"status_unchanged", unchanged}};
      if (!unchanged && r.status != CheckStatus::Fail) {
        r.status = CheckStatus::Fail;
        r.note += (r.note.empty() ? "" : "; ") + std::string("status changes at higher precision");
      }
    }
  } catch (const Error& e) {
    rep.error_code = std::string(to_string(e.code()));
    rep.error_message = e.what();
    rep.checks.clear();
    for (const auto& name : check_names()) {
      CheckRecord r;
      r.name = name;
      r.status = CheckStatus::Skipped;
      r.note = e.what();
      rep.checks.push_back(r);
    }
  }
  return rep;
}

ojson report_to_json(const std::vector<EntryReport>& reports) {
  ojson entries = ojson::array();
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.passed();
    ojson e;
    e["label"] = r.label;
    e["status"] = r.error_code ? "error" : (r.passed() ? "pass" : "fail");
    if (r.error_code) e["error"] = {{"code", *r.error_code}, {"message", r.error_message}};
    e["invariants"] = {{"e", r.e}, {"f", r.f}, {"t", r.t}, {"w", r.w}, {"breaks", r.breaks}};
    if (r.expected)
      e["expected_invariants"] = {{"e", r.expected->e}, {"f", r.expected->f}, {"t", r.expected->t},
                                  {"w", r.expected->w}, {"breaks", r.expected->breaks}};
    else
      e["expected_invariants"] = nullptr;
    e["expected_match"] = r.expected_match;
    e["precision"] = r.precision;
    e["margin"] = r.margin;
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
      ojson cj;
      cj["name"] = c.name;
      cj["status"] = to_string(c.status);
      cj["computed"] = c.computed;
      cj["expected"] = c.expected;
      cj["precision"] = c.precision;
      cj["stabilization"] = c.stabilization;
      cj["note"] = c.note;
      checks.push_back(cj);
    }
    e["checks"] = checks;
    entries.push_back(e);
  }
  ojson doc;
  doc["schema"] = 1;
  doc["entries"] = entries;
  doc["summary"] = {{"entries", reports.size()}, {"all_pass", all_pass}};
  return doc;
}

int run_corpus(const std::string& config_path, const std::string& out_path, const VerifyOptions& opts) {
  const auto corpus = load_corpus(config_path);
  std::vector<EntryReport> reports;
  for (const auto& entry : corpus) reports.push_back(verify_entry(entry, opts));
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + out_path);
  out << report_to_json(reports).dump(2) << "\n";
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const EntryReport& r) { return r.passed(); });
  return ok ? 0 : 1;
}

}  // namespace ramcoh
