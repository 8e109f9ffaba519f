#include "bohr/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bohr/functionals.hpp"
#include "bohr/harness.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"

namespace bohr {

namespace {

using ordered_json = nlohmann::ordered_json;

FamilyKind parse_family_or_throw(const std::string& name) {
  const auto kind = parse_family(name);
  if (!kind) throw std::invalid_argument("unknown family: " + name);
  return *kind;
}

std::pair<int, int> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int m = std::stoi(text);
      return {m, m};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad m range '" + text + "' (expected e.g. 3 or 1..5)");
  }
}

Cx parse_complex(const std::string& text) {
  std::string s = text;
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return Cx{std::stod(s), 0.0};
    return Cx{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad complex value '" + text + "' (expected re or re,im)");
  }
}

SampleKind parse_kind_or_throw(const std::string& name) {
  const auto kind = parse_sample_kind(name);
  if (!kind) throw std::invalid_argument("unknown sample kind: " + name);
  return *kind;
}

/// Plain-text coefficient file: one coefficient per line as `re im`
/// (imaginary part optional), index = line number - 1.
TruncatedSeries load_coefficient_file(const std::string& path,
                                      const std::optional<std::string>& tail) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coefficient file: " + path);
  std::vector<Cx> coeffs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    if (!(ls >> re)) {
      throw std::invalid_argument("coefficient file " + path + " line " +
                                  std::to_string(lineno) + ": expected `re [im]`, got '" + line +
                                  "'");
    }
    if (!(ls >> im)) im = 0.0;
    std::string extra;
    if (ls.clear(), ls >> extra) {
      throw std::invalid_argument("coefficient file " + path + " line " +
                                  std::to_string(lineno) + ": trailing token '" + extra + "'");
    }
    coeffs.emplace_back(re, im);
  }
  if (coeffs.empty()) throw std::invalid_argument("coefficient file " + path + " is empty");

  std::optional<TailEnvelope> env;
  if (tail) {
    const auto comma = tail->find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad --tail '" + *tail + "' (expected scale,ratio)");
    try {
      TailEnvelope e;
      e.scale = std::stod(tail->substr(0, comma));
      e.ratio = std::stod(tail->substr(comma + 1));
      e.base_order = static_cast<int>(coeffs.size()) - 1;
      env = e;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --tail '" + *tail + "' (expected scale,ratio)");
    }
  }
  return TruncatedSeries(std::move(coeffs), FamilyTag::raw, env);
}

void push_violation_detail(ordered_json& row, const VerificationReport& rep) {
  ordered_json detail = ordered_json::array();
  for (const Violation& v : rep.violations)
    detail.push_back({{"sample", v.sample}, {"r", v.r}, {"value", v.value}});
  row["violation_detail"] = detail;
}

}  // namespace

int cmd_tables(const TablesOptions& opt, OutputRecord& record) {
  std::vector<FamilyKind> kinds;
  if (opt.families.empty()) {
    kinds = {FamilyKind::phi, FamilyKind::psi, FamilyKind::cap_phi, FamilyKind::lambda,
             FamilyKind::cap_lambda};
  } else {
    for (const std::string& name : opt.families) kinds.push_back(parse_family_or_throw(name));
  }
  const auto [m_lo, m_hi] = parse_m_range(opt.m_range);

  record.command = "tables";
  record.parameters = {{"m_lo", m_lo}, {"m_hi", m_hi}, {"k", opt.k}};
  record.columns = {"family", "m",          "k",          "value",
                    "residual", "bracket_lo", "bracket_hi", "selection"};

  for (FamilyKind kind : kinds) {
    for (int m = m_lo; m <= m_hi; ++m) {
      RadiusFamily family{kind, m, opt.k};
      const RootCertificate cert = compute_radius(family);
      ordered_json row;
      row["family"] = family_name(kind);
      row["m"] = m;
      if (family_uses_k(kind))
        row["k"] = opt.k;
      else
        row["k"] = nullptr;
      row["value"] = cert.value;
      row["residual"] = cert.residual;
      row["bracket_lo"] = cert.bracket_lo;
      row["bracket_hi"] = cert.bracket_hi;
      row["selection"] = selection_name(cert.selection);
      record.add_row(std::move(row));
    }
  }
  return 0;
}

int cmd_verify(const VerifyOptions& opt, OutputRecord& record) {
  SampleSpec spec;
  spec.kind = parse_kind_or_throw(opt.kind);
  spec.count = opt.trials;
  spec.seed = opt.seed;
  spec.coeff_order = opt.coeff_order;
  if (opt.trials < 1) throw std::invalid_argument("verify: trials must be >= 1");

  record.command = "verify";
  record.parameters = {{"family", opt.family}, {"trials", opt.trials},
                       {"seed", opt.seed},     {"kind", sample_kind_name(spec.kind)},
                       {"r_fraction", opt.r_fraction}};
  record.columns = {"family",    "m",         "k",         "kind",      "seed",
                    "trials",    "r_fraction", "radius_used", "max_value", "tolerance",
                    "violations", "audit_failures", "runtime_seconds"};

  VerificationReport rep;
  if (opt.family == "rogosinski") {
    rep = verify_rogosinski(spec, opt.n_max);
  } else {
    RadiusFamily family{parse_family_or_throw(opt.family), opt.m, opt.k};
    rep = verify_family(family, spec, opt.r_fraction);
  }

  ordered_json row;
  row["family"] = rep.family_label;
  if (opt.family == "rogosinski") {
    row["m"] = nullptr;
    row["k"] = nullptr;
  } else {
    row["m"] = rep.m;
    row["k"] = family_uses_k(*parse_family(opt.family)) ? ordered_json(rep.k)
                                                        : ordered_json(nullptr);
  }
  row["kind"] = sample_kind_name(spec.kind);
  row["seed"] = opt.seed;
  row["trials"] = rep.trials;
  row["r_fraction"] = opt.r_fraction;
  row["radius_used"] = rep.radius_used;
  row["max_value"] = rep.max_value;
  row["tolerance"] = rep.tolerance;
  row["violations"] = static_cast<int>(rep.violations.size());
  row["audit_failures"] = static_cast<int>(rep.audit_failures.size());
  row["runtime_seconds"] = rep.runtime_seconds;
  push_violation_detail(row, rep);
  record.add_row(std::move(row));

  return rep.violations.empty() ? 0 : 1;
}

int cmd_evaluate(const EvaluateOptions& opt, OutputRecord& record) {
  if (static_cast<bool>(opt.mobius_a) == static_cast<bool>(opt.coeff_file))
    throw std::invalid_argument("evaluate: give exactly one of --mobius-a or --coeff-file");
  if (opt.mobius_a && !(*opt.mobius_a >= 0.0 && *opt.mobius_a < 1.0))
    throw std::invalid_argument("evaluate: --mobius-a must be in [0,1)");
  if (opt.order < 1) throw std::invalid_argument("evaluate: --order must be >= 1");

  const TruncatedSeries f = opt.mobius_a
                                ? mobius_coeffs(*opt.mobius_a, opt.mobius_sign, opt.order)
                                : load_coefficient_file(*opt.coeff_file, opt.tail);
  const double lambda = opt.lambda.value_or(1.0);

  record.command = "evaluate";
  record.parameters = {{"functional", opt.functional}, {"m", opt.m},     {"r", opt.r},
                       {"n", opt.n},                   {"k", opt.k},     {"lambda", lambda},
                       {"z", opt.z},                   {"sign", opt.mobius_sign}};
  if (opt.mobius_a) record.parameters["mobius_a"] = *opt.mobius_a;
  if (opt.coeff_file) record.parameters["coeff_file"] = *opt.coeff_file;
  record.columns = {"functional", "name", "value"};

  auto add = [&record, &opt](const std::string& name, ordered_json value) {
    record.add_row({{"functional", opt.functional}, {"name", name}, {"value", std::move(value)}});
  };

  if (opt.functional == "rogosinski") {
    const Cx z = parse_complex(opt.z);
    const double partial = rogosinski_partial(f, z, opt.n);
    const double bound = rogosinski_bound(opt.n);
    add("partial", partial);
    add("bound", bound);
    add("slack", bound - partial);
    return 0;
  }

  FunctionalResult res;
  if (opt.functional == "A") {
    res = functional_A(f, opt.m, opt.r);
  } else if (opt.functional == "B") {
    res = functional_B(f, opt.m, opt.r);
  } else if (opt.functional == "C") {
    res = functional_C(f, opt.m, opt.r);
  } else if (opt.functional == "D" || opt.functional == "E") {
    // Harmonic pair with g' = lambda*k*h' built over the given analytic part.
    std::vector<Cx> b(static_cast<std::size_t>(f.order()) + 1, Cx{0.0, 0.0});
    for (int i = 1; i <= f.order(); ++i) b[static_cast<std::size_t>(i)] = lambda * opt.k * f.coeff(i);
    std::optional<TailEnvelope> env = f.tail();
    if (env) env->scale *= lambda * opt.k;
    HarmonicPair pair = HarmonicPair::make(f, TruncatedSeries(std::move(b), FamilyTag::raw, env),
                                           opt.k);
    res = opt.functional == "D" ? functional_D(pair, opt.m, opt.r)
                                : functional_E(pair, opt.m, opt.r);
  } else {
    throw std::invalid_argument("unknown functional: " + opt.functional);
  }

  for (const auto& [name, v] : res.components) add(name, v);
  add("value", res.value);
  if (res.upper) add("upper", *res.upper);
  add("rigorous", res.rigorous);
  add("within_guarantee", res.within_guarantee);
  return 0;
}

int cmd_sharpness(const SharpnessOptions& opt, OutputRecord& record) {
  RadiusFamily family{parse_family_or_throw(opt.family), opt.m, opt.k};
  const std::vector<double> ladder = opt.a_ladder.empty() ? default_a_ladder() : opt.a_ladder;
  const SharpnessReport rep = probe_sharpness(family, ladder, opt.r_multiplier, opt.lambda);

  record.command = "sharpness";
  record.parameters = {{"family", rep.family_label},
                       {"m", rep.m},
                       {"k", rep.k},
                       {"lambda", rep.lambda},
                       {"r_multiplier", opt.r_multiplier}};
  record.columns = {"family", "m",     "k",   "lambda", "radius", "r",
                    "a",      "value", "gap", "regime_ok", "exceeds_one"};

  for (const SharpnessRow& row : rep.rows) {
    ordered_json j;
    j["family"] = rep.family_label;
    j["m"] = rep.m;
    j["k"] = family_uses_k(family.kind) ? ordered_json(rep.k) : ordered_json(nullptr);
    j["lambda"] = family_uses_k(family.kind) ? ordered_json(rep.lambda) : ordered_json(nullptr);
    j["radius"] = rep.radius;
    j["r"] = rep.r;
    j["a"] = row.a;
    if (std::isnan(row.value))
      j["value"] = nullptr;
    else
      j["value"] = row.value;
    j["gap"] = row.gap;
    j["regime_ok"] = row.regime_ok;
    j["exceeds_one"] = row.regime_ok && row.value > 1.0;
    record.add_row(std::move(j));
  }
  return rep.conclusive ? 0 : 3;
}

}  // namespace bohr
