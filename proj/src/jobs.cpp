#include "conductor/jobs.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "conductor/kodaira.hpp"
#include "conductor/tame.hpp"

namespace conductor::jobs {

namespace {

using Provenance = std::vector<std::string>;

struct Outcome {
  json result;
  Provenance provenance;
};

[[noreturn]] void schema(const std::string& msg) {
  throw Error(ErrorCode::kSchemaError, msg);
}

void only_keys(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) schema("/: expected an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.contains(key)) schema("/" + key + ": unexpected key");
  }
}

long get_long(const json& j, const char* key) {
  if (!j.contains(key)) schema(std::string("/") + key + ": required key missing");
  if (!j.at(key).is_number_integer()) {
    schema(std::string("/") + key + ": expected an integer");
  }
  return j.at(key).get<long>();
}

json rationals(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(io::write(x));
  return out;
}

json longs(const std::vector<long>& v) { return json(v); }

// ---- graph-based kinds ----------------------------------------------------

struct SpectralRequest {
  std::optional<Rational> mu;
  long components = 1;
};

SpectralRequest read_spectral(const json& payload) {
  SpectralRequest req;
  if (payload.is_object() && payload.contains("spectral")) {
    const auto& s = payload.at("spectral");
    only_keys(s, {"mu", "components"});
    if (!s.contains("mu")) schema("/spectral/mu: required key missing");
    req.mu = io::read_rational(s.at("mu"), "/spectral/mu");
    if (s.contains("components")) req.components = get_long(s, "components");
  }
  return req;
}

Outcome run_graph(const json& payload) {
  const auto g = io::read_graph(payload);
  const auto diags = dualgraph::validate(g);
  json result{{"valid", diags.empty()}, {"diagnostics", io::write(diags)}};
  if (diags.empty()) {
    result["invariants"] = io::write(dualgraph::invariants(g), g);
  }
  return {result,
          {"E_i^2 = -(1/n_i) sum_j n_j E_i.E_j",
           "b1 = 1 - V + E",
           "chi(generic) = sum n_i (2 - 2 g_i - deg_i), g = 1 - chi(generic)/2",
           "chi(special) = sum (2 - 2 g_i) - E",
           "R = (1/3) sum_edges (n^2 + n'^2 + gcd(n,n')^2)/(n n')",
           "u = g - a - t, Art_tame = chi(generic) - chi(special) = -2u - E"}};
}

Outcome run_ctame(const json& payload) {
  const auto g = io::read_graph(payload, {"spectral"});
  const auto spectral = read_spectral(payload);
  const auto inv = dualgraph::invariants(g);
  const auto c = tame::c_tame(g);
  const auto d = tame::diagnostics(g, spectral.mu, spectral.components);
  json result{{"c_tame", io::write(c)},
              {"u", inv.u},
              {"E", inv.E},
              {"R", io::write(inv.R)},
              {"r_minus_e", io::write(d.r_minus_e)},
              {"mult_reduction_possible", d.mult_reduction_possible}};
  Provenance prov{"c_tame = -(Art_tame + R)/4", "c_tame = u/2 - (R - E)/4",
                  "R = E is necessary for potentially multiplicative reduction"};
  if (d.spectral_ok) {
    result["spectral_ok"] = *d.spectral_ok;
    result["spectral_bound"] = io::write(*d.spectral_bound);
    prov.push_back("mu < sum_nodes (weight - 3) + 3 (t + n - 1)");
  }
  if (d.negative_conductor_warning) {
    result["warnings"] = json::array({"c_tame is negative"});
  }
  return {result, prov};
}

Outcome run_pipeline(const json& payload) {
  const auto g = io::read_graph(payload);
  const auto t = tame::pipeline_cor_main(g);
  json result{{"gamma_term", io::write(t.gamma_sq_over_e)},
              {"art_prime_over_e", io::write(t.art_prime_over_e)},
              {"art_base", t.art_base},
              {"c_result", io::write(t.c_result)},
              {"c_tame_closed_form", io::write(tame::c_tame(g))}};
  return {result,
          {"gamma term = 2 sum_{i<j} E_i.E_j - sum E_i^2 - 2 sum chi(E_i) + 2 chi(generic)",
           "Art'/e = -sum_{i<j} E_i.E_j gcd(n_i,n_j)^2/(n_i n_j)",
           "-12 c = gamma term - Art'/e + Art_tame",
           "checked against c_tame = -(Art_tame + R)/4"}};
}

Outcome run_kodaira(const json& payload) {
  only_keys(payload, {"type"});
  if (!payload.contains("type") || !payload.at("type").is_string()) {
    schema("/type: expected a Kodaira label string");
  }
  const auto label = payload.at("type").get<std::string>();
  const auto g = dualgraph::kodaira_catalog(label);
  const auto inv = dualgraph::invariants(g);
  json result{{"type", label},
              {"graph", io::write(g)},
              {"c_tame", io::write(tame::c_tame(g))},
              {"r_minus_e", io::write(inv.R - Rational(inv.E))}};
  return {result, {"minimal sncd model of the Kodaira fibre type",
                   "c_tame = -(Art_tame + R)/4"}};
}

// ---- singularities -------------------------------------------------------

Outcome run_quotsing_tame(const json& payload) {
  only_keys(payload, {"e", "r"});
  const auto q = singularity::tame_cyclic(get_long(payload, "e"),
                                          get_long(payload, "r"));
  json result{{"e", q.hj.e},
              {"r", q.hj.r},
              {"terms", longs(q.hj.terms)},
              {"remainders", longs(q.hj.remainders)},
              {"mu", io::write(q.mu_closed)},
              {"mu_tilde", io::write(q.mu_tilde)},
              {"mu_solver", io::write(q.mu_solver)},
              {"gamma_coeffs", rationals(q.gamma_coeffs)}};
  return {result,
          {"e/r = a_1 - 1/(a_2 - ... - 1/a_l)",
           "mu = 3l - (1/[a_1..a_l] + sum a_i + 1/[a_l..a_1]) + 2(1 - 1/e)",
           "mu~ = mu - 2(1 - 1/e)",
           "adjunction: Gamma.E_i = 2g_i - 2 - E_i^2, mu = Gamma^2 + V"}};
}

singularity::PConvention read_convention(const json& payload) {
  if (!payload.contains("convention")) return singularity::PConvention::kStandard;
  const auto& c = payload.at("convention");
  if (c == "standard") return singularity::PConvention::kStandard;
  if (c == "unit-start") return singularity::PConvention::kUnitStart;
  schema("/convention: expected \"standard\" or \"unit-start\"");
}

Outcome run_quotsing_wild(const json& payload) {
  if (payload.is_object() && payload.contains("e_p")) {
    only_keys(payload, {"e_p", "sw"});
    const auto mu = singularity::weak_wild_milnor(get_long(payload, "e_p"),
                                                  get_long(payload, "sw"));
    return {{{"mu", io::write(mu)}}, {"mu = 4 (1 - 1/e_P + sw/e_P)"}};
  }
  only_keys(payload, {"p", "s", "r1", "r_minus1", "convention"});
  const long p = get_long(payload, "p");
  const long s = get_long(payload, "s");
  const bool has_r1 = payload.contains("r1");
  const bool has_rm = payload.contains("r_minus1");
  if (has_r1 != has_rm) schema("/: give both r1 and r_minus1 or neither");
  if (!has_r1) {
    json probes = json::array();
    for (const auto& pr : singularity::chart_discovery(p, s)) {
      json row{{"r1", pr.r1},
               {"r_minus1", pr.r_minus1},
               {"node_self_intersection", io::write(pr.node_self_intersection)},
               {"realizable", pr.realizable}};
      if (pr.realizable) {
        row["coefficients_match"] = pr.coefficients_match;
        row["mu_solver"] = io::write(pr.mu_solver);
        row["mu_matches_target"] = pr.mu_matches_target;
      }
      probes.push_back(row);
    }
    const Rational target = Rational(4 * s) * (Rational(1) - Rational(1, p));
    return {{{"p", p}, {"s", s}, {"mu_target", io::write(target)},
             {"probes", probes}},
            {"exploratory search over residue pairs; no pairing is asserted",
             "mu target = 4 s (1 - 1/p)"}};
  }
  const auto c = singularity::p_cyclic_wild_chart(
      p, s, get_long(payload, "r1"), get_long(payload, "r_minus1"),
      read_convention(payload));
  json result{{"p", c.p},
              {"s", c.s},
              {"alpha", c.alpha},
              {"lambda", c.lambda},
              {"positive_terms", longs(c.positive.terms)},
              {"negative_terms", longs(c.negative.terms)},
              {"k_positive", rationals(c.k_positive)},
              {"k_negative", rationals(c.k_negative)},
              {"y", rationals(c.y)},
              {"mu_target", io::write(c.mu_target)},
              {"sw", c.sw_jump}};
  if (c.implied_node_self_intersection) {
    result["implied_node_self_intersection"] =
        io::write(*c.implied_node_self_intersection);
  }
  return {result,
          {"alpha = p s, lambda = p (1 - alpha) + 2 alpha",
           "x_i = (p P_i + lambda r_i)/p^2, k_i = x_i - 1",
           "y_j = ((alpha - j + 1)/alpha) k_0",
           "mu target = 4 s (1 - 1/p), sw = (s - 1)(p - 1)"}};
}

Outcome run_quotsing_resolve(const json& payload) {
  const auto d = io::read_resolution(payload);
  const auto disc = singularity::discrepancy_solve(d);
  const auto mn = singularity::milnor_nu(d);
  json result{{"coeffs", rationals(disc.coeffs)},
              {"gamma_sq", io::write(disc.gamma_sq)},
              {"mu", io::write(mn.mu)},
              {"nu", io::write(mn.nu)},
              {"b1", mn.b1},
              {"V", mn.V}};
  return {result,
          {"Gamma.E_i = 2 g_i - 2 - E_i^2",
           "mu = 12 p_g + Gamma^2 - sum 2 g_i - b1 + V",
           "nu = Gamma^2 - sum 2 g_i - b1 + V"}};
}

// ---- ramification and covers ----------------------------------------------

Outcome run_ramification(const json& payload) {
  const auto in = io::read_ramification(payload);
  const auto ext = ramification::swan_extension(in.filtration);
  json result{{"sw", ext.sw}, {"different_exponent", ext.different_exponent}};
  Provenance prov{"sw = sum_{i>=1} (|G_i| - 1)", "different exponent = e - 1 + sw"};
  if (in.rep) {
    const auto sa = ramification::swan_artin_rep(in.filtration, *in.rep);
    result["swan"] = io::write(sa.swan);
    result["artin"] = io::write(sa.artin);
    prov.push_back("Sw(V) = sum_{i>=1} (|G_i|/|G_0|) dim(V/V^{G_i})");
    prov.push_back("Art(V) = dim V - dim V^{G_0} + Sw(V)");
  }
  return {result, prov};
}

Provenance term_provenance(const cover::ConductorReport& rep) {
  Provenance prov;
  for (const auto& t : rep.terms) prov.push_back(t.name + ": " + t.formula);
  return prov;
}

Outcome run_bcc_tame_good(const json& payload) {
  const auto data = io::read_tame_cover(payload);
  const auto rep = cover::bcc_tame_good(data);
  auto prov = term_provenance(rep);
  prov.insert(prov.begin(), "2g - 2 = e (2 g_bar - 2) + sum m_d (e - d)");
  return {io::write(rep), prov};
}

Outcome run_bcc_wild_weak(const json& payload) {
  const auto data = io::read_wild_cover(payload);
  const auto rep = cover::bcc_wild_weak(data);
  json result = io::write(rep);
  auto prov = term_provenance(rep);
  prov.insert(prov.begin(),
              "2g - 2 = p^r (2 g_bar - 2) + sum m_i (2 p^r - 2 p^i)");
  if (data.ordinary) {
    const auto ds = cover::ds_validate(data);
    result["deuring_shafarevich"] = {{"diagnostics", io::write(ds.diagnostics)},
                                     {"ordinary", ds.ordinary}};
    prov.push_back(
        "gamma - 1 = |G| (gamma_bar - 1) + sum (|G| - |O_i|)");
  }
  return {result, prov};
}

Outcome run_bcc_eval(const json& payload) {
  if (!payload.is_object() || !payload.contains("variant")) {
    schema("/variant: required key missing");
  }
  if (payload.at("variant") == "elliptic-nu-p3") {
    only_keys(payload, {"variant", "c_tame"});
    if (!payload.contains("c_tame")) schema("/c_tame: required key missing");
    const auto nu =
        cover::elliptic_nu_p3(io::read_rational(payload.at("c_tame"), "/c_tame"));
    return {{{"nu", io::write(nu)}}, {"nu_Q = 12 c_tame - 2"}};
  }
  only_keys(payload, {"variant", "terms"});
  const long variant = get_long(payload, "variant");
  if (variant < 1 || variant > 3) schema("/variant: expected 1, 2 or 3");
  if (!payload.contains("terms") || !payload.at("terms").is_object()) {
    schema("/terms: expected an object");
  }
  std::map<std::string, Rational> terms;
  for (const auto& [key, value] : payload.at("terms").items()) {
    terms[key] = io::read_rational(value, "/terms/" + key);
  }
  const auto c = cover::bcc_formula_eval(static_cast<int>(variant), terms);
  static const std::map<long, std::string> formulas{
      {1, "-12 c = (1/e)(Gamma^2 + 2 Gamma.omega - Art' + e Art)"},
      {2, "-12 c = (2/e)(Gamma^2 + Gamma.omega - Art') + Art - nu"},
      {3, "-12 c = (2/e) Gamma.omega + Art - mu"}};
  return {{{"variant", variant}, {"c", io::write(c)}}, {formulas.at(variant)}};
}

// ---- dispatch ---------------------------------------------------------------

struct Kind {
  std::function<void(const json&)> check;
  std::function<Outcome(const json&)> run;
};

const std::map<std::string, Kind>& registry() {
  static const std::map<std::string, Kind> kinds{
      {"graph", {[](const json& p) { io::read_graph(p); }, run_graph}},
      {"ctame",
       {[](const json& p) {
          io::read_graph(p, {"spectral"});
          read_spectral(p);
        },
        run_ctame}},
      {"pipeline", {[](const json& p) { io::read_graph(p); }, run_pipeline}},
      {"kodaira",
       {[](const json& p) {
          only_keys(p, {"type"});
          if (!p.contains("type") || !p.at("type").is_string()) {
            schema("/type: expected a Kodaira label string");
          }
        },
        run_kodaira}},
      {"quotsing-tame",
       {[](const json& p) {
          only_keys(p, {"e", "r"});
          get_long(p, "e");
          get_long(p, "r");
        },
        run_quotsing_tame}},
      {"quotsing-wild",
       {[](const json& p) {
          if (!p.is_object()) schema("/: expected an object");
          if (p.contains("e_p")) {
            only_keys(p, {"e_p", "sw"});
            get_long(p, "e_p");
            get_long(p, "sw");
            return;
          }
          only_keys(p, {"p", "s", "r1", "r_minus1", "convention"});
          get_long(p, "p");
          get_long(p, "s");
          if (p.contains("r1")) get_long(p, "r1");
          if (p.contains("r_minus1")) get_long(p, "r_minus1");
          read_convention(p);
        },
        run_quotsing_wild}},
      {"quotsing-resolve",
       {[](const json& p) { io::read_resolution(p); }, run_quotsing_resolve}},
      {"ramification",
       {[](const json& p) { io::read_ramification(p); }, run_ramification}},
      {"bcc-tame-good",
       {[](const json& p) { io::read_tame_cover(p); }, run_bcc_tame_good}},
      {"bcc-wild-weak",
       {[](const json& p) { io::read_wild_cover(p); }, run_bcc_wild_weak}},
      {"bcc-eval",
       {[](const json& p) {
          if (!p.is_object() || !p.contains("variant")) {
            schema("/variant: required key missing");
          }
          if (p.at("variant") == "elliptic-nu-p3") {
            only_keys(p, {"variant", "c_tame"});
            if (!p.contains("c_tame")) schema("/c_tame: required key missing");
            io::read_rational(p.at("c_tame"), "/c_tame");
            return;
          }
          only_keys(p, {"variant", "terms"});
          const long v = get_long(p, "variant");
          if (v < 1 || v > 3) schema("/variant: expected 1, 2 or 3");
          if (!p.contains("terms") || !p.at("terms").is_object()) {
            schema("/terms: expected an object");
          }
          for (const auto& [key, value] : p.at("terms").items()) {
            io::read_rational(value, "/terms/" + key);
          }
        },
        run_bcc_eval}},
  };
  return kinds;
}

json error_entry(const Job& job, ErrorCode code, const std::string& message) {
  return {{"label", job.label},
          {"kind", job.kind},
          {"status", "error"},
          {"error", {{"code", std::string(error_code_name(code))},
                     {"message", message}}},
          {"provenance", json::array()}};
}

std::optional<json> precheck(const Job& job) {
  try {
    check_payload(job);
  } catch (const Error& err) {
    return error_entry(job, err.code(), err.what());
  }
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& known_kinds() {
  static const std::vector<std::string> kinds = [] {
    std::vector<std::string> out;
    for (const auto& [name, kind] : registry()) out.push_back(name);
    return out;
  }();
  return kinds;
}

JobFile read_job_file(const json& doc) {
  auto bad = [](const std::string& msg) {
    throw Error(ErrorCode::kParseError, "job file: " + msg);
  };
  if (!doc.is_object()) bad("expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "version" && key != "jobs") bad("unexpected key '" + key + "'");
  }
  if (!doc.contains("version") || !doc.at("version").is_string()) {
    bad("\"version\" must be a string");
  }
  JobFile file;
  file.version = doc.at("version").get<std::string>();
  if (file.version != "1") bad("unsupported version '" + file.version + "'");
  if (!doc.contains("jobs") || !doc.at("jobs").is_array()) {
    bad("\"jobs\" must be an array");
  }
  const auto& jobs = doc.at("jobs");
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& j = jobs[i];
    const std::string where = "jobs[" + std::to_string(i) + "]";
    if (!j.is_object()) bad(where + " must be an object");
    for (const auto& [key, value] : j.items()) {
      if (key != "kind" && key != "payload" && key != "label") {
        bad(where + ": unexpected key '" + key + "'");
      }
    }
    if (!j.contains("kind") || !j.at("kind").is_string()) {
      bad(where + ": \"kind\" must be a string");
    }
    Job job;
    job.kind = j.at("kind").get<std::string>();
    job.payload = j.contains("payload") ? j.at("payload") : json::object();
    if (j.contains("label")) {
      if (!j.at("label").is_string()) bad(where + ": \"label\" must be a string");
      job.label = j.at("label").get<std::string>();
    } else {
      job.label = job.kind + "#" + std::to_string(i);
    }
    file.jobs.push_back(std::move(job));
  }
  return file;
}

void check_payload(const Job& job) {
  const auto it = registry().find(job.kind);
  if (it == registry().end()) {
    throw Error(ErrorCode::kSchemaError, "unknown job kind '" + job.kind + "'");
  }
  it->second.check(job.payload);
}

json run(const Job& job) {
  try {
    check_payload(job);
    auto outcome = registry().at(job.kind).run(job.payload);
    return {{"label", job.label},
            {"kind", job.kind},
            {"status", "ok"},
            {"result", std::move(outcome.result)},
            {"provenance", outcome.provenance}};
  } catch (const Error& err) {
    return error_entry(job, err.code(), err.what());
  } catch (const std::exception& err) {
    return error_entry(job, ErrorCode::kInternal, err.what());
  }
}

json batch(const JobFile& file, bool parallel, unsigned threads) {
  const std::size_t n = file.jobs.size();
  std::vector<json> entries(n);
  std::vector<bool> pending(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (auto err = precheck(file.jobs[i])) {
      entries[i] = std::move(*err);
    } else {
      pending[i] = true;
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      if (pending[i]) entries[i] = run(file.jobs[i]);
    }
  };
  if (parallel && n > 1) {
    unsigned count = threads != 0 ? threads : std::thread::hardware_concurrency();
    count = std::max(1u, std::min<unsigned>(count, static_cast<unsigned>(n)));
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  } else {
    worker();
  }

  json warnings = json::array();
  std::map<std::string, std::size_t> seen;
  for (const auto& job : file.jobs) ++seen[job.label];
  for (const auto& [label, count] : seen) {
    if (count > 1) {
      warnings.push_back("duplicate label '" + label + "' used by " +
                         std::to_string(count) + " jobs");
    }
  }
  json report{{"version", file.version}, {"entries", json::array()}};
  std::size_t errors = 0;
  for (auto& e : entries) {
    if (e.at("status") == "error") ++errors;
    report["entries"].push_back(std::move(e));
  }
  report["summary"] = {{"total", n},
                       {"ok", n - errors},
                       {"errors", errors},
                       {"warnings", warnings}};
  return report;
}

std::size_t error_count(const json& report) {
  std::size_t errors = 0;
  for (const auto& e : report.at("entries")) {
    if (e.at("status") == "error") ++errors;
  }
  return errors;
}

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string render_table(const json& report) {
  std::ostringstream out;
  for (const auto& e : report.at("entries")) {
    out << e.at("label").get<std::string>() << "  [" << e.at("kind").get<std::string>()
        << "]  " << e.at("status").get<std::string>() << "\n";
    if (e.at("status") == "error") {
      out << "    " << e.at("error").at("code").get<std::string>() << ": "
          << e.at("error").at("message").get<std::string>() << "\n";
      continue;
    }
    for (const auto& [key, value] : e.at("result").items()) {
      if (value.is_primitive()) {
        out << "    " << key << " = " << scalar(value) << "\n";
      } else if (value.is_array() && !value.empty() && value.front().is_primitive()) {
        out << "    " << key << " = [";
        for (std::size_t i = 0; i < value.size(); ++i) {
          out << (i ? ", " : "") << scalar(value[i]);
        }
        out << "]\n";
      }
    }
  }
  const auto& s = report.at("summary");
  out << "total " << s.at("total").get<std::size_t>() << ", ok "
      << s.at("ok").get<std::size_t>() << ", errors "
      << s.at("errors").get<std::size_t>() << "\n";
  for (const auto& w : s.at("warnings")) out << "warning: " << w.get<std::string>() << "\n";
  return out.str();
}

}  // namespace conductor::jobs
