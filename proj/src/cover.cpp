#include "conductor/cover.hpp"

#include <numeric>
#include <set>
#include <string>

#include "conductor/numtheory.hpp"
#include "conductor/singularity.hpp"

namespace conductor::cover {

namespace {

using std::to_string;

struct Collector {
  Diagnostics out;
  void operator()(std::string rule, std::string msg) {
    out.push_back({std::move(rule), std::move(msg)});
  }
};

constexpr long kMaxDegree = 1L << 30;

// Structural problems make the numeric checks meaningless, so rule names
// from this set stop validation before Riemann-Hurwitz is evaluated.
bool structural(const Diagnostics& diags) {
  for (const auto& d : diags) {
    if (d.rule != "RHMismatch" && d.rule != "LocalSwanTooLarge" &&
        d.rule != "FullStabilizerSwan" && d.rule != "ChiBarMismatch") {
      return true;
    }
  }
  return false;
}

void throw_on(const Diagnostics& diags) {
  if (diags.empty()) return;
  std::string msg;
  for (const auto& d : diags) msg += "[" + d.rule + "] " + d.message + "; ";
  const bool rh_only = !structural(diags) && has_rule(diags, "RHMismatch") &&
                       diags.size() == 1;
  throw Error(rh_only ? ErrorCode::kRHMismatch : ErrorCode::kInvalidCover, msg);
}

}  // namespace

long WildCoverData::degree() const {
  long e = 1;
  for (long k = 0; k < r; ++k) {
    if (e > kMaxDegree / std::max(p, 1L)) {
      throw Error(ErrorCode::kInvalidCover, "degree p^r too large");
    }
    e *= p;
  }
  return e;
}

const Term* ConductorReport::find(const std::string& name) const {
  for (const auto& t : terms) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

Diagnostics rh_validate(const TameCoverData& data) {
  Collector flag;
  if (data.e < 2) flag("BadDegree", "degree e = " + to_string(data.e) + " < 2");
  if (data.g < 0 || data.g_bar < 0) flag("NegativeGenus", "genera must be >= 0");
  for (const auto& b : data.branch) {
    if (b.count < 0) flag("NegativeCount", "negative branch count");
    if (data.e < 2) continue;
    if (b.d < 1 || data.e % b.d != 0 || b.d == data.e) {
      flag("BadOrbitType", "orbit size d = " + to_string(b.d) +
                               " must be a proper divisor of e = " +
                               to_string(data.e));
      continue;
    }
    const long eq = data.e / b.d;
    if (b.r <= 0 || b.r >= eq || std::gcd(b.r, eq) != 1) {
      flag("BadResidue", "residue r = " + to_string(b.r) +
                             " is not a unit modulo e_Q = " + to_string(eq));
    }
  }
  if (!flag.out.empty()) return flag.out;
  long rhs = data.e * (2 * data.g_bar - 2);
  for (const auto& b : data.branch) rhs += b.count * (data.e - b.d);
  if (2 * data.g - 2 != rhs) {
    flag("RHMismatch", "2g - 2 = " + to_string(2 * data.g - 2) +
                           " but Riemann-Hurwitz gives " + to_string(rhs));
  }
  return flag.out;
}

Diagnostics rh_validate(const WildCoverData& data) {
  Collector flag;
  if (!is_prime(data.p)) flag("BadPrime", to_string(data.p) + " is not prime");
  if (data.r < 1) flag("BadDegree", "r must be at least 1");
  if (data.g < 0 || data.g_bar < 0) flag("NegativeGenus", "genera must be >= 0");
  if (data.sw_ext < 0) flag("NegativeSwan", "sw of the extension is negative");
  if (!flag.out.empty()) return flag.out;
  long full = 0;
  for (const auto& b : data.branch) {
    if (b.i < 0 || b.i >= data.r) {
      flag("BadPointType", "point type " + to_string(b.i) +
                               " outside 0.." + to_string(data.r - 1));
    }
    if (b.count < 0) flag("NegativeCount", "negative branch count");
    if (static_cast<long>(b.sw_locals.size()) != b.count) {
      flag("SwanCountMismatch", "type " + to_string(b.i) + " record has " +
                                    to_string(b.count) + " points but " +
                                    to_string(b.sw_locals.size()) +
                                    " local Swan conductors");
    }
    for (long sw : b.sw_locals) {
      if (sw < 0) flag("NegativeSwan", "negative local Swan conductor");
    }
    if (b.i == 0) full += b.count;
  }
  if (full == 0) {
    flag("NoFullStabilizerPoint",
         "an elementary abelian weakly ramified action has a point with full "
         "stabilizer; none given");
  }
  if (structural(flag.out)) return flag.out;
  for (const auto& b : data.branch) {
    for (long sw : b.sw_locals) {
      if (b.i == 0 && sw != data.sw_ext) {
        flag("FullStabilizerSwan",
             "a point with full stabilizer has local Swan conductor " +
                 to_string(sw) + " but sw = " + to_string(data.sw_ext));
      } else if (b.i > 0 && sw > data.sw_ext) {
        flag("LocalSwanTooLarge", "local Swan conductor " + to_string(sw) +
                                      " exceeds sw = " + to_string(data.sw_ext));
      }
    }
  }
  if (data.chi_bar && *data.chi_bar != 2 - 2 * data.g_bar) {
    flag("ChiBarMismatch", "chi_bar = " + to_string(*data.chi_bar) +
                               " but 2 - 2 g_bar = " +
                               to_string(2 - 2 * data.g_bar));
  }
  const long e = data.degree();
  long rhs = e * (2 * data.g_bar - 2);
  for (const auto& b : data.branch) rhs += b.count * (2 * e - 2 * ipow(data.p, b.i));
  if (2 * data.g - 2 != rhs) {
    flag("RHMismatch", "2g - 2 = " + to_string(2 * data.g - 2) +
                           " but Riemann-Hurwitz gives " + to_string(rhs));
  }
  return flag.out;
}

DsReport ds_validate(const WildCoverData& data) {
  if (!data.ordinary) {
    throw Error(ErrorCode::kMissingOrdinaryData,
                "Deuring-Shafarevich check needs gamma and gamma_bar");
  }
  const auto& od = *data.ordinary;
  if (!is_prime(data.p) || data.r < 1) {
    throw Error(ErrorCode::kInvalidCover, "bad p or r");
  }
  const long e = data.degree();
  DsReport rep;
  std::vector<long> orbits;
  if (od.small_orbits) {
    orbits = *od.small_orbits;
  } else {
    for (const auto& b : data.branch) {
      for (long k = 0; k < b.count; ++k) orbits.push_back(ipow(data.p, b.i));
    }
  }
  for (long o : orbits) {
    if (o < 1 || o >= e || e % o != 0) {
      rep.diagnostics.push_back(
          {"BadOrbitSize", "orbit size " + to_string(o) +
                               " must properly divide |G| = " + to_string(e)});
    }
  }
  long rhs = e * (od.gamma_bar - 1);
  for (long o : orbits) rhs += e - o;
  if (od.gamma - 1 != rhs) {
    rep.diagnostics.push_back(
        {"DSMismatch", "gamma - 1 = " + to_string(od.gamma - 1) +
                           " but Deuring-Shafarevich gives " + to_string(rhs)});
  }
  rep.ordinary = od.gamma == data.g;
  if (rep.ordinary && rep.diagnostics.empty() &&
      has_rule(rh_validate(data), "RHMismatch")) {
    rep.diagnostics.push_back(
        {"OrdinaryNotWeaklyRamified",
         "ordinary special fibre but the weakly ramified Riemann-Hurwitz "
         "identity fails"});
  }
  return rep;
}

ConductorReport bcc_tame_good(const TameCoverData& data) {
  throw_on(rh_validate(data));
  ConductorReport rep;
  rep.u = data.g - data.g_bar;
  Rational mu_sum, mu_tilde_sum, corrected_sum;
  for (const auto& b : data.branch) {
    const long eq = data.e / b.d;
    const auto q = singularity::tame_cyclic(eq, b.r);
    const Rational m(b.count);
    mu_sum += m * q.mu_closed;
    mu_tilde_sum += m * q.mu_tilde;
    corrected_sum +=
        m * (q.mu_closed - Rational(2) * (Rational(1) - Rational(1, eq)));
  }
  const Rational half_u(rep.u, 2);
  const Rational c_mu = half_u + corrected_sum / Rational(12);
  const Rational c_tilde = half_u + mu_tilde_sum / Rational(12);
  const long chi = 2 - 2 * data.g;
  const long chi_bar = 2 - 2 * data.g_bar;
  const Rational gamma_term =
      Rational(2 * chi) * (Rational(1) - Rational(1, data.e));
  const Rational artin_term(chi - chi_bar);
  const Rational minus_12c = gamma_term + artin_term - mu_sum;
  if (c_mu != c_tilde || minus_12c != Rational(-12) * c_mu) {
    throw Error(ErrorCode::kInternal,
                "tame conductor forms disagree: " + c_mu.str() + ", " +
                    c_tilde.str() + ", " + (-minus_12c / Rational(12)).str());
  }
  rep.c_tame = c_mu;
  rep.c_total = c_mu;
  rep.terms = {
      {"u", Rational(rep.u),
       "u = g - g_bar (potential good reduction: a = g_bar, t = 0)"},
      {"mu_sum", mu_sum, "sum of Milnor numbers of the cyclic quotient points"},
      {"mu_tilde_sum", mu_tilde_sum,
       "sum of mu_Q - 2(1 - 1/e_Q) over the cyclic quotient points"},
      {"c_mu_form", c_mu, "c = u/2 + (1/12) sum (mu_Q - 2(1 - 1/e_Q))"},
      {"c_mu_tilde_form", c_tilde, "c = u/2 + (1/12) sum mu~_Q"},
      {"gamma_term", gamma_term, "2 chi (1 - 1/e)"},
      {"artin_term", artin_term, "chi - chi_bar"},
      {"minus_12c", minus_12c, "-12 c = 2 chi (1 - 1/e) + chi - chi_bar - mu"},
  };
  if (rep.c_total.sign() < 0) {
    throw Error(ErrorCode::kNegativeConductor,
                "branch data produce c = " + rep.c_total.str() + " < 0");
  }
  return rep;
}

namespace {

struct WildSums {
  Rational sw_local;   // sum sw_Q / p^(r-i)
  Rational stab_part;  // sum m_i (1 - 1/p^(r-i))
};

WildSums wild_sums(const WildCoverData& data) {
  WildSums s;
  for (const auto& b : data.branch) {
    const long stab = ipow(data.p, data.r - b.i);
    s.stab_part += Rational(b.count) * (Rational(1) - Rational(1, stab));
    for (long sw : b.sw_locals) s.sw_local += Rational(sw, stab);
  }
  return s;
}

}  // namespace

SwanCurve swan_curve_keyiden(const WildCoverData& data) {
  throw_on(rh_validate(data));
  const auto s = wild_sums(data);
  SwanCurve out;
  out.value = Rational(2) * s.sw_local -
              Rational(data.sw_ext) *
                  (Rational(data.chi_bar_value()) - Rational(2) * s.stab_part);
  if (out.value.sign() < 0) {
    throw Error(ErrorCode::kNegativeSwan,
                "Swan conductor of the curve comes out as " + out.value.str());
  }
  out.integral = out.value.is_integer();
  return out;
}

ConductorReport bcc_wild_weak(const WildCoverData& data) {
  const auto swan = swan_curve_keyiden(data);
  const auto s = wild_sums(data);
  const long e = data.degree();
  const long chi = data.chi();
  const long chi_bar = data.chi_bar_value();

  ConductorReport rep;
  rep.u = data.g - data.g_bar;
  rep.c_tame = Rational(rep.u, 2);
  rep.c_wild = swan.value / Rational(4);
  rep.c_total = rep.c_tame + rep.c_wild;

  const Rational gamma_term =
      Rational(2 * chi) * (Rational(1) - Rational(1, e)) +
      Rational(2 * chi * data.sw_ext, e);
  const Rational artin_term = Rational(chi - chi_bar) - swan.value;
  const Rational mu = Rational(4) * s.stab_part + Rational(4) * s.sw_local;
  const Rational minus_12c = gamma_term + artin_term - mu;
  if (minus_12c != Rational(-12) * rep.c_total) {
    throw Error(ErrorCode::kInternal,
                "wild assembly gives c = " + (-minus_12c / Rational(12)).str() +
                    " but u/2 + Sw/4 = " + rep.c_total.str());
  }
  rep.terms = {
      {"u", Rational(rep.u), "u = g - g_bar (potential good reduction)"},
      {"swan_curve", swan.value,
       "Sw(C) = 2 sum sw_Q/p^(r-i) - sw (chi_bar - 2 sum m_i (1 - 1/p^(r-i)))"},
      {"gamma_term", gamma_term, "2 chi (1 - 1/e) + 2 (chi/e) sw"},
      {"artin_term", artin_term, "chi - chi_bar - Sw(C)"},
      {"mu_sum", mu, "4 sum m_i (1 - 1/p^(r-i)) + 4 sum sw_Q/p^(r-i)"},
      {"minus_12c", minus_12c, "-12 c = gamma term + Artin term - mu"},
      {"c_tame", rep.c_tame, "c_tame = u/2 (R = E on the minimal resolution)"},
      {"c_wild", rep.c_wild, "c_wild = Sw(C)/4"},
  };
  if (!swan.integral) {
    rep.notes.push_back({"NonIntegralSwan",
                         "Sw(C) = " + swan.value.str() +
                             " is not an integer; input data are suspect"});
  }
  if (rep.c_total.sign() < 0) {
    throw Error(ErrorCode::kNegativeConductor,
                "cover data produce c = " + rep.c_total.str() + " < 0");
  }
  return rep;
}

std::vector<std::string> formula_terms(int variant) {
  switch (variant) {
    case 1: return {"e", "gamma_sq", "gamma_dot_omega", "art_prime", "art"};
    case 2: return {"e", "gamma_sq", "gamma_dot_omega", "art_prime", "art", "nu"};
    case 3: return {"e", "gamma_dot_omega", "art", "mu"};
    default:
      throw Error(ErrorCode::kPrecondition,
                  "formula variant must be 1, 2 or 3, got " + to_string(variant));
  }
}

Rational bcc_formula_eval(int variant,
                          const std::map<std::string, Rational>& terms) {
  static const std::set<std::string> known{
      "e", "gamma_sq", "gamma_dot_omega", "art_prime", "art", "mu", "nu"};
  for (const auto& [name, value] : terms) {
    if (!known.contains(name)) {
      throw Error(ErrorCode::kPrecondition, "unknown term '" + name + "'");
    }
  }
  const auto needed = formula_terms(variant);
  for (const auto& name : needed) {
    if (!terms.contains(name)) {
      throw Error(ErrorCode::kMissingTerm, "variant " + to_string(variant) +
                                               " needs term '" + name + "'");
    }
  }
  const auto& e = terms.at("e");
  if (e.is_zero()) throw Error(ErrorCode::kPrecondition, "e must be non-zero");
  const auto& gw = terms.at("gamma_dot_omega");
  const auto& art = terms.at("art");
  Rational minus_12c;
  switch (variant) {
    case 1:
      minus_12c = (terms.at("gamma_sq") + Rational(2) * gw -
                   terms.at("art_prime") + e * art) / e;
      break;
    case 2:
      minus_12c = Rational(2) / e *
                      (terms.at("gamma_sq") + gw - terms.at("art_prime")) +
                  art - terms.at("nu");
      break;
    default:
      minus_12c = Rational(2) / e * gw + art - terms.at("mu");
      break;
  }
  return -minus_12c / Rational(12);
}

Rational elliptic_nu_p3(const Rational& c_tame_value) {
  return Rational(12) * c_tame_value - Rational(2);
}

}  // namespace conductor::cover
