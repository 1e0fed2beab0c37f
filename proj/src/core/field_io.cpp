#include "field.hpp"

#include "json.hpp"

namespace wqt {

namespace {

using nlohmann::json;

std::string rat_latex(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string poly_latex(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    Rat a = abs(c);
    std::string term;
    if (a != 1 || (e.q == 0 && e.t == 0)) term += rat_latex(a);
    if (e.q != 0) term += (e.q == 1) ? "q" : "q^{" + std::to_string(e.q) + "}";
    if (e.t != 0) term += (e.t == 1) ? "t" : "t^{" + std::to_string(e.t) + "}";
    if (s.empty())
      s = (sgn(c) < 0 ? "-" : "") + term;
    else
      s += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return s;
}

std::string ratfun_latex(const RatFun& f) {
  if (f.is_poly()) {
    std::string n = poly_latex(f.num());
    if (f.num().terms().size() > 1) return "\\left(" + n + "\\right)";
    return n;
  }
  return "\\frac{" + poly_latex(f.num()) + "}{" + poly_latex(f.den()) + "}";
}

std::string exp_latex(const Rat& e) {
  if (is_integer(e)) return e.get_num().get_str();
  return e.get_str();
}

std::string shift_latex(const Monomial& m, const char* var) {
  std::string s = var;
  if (sgn(m.qe) != 0) s += (m.qe == 1) ? "q" : "q^{" + exp_latex(m.qe) + "}";
  if (sgn(m.te) != 0) s += (m.te == 1) ? "t" : "t^{" + exp_latex(m.te) + "}";
  if (!m.xe.is_zero()) s += "x^{" + m.xe.str() + "}";
  return s;
}

std::string family_latex(Family f) {
  switch (f) {
    case Family::Y: return "Y";
    case Family::A: return "A";
    case Family::Splus: return "S^{+}";
    case Family::Sminus: return "S^{-}";
    case Family::Vplus: return "V^{+}";
    case Family::Vminus: return "V^{-}";
  }
  return "?";
}

json bgrad_json(const BGrad& g) { return g.str(); }

json bgrad_vec_json(const std::vector<BGrad>& v) {
  json a = json::array();
  for (const auto& g : v) a.push_back(bgrad_json(g));
  return a;
}

json monomial_json(const Monomial& m) {
  json j;
  j["q"] = m.qe.get_str();
  j["t"] = m.te.get_str();
  if (!m.xe.is_zero()) j["x"] = m.xe.str();
  return j;
}

json factor_json(const GenFactor& g) {
  json j;
  j["family"] = family_name(g.fam);
  j["index"] = g.index;
  j["qshift"] = g.shift.qe.get_str();
  j["tshift"] = g.shift.te.get_str();
  if (!g.shift.xe.is_zero()) j["xshift"] = g.shift.xe.str();
  j["sign"] = g.eps;
  return j;
}

json field_json_core(const ElementaryField& f) {
  json j;
  j["prefactor"] = f.pref.str();
  if (!f.mono.is_one()) j["monomial"] = monomial_json(f.mono);
  json fs = json::array();
  for (const auto& g : f.factors) fs.push_back(factor_json(g));
  j["factors"] = fs;
  return j;
}

}  // namespace

std::string field_to_latex(const ElementaryField& f) {
  std::string s;
  if (!f.pref.is_one()) s += ratfun_latex(f.pref) + "\\,";
  if (!f.mono.is_one()) s += shift_latex(f.mono, "") + "\\,";
  if (f.factors.empty()) return s.empty() ? "1" : s + "1";
  s += "{:}";
  for (const auto& g : f.factors) {
    s += family_latex(g.fam) + "_{" + std::to_string(g.index) + "}";
    s += "\\left(" + shift_latex(g.shift, "z") + "\\right)";
    if (g.eps < 0) s += "^{-1}";
  }
  s += "{:}";
  return s;
}

std::string field_to_json(const ElementaryField& f, const FieldAlgebra& fa) {
  json j = field_json_core(f);
  j["schema"] = "wqt/1";
  ZeroModeRecord zm = fa.zero_modes(f);
  json z;
  z["root_charge"] = bgrad_vec_json(zm.root_charge);
  z["weight_charge"] = bgrad_vec_json(zm.weight_charge);
  z["z_momentum"] = bgrad_vec_json(zm.z_momentum);
  z["q_momentum"] = bgrad_vec_json(zm.q_momentum);
  j["zero_modes"] = z;
  return j.dump(2);
}

std::string delta_terms_to_json(const std::vector<DeltaTerm>& terms) {
  json root;
  root["schema"] = "wqt/1";
  json a = json::array();
  for (const auto& dt : terms) {
    json j;
    j["support"] = monomial_json(dt.support);
    j["coeff"] = dt.coeff.str();
    if (dt.wpow != 0) j["wpow"] = dt.wpow;
    j["field"] = field_json_core(dt.field);
    a.push_back(j);
  }
  root["terms"] = a;
  return root.dump(2);
}

std::string screening_report_to_json(const ScreeningReport& rep) {
  json root;
  root["schema"] = "wqt/1";
  root["commutes"] = rep.commutes;
  json gs = json::array();
  for (const auto& grp : rep.groups) {
    json g;
    g["shape"] = field_json_core(grp.shape);
    g["total"] = grp.total.str();
    json ps = json::array();
    for (const auto& p : grp.parts) {
      json pj;
      pj["source"] = p.source;
      pj["support"] = monomial_json(p.support);
      pj["coeff"] = p.coeff.str();
      ps.push_back(pj);
    }
    g["parts"] = ps;
    gs.push_back(g);
  }
  root["groups"] = gs;
  return root.dump(2);
}

}  // namespace wqt
