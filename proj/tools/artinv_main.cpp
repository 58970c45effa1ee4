// Command-line front end: deterministic JSON (or text) output for every
// module.  Exit codes: 0 success, 2 invalid input, 3 violated internal
// assertion (a structural statement failed to verify).

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "artinv/checks.hpp"

using json = nlohmann::ordered_json;
using namespace artinv;

namespace {

json elem_json(FieldRef f, uint64_t v) {
  uint64_t dg[64];
  f->decode(v, dg);
  json a = json::array();
  for (int i = 0; i < f->n; ++i) a.push_back(dg[i]);
  return a;
}

json point_json(const ProjPoint& p) {
  if (p.inf) return "inf";
  return elem_json(p.f, p.v);
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (auto c : p.c) a.push_back(elem_json(p.f, c));
  return a;
}

json mat_json(const Mat& m) {
  return json::array({json::array({elem_json(m.f, m.a), elem_json(m.f, m.b)}),
                      json::array({elem_json(m.f, m.c), elem_json(m.f, m.d)})});
}

ProjPoint parse_tau(FieldRef f, const std::string& s) {
  if (s == "inf") return pp_inf(f);
  return pp_fin(f, elem_from_string(f, s));
}

std::vector<uint64_t> parse_elem_list(FieldRef f, const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error("bad list encoding: " + s);
  std::string body = s.substr(1, s.size() - 2);
  std::vector<uint64_t> out;
  std::string cur;
  int depth = 0;
  for (char ch : body) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(elem_from_string(f, cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(elem_from_string(f, cur));
  return out;
}

json artin_json(const ArtinResult& r) {
  json out;
  out["regular"] = r.regular;
  if (r.regular) {
    out["class_rep"] = mat_json(r.cls.rep);
    out["class_size"] = r.cls.size();
  }
  return out;
}

void emit(const json& j, bool text) {
  if (text)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact quotient maps and Artin invariants for subgroups of PGL2(F_q)"};
  app.require_subcommand(1);
  std::string qstr, group, groupH, groupG, taustr, matstr, method = "both";
  std::string numstr, denstr, coeffstr, basisstr, pointstr, format = "json";
  uint64_t Pval = 0, qmax = 0, pflag = 0, nflag = 1;

  auto add_q = [&](CLI::App* sub) {
    sub->add_option("--q", qstr, "field order, p or p^n");
    sub->add_option("--p", pflag, "characteristic (alternative to --q)");
    sub->add_option("--n", nflag, "extension degree (with --p)");
    sub->add_option("--format", format, "json or text");
  };
  auto the_field = [&]() -> FieldRef {
    if (!qstr.empty()) return parse_field(qstr);
    if (pflag) return make_field(pflag, static_cast<int>(nflag));
    throw Error("a field is required: --q p^n, or --p with optional --n");
  };

  auto* c_field = app.add_subcommand("field-info", "canonical field data");
  add_q(c_field);

  auto* c_inv = app.add_subcommand("inv", "Artin invariant of tau");
  add_q(c_inv);
  c_inv->add_option("--group", group, "group spec")->required();
  c_inv->add_option("--tau", taustr, "element, [c0,c1,...] or inf")
      ->required();
  c_inv->add_option("--method", method, "general | formula | both");

  auto* c_sym = app.add_subcommand("symbol", "tripartite symbol");
  add_q(c_sym);
  c_sym->add_option("--tau", taustr)->required();

  auto* c_quot = app.add_subcommand("quotient", "quotient map of a group");
  add_q(c_quot);
  c_quot->add_option("--group", group)->required();
  c_quot->add_flag("--build", "use the generic orbit construction");

  auto* c_verify = app.add_subcommand("verify-quotient", "check a map");
  add_q(c_verify);
  c_verify->add_option("--group", group)->required();
  c_verify->add_option("--num", numstr, "numerator [c0,...]")->required();
  c_verify->add_option("--den", denstr, "denominator [c0,...]")->required();

  auto* c_rel = app.add_subcommand("relate", "h with Q_G = h o Q_H");
  add_q(c_rel);
  c_rel->add_option("--groupH", groupH)->required();
  c_rel->add_option("--groupG", groupG)->required();

  auto* c_orb = app.add_subcommand("orbits", "orbit structure");
  add_q(c_orb);
  c_orb->add_option("--group", group)->required();
  c_orb->add_option("--point", pointstr, "optional point, else short orbits");

  auto* c_census = app.add_subcommand("census", "invariant counts per class");
  add_q(c_census);
  c_census->add_option("--group", group)->required();

  auto* c_split = app.add_subcommand("split", "additive splitting test");
  add_q(c_split);
  c_split->add_option("--P", Pval, "additivity base order")->required();
  c_split
      ->add_option("--coeffs", coeffstr, "support coefficients [a0,a1,...]")
      ->required();

  auto* c_rec = app.add_subcommand("reciprocity", "Q_W / Q_Y duality");
  add_q(c_rec);
  c_rec->add_option("--P", Pval, "base order (default p)");
  c_rec->add_option("--basis", basisstr, "subspace basis [e1,e2,...]")
      ->required();

  auto* c_shape =
      app.add_subcommand("factor-shape", "shape of x^q(cx+d)-(ax+b)");
  add_q(c_shape);
  c_shape->add_option("--matrix", matstr, "a,b,c,d")->required();

  auto* c_classify = app.add_subcommand("classify", "Dickson form and iota");
  add_q(c_classify);
  c_classify->add_option("--matrix", matstr)->required();

  auto* c_bij = app.add_subcommand("bijection", "iota/inv bijection table");
  add_q(c_bij);

  auto* c_check = app.add_subcommand("check", "run verification suites");
  c_check->add_option("name", group, "suite name or 'all'")->required();
  c_check->add_option("--qmax", qmax, "cap the field grids");
  c_check->add_option("--format", format, "json or text");

  CLI11_PARSE(app, argc, argv);
  bool text = format == "text";

  try {
    if (*c_field) {
      FieldRef f = the_field();
      json out;
      out["field"] = f->name();
      out["p"] = f->p;
      out["n"] = f->n;
      out["order"] = f->order;
      json mod = json::array();
      for (auto c : f->modulus) mod.push_back(c);
      out["modulus"] = mod;
      out["generator"] = elem_json(f, f->gen);
      emit(out, text);
    } else if (*c_inv) {
      FieldRef f = the_field();
      GroupSpec spec = parse_group_spec(group);
      ProjPoint tau = parse_tau(f, taustr);
      json out;
      if (method == "formula") {
        out = artin_json(closed_form(f, spec, tau));
      } else if (method == "general") {
        QuotientMap Q = named_quotient(f, spec);
        out = artin_json(inv_general(Q, tau));
      } else {
        QuotientMap Q = named_quotient(f, spec);
        ArtinResult lhs = inv_general(Q, tau);
        ArtinResult rhs = closed_form(f, spec, tau);
        out = artin_json(lhs);
        out["agree"] = lhs.same_class(rhs);
        if (!lhs.same_class(rhs))
          throw CheckFail("engine and closed form disagree");
      }
      emit(out, text);
    } else if (*c_sym) {
      FieldRef f = the_field();
      uint64_t tau = elem_from_string(f, taustr);
      json out;
      out["ell"] = tripartite_symbol(f, tau);
      emit(out, text);
    } else if (*c_quot) {
      FieldRef f = the_field();
      GroupSpec spec = parse_group_spec(group);
      QuotientMap Q = c_quot->count("--build")
                          ? build_quotient(build_group(f, spec))
                          : named_quotient(f, spec);
      json out;
      out["group"] = Q.group.label;
      out["order"] = Q.group.size();
      out["num"] = poly_json(Q.map.num);
      out["den"] = poly_json(Q.map.den);
      json irr = json::array();
      for (auto& t : Q.irregular) irr.push_back(point_json(t));
      out["irregular"] = irr;
      emit(out, text);
    } else if (*c_verify) {
      FieldRef f = the_field();
      Subgroup G = build_group(f, parse_group_spec(group));
      RatFunc R = reduce(p_of(f, parse_elem_list(f, numstr)),
                         p_of(f, parse_elem_list(f, denstr)));
      VerifyResult vr = verify_quotient(G, R);
      json out;
      out["ok"] = vr.ok;
      if (!vr.ok) out["reason"] = vr.reason;
      emit(out, text);
    } else if (*c_rel) {
      FieldRef f = the_field();
      QuotientMap QH = named_quotient(f, parse_group_spec(groupH));
      QuotientMap QG = named_quotient(f, parse_group_spec(groupG));
      RatFunc h = relate(QH, QG);
      json out;
      out["num"] = poly_json(h.num);
      out["den"] = poly_json(h.den);
      out["degree"] = h.deg();
      emit(out, text);
    } else if (*c_orb) {
      FieldRef f = the_field();
      Subgroup G = build_group(f, parse_group_spec(group));
      json out;
      out["group"] = G.label;
      out["order"] = G.size();
      if (!pointstr.empty()) {
        Orbit O = orbit(G, parse_tau(f, pointstr));
        json pts = json::array();
        for (auto& p : O.points) pts.push_back(point_json(p));
        out["orbit"] = pts;
        out["multiplicity"] = O.multiplicity;
      } else {
        Orbit Oi = orbit_infinity(G);
        json pts = json::array();
        for (auto& p : Oi.points) pts.push_back(point_json(p));
        out["orbit_infinity"] = pts;
        json shorts = json::array();
        for (auto& O : short_orbits(G)) {
          json one = json::array();
          for (auto& p : O.points) one.push_back(point_json(p));
          shorts.push_back(
              json{{"points", one}, {"multiplicity", O.multiplicity}});
        }
        out["short_orbits"] = shorts;
      }
      emit(out, text);
    } else if (*c_census) {
      FieldRef f = the_field();
      QuotientMap Q = named_quotient(f, parse_group_spec(group));
      Census c = census(Q);
      json out;
      json rows = json::array();
      for (auto& [cls, n] : c.counts)
        rows.push_back(json{{"rep", mat_json(cls.rep)},
                            {"class_size", cls.size()},
                            {"count", n}});
      out["classes"] = rows;
      out["regular_count"] = c.regular_count;
      json irr = json::array();
      for (auto& t : c.irregular_taus) irr.push_back(point_json(t));
      out["irregular"] = irr;
      out["infinity_regular"] = c.infinity_regular;
      emit(out, text);
    } else if (*c_split) {
      FieldRef f = the_field();
      auto a = parse_elem_list(f, coeffstr);
      if (a.empty() || a.back() != 1)
        throw Error("coefficients must be monic");
      AdditivePoly L{f, Pval, a};
      auto M = split_test(L);
      json out;
      out["splits"] = M.has_value();
      out["oracle_agrees"] = matrix_criterion_oracle(L) == M.has_value();
      if (M) {
        json mc = json::array();
        for (auto c : M->a) mc.push_back(elem_json(f, c));
        out["M"] = mc;
      }
      emit(out, text);
    } else if (*c_rec) {
      FieldRef f = the_field();
      uint64_t P = Pval ? Pval : f->p;
      Subspace W = make_subspace(f, P, parse_elem_list(f, basisstr));
      auto [QW, QY] = reciprocity_pair(W);
      json out;
      json qw = json::array(), qy = json::array();
      for (auto c : QW.a) qw.push_back(elem_json(f, c));
      for (auto c : QY.a) qy.push_back(elem_json(f, c));
      out["qw"] = qw;
      out["qy"] = qy;
      out["P"] = P;
      out["dim_w"] = W.dim();
      emit(out, text);
    } else if (*c_shape) {
      FieldRef f = the_field();
      Mat g = mat_from_string(f, matstr);
      ShapeCheck sc = verify_factor_shape(g);
      json out;
      out["t"] = sc.predicted.t;
      out["count_t"] = sc.predicted.count_t;
      out["linear"] = sc.predicted.count_linear;
      out["kappa"] = sc.predicted.kappa;
      out["verified"] = sc.agree;
      emit(out, text);
      if (!sc.agree) throw CheckFail("factor shape mismatch");
    } else if (*c_classify) {
      FieldRef f = the_field();
      Mat g = mat_from_string(f, matstr);
      DicksonForm form = dickson_classify(g);
      json out;
      out["case"] = form.kind == DicksonForm::Case::A
                        ? "A"
                        : (form.kind == DicksonForm::Case::B ? "B" : "C");
      out["kappa"] = form.kappa();
      out["order"] = mat_order(g);
      out["iota"] = elem_json(f, iota(g));
      if (form.kind == DicksonForm::Case::C) {
        FieldRef K2 = quadratic_ext(f);
        out["zeta"] = elem_json(K2, form.param);
        out["lambda"] = elem_json(K2, form.lambda);
      } else {
        out["param"] = elem_json(f, form.param);
      }
      emit(out, text);
    } else if (*c_bij) {
      FieldRef f = the_field();
      auto rows = pgl2_bijection(f);
      json out = json::array();
      for (auto& r : rows)
        out.push_back(json{{"tau", elem_json(f, r.tau)},
                           {"class_rep", mat_json(r.rep)},
                           {"order", r.order}});
      emit(out, text);
    } else if (*c_check) {
      std::vector<CheckResult> results;
      if (group == "all")
        results = run_all_checks(qmax);
      else
        results.push_back(run_check(group, qmax));
      bool all_ok = true;
      for (auto& r : results) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "  (%.2fs)", r.seconds);
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << buf;
        if (!r.pass) std::cout << "  " << r.detail;
        std::cout << "\n";
        all_ok = all_ok && r.pass;
      }
      if (!all_ok) return 3;
    }
  } catch (const CheckFail& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
