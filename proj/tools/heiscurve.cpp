// heiscurve: exact computations on Heisenberg and Fermat modular curves.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "heiscurve/curves.hpp"
#include "heiscurve/cuspidal.hpp"
#include "heiscurve/cyclotomic.hpp"
#include "heiscurve/dessin.hpp"
#include "heiscurve/heisenberg.hpp"
#include "heiscurve/homology.hpp"
#include "heiscurve/nilpotent.hpp"
#include "heiscurve/psl2.hpp"
#include "heiscurve/verify.hpp"
#include "heiscurve/words.hpp"

namespace {

using nlohmann::json;

constexpr int EXIT_USAGE = 2;
constexpr int EXIT_GUARD = 3;

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long guard_limit() {
  if (const char* env = std::getenv("HEISCURVE_GUARD"))
    return std::atoll(env);
  return 100000;
}

std::string format_out(const json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  if (format == "tsv") {
    for (auto it = j.begin(); it != j.end(); ++it)
      os << it.key() << "\t"
         << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      os << it.key() << ": "
         << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
  return os.str();
}

json curve_json(const heis::CurveData& cd) {
  json j;
  j["degree"] = cd.degree;
  j["genus"] = cd.genus;
  j["cusps"] = {{"inf", cd.cusps_inf}, {"zero", cd.cusps_zero},
                {"one", cd.cusps_one}};
  j["cusp_count"] = cd.cusp_count();
  return j;
}

json invariants_json(const heis::AbelianInvariants& inv) {
  json t = json::array();
  for (const auto& d : inv.torsion) t.push_back(d.get_str());
  return json{{"torsion", t}, {"free_rank", inv.free_rank}};
}

heis::PermAction action_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open action file: " + path);
  json j = json::parse(in);
  heis::PermAction act;
  act.degree = j.at("degree").get<std::size_t>();
  act.pi_x = j.at("pi_x").get<heis::Perm>();
  act.pi_y = j.at("pi_y").get<heis::Perm>();
  act.validate();
  return act;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of Heisenberg and Fermat modular curves"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv", "text"}));

  long long m = 0, n = 0, l = 1, bound = 12, target = 0, index = 0;
  std::string action_path, out_path, gens_spec, op = "exponent", element;
  bool quick = false, force = false, mod11 = false, with_dot = false;

  auto* c_genus = app.add_subcommand("genus", "genus and cusp data");
  c_genus->add_option("--m", m);
  c_genus->add_option("--n", n);
  c_genus->add_option("--l", l);
  c_genus->add_option("--action", action_path, "JSON permutation action file");

  auto* c_classify =
      app.add_subcommand("classify-genus", "scan (M,N,L) for a target genus");
  c_classify->add_option("--bound", bound)->required();
  c_classify->add_option("--target", target)->required();

  auto* c_hom = app.add_subcommand("homology", "invariants of S_N / R_N");
  c_hom->add_option("--n", n)->required();
  c_hom->add_flag("--force", force, "override the N^3 size guard");

  auto* c_cusp = app.add_subcommand("cuspidal", "cuspidal group of F_N");
  c_cusp->add_option("--n", n)->required();

  auto* c_cyc = app.add_subcommand("cyclotomic-checks", "Z[mu_N] identities");
  c_cyc->add_option("--n", n)->required();
  c_cyc->add_flag("--mod11", mod11);

  auto* c_dessin = app.add_subcommand("dessin", "dessin of X'_N");
  c_dessin->add_option("--n", n)->required();
  c_dessin->add_option("--out", out_path, "write DOT here");
  c_dessin->add_flag("--dot", with_dot, "print DOT instead of JSON");

  auto* c_psl2 = app.add_subcommand("psl2", "subgroups of PSL_2(Z/nZ)");
  c_psl2->add_option("--n", n)->required();
  c_psl2->add_option("--gens", gens_spec,
                     "comma list over {A,B,A^k,B^k}; empty = whole group");
  bool derived = false, phi_image = false;
  c_psl2->add_flag("--derived", derived, "derived subgroup of the closure");
  long long phi_n = 0;
  c_psl2->add_option("--phi", phi_n, "image of Phi_N mod 3");

  auto* c_cong = app.add_subcommand("congruence", "congruence refutation");
  c_cong->add_option("--n", n)->required();

  auto* c_heis = app.add_subcommand("heisenberg", "H_{M,N,L} computations");
  c_heis->add_option("--m", m)->required();
  c_heis->add_option("--n", n)->required();
  c_heis->add_option("--l", l)->required();
  c_heis->add_option("op", op,
                     "exponent | center-order | order | from-word | genus");
  c_heis->add_option("--element", element, "a,c,b for op=order");
  std::string word;
  c_heis->add_option("--word", word, "word over {A,a,B,b} for op=from-word");

  auto* c_verify = app.add_subcommand("verify", "run the acceptance checks");
  c_verify->add_flag("--quick", quick);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return EXIT_USAGE;
  }

  try {
    json out;
    if (*c_genus) {
      if (!action_path.empty()) {
        out = curve_json(heis::rh_genus(action_from_file(action_path)));
      } else {
        if (m < 1 || n < 1) throw CLI::ValidationError("genus", "--m,--n >= 1");
        out = curve_json(
            heis::rh_genus(heis::Heisenberg({m, n, l}).regular_action()));
        out["closed_form"] = heis::genus_closed_form(m, n, l).get_str();
      }
      std::cout << format_out(out, format);
    } else if (*c_classify) {
      json list = json::array();
      for (auto [mm, nn, ll] : heis::classify_small_genus(bound, target))
        list.push_back({mm, nn, ll});
      out["bound"] = bound;
      out["target"] = target;
      out["triples"] = list;
      std::cout << format_out(out, format);
    } else if (*c_hom) {
      if (!force && n * n * n > guard_limit())
        throw GuardError("N^3 exceeds guard (use --force or HEISCURVE_GUARD)");
      long long np = heis::LevelParams::for_level(n).n_prime;
      auto inv = heis::h1_invariants(n, true);
      out["N"] = n;
      out["ambient_dim"] = n * n * np;
      out["rank_S"] = n * n * np - (2 * n * np - 1);
      out["rank_R"] = n * np - 1;
      out["invariants"] = invariants_json(inv);
      out["genus_check"] =
          heis::Int(heis::genus_closed_form(n, n, np) * 2).get_str();
      std::cout << format_out(out, format);
    } else if (*c_cusp) {
      auto inv = heis::cuspidal_group(n);
      auto checks = heis::known_divisor_checks(n);
      out["N"] = n;
      out["invariants"] = invariants_json(inv);
      out["order_DA"] =
          heis::class_order(heis::divisor_D(n, heis::CuspFamily::a), n)
              .get_str();
      json cl = json::array();
      for (const auto& c : checks.checks)
        cl.push_back({{"name", c.name},
                      {"degree", c.degree.get_str()},
                      {"order", c.order.get_str()},
                      {"ok", c.ok}});
      out["checks"] = cl;
      out["div_fa_equals_N_DA"] = checks.div_fa_equals_n_da;
      out["all_ok"] = checks.all_ok;
      std::cout << format_out(out, format);
    } else if (*c_cyc) {
      auto fa = heis::fa_at_a0(n);
      out["N"] = n;
      out["fa_at_a0"] = fa.product_form.str();
      out["fa_quotient_agrees"] = fa.quotient_agrees;
      out["fa_closed_form_agrees"] = fa.closed_form_agrees;
      out["fa_sixth_power_is_one"] = fa.sixth_power_is_one;
      auto su = heis::smoothness_unit(n);
      out["smoothness_unit_norm"] = su.norm_abs.get_str();
      out["smoothness_unit_norm_is_power_of_N"] = su.is_power_of_n;
      out["galois_integrality"] = heis::galois_exponent_integrality(n);
      if (n == 5) {
        auto fv = heis::fivroot_identity();
        out["fivroot_identity"] = fv.identity_holds && fv.c_simplifies;
      }
      if (mod11) {
        json rows = json::array();
        for (const auto& row : heis::mod11_double_root())
          rows.push_back({{"root", row.root},
                          {"c", row.c},
                          {"discriminant", row.discriminant},
                          {"double_root_at_1", row.double_root_at_1},
                          {"roots", row.roots_in_field}});
        out["mod11"] = rows;
      }
      std::cout << format_out(out, format);
    } else if (*c_dessin) {
      heis::Dessin d = heis::build_dessin_heisenberg(n);
      if (!out_path.empty()) {
        std::ofstream o(out_path);
        if (!o) throw std::runtime_error("cannot write " + out_path);
        o << heis::export_dot(d);
      }
      if (with_dot) {
        std::cout << heis::export_dot(d);
      } else {
        std::cout << heis::export_json(d);
      }
    } else if (*c_psl2) {
      if (phi_n > 0) {
        auto sub = heis::phi_image_mod3(phi_n);
        out["n"] = 3;
        out["phi_level"] = phi_n;
        out["order"] = sub.size();
      } else {
        std::vector<heis::ProjMat> gens;
        if (!gens_spec.empty()) {
          std::stringstream ss(gens_spec);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            long long k = 1;
            if (auto pos = tok.find('^'); pos != std::string::npos) {
              k = std::atoll(tok.substr(pos + 1).c_str());
              tok = tok.substr(0, pos);
            }
            heis::ProjMat g = tok == "A" ? heis::gen_a_mod(n)
                            : tok == "B" ? heis::gen_b_mod(n)
                                         : throw CLI::ValidationError(
                                               "psl2", "generator must be A or B");
            heis::ProjMat acc = heis::proj_identity();
            long long kk = ((k % 1000000) + 1000000) % 1000000;
            for (long long i = 0; i < kk; ++i) acc = heis::proj_mul(n, acc, g);
            if (k < 0) acc = heis::proj_inv(n, acc);
            gens.push_back(acc);
          }
          auto sub = heis::closure(gens, n);
          if (derived) sub = heis::derived_closure(sub, n);
          out["n"] = n;
          out["order"] = sub.size();
          out["psl2_order"] = heis::psl2_order(n);
        } else {
          out["n"] = n;
          out["psl2_order"] = heis::psl2_order(n);
          out["gamma2_index"] =
              n % 2 == 0 ? json(heis::gamma2_index_mod(n)) : json(nullptr);
        }
      }
      std::cout << format_out(out, format);
    } else if (*c_cong) {
      heis::LevelParams lp = heis::LevelParams::for_level(n);
      json certs = json::array();
      auto emit = [&](const std::string& name, long long lvl_l,
                      long long idx) {
        heis::Heisenberg h({n, n, lvl_l});
        auto cert =
            heis::congruence_refutation(h.regular_action(), heis::to_int(idx));
        certs.push_back(
            {{"subgroup", name},
             {"index", idx},
             {"level", cert.level},
             {"h", cert.h},
             {"verdict",
              cert.verdict == heis::CongruenceVerdict::not_congruence
                  ? "NOT_CONGRUENCE"
                  : "INCONCLUSIVE"},
             {"note", cert.note}});
      };
      emit("Phi_N", 1, n * n);
      emit("Phi'_N", lp.n_prime, n * n * lp.n_prime);
      out["N"] = n;
      out["certificates"] = certs;
      std::cout << format_out(out, format);
    } else if (*c_heis) {
      heis::Heisenberg h({m, n, l});
      out["M"] = m;
      out["N"] = n;
      out["L"] = l;
      if (op == "exponent") {
        out["exponent"] = h.exponent();
        out["closed_form"] = h.exponent_closed_form();
      } else if (op == "center-order") {
        out["center_order"] = h.center_order();
      } else if (op == "order") {
        long long a = 0, c = 0, b = 0;
        if (sscanf(element.c_str(), "%lld,%lld,%lld", &a, &c, &b) != 3)
          throw CLI::ValidationError("heisenberg", "--element a,c,b");
        out["element"] = element;
        out["order"] = h.order(h.make(a, c, b));
      } else if (op == "from-word") {
        heis::HeisElement g = h.from_word(heis::FreeWord::parse(word));
        out["word"] = word;
        out["image"] = {g.a, g.c, g.b};
      } else if (op == "genus") {
        out["genus"] = heis::genus_closed_form(m, n, l).get_str();
      } else {
        throw CLI::ValidationError("heisenberg", "unknown op " + op);
      }
      std::cout << format_out(out, format);
    } else if (*c_verify) {
      heis::VerifyReport rep = heis::run_verify(quick);
      std::cout << rep.render();
      std::cout << (rep.any_fail() ? "RESULT: FAIL\n" : "RESULT: OK\n");
      return rep.any_fail() ? 1 : 0;
    }
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return EXIT_GUARD;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
