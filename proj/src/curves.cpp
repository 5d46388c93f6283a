#include "heiscurve/curves.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "heiscurve/psl2.hpp"

namespace heis {

CurveData rh_genus(const PermAction& action) {
  action.validate();
  if (!action.transitive())
    throw std::invalid_argument("rh_genus: action not transitive");
  CurveData cd;
  cd.degree = action.degree;
  long long ram = 0;
  auto fiber = [&](const Perm& p, std::vector<long long>& out) {
    for (const auto& cyc : perm_cycles(p)) {
      out.push_back(static_cast<long long>(cyc.size()));
      ram += static_cast<long long>(cyc.size()) - 1;
    }
    std::sort(out.begin(), out.end());
  };
  fiber(action.pi_x, cd.cusps_inf);
  fiber(action.pi_y, cd.cusps_zero);
  fiber(action.pi_one(), cd.cusps_one);
  long long twog2 = -2 * static_cast<long long>(cd.degree) + ram;
  if (twog2 % 2 != 0) throw std::logic_error("rh_genus: odd Euler term");
  cd.genus = twog2 / 2 + 1;
  if (cd.genus < 0) throw std::logic_error("rh_genus: negative genus");
  return cd;
}

long long ramification_e(long long m, long long n, long long l) {
  long long t = std::lcm(m, n);
  bool t_even = t % 2 == 0;
  bool tl_odd = (t / l) % 2 != 0;
  return (t_even && tl_odd) ? 2 * t : t;
}

Int genus_closed_form(long long m, long long n, long long l) {
  if (m < 1 || n < 1 || l < 1 || std::gcd(m, n) % l != 0)
    throw std::invalid_argument("genus_closed_form: need L | gcd(M,N)");
  long long e = ramification_e(m, n, l);
  Int nml = to_int(m) * to_int(n) * to_int(l);
  Int val = nml - to_int(n * l) - to_int(m * l) - nml / to_int(e);
  if (val % 2 != 0) throw std::logic_error("genus_closed_form: parity");
  return val / 2 + 1;
}

std::vector<std::tuple<long long, long long, long long>> classify_small_genus(
    long long bound, long long target) {
  std::vector<std::tuple<long long, long long, long long>> out;
  if (bound < 1) throw std::invalid_argument("classify_small_genus: bound >= 1");
  for (long long m = 1; m <= bound; ++m)
    for (long long n = 1; n <= bound; ++n) {
      long long g = std::gcd(m, n);
      for (long long l = 1; l <= g; ++l) {
        if (g % l != 0) continue;
        if (genus_closed_form(m, n, l) == to_int(target))
          out.emplace_back(m, n, l);
      }
    }
  return out;
}

Int genus_xpp(long long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("genus_xpp: N odd >= 3");
  long long np = n;          // N odd
  long long npp = n % 3 ? np : np / 3;
  Int gp = genus_closed_form(n, n, np);
  return to_int(npp) * to_int(npp) * (gp - 1) + 1;
}

CuspWidths cusp_widths_and_level(const PermAction& action) {
  action.validate();
  if (!action.transitive())
    throw std::invalid_argument("cusp_widths_and_level: not transitive");
  CuspWidths cw;
  for (const Perm* p : {&action.pi_x, &action.pi_y}) {
    for (const auto& cyc : perm_cycles(*p))
      cw.widths.push_back(2 * static_cast<long long>(cyc.size()));
  }
  for (const auto& cyc : perm_cycles(action.pi_one()))
    cw.widths.push_back(2 * static_cast<long long>(cyc.size()));
  std::sort(cw.widths.begin(), cw.widths.end());
  cw.level = 1;
  for (long long w : cw.widths) cw.level = std::lcm(cw.level, w);
  return cw;
}

CongruenceCertificate congruence_refutation(const PermAction& action,
                                            const Int& index) {
  CongruenceCertificate cert;
  cert.index = index;
  cert.level = cusp_widths_and_level(action).level;
  if (cert.level > PSL2_LEVEL_GUARD) {
    cert.note = "level exceeds enumeration guard";
    return cert;
  }
  cert.h = gamma2_index_mod(cert.level);
  if (to_int(cert.h) % index != 0) {
    cert.verdict = CongruenceVerdict::not_congruence;
    cert.note =
        "containment of Gamma(m) would force index | [Gbar(2):Gbar(2) n "
        "Gbar(m)]";
  } else {
    cert.note = "index divides the principal congruence index";
  }
  return cert;
}

}  // namespace heis
