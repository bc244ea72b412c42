// Identities in two or three free variables, checked by direct summation at seeded points.

#include "cases.hpp"

namespace mockforms::cases {
namespace {

const cplx I(0.0, 1.0);
using numeric::e2pi;

double sgn_pow(long j) { return (j % 2 == 0) ? 1.0 : -1.0; }

PhiParams phi_p(const ExpRational& m, const ExpRational& s, SignVariant v, PhiPart part) {
  PhiParams p;
  p.m = m;
  p.s = s;
  p.variant = v;
  p.part = part;
  return p;
}

cplx phi(const ExpRational& m, const ExpRational& s, PhiPart part, cplx tau, cplx z1, cplx z2,
         SignVariant v = SignVariant::none) {
  return phi_numeric(phi_p(m, s, v, part), {tau, z1, z2});
}

cplx v11(cplx tau, cplx z) { return numeric::vartheta(VarthetaKind::v11, tau, z); }
cplx thm(double j, double M, cplx tau, cplx z) { return numeric::theta(j, M, tau, z, SignVariant::minus); }
cplx tdiff(double k, double m, cplx tau, cplx z) { return numeric::theta(k, m, tau, z) - numeric::theta(-k, m, tau, z); }

constexpr double OUTER_EPS = 1e-16;

// ------------------------------------------------------------ theta denominators

Outcome kp(const Params& P, const RunOptions& o, bool mut) {
  const long a = integer(P, "a");
  const ExpRational h(1, 2);
  return compare_numeric(
      [=](Sampler& S) {
        cplx tau = S.tau(), z = S.z(tau);
        cplx z2 = -z + 2.0 * double(a) * tau;
        cplx rhs = -I * e2pi(-double(a) * z) * std::pow(numeric::eta(tau), 3) / v11(tau, z);
        if (mut) rhs = -rhs;
        cplx l1 = phi(h, h, PhiPart::first, tau, z, z2, SignVariant::minus);
        cplx l2 = phi(h, h, PhiPart::second, tau, z, z2, SignVariant::minus);
        cplx l = scale_free(l1, rhs) >= scale_free(l2, rhs) ? l1 : l2;
        return Sample{l, rhs, {{"tau", cj(tau)}, {"z", cj(z)}, {"part", l == l1 ? "first" : "second"}}};
      },
      *o.points, *o.tol, o.seed);
}

// Phi_1 + Phi_2 of Phi^{(-)[1/2,1/2]} against coef * eta^3 vartheta11(z1+z2) vartheta11((z1-z2)/2)
//   / (vartheta11(z1) vartheta11(z2) vartheta11((z1+z2)/2))
Outcome osp(cplx coef, const RunOptions& o) {
  const ExpRational h(1, 2);
  return compare_numeric(
      [=](Sampler& S) {
        cplx tau = S.tau(), z1 = S.z(tau), z2 = S.z(tau);
        cplx lhs = phi(h, h, PhiPart::first, tau, z1, z2, SignVariant::minus) +
                   phi(h, h, PhiPart::second, tau, z1, z2, SignVariant::minus);
        cplx rhs = coef * std::pow(numeric::eta(tau), 3) * v11(tau, z1 + z2) * v11(tau, (z1 - z2) / 2.0) /
                   (v11(tau, z1) * v11(tau, z2) * v11(tau, (z1 + z2) / 2.0));
        return Sample{lhs, rhs, {{"tau", cj(tau)}, {"z1", cj(z1)}, {"z2", cj(z2)}, {"ratio", cj(lhs / rhs)}}};
      },
      *o.points, *o.tol, o.seed);
}

// ------------------------------------------------------------ rearrangements

struct Three {
  cplx tau, z1, z2, z3;
};
Three three(Sampler& S) {
  cplx tau = S.tau();
  cplx a = S.z(tau), b = S.z(tau), c = S.z(tau);
  return {tau, a, b, c};
}
nlohmann::json three_json(const Three& t) {
  return {{"tau", cj(t.tau)}, {"z1", cj(t.z1)}, {"z2", cj(t.z2)}, {"z3", cj(t.z3)}};
}

// half = false: the s = 0 rearrangement, half = true: s = 1/2
Outcome f_rearr(const Params& P, const RunOptions& o, bool mut, bool half) {
  const ExpRational m = rat(P, "m"), h(1, 2);
  const double md = m.to_double();
  const long part = integer(P, "part");
  const ExpRational s = half ? h : ExpRational(0);
  return compare_numeric(
      [=](Sampler& S) {
        Three t = three(S);
        const auto [tau, z1, z2, z3] = t;
        const PhiPart pp = part == 1 ? PhiPart::first : PhiPart::second;
        cplx lhs = bilateral(
            [&](long j) {
              double jd = double(j);
              double lin = half ? 0.0 : 0.5 * jd;
              return sgn_pow(j) * e2pi(((md + 0.5) * jd * jd + lin) * tau + 0.5 * jd * (z1 - z2) - jd * md * (z1 - z3)) *
                     phi(m, s, pp, tau, z1, -z3 - 2.0 * jd * tau);
            },
            OUTER_EPS);
        cplx rhs = bilateral(
            [&](long k) {
              double kd = double(k);
              double lin = half ? 0.0 : -0.5 * kd;
              cplx pre = sgn_pow(k) * e2pi(((md + 0.5) * kd * kd + lin) * tau - 0.5 * kd * (z1 - z2) +
                                           (part == 1 ? 1.0 : -1.0) * kd * md * (z1 - z3));
              if (part == 1) return pre * phi(h, h, PhiPart::first, tau, z1, -z2 - 2.0 * kd * tau, SignVariant::minus);
              return pre * phi(h, h, PhiPart::first, tau, z3, z1 - z2 - z3 - 2.0 * kd * tau, SignVariant::minus);
            },
            OUTER_EPS);
        if (!half) rhs *= e2pi(-0.5 * (part == 1 ? z1 : z3));
        if (mut) rhs = -rhs;
        return Sample{lhs, rhs, three_json(t)};
      },
      *o.points, *o.tol, o.seed);
}

// -i eta^3 ( theta^{(-)}_{a,m+1/2}(z1+z2+(z1-z2)/(2m+1))/vartheta11(z1)
//          + theta^{(-)}_{b,m+1/2}(z1+z2+(z2-z1)/(2m+1))/vartheta11(z2) )
cplx eta_part(double m, double a, double b, cplx tau, cplx z1, cplx z2) {
  const double L = m + 0.5;
  return -I * std::pow(numeric::eta(tau), 3) *
         (thm(a, L, tau, z1 + z2 + (z1 - z2) / (2 * m + 1)) / v11(tau, z1) +
          thm(b, L, tau, z1 + z2 + (z2 - z1) / (2 * m + 1)) / v11(tau, z2));
}

Outcome sumdiff(const Params& P, const RunOptions& o, bool mut, bool half) {
  const ExpRational m = rat(P, "m"), h(1, 2);
  const double md = m.to_double();
  return compare_numeric(
      [=](Sampler& S) {
        cplx tau = S.tau(), z1 = S.z(tau), z2 = S.z(tau);
        const double c = half ? 0.0 : 1.0 / (4 * (md + 0.5));
        cplx lhs = bilateral(
            [&](long j) {
              double jc = double(j) - c;
              return sgn_pow(j) * e2pi((md + 0.5) * jc * jc * tau + md * jc * (z1 + z2)) *
                     phi(m, half ? h : ExpRational(0), PhiPart::full, tau, z1, z2 + 2.0 * double(j) * tau);
            },
            OUTER_EPS);
        if (!half) lhs *= e2pi(md / (2 * (md + 0.5)) * z1);
        cplx rhs = half ? eta_part(md, 0, 0, tau, z1, z2) : eta_part(md, -0.5, 0.5, tau, z1, z2);
        if (mut) rhs = -rhs;
        return Sample{lhs, rhs, {{"tau", cj(tau)}, {"z1", cj(z1)}, {"z2", cj(z2)}}};
      },
      *o.points, *o.tol, o.seed);
}

// theta^{(-)} times Phi^{[m,s]}(tau, z1, z2) in closed form
Outcome phi_expl(const Params& P, const RunOptions& o, bool mut, bool half) {
  const ExpRational m = rat(P, "m"), h(1, 2);
  const double md = m.to_double();
  const long two_m = (ExpRational(2) * m).floor_long();
  return compare_numeric(
      [=](Sampler& S) {
        cplx tau = S.tau(), z1 = S.z(tau), z2 = S.z(tau);
        const double L = md + 0.5;
        cplx lhs = thm(half ? 0.0 : 0.5, L, tau, md * (z1 - z2) / L) *
                   phi(m, half ? h : ExpRational(0), PhiPart::full, tau, z1, z2);
        const double c = half ? 0.0 : 1.0 / (4 * L);
        cplx fin = bilateral(
            [&](long j) {
              const long tm = two_m * j;  // 2mj; k runs over Z (s = 0) or 1/2 + Z (s = 1/2)
              cplx row = 0;
              long lo2, hi2;
              if (j > 0) {
                lo2 = half ? 1 : 2;
                hi2 = half ? 2 * tm - 1 : 2 * tm;
              } else {
                lo2 = half ? 2 * tm + 1 : 2 * tm + 2;
                hi2 = half ? -1 : 0;
              }
              const double sg = j > 0 ? 1.0 : -1.0;
              const double jc = double(j) + c;
              for (long k2 = lo2; k2 <= hi2; k2 += 2) {
                double k = double(k2) / 2;
                cplx ph = half ? e2pi(L * jc * jc * tau + md * jc * (z2 - z1) + 0.5 * k * (z1 - z2) - k * k / (4 * md) * tau)
                               : e2pi(L * jc * jc * tau + md * jc * (z1 - z2) - 0.5 * k * (z1 - z2) - k * k / (4 * md) * tau);
                row += sg * ph * tdiff(k, md, tau, z1 + z2);
              }
              return sgn_pow(j) * row;
            },
            OUTER_EPS);
        cplx rhs = fin + (half ? eta_part(md, 0, 0, tau, z1, z2) : eta_part(md, -0.5, 0.5, tau, z1, z2));
        if (mut) rhs = -rhs;
        return Sample{lhs, rhs, {{"tau", cj(tau)}, {"z1", cj(z1)}, {"z2", cj(z2)}}};
      },
      *o.points, *o.tol, o.seed);
}

}  // namespace

void add_numeric(std::vector<CatalogEntry>& out) {
  auto entry = [&](std::string id, std::string summary, std::vector<ParamDomain> d,
                   std::function<Outcome(const Params&, const RunOptions&, bool)> fn, int points, double tol,
                   bool mutation = true, bool enabled = true) {
    CatalogEntry e;
    e.id = std::move(id);
    e.mode = "numeric";
    e.summary = std::move(summary);
    e.domain = std::move(d);
    e.run = std::move(fn);
    e.has_mutation = mutation;
    e.enabled = enabled;
    e.points = points;
    e.tol = tol;
    out.push_back(std::move(e));
  };
  const std::vector<std::string> ms{"1/2", "1", "3/2", "2", "5/2", "3"}, ms_suite{"1", "3/2", "2"};

  entry("KP", "Phi_1 and Phi_2 of Phi^{(-)[1/2,1/2]}(tau, z, -z + 2a tau, 0) equal -i e^{-2 pi i a z} eta^3/vartheta11(z)",
        {dom("a", int_range(0, 4), int_range(0, 2))}, kp, 20, 1e-9);
  entry("OSP-DENOM", "Phi_1 + Phi_2 of Phi^{(-)[1/2,1/2]} as 2i times the eta^3 vartheta11-quotient", {},
        [](const Params&, const RunOptions& o, bool) { return osp(cplx(0, 2), o); }, 20, 1e-9, false);
  entry("OSP-DENOM-I", "the same quotient with coefficient i", {},
        [](const Params&, const RunOptions& o, bool) { return osp(cplx(0, 1), o); }, 20, 1e-9, false, false);
  entry("F-REARR-0", "rearranged j-sum of Phi_part^{[m,0]}(tau, z1, -z3 - 2j tau) as a sum of Phi^{(-)[1/2,1/2]}",
        {dom("m", ms, ms_suite), dom("part", {"1", "2"})},
        [](const Params& P, const RunOptions& o, bool mut) { return f_rearr(P, o, mut, false); }, 10, 1e-8);
  entry("F-REARR-H", "rearranged j-sum of Phi_part^{[m,1/2]}(tau, z1, -z3 - 2j tau)",
        {dom("m", ms, ms_suite), dom("part", {"1", "2"})},
        [](const Params& P, const RunOptions& o, bool mut) { return f_rearr(P, o, mut, true); }, 10, 1e-8);
  entry("SUMDIFF-0", "theta-weighted j-sum of Phi^{[m,0]}(tau, z1, z2 + 2j tau) as an eta^3 theta quotient",
        {dom("m", ms, ms_suite)},
        [](const Params& P, const RunOptions& o, bool mut) { return sumdiff(P, o, mut, false); }, 10, 1e-8);
  entry("SUMDIFF-H", "theta-weighted j-sum of Phi^{[m,1/2]}(tau, z1, z2 + 2j tau)",
        {dom("m", ms, ms_suite)},
        [](const Params& P, const RunOptions& o, bool mut) { return sumdiff(P, o, mut, true); }, 10, 1e-8);
  entry("PHI0-EXPL", "theta^{(-)}_{1/2,m+1/2} Phi^{[m,0]} as a finite-type double sum plus the eta^3 part",
        {dom("m", ms, ms_suite)},
        [](const Params& P, const RunOptions& o, bool mut) { return phi_expl(P, o, mut, false); }, 10, 1e-8);
  entry("PHIH-EXPL", "theta^{(-)}_{0,m+1/2} Phi^{[m,1/2]} as a double sum plus the eta^3 part",
        {dom("m", ms, ms_suite)},
        [](const Params& P, const RunOptions& o, bool mut) { return phi_expl(P, o, mut, true); }, 10, 1e-8);
}

}  // namespace mockforms::cases
