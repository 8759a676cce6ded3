/**
 * @file acceptance.cpp
 * @brief End-to-end acceptance suite. Each numbered criterion prints one
 *        pass/fail line; the process exits nonzero if any fails.
 *
 * Usage: acceptance <path-to-cli> [workdir]
 * The CLI path is exercised for the determinism/round-trip criterion.
 */

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "wha/suites.hpp"

using namespace wha;

namespace {

const Field kQ = Field::rationals();
int g_failures = 0;

void criterion(int number, const std::string& what, bool ok,
               const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number,
              what.c_str(),
              detail.empty() ? "" : ("  (" + detail + ")").c_str());
  if (!ok) ++g_failures;
}

struct Corpus {
  std::string name;
  Groupoid groupoid;
  WeakHopfAlgebra hopf;
};

std::vector<Corpus> corpus() {
  std::vector<Corpus> out;
  for (auto [name, g] :
       {std::pair<std::string, Groupoid>{"group_algebra_2", cyclic_group(2)},
        {"discrete_groupoid_2", discrete_groupoid(2)},
        {"pair_groupoid_2", pair_groupoid(2)}}) {
    out.push_back({name, g, groupoid_algebra(g, kQ)});
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& cli, const std::string& args,
            const std::string& out_path) {
  std::string cmd = cli + " " + args + " > " + out_path + " 2>&1";
  return std::system(cmd.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  std::string workdir = argc > 2 ? argv[2] : "acceptance_work";
  if (std::system(("mkdir -p " + workdir).c_str()) != 0) {
    std::fprintf(stderr, "cannot create %s\n", workdir.c_str());
    return 1;
  }

  auto algebras = corpus();

  // 1. Full identity suites with exact equality, under a time budget.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (auto& c : algebras) {
      auto [brep, built] =
          verify_weak_bialgebra(c.hopf.base.alg, c.hopf.base.coalg);
      Report hrep = verify_weak_hopf(c.hopf);
      std::size_t named = brep.checks().size() + hrep.checks().size();
      bool here = brep.all_passed() && hrep.all_passed() && named >= 25;
      if (!here) detail += c.name + " failed; ";
      ok = ok && here;
      detail += c.name + ": " + std::to_string(named) + " checks; ";
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0).count();
    ok = ok && dt < 10.0;
    criterion(1, "axiom suites pass exactly on the corpus", ok,
              detail + "in " + std::to_string(dt) + "s");
  }

  // 2. Delta(1) membership and the separability/Frobenius identities.
  {
    bool ok = true;
    for (auto& c : algebras) {
      auto [brep, built] =
          verify_weak_bialgebra(c.hopf.base.alg, c.hopf.base.coalg);
      for (const auto& chk : brep.checks()) {
        if (chk.name.rfind("structure.", 0) == 0 ||
            chk.name.rfind("frobenius.", 0) == 0) {
          ok = ok && chk.passed;
        }
      }
    }
    criterion(2, "unit comultiplication and Frobenius data are exact", ok);
  }

  // 3. The antipode solver reproduces the groupoid inverse.
  {
    bool ok = true;
    for (auto& c : algebras) {
      AntipodeSolution sol = solve_antipode(c.hopf.base);
      ok = ok && sol.status == AntipodeSolution::Status::Found &&
           *sol.antipode == c.hopf.antipode;
    }
    criterion(3, "solve_antipode returns S(g) = g^{-1} exactly", ok);
  }

  // 4. Exhaustive enumeration of basis gradings over the pair groupoid.
  {
    Groupoid g = pair_groupoid(2);
    WeakHopfAlgebra h = groupoid_algebra(g, kQ);
    bool ok = true;
    std::string detail;

    // the standard module: 16 degree assignments, exactly one valid
    {
      YDModule sg = yd_standard_graded(g, h);
      std::size_t passing = 0;
      bool right_one = false;
      for (std::size_t d0 = 0; d0 < 4; ++d0)
        for (std::size_t d1 = 0; d1 < 4; ++d1) {
          LinearMap coact(kQ, 4 * 2, 2);
          coact.at(d0 * 2 + 0, 0) = Scalar::one(kQ);
          coact.at(d1 * 2 + 1, 1) = Scalar::one(kQ);
          auto [rep, yd] = check_yd(h, YDVariant::LL, sg.module, coact);
          if (rep.all_passed()) {
            ++passing;
            right_one = d0 == g.identity[0] && d1 == g.identity[1];
          }
        }
      ok = ok && passing == 1 && right_one;
      detail += "standard module: " + std::to_string(passing) + "/16 pass; ";
    }
    // the regular module: 256 assignments, exactly the target-identity one
    {
      ModuleData reg = regular_module(h.base.alg, Side::Left);
      std::size_t passing = 0;
      bool right_one = true;
      for (std::size_t flat = 0; flat < 256; ++flat) {
        std::size_t d[4] = {flat % 4, (flat / 4) % 4, (flat / 16) % 4,
                            (flat / 64) % 4};
        LinearMap coact(kQ, 4 * 4, 4);
        for (std::size_t j = 0; j < 4; ++j)
          coact.at(d[j] * 4 + j, j) = Scalar::one(kQ);
        auto [rep, yd] = check_yd(h, YDVariant::LL, reg, coact);
        if (rep.all_passed()) {
          ++passing;
          for (std::size_t j = 0; j < 4; ++j)
            right_one = right_one && d[j] == g.identity[g.target[j]];
        }
      }
      ok = ok && passing == 1 && right_one;
      detail += "regular module: " + std::to_string(passing) + "/256 pass; ";
    }
    // conjugation rule on the surviving grading, and rejection of
    // off-loop supports
    {
      YDModule sg = yd_standard_graded(g, h);
      bool conj = true;
      for (std::size_t tau = 0; tau < 4; ++tau) {
        for (std::size_t x = 0; x < 2; ++x) {
          Vec moved = sg.module.act[tau].apply(Vec::basis(kQ, 2, x));
          if (moved.is_zero()) continue;
          // degree of the moved vector must be tau . id_x . tau^{-1}
          std::ptrdiff_t mid = g.compose[tau][g.identity[x]];
          std::ptrdiff_t conj_deg =
              mid < 0 ? -1 : g.compose[static_cast<std::size_t>(mid)]
                                      [g.inverse[tau]];
          Vec lam = sg.coaction.apply(moved);
          Tensor t({4, 2}, lam);
          bool found = false;
          for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t m = 0; m < 2; ++m)
              if (!t.coords()[a * 2 + m].is_zero()) {
                found = found ||
                        (a == static_cast<std::size_t>(conj_deg));
              }
          conj = conj && found;
        }
      }
      ModuleData one{Side::Left, 1, {}};
      for (std::size_t k = 0; k < 4; ++k)
        one.act.push_back(LinearMap::identity(kQ, 1));
      bool rejected = false;
      try {
        (void)yd_from_grading(g, h, {2}, one);
      } catch (const Error& e) {
        rejected = e.kind() == Error::Kind::BadSupport;
      }
      ok = ok && conj && rejected;
    }
    criterion(4, "grading enumeration matches the loop characterization", ok,
              detail);
  }

  // 5. Ker(p) = span(J); the order-two double matches the classical one.
  {
    bool ok = true;
    for (auto& c : algebras) {
      auto [drep, d] = drinfeld_double(c.hopf);
      Report krep = kernel_equals_j(c.hopf, d);
      ok = ok && drep.all_passed() && krep.all_passed();
      if (c.name == "group_algebra_2") {
        ok = ok && Subspace::kernel(d.ambient.p).dim() == 0 &&
             d.dbl.dim() == 4;
        // hand-coded classical double of the order-two group: basis
        // g^i (x) delta_a with product [a = b](g^{i+j}, delta_a),
        // coproduct summing delta_a = delta_{a1} delta_{a2}, counit
        // [a = 0], antipode (g^{-i}, delta_{-a})
        LinearMap mult(kQ, 4, 16), comult(kQ, 16, 4), anti(kQ, 4, 4);
        Vec counit(kQ, 4);
        auto idx = [](std::size_t i, std::size_t a) { return i * 2 + a; };
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t j = 0; j < 2; ++j)
              mult.at(idx((i + j) % 2, a), idx(i, a) * 4 + idx(j, a)) =
                  Scalar::one(kQ);
            for (std::size_t a1 = 0; a1 < 2; ++a1)
              comult.at(idx(i, a1) * 4 + idx(i, (a + 2 - a1) % 2),
                        idx(i, a)) = Scalar::one(kQ);
            counit[idx(i, a)] =
                a == 0 ? Scalar::one(kQ) : Scalar::zero(kQ);
            anti.at(idx((2 - i) % 2, (2 - a) % 2), idx(i, a)) =
                Scalar::one(kQ);
          }
        ok = ok && d.dbl.base.alg.mult == mult &&
             d.dbl.base.coalg.comult == comult &&
             d.dbl.base.coalg.counit == counit && d.dbl.antipode == anti &&
             d.dbl.base.alg.unit ==
                 kron_vec(c.hopf.base.alg.unit, c.hopf.base.coalg.counit);
      }
    }
    criterion(5, "Ker(p) equals the span description on the corpus", ok);
  }

  // 6. The anti-isomorphism onto the twisted dual-side double.
  {
    bool ok = true;
    for (auto& c : algebras) {
      auto [drep, d] = drinfeld_double(c.hopf);
      auto [prep, dp] = dprime_and_f(c.hopf, d);
      Report trep = verify_double_target_iso(c.hopf, d);
      ok = ok && drep.all_passed() && prep.all_passed() && trep.all_passed();
    }
    criterion(6, "f is an anti-isomorphism and D(H)_t matches H_t", ok);
  }

  // 7. Double modules from lr Yetter-Drinfeld modules, with fault check.
  {
    bool ok = true;
    for (auto& c : algebras) {
      auto [drep, d] = drinfeld_double(c.hopf);
      SpecFile spec = spec_from_hopf(c.hopf, c.name);
      if (c.name != "group_algebra_2") {
        spec.groupoid = c.groupoid;  // expose the graded corpus module
      }
      auto mods = corpus_yd_modules(spec, c.hopf);
      for (auto& [mname, m0] : mods) {
        YDModule m = yd_convert(c.hopf, m0, YDVariant::LR);
        auto [mrep, dm] = yd_to_double_module(c.hopf, d, m);
        ok = ok && mrep.all_passed() && dm.has_value();
        Report mon = verify_double_module_monoidal(c.hopf, d, m, m);
        ok = ok && mon.all_passed();
      }
      // injected sign fault must be detected and localized
      if (!mods.empty()) {
        YDModule m = yd_convert(c.hopf, mods.front().second, YDVariant::LR);
        LinearMap bad = m.coaction;
        bad.at(0, 0) = bad.at(0, 0) - Scalar::of_int(2, kQ);
        auto [frep, fm] = yd_to_double_module(
            c.hopf, d, YDModule{YDVariant::LR, m.dim, m.module, bad});
        bool faulted = !frep.all_passed() && !fm.has_value() &&
                       frep.first_failure() != nullptr &&
                       frep.first_failure()->witness.has_value();
        ok = ok && faulted;
      }
    }
    criterion(7, "induced double actions verify and faults are localized",
              ok);
  }

  // 8. Braidings, center condition, unit coherence, conversion cycles.
  {
    bool ok = true;
    for (auto& c : algebras) {
      SpecFile spec = spec_from_hopf(c.hopf, c.name);
      if (c.name != "group_algebra_2") spec.groupoid = c.groupoid;
      ModuleData reg = regular_module(c.hopf.base.alg, Side::Left);
      for (auto& [mname, m] : corpus_yd_modules(spec, c.hopf)) {
        ok = ok && verify_conversion_cycles(c.hopf, m).all_passed();
        ok = ok && check_center_condition(c.hopf, m, reg, reg).all_passed();
        for (YDVariant v : {YDVariant::LL, YDVariant::LR, YDVariant::RL,
                            YDVariant::RR}) {
          YDModule cm = yd_convert(c.hopf, m, v);
          ok = ok && verify_braiding(c.hopf, cm, cm).all_passed();
        }
      }
    }
    criterion(8, "braided structure and the twelve conversion cycles", ok);
  }

  // 9. Duality: triangle identities and (co)linearity, unit included.
  {
    bool ok = true;
    for (auto& c : algebras) {
      SpecFile spec = spec_from_hopf(c.hopf, c.name);
      if (c.name != "group_algebra_2") spec.groupoid = c.groupoid;
      for (auto& [mname, m] : corpus_yd_modules(spec, c.hopf)) {
        Report rep = verify_left_duality(c.hopf, m);
        ok = ok && rep.all_passed();
      }
    }
    criterion(9, "left duality holds for every corpus module", ok);
  }

  // 10. The comparison map between the two tensor products is bijective.
  {
    bool ok = true;
    for (auto& c : algebras) {
      ModuleData reg = regular_module(c.hopf.base.alg, Side::Left);
      ModuleData tm = c.hopf.base.target_module();
      std::vector<ModuleData> mods = {reg, tm};
      if (c.name == "pair_groupoid_2") {
        mods.push_back(yd_standard_graded(c.groupoid, c.hopf).module);
      }
      for (const auto& m : mods)
        for (const auto& n : mods) {
          Report rep = verify_tensor_over_ht(c.hopf.base, m, n);
          ok = ok && rep.all_passed();
        }
    }
    criterion(10, "the quotient-to-truncated comparison is bijective", ok);
  }

  // 11. CLI determinism and export round trips.
  {
    bool ok = !cli.empty();
    std::string detail = cli.empty() ? "no CLI path given" : "";
    if (ok) {
      auto sh = [&](const std::string& args, const std::string& out) {
        return run_cli(cli, args, workdir + "/" + out) == 0;
      };
      ok = sh("example pair_groupoid 2 --out " + workdir + "/pg.wha",
              "gen.log") &&
           ok;
      ok = sh("verify " + workdir + "/pg.wha --suite hopf --report " +
                  workdir + "/r1.txt",
              "v1.log") &&
           ok;
      ok = sh("verify " + workdir + "/pg.wha --suite hopf --report " +
                  workdir + "/r2.txt",
              "v2.log") &&
           ok;
      ok = ok && read_file(workdir + "/r1.txt") ==
                     read_file(workdir + "/r2.txt") &&
           !read_file(workdir + "/r1.txt").empty();
      // exports re-ingest and pass their own suites
      ok = sh("double " + workdir + "/pg.wha --out " + workdir + "/dpg.wha",
              "d.log") &&
           ok;
      ok = sh("verify " + workdir + "/dpg.wha --suite hopf", "vd.log") && ok;
      ok = sh("dual " + workdir + "/pg.wha --out " + workdir + "/dualpg.wha",
              "du.log") &&
           ok;
      ok = sh("verify " + workdir + "/dualpg.wha --suite hopf", "vdu.log") &&
           ok;
      // byte-identical re-export
      ok = sh("double " + workdir + "/pg.wha --out " + workdir + "/dpg2.wha",
              "d2.log") &&
           ok;
      ok = ok && read_file(workdir + "/dpg.wha") ==
                     read_file(workdir + "/dpg2.wha");
      // a failing input yields a nonzero exit status
      {
        std::ofstream bad(workdir + "/bad.wha");
        SpecFile spec = generate_example("pair_groupoid", {2}, kQ);
        spec.coalgebra->comult.at(1, 1) =
            spec.coalgebra->comult.at(1, 1) - Scalar::one(kQ);
        bad << emit_spec(spec);
        bad.close();
        int rc = run_cli(cli, "verify " + workdir +
                                  "/bad.wha --suite bialgebra --quiet",
                         workdir + "/vb.log");
        ok = ok && rc != 0;
      }
    }
    criterion(11, "CLI runs are deterministic and exports round-trip", ok,
              detail);
  }

  std::printf("%s: %d criterion(s) failed\n",
              g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
