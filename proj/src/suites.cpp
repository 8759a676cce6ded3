#include "wha/suites.hpp"

namespace wha {

namespace {

Report bialgebra_suite(const SpecFile& spec) {
  Report rep("bialgebra");
  if (spec.kind == SpecKind::Algebra) {
    rep.merge("algebra", verify_algebra(*spec.algebra));
    return rep;
  }
  AlgebraData alg = spec.kind == SpecKind::GroupoidKind
                        ? groupoid_algebra(*spec.groupoid, spec.field).base.alg
                        : *spec.algebra;
  CoalgebraData coalg =
      spec.kind == SpecKind::GroupoidKind
          ? groupoid_algebra(*spec.groupoid, spec.field).base.coalg
          : *spec.coalgebra;
  auto [brep, built] = verify_weak_bialgebra(alg, coalg);
  rep.merge("", brep);
  if (!built) return rep;  // the monoidal layer needs a verified bialgebra
  const WeakBialgebra& h = *built;
  ModuleData reg = regular_module(h.alg, Side::Left);
  rep.merge("monoidal", verify_truncated_tensor(h, reg, reg));
  rep.merge("monoidal", verify_unit_constraints(h, reg));
  rep.merge("monoidal", verify_triangle(h, reg, reg));
  rep.merge("monoidal", verify_tensor_over_ht(h, reg, reg));
  {
    ModuleData tm = h.target_module();
    rep.merge("monoidal.unit_pair", verify_tensor_over_ht(h, reg, tm));
  }
  return rep;
}

Report hopf_suite(const SpecFile& spec) {
  Report rep("hopf");
  WeakHopfAlgebra h = hopf_from_spec(spec);
  rep.merge("", bialgebra_suite(spec));
  rep.merge("", verify_weak_hopf(h));
  {
    AntipodeSolution sol = solve_antipode(h.base);
    rep.record("antipode.solver_reproduces",
               sol.status == AntipodeSolution::Status::Found &&
                   *sol.antipode == h.antipode);
  }
  {
    WeakHopfAlgebra d = dual_weak_hopf(h);
    auto [drep, dblt] = verify_weak_bialgebra(d.base.alg, d.base.coalg);
    rep.record("dual.bialgebra_suite", drep.all_passed());
    rep.record("dual.hopf_suite", verify_weak_hopf(d).all_passed());
    WeakHopfAlgebra dd = dual_weak_hopf(d);
    rep.record("dual.double_dual_reflexive",
               dd.base.alg.mult == h.base.alg.mult &&
                   dd.base.alg.unit == h.base.alg.unit &&
                   dd.base.coalg.comult == h.base.coalg.comult &&
                   dd.base.coalg.counit == h.base.coalg.counit &&
                   dd.antipode == h.antipode);
  }
  return rep;
}

Report yd_suite(const SpecFile& spec) {
  Report rep("yd");
  WeakHopfAlgebra h = hopf_from_spec(spec);
  ModuleData reg = regular_module(h.base.alg, Side::Left);
  auto corpus = corpus_yd_modules(spec, h);
  for (auto& [name, m] : corpus) {
    auto [crep, yd] = check_yd(h, m.variant, m.module, m.coaction);
    rep.merge(name, crep);
    if (!yd) continue;
    rep.merge(name + ".conversions", verify_conversion_cycles(h, m));
    rep.merge(name + ".braiding", verify_braiding(h, m, m));
    rep.merge(name + ".center", check_center_condition(h, m, reg, reg));
    auto tp = yd_tensor(h, m, m);
    auto [trep, tyd] =
        check_yd(h, tp.product.variant, tp.product.module, tp.product.coaction);
    rep.record(name + ".tensor_square_passes", trep.all_passed());
  }
  return rep;
}

Report entwining_suite(const SpecFile& spec) {
  Report rep("entwining");
  WeakHopfAlgebra h = hopf_from_spec(spec);
  DoiHopfDatum datum = canonical_yd_datum(h);
  rep.merge("datum", verify_doihopf(datum));
  WeakEntwining e = doihopf_to_entwining(datum);
  rep.merge("axioms", verify_weak_entwining(e));
  check_map_equal(rep, "psi_matches_direct_formula", e.psi,
                  canonical_entwining_psi(h));
  {
    WeakSmashStructure sm{h.base.alg, dual_weak_hopf(h).base.alg,
                          smash_r_from_entwining(e)};
    rep.merge("smash", verify_smash_structure(sm));
    auto [srep, pa] = smash_product(sm);
    rep.record("smash.product_wellformed", srep.all_passed());
    rep.merge("quotient", verify_preunit_quotient(pa));
  }
  for (auto& [name, m0] : corpus_yd_modules(spec, h)) {
    YDModule m = yd_convert(h, m0, YDVariant::LR);
    rep.merge(name + ".entwined", entwined_module_check(e, m.module, m.coaction));
    auto [yrep, yd] = check_yd(h, YDVariant::LR, m.module, m.coaction);
    rep.record(name + ".verdicts_agree",
               yrep.all_passed() ==
                   entwined_module_check(e, m.module, m.coaction).all_passed());
  }
  return rep;
}

Report double_suite(const SpecFile& spec) {
  Report rep("double");
  WeakHopfAlgebra h = hopf_from_spec(spec);
  auto [drep, d] = drinfeld_double(h);
  rep.merge("construction", drep);
  rep.merge("kernel", kernel_equals_j(h, d));
  auto [prep, dp] = dprime_and_f(h, d);
  rep.merge("dprime", prep);
  rep.merge("target", verify_double_target_iso(h, d));
  auto corpus = corpus_yd_modules(spec, h);
  for (auto& [name, m0] : corpus) {
    YDModule m = yd_convert(h, m0, YDVariant::LR);
    auto [mrep, dm] = yd_to_double_module(h, d, m);
    rep.merge(name + ".module", mrep);
  }
  if (!corpus.empty()) {
    YDModule m = yd_convert(h, corpus.front().second, YDVariant::LR);
    rep.merge("monoidal", verify_double_module_monoidal(h, d, m, m));
  }
  return rep;
}

Report duality_suite(const SpecFile& spec) {
  Report rep("duality");
  WeakHopfAlgebra h = hopf_from_spec(spec);
  for (auto& [name, m] : corpus_yd_modules(spec, h)) {
    rep.merge(name, verify_left_duality(h, m));
  }
  return rep;
}

Report yd_file_suite(const SpecFile& spec) {
  Report rep("yd");
  WeakHopfAlgebra h = hopf_from_spec(spec);
  auto [crep, yd] = check_yd(h, *spec.variant, *spec.module, *spec.coaction);
  rep.merge("module", crep);
  if (yd) {
    rep.merge("conversions", verify_conversion_cycles(h, *yd));
    rep.merge("braiding", verify_braiding(h, *yd, *yd));
    YDModule ll = yd_convert(h, *yd, YDVariant::LL);
    ModuleData reg = regular_module(h.base.alg, Side::Left);
    rep.merge("center", check_center_condition(h, ll, reg, reg));
    rep.merge("duality", verify_left_duality(h, ll));
  }
  return rep;
}

}  // namespace

std::vector<std::pair<std::string, YDModule>> corpus_yd_modules(
    const SpecFile& spec, const WeakHopfAlgebra& h) {
  std::vector<std::pair<std::string, YDModule>> out;
  if (spec.kind == SpecKind::YdModule) {
    YDModule m{*spec.variant, spec.module_dim, *spec.module, *spec.coaction};
    out.emplace_back("file_module", yd_convert(h, m, YDVariant::LL));
    return out;
  }
  out.emplace_back("unit_object", yd_unit_object(h));
  if (spec.groupoid) {
    out.emplace_back("standard_graded",
                     yd_standard_graded(*spec.groupoid, h));
  }
  {
    YDModule adj = yd_adjoint(h);
    auto [rep, yd] = check_yd(h, adj.variant, adj.module, adj.coaction);
    if (rep.all_passed()) out.emplace_back("adjoint", adj);
  }
  return out;
}

Report run_suite(const SpecFile& spec, const std::string& suite) {
  auto needs_coalgebra = [&]() {
    if (spec.kind == SpecKind::Algebra) {
      throw Error(Error::Kind::SchemaError,
                  "suite '" + suite + "' needs a coalgebra part");
    }
  };
  Report rep;
  if (suite == "bialgebra") {
    rep = bialgebra_suite(spec);
  } else if (suite == "hopf") {
    needs_coalgebra();
    rep = hopf_suite(spec);
  } else if (suite == "yd") {
    needs_coalgebra();
    rep = spec.kind == SpecKind::YdModule ? yd_file_suite(spec)
                                          : yd_suite(spec);
  } else if (suite == "entwining") {
    needs_coalgebra();
    rep = entwining_suite(spec);
  } else if (suite == "double") {
    needs_coalgebra();
    rep = double_suite(spec);
  } else if (suite == "duality") {
    needs_coalgebra();
    rep = duality_suite(spec);
  } else if (suite == "all") {
    needs_coalgebra();
    Report all("all");
    all.merge("", bialgebra_suite(spec));
    all.merge("", hopf_suite(spec));
    all.merge("", spec.kind == SpecKind::YdModule ? yd_file_suite(spec)
                                                  : yd_suite(spec));
    all.merge("", entwining_suite(spec));
    all.merge("", double_suite(spec));
    all.merge("", duality_suite(spec));
    return all;
  } else {
    throw Error(Error::Kind::UnknownSuite, "unknown suite '" + suite + "'");
  }
  return rep;
}

SpecFile generate_example(const std::string& name,
                          const std::vector<long>& params, const Field& f) {
  auto arg = [&](std::size_t i, long dflt) {
    return i < params.size() ? params[i] : dflt;
  };
  auto positive = [&](long v) {
    if (v < 1 || v > 64) {
      throw Error(Error::Kind::BadParams,
                  "parameter out of range: " + std::to_string(v));
    }
    return static_cast<std::size_t>(v);
  };
  if (name == "group_algebra") {
    std::size_t n = positive(arg(0, 2));
    return spec_from_hopf(groupoid_algebra(cyclic_group(n), f),
                          "group_algebra_" + std::to_string(n));
  }
  if (name == "discrete_groupoid") {
    std::size_t k = positive(arg(0, 2));
    return spec_from_hopf(groupoid_algebra(discrete_groupoid(k), f),
                          "discrete_groupoid_" + std::to_string(k));
  }
  if (name == "pair_groupoid") {
    std::size_t k = positive(arg(0, 2));
    return spec_from_hopf(groupoid_algebra(pair_groupoid(k), f),
                          "pair_groupoid_" + std::to_string(k));
  }
  if (name == "groupoid") {
    // raw groupoid file: params select the family (0 discrete, 1 pair,
    // 2 cyclic) and the size
    long family = arg(0, 1);
    std::size_t k = positive(arg(1, 2));
    Groupoid g = family == 0   ? discrete_groupoid(k)
                 : family == 1 ? pair_groupoid(k)
                               : cyclic_group(k);
    const char* fam = family == 0 ? "discrete" : family == 1 ? "pair" : "cyclic";
    return spec_from_groupoid(g, f,
                              std::string("groupoid_") + fam + "_" +
                                  std::to_string(k));
  }
  if (name == "graded_yd") {
    std::size_t k = positive(arg(0, 2));
    Groupoid g = pair_groupoid(k);
    WeakHopfAlgebra h = groupoid_algebra(g, f);
    return spec_from_yd(h, yd_standard_graded(g, h),
                        "graded_yd_pair_" + std::to_string(k));
  }
  if (name == "sweedler") {
    return spec_from_hopf(sweedler_algebra(f), "sweedler");
  }
  if (name == "adjoint_yd") {
    std::size_t n = positive(arg(0, 2));
    WeakHopfAlgebra h = groupoid_algebra(cyclic_group(n), f);
    return spec_from_yd(h, yd_adjoint(h),
                        "adjoint_yd_z" + std::to_string(n));
  }
  throw Error(Error::Kind::BadParams, "unknown example '" + name + "'");
}

}  // namespace wha
