#pragma once

/**
 * @file suites.hpp
 * @brief The verification-suite runner and the example generators behind
 *        the command-line surface.
 *
 * Suites: bialgebra, hopf, yd, entwining, double, duality, all. Each run
 * is deterministic: identical inputs produce byte-identical reports.
 */

#include "wha/drinfeld_double.hpp"
#include "wha/duality.hpp"
#include "wha/report.hpp"
#include "wha/specfile.hpp"

namespace wha {

/// Runs one named suite against a parsed spec file. Throws UnknownSuite
/// for bad names and SchemaError when the input kind cannot support the
/// suite.
Report run_suite(const SpecFile& spec, const std::string& suite);

/// Example generators: group_algebra n, discrete_groupoid k,
/// pair_groupoid k, cyclic_groupoid_file variants, graded_yd k,
/// adjoint_yd n. Throws BadParams on anything else.
SpecFile generate_example(const std::string& name,
                          const std::vector<long>& params, const Field& f);

/// The Yetter-Drinfeld corpus attached to an algebra spec: the unit
/// object always, the standard graded module for groupoid inputs, the
/// adjoint module when it verifies (group algebras).
std::vector<std::pair<std::string, YDModule>> corpus_yd_modules(
    const SpecFile& spec, const WeakHopfAlgebra& h);

}  // namespace wha
