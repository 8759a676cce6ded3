#pragma once

/**
 * @file specfile.hpp
 * @brief The structured-text format for algebras, modules and groupoids.
 *
 * A spec file is a sequence of `key: value` entries; values are scalars,
 * words, or (arbitrarily nested, whitespace-insensitive) bracketed arrays
 * of exact fractions written as `num` or `num/den`. `#` starts a comment.
 * Keys by kind:
 *
 *   kind: algebra | weak_bialgebra | weak_hopf | module | comodule |
 *         yd_module | groupoid
 *   field: rational | prime p         name: <free text>   (optional)
 *   dim: n       mult: [i][j][k]      unit: [k]
 *   comult: [j][a][b]                 counit: [j]
 *   antipode: [i][j]                  (optional for weak_hopf: solved)
 *   module_dim: m    module_side: left|right    action: [h][r][c]
 *   variant: ll|lr|rl|rr              coaction: [j] x (matrix)
 *   coaction_side: left|right         (comodule kind)
 *   objects/morphisms: counts, source/target/inverse/identity: [..],
 *   compose: [g][h] with -1 for undefined
 *
 * Exports are canonical: fixed key order and spacing, fractions in lowest
 * terms, so identical data always produces identical bytes.
 */

#include <optional>
#include <string>

#include "wha/groupoid.hpp"
#include "wha/yetterdrinfeld.hpp"

namespace wha {

enum class SpecKind {
  Algebra,
  WeakBialgebra,
  WeakHopf,
  Module,
  Comodule,
  YdModule,
  GroupoidKind,
};

const char* kind_name(SpecKind k);

struct SpecFile {
  SpecKind kind = SpecKind::Algebra;
  Field field;
  std::string name;

  std::size_t dim = 0;
  std::optional<AlgebraData> algebra;
  std::optional<CoalgebraData> coalgebra;
  std::optional<LinearMap> antipode;

  std::size_t module_dim = 0;
  std::optional<ModuleData> module;
  std::optional<LinearMap> coaction;
  std::optional<YDVariant> variant;
  std::optional<Side> coaction_side;

  std::optional<Groupoid> groupoid;
};

/// Parses a spec file; SyntaxError carries line/column, SchemaError names
/// the offending key, FieldError covers bad primes and zero denominators.
/// An override field reinterprets every structure constant in that field.
SpecFile parse_spec(std::string_view text, const std::string& filename,
                    const std::optional<Field>& override_field = std::nullopt);
SpecFile parse_spec_path(const std::string& path,
                         const std::optional<Field>& override_field = std::nullopt);

std::string emit_spec(const SpecFile& s);

SpecFile spec_from_hopf(const WeakHopfAlgebra& h, const std::string& name);
SpecFile spec_from_groupoid(const Groupoid& g, const Field& f,
                            const std::string& name);
SpecFile spec_from_yd(const WeakHopfAlgebra& h, const YDModule& m,
                      const std::string& name);

/// Builds the weak Hopf algebra recorded in a spec file (kinds weak_hopf,
/// yd_module, module, comodule and groupoid). A missing antipode is solved
/// for; an unsolvable one raises SchemaError with the solver's diagnosis.
WeakHopfAlgebra hopf_from_spec(const SpecFile& s);

}  // namespace wha
