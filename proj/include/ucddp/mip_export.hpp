#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ucddp/instance.hpp"
#include "ucddp/partition.hpp"

namespace ucddp {

enum class FormulationVariant { f2, fi, fs, fis };

FormulationVariant variant_from_string(const std::string& label);
std::string variant_to_string(FormulationVariant variant);

enum class IneqTag {
    fortet1,
    fortet2,
    fortet3,
    fortet4,
    insert_early,
    insert_tardy,
    swap,
    objective_aux
};

enum class Sense { ge, le, eq };

/// One linear inequality over the model variables. Coefficients and the
/// right-hand side are stored doubled so that half-integral swap
/// coefficients stay exact; they are kept in emission order and never
/// contain zeros.
struct LinearInequality {
    std::string name;
    IneqTag tag = IneqTag::objective_aux;
    int u = -1; // tasks the inequality is about, -1 when not applicable
    int v = -1;
    std::vector<std::pair<int, std::int64_t>> coeffs; // (variable index, 2*coefficient)
    Sense sense = Sense::ge;
    std::int64_t rhs_times2 = 0;

    bool operator==(const LinearInequality&) const = default;
};

/// A formulation over n binary variables d_1..d_n and the continuous pair
/// variables x_i_j in [0,1] for i < j. Variable index j-1 is d_j; index
/// n + pair_index(i,j) is x_i_j. The objective is the expansion of the
/// partition penalty, with coefficients stored doubled.
struct MipModel {
    int n = 0;
    FormulationVariant variant = FormulationVariant::f2;
    std::vector<std::string> var_names;
    std::vector<std::pair<int, std::int64_t>> objective; // (variable index, 2*coefficient)
    std::int64_t objective_constant_times2 = 0;
    std::vector<LinearInequality> inequalities;

    int var_count() const { return static_cast<int>(var_names.size()); }

    bool operator==(const MipModel&) const = default;
};

MipModel build_model(const Instance& inst, FormulationVariant variant);

/// Deterministic LP-format text: Minimize / Subject To / Bounds /
/// Binaries / End, with half-integral values printed as exact ".5"
/// decimals. Emitting the same model twice yields identical bytes.
std::string emit_lp(const MipModel& model);

/// Minimal reader for the emitter's own output, used for round-trip
/// checks. Not a general LP parser.
MipModel parse_lp(const std::string& text);

/// Value of a binary point (delta, x) for a model variable.
std::int64_t point_value(const MipModel& model, const Encoding& point, int var);

/// Exact objective value at a binary point.
std::int64_t objective_value(const MipModel& model, const Encoding& point);

bool inequality_satisfied(const LinearInequality& ineq, const MipModel& model,
                          const Encoding& point);

/// True when the binary point satisfies every inequality of the model.
bool point_feasible(const MipModel& model, const Encoding& point);

} // namespace ucddp
