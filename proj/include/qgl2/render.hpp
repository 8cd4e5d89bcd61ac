#pragma once

#include <string>

#include <json.hpp>

#include "qgl2/decompose.hpp"

namespace qgl2 {

/// One decomposition query as emitted by the command-line tool.
struct OutputRecord {
    Decomposition decomposition;
    Int lhs_dim = 0;  // dim L(lambda) * dim L(mu)
    Int rhs_dim = 0;  // sum of summand dimensions
    bool verified = false;
    std::string failure;  // first discrepancy, empty unless verification failed
};

/// Builds the record; with verify == false the dimensions come from closed
/// forms and `verified` stays false.
OutputRecord make_record(Decomposition d, bool verify);

/// "T(6,0)", "T(0,0) ⊗ T̄(2,0)^F", "T(1,0) ⊗ (T̄(1,0) ⊗ T̄(0,0)^F̄ ⊗ T̄(2,0)^F̄^2)^F".
std::string render_summand_text(const TwistedTiltingSummand& s);
/// Summands joined by `separator`, canonical order.
std::string render_text(const Decomposition& d, const std::string& separator = " ⊕ ");
/// `T(6,0)\oplus T(5,1)`, twisted factors as `\overline{T}(2,0)^{F}`.
std::string render_latex(const Decomposition& d);

nlohmann::ordered_json to_json(const OutputRecord& r);

std::string csv_header();
std::string to_csv_row(const OutputRecord& r);

}  // namespace qgl2
