#pragma once

// Error sources for the two communication models.
//
// Model A draws a rank-t error interpolation polynomial whose coefficients obey
// two public affine constraints z_0^{[n/2]} - z_0 = alpha_{theta1} and
// z_c^{[n/2]} - z_c = alpha_{theta2} (c = k-1 for Gabidulin, c = k for twisted
// codes). Model B draws Frobenius-symmetric coefficient vectors.

#include <span>
#include <string_view>
#include <vector>

#include "rankcode/linpoly.hpp"

namespace rankcode {

enum class ModelAVariant { GabidulinBeyond, TwistedBeyond };
enum class Parity { OddN, EvenN };

std::string_view to_string(ModelAVariant v);
ModelAVariant variant_from_string(std::string_view s);
std::string_view to_string(Parity p);

struct ModelAParams {
  int theta1 = 0;
  int theta2 = 0;
  ModelAVariant variant = ModelAVariant::GabidulinBeyond;

  /// Index of the second constrained coefficient.
  int constraint_index(int k) const { return variant == ModelAVariant::GabidulinBeyond ? k - 1 : k; }
};

struct ModelBParams {
  Parity parity = Parity::OddN;
};

struct ModelASetup {
  FieldPtr field;  // possibly with a rebuilt evaluation basis
  ModelAParams params;
};

struct ErrorPattern {
  LinearizedPoly poly;
  std::vector<Element> vector;
  int rank = 0;
};

ErrorPattern make_error_pattern(LinearizedPoly poly);

/// Picks the two smallest admissible theta indices, rebuilding alphas if needed.
ModelASetup model_a_setup(const FieldPtr& field, int k, ModelAVariant variant);

/// Checks theta admissibility for already-chosen parameters.
void validate_model_a(const FieldContext& f, int k, const ModelAParams& params);

ModelBParams model_b_params(const FieldContext& f);

/// True when z_0 and z_c satisfy both affine constraints.
bool model_a_constraints_hold(const FieldContext& f, const ModelAParams& params, int k,
                              std::span<const Element> z);
/// True when the coefficient vector has the Model-B symmetric shape.
bool model_b_relations_hold(const FieldContext& f, std::span<const Element> z);

ErrorPattern sample_model_a_error(const FieldPtr& field, const ModelAParams& params, int k, int t, Rng& rng);
ErrorPattern sample_model_b_error(const FieldPtr& field, const ModelBParams& params, Rng& rng);
/// Unconstrained error of rank exactly t.
ErrorPattern sample_rank_t_error(const FieldPtr& field, int t, Rng& rng);

std::vector<Element> apply_error(const FieldContext& f, std::span<const Element> c, std::span<const Element> e);

inline constexpr int kSamplerRetries = 64;

}  // namespace rankcode
