#pragma once

#include <string>
#include <vector>

#include "grassmoduli/center_weight.hpp"
#include "grassmoduli/rect_decomp.hpp"

namespace grassmoduli {

enum class Parity { symmetric, antisymmetric };

std::string to_string(Parity parity);  // "sym" / "alt"

/// One classified summand of ⊗²F(kϖ_q): which half of the square it lies in,
/// its dimension, its center weight, and whether it survives the GS filter
/// (center weight ≤ -2k + 1/p + 1/q, non-strict).
struct ComponentReport {
  RectSquareComponent component;
  Parity parity = Parity::symmetric;
  BigInt dimension;
  CenterWeight center_weight;
  bool passes_gs_filter = false;
};

/// Center action on the lowest-weight vector of F(Σ k_i ϖ_i):
/// -(1/q) Σ_{i=1}^{q} i·k_i - (1/p) Σ_{j=1}^{p-1} (p-j)·k_{q+j}.
CenterWeight center_weight_of_component(const FundamentalCoeffs& fund, int p,
                                        int q);

/// Closed form in the j-parameters:
/// -2k + ((p+q)/(pq))·Σ_{i=1}^{q-1} (q-i)·j_i + (1 + q/p)·j_0.
CenterWeight lowest_weight_closed_form(const std::vector<int>& j, int p, int q,
                                       int k);

/// Filter threshold -2k + 1/p + 1/q.
CenterWeight gs_threshold(int p, int q, int k);

/// Full classification of the rectangle-square components.
std::vector<ComponentReport> classify_components(int p, int q, int k);

/// Components that are flagged AND symmetric; expected to be exactly the
/// 2k-column, q-row rectangle.
std::vector<Partition> gs_intersection_sym(int p, int q, int k);

/// Symmetric components with center weight ≤ -2k, computed from first
/// principles (the weight of the doubled lowest-weight pair).
std::vector<Partition> gs_v0v0_intersection_sym(int p, int q, int k);

struct ModuliFlags {
  bool routes_agree = false;
  bool gs_singleton = false;
  bool skew_label_matches_paper = false;
};

/// Dimension bookkeeping for the moduli of degree-k holomorphic isometric
/// embeddings Gr_p(C^{p+q}) -> quadric. Big values are exact integers; N and
/// the image-moduli dimension may be negative at degenerate sizes.
struct ModuliReport {
  int p = 0, q = 0, k = 0;
  BigInt dim_H0;            // d = dim F(kϖ_q)
  BigInt dim_sym_square;    // d(d+1)/2
  BigInt dim_F2k;           // dim F(2kϖ_q)
  BigInt dim_Vk;            // dim_sym_square - dim_F2k
  BigInt N;                 // dim_Vk - 2
  BigInt dim_image_moduli;  // dim_Vk - 1 (metadata, generic S^1 orbit)
  std::vector<Partition> gs_sym_components;
  ModuliFlags flags;
  std::vector<std::string> notes;
};

/// Builds the report; the hook-formula route and the component-sum route are
/// compared and any disagreement is flagged, never silently corrected.
ModuliReport moduli_report(int p, int q, int k);

/// The p = q specialization: runs moduli_report(q,q,k) and additionally
/// verifies that the would-be ϖ_{2q} coefficient of every j_0 > 0 component
/// is absorbed by SU(2q) normalization and that the j_0 weight contribution
/// degenerates to 2·j_0; findings land in the notes.
ModuliReport equal_pq_report(int q, int k);

}  // namespace grassmoduli
