#pragma once

#include <string_view>

namespace sigalg {

/// Reasonable tensor norm used on every level V^{⊗k}.
///
/// Both are coordinate norms on the lexicographic word basis, so the cross-norm
/// identity ||a ⊗ b|| = ||a|| ||b|| and invariance under index permutations hold
/// exactly. L1Projective is the projective norm over (R^d, l1); path lengths
/// paired with it are measured in l1. L2HilbertSchmidt pairs with Euclidean length.
enum class NormKind { L1Projective, L2HilbertSchmidt };

/// "l1proj" or "l2hs".
std::string_view to_string(NormKind kind);
NormKind parse_norm_kind(std::string_view text);

}  // namespace sigalg
