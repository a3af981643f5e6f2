#pragma once

#include <optional>
#include <string>

#include "hmink/check.hpp"
#include "hmink/matrix.hpp"

namespace hmink {

// The two h-deformed Lorentz group cases, distinguished by the mixed
// FRT-compatible matrix R3.
enum class Deformation { j1 = 1, j2 = 2 };

inline const char* deformation_name(Deformation d) { return d == Deformation::j1 ? "1" : "2"; }

namespace rmat {

// Named constant matrices of the framework. r2/r3/repshat/repshatinv depend
// on the deformation.
enum class Name {
    rh, rhat, r2, r3, r4,
    epsh, epshinv, dh, dhtilde,
    phplus, phminus,
    f, g,
    repshat, repshatinv,
};

std::optional<Name> name_from_string(const std::string& s);
const char* to_string(Name n);
bool needs_deformation(Name n);

ExactMatrix build(Name n, std::optional<Deformation> d = std::nullopt);

// R12 R13 R23 = R23 R13 R12 for a 4x4 R embedded in the triple tensor space.
CheckReport check_ybe(const ExactMatrix& R);
// mixed FRT compatibility: Rh_12 R3_13 R3_23 = R3_23 R3_13 Rh_12.
CheckReport check_frt_mixed(const ExactMatrix& Rh, const ExactMatrix& R3);
// spectral decomposition of Rhat: idempotents, orthogonality, ranks 3/1,
// the rank-one projector as a symplectic outer product, and the projector
// square identity for P- P-^dagger.
CheckReport check_projectors();
// twist factorization R = F P F^{-1} P for an invertible twist F.
CheckReport check_twist4(const ExactMatrix& R, const ExactMatrix& F);
// triangularity R (P R P) = I.
CheckReport check_triangular4(const ExactMatrix& R, const std::string& label);

// 8-dimensional embeddings used by the structural checks
ExactMatrix embed12(const ExactMatrix& R);
ExactMatrix embed23(const ExactMatrix& R);
ExactMatrix embed13(const ExactMatrix& R);

}  // namespace rmat

}  // namespace hmink
